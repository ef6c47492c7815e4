#pragma once

#include <cstdint>
#include <functional>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include "scd/clusters.hpp"
#include "scd/config.hpp"
#include "scd/correlation.hpp"
#include "scd/graph.hpp"
#include "scd/ingest.hpp"
#include "scd/ranking.hpp"
#include "scd/window.hpp"

namespace scd {

enum class DetectorMode { Scp, Bc };

struct RunMetrics {
    std::uint64_t messages = 0;
    std::uint64_t skipped_lines = 0;
    std::uint64_t quanta = 0;
    double processing_seconds = 0.0;
    double clustering_seconds = 0.0;
    double messages_per_sec = 0.0;

    struct Series {
        std::uint64_t min = 0, max = 0;
        double mean = 0.0;
        std::uint64_t count = 0;
        double sum = 0.0;
        void add(std::uint64_t v) {
            if (count == 0 || v < min) min = v;
            if (count == 0 || v > max) max = v;
            sum += static_cast<double>(v);
            ++count;
            mean = sum / static_cast<double>(count);
        }
    };
    Series akg_nodes, akg_edges, clusters_live, window_keywords;
    std::map<std::string, std::uint64_t> events_by_status;
    std::uint64_t suspect_events = 0;

    void write_json(std::ostream& os) const;
};

// The per-quantum pipeline: window update -> state classification ->
// candidate pairs -> edge refresh -> AKG and cluster maintenance -> stale
// expiry -> ranking and emission. Single-threaded writer.
class Engine {
public:
    Engine(const EngineConfig& cfg, DetectorMode mode, std::ostream& events_out);

    void process_batch(const QuantumBatch& batch);

    // Post-hoc spuriousness pass over accumulated history; fills metrics.
    void finalize();

    // Optional keyword filter: emission is suppressed when it returns false.
    void set_keyword_filter(std::function<bool(const std::vector<std::string>&)> f) {
        keyword_filter_ = std::move(f);
    }
    void set_parallel_ec(bool on) { parallel_ec_ = on; }

    const AkgGraph& graph() const { return akg_; }
    const ClusterEngine& cluster_engine() const { return clusters_; }
    const WindowStore& window() const { return store_; }
    const EventHistory& history() const { return history_; }
    RunMetrics& metrics() { return metrics_; }
    const EngineConfig& config() const { return cfg_; }

private:
    void apply_mutations(const StateSets& sets, const EdgeDelta& edel,
                         std::uint64_t q, ClusterDelta& cdelta);
    void run_bc_detector(std::uint64_t q);
    void emit_scp_events(const ClusterDelta& cdelta, std::uint64_t q);
    void emit_record(const EventRecord& rec);
    EventRecord snapshot_cluster(const Cluster& c, std::uint64_t q,
                                 const std::string& status) const;

    EngineConfig cfg_;
    DetectorMode mode_;
    std::ostream* out_;
    WindowStore store_;
    AkgGraph akg_;
    ClusterEngine clusters_;
    EventHistory history_;
    std::set<ClusterId> reported_;
    std::function<bool(const std::vector<std::string>&)> keyword_filter_;
    bool parallel_ec_ = false;
    RunMetrics metrics_;

    // bc mode: stable ids per node set, plus per-id sample history.
    std::map<std::vector<std::string>, ClusterId> bc_ids_;
    ClusterId bc_next_id_ = 1;
};

// Replays a JSON-lines trace through the pipeline. Events go to events_out.
RunMetrics run_replay(const EngineConfig& cfg, DetectorMode mode, const Stopwords& stop,
                      std::istream& in, std::ostream& events_out,
                      bool parallel_ec = false);

}  // namespace scd
