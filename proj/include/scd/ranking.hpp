#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "scd/clusters.hpp"
#include "scd/graph.hpp"

namespace scd {

// One reported cluster snapshot.
struct EventRecord {
    ClusterId cluster_id = 0;
    std::uint64_t quantum = 0;
    std::string status;  // new | updated | merged | split | dissolved
    double rank = 0.0;
    std::vector<std::string> keywords;                       // sorted
    std::vector<std::tuple<std::string, std::string, double>> edges;  // sorted
    std::size_t support = 0;
};

// rank = (1/n) * (sum_i w_i + sum_{(i,j) in E} EC_ij * (w_i + w_j)),
// the entry sum of the row vector W*C with C_ii = 1 and C_ij = EC or 0.
double rank_cluster(const Cluster& c,
                    const std::function<std::size_t(const std::string&)>& weight,
                    const AkgGraph& g);

// Rank of the weakest legal cluster (a cycle with every weight gamma and
// every EC lambda), scaled by tau: tau * gamma * (1 + 2*lambda).
double report_threshold(std::size_t gamma, double lambda, double tau);

// Per-cluster rank trajectory for post-hoc spuriousness analysis.
struct EventHistory {
    struct Sample {
        std::uint64_t quantum;
        double rank;
        std::size_t keyword_count;
    };
    std::map<ClusterId, std::vector<Sample>> by_id;

    void record(ClusterId id, std::uint64_t q, double rank, std::size_t kw_count);
};

enum class Spuriousness { Deferred, Evolving, Suspect };

// Suspect iff the keyword-set size never changed and the rank strictly
// decreased at every sample after the first. Needs >= 3 samples.
Spuriousness spuriousness_analysis(const std::vector<EventHistory::Sample>& samples);

}  // namespace scd
