#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "scd/graph.hpp"

namespace scd {

using ClusterId = std::uint64_t;

// A cluster: a class of AKG edges closed under co-membership in cycles of
// length <= 4. Nodes are the endpoints of the class's edges; every edge lies
// on a short cycle whose edges are all inside the cluster.
struct Cluster {
    ClusterId id = 0;
    std::uint64_t created_quantum = 0;
    std::set<Edge> edges;
    std::map<std::string, std::size_t> node_degree;  // cluster-internal degree

    std::size_t node_count() const { return node_degree.size(); }
    std::vector<std::string> node_list() const;
    bool contains_node(const std::string& k) const { return node_degree.count(k) > 0; }
};

// What one mutation did to the clustering.
struct ClusterDelta {
    std::set<ClusterId> created;
    std::set<ClusterId> updated;                       // live, edges changed
    std::set<ClusterId> dissolved;                     // gone, incl. absorbed
    std::map<ClusterId, std::vector<ClusterId>> merged;  // survivor -> absorbed
    std::map<ClusterId, std::vector<ClusterId>> splits;  // old -> fragments

    bool empty() const {
        return created.empty() && updated.empty() && dissolved.empty() &&
               merged.empty() && splits.empty();
    }
    void absorb(const ClusterDelta& other);
};

// Node/edge sets only, for order-insensitive comparisons against the oracle.
struct CanonicalCluster {
    std::vector<std::string> nodes;  // sorted
    std::vector<Edge> edges;         // sorted
    auto operator<=>(const CanonicalCluster&) const = default;
};

// Incremental cluster maintenance over an AkgGraph. All operations are local:
// they look only at the mutated element's neighborhood and the affected
// clusters. The graph must outlive the engine; call the hooks in lockstep
// with graph mutations (additions after the graph change, deletions before).
class ClusterEngine {
public:
    explicit ClusterEngine(const AkgGraph& g) : g_(&g) {}

    // n was just added to the graph together with all its incident edges.
    ClusterDelta node_addition(const std::string& n, std::uint64_t quantum);

    // Edge (a,b) was just added to the graph.
    ClusterDelta edge_addition(const std::string& a, const std::string& b,
                               std::uint64_t quantum);

    // n and its incident edges are about to leave the graph.
    ClusterDelta node_deletion(const std::string& n, std::uint64_t quantum);

    // Edge (a,b) is about to leave the graph.
    ClusterDelta edge_deletion(const std::string& a, const std::string& b,
                               std::uint64_t quantum);

    // The clusters must share at least one edge.
    ClusterId merge_clusters(ClusterId a, ClusterId b);

    // True iff e's endpoints are joined by another path of length <= 3 using
    // only the cluster's own edges.
    bool short_cycle_exists(const Edge& e, const Cluster& c) const;

    const Cluster* find(ClusterId id) const;
    const std::map<ClusterId, Cluster>& clusters() const { return by_id_; }
    ClusterId cluster_of_edge(const Edge& e) const;  // 0 if none
    const std::set<ClusterId>& clusters_of_node(const std::string& k) const;
    bool node_in_any_cluster(const std::string& k) const;

    std::vector<CanonicalCluster> canonical() const;

    // Nodes examined by the most recent operation (for locality checks).
    void set_instrumentation(bool on) { instrument_ = on; }
    const std::set<std::string>& last_touched_nodes() const { return touched_; }

private:
    struct LocalCycle {
        std::vector<Edge> edges;  // 3 or 4 edges of one short cycle
    };

    void apply_cycle(const LocalCycle& cycle, std::uint64_t quantum, ClusterDelta& delta);
    void recluster_after_removal(ClusterId cid, std::set<Edge> remaining,
                                 std::uint64_t quantum, ClusterDelta& delta);
    ClusterId absorb_into(ClusterId survivor, ClusterId victim);
    void add_edge_to_cluster(Cluster& c, const Edge& e);
    void drop_cluster(ClusterId id);
    void touch_cluster_nodes(ClusterId id);
    void touch(const std::string& n) {
        if (instrument_) touched_.insert(n);
    }

    const AkgGraph* g_;
    std::map<ClusterId, Cluster> by_id_;
    std::map<Edge, ClusterId> by_edge_;
    std::map<std::string, std::set<ClusterId>> by_node_;
    ClusterId next_id_ = 1;
    bool instrument_ = false;
    std::set<std::string> touched_;
};

}  // namespace scd
