#pragma once

#include <istream>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "scd/clusters.hpp"

namespace scd {
// Brute-force reference implementations used by the test harnesses. Global
// algorithms are allowed here (and only here); performance does not matter.
namespace oracle {

// Simple undirected graph on 0..n-1 used as a test fixture.
struct StaticGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // i < j, no duplicates

    // Text format: first line "N M", then M lines "i j".
    static std::optional<StaticGraph> parse(std::istream& in);
};

// Every simple 3- and 4-cycle, each once, as sorted vertex lists of the
// canonical rotation (smallest vertex first).
std::vector<std::vector<int>> enumerate_short_cycles(const StaticGraph& g);

struct IntCluster {
    std::vector<int> nodes;                   // sorted
    std::vector<std::pair<int, int>> edges;   // sorted
    auto operator<=>(const IntCluster&) const = default;
};

// Ground-truth clustering: union-find over edges where every short cycle's
// edges are unified; classes of size >= 3 are the clusters.
std::vector<IntCluster> clusters(const StaticGraph& g);

// Same semantics over string-keyed edge lists, for comparing with the
// incremental engine.
std::vector<CanonicalCluster> clusters_of_edges(const std::vector<Edge>& edges);
std::vector<CanonicalCluster> clusters_of_graph(const AkgGraph& g);

// Standard articulation-point test; false for disconnected input.
bool is_biconnected(const std::vector<int>& nodes,
                    const std::vector<std::pair<int, int>>& edges);
bool is_biconnected(const CanonicalCluster& c);

// Majority-quasi-clique degree test. strict=false: deg >= ceil((N-1)/2);
// strict=true: deg >= floor((N-1)/2)+1.
bool is_mqc(const std::vector<int>& nodes,
            const std::vector<std::pair<int, int>>& edges, bool strict);

// Offline baseline: biconnected components of size >= 3 plus every residual
// edge as a size-2 cluster.
std::vector<IntCluster> bc_components(const StaticGraph& g);
std::vector<CanonicalCluster> bc_components_of_graph(const AkgGraph& g);

// True iff every edge of the cluster lies on a cycle of length <= 4 whose
// edges are all inside the cluster.
bool scp_holds(const CanonicalCluster& c);

}  // namespace oracle
}  // namespace scd
