#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "scd/graph.hpp"
#include "scd/window.hpp"

namespace scd {

// Per-quantum edge changes for the AKG.
struct EdgeDelta {
    std::vector<std::tuple<std::string, std::string, double>> additions;
    std::vector<std::tuple<std::string, std::string, double>> updates;
    std::vector<std::pair<std::string, std::string>> removals;
};

// Candidate pairs for EC computation this quantum:
//   (a) unordered pairs within set1 whose sketches share an entry,
//   (b) for every keyword in set2, its current AKG neighbors.
// Sorted, deduplicated, each pair normalized first < second.
std::vector<std::pair<std::string, std::string>> candidate_pairs(
    const StateSets& sets, const WindowStore& store, const AkgGraph& akg);

// Exact Jaccard for each pair, in order. Serial reference.
std::vector<double> compute_ecs_serial(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const WindowStore& store);

// Same result, OpenMP-parallel over pairs. Falls back to serial without OpenMP.
std::vector<double> compute_ecs_parallel(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const WindowStore& store);

// Classifies each pair against the threshold and the current AKG:
// EC >= lambda and edge absent -> addition; present -> update;
// EC < lambda and edge present -> removal; otherwise no-op.
EdgeDelta refresh_edges(const std::vector<std::pair<std::string, std::string>>& pairs,
                        const WindowStore& store, double lambda, const AkgGraph& akg,
                        bool parallel = false);

}  // namespace scd
