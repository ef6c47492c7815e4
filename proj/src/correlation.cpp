#include "scd/correlation.hpp"

#include <algorithm>

#ifdef SCD_HAVE_OPENMP
#include <omp.h>
#endif

namespace scd {

std::vector<std::pair<std::string, std::string>> candidate_pairs(
    const StateSets& sets, const WindowStore& store, const AkgGraph& akg) {
    std::set<std::pair<std::string, std::string>> out;

    // New correlations arise only within set1; screen those with the sketch.
    for (auto it = sets.set1.begin(); it != sets.set1.end(); ++it) {
        const KeywordStats* a = store.find(*it);
        if (!a) continue;
        for (auto jt = std::next(it); jt != sets.set1.end(); ++jt) {
            const KeywordStats* b = store.find(*jt);
            if (!b) continue;
            if (minhash_screen(a->window_sketch, b->window_sketch)) {
                out.insert(make_edge(*it, *jt));
            }
        }
    }

    // Existing edges of touched AKG keywords are refreshed unscreened.
    for (const auto& k : sets.set2) {
        if (!akg.has_node(k)) continue;
        for (const auto& [n, _] : akg.neighbors(k)) out.insert(make_edge(k, n));
    }

    return {out.begin(), out.end()};
}

std::vector<double> compute_ecs_serial(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const WindowStore& store) {
    std::vector<double> ecs(pairs.size());
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        ecs[i] = store.jaccard(pairs[i].first, pairs[i].second);
    }
    return ecs;
}

std::vector<double> compute_ecs_parallel(
    const std::vector<std::pair<std::string, std::string>>& pairs,
    const WindowStore& store) {
#ifdef SCD_HAVE_OPENMP
    std::vector<double> ecs(pairs.size());
#pragma omp parallel for schedule(dynamic, 64)
    for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(pairs.size()); ++i) {
        ecs[i] = store.jaccard(pairs[i].first, pairs[i].second);
    }
    return ecs;
#else
    return compute_ecs_serial(pairs, store);
#endif
}

EdgeDelta refresh_edges(const std::vector<std::pair<std::string, std::string>>& pairs,
                        const WindowStore& store, double lambda, const AkgGraph& akg,
                        bool parallel) {
    const std::vector<double> ecs =
        parallel ? compute_ecs_parallel(pairs, store) : compute_ecs_serial(pairs, store);

    EdgeDelta delta;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& [a, b] = pairs[i];
        const bool present = akg.has_edge(a, b);
        if (ecs[i] >= lambda) {
            if (present) {
                delta.updates.emplace_back(a, b, ecs[i]);
            } else {
                delta.additions.emplace_back(a, b, ecs[i]);
            }
        } else if (present) {
            delta.removals.emplace_back(a, b);
        }
    }
    return delta;
}

}  // namespace scd
