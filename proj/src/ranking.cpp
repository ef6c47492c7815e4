#include "scd/ranking.hpp"

namespace scd {

double rank_cluster(const Cluster& c,
                    const std::function<std::size_t(const std::string&)>& weight,
                    const AkgGraph& g) {
    const std::size_t n = c.node_count();
    if (n == 0) return 0.0;
    double sum = 0.0;
    for (const auto& [node, _] : c.node_degree) {
        sum += static_cast<double>(weight(node));
    }
    for (const auto& [a, b] : c.edges) {
        const double ec = g.edge_ec(a, b);
        sum += ec * static_cast<double>(weight(a) + weight(b));
    }
    return sum / static_cast<double>(n);
}

double report_threshold(std::size_t gamma, double lambda, double tau) {
    return tau * static_cast<double>(gamma) * (1.0 + 2.0 * lambda);
}

void EventHistory::record(ClusterId id, std::uint64_t q, double rank,
                          std::size_t kw_count) {
    by_id[id].push_back({q, rank, kw_count});
}

Spuriousness spuriousness_analysis(const std::vector<EventHistory::Sample>& samples) {
    if (samples.size() < 3) return Spuriousness::Deferred;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (samples[i].keyword_count != samples[0].keyword_count) {
            return Spuriousness::Evolving;
        }
        if (!(samples[i].rank < samples[i - 1].rank)) return Spuriousness::Evolving;
    }
    return Spuriousness::Suspect;
}

}  // namespace scd
