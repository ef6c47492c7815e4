#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "scd/graph.hpp"
#include "scd/ranking.hpp"

using scd::AkgGraph;
using scd::Cluster;
using scd::make_edge;

namespace {

struct RankFixture {
    AkgGraph g;
    Cluster c;
    std::map<std::string, std::size_t> weights;

    void build(const std::vector<std::tuple<std::string, std::string, double>>& edges,
               const std::map<std::string, std::size_t>& w) {
        weights = w;
        for (const auto& [k, wt] : w) g.add_node(k);
        for (const auto& [a, b, ec] : edges) {
            g.add_edge(a, b, ec);
            auto e = make_edge(a, b);
            c.edges.insert(e);
            c.node_degree[e.first]++;
            c.node_degree[e.second]++;
        }
    }
    double rank() const {
        return scd::rank_cluster(
            c, [&](const std::string& k) { return weights.at(k); }, g);
    }
};

}  // namespace

TEST_CASE("triangle rank, uniform weights and correlations") {
    RankFixture f;
    f.build({{"a", "b", 0.2}, {"b", "c", 0.2}, {"a", "c", 0.2}},
            {{"a", 4}, {"b", 4}, {"c", 4}});
    CHECK(f.rank() == doctest::Approx(5.6).epsilon(1e-12));
}

TEST_CASE("4-cycle rank") {
    RankFixture f;
    f.build({{"a", "b", 0.25}, {"b", "c", 0.25}, {"c", "d", 0.25}, {"a", "d", 0.25}},
            {{"a", 4}, {"b", 4}, {"c", 4}, {"d", 4}});
    CHECK(f.rank() == doctest::Approx(6.0).epsilon(1e-12));
}

TEST_CASE("report threshold equals the minimal cycle's rank") {
    CHECK(scd::report_threshold(4, 0.2, 1.0) == doctest::Approx(5.6).epsilon(1e-12));
    CHECK(scd::report_threshold(4, 0.2, 0.5) == doctest::Approx(2.8).epsilon(1e-12));
}

TEST_CASE("rank is monotone in node weights and edge correlations") {
    RankFixture base;
    base.build({{"a", "b", 0.3}, {"b", "c", 0.4}, {"a", "c", 0.5}},
               {{"a", 4}, {"b", 5}, {"c", 6}});
    const double r0 = base.rank();

    for (auto k : {"a", "b", "c"}) {
        RankFixture f;
        f.build({{"a", "b", 0.3}, {"b", "c", 0.4}, {"a", "c", 0.5}},
                {{"a", 4}, {"b", 5}, {"c", 6}});
        f.weights[k] += 1;
        CHECK(f.rank() > r0);
    }
    for (auto [a, b] : {std::pair{"a", "b"}, {"b", "c"}, {"a", "c"}}) {
        RankFixture f;
        f.build({{"a", "b", 0.3}, {"b", "c", 0.4}, {"a", "c", 0.5}},
                {{"a", 4}, {"b", 5}, {"c", 6}});
        f.g.set_ec(a, b, f.g.edge_ec(a, b) + 0.1);
        CHECK(f.rank() > r0);
    }
}

TEST_CASE("rank is invariant under node relabeling") {
    RankFixture f1, f2;
    f1.build({{"a", "b", 0.3}, {"b", "c", 0.4}, {"a", "c", 0.5}},
             {{"a", 4}, {"b", 5}, {"c", 6}});
    // same structure, permuted labels: a->z, b->x, c->y
    f2.build({{"z", "x", 0.3}, {"x", "y", 0.4}, {"z", "y", 0.5}},
             {{"z", 4}, {"x", 5}, {"y", 6}});
    CHECK(f1.rank() == doctest::Approx(f2.rank()).epsilon(1e-12));
}

TEST_CASE("uniform complete cluster matches the closed form") {
    for (std::size_t n : {3u, 4u, 5u}) {
        RankFixture f;
        std::map<std::string, std::size_t> w;
        std::vector<std::tuple<std::string, std::string, double>> edges;
        const double ec = 0.3;
        const std::size_t wt = 7;
        for (std::size_t i = 0; i < n; ++i) w["k" + std::to_string(i)] = wt;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = i + 1; j < n; ++j) {
                edges.push_back({"k" + std::to_string(i), "k" + std::to_string(j), ec});
            }
        }
        f.build(edges, w);
        const double expected = wt * (1.0 + (n - 1) * ec);
        CHECK(f.rank() == doctest::Approx(expected).epsilon(1e-9));
    }
}

TEST_CASE("spuriousness analysis") {
    CHECK(scd::spuriousness_analysis({{0, 9, 4}, {1, 7, 4}}) ==
          scd::Spuriousness::Deferred);
    CHECK(scd::spuriousness_analysis({{0, 9, 4}, {1, 7, 4}, {2, 5, 4}}) ==
          scd::Spuriousness::Suspect);
    // growing keyword set -> evolving even if rank decays
    CHECK(scd::spuriousness_analysis({{0, 9, 4}, {1, 7, 5}, {2, 5, 5}}) ==
          scd::Spuriousness::Evolving);
    // rank rebound -> evolving
    CHECK(scd::spuriousness_analysis({{0, 9, 4}, {1, 7, 4}, {2, 8, 4}}) ==
          scd::Spuriousness::Evolving);
}

TEST_CASE("event history records per-cluster trajectories") {
    scd::EventHistory h;
    h.record(1, 0, 5.0, 3);
    h.record(1, 1, 6.0, 3);
    h.record(2, 1, 7.0, 4);
    REQUIRE(h.by_id.at(1).size() == 2);
    CHECK(h.by_id.at(1)[1].rank == doctest::Approx(6.0));
    CHECK(h.by_id.at(2).size() == 1);
}
