#include <algorithm>
#include <vector>

#include "doctest.h"
#include "fuzz_common.hpp"
#include "scd/clusters.hpp"
#include "scd/graph.hpp"
#include "scd/oracle.hpp"

using scd::AkgGraph;
using scd::CanonicalCluster;
using scd::ClusterEngine;
using scd::make_edge;
using scd::test::to_canonical;

namespace {

struct Fixture {
    AkgGraph g;
    ClusterEngine eng{g};

    void node(const std::string& n) { g.add_node(n); }
    // adds the node plus its edges, then fires the hook
    scd::ClusterDelta add_node_with(const std::string& n,
                                    const std::vector<std::string>& nbrs,
                                    std::uint64_t q = 0) {
        g.add_node(n);
        for (const auto& t : nbrs) g.add_edge(n, t, 0.5);
        return eng.node_addition(n, q);
    }
    scd::ClusterDelta add_edge(const std::string& a, const std::string& b,
                               std::uint64_t q = 0) {
        g.add_edge(a, b, 0.5);
        return eng.edge_addition(a, b, q);
    }
    scd::ClusterDelta del_edge(const std::string& a, const std::string& b,
                               std::uint64_t q = 0) {
        auto d = eng.edge_deletion(a, b, q);
        g.remove_edge(a, b);
        return d;
    }
    scd::ClusterDelta del_node(const std::string& n, std::uint64_t q = 0) {
        auto d = eng.node_deletion(n, q);
        g.remove_node(n);
        return d;
    }

    std::vector<std::vector<std::string>> node_sets() const {
        std::vector<std::vector<std::string>> out;
        for (const auto& c : eng.canonical()) out.push_back(c.nodes);
        std::sort(out.begin(), out.end());
        return out;
    }
    bool matches_oracle() const {
        return eng.canonical() == scd::oracle::clusters_of_graph(g);
    }
};

}  // namespace

TEST_CASE("triangle seed: new node closing an existing edge") {
    Fixture f;
    f.node("n1");
    f.node("n2");
    f.add_edge("n1", "n2");
    auto d = f.add_node_with("n", {"n1", "n2"});
    CHECK(d.created.size() == 1);
    CHECK(f.node_sets() == std::vector<std::vector<std::string>>{{"n", "n1", "n2"}});
    CHECK(f.matches_oracle());
}

TEST_CASE("4-cycle seed: new node sharing a common neighbor pair") {
    Fixture f;
    f.node("n1");
    f.node("n2");
    f.node("nc");
    f.add_edge("n1", "nc");
    f.add_edge("n2", "nc");
    auto d = f.add_node_with("n", {"n1", "n2"});
    CHECK(d.created.size() == 1);
    CHECK(f.node_sets() == std::vector<std::vector<std::string>>{{"n", "n1", "n2", "nc"}});
    CHECK(f.matches_oracle());
}

TEST_CASE("node addition seed merges two existing clusters") {
    // 1 in C1 = {1,4,x}, 2 in C2 = {2,4,y}; node 4 is a shared common
    // neighbor; adding n adjacent to 1 and 2 seeds {1,2,4,n} and pulls both
    // clusters into one.
    Fixture f;
    for (auto k : {"1", "2", "4", "x", "y"}) f.node(k);
    f.add_edge("1", "4");
    f.add_edge("1", "x");
    f.add_edge("4", "x");  // C1
    f.add_edge("2", "4");
    f.add_edge("2", "y");
    f.add_edge("4", "y");  // C2
    CHECK(f.node_sets() ==
          std::vector<std::vector<std::string>>{{"1", "4", "x"}, {"2", "4", "y"}});
    auto d = f.add_node_with("n", {"1", "2"});
    CHECK(f.node_sets() ==
          std::vector<std::vector<std::string>>{{"1", "2", "4", "n", "x", "y"}});
    CHECK(d.merged.size() == 1);
    CHECK(f.matches_oracle());
}

TEST_CASE("edge addition merges chained seeds into one cluster") {
    Fixture f;
    for (auto k : {"1", "2", "3", "4", "5"}) f.node(k);
    f.add_edge("1", "3");
    f.add_edge("3", "4");
    f.add_edge("1", "4");
    f.add_edge("2", "4");
    f.add_edge("2", "5");
    f.add_edge("4", "5");
    auto d = f.add_edge("1", "2");
    CHECK(f.node_sets() == std::vector<std::vector<std::string>>{{"1", "2", "3", "4", "5"}});
    CHECK(f.matches_oracle());
    CHECK(d.empty() == false);
}

TEST_CASE("node deletion splits a cluster at the articulation pattern") {
    Fixture f;
    for (auto k : {"3", "9", "a", "b", "c", "d"}) f.node(k);
    for (auto [x, y] : std::vector<std::pair<std::string, std::string>>{
             {"3", "a"}, {"3", "b"}, {"a", "b"}, {"3", "c"}, {"3", "d"},
             {"c", "d"}, {"9", "a"}, {"9", "3"}, {"9", "c"}}) {
        f.add_edge(x, y);
    }
    CHECK(f.node_sets() ==
          std::vector<std::vector<std::string>>{{"3", "9", "a", "b", "c", "d"}});
    auto d = f.del_node("9");
    CHECK(f.node_sets() ==
          std::vector<std::vector<std::string>>{{"3", "a", "b"}, {"3", "c", "d"}});
    CHECK(d.splits.size() == 1);
    CHECK(f.matches_oracle());
}

TEST_CASE("edge deletion shrinks the cluster to the surviving edge class") {
    Fixture f;
    for (auto k : {"1", "3", "4", "n"}) f.node(k);
    f.add_edge("n", "3");
    f.add_edge("n", "4");
    f.add_edge("3", "4");
    f.add_edge("n", "1");
    f.add_edge("1", "4");
    CHECK(f.node_sets() == std::vector<std::vector<std::string>>{{"1", "3", "4", "n"}});
    auto d = f.del_edge("n", "1");
    CHECK(f.node_sets() == std::vector<std::vector<std::string>>{{"3", "4", "n"}});
    CHECK(d.updated.size() == 1);
    CHECK(d.splits.empty());  // single surviving fragment keeps its identity
    CHECK(f.matches_oracle());
}

TEST_CASE("single surviving fragment keeps the cluster id") {
    Fixture f;
    for (auto k : {"1", "3", "4", "n"}) f.node(k);
    f.add_edge("n", "3");
    f.add_edge("n", "4");
    f.add_edge("3", "4");
    f.add_edge("n", "1");
    f.add_edge("1", "4");
    auto before = f.eng.clusters().begin()->first;
    f.del_edge("n", "1");
    REQUIRE(f.eng.clusters().size() == 1);
    CHECK(f.eng.clusters().begin()->first == before);
}

TEST_CASE("multi-fragment split dissolves the old id and orders fresh ids") {
    Fixture f;
    for (auto k : {"3", "9", "a", "b", "c", "d"}) f.node(k);
    for (auto [x, y] : std::vector<std::pair<std::string, std::string>>{
             {"3", "a"}, {"3", "b"}, {"a", "b"}, {"3", "c"}, {"3", "d"},
             {"c", "d"}, {"9", "a"}, {"9", "3"}, {"9", "c"}}) {
        f.add_edge(x, y);
    }
    auto old_id = f.eng.clusters().begin()->first;
    auto d = f.del_node("9");
    CHECK(d.dissolved.count(old_id) == 1);
    REQUIRE(d.splits.count(old_id) == 1);
    const auto& frags = d.splits.at(old_id);
    REQUIRE(frags.size() == 2);
    CHECK(frags[0] < frags[1]);
    // fragment ids are assigned in order of smallest member keyword:
    // {3,a,b} before {3,c,d}
    CHECK(f.eng.find(frags[0])->contains_node("a"));
    CHECK(f.eng.find(frags[1])->contains_node("c"));
}

TEST_CASE("merge order does not matter: chain of overlapping seeds") {
    // wheel-ish graph where three seeds pairwise share edges
    std::vector<std::pair<std::string, std::string>> edges = {
        {"h", "p1"}, {"h", "p2"}, {"h", "p3"}, {"h", "p4"},
        {"p1", "p2"}, {"p2", "p3"}, {"p3", "p4"}};
    std::sort(edges.begin(), edges.end());
    std::vector<std::vector<std::string>> seen;
    int perm = 0;
    do {
        Fixture f;
        for (auto k : {"h", "p1", "p2", "p3", "p4"}) f.node(k);
        for (const auto& [a, b] : edges) f.add_edge(a, b);
        CHECK(f.matches_oracle());
        auto sets = f.node_sets();
        REQUIRE(sets.size() == 1);
        seen.push_back(sets[0]);
    } while (std::next_permutation(edges.begin(), edges.end()) && ++perm < 24);
    for (const auto& s : seen) CHECK(s == seen.front());
}

TEST_CASE("short_cycle_exists inside a cluster") {
    Fixture f;
    for (auto k : {"5.9", "earthquake", "turkey"}) f.node(k);
    f.add_edge("5.9", "turkey");
    f.add_edge("turkey", "earthquake");
    f.add_edge("5.9", "earthquake");
    REQUIRE(f.eng.clusters().size() == 1);
    const auto& c = f.eng.clusters().begin()->second;
    for (const auto& e : c.edges) CHECK(f.eng.short_cycle_exists(e, c));
}

TEST_CASE("two triangles joined by one edge stay separate clusters") {
    Fixture f;
    for (auto k : {"a", "b", "c", "d", "e", "f"}) f.node(k);
    f.add_edge("a", "b");
    f.add_edge("b", "c");
    f.add_edge("a", "c");
    f.add_edge("d", "e");
    f.add_edge("e", "f");
    f.add_edge("d", "f");
    f.add_edge("c", "d");  // bridge: lies on no short cycle
    CHECK(f.node_sets() ==
          std::vector<std::vector<std::string>>{{"a", "b", "c"}, {"d", "e", "f"}});
    CHECK(f.eng.cluster_of_edge(make_edge("c", "d")) == 0);
    CHECK(f.matches_oracle());
}

TEST_CASE("bridge edge joins the clusters once a parallel path appears") {
    Fixture f;
    for (auto k : {"a", "b", "c", "d", "e", "f"}) f.node(k);
    f.add_edge("a", "b");
    f.add_edge("b", "c");
    f.add_edge("a", "c");
    f.add_edge("d", "e");
    f.add_edge("e", "f");
    f.add_edge("d", "f");
    f.add_edge("c", "d");
    f.add_edge("c", "e");  // closes triangle c-d-e
    CHECK(f.node_sets() ==
          std::vector<std::vector<std::string>>{{"a", "b", "c"}, {"c", "d", "e", "f"}});
    CHECK(f.matches_oracle());
}

TEST_CASE("deltas account for every lifecycle transition") {
    Fixture f;
    for (auto k : {"a", "b", "c", "d"}) f.node(k);
    f.add_edge("a", "b");
    f.add_edge("b", "c");
    auto d1 = f.add_edge("a", "c");
    CHECK(d1.created.size() == 1);
    auto id1 = *d1.created.begin();
    auto d2 = f.add_node_with("d", {"a", "b"});
    CHECK(d2.updated.count(id1) == 1);
    auto d3 = f.del_node("d");
    CHECK(d3.updated.count(id1) == 1);
    auto d4 = f.del_edge("a", "c");
    CHECK(d4.dissolved.count(id1) == 1);
    CHECK(f.eng.clusters().empty());
}

TEST_CASE("instrumented mutations touch only local nodes") {
    Fixture f;
    // two far-apart triangles plus a long path between them
    for (auto k : {"a", "b", "c", "p1", "p2", "p3", "x", "y", "z"}) f.node(k);
    f.add_edge("a", "b");
    f.add_edge("b", "c");
    f.add_edge("a", "c");
    f.add_edge("c", "p1");
    f.add_edge("p1", "p2");
    f.add_edge("p2", "p3");
    f.add_edge("p3", "x");
    f.add_edge("x", "y");
    f.add_edge("y", "z");
    f.eng.set_instrumentation(true);
    f.add_edge("x", "z");  // closes the far triangle
    const auto& touched = f.eng.last_touched_nodes();
    CHECK(touched.count("a") == 0);
    CHECK(touched.count("b") == 0);
    CHECK(touched.count("p1") == 0);
    CHECK(f.matches_oracle());
}

TEST_CASE("node_in_any_cluster and clusters_of_node") {
    Fixture f;
    for (auto k : {"a", "b", "c", "d"}) f.node(k);
    f.add_edge("a", "b");
    f.add_edge("b", "c");
    f.add_edge("a", "c");
    CHECK(f.eng.node_in_any_cluster("a"));
    CHECK_FALSE(f.eng.node_in_any_cluster("d"));
    CHECK(f.eng.clusters_of_node("a").size() == 1);
    CHECK(f.eng.clusters_of_node("d").empty());
}

TEST_CASE("randomized mutations stay oracle-equivalent (smoke)") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        scd::test::FuzzHarness h(seed, 18);
        for (int s = 0; s < 60; ++s) {
            h.step(static_cast<std::uint64_t>(s));
            REQUIRE(h.matches_oracle());
        }
    }
}
