#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "scd/correlation.hpp"

using scd::AkgGraph;
using scd::QuantumBatch;
using scd::StateSets;
using scd::WindowStore;

namespace {

QuantumBatch make_batch(std::uint64_t q,
                        std::vector<std::pair<std::string, std::vector<std::string>>> posts) {
    QuantumBatch b;
    b.index = q;
    for (auto& [user, kws] : posts) {
        scd::Message m;
        m.user = user;
        m.keywords = kws;
        b.messages.push_back(std::move(m));
    }
    return b;
}

}  // namespace

TEST_CASE("candidate_pairs: screened set1 pair") {
    WindowStore store(30, 2, 7);
    store.apply_quantum(make_batch(0, {{"u1", {"a", "b"}}, {"u2", {"a"}}, {"u3", {"b"}}}));
    AkgGraph akg;
    StateSets sets;
    sets.set1 = {"a", "b"};
    auto pairs = scd::candidate_pairs(sets, store, akg);
    CHECK(pairs == std::vector<std::pair<std::string, std::string>>{{"a", "b"}});
}

TEST_CASE("candidate_pairs: disjoint sketches are screened out") {
    WindowStore store(30, 1, 7);
    store.apply_quantum(make_batch(0, {{"u1", {"a"}}, {"u2", {"b"}}}));
    AkgGraph akg;
    StateSets sets;
    sets.set1 = {"a", "b"};
    CHECK(scd::candidate_pairs(sets, store, akg).empty());
}

TEST_CASE("candidate_pairs: set2 keywords pair with their AKG neighbors") {
    WindowStore store(30, 2, 7);
    store.apply_quantum(make_batch(0, {{"u1", {"c", "d", "e"}}}));
    AkgGraph akg;
    akg.add_node("c");
    akg.add_node("d");
    akg.add_node("e");
    akg.add_edge("c", "d", 0.3);
    akg.add_edge("c", "e", 0.3);
    StateSets sets;
    sets.set2 = {"c"};
    auto pairs = scd::candidate_pairs(sets, store, akg);
    CHECK(pairs == std::vector<std::pair<std::string, std::string>>{{"c", "d"}, {"c", "e"}});
}

TEST_CASE("candidate_pairs: overlap between set1 and set2 is deduplicated") {
    WindowStore store(30, 2, 7);
    store.apply_quantum(make_batch(0, {{"u1", {"a", "b"}}}));
    AkgGraph akg;
    akg.add_node("a");
    akg.add_node("b");
    akg.add_edge("a", "b", 0.3);
    StateSets sets;
    sets.set1 = {"a", "b"};
    sets.set2 = {"a", "b"};
    auto pairs = scd::candidate_pairs(sets, store, akg);
    CHECK(pairs == std::vector<std::pair<std::string, std::string>>{{"a", "b"}});
}

TEST_CASE("refresh_edges classifies against lambda and edge presence") {
    WindowStore store(30, 2, 7);
    // J(a,b) = 1/4 = 0.25, J(c,d) = 1/10 = 0.1
    store.apply_quantum(make_batch(0, {{"u1", {"a", "b"}},
                                       {"u2", {"a"}},
                                       {"u3", {"a"}},
                                       {"u4", {"b"}}}));
    QuantumBatch cd;
    cd.index = 0;
    for (int i = 0; i < 5; ++i) {
        scd::Message m;
        m.user = "c" + std::to_string(i);
        m.keywords = {"c"};
        cd.messages.push_back(m);
        m.user = "d" + std::to_string(i);
        m.keywords = i == 0 ? std::vector<std::string>{"d", "c"}
                            : std::vector<std::string>{"d"};
        cd.messages.push_back(m);
    }
    store.apply_quantum(cd);

    AkgGraph akg;
    for (auto k : {"a", "b", "c", "d"}) akg.add_node(k);

    SUBCASE("above threshold, absent -> addition") {
        auto d = scd::refresh_edges({{"a", "b"}}, store, 0.20, akg);
        REQUIRE(d.additions.size() == 1);
        CHECK(std::get<2>(d.additions[0]) == doctest::Approx(0.25));
        CHECK(d.updates.empty());
        CHECK(d.removals.empty());
    }
    SUBCASE("above threshold, present -> update") {
        akg.add_edge("a", "b", 0.5);
        auto d = scd::refresh_edges({{"a", "b"}}, store, 0.20, akg);
        CHECK(d.additions.empty());
        REQUIRE(d.updates.size() == 1);
        CHECK(std::get<2>(d.updates[0]) == doctest::Approx(0.25));
    }
    SUBCASE("below threshold, present -> removal") {
        akg.add_edge("c", "d", 0.5);
        auto d = scd::refresh_edges({{"c", "d"}}, store, 0.20, akg);
        CHECK(d.removals == std::vector<std::pair<std::string, std::string>>{{"c", "d"}});
    }
    SUBCASE("below threshold, absent -> no-op") {
        auto d = scd::refresh_edges({{"c", "d"}}, store, 0.20, akg);
        CHECK(d.additions.empty());
        CHECK(d.updates.empty());
        CHECK(d.removals.empty());
    }
}

TEST_CASE("parallel EC kernel matches the serial reference") {
    WindowStore store(30, 2, 7);
    std::mt19937_64 rng(3);
    QuantumBatch b;
    b.index = 0;
    for (int i = 0; i < 4000; ++i) {
        scd::Message m;
        m.user = "u" + std::to_string(rng() % 300);
        m.keywords = {"k" + std::to_string(rng() % 50)};
        b.messages.push_back(std::move(m));
    }
    store.apply_quantum(b);

    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < 50; ++i) {
        for (int j = i + 1; j < 50; ++j) {
            pairs.push_back({"k" + std::to_string(i), "k" + std::to_string(j)});
        }
    }
    CHECK(scd::compute_ecs_serial(pairs, store) == scd::compute_ecs_parallel(pairs, store));
}
