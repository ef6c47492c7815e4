// Benchmarks: the OpenMP edge-correlation kernel against its serial
// reference, and incremental short-cycle maintenance against per-quantum
// offline biconnected-component recomputation.

#include <chrono>
#include <cstdio>
#include <random>
#include <sstream>
#include <vector>

#include "scd/clusters.hpp"
#include "scd/correlation.hpp"
#include "scd/graph.hpp"
#include "scd/oracle.hpp"
#include "scd/trace_gen.hpp"
#include "scd/window.hpp"

using Clock = std::chrono::steady_clock;

static double secs(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

static void bench_ec_kernel() {
    const std::size_t n_keywords = 2000;
    const std::size_t users_per_kw = 200;
    scd::WindowStore store(30, 2, 42);
    std::mt19937_64 rng(7);

    scd::QuantumBatch batch;
    batch.index = 0;
    for (std::size_t k = 0; k < n_keywords; ++k) {
        for (std::size_t u = 0; u < users_per_kw; ++u) {
            scd::Message m;
            m.user = "u" + std::to_string(rng() % 50000);
            m.keywords = {"k" + std::to_string(k)};
            batch.messages.push_back(std::move(m));
        }
    }
    store.apply_quantum(batch);

    std::vector<std::pair<std::string, std::string>> pairs;
    std::uniform_int_distribution<std::size_t> pick(0, n_keywords - 1);
    for (std::size_t i = 0; i < 200000; ++i) {
        auto a = pick(rng), b = pick(rng);
        if (a == b) continue;
        pairs.push_back(scd::make_edge("k" + std::to_string(a), "k" + std::to_string(b)));
    }

    auto t0 = Clock::now();
    auto serial = scd::compute_ecs_serial(pairs, store);
    const double ts = secs(t0);
    t0 = Clock::now();
    auto parallel = scd::compute_ecs_parallel(pairs, store);
    const double tp = secs(t0);

    bool same = serial == parallel;
    std::printf("ec_kernel: pairs=%zu serial=%.3fs parallel=%.3fs speedup=%.2fx identical=%s\n",
                pairs.size(), ts, tp, ts / tp, same ? "yes" : "NO");
}

static void bench_incremental_vs_bc(const char* label, int n, std::size_t edge_cap) {
    // Random mutation stream; after each step the bc baseline recomputes from
    // scratch while the engine updates in place. edge_cap pins the density:
    // the incremental path wins on sparse graphs and loses once deletions
    // start reclustering near-complete components.
    const int steps = 3000;
    std::mt19937_64 rng(11);
    auto name = [](int v) { return "n" + std::to_string(v); };

    scd::AkgGraph g;
    scd::ClusterEngine engine(g);
    for (int v = 0; v < n; ++v) g.add_node(name(v));

    std::uniform_int_distribution<int> pick(0, n - 1);
    double t_inc = 0.0, t_bc = 0.0;
    std::size_t max_edges = 0;
    for (int s = 0; s < steps; ++s) {
        int a = pick(rng), b = pick(rng);
        if (a == b) continue;
        const bool add = !g.has_edge(name(a), name(b)) && g.edge_count() < edge_cap &&
                         (rng() % 100) < 70;
        auto t0 = Clock::now();
        if (add) {
            g.add_edge(name(a), name(b), 0.3);
            engine.edge_addition(name(a), name(b), s);
        } else if (g.has_edge(name(a), name(b))) {
            engine.edge_deletion(name(a), name(b), s);
            g.remove_edge(name(a), name(b));
        } else {
            continue;
        }
        t_inc += secs(t0);
        t0 = Clock::now();
        auto comps = scd::oracle::bc_components_of_graph(g);
        t_bc += secs(t0);
        max_edges = std::max(max_edges, g.edge_count());
    }
    std::printf(
        "maintenance[%s]: nodes=%d steps=%d max_edges=%zu incremental=%.3fs "
        "bc_recompute=%.3fs ratio=%.1fx\n",
        label, n, steps, max_edges, t_inc, t_bc, t_bc / t_inc);
}

int main() {
    bench_ec_kernel();
    bench_incremental_vs_bc("sparse", 400, 800);
    bench_incremental_vs_bc("dense", 150, 100000);
    return 0;
}
