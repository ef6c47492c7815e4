#include "scd/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace scd {
namespace oracle {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int root(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = root(a);
        b = root(b);
        if (a != b) parent[b] = a;
    }
};

std::vector<std::set<int>> adjacency(const StaticGraph& g) {
    std::vector<std::set<int>> adj(g.n);
    for (const auto& [i, j] : g.edges) {
        adj[i].insert(j);
        adj[j].insert(i);
    }
    return adj;
}

}  // namespace

std::optional<StaticGraph> StaticGraph::parse(std::istream& in) {
    StaticGraph g;
    int m = 0;
    if (!(in >> g.n >> m)) return std::nullopt;
    std::set<std::pair<int, int>> seen;
    for (int k = 0; k < m; ++k) {
        int i, j;
        if (!(in >> i >> j)) return std::nullopt;
        if (i == j || i < 0 || j < 0 || i >= g.n || j >= g.n) return std::nullopt;
        if (i > j) std::swap(i, j);
        if (seen.insert({i, j}).second) g.edges.push_back({i, j});
    }
    std::sort(g.edges.begin(), g.edges.end());
    return g;
}

std::vector<std::vector<int>> enumerate_short_cycles(const StaticGraph& g) {
    const auto adj = adjacency(g);
    std::vector<std::vector<int>> cycles;
    // Triangles i < j < k.
    for (int i = 0; i < g.n; ++i) {
        for (int j : adj[i]) {
            if (j <= i) continue;
            for (int k : adj[j]) {
                if (k <= j) continue;
                if (adj[i].count(k)) cycles.push_back({i, j, k});
            }
        }
    }
    // 4-cycles v0-v1-v2-v3 with v0 minimal and v1 < v3.
    for (int v0 = 0; v0 < g.n; ++v0) {
        for (int v1 : adj[v0]) {
            if (v1 <= v0) continue;
            for (int v3 : adj[v0]) {
                if (v3 <= v1) continue;
                for (int v2 : adj[v1]) {
                    if (v2 <= v0 || v2 == v1 || v2 == v3) continue;
                    if (adj[v3].count(v2)) cycles.push_back({v0, v1, v2, v3});
                }
            }
        }
    }
    return cycles;
}

std::vector<IntCluster> clusters(const StaticGraph& g) {
    std::map<std::pair<int, int>, int> index;
    for (std::size_t i = 0; i < g.edges.size(); ++i) index[g.edges[i]] = static_cast<int>(i);
    auto key = [](int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };

    UnionFind uf(g.edges.size());
    for (const auto& cyc : enumerate_short_cycles(g)) {
        const int first = index.at(key(cyc.front(), cyc.back()));
        for (std::size_t i = 0; i + 1 < cyc.size(); ++i) {
            uf.unite(first, index.at(key(cyc[i], cyc[i + 1])));
        }
    }

    std::map<int, IntCluster> classes;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        classes[uf.root(static_cast<int>(i))].edges.push_back(g.edges[i]);
    }
    std::vector<IntCluster> out;
    for (auto& [_, c] : classes) {
        if (c.edges.size() < 3) continue;  // an edge on no short cycle is no cluster
        std::set<int> nodes;
        for (const auto& [a, b] : c.edges) {
            nodes.insert(a);
            nodes.insert(b);
        }
        c.nodes.assign(nodes.begin(), nodes.end());
        std::sort(c.edges.begin(), c.edges.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::vector<CanonicalCluster> to_canonical(const std::vector<IntCluster>& ics,
                                           const std::vector<std::string>& names) {
    std::vector<CanonicalCluster> out;
    for (const auto& ic : ics) {
        CanonicalCluster c;
        for (int v : ic.nodes) c.nodes.push_back(names[v]);
        std::sort(c.nodes.begin(), c.nodes.end());
        for (const auto& [a, b] : ic.edges) c.edges.push_back(make_edge(names[a], names[b]));
        std::sort(c.edges.begin(), c.edges.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

StaticGraph index_edges(const std::vector<Edge>& edges, std::vector<std::string>& names) {
    std::map<std::string, int> ids;
    StaticGraph g;
    auto id_of = [&](const std::string& s) {
        auto [it, inserted] = ids.emplace(s, static_cast<int>(names.size()));
        if (inserted) {
            names.push_back(s);
            ++g.n;
        }
        return it->second;
    };
    for (const auto& [a, b] : edges) {
        int i = id_of(a), j = id_of(b);
        if (i > j) std::swap(i, j);
        g.edges.push_back({i, j});
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

}  // namespace

std::vector<CanonicalCluster> clusters_of_edges(const std::vector<Edge>& edges) {
    std::vector<std::string> names;
    StaticGraph g = index_edges(edges, names);
    return to_canonical(clusters(g), names);
}

std::vector<CanonicalCluster> clusters_of_graph(const AkgGraph& g) {
    std::vector<Edge> edges;
    for (const auto& [a, nbrs] : g.adjacency()) {
        for (const auto& [b, _] : nbrs) {
            if (a < b) edges.push_back({a, b});
        }
    }
    return clusters_of_edges(edges);
}

bool is_biconnected(const std::vector<int>& nodes,
                    const std::vector<std::pair<int, int>>& edges) {
    if (nodes.size() < 3) return false;
    std::map<int, std::set<int>> adj;
    std::set<int> nodeset(nodes.begin(), nodes.end());
    for (int v : nodes) adj[v];
    for (const auto& [a, b] : edges) {
        if (!nodeset.count(a) || !nodeset.count(b)) continue;
        adj[a].insert(b);
        adj[b].insert(a);
    }
    // Connected, and still connected after removing any single node.
    auto connected_without = [&](int skip) {
        int start = -1;
        for (int v : nodes) {
            if (v != skip) {
                start = v;
                break;
            }
        }
        if (start < 0) return true;
        std::set<int> seen{start};
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : adj[v]) {
                if (w == skip || seen.count(w)) continue;
                seen.insert(w);
                stack.push_back(w);
            }
        }
        std::size_t expected = nodes.size() - (skip >= 0 && nodeset.count(skip) ? 1 : 0);
        return seen.size() == expected;
    };
    if (!connected_without(-1)) return false;
    for (int v : nodes) {
        if (!connected_without(v)) return false;
    }
    return true;
}

bool is_biconnected(const CanonicalCluster& c) {
    std::map<std::string, int> ids;
    std::vector<int> nodes;
    for (const auto& n : c.nodes) {
        ids[n] = static_cast<int>(nodes.size());
        nodes.push_back(static_cast<int>(nodes.size()));
    }
    std::vector<std::pair<int, int>> edges;
    for (const auto& [a, b] : c.edges) edges.push_back({ids.at(a), ids.at(b)});
    return is_biconnected(nodes, edges);
}

bool is_mqc(const std::vector<int>& nodes,
            const std::vector<std::pair<int, int>>& edges, bool strict) {
    const std::size_t n = nodes.size();
    if (n < 3) return false;
    std::map<int, std::size_t> deg;
    std::set<int> nodeset(nodes.begin(), nodes.end());
    for (int v : nodes) deg[v] = 0;
    for (const auto& [a, b] : edges) {
        if (nodeset.count(a) && nodeset.count(b)) {
            ++deg[a];
            ++deg[b];
        }
    }
    const std::size_t need = strict ? (n - 1) / 2 + 1 : (n - 1 + 1) / 2;  // floor+1 vs ceil
    for (int v : nodes) {
        if (deg[v] < need) return false;
    }
    return true;
}

std::vector<IntCluster> bc_components(const StaticGraph& g) {
    const auto adj = adjacency(g);
    // Tarjan biconnected components via an edge stack.
    std::vector<int> disc(g.n, -1), low(g.n, 0);
    std::vector<std::pair<int, int>> stack;
    std::vector<std::vector<std::pair<int, int>>> comps;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        for (int v : adj[u]) {
            if (v == parent) {
                parent = -2;  // skip the tree edge to the parent exactly once
                continue;
            }
            if (disc[v] == -1) {
                stack.push_back({u, v});
                dfs(v, u);
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= disc[u]) {
                    std::vector<std::pair<int, int>> comp;
                    while (true) {
                        auto e = stack.back();
                        stack.pop_back();
                        comp.push_back(e);
                        if (e == std::pair{u, v}) break;
                    }
                    comps.push_back(std::move(comp));
                }
            } else if (disc[v] < disc[u]) {
                stack.push_back({u, v});
                low[u] = std::min(low[u], disc[v]);
            }
        }
    };
    for (int v = 0; v < g.n; ++v) {
        if (disc[v] == -1) dfs(v, -1);
    }

    std::vector<IntCluster> out;
    for (auto& comp : comps) {
        IntCluster c;
        std::set<int> nodes;
        for (auto& [a, b] : comp) {
            if (a > b) std::swap(a, b);
            c.edges.push_back({a, b});
            nodes.insert(a);
            nodes.insert(b);
        }
        c.nodes.assign(nodes.begin(), nodes.end());
        std::sort(c.edges.begin(), c.edges.end());
        c.edges.erase(std::unique(c.edges.begin(), c.edges.end()), c.edges.end());
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<CanonicalCluster> bc_components_of_graph(const AkgGraph& g) {
    std::vector<Edge> edges;
    for (const auto& [a, nbrs] : g.adjacency()) {
        for (const auto& [b, _] : nbrs) {
            if (a < b) edges.push_back({a, b});
        }
    }
    std::vector<std::string> names;
    StaticGraph sg = index_edges(edges, names);
    return to_canonical(bc_components(sg), names);
}

bool scp_holds(const CanonicalCluster& c) {
    std::set<Edge> edges(c.edges.begin(), c.edges.end());
    std::map<std::string, std::set<std::string>> adj;
    for (const auto& [a, b] : c.edges) {
        adj[a].insert(b);
        adj[b].insert(a);
    }
    for (const auto& e : c.edges) {
        bool found = false;
        // Path of length 2: common neighbor.
        for (const auto& w : adj[e.first]) {
            if (w != e.second && adj[e.second].count(w)) {
                found = true;
                break;
            }
        }
        // Path of length 3.
        if (!found) {
            for (const auto& w : adj[e.first]) {
                if (w == e.second) continue;
                for (const auto& x : adj[e.second]) {
                    if (x == e.first || x == w) continue;
                    if (edges.count(make_edge(w, x))) {
                        found = true;
                        break;
                    }
                }
                if (found) break;
            }
        }
        if (!found) return false;
    }
    return true;
}

}  // namespace oracle
}  // namespace scd
