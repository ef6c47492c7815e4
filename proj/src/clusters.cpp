#include "scd/clusters.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace scd {

namespace {

// Plain union-find over edge indices.
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

}  // namespace

std::vector<std::string> Cluster::node_list() const {
    std::vector<std::string> out;
    out.reserve(node_degree.size());
    for (const auto& [n, _] : node_degree) out.push_back(n);
    return out;
}

void ClusterDelta::absorb(const ClusterDelta& other) {
    for (auto id : other.created) created.insert(id);
    for (auto id : other.updated) updated.insert(id);
    for (auto id : other.dissolved) dissolved.insert(id);
    for (const auto& [s, v] : other.merged) {
        auto& dst = merged[s];
        dst.insert(dst.end(), v.begin(), v.end());
    }
    for (const auto& [o, f] : other.splits) splits[o] = f;
}

const Cluster* ClusterEngine::find(ClusterId id) const {
    auto it = by_id_.find(id);
    return it == by_id_.end() ? nullptr : &it->second;
}

ClusterId ClusterEngine::cluster_of_edge(const Edge& e) const {
    auto it = by_edge_.find(e);
    return it == by_edge_.end() ? 0 : it->second;
}

const std::set<ClusterId>& ClusterEngine::clusters_of_node(const std::string& k) const {
    static const std::set<ClusterId> empty;
    auto it = by_node_.find(k);
    return it == by_node_.end() ? empty : it->second;
}

bool ClusterEngine::node_in_any_cluster(const std::string& k) const {
    auto it = by_node_.find(k);
    return it != by_node_.end() && !it->second.empty();
}

void ClusterEngine::add_edge_to_cluster(Cluster& c, const Edge& e) {
    if (!c.edges.insert(e).second) return;
    ++c.node_degree[e.first];
    ++c.node_degree[e.second];
    by_edge_[e] = c.id;
    by_node_[e.first].insert(c.id);
    by_node_[e.second].insert(c.id);
}

void ClusterEngine::drop_cluster(ClusterId id) {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) return;
    for (const auto& e : it->second.edges) by_edge_.erase(e);
    for (const auto& [n, _] : it->second.node_degree) {
        auto nit = by_node_.find(n);
        if (nit != by_node_.end()) {
            nit->second.erase(id);
            if (nit->second.empty()) by_node_.erase(nit);
        }
    }
    by_id_.erase(it);
}

void ClusterEngine::touch_cluster_nodes(ClusterId id) {
    const Cluster* c = find(id);
    if (!c) return;
    for (const auto& [n, _] : c->node_degree) touched_.insert(n);
}

ClusterId ClusterEngine::absorb_into(ClusterId survivor, ClusterId victim) {
    if (survivor == victim) return survivor;
    Cluster& dst = by_id_.at(survivor);
    Cluster victim_copy = by_id_.at(victim);
    drop_cluster(victim);
    for (const auto& e : victim_copy.edges) add_edge_to_cluster(dst, e);
    return survivor;
}

ClusterId ClusterEngine::merge_clusters(ClusterId a, ClusterId b) {
    if (a == b) {
        if (!find(a)) throw std::invalid_argument("merge_clusters: unknown cluster");
        return a;
    }
    const Cluster* ca = find(a);
    const Cluster* cb = find(b);
    if (!ca || !cb) throw std::invalid_argument("merge_clusters: unknown cluster");
    bool shared = false;
    const Cluster* small = ca->edges.size() <= cb->edges.size() ? ca : cb;
    const Cluster* big = small == ca ? cb : ca;
    for (const auto& e : small->edges) {
        if (big->edges.count(e)) {
            shared = true;
            break;
        }
    }
    if (!shared) throw std::invalid_argument("merge_clusters: no shared edge");
    ClusterId survivor = std::min(a, b);
    absorb_into(survivor, survivor == a ? b : a);
    return survivor;
}

void ClusterEngine::apply_cycle(const LocalCycle& cycle, std::uint64_t quantum,
                                ClusterDelta& delta) {
    std::set<ClusterId> ids;
    for (const auto& e : cycle.edges) {
        if (ClusterId id = cluster_of_edge(e)) ids.insert(id);
    }
    if (ids.empty()) {
        ClusterId id = next_id_++;
        Cluster c;
        c.id = id;
        c.created_quantum = quantum;
        auto [it, _] = by_id_.emplace(id, std::move(c));
        for (const auto& e : cycle.edges) add_edge_to_cluster(it->second, e);
        delta.created.insert(id);
        return;
    }
    const ClusterId survivor = *ids.begin();  // oldest id survives
    for (auto it = std::next(ids.begin()); it != ids.end(); ++it) {
        const ClusterId victim = *it;
        absorb_into(survivor, victim);
        if (delta.created.erase(victim) == 0) {
            delta.merged[survivor].push_back(victim);
        }
        // A victim that had absorbed others passes them on to the survivor.
        auto mit = delta.merged.find(victim);
        if (mit != delta.merged.end()) {
            auto& dst = delta.merged[survivor];
            dst.insert(dst.end(), mit->second.begin(), mit->second.end());
            delta.merged.erase(victim);
        }
    }
    Cluster& dst = by_id_.at(survivor);
    for (const auto& e : cycle.edges) add_edge_to_cluster(dst, e);
    if (!delta.created.count(survivor)) delta.updated.insert(survivor);
}

ClusterDelta ClusterEngine::node_addition(const std::string& n, std::uint64_t quantum) {
    if (!g_->has_node(n)) throw std::invalid_argument("node_addition: node not in graph");
    if (instrument_) touched_.clear();
    touch(n);
    ClusterDelta delta;
    const auto& nbrs = g_->neighbors(n);
    if (nbrs.size() < 2) return delta;  // nothing to do for degree < 2

    std::vector<std::string> vs;
    vs.reserve(nbrs.size());
    for (const auto& [v, _] : nbrs) {
        vs.push_back(v);
        touch(v);
    }
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const std::string& n2 = vs[i];
            const std::string& n3 = vs[j];
            // direct edge makes a triangle with n
            if (g_->has_edge(n2, n3)) {
                apply_cycle({{make_edge(n, n2), make_edge(n, n3), make_edge(n2, n3)}},
                            quantum, delta);
            }
            // every common neighbor makes a 4-cycle with n
            for (const auto& n4 : g_->common_neighbors(n2, n3)) {
                if (n4 == n) continue;
                touch(n4);
                apply_cycle({{make_edge(n, n2), make_edge(n2, n4), make_edge(n4, n3),
                              make_edge(n3, n)}},
                            quantum, delta);
            }
        }
    }
    if (instrument_) {
        for (auto id : delta.created) touch_cluster_nodes(id);
        for (auto id : delta.updated) touch_cluster_nodes(id);
    }
    return delta;
}

ClusterDelta ClusterEngine::edge_addition(const std::string& a, const std::string& b,
                                          std::uint64_t quantum) {
    if (!g_->has_edge(a, b)) throw std::invalid_argument("edge_addition: edge not in graph");
    if (instrument_) touched_.clear();
    touch(a);
    touch(b);
    ClusterDelta delta;
    const auto& na = g_->neighbors(a);
    const auto& nb = g_->neighbors(b);
    for (const auto& [n3, _] : na) {
        if (n3 == b) continue;
        touch(n3);
        // Triangle a-b-n3.
        if (nb.count(n3)) {
            apply_cycle({{make_edge(a, b), make_edge(a, n3), make_edge(n3, b)}}, quantum,
                        delta);
        }
        // 4-cycles a-n3-n4-b.
        const auto& n3nbrs = g_->neighbors(n3);
        for (const auto& [n4, __] : nb) {
            if (n4 == a || n4 == n3) continue;
            if (n3nbrs.count(n4)) {
                touch(n4);
                apply_cycle({{make_edge(a, b), make_edge(a, n3), make_edge(n3, n4),
                              make_edge(n4, b)}},
                            quantum, delta);
            }
        }
    }
    if (instrument_) {
        for (auto id : delta.created) touch_cluster_nodes(id);
        for (auto id : delta.updated) touch_cluster_nodes(id);
    }
    return delta;
}

ClusterDelta ClusterEngine::node_deletion(const std::string& n, std::uint64_t quantum) {
    if (instrument_) touched_.clear();
    touch(n);
    ClusterDelta delta;
    auto nit = by_node_.find(n);
    if (nit == by_node_.end()) return delta;  // not in any cluster
    const std::vector<ClusterId> affected(nit->second.begin(), nit->second.end());
    for (ClusterId cid : affected) {
        const Cluster& c = by_id_.at(cid);
        if (instrument_) touch_cluster_nodes(cid);
        std::set<Edge> remaining;
        for (const auto& e : c.edges) {
            if (e.first != n && e.second != n) remaining.insert(e);
        }
        recluster_after_removal(cid, std::move(remaining), quantum, delta);
    }
    return delta;
}

ClusterDelta ClusterEngine::edge_deletion(const std::string& a, const std::string& b,
                                          std::uint64_t quantum) {
    if (instrument_) touched_.clear();
    touch(a);
    touch(b);
    ClusterDelta delta;
    const Edge e = make_edge(a, b);
    const ClusterId cid = cluster_of_edge(e);
    if (cid == 0) return delta;  // edge not in any cluster
    if (instrument_) touch_cluster_nodes(cid);
    std::set<Edge> remaining = by_id_.at(cid).edges;
    remaining.erase(e);
    recluster_after_removal(cid, std::move(remaining), quantum, delta);
    return delta;
}

// Recomputes the edge classes within what is left of one cluster. Cycle and
// articulation handling collapse into this: edges off every internal short
// cycle fall out as singleton classes, and an articulation point shows up as
// the one node shared by two classes.
void ClusterEngine::recluster_after_removal(ClusterId cid, std::set<Edge> remaining,
                                            std::uint64_t quantum, ClusterDelta& delta) {
    const std::uint64_t created_q = by_id_.at(cid).created_quantum;
    drop_cluster(cid);

    std::vector<Edge> edges(remaining.begin(), remaining.end());
    std::map<Edge, int> index;
    std::map<std::string, std::set<std::string>> adj;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        index[edges[i]] = static_cast<int>(i);
        adj[edges[i].first].insert(edges[i].second);
        adj[edges[i].second].insert(edges[i].first);
    }

    UnionFind uf(edges.size());
    for (const auto& [e, ei] : index) {
        const auto& au = adj[e.first];
        const auto& av = adj[e.second];
        for (const auto& w : au) {
            if (w == e.second) continue;
            // Triangle e.first-e.second-w.
            if (av.count(w)) {
                uf.unite(ei, index.at(make_edge(e.first, w)));
                uf.unite(ei, index.at(make_edge(e.second, w)));
            }
            // 4-cycles e.first-w-x-e.second.
            for (const auto& x : av) {
                if (x == e.first || x == w) continue;
                if (adj[w].count(x)) {
                    uf.unite(ei, index.at(make_edge(e.first, w)));
                    uf.unite(ei, index.at(make_edge(w, x)));
                    uf.unite(ei, index.at(make_edge(x, e.second)));
                }
            }
        }
    }

    std::map<int, std::vector<Edge>> classes;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        classes[uf.root(static_cast<int>(i))].push_back(edges[i]);
    }
    std::vector<std::vector<Edge>> fragments;
    for (auto& [_, cls] : classes) {
        if (cls.size() >= 3) fragments.push_back(std::move(cls));
    }
    // Deterministic: order fragments by their smallest keyword.
    std::sort(fragments.begin(), fragments.end(),
              [](const std::vector<Edge>& a, const std::vector<Edge>& b) {
                  return a.front() < b.front();
              });

    if (fragments.empty()) {
        delta.dissolved.insert(cid);
        delta.updated.erase(cid);
        return;
    }
    if (fragments.size() == 1) {
        // Cluster shrank but holds together; it keeps its identity.
        Cluster c;
        c.id = cid;
        c.created_quantum = created_q;
        auto [it, _] = by_id_.emplace(cid, std::move(c));
        for (const auto& e : fragments.front()) add_edge_to_cluster(it->second, e);
        delta.updated.insert(cid);
        return;
    }
    std::vector<ClusterId> frag_ids;
    for (const auto& frag : fragments) {
        ClusterId id = next_id_++;
        Cluster c;
        c.id = id;
        c.created_quantum = quantum;
        auto [it, _] = by_id_.emplace(id, std::move(c));
        for (const auto& e : frag) add_edge_to_cluster(it->second, e);
        frag_ids.push_back(id);
    }
    delta.splits[cid] = frag_ids;
    delta.dissolved.insert(cid);
    delta.updated.erase(cid);
}

bool ClusterEngine::short_cycle_exists(const Edge& e, const Cluster& c) const {
    std::set<std::string> scope;
    for (const auto& [n, _] : c.node_degree) scope.insert(n);
    return g_->path_leq3_within(e.first, e.second, scope, e);
}

std::vector<CanonicalCluster> ClusterEngine::canonical() const {
    std::vector<CanonicalCluster> out;
    out.reserve(by_id_.size());
    for (const auto& [_, c] : by_id_) {
        CanonicalCluster cc;
        cc.nodes = c.node_list();
        cc.edges.assign(c.edges.begin(), c.edges.end());
        out.push_back(std::move(cc));
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace scd
