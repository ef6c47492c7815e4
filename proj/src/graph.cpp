#include "scd/graph.hpp"

#include <cstdio>
#include <stdexcept>

namespace scd {

void AkgGraph::add_node(const std::string& k) { adj_.try_emplace(k); }

void AkgGraph::remove_node(const std::string& k) {
    auto it = adj_.find(k);
    if (it == adj_.end()) {
        ++warnings_;
        return;
    }
    for (const auto& [n, _] : it->second) {
        adj_[n].erase(k);
        --edge_count_;
    }
    adj_.erase(it);
}

void AkgGraph::add_edge(const std::string& a, const std::string& b, double ec) {
    if (a == b) throw std::invalid_argument("self-loop rejected: " + a);
    auto ia = adj_.find(a);
    auto ib = adj_.find(b);
    if (ia == adj_.end() || ib == adj_.end()) {
        throw std::invalid_argument("add_edge with missing endpoint: " + a + "," + b);
    }
    if (ia->second.emplace(b, ec).second) {
        ib->second.emplace(a, ec);
        ++edge_count_;
    } else {
        ia->second[b] = ec;
        ib->second[a] = ec;
    }
}

void AkgGraph::set_ec(const std::string& a, const std::string& b, double ec) {
    auto ia = adj_.find(a);
    if (ia == adj_.end() || !ia->second.count(b)) {
        ++warnings_;
        return;
    }
    ia->second[b] = ec;
    adj_[b][a] = ec;
}

void AkgGraph::remove_edge(const std::string& a, const std::string& b) {
    auto ia = adj_.find(a);
    if (ia == adj_.end() || ia->second.erase(b) == 0) {
        ++warnings_;
        return;
    }
    adj_[b].erase(a);
    --edge_count_;
}

bool AkgGraph::has_edge(const std::string& a, const std::string& b) const {
    auto it = adj_.find(a);
    return it != adj_.end() && it->second.count(b) > 0;
}

double AkgGraph::edge_ec(const std::string& a, const std::string& b) const {
    auto it = adj_.find(a);
    if (it == adj_.end()) return 0.0;
    auto jt = it->second.find(b);
    return jt == it->second.end() ? 0.0 : jt->second;
}

const std::map<std::string, double>& AkgGraph::neighbors(const std::string& k) const {
    static const std::map<std::string, double> empty;
    auto it = adj_.find(k);
    return it == adj_.end() ? empty : it->second;
}

std::size_t AkgGraph::degree(const std::string& k) const {
    auto it = adj_.find(k);
    return it == adj_.end() ? 0 : it->second.size();
}

std::set<std::string> AkgGraph::common_neighbors(const std::string& k1,
                                                 const std::string& k2) const {
    auto i1 = adj_.find(k1);
    auto i2 = adj_.find(k2);
    if (i1 == adj_.end() || i2 == adj_.end()) {
        throw std::invalid_argument("common_neighbors with missing node");
    }
    const auto& small = i1->second.size() <= i2->second.size() ? i1->second : i2->second;
    const auto& big = i1->second.size() <= i2->second.size() ? i2->second : i1->second;
    std::set<std::string> out;
    for (const auto& [n, _] : small) {
        if (big.count(n)) out.insert(n);
    }
    return out;
}

bool AkgGraph::path_leq3_within(const std::string& a, const std::string& b,
                                const std::set<std::string>& scope,
                                const Edge& excluded) const {
    auto usable = [&](const std::string& u, const std::string& v) {
        return make_edge(u, v) != excluded;
    };
    // length 1
    if (has_edge(a, b) && usable(a, b)) return true;
    // length 2: common neighbor in scope
    const auto& na = neighbors(a);
    const auto& nb = neighbors(b);
    for (const auto& [c, _] : na) {
        if (c == b || !scope.count(c)) continue;
        if (!usable(a, c)) continue;
        if (nb.count(c) && usable(c, b)) return true;
    }
    // length 3: c in N(a), d in N(b), edge (c,d)
    for (const auto& [c, _] : na) {
        if (c == b || !scope.count(c) || !usable(a, c)) continue;
        const auto& nc = neighbors(c);
        for (const auto& [d, __] : nb) {
            if (d == a || d == c || !scope.count(d) || !usable(d, b)) continue;
            if (nc.count(d) && usable(c, d)) return true;
        }
    }
    return false;
}

void AkgGraph::dump(std::ostream& os) const {
    char buf[32];
    for (const auto& [a, nbrs] : adj_) {
        for (const auto& [b, ec] : nbrs) {
            if (a < b) {
                std::snprintf(buf, sizeof(buf), "%.6f", ec);
                os << a << '\t' << b << '\t' << buf << '\n';
            }
        }
    }
}

}  // namespace scd
