#pragma once

#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <string>

namespace scd {

// Canonical unordered edge key (first < second).
using Edge = std::pair<std::string, std::string>;

inline Edge make_edge(const std::string& a, const std::string& b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

// The active keyword graph: undirected, no self-loops, EC-weighted edges.
// Ordered adjacency keeps every traversal deterministic.
class AkgGraph {
public:
    void add_node(const std::string& k);
    // Removes the node and all incident edges. Absent node is a counted no-op.
    void remove_node(const std::string& k);
    // Both endpoints must exist and differ; throws std::invalid_argument.
    void add_edge(const std::string& a, const std::string& b, double ec);
    void set_ec(const std::string& a, const std::string& b, double ec);
    // Absent edge is a counted no-op.
    void remove_edge(const std::string& a, const std::string& b);

    bool has_node(const std::string& k) const { return adj_.count(k) > 0; }
    bool has_edge(const std::string& a, const std::string& b) const;
    double edge_ec(const std::string& a, const std::string& b) const;  // 0 if absent

    const std::map<std::string, double>& neighbors(const std::string& k) const;
    std::size_t degree(const std::string& k) const;
    std::size_t node_count() const { return adj_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    std::size_t warning_count() const { return warnings_; }

    // Nodes adjacent to both k1 and k2. Both must exist.
    std::set<std::string> common_neighbors(const std::string& k1,
                                           const std::string& k2) const;

    // True iff a path a -> b of length <= 3 exists using only nodes in scope
    // and not using the excluded edge. Bounded local work.
    bool path_leq3_within(const std::string& a, const std::string& b,
                          const std::set<std::string>& scope,
                          const Edge& excluded) const;

    const std::map<std::string, std::map<std::string, double>>& adjacency() const {
        return adj_;
    }

    // Deterministic edge-list dump: "k1 <TAB> k2 <TAB> EC", lexicographic.
    void dump(std::ostream& os) const;

private:
    std::map<std::string, std::map<std::string, double>> adj_;
    std::size_t edge_count_ = 0;
    std::size_t warnings_ = 0;
};

}  // namespace scd
