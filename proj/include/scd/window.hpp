#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "scd/ingest.hpp"

namespace scd {

// Deterministic 64-bit user hash (FNV-1a mixed with the run seed).
std::uint64_t hash_user(std::string_view user, std::uint64_t seed);

// A bottom-p sketch: the p smallest distinct hash values, sorted ascending.
using Sketch = std::vector<std::uint64_t>;

// The p smallest distinct values of a ∪ b.
Sketch bottom_p_merge(const Sketch& a, const Sketch& b, std::size_t p);

// True iff the two sketches share at least one entry.
bool minhash_screen(const Sketch& a, const Sketch& b);

enum class KeywordState { Low, High };

// Per-keyword sliding-window state. User identity is carried as the 64-bit
// hash of the user id; per-quantum id sets are stored sorted, so the
// per-quantum bottom-p sketch is just the prefix.
struct KeywordStats {
    struct QuantumEntry {
        std::uint64_t quantum = 0;
        std::vector<std::uint64_t> users;  // sorted distinct hashed ids
    };

    std::deque<QuantumEntry> entries;               // oldest first
    std::map<std::uint64_t, std::uint32_t> window_users;  // id -> #quanta seen
    Sketch window_sketch;
    KeywordState state = KeywordState::Low;
    std::uint64_t last_seen = 0;

    std::size_t window_set_size() const { return window_users.size(); }
};

// Counts produced by one quantum: keyword -> distinct users this quantum.
struct QuantumDelta {
    std::uint64_t quantum = 0;
    std::map<std::string, std::size_t> counts;
};

// Sliding-window statistics store. Single-writer: only the quantum loop
// mutates it.
class WindowStore {
public:
    WindowStore(std::size_t window_quanta, std::size_t sketch_size, std::uint64_t seed)
        : w_(window_quanta), p_(sketch_size), seed_(seed) {}

    // Ingests one batch: appends per-keyword per-quantum entries, evicts ring
    // entries that fell out of the window.
    QuantumDelta apply_quantum(const QuantumBatch& batch);

    // Removes and returns keywords not seen in any of the last w quanta
    // (last_seen <= q - w). Call after apply_quantum for quantum q.
    std::vector<std::string> expire_stale(std::uint64_t q);

    const KeywordStats* find(const std::string& k) const;
    KeywordStats* find(const std::string& k);
    bool contains(const std::string& k) const { return stats_.count(k) > 0; }
    std::size_t size() const { return stats_.size(); }
    void erase(const std::string& k) { stats_.erase(k); }

    // Exact Jaccard of the two keywords' window id sets (0 if both empty).
    double jaccard(const std::string& k1, const std::string& k2) const;

    std::size_t weight(const std::string& k) const;  // window id-set size

    // Distinct users over a set of keywords (event support).
    std::size_t support(const std::vector<std::string>& keywords) const;

    std::size_t window_quanta() const { return w_; }
    std::size_t sketch_size() const { return p_; }
    std::uint64_t seed() const { return seed_; }

    const std::map<std::string, KeywordStats>& all() const { return stats_; }

private:
    void evict_old(KeywordStats& st, std::uint64_t q);
    void rebuild_sketch(KeywordStats& st);

    std::size_t w_;
    std::size_t p_;
    std::uint64_t seed_;
    std::map<std::string, KeywordStats> stats_;
    // quantum index -> keywords touched in that quantum, for amortized expiry
    std::map<std::uint64_t, std::vector<std::string>> touched_at_;
};

// Quantum classification: set1 = newly-high keywords (count >= gamma),
// set2 = keywords already in the AKG that appeared this quantum. A keyword
// may be in both.
struct StateSets {
    std::set<std::string> set1;
    std::set<std::string> set2;
};

template <typename HasNodeFn>
StateSets classify_states(const QuantumDelta& delta, std::size_t gamma, HasNodeFn&& in_akg) {
    StateSets s;
    for (const auto& [k, count] : delta.counts) {
        if (count >= gamma) s.set1.insert(k);
        if (in_akg(k)) s.set2.insert(k);
    }
    return s;
}

}  // namespace scd
