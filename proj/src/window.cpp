#include "scd/window.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace scd {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

}  // namespace

std::uint64_t hash_user(std::string_view user, std::uint64_t seed) {
    std::uint64_t h = 0xcbf29ce484222325ull;  // FNV-1a
    for (unsigned char c : user) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    return splitmix64(h ^ seed);
}

Sketch bottom_p_merge(const Sketch& a, const Sketch& b, std::size_t p) {
    Sketch out;
    out.reserve(std::min(p, a.size() + b.size()));
    std::size_t i = 0, j = 0;
    while (out.size() < p && (i < a.size() || j < b.size())) {
        std::uint64_t v;
        if (j >= b.size() || (i < a.size() && a[i] <= b[j])) {
            v = a[i];
            if (j < b.size() && b[j] == v) ++j;  // dedup
            ++i;
        } else {
            v = b[j++];
        }
        out.push_back(v);
    }
    return out;
}

bool minhash_screen(const Sketch& a, const Sketch& b) {
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] == b[j]) return true;
        if (a[i] < b[j]) ++i; else ++j;
    }
    return false;
}

QuantumDelta WindowStore::apply_quantum(const QuantumBatch& batch) {
    const std::uint64_t q = batch.index;

    // Evict entries for keywords last touched exactly w quanta ago; entries
    // of keywords touched since then are evicted when they are touched below.
    if (q >= w_) {
        auto it = touched_at_.find(q - w_);
        if (it != touched_at_.end()) {
            for (const auto& k : it->second) {
                auto sit = stats_.find(k);
                if (sit != stats_.end()) evict_old(sit->second, q);
            }
        }
    }

    // keyword -> distinct hashed users this quantum
    std::unordered_map<std::string, std::unordered_set<std::uint64_t>> seen;
    for (const auto& m : batch.messages) {
        const std::uint64_t uid = hash_user(m.user, seed_);
        for (const auto& k : m.keywords) seen[k].insert(uid);
    }

    QuantumDelta delta;
    delta.quantum = q;
    auto& touched = touched_at_[q];
    for (auto& [k, users] : seen) {
        KeywordStats& st = stats_[k];
        evict_old(st, q);

        KeywordStats::QuantumEntry e;
        e.quantum = q;
        e.users.assign(users.begin(), users.end());
        std::sort(e.users.begin(), e.users.end());

        for (std::uint64_t u : e.users) ++st.window_users[u];
        Sketch qsketch(e.users.begin(),
                       e.users.begin() + std::min(p_, e.users.size()));
        st.window_sketch = bottom_p_merge(st.window_sketch, qsketch, p_);
        st.entries.push_back(std::move(e));
        st.last_seen = q;
        touched.push_back(k);
        delta.counts[k] = users.size();
    }
    // Drop expiry bookkeeping that can no longer matter.
    while (!touched_at_.empty() && touched_at_.begin()->first + w_ < q) {
        touched_at_.erase(touched_at_.begin());
    }
    return delta;
}

void WindowStore::evict_old(KeywordStats& st, std::uint64_t q) {
    bool changed = false;
    while (!st.entries.empty() && st.entries.front().quantum + w_ <= q) {
        for (std::uint64_t u : st.entries.front().users) {
            auto it = st.window_users.find(u);
            if (it != st.window_users.end() && --it->second == 0) st.window_users.erase(it);
        }
        st.entries.pop_front();
        changed = true;
    }
    if (changed) rebuild_sketch(st);
}

void WindowStore::rebuild_sketch(KeywordStats& st) {
    Sketch s;
    for (const auto& e : st.entries) {
        Sketch qs(e.users.begin(), e.users.begin() + std::min(p_, e.users.size()));
        s = bottom_p_merge(s, qs, p_);
    }
    st.window_sketch = std::move(s);
}

std::vector<std::string> WindowStore::expire_stale(std::uint64_t q) {
    std::vector<std::string> removed;
    if (q < w_) return removed;
    // A keyword is stale iff its most recent occurrence was at q - w or
    // earlier; such keywords appear in the touched list of that quantum.
    for (auto it = touched_at_.begin();
         it != touched_at_.end() && it->first + w_ <= q;) {
        for (const auto& k : it->second) {
            auto sit = stats_.find(k);
            if (sit != stats_.end() && sit->second.last_seen + w_ <= q) {
                removed.push_back(k);
                stats_.erase(sit);
            }
        }
        it = touched_at_.erase(it);
    }
    std::sort(removed.begin(), removed.end());
    removed.erase(std::unique(removed.begin(), removed.end()), removed.end());
    return removed;
}

const KeywordStats* WindowStore::find(const std::string& k) const {
    auto it = stats_.find(k);
    return it == stats_.end() ? nullptr : &it->second;
}

KeywordStats* WindowStore::find(const std::string& k) {
    auto it = stats_.find(k);
    return it == stats_.end() ? nullptr : &it->second;
}

double WindowStore::jaccard(const std::string& k1, const std::string& k2) const {
    const KeywordStats* a = find(k1);
    const KeywordStats* b = find(k2);
    const std::size_t na = a ? a->window_users.size() : 0;
    const std::size_t nb = b ? b->window_users.size() : 0;
    if (na == 0 && nb == 0) return 0.0;
    if (na == 0 || nb == 0) return 0.0;
    const auto* small = na <= nb ? a : b;
    const auto* big = na <= nb ? b : a;
    std::size_t inter = 0;
    for (const auto& [u, _] : small->window_users) {
        if (big->window_users.count(u)) ++inter;
    }
    return static_cast<double>(inter) / static_cast<double>(na + nb - inter);
}

std::size_t WindowStore::weight(const std::string& k) const {
    const KeywordStats* st = find(k);
    return st ? st->window_set_size() : 0;
}

std::size_t WindowStore::support(const std::vector<std::string>& keywords) const {
    std::unordered_set<std::uint64_t> users;
    for (const auto& k : keywords) {
        const KeywordStats* st = find(k);
        if (!st) continue;
        for (const auto& [u, _] : st->window_users) users.insert(u);
    }
    return users.size();
}

}  // namespace scd
