#include "scd/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>

#include "scd/oracle.hpp"

namespace scd {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void json_escape(std::ostream& os, const std::string& s) {
    for (char c : s) {
        switch (c) {
            case '"': os << "\\\""; break;
            case '\\': os << "\\\\"; break;
            case '\n': os << "\\n"; break;
            case '\t': os << "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    os << buf;
                } else {
                    os << c;
                }
        }
    }
}

void write_fixed(std::ostream& os, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    os << buf;
}

}  // namespace

void RunMetrics::write_json(std::ostream& os) const {
    auto series = [&](const char* name, const Series& s) {
        os << "\"" << name << "\":{\"min\":" << s.min << ",\"mean\":";
        write_fixed(os, s.mean);
        os << ",\"max\":" << s.max << "}";
    };
    os << "{\"messages\":" << messages << ",\"skipped_lines\":" << skipped_lines
       << ",\"quanta\":" << quanta << ",\"processing_seconds\":";
    write_fixed(os, processing_seconds);
    os << ",\"clustering_seconds\":";
    write_fixed(os, clustering_seconds);
    os << ",\"messages_per_sec\":";
    write_fixed(os, messages_per_sec);
    os << ",";
    series("akg_nodes", akg_nodes);
    os << ",";
    series("akg_edges", akg_edges);
    os << ",";
    series("clusters_live", clusters_live);
    os << ",";
    series("window_keywords", window_keywords);
    os << ",\"events\":{";
    bool first = true;
    for (const auto& [st, n] : events_by_status) {
        if (!first) os << ",";
        first = false;
        os << "\"" << st << "\":" << n;
    }
    os << "},\"suspect_events\":" << suspect_events << "}\n";
}

Engine::Engine(const EngineConfig& cfg, DetectorMode mode, std::ostream& events_out)
    : cfg_(cfg),
      mode_(mode),
      out_(&events_out),
      store_(cfg.window_quanta, cfg.effective_sketch_size(), cfg.hash_seed),
      akg_(),
      clusters_(akg_) {}

void Engine::process_batch(const QuantumBatch& batch) {
    const std::uint64_t q = batch.index;
    metrics_.messages += batch.messages.size();
    ++metrics_.quanta;

    QuantumDelta delta = store_.apply_quantum(batch);
    StateSets sets = classify_states(delta, cfg_.gamma,
                                     [&](const std::string& k) { return akg_.has_node(k); });
    auto pairs = candidate_pairs(sets, store_, akg_);
    EdgeDelta edel = refresh_edges(pairs, store_, cfg_.lambda, akg_, parallel_ec_);

    const auto t0 = Clock::now();
    ClusterDelta cdelta;

    // Snapshot cluster membership so the lazy-exit rule can see who left.
    std::set<std::string> in_cluster_before;
    if (mode_ == DetectorMode::Scp) {
        for (const auto& [_, c] : clusters_.clusters()) {
            for (const auto& [n, __] : c.node_degree) in_cluster_before.insert(n);
        }
    }

    apply_mutations(sets, edel, q, cdelta);

    // Sliding-window staleness: silent for w quanta means out, cluster or not.
    for (const auto& k : store_.expire_stale(q)) {
        if (akg_.has_node(k)) {
            if (mode_ == DetectorMode::Scp) cdelta.absorb(clusters_.node_deletion(k, q));
            akg_.remove_node(k);
        }
    }

    // Lazy AKG exit: a keyword that just left its last cluster stays only if
    // it was bursty this quantum.
    if (mode_ == DetectorMode::Scp) {
        for (const auto& k : in_cluster_before) {
            if (!akg_.has_node(k) || clusters_.node_in_any_cluster(k)) continue;
            auto it = delta.counts.find(k);
            const std::size_t count = it == delta.counts.end() ? 0 : it->second;
            if (count < cfg_.gamma) {
                akg_.remove_node(k);
                if (KeywordStats* st = store_.find(k)) st->state = KeywordState::Low;
            }
        }
        // Keep automaton states in sync with AKG membership.
        for (const auto& k : sets.set1) {
            if (KeywordStats* st = store_.find(k)) st->state = KeywordState::High;
        }
    }

    metrics_.clustering_seconds += seconds_since(t0);

    if (mode_ == DetectorMode::Scp) {
        emit_scp_events(cdelta, q);
        metrics_.clusters_live.add(clusters_.clusters().size());
    } else {
        run_bc_detector(q);
    }

    metrics_.akg_nodes.add(akg_.node_count());
    metrics_.akg_edges.add(akg_.edge_count());
    metrics_.window_keywords.add(store_.size());
}

void Engine::apply_mutations(const StateSets& sets, const EdgeDelta& edel,
                             std::uint64_t q, ClusterDelta& cdelta) {
    const bool scp = mode_ == DetectorMode::Scp;

    // Removals and EC refreshes first.
    for (const auto& [a, b] : edel.removals) {
        if (scp) cdelta.absorb(clusters_.edge_deletion(a, b, q));
        akg_.remove_edge(a, b);
    }
    for (const auto& [a, b, ec] : edel.updates) akg_.set_ec(a, b, ec);

    // New high-state keywords enter the AKG.
    std::set<std::string> new_nodes;
    for (const auto& k : sets.set1) {
        if (!akg_.has_node(k)) {
            new_nodes.insert(k);
            akg_.add_node(k);
            if (KeywordStats* st = store_.find(k)) st->state = KeywordState::High;
        }
    }

    // Edge additions: edges incident to a new node are attached when that
    // node is processed (in sorted order); an edge between two new nodes
    // belongs to the later of the two. The rest are plain edge additions.
    std::map<std::string, std::vector<std::pair<std::string, double>>> per_new;
    std::vector<std::tuple<std::string, std::string, double>> old_old;
    for (const auto& [a, b, ec] : edel.additions) {
        const bool na = new_nodes.count(a) > 0;
        const bool nb = new_nodes.count(b) > 0;
        if (na && nb) {
            per_new[std::max(a, b)].push_back({std::min(a, b), ec});
        } else if (na) {
            per_new[a].push_back({b, ec});
        } else if (nb) {
            per_new[b].push_back({a, ec});
        } else {
            old_old.push_back({a, b, ec});
        }
    }
    for (const auto& n : new_nodes) {
        auto it = per_new.find(n);
        if (it == per_new.end()) continue;
        for (const auto& [other, ec] : it->second) akg_.add_edge(n, other, ec);
        if (scp) cdelta.absorb(clusters_.node_addition(n, q));
    }
    for (const auto& [a, b, ec] : old_old) {
        akg_.add_edge(a, b, ec);
        if (scp) cdelta.absorb(clusters_.edge_addition(a, b, q));
    }
}

EventRecord Engine::snapshot_cluster(const Cluster& c, std::uint64_t q,
                                     const std::string& status) const {
    EventRecord rec;
    rec.cluster_id = c.id;
    rec.quantum = q;
    rec.status = status;
    rec.keywords = c.node_list();
    for (const auto& [a, b] : c.edges) {
        rec.edges.push_back({a, b, akg_.edge_ec(a, b)});
    }
    rec.support = store_.support(rec.keywords);
    rec.rank = rank_cluster(
        c, [&](const std::string& k) { return store_.weight(k); }, akg_);
    return rec;
}

void Engine::emit_scp_events(const ClusterDelta& cdelta, std::uint64_t q) {
    if (cdelta.empty()) return;
    const double threshold = report_threshold(cfg_.gamma, cfg_.lambda, cfg_.tau);

    // Gone clusters: absorbed by a merge, dissolved, or split apart.
    std::set<ClusterId> gone(cdelta.dissolved.begin(), cdelta.dissolved.end());
    for (const auto& [_, absorbed] : cdelta.merged) {
        gone.insert(absorbed.begin(), absorbed.end());
    }
    // Live affected clusters, with their delta-derived status.
    std::map<ClusterId, std::string> live;
    for (auto id : cdelta.created) live[id] = "new";
    for (auto id : cdelta.updated) live[id] = "updated";
    for (const auto& [survivor, _] : cdelta.merged) live[survivor] = "merged";
    for (const auto& [_, frags] : cdelta.splits) {
        for (auto id : frags) live[id] = "split";
    }
    for (auto it = live.begin(); it != live.end();) {
        if (gone.count(it->first) || !clusters_.find(it->first)) {
            it = live.erase(it);
        } else {
            ++it;
        }
    }

    for (const auto& [id, delta_status] : live) {
        const Cluster& c = *clusters_.find(id);
        const bool was_reported = reported_.count(id) > 0;
        // First public appearance reports as "new"; split fragments keep
        // their label so consumers can tie them to the parent's dissolution.
        std::string status = delta_status;
        if (!was_reported && delta_status != "split") status = "new";
        EventRecord rec = snapshot_cluster(c, q, status);
        history_.record(id, q, rec.rank, rec.keywords.size());
        if (rec.rank < threshold) continue;  // suppressed, history kept
        if (keyword_filter_ && !keyword_filter_(rec.keywords)) continue;
        emit_record(rec);
        reported_.insert(id);
    }

    for (auto id : gone) {
        if (!reported_.count(id)) continue;
        EventRecord rec;
        rec.cluster_id = id;
        rec.quantum = q;
        rec.status = "dissolved";
        emit_record(rec);
        reported_.erase(id);
    }
}

void Engine::run_bc_detector(std::uint64_t q) {
    const auto t0 = Clock::now();
    auto comps = oracle::bc_components_of_graph(akg_);
    metrics_.clustering_seconds += seconds_since(t0);
    metrics_.clusters_live.add(comps.size());

    const double threshold = report_threshold(cfg_.gamma, cfg_.lambda, cfg_.tau);
    for (const auto& cc : comps) {
        auto [it, inserted] = bc_ids_.emplace(cc.nodes, bc_next_id_);
        if (inserted) ++bc_next_id_;
        Cluster c;
        c.id = it->second;
        for (const auto& e : cc.edges) {
            c.edges.insert(e);
            ++c.node_degree[e.first];
            ++c.node_degree[e.second];
        }
        EventRecord rec = snapshot_cluster(c, q, inserted ? "new" : "updated");
        history_.record(c.id, q, rec.rank, rec.keywords.size());
        if (rec.rank < threshold) continue;
        if (keyword_filter_ && !keyword_filter_(rec.keywords)) continue;
        emit_record(rec);
    }
}

void Engine::emit_record(const EventRecord& rec) {
    std::ostream& os = *out_;
    os << "{\"q\":" << rec.quantum << ",\"id\":\"c" << rec.cluster_id << "\",\"status\":\""
       << rec.status << "\",\"rank\":";
    write_fixed(os, rec.rank);
    os << ",\"keywords\":[";
    for (std::size_t i = 0; i < rec.keywords.size(); ++i) {
        if (i) os << ",";
        os << "\"";
        json_escape(os, rec.keywords[i]);
        os << "\"";
    }
    os << "],\"support\":" << rec.support << ",\"edges\":[";
    for (std::size_t i = 0; i < rec.edges.size(); ++i) {
        if (i) os << ",";
        const auto& [a, b, ec] = rec.edges[i];
        os << "[\"";
        json_escape(os, a);
        os << "\",\"";
        json_escape(os, b);
        os << "\",";
        write_fixed(os, ec);
        os << "]";
    }
    os << "]";
    if (mode_ == DetectorMode::Bc) os << ",\"detector\":\"bc\"";
    os << "}\n";
    ++metrics_.events_by_status[rec.status];
}

void Engine::finalize() {
    for (const auto& [id, samples] : history_.by_id) {
        if (spuriousness_analysis(samples) == Spuriousness::Suspect) {
            ++metrics_.suspect_events;
        }
    }
}

RunMetrics run_replay(const EngineConfig& cfg, DetectorMode mode, const Stopwords& stop,
                      std::istream& in, std::ostream& events_out, bool parallel_ec) {
    Engine engine(cfg, mode, events_out);
    engine.set_parallel_ec(parallel_ec);
    QuantumBatcher batcher(cfg.quantum_size);

    const auto t0 = Clock::now();
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::string err;
        auto msg = parse_message(line, stop, &err);
        if (!msg) {
            ++engine.metrics().skipped_lines;
            continue;
        }
        if (auto batch = batcher.push(std::move(*msg))) engine.process_batch(*batch);
    }
    if (auto batch = batcher.flush()) engine.process_batch(*batch);
    engine.finalize();

    RunMetrics m = engine.metrics();
    m.processing_seconds = seconds_since(t0);
    m.messages_per_sec =
        m.processing_seconds > 0 ? static_cast<double>(m.messages) / m.processing_seconds : 0.0;
    return m;
}

}  // namespace scd
