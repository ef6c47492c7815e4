#include "scd/trace_gen.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "json.hpp"

namespace scd {

std::optional<TraceSpec> TraceSpec::parse(std::istream& in, std::string* error) {
    nlohmann::json j = nlohmann::json::parse(in, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        if (error) *error = "trace spec is not a JSON object";
        return std::nullopt;
    }
    TraceSpec s;
    try {
        s.quanta = j.value("quanta", s.quanta);
        s.messages_per_quantum = j.value("messages_per_quantum", s.messages_per_quantum);
        if (j.contains("background")) {
            const auto& b = j["background"];
            s.background_vocab = b.value("vocab_size", s.background_vocab);
            s.background_zipf_s = b.value("zipf_s", s.background_zipf_s);
            s.background_users = b.value("users", s.background_users);
            s.background_keywords_per_message =
                b.value("keywords_per_message", s.background_keywords_per_message);
        }
        for (const auto& e : j.value("events", nlohmann::json::array())) {
            PlantedEvent ev;
            ev.keywords = e.at("keywords").get<std::vector<std::string>>();
            ev.start_quantum = e.value("start_q", 0);
            ev.duration = e.value("duration", 1);
            ev.users_per_quantum = e.value("users_per_quantum", 8);
            ev.cooccurrence = e.value("cooccurrence", 0.7);
            for (const auto& x : e.value("extra_keywords", nlohmann::json::array())) {
                ev.extra_keywords.push_back(
                    {x.at("keyword").get<std::string>(),
                     x.value("from_q", std::uint64_t{0})});
            }
            if (ev.keywords.empty()) {
                if (error) *error = "planted event with empty keyword set";
                return std::nullopt;
            }
            s.events.push_back(std::move(ev));
        }
    } catch (const nlohmann::json::exception& ex) {
        if (error) *error = ex.what();
        return std::nullopt;
    }
    if (s.quanta < 1 || s.messages_per_quantum < 1) {
        if (error) *error = "quanta and messages_per_quantum must be >= 1";
        return std::nullopt;
    }
    return s;
}

namespace {

struct PendingMessage {
    std::string user;
    std::vector<std::string> words;
};

void write_message(std::ostream& out, const PendingMessage& m, std::int64_t ts) {
    out << "{\"user\":\"" << m.user << "\",\"ts\":" << ts << ",\"text\":\"";
    for (std::size_t i = 0; i < m.words.size(); ++i) {
        if (i) out << ' ';
        out << m.words[i];
    }
    out << "\"}\n";
}

}  // namespace

void gen_trace(const TraceSpec& spec, std::uint64_t seed, std::ostream& out) {
    std::mt19937_64 rng(seed);

    // Zipf CDF over the background vocabulary.
    std::vector<double> cdf(spec.background_vocab);
    double acc = 0.0;
    for (std::size_t i = 0; i < spec.background_vocab; ++i) {
        acc += 1.0 / std::pow(static_cast<double>(i + 1), spec.background_zipf_s);
        cdf[i] = acc;
    }
    auto zipf = [&]() {
        std::uniform_real_distribution<double> u(0.0, acc);
        const double x = u(rng);
        return std::lower_bound(cdf.begin(), cdf.end(), x) - cdf.begin();
    };

    std::int64_t ts = 0;
    for (std::uint64_t q = 0; q < spec.quanta; ++q) {
        std::vector<PendingMessage> msgs;

        for (std::size_t ei = 0; ei < spec.events.size(); ++ei) {
            const auto& ev = spec.events[ei];
            if (q < ev.start_quantum || q >= ev.start_quantum + ev.duration) continue;
            std::vector<std::string> kws = ev.keywords;
            for (const auto& x : ev.extra_keywords) {
                if (q >= x.from_quantum) kws.push_back(x.keyword);
            }
            std::uniform_real_distribution<double> u(0.0, 1.0);
            for (std::size_t ui = 0; ui < ev.users_per_quantum; ++ui) {
                PendingMessage m;
                m.user = "e" + std::to_string(ei) + "q" + std::to_string(q) + "u" +
                         std::to_string(ui);
                if (kws.size() == 1) {
                    m.words = kws;  // bursty singleton, no co-occurrence
                } else {
                    // Not all keywords are used by every user; keep >= 2.
                    while (m.words.size() < 2) {
                        m.words.clear();
                        for (const auto& k : kws) {
                            if (u(rng) < ev.cooccurrence) m.words.push_back(k);
                        }
                    }
                }
                msgs.push_back(std::move(m));
            }
        }

        while (msgs.size() < spec.messages_per_quantum) {
            PendingMessage m;
            std::uniform_int_distribution<std::size_t> ud(0, spec.background_users - 1);
            m.user = "b" + std::to_string(ud(rng));
            std::set<long> picked;
            for (std::size_t i = 0; i < spec.background_keywords_per_message; ++i) {
                picked.insert(zipf());
            }
            for (long w : picked) m.words.push_back("w" + std::to_string(w));
            msgs.push_back(std::move(m));
        }
        if (msgs.size() > spec.messages_per_quantum) msgs.resize(spec.messages_per_quantum);

        std::shuffle(msgs.begin(), msgs.end(), rng);
        for (const auto& m : msgs) write_message(out, m, ts++);
    }
}

}  // namespace scd
