#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace scd {

// Synthetic trace description: Zipf background chatter plus planted events.
struct TraceSpec {
    struct ExtraKeyword {
        std::string keyword;
        std::uint64_t from_quantum = 0;
    };
    struct PlantedEvent {
        std::vector<std::string> keywords;
        std::uint64_t start_quantum = 0;
        std::uint64_t duration = 1;
        std::size_t users_per_quantum = 8;
        double cooccurrence = 0.7;  // per-keyword inclusion probability
        std::vector<ExtraKeyword> extra_keywords;
    };

    std::uint64_t quanta = 10;
    std::size_t messages_per_quantum = 160;
    std::size_t background_vocab = 500;
    double background_zipf_s = 1.1;
    std::size_t background_users = 400;
    std::size_t background_keywords_per_message = 4;
    std::vector<PlantedEvent> events;

    static std::optional<TraceSpec> parse(std::istream& in, std::string* error = nullptr);
};

// Writes a JSON-lines message trace; byte-identical for identical (spec, seed).
// Each planted-event user posts a random >=2-keyword subset of the event set
// (single-keyword events post that keyword alone: a bursty distractor).
void gen_trace(const TraceSpec& spec, std::uint64_t seed, std::ostream& out);

}  // namespace scd
