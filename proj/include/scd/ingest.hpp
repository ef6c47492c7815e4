#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace scd {

// One stream item. Keywords are already normalized: lowercased, stop words
// removed, deduplicated within the message, every token at least 2 chars.
struct Message {
    std::string user;
    std::int64_t ts = 0;
    std::vector<std::string> keywords;
};

// A consecutive batch of quantum_size messages (the last batch of a finite
// trace may be smaller).
struct QuantumBatch {
    std::uint64_t index = 0;
    std::vector<Message> messages;
};

class Stopwords {
public:
    Stopwords();  // minimal built-in English list
    explicit Stopwords(std::vector<std::string> words);
    static std::optional<Stopwords> load(const std::string& path);

    bool contains(std::string_view w) const {
        return set_.count(std::string(w)) > 0;
    }
    std::size_t size() const { return set_.size(); }

private:
    std::unordered_set<std::string> set_;
};

// Lowercase, strip punctuation (internal '.' between alnum and a single
// leading '#' survive), drop stop words and tokens shorter than 2 chars,
// dedup within the message preserving first-occurrence order.
std::vector<std::string> tokenize(std::string_view text, const Stopwords& stop);

// Parses one JSON-lines record {"user":str,"ts":int,"text":str}; unknown
// fields are ignored. On failure returns nullopt and fills *error.
std::optional<Message> parse_message(std::string_view line, const Stopwords& stop,
                                     std::string* error = nullptr);

// Groups messages into consecutive batches of quantum_size, preserving
// arrival order. flush() hands out the final partial batch, if any.
class QuantumBatcher {
public:
    explicit QuantumBatcher(std::size_t quantum_size) : size_(quantum_size) {}

    std::optional<QuantumBatch> push(Message m);
    std::optional<QuantumBatch> flush();
    std::uint64_t next_index() const { return next_index_; }

private:
    std::size_t size_;
    std::uint64_t next_index_ = 0;
    std::vector<Message> pending_;
};

}  // namespace scd
