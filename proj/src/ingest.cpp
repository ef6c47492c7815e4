#include "scd/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <unordered_set>

#include "json.hpp"

namespace scd {

namespace {

const char* kDefaultStopwords[] = {
    "a",    "an",   "and",  "are",  "as",   "at",   "be",    "but",  "by",
    "for",  "from", "has",  "have", "he",   "her",  "his",   "i",    "in",
    "is",   "it",   "its",  "me",   "my",   "no",   "not",   "of",   "on",
    "or",   "our",  "she",  "so",   "that", "the",  "their", "them", "they",
    "this", "to",   "was",  "we",   "were", "will", "with",  "you",  "your",
    "rt",   "via",  "am",   "do",   "did",  "had",  "if",    "into", "just",
    "been", "being", "what", "when", "who",  "how",  "than",  "then", "there",
};

bool is_word_char(unsigned char c) { return std::isalnum(c) != 0; }

}  // namespace

Stopwords::Stopwords() {
    for (const char* w : kDefaultStopwords) set_.insert(w);
}

Stopwords::Stopwords(std::vector<std::string> words) {
    for (auto& w : words) set_.insert(std::move(w));
}

std::optional<Stopwords> Stopwords::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::vector<std::string> words;
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (!line.empty()) words.push_back(line);
    }
    return Stopwords(std::move(words));
}

std::vector<std::string> tokenize(std::string_view text, const Stopwords& stop) {
    std::vector<std::string> out;
    std::unordered_set<std::string> seen;
    std::size_t i = 0;
    const std::size_t n = text.size();
    while (i < n) {
        while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        std::size_t start = i;
        while (i < n && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) continue;
        std::string_view raw = text.substr(start, i - start);

        std::string tok;
        tok.reserve(raw.size());
        if (raw.front() == '#') tok.push_back('#');
        for (std::size_t j = 0; j < raw.size(); ++j) {
            unsigned char c = static_cast<unsigned char>(raw[j]);
            if (is_word_char(c)) {
                tok.push_back(static_cast<char>(std::tolower(c)));
            } else if (c == '.' && j > 0 && j + 1 < raw.size() &&
                       is_word_char(static_cast<unsigned char>(raw[j - 1])) &&
                       is_word_char(static_cast<unsigned char>(raw[j + 1]))) {
                tok.push_back('.');  // internal dot, e.g. "5.9"
            }
        }
        if (tok.size() < 2 || tok == "#" ) continue;
        if (stop.contains(tok)) continue;
        if (seen.insert(tok).second) out.push_back(std::move(tok));
    }
    return out;
}

std::optional<Message> parse_message(std::string_view line, const Stopwords& stop,
                                     std::string* error) {
    nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        if (error) *error = "not a JSON object";
        return std::nullopt;
    }
    if (!j.contains("user") || !j["user"].is_string()) {
        if (error) *error = "missing string field 'user'";
        return std::nullopt;
    }
    if (!j.contains("ts") || !j["ts"].is_number_integer()) {
        if (error) *error = "missing integer field 'ts'";
        return std::nullopt;
    }
    if (!j.contains("text") || !j["text"].is_string()) {
        if (error) *error = "missing string field 'text'";
        return std::nullopt;
    }
    Message m;
    m.user = j["user"].get<std::string>();
    m.ts = j["ts"].get<std::int64_t>();
    m.keywords = tokenize(j["text"].get<std::string>(), stop);
    return m;
}

std::optional<QuantumBatch> QuantumBatcher::push(Message m) {
    pending_.push_back(std::move(m));
    if (pending_.size() < size_) return std::nullopt;
    QuantumBatch b{next_index_++, std::move(pending_)};
    pending_.clear();
    return b;
}

std::optional<QuantumBatch> QuantumBatcher::flush() {
    if (pending_.empty()) return std::nullopt;
    QuantumBatch b{next_index_++, std::move(pending_)};
    pending_.clear();
    return b;
}

}  // namespace scd
