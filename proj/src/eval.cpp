#include "scd/eval.hpp"

#include <cstdio>
#include <map>
#include <ostream>
#include <set>
#include <vector>

#include "json.hpp"

namespace scd {

namespace {

struct Label {
    std::set<std::string> keywords;
    std::uint64_t q_start = 0;
    std::uint64_t q_end = 0;
};

struct Emission {
    std::uint64_t q = 0;
    std::set<std::string> keywords;
};

bool matches(const Emission& e, const Label& l) {
    if (e.q < l.q_start || e.q > l.q_end) return false;
    std::size_t hit = 0;
    for (const auto& k : l.keywords) {
        if (e.keywords.count(k)) ++hit;
    }
    return 2 * hit >= l.keywords.size();
}

}  // namespace

void PrResult::write_json(std::ostream& os) const {
    char buf[64];
    os << "{\"precision\":";
    std::snprintf(buf, sizeof(buf), "%.6f", precision);
    os << buf << ",\"recall\":";
    std::snprintf(buf, sizeof(buf), "%.6f", recall);
    os << buf << ",\"matched_emissions\":" << matched_emissions
       << ",\"total_emissions\":" << total_emissions
       << ",\"matched_labels\":" << matched_labels << ",\"total_labels\":" << total_labels;
    if (empty_emissions) os << ",\"warning\":\"no emissions\"";
    os << "}\n";
}

std::optional<PrResult> eval_pr(std::istream& events, std::istream& labels,
                                std::string* error) {
    std::vector<Label> label_list;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(labels, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object() || !j.contains("keywords")) {
            if (error) *error = "bad label at line " + std::to_string(line_no);
            return std::nullopt;
        }
        Label l;
        for (const auto& k : j["keywords"]) l.keywords.insert(k.get<std::string>());
        l.q_start = j.value("q_start", 0);
        l.q_end = j.value("q_end", 0);
        if (l.keywords.empty()) {
            if (error) *error = "label with no keywords at line " + std::to_string(line_no);
            return std::nullopt;
        }
        label_list.push_back(std::move(l));
    }

    // cluster id -> all its non-dissolved emissions
    std::map<std::string, std::vector<Emission>> by_id;
    line_no = 0;
    while (std::getline(events, line)) {
        ++line_no;
        if (line.empty()) continue;
        nlohmann::json j = nlohmann::json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            if (error) *error = "bad event at line " + std::to_string(line_no);
            return std::nullopt;
        }
        if (j.value("status", "") == "dissolved") continue;
        Emission e;
        e.q = j.value("q", 0);
        for (const auto& k : j.value("keywords", nlohmann::json::array())) {
            e.keywords.insert(k.get<std::string>());
        }
        by_id[j.value("id", "")].push_back(std::move(e));
    }

    PrResult r;
    r.total_labels = label_list.size();
    r.total_emissions = by_id.size();
    std::vector<bool> label_hit(label_list.size(), false);
    for (const auto& [id, ems] : by_id) {
        bool id_hit = false;
        for (const auto& e : ems) {
            for (std::size_t li = 0; li < label_list.size(); ++li) {
                if (matches(e, label_list[li])) {
                    id_hit = true;
                    label_hit[li] = true;
                }
            }
        }
        if (id_hit) ++r.matched_emissions;
    }
    for (bool h : label_hit) {
        if (h) ++r.matched_labels;
    }

    if (r.total_emissions == 0) {
        r.empty_emissions = true;
        r.precision = 1.0;  // convention for an empty emission stream
    } else {
        r.precision = static_cast<double>(r.matched_emissions) /
                      static_cast<double>(r.total_emissions);
    }
    r.recall = r.total_labels == 0
                   ? 1.0
                   : static_cast<double>(r.matched_labels) /
                         static_cast<double>(r.total_labels);
    return r;
}

}  // namespace scd
