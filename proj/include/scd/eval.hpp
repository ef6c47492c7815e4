#pragma once

#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <string>

namespace scd {

// Precision/recall of an emitted event stream against planted ground truth.
// An emission matches a label iff >= 50% of the label's keywords appear in
// the event's keyword list and the event's quantum falls inside the label
// interval. Emissions are deduplicated by cluster id.
struct PrResult {
    double precision = 1.0;
    double recall = 0.0;
    std::size_t matched_emissions = 0;
    std::size_t total_emissions = 0;  // distinct cluster ids
    std::size_t matched_labels = 0;
    std::size_t total_labels = 0;
    bool empty_emissions = false;  // precision reported as 1.0 by convention

    void write_json(std::ostream& os) const;
};

// events: JSON lines as written by the engine.
// labels: JSON lines {"keywords":[...],"q_start":int,"q_end":int}.
std::optional<PrResult> eval_pr(std::istream& events, std::istream& labels,
                                std::string* error = nullptr);

}  // namespace scd
