#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>

namespace scd {

// Engine tunables. Nominal values follow the evaluation setup this engine
// was designed around: quantum of 160 messages, 30-quantum window,
// high-state threshold of 4 distinct users, EC threshold 0.20.
struct EngineConfig {
    std::size_t quantum_size = 160;   // messages per quantum (delta)
    std::size_t window_quanta = 30;   // window length w, in quanta
    std::size_t gamma = 4;            // distinct users/quantum for high state
    double lambda = 0.20;             // edge-correlation threshold in (0,1]
    std::size_t sketch_size = 0;      // bottom-p sketch size; 0 = derive
    double tau = 1.0;                 // rank-threshold multiplier
    std::uint64_t hash_seed = 0x9e3779b97f4a7c15ull;

    // p defaults to min(ceil(gamma/2), ceil(1/lambda)).
    std::size_t effective_sketch_size() const {
        if (sketch_size > 0) return sketch_size;
        std::size_t a = (gamma + 1) / 2;
        std::size_t b = static_cast<std::size_t>(std::ceil(1.0 / lambda));
        return std::max<std::size_t>(1, std::min(a, b));
    }

    // Returns an error message, or nullopt if the config is usable.
    std::optional<std::string> validate() const {
        if (quantum_size < 1) return "quantum size must be >= 1";
        if (window_quanta < 1) return "window length must be >= 1";
        if (gamma < 1) return "gamma must be >= 1";
        if (!(lambda > 0.0 && lambda <= 1.0)) return "lambda must be in (0,1]";
        if (tau < 0.0) return "tau must be >= 0";
        return std::nullopt;
    }
};

}  // namespace scd
