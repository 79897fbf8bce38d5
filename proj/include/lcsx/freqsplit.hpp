#pragma once

#include <cstdint>
#include <vector>

#include "lcsx/core.hpp"

namespace lcsx {

// A string partitioned by symbol frequency: low holds the characters whose
// symbol occurs at most tau times in the parent, high the rest. Position
// maps point back into the parent (1-based).
struct FrequencySplit {
    SymbolString low;
    SymbolString high;
    std::vector<Pos> low_map;
    std::vector<Pos> high_map;
    std::uint32_t tau = 0;
};

FrequencySplit split_by_frequency(const SymbolString& t, std::uint32_t tau);

struct FrequencySplitResult {
    MatchChain best;           // longest of the three mixed subinstance chains,
                               // in parent coordinates
    SymbolString residual_s;   // high/high subinstance, handed to the blockwise stage
    SymbolString residual_t;
    std::vector<Pos> residual_s_map;
    std::vector<Pos> residual_t_map;
    std::uint32_t tau = 0;
};

// Splits both strings at tau = ceil(n^{1/2-eta}), approximates the three
// mixed subinstances with sampled_pairs at p = min(1, n/R_sub), and emits
// the high/high residual. Throws std::invalid_argument for eta outside
// [0, 1/2] or |s| != |t|.
FrequencySplitResult frequency_split_approx(const SymbolString& s, const SymbolString& t,
                                            double eta, std::uint64_t seed);

}  // namespace lcsx
