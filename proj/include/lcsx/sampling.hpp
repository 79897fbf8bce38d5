#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "lcsx/core.hpp"

namespace lcsx {

// Column-capped LCS table: cell(i, j) is the smallest end position in t
// such that the first i characters of s* admit a common subsequence of
// length j ending there, or kInfinity if none does.
struct TruncatedDpTable {
    static constexpr Pos kInfinity = std::numeric_limits<Pos>::max();

    std::size_t rows = 0;  // |s*|, cells span rows 0..rows
    Pos cap = 0;           // column bound, cells span columns 0..cap

    Pos cell(std::size_t i, Pos j) const { return cells_[i * (cap + 1) + j]; }
    Pos& cell(std::size_t i, Pos j) { return cells_[i * (cap + 1) + j]; }

    std::vector<Pos> cells_;
};

TruncatedDpTable fill_truncated_table(const SymbolString& s_star, const OccurrenceIndex& t_index,
                                      Pos cap);

// Exact LCS of (s_star, t) when it fits under cap, otherwise a common
// subsequence of length exactly cap. O(|s_star| * cap * log |t|).
MatchChain truncated_dp_lcs(const SymbolString& s_star, const SymbolString& t, Pos cap);

// Character-sampling baseline: keeps each character of s with probability
// n^{-1/2} and runs the capped DP at cap = ceil(sqrt(n)). Chain positions
// refer to the original s.
MatchChain sqrt_baseline(const SymbolString& s, const SymbolString& t, std::uint64_t seed);

// Solution-size-bounded variant: sampling rate n^{-(1-delta)/2} and cap
// ceil(n^{(1-delta)/2}). delta = 0 collapses to sqrt_baseline exactly.
// Throws std::invalid_argument for delta outside [0, 1].
MatchChain bounded_solution(const SymbolString& s, const SymbolString& t, double delta,
                            std::uint64_t seed);

// Indices from 1..total kept independently with probability p, generated
// by cumulative geometric gaps without visiting skipped indices.
std::vector<std::uint64_t> geometric_skip_indices(std::uint64_t total, double p,
                                                  std::uint64_t seed);

// The k-th matching pair in lexicographic order, via binary search on the
// prefix-sum array prefix[i] = sum of fr_{s_l}(t) over l <= i.
// Throws std::out_of_range when k is not in [1, R].
MatchPair locate_kth_match(const SymbolString& s, const OccurrenceIndex& t_index,
                           const std::vector<std::uint64_t>& prefix, std::uint64_t k);

std::vector<std::uint64_t> build_match_prefix(const SymbolString& s, const SymbolString& t);

// Matching-pair sampler: keeps each of the R pairs with probability p and
// chains the survivors with lis_pairs. p = 1 reproduces the exact LCS.
MatchChain sampled_pairs(const SymbolString& s, const SymbolString& t, double p,
                         std::uint64_t seed);

}  // namespace lcsx
