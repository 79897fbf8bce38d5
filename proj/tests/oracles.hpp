#pragma once

// Test-only reference implementations, deliberately brute force and kept
// independent of the library's algorithm paths.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "lcsx/core.hpp"

namespace lcsx::testing {

// LCS length by enumerating every subsequence of the shorter string.
// Exponential; callers keep min(|s|,|t|) <= ~14.
inline std::size_t lcs_exhaustive(const SymbolString& a, const SymbolString& b) {
    const SymbolString& small = a.size() <= b.size() ? a : b;
    const SymbolString& large = a.size() <= b.size() ? b : a;
    std::size_t best = 0;
    const auto count = small.size();
    for (std::uint64_t mask = 0; mask < (1ULL << count); ++mask) {
        std::size_t len = 0;
        std::size_t cursor = 0;
        bool ok = true;
        for (std::size_t k = 0; k < count && ok; ++k) {
            if (!(mask & (1ULL << k))) continue;
            const Symbol c = small.symbols[k];
            while (cursor < large.size() && large.symbols[cursor] != c) ++cursor;
            if (cursor == large.size()) {
                ok = false;
            } else {
                ++cursor;
                ++len;
            }
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

// Longest strictly-increasing-in-both-coordinates subsequence by subset
// enumeration; |pairs| <= ~16.
inline std::size_t lis_pairs_exhaustive(const PairSequence& pairs) {
    std::size_t best = 0;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs.size()); ++mask) {
        Pos prev_i = 0;
        Pos prev_j = 0;
        std::size_t len = 0;
        bool ok = true;
        for (std::size_t k = 0; k < pairs.size() && ok; ++k) {
            if (!(mask & (1ULL << k))) continue;
            if (pairs[k].i <= prev_i || pairs[k].j <= prev_j) {
                ok = false;
            } else {
                prev_i = pairs[k].i;
                prev_j = pairs[k].j;
                ++len;
            }
        }
        if (ok) best = std::max(best, len);
    }
    return best;
}

// Linear-scan counterpart of first_occurrence_after.
inline std::optional<Pos> first_after_scan(const SymbolString& s, Symbol symbol, Pos k) {
    for (Pos p = k + 1; p <= s.size(); ++p) {
        if (s.at(p) == symbol) return p;
    }
    return std::nullopt;
}

// Quadratic LCS length without witness; the independent length check for
// everything from the exact module up.
inline std::size_t lcs_length_dp(const SymbolString& a, const SymbolString& b) {
    std::vector<std::size_t> prev(b.size() + 1, 0);
    std::vector<std::size_t> row(b.size() + 1, 0);
    for (std::size_t i = 1; i <= a.size(); ++i) {
        prev.swap(row);
        for (std::size_t j = 1; j <= b.size(); ++j) {
            row[j] = a.symbols[i - 1] == b.symbols[j - 1] ? prev[j - 1] + 1
                                                          : std::max(row[j - 1], prev[j]);
        }
    }
    return row[b.size()];
}

}  // namespace lcsx::testing
