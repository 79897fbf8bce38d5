#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace lcsx {

using Symbol = std::uint32_t;
// Positions are 1-based throughout; 0 acts as the "before everything"
// sentinel in first_occurrence_after.
using Pos = std::uint32_t;

constexpr Pos kNoPos = 0;

// A string over a dense integer alphabet. alphabet_size bounds every
// symbol id; ingestion (see instances/cli) maps arbitrary tokens to ids.
struct SymbolString {
    std::vector<Symbol> symbols;
    Symbol alphabet_size = 0;

    SymbolString() = default;
    SymbolString(std::vector<Symbol> syms, Symbol alphabet)
        : symbols(std::move(syms)), alphabet_size(alphabet) {}

    std::size_t size() const { return symbols.size(); }
    bool empty() const { return symbols.empty(); }
    Symbol at(Pos p) const { return symbols[p - 1]; }
};

// One match between position i of the first string and position j of the
// second. A chain of these, strictly increasing in both coordinates, is a
// common-subsequence witness.
struct MatchPair {
    Pos i = 0;
    Pos j = 0;

    friend bool operator==(const MatchPair&, const MatchPair&) = default;
};

using MatchChain = std::vector<MatchPair>;

// Matching pairs sorted lexicographically: (a,b) before (a',b') iff a<a'
// or (a=a' and b<b').
using PairSequence = std::vector<MatchPair>;

// Per-symbol sorted occurrence positions of one string.
struct OccurrenceIndex {
    std::vector<std::vector<Pos>> by_symbol;
    Pos length = 0;

    const std::vector<Pos>& positions(Symbol c) const {
        static const std::vector<Pos> kEmpty;
        if (c >= by_symbol.size()) return kEmpty;
        return by_symbol[c];
    }
};

struct FrequencyTable {
    std::vector<std::uint32_t> counts;

    std::uint32_t count(Symbol c) const {
        return c < counts.size() ? counts[c] : 0;
    }
};

// Pads the shorter string with a fresh sentinel symbol so both have equal
// length. The sentinel id is allocated past both alphabets, so it can
// never participate in a match and the LCS value is unchanged.
std::pair<SymbolString, SymbolString> pad_pair(const SymbolString& s, const SymbolString& t);

OccurrenceIndex build_occurrence_index(const SymbolString& s);

FrequencyTable build_frequency_table(const SymbolString& s);

// Smallest position p > k with string[p] = symbol, or nullopt.
std::optional<Pos> first_occurrence_after(const OccurrenceIndex& idx, Symbol symbol, Pos k);

// R = |{(i,j) : s_i = t_j}|, in O(|s| + |t|).
std::uint64_t count_matching_pairs(const SymbolString& s, const SymbolString& t);

// True iff the chain is strictly increasing in both coordinates, in range,
// and every pair matches equal symbols. Universal postcondition check for
// every approximator in this library.
bool validate_chain(const SymbolString& s, const SymbolString& t, const MatchChain& chain);

// Rewrites chain coordinates through position maps (local 1-based position
// -> parent position). Either map may be null to leave that side unchanged.
MatchChain remap_chain(const MatchChain& chain, const std::vector<Pos>* map_i,
                       const std::vector<Pos>* map_j);

}  // namespace lcsx
