#pragma once

#include "lcsx/core.hpp"

namespace lcsx {

// Exact LCS with witness via the classic quadratic recurrence. The witness
// is recovered divide-and-conquer style (Hirschberg), so memory stays
// O(min(|s|,|t|)) and inputs in the 10^4 range remain tractable.
MatchChain lcs_quadratic(const SymbolString& s, const SymbolString& t);

// Longest subsequence of a lexicographically sorted pair array that is
// strictly increasing in BOTH coordinates, with witness. Equal-a groups are
// processed with b descending so no two pairs sharing a coordinate chain.
// O(|m| log |m|) via a prefix-maximum Fenwick tree keyed on b.
MatchChain lis_pairs(const PairSequence& m);

// Exact LCS in O(n + R log n): enumerates the matching-pair array through
// an occurrence index (never materializing more than R pairs) and chains it
// with lis_pairs. Falls back to lcs_quadratic on dense inputs where the
// sparse path would be slower; results are identical either way.
MatchChain lcs_sparse(const SymbolString& s, const SymbolString& t);

}  // namespace lcsx
