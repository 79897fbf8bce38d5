#pragma once

#include <cstdint>
#include <vector>

#include "lcsx/blockwise.hpp"
#include "lcsx/core.hpp"

namespace lcsx {

// True iff s is a permutation of 0..m-1 with m = s.size().
bool is_permutation(const SymbolString& s);

SymbolString random_permutation(Symbol m, std::uint64_t seed);

// Positions of p2 partitioned into antichain levels: level of an element is
// the length of the longest chain (common subsequence with p1) ending at
// it. The level count equals the exact LCS of the two permutations, and
// within a level elements appear in strictly decreasing p1-order.
struct AntichainDecomposition {
    std::vector<std::vector<Pos>> levels;  // 1-based positions into p2, ascending
};

AntichainDecomposition dilworth_decompose(const SymbolString& p1, const SymbolString& p2);

struct TripleProductResult {
    std::uint64_t lcs_12 = 0;
    std::uint64_t lcs_23 = 0;
    std::uint64_t lcs_31 = 0;
    bool holds = false;  // product >= m
};

TripleProductResult check_triple_product(const SymbolString& p1, const SymbolString& p2,
                                         const SymbolString& p3);

// Completes semi-permutation blocks to full permutations of their shared
// symbol universe: a mask is grown by appending unseen symbols from
// sample_count randomly chosen blocks (in-block order), leftovers appended
// in ascending id order; each block is then extended with its missing
// symbols in mask order. The original kept sequence stays as a prefix.
struct RefineResult {
    std::vector<SymbolString> completed;
    SymbolString mask;
    std::vector<Symbol> universe;  // sorted distinct symbols being completed over
};

// universe defaults to the distinct symbols across the given blocks; pass
// one explicitly to complete several block sets over a shared alphabet.
RefineResult refine_to_complete(const std::vector<SemiPermutation>& blocks,
                                std::size_t sample_count, std::uint64_t seed,
                                const std::vector<Symbol>* universe = nullptr);

std::size_t default_refine_sample_count(std::size_t universe_size);

// Desk-scale measurement companion: block-decomposes both strings, thins
// blocks to semi-permutations, refines them to complete permutations, and
// reports the pairwise block LCS matrix plus its means. No pass/fail.
struct MaskExperimentStats {
    std::size_t block_count = 0;
    std::size_t universe_size = 0;
    double mean_pairwise = 0.0;
    double mean_diagonal = 0.0;
    std::vector<std::vector<std::uint32_t>> pair_lcs;  // block_count x block_count
    std::vector<SymbolString> refined_s;               // complete permutations per block
    std::vector<SymbolString> refined_t;
};

MaskExperimentStats mask_experiment(const SymbolString& s, const SymbolString& t,
                                    std::uint64_t seed);

}  // namespace lcsx
