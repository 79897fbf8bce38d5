#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lcsx/core.hpp"

namespace lcsx {

struct BlockSpan {
    Pos begin = 0;  // 1-based, inclusive
    Pos end = 0;

    Pos length() const { return end - begin + 1; }
};

// A string cut into ceil(n / ceil(sqrt(n))) blocks of size ceil(sqrt(n)),
// the last possibly shorter, with a per-block frequency table (stored as a
// sorted (symbol, count) list to stay compact for large alphabets).
struct BlockDecomposition {
    SymbolString str;
    Pos block_size = 0;
    std::vector<BlockSpan> spans;
    std::vector<std::vector<std::pair<Symbol, std::uint32_t>>> freq;

    std::size_t block_count() const { return spans.size(); }
    std::uint32_t frequency_in_block(std::size_t block, Symbol c) const;
};

BlockDecomposition decompose_blocks(const SymbolString& s);

// Block-pair score table: chosen(i, j) is the symbol at a uniformly random
// position of s-block i (independent per cell), and score(i, j) is its
// minimum frequency across the two blocks. Block indices are 0-based here.
struct BlockScoreTable {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::uint32_t> score_;
    std::vector<Symbol> chosen_;

    std::uint32_t score(std::size_t i, std::size_t j) const { return score_[i * cols + j]; }
    Symbol chosen(std::size_t i, std::size_t j) const { return chosen_[i * cols + j]; }
};

BlockScoreTable build_score_table(const BlockDecomposition& s_blocks,
                                  const BlockDecomposition& t_blocks, std::uint64_t seed);

// Runs the block-to-block DP over the score table and rebuilds the matched
// chain: for every matched block pair, min-frequency many occurrences of
// the chosen symbol from both blocks. Requires |s| = |t|.
MatchChain block_to_block(const SymbolString& s, const SymbolString& t, std::uint64_t seed);

// DP value the chain length must equal; exposed for structural checks.
std::uint32_t block_to_block_dp_value(const BlockScoreTable& table);

// A block with every repeated symbol thinned to one occurrence, chosen
// uniformly and independently per symbol. parent_pos maps kept characters
// to 1-based positions within the source block.
struct SemiPermutation {
    SymbolString kept;
    std::vector<Pos> parent_pos;
};

SemiPermutation reduce_to_semi_permutation(const SymbolString& block, std::uint64_t seed);

// Random-shift matcher: reduces all blocks to semi-permutations, pairs
// block i with block ((i + r - 1) mod B) + 1 for a uniform r in [1, B],
// and keeps the longer of the pre-wrap and post-wrap chain runs.
MatchChain random_shift(const SymbolString& s, const SymbolString& t, std::uint64_t seed);

// Same with the shift fixed by the caller (r in [1, B]).
MatchChain random_shift_with(const SymbolString& s, const SymbolString& t, Pos r,
                             std::uint64_t seed);

// Better of block_to_block and random_shift, on independent derived seeds.
MatchChain combine_blockwise(const SymbolString& s, const SymbolString& t, std::uint64_t seed);

}  // namespace lcsx
