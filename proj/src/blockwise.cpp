#include "lcsx/blockwise.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

#include "lcsx/exact.hpp"
#include "lcsx/rng.hpp"

namespace lcsx {

namespace {

constexpr std::uint64_t kScoreStream = 7;
constexpr std::uint64_t kShiftStream = 8;
constexpr std::uint64_t kReduceStreamS = 9;
constexpr std::uint64_t kReduceStreamT = 10;
constexpr std::uint64_t kCombineBlockStream = 11;
constexpr std::uint64_t kCombineShiftStream = 12;

}  // namespace

std::uint32_t BlockDecomposition::frequency_in_block(std::size_t block, Symbol c) const {
    const auto& table = freq[block];
    auto it = std::lower_bound(table.begin(), table.end(), std::make_pair(c, 0u),
                               [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
    if (it == table.end() || it->first != c) return 0;
    return it->second;
}

BlockDecomposition decompose_blocks(const SymbolString& s) {
    if (s.empty()) throw std::invalid_argument("decompose_blocks: empty string");
    BlockDecomposition d;
    d.str = s;
    const auto n = static_cast<Pos>(s.size());
    d.block_size = static_cast<Pos>(std::ceil(std::sqrt(static_cast<double>(n))));
    for (Pos begin = 1; begin <= n; begin += d.block_size) {
        const Pos end = std::min<Pos>(begin + d.block_size - 1, n);
        d.spans.push_back({begin, end});
        std::vector<std::pair<Symbol, std::uint32_t>> table;
        for (Pos p = begin; p <= end; ++p) table.emplace_back(s.at(p), 1);
        std::sort(table.begin(), table.end());
        std::vector<std::pair<Symbol, std::uint32_t>> merged;
        for (const auto& entry : table) {
            if (!merged.empty() && merged.back().first == entry.first) {
                ++merged.back().second;
            } else {
                merged.push_back(entry);
            }
        }
        d.freq.push_back(std::move(merged));
    }
    return d;
}

BlockScoreTable build_score_table(const BlockDecomposition& s_blocks,
                                  const BlockDecomposition& t_blocks, std::uint64_t seed) {
    if (s_blocks.block_count() == 0 || t_blocks.block_count() == 0) {
        throw std::invalid_argument("build_score_table: empty decomposition");
    }
    BlockScoreTable table;
    table.rows = s_blocks.block_count();
    table.cols = t_blocks.block_count();
    table.score_.resize(table.rows * table.cols);
    table.chosen_.resize(table.rows * table.cols);
    for (std::size_t i = 0; i < table.rows; ++i) {
        const BlockSpan span = s_blocks.spans[i];
        for (std::size_t j = 0; j < table.cols; ++j) {
            // Per-cell derived seed keeps cells independent and the whole
            // table reproducible regardless of evaluation order.
            Rng rng(derive_seed(seed, kScoreStream, i, j));
            const Pos pick = span.begin + static_cast<Pos>(rng.uniform_below(span.length()));
            const Symbol c = s_blocks.str.at(pick);
            table.chosen_[i * table.cols + j] = c;
            table.score_[i * table.cols + j] =
                std::min(s_blocks.frequency_in_block(i, c), t_blocks.frequency_in_block(j, c));
        }
    }
    return table;
}

namespace {

std::vector<std::uint32_t> fill_block_dp(const BlockScoreTable& table) {
    const std::size_t rows = table.rows;
    const std::size_t cols = table.cols;
    std::vector<std::uint32_t> dp((rows + 1) * (cols + 1), 0);
    const auto at = [cols](std::size_t i, std::size_t j) { return i * (cols + 1) + j; };
    for (std::size_t i = 1; i <= rows; ++i) {
        for (std::size_t j = 1; j <= cols; ++j) {
            const std::uint32_t take = table.score(i - 1, j - 1) + dp[at(i - 1, j - 1)];
            dp[at(i, j)] = std::max({dp[at(i, j - 1)], dp[at(i - 1, j)], take});
        }
    }
    return dp;
}

}  // namespace

std::uint32_t block_to_block_dp_value(const BlockScoreTable& table) {
    return fill_block_dp(table)[(table.rows + 1) * (table.cols + 1) - 1];
}

MatchChain block_to_block(const SymbolString& s, const SymbolString& t, std::uint64_t seed) {
    if (s.size() != t.size()) throw std::invalid_argument("block_to_block: lengths differ");
    if (s.empty()) return {};
    const BlockDecomposition s_blocks = decompose_blocks(s);
    const BlockDecomposition t_blocks = decompose_blocks(t);
    const BlockScoreTable table = build_score_table(s_blocks, t_blocks, seed);
    const std::vector<std::uint32_t> dp = fill_block_dp(table);
    const std::size_t cols = table.cols;
    const auto at = [cols](std::size_t i, std::size_t j) { return i * (cols + 1) + j; };

    // Matched block pairs, recovered back-to-front. Diagonal preferred on
    // ties so a fixed seed always yields the same witness.
    struct Matched {
        std::size_t i;
        std::size_t j;
    };
    std::vector<Matched> matched;
    std::size_t i = table.rows;
    std::size_t j = table.cols;
    while (i > 0 && j > 0) {
        if (dp[at(i, j)] == table.score(i - 1, j - 1) + dp[at(i - 1, j - 1)]) {
            if (table.score(i - 1, j - 1) > 0) matched.push_back({i - 1, j - 1});
            --i;
            --j;
        } else if (dp[at(i, j)] == dp[at(i - 1, j)]) {
            --i;
        } else {
            --j;
        }
    }
    std::reverse(matched.begin(), matched.end());

    MatchChain chain;
    for (const Matched& m : matched) {
        const Symbol c = table.chosen(m.i, m.j);
        std::uint32_t want = table.score(m.i, m.j);
        const BlockSpan si = s_blocks.spans[m.i];
        const BlockSpan tj = t_blocks.spans[m.j];
        std::vector<Pos> s_occ;
        std::vector<Pos> t_occ;
        for (Pos p = si.begin; p <= si.end && s_occ.size() < want; ++p) {
            if (s.at(p) == c) s_occ.push_back(p);
        }
        for (Pos p = tj.begin; p <= tj.end && t_occ.size() < want; ++p) {
            if (t.at(p) == c) t_occ.push_back(p);
        }
        for (std::uint32_t k = 0; k < want; ++k) chain.push_back({s_occ[k], t_occ[k]});
    }
    return chain;
}

SemiPermutation reduce_to_semi_permutation(const SymbolString& block, std::uint64_t seed) {
    std::unordered_map<Symbol, std::uint32_t> total;
    for (Symbol c : block.symbols) ++total[c];

    // Per-symbol derived seed: the uniform pick is independent of map
    // iteration order and of the other symbols.
    std::unordered_map<Symbol, std::uint32_t> wanted;
    wanted.reserve(total.size());
    for (const auto& [c, count] : total) {
        if (count == 1) {
            wanted.emplace(c, 0);
        } else {
            Rng rng(derive_seed(seed, c));
            wanted.emplace(c, static_cast<std::uint32_t>(rng.uniform_below(count)));
        }
    }

    SemiPermutation result;
    result.kept.alphabet_size = block.alphabet_size;
    std::unordered_map<Symbol, std::uint32_t> seen;
    seen.reserve(total.size());
    for (Pos p = 1; p <= block.size(); ++p) {
        const Symbol c = block.at(p);
        if (seen[c]++ == wanted[c]) {
            result.kept.symbols.push_back(c);
            result.parent_pos.push_back(p);
        }
    }
    return result;
}

namespace {

// Exact LCS of two semi-permutation blocks after remapping their symbols to
// a dense shared alphabet, keeping the sparse path cheap even when the
// global alphabet is large. Output positions are block-local.
MatchChain dense_block_lcs(const SemiPermutation& a, const SemiPermutation& b) {
    std::vector<Symbol> symbols;
    symbols.reserve(a.kept.size() + b.kept.size());
    symbols.insert(symbols.end(), a.kept.symbols.begin(), a.kept.symbols.end());
    symbols.insert(symbols.end(), b.kept.symbols.begin(), b.kept.symbols.end());
    std::sort(symbols.begin(), symbols.end());
    symbols.erase(std::unique(symbols.begin(), symbols.end()), symbols.end());
    const auto dense = [&symbols](Symbol c) {
        return static_cast<Symbol>(std::lower_bound(symbols.begin(), symbols.end(), c) -
                                   symbols.begin());
    };
    SymbolString da;
    SymbolString db;
    da.alphabet_size = db.alphabet_size = static_cast<Symbol>(symbols.size());
    for (Symbol c : a.kept.symbols) da.symbols.push_back(dense(c));
    for (Symbol c : b.kept.symbols) db.symbols.push_back(dense(c));
    return lcs_sparse(da, db);
}

MatchChain shift_chain(const SymbolString& s, const SymbolString& t, Pos r,
                       std::uint64_t reduce_seed_s, std::uint64_t reduce_seed_t) {
    const BlockDecomposition s_blocks = decompose_blocks(s);
    const BlockDecomposition t_blocks = decompose_blocks(t);
    const auto blocks = static_cast<Pos>(s_blocks.block_count());
    if (r < 1 || r > blocks) throw std::invalid_argument("random_shift: r outside [1, B]");

    std::vector<SemiPermutation> s_semi(blocks);
    std::vector<SemiPermutation> t_semi(blocks);
    for (Pos b = 0; b < blocks; ++b) {
        const BlockSpan span_s = s_blocks.spans[b];
        SymbolString block_s{{s.symbols.begin() + span_s.begin - 1, s.symbols.begin() + span_s.end},
                             s.alphabet_size};
        s_semi[b] = reduce_to_semi_permutation(block_s, derive_seed(reduce_seed_s, b));
        const BlockSpan span_t = t_blocks.spans[b];
        SymbolString block_t{{t.symbols.begin() + span_t.begin - 1, t.symbols.begin() + span_t.end},
                             t.alphabet_size};
        t_semi[b] = reduce_to_semi_permutation(block_t, derive_seed(reduce_seed_t, b));
    }

    // q_i in global coordinates; partner index via the 1-based modulus that
    // maps B to B, so the pre-wrap run pairs i with i + r and the post-wrap
    // run pairs i with i + r - B.
    MatchChain before_wrap;
    MatchChain after_wrap;
    for (Pos i = 1; i <= blocks; ++i) {
        const Pos partner = ((i + r - 1) % blocks) + 1;
        const SemiPermutation& left = s_semi[i - 1];
        const SemiPermutation& right = t_semi[partner - 1];
        if (left.kept.empty() || right.kept.empty()) continue;
        MatchChain local = dense_block_lcs(left, right);
        const Pos s_offset = s_blocks.spans[i - 1].begin - 1;
        const Pos t_offset = t_blocks.spans[partner - 1].begin - 1;
        MatchChain& run = (i <= blocks - r) ? before_wrap : after_wrap;
        for (const MatchPair& p : local) {
            run.push_back({s_offset + left.parent_pos[p.i - 1], t_offset + right.parent_pos[p.j - 1]});
        }
    }
    return after_wrap.size() > before_wrap.size() ? after_wrap : before_wrap;
}

}  // namespace

MatchChain random_shift_with(const SymbolString& s, const SymbolString& t, Pos r,
                             std::uint64_t seed) {
    if (s.size() != t.size()) throw std::invalid_argument("random_shift: lengths differ");
    if (s.empty()) return {};
    return shift_chain(s, t, r, derive_seed(seed, kReduceStreamS),
                       derive_seed(seed, kReduceStreamT));
}

MatchChain random_shift(const SymbolString& s, const SymbolString& t, std::uint64_t seed) {
    if (s.size() != t.size()) throw std::invalid_argument("random_shift: lengths differ");
    if (s.empty()) return {};
    const auto n = static_cast<Pos>(s.size());
    const auto block_size = static_cast<Pos>(std::ceil(std::sqrt(static_cast<double>(n))));
    const Pos blocks = (n + block_size - 1) / block_size;
    Rng rng(derive_seed(seed, kShiftStream));
    const Pos r = 1 + static_cast<Pos>(rng.uniform_below(blocks));
    return random_shift_with(s, t, r, seed);
}

MatchChain combine_blockwise(const SymbolString& s, const SymbolString& t, std::uint64_t seed) {
    MatchChain first = block_to_block(s, t, derive_seed(seed, kCombineBlockStream));
    MatchChain second = random_shift(s, t, derive_seed(seed, kCombineShiftStream));
    return first.size() >= second.size() ? first : second;
}

}  // namespace lcsx
