#include "lcsx/verify.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "lcsx/exact.hpp"
#include "lcsx/rng.hpp"

namespace lcsx {

bool is_permutation(const SymbolString& s) {
    std::vector<bool> seen(s.size(), false);
    for (Symbol c : s.symbols) {
        if (c >= s.size() || seen[c]) return false;
        seen[c] = true;
    }
    return true;
}

SymbolString random_permutation(Symbol m, std::uint64_t seed) {
    SymbolString p;
    p.alphabet_size = m;
    p.symbols.resize(m);
    for (Symbol c = 0; c < m; ++c) p.symbols[c] = c;
    Rng rng(seed);
    for (Symbol k = m; k > 1; --k) {
        const auto swap_with = static_cast<Symbol>(rng.uniform_below(k));
        std::swap(p.symbols[k - 1], p.symbols[swap_with]);
    }
    return p;
}

AntichainDecomposition dilworth_decompose(const SymbolString& p1, const SymbolString& p2) {
    if (!is_permutation(p1) || !is_permutation(p2) || p1.size() != p2.size()) {
        throw std::invalid_argument("dilworth_decompose: need two permutations of the same m");
    }
    const auto m = static_cast<Symbol>(p1.size());
    std::vector<Pos> pos_in_p1(m);
    for (Pos p = 1; p <= m; ++p) pos_in_p1[p1.at(p)] = p;

    // Patience levels over p2 mapped into p1-positions: tails[k] is the
    // smallest possible head of a strictly increasing chain of length k+1.
    AntichainDecomposition out;
    std::vector<Pos> tails;
    for (Pos p = 1; p <= m; ++p) {
        const Pos value = pos_in_p1[p2.at(p)];
        const auto level =
            static_cast<std::size_t>(std::lower_bound(tails.begin(), tails.end(), value) -
                                     tails.begin());
        if (level == tails.size()) {
            tails.push_back(value);
            out.levels.emplace_back();
        } else {
            tails[level] = value;
        }
        out.levels[level].push_back(p);
    }
    return out;
}

TripleProductResult check_triple_product(const SymbolString& p1, const SymbolString& p2,
                                         const SymbolString& p3) {
    if (!is_permutation(p1) || !is_permutation(p2) || !is_permutation(p3) ||
        p1.size() != p2.size() || p2.size() != p3.size()) {
        throw std::invalid_argument("check_triple_product: need three permutations of one m");
    }
    TripleProductResult r;
    r.lcs_12 = lcs_sparse(p1, p2).size();
    r.lcs_23 = lcs_sparse(p2, p3).size();
    r.lcs_31 = lcs_sparse(p3, p1).size();
    r.holds = r.lcs_12 * r.lcs_23 * r.lcs_31 >= p1.size();
    return r;
}

std::size_t default_refine_sample_count(std::size_t universe_size) {
    if (universe_size < 2) return 1;
    return static_cast<std::size_t>(
        std::ceil(std::log2(static_cast<double>(universe_size)) * 4.0));
}

RefineResult refine_to_complete(const std::vector<SemiPermutation>& blocks,
                                std::size_t sample_count, std::uint64_t seed,
                                const std::vector<Symbol>* universe) {
    if (blocks.empty()) throw std::invalid_argument("refine_to_complete: no blocks");
    if (sample_count < 1) throw std::invalid_argument("refine_to_complete: sample_count >= 1");

    RefineResult result;
    if (universe != nullptr) {
        result.universe = *universe;
    } else {
        for (const SemiPermutation& b : blocks) {
            result.universe.insert(result.universe.end(), b.kept.symbols.begin(),
                                   b.kept.symbols.end());
        }
        std::sort(result.universe.begin(), result.universe.end());
        result.universe.erase(std::unique(result.universe.begin(), result.universe.end()),
                              result.universe.end());
    }

    std::unordered_set<Symbol> in_mask;
    Rng rng(seed);
    for (std::size_t k = 0; k < sample_count; ++k) {
        const auto pick = static_cast<std::size_t>(rng.uniform_below(blocks.size()));
        for (Symbol c : blocks[pick].kept.symbols) {
            if (in_mask.insert(c).second) result.mask.symbols.push_back(c);
        }
    }
    // Leftovers in ascending id order (the one fixed "arbitrary" order).
    for (Symbol c : result.universe) {
        if (in_mask.insert(c).second) result.mask.symbols.push_back(c);
    }
    result.mask.alphabet_size = static_cast<Symbol>(result.universe.size());

    for (const SemiPermutation& b : blocks) {
        SymbolString full = b.kept;
        std::unordered_set<Symbol> present(b.kept.symbols.begin(), b.kept.symbols.end());
        for (Symbol c : result.mask.symbols) {
            if (!present.count(c)) full.symbols.push_back(c);
        }
        result.completed.push_back(std::move(full));
    }
    return result;
}

MaskExperimentStats mask_experiment(const SymbolString& s, const SymbolString& t,
                                    std::uint64_t seed) {
    if (s.size() != t.size() || s.empty()) {
        throw std::invalid_argument("mask_experiment: inputs must be equal nonempty length");
    }
    const BlockDecomposition s_blocks = decompose_blocks(s);
    const BlockDecomposition t_blocks = decompose_blocks(t);
    const std::size_t blocks = s_blocks.block_count();

    std::vector<SemiPermutation> s_semi(blocks);
    std::vector<SemiPermutation> t_semi(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        const BlockSpan span_s = s_blocks.spans[b];
        s_semi[b] = reduce_to_semi_permutation(
            {{s.symbols.begin() + span_s.begin - 1, s.symbols.begin() + span_s.end},
             s.alphabet_size},
            derive_seed(seed, 1, b));
        const BlockSpan span_t = t_blocks.spans[b];
        t_semi[b] = reduce_to_semi_permutation(
            {{t.symbols.begin() + span_t.begin - 1, t.symbols.begin() + span_t.end},
             t.alphabet_size},
            derive_seed(seed, 2, b));
    }

    // One shared universe keeps cross-string block pairs comparable; each
    // string still grows its own mask.
    std::vector<Symbol> universe;
    for (const auto& b : s_semi)
        universe.insert(universe.end(), b.kept.symbols.begin(), b.kept.symbols.end());
    for (const auto& b : t_semi)
        universe.insert(universe.end(), b.kept.symbols.begin(), b.kept.symbols.end());
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    const std::size_t samples = default_refine_sample_count(universe.size());
    const RefineResult s_refined =
        refine_to_complete(s_semi, samples, derive_seed(seed, 3), &universe);
    const RefineResult t_refined =
        refine_to_complete(t_semi, samples, derive_seed(seed, 4), &universe);

    MaskExperimentStats stats;
    stats.block_count = blocks;
    stats.universe_size = universe.size();
    stats.pair_lcs.assign(blocks, std::vector<std::uint32_t>(blocks, 0));

    double total = 0.0;
    double diagonal = 0.0;
    for (std::size_t i = 0; i < blocks; ++i) {
        for (std::size_t j = 0; j < blocks; ++j) {
            const auto len = static_cast<std::uint32_t>(
                lcs_sparse(s_refined.completed[i], t_refined.completed[j]).size());
            stats.pair_lcs[i][j] = len;
            total += len;
            if (i == j) diagonal += len;
        }
    }
    stats.mean_pairwise = blocks == 0 ? 0.0 : total / static_cast<double>(blocks * blocks);
    stats.mean_diagonal = blocks == 0 ? 0.0 : diagonal / static_cast<double>(blocks);
    stats.refined_s = s_refined.completed;
    stats.refined_t = t_refined.completed;
    return stats;
}

}  // namespace lcsx
