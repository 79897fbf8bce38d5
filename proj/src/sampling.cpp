#include "lcsx/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lcsx/exact.hpp"
#include "lcsx/rng.hpp"

namespace lcsx {

namespace {

Pos first_after_or_infinity(const OccurrenceIndex& idx, Symbol symbol, Pos k) {
    const auto& occ = idx.positions(symbol);
    auto it = std::upper_bound(occ.begin(), occ.end(), k);
    return it == occ.end() ? TruncatedDpTable::kInfinity : *it;
}

// Shared body of sqrt_baseline and bounded_solution: sample s at the given
// rate, run the capped DP, and map the witness back to original s
// positions (sampled characters keep their original indices).
MatchChain sampled_truncated(const SymbolString& s, const SymbolString& t, double rate, Pos cap,
                             std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Pos> kept;
    for (Pos i = 1; i <= s.size(); ++i) {
        if (rng.bernoulli(rate)) kept.push_back(i);
    }
    SymbolString s_star;
    s_star.alphabet_size = s.alphabet_size;
    s_star.symbols.reserve(kept.size());
    for (Pos i : kept) s_star.symbols.push_back(s.at(i));

    MatchChain chain = truncated_dp_lcs(s_star, t, cap);
    return remap_chain(chain, &kept, nullptr);
}

}  // namespace

TruncatedDpTable fill_truncated_table(const SymbolString& s_star, const OccurrenceIndex& t_index,
                                      Pos cap) {
    TruncatedDpTable table;
    table.rows = s_star.size();
    table.cap = cap;
    table.cells_.assign((table.rows + 1) * (cap + 1), TruncatedDpTable::kInfinity);
    for (std::size_t i = 0; i <= table.rows; ++i) table.cell(i, 0) = 0;
    for (std::size_t i = 1; i <= table.rows; ++i) {
        const Symbol c = s_star.symbols[i - 1];
        for (Pos j = 1; j <= cap; ++j) {
            const Pos above = table.cell(i - 1, j);
            const Pos diag = table.cell(i - 1, j - 1);
            Pos extended = TruncatedDpTable::kInfinity;
            if (diag != TruncatedDpTable::kInfinity) {
                extended = first_after_or_infinity(t_index, c, diag);
            }
            table.cell(i, j) = std::min(above, extended);
        }
    }
    return table;
}

MatchChain truncated_dp_lcs(const SymbolString& s_star, const SymbolString& t, Pos cap) {
    if (cap < 1) throw std::invalid_argument("truncated_dp_lcs: cap must be >= 1");
    const OccurrenceIndex t_index = build_occurrence_index(t);
    const TruncatedDpTable table = fill_truncated_table(s_star, t_index, cap);

    Pos best = cap;
    while (best > 0 && table.cell(table.rows, best) == TruncatedDpTable::kInfinity) --best;

    MatchChain chain(best);
    std::size_t i = table.rows;
    Pos j = best;
    while (j > 0) {
        // Row i is where column j first reached its value; the character at
        // that row closes the j-th match.
        while (i > 0 && table.cell(i - 1, j) == table.cell(i, j)) --i;
        chain[j - 1] = {static_cast<Pos>(i), table.cell(i, j)};
        --i;
        --j;
    }
    return chain;
}

MatchChain sqrt_baseline(const SymbolString& s, const SymbolString& t, std::uint64_t seed) {
    return bounded_solution(s, t, 0.0, seed);
}

MatchChain bounded_solution(const SymbolString& s, const SymbolString& t, double delta,
                            std::uint64_t seed) {
    if (delta < 0.0 || delta > 1.0) {
        throw std::invalid_argument("bounded_solution: delta must lie in [0, 1]");
    }
    const double n = static_cast<double>(s.size());
    if (n < 1) throw std::invalid_argument("bounded_solution: empty input");
    const double exponent = (1.0 - delta) / 2.0;
    const double rate = std::pow(n, -exponent);
    const Pos cap = static_cast<Pos>(std::ceil(std::pow(n, exponent)));
    return sampled_truncated(s, t, rate, std::max<Pos>(cap, 1), seed);
}

std::vector<std::uint64_t> geometric_skip_indices(std::uint64_t total, double p,
                                                  std::uint64_t seed) {
    if (p <= 0.0 || p > 1.0) {
        throw std::invalid_argument("geometric_skip_indices: p must lie in (0, 1]");
    }
    std::vector<std::uint64_t> indices;
    if (total == 0) return indices;
    if (p >= 1.0) {
        indices.resize(total);
        for (std::uint64_t k = 0; k < total; ++k) indices[k] = k + 1;
        return indices;
    }
    Rng rng(seed);
    std::uint64_t j = 0;
    while (true) {
        const std::uint64_t gap = rng.geometric(p);
        if (gap > total - j) break;  // next index falls past the end
        j += gap;
        indices.push_back(j);
    }
    return indices;
}

std::vector<std::uint64_t> build_match_prefix(const SymbolString& s, const SymbolString& t) {
    const FrequencyTable freq = build_frequency_table(t);
    std::vector<std::uint64_t> prefix(s.size() + 1, 0);
    for (std::size_t i = 0; i < s.size(); ++i) {
        prefix[i + 1] = prefix[i] + freq.count(s.symbols[i]);
    }
    return prefix;
}

MatchPair locate_kth_match(const SymbolString& s, const OccurrenceIndex& t_index,
                           const std::vector<std::uint64_t>& prefix, std::uint64_t k) {
    if (k < 1 || k > prefix.back()) {
        throw std::out_of_range("locate_kth_match: rank outside [1, R]");
    }
    // Smallest i with prefix[i] >= k.
    const auto it = std::lower_bound(prefix.begin() + 1, prefix.end(), k);
    const auto i = static_cast<Pos>(it - prefix.begin());
    const std::uint64_t offset = k - prefix[i - 1];
    const Pos j = t_index.positions(s.at(i))[offset - 1];
    return {i, j};
}

MatchChain sampled_pairs(const SymbolString& s, const SymbolString& t, double p,
                         std::uint64_t seed) {
    const std::vector<std::uint64_t> prefix = build_match_prefix(s, t);
    const std::uint64_t pair_count = prefix.back();
    if (pair_count == 0) return {};
    const OccurrenceIndex t_index = build_occurrence_index(t);

    PairSequence sampled;
    for (std::uint64_t k : geometric_skip_indices(pair_count, p, seed)) {
        sampled.push_back(locate_kth_match(s, t_index, prefix, k));
    }
    return lis_pairs(sampled);
}

}  // namespace lcsx
