#include "lcsx/freqsplit.hpp"

#include <cmath>
#include <stdexcept>

#include "lcsx/rng.hpp"
#include "lcsx/sampling.hpp"

namespace lcsx {

FrequencySplit split_by_frequency(const SymbolString& t, std::uint32_t tau) {
    if (tau < 1) throw std::invalid_argument("split_by_frequency: tau must be >= 1");
    const FrequencyTable freq = build_frequency_table(t);
    FrequencySplit split;
    split.tau = tau;
    split.low.alphabet_size = t.alphabet_size;
    split.high.alphabet_size = t.alphabet_size;
    for (Pos p = 1; p <= t.size(); ++p) {
        const Symbol c = t.at(p);
        if (freq.count(c) <= tau) {
            split.low.symbols.push_back(c);
            split.low_map.push_back(p);
        } else {
            split.high.symbols.push_back(c);
            split.high_map.push_back(p);
        }
    }
    return split;
}

FrequencySplitResult frequency_split_approx(const SymbolString& s, const SymbolString& t,
                                            double eta, std::uint64_t seed) {
    if (eta < 0.0 || eta > 0.5) {
        throw std::invalid_argument("frequency_split_approx: eta must lie in [0, 1/2]");
    }
    if (s.size() != t.size() || s.empty()) {
        throw std::invalid_argument("frequency_split_approx: inputs must be equal nonempty length");
    }
    const double n = static_cast<double>(s.size());
    const auto tau = static_cast<std::uint32_t>(std::ceil(std::pow(n, 0.5 - eta)));

    const FrequencySplit s_split = split_by_frequency(s, tau);
    const FrequencySplit t_split = split_by_frequency(t, tau);

    struct Sub {
        const SymbolString* a;
        const SymbolString* b;
        const std::vector<Pos>* a_map;
        const std::vector<Pos>* b_map;
    };
    const Sub subs[3] = {
        {&s_split.low, &t_split.low, &s_split.low_map, &t_split.low_map},
        {&s_split.low, &t_split.high, &s_split.low_map, &t_split.high_map},
        {&s_split.high, &t_split.low, &s_split.high_map, &t_split.low_map},
    };

    FrequencySplitResult result;
    result.tau = tau;
    for (std::uint64_t k = 0; k < 3; ++k) {
        const Sub& sub = subs[k];
        if (sub.a->empty() || sub.b->empty()) continue;
        // Exact counts beat the tau*n worst case for setting the rate.
        const std::uint64_t pairs = count_matching_pairs(*sub.a, *sub.b);
        if (pairs == 0) continue;
        const double p = std::min(1.0, n / static_cast<double>(pairs));
        MatchChain chain = sampled_pairs(*sub.a, *sub.b, p, derive_seed(seed, k));
        chain = remap_chain(chain, sub.a_map, sub.b_map);
        if (chain.size() > result.best.size()) result.best = std::move(chain);
    }

    result.residual_s = s_split.high;
    result.residual_t = t_split.high;
    result.residual_s_map = s_split.high_map;
    result.residual_t_map = t_split.high_map;
    return result;
}

}  // namespace lcsx
