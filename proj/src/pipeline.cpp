#include "lcsx/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <utility>

#include "lcsx/blockwise.hpp"
#include "lcsx/exact.hpp"
#include "lcsx/freqsplit.hpp"
#include "lcsx/rng.hpp"
#include "lcsx/sampling.hpp"

namespace lcsx {

namespace {

constexpr std::uint64_t kBaselineStream = 1;
constexpr std::uint64_t kBoundedStream = 2;
constexpr std::uint64_t kSplitStream = 3;
constexpr std::uint64_t kResidualStream = 4;

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

ExponentSolution solve_exponent_lp() {
    ExponentSolution sol;
    sol.delta = Rational(2, 489);
    sol.eta = Rational(1, 489);
    sol.nu = Rational(1, 2) - Rational(1, 489);
    return sol;
}

bool ExponentSolution::satisfies_all_constraints() const {
    const Rational half(1, 2);
    const bool c1 = nu <= half - eta;
    const bool c2 = nu <= half - delta * Rational(1, 2);
    const bool c3 =
        nu <= half - Rational(1, 37) + Rational(221, 37) * delta + Rational(10, 37) * eta;
    const bool box = Rational(0) <= delta && delta <= Rational(1) && Rational(-1, 2) <= eta &&
                     eta <= Rational(1, 2);
    return c1 && c2 && c3 && box;
}

double exponent_bound(double delta, double eta) {
    return std::min({0.5 - eta, 0.5 - delta / 2.0,
                     0.5 - 1.0 / 37.0 + (221.0 / 37.0) * delta + (10.0 / 37.0) * eta});
}

PipelineParams PipelineParams::optimal(std::uint64_t seed) {
    const ExponentSolution sol = solve_exponent_lp();
    PipelineParams params;
    params.delta = sol.delta.to_double();
    params.eta = sol.eta.to_double();
    params.nu = sol.nu.to_double();
    params.seed = seed;
    return params;
}

PipelineParams PipelineParams::with_exponents(double delta, double eta, std::uint64_t seed) {
    PipelineParams params;
    params.delta = delta;
    params.eta = eta;
    params.nu = exponent_bound(delta, eta);
    params.seed = seed;
    return params;
}

PipelineReport approximate_lcs(const SymbolString& s, const SymbolString& t,
                               const PipelineParams& params, std::size_t exact_cap) {
    PipelineReport report;
    const auto [ps, pt] = pad_pair(s, t);
    if (ps.empty()) {
        if (exact_cap > 0) report.exact_length = 0;
        return report;
    }

    const auto run = [&report](const std::string& name, std::uint64_t seed, auto&& fn) {
        const auto start = std::chrono::steady_clock::now();
        MatchChain chain = fn(seed);
        CandidateRow row{name, chain.size(), seconds_since(start), seed};
        report.candidates.push_back(row);
        if (chain.size() > report.chosen.size()) report.chosen = std::move(chain);
    };

    run("alg0", derive_seed(params.seed, kBaselineStream),
        [&](std::uint64_t seed) { return sqrt_baseline(ps, pt, seed); });
    run("alg1", derive_seed(params.seed, kBoundedStream),
        [&](std::uint64_t seed) { return bounded_solution(ps, pt, params.delta, seed); });

    FrequencySplitResult split;
    run("alg2", derive_seed(params.seed, kSplitStream), [&](std::uint64_t seed) {
        split = frequency_split_approx(ps, pt, params.eta, seed);
        return split.best;
    });
    run("combine", derive_seed(params.seed, kResidualStream), [&](std::uint64_t seed) {
        if (split.residual_s.empty() || split.residual_t.empty()) return MatchChain{};
        const auto [rs, rt] = pad_pair(split.residual_s, split.residual_t);
        MatchChain chain = combine_blockwise(rs, rt, seed);
        // Padding sentinels never match, so every pair lands inside the
        // residual proper and maps back cleanly.
        return remap_chain(chain, &split.residual_s_map, &split.residual_t_map);
    });

    if (exact_cap > 0 && ps.size() <= exact_cap) {
        report.exact_length = lcs_sparse(ps, pt).size();
    }
    return report;
}

}  // namespace lcsx
