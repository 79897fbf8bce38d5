#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lcsx/core.hpp"
#include "lcsx/rational.hpp"

namespace lcsx {

// Exponent triple driving every randomized stage. delta bounds the assumed
// solution size n^{1-delta}, eta the symbol count n^{1/2+eta}, and nu the
// resulting approximation-factor exponent.
struct PipelineParams {
    double delta = 0.0;
    double eta = 0.0;
    double nu = 0.0;
    std::uint64_t seed = 0;

    static PipelineParams optimal(std::uint64_t seed);
    static PipelineParams with_exponents(double delta, double eta, std::uint64_t seed);
};

// Approximation-factor exponent implied by a (delta, eta) choice: the
// tightest of the three stage bounds.
double exponent_bound(double delta, double eta);

// Exact-rational solution of the exponent optimization
//   maximize nu  s.t.  nu <= 1/2 - eta
//                      nu <= 1/2 - delta/2
//                      nu <= 1/2 - 1/37 + (221/37) delta + (10/37) eta
//                      0 <= delta <= 1,  -1/2 <= eta <= 1/2.
// All three nu-constraints bind at the optimum (any slack would let nu
// grow), giving eta = delta/2, delta = 2/489, eta = 1/489, nu = 1/2-1/489.
struct ExponentSolution {
    Rational delta;
    Rational eta;
    Rational nu;

    // Slack of each nu-constraint and box bound, exact arithmetic.
    bool satisfies_all_constraints() const;
};

ExponentSolution solve_exponent_lp();

struct CandidateRow {
    std::string name;
    std::size_t length = 0;
    double seconds = 0.0;
    std::uint64_t seed = 0;
};

struct PipelineReport {
    std::vector<CandidateRow> candidates;
    MatchChain chosen;
    std::optional<std::uint64_t> exact_length;
};

// End-to-end approximator: pads the inputs, runs the sqrt baseline, the
// solution-size-bounded sampler, the frequency split, and the blockwise
// combine on the high/high residual, each on its own derived seed, and
// keeps the longest chain. exact_cap > 0 additionally computes the exact
// LCS when n <= exact_cap.
PipelineReport approximate_lcs(const SymbolString& s, const SymbolString& t,
                               const PipelineParams& params, std::size_t exact_cap = 0);

}  // namespace lcsx
