#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "lcsx/bench.hpp"
#include "lcsx/blockwise.hpp"
#include "lcsx/core.hpp"
#include "lcsx/exact.hpp"
#include "lcsx/freqsplit.hpp"
#include "lcsx/instances.hpp"
#include "lcsx/pipeline.hpp"
#include "lcsx/sampling.hpp"
#include "lcsx/verify.hpp"

namespace py = pybind11;

namespace {

lcsx::SymbolString to_string(const std::vector<lcsx::Symbol>& symbols) {
    lcsx::Symbol alphabet = 0;
    for (lcsx::Symbol c : symbols) alphabet = std::max(alphabet, c + 1);
    return {symbols, alphabet};
}

std::vector<std::pair<lcsx::Pos, lcsx::Pos>> to_pairs(const lcsx::MatchChain& chain) {
    std::vector<std::pair<lcsx::Pos, lcsx::Pos>> out;
    out.reserve(chain.size());
    for (const auto& p : chain) out.emplace_back(p.i, p.j);
    return out;
}

lcsx::MatchChain from_pairs(const std::vector<std::pair<lcsx::Pos, lcsx::Pos>>& pairs) {
    lcsx::MatchChain chain;
    chain.reserve(pairs.size());
    for (const auto& [i, j] : pairs) chain.push_back({i, j});
    return chain;
}

}  // namespace

PYBIND11_MODULE(_lcsx, m) {
    m.doc() = "Linear-time LCS approximation: exact oracles, samplers, and the full pipeline";

    m.def(
        "lcs_exact",
        [](const std::vector<lcsx::Symbol>& s, const std::vector<lcsx::Symbol>& t) {
            return to_pairs(lcsx::lcs_sparse(to_string(s), to_string(t)));
        },
        py::arg("s"), py::arg("t"),
        "Exact LCS witness as 1-based (i, j) match pairs.");

    m.def(
        "lcs_quadratic_length",
        [](const std::vector<lcsx::Symbol>& s, const std::vector<lcsx::Symbol>& t) {
            return lcsx::lcs_quadratic(to_string(s), to_string(t)).size();
        },
        py::arg("s"), py::arg("t"));

    m.def(
        "validate_chain",
        [](const std::vector<lcsx::Symbol>& s, const std::vector<lcsx::Symbol>& t,
           const std::vector<std::pair<lcsx::Pos, lcsx::Pos>>& chain) {
            return lcsx::validate_chain(to_string(s), to_string(t), from_pairs(chain));
        },
        py::arg("s"), py::arg("t"), py::arg("chain"));

    m.def(
        "sqrt_baseline",
        [](const std::vector<lcsx::Symbol>& s, const std::vector<lcsx::Symbol>& t,
           std::uint64_t seed) {
            return to_pairs(lcsx::sqrt_baseline(to_string(s), to_string(t), seed));
        },
        py::arg("s"), py::arg("t"), py::arg("seed"));

    m.def(
        "sampled_pairs",
        [](const std::vector<lcsx::Symbol>& s, const std::vector<lcsx::Symbol>& t, double p,
           std::uint64_t seed) {
            return to_pairs(lcsx::sampled_pairs(to_string(s), to_string(t), p, seed));
        },
        py::arg("s"), py::arg("t"), py::arg("p"), py::arg("seed"));

    m.def(
        "combine_blockwise",
        [](const std::vector<lcsx::Symbol>& s, const std::vector<lcsx::Symbol>& t,
           std::uint64_t seed) {
            return to_pairs(lcsx::combine_blockwise(to_string(s), to_string(t), seed));
        },
        py::arg("s"), py::arg("t"), py::arg("seed"));

    m.def("solve_exponent_lp", [] {
        const lcsx::ExponentSolution sol = lcsx::solve_exponent_lp();
        py::dict out;
        out["delta"] = py::make_tuple(sol.delta.num, sol.delta.den);
        out["eta"] = py::make_tuple(sol.eta.num, sol.eta.den);
        out["nu"] = py::make_tuple(sol.nu.num, sol.nu.den);
        out["feasible"] = sol.satisfies_all_constraints();
        return out;
    });

    m.def(
        "approximate_lcs",
        [](const std::vector<lcsx::Symbol>& s, const std::vector<lcsx::Symbol>& t,
           std::uint64_t seed, std::optional<double> delta, std::optional<double> eta,
           std::size_t exact_cap) {
            lcsx::PipelineParams params = lcsx::PipelineParams::optimal(seed);
            if (delta || eta) {
                params = lcsx::PipelineParams::with_exponents(delta.value_or(params.delta),
                                                              eta.value_or(params.eta), seed);
            }
            const lcsx::PipelineReport report =
                lcsx::approximate_lcs(to_string(s), to_string(t), params, exact_cap);
            py::dict out;
            out["chosen"] = to_pairs(report.chosen);
            out["length"] = report.chosen.size();
            py::list candidates;
            for (const auto& row : report.candidates) {
                py::dict c;
                c["name"] = row.name;
                c["length"] = row.length;
                c["seconds"] = row.seconds;
                c["seed"] = row.seed;
                candidates.append(c);
            }
            out["candidates"] = candidates;
            if (report.exact_length) out["exact_length"] = *report.exact_length;
            return out;
        },
        py::arg("s"), py::arg("t"), py::arg("seed") = 1, py::arg("delta") = py::none(),
        py::arg("eta") = py::none(), py::arg("exact_cap") = 0);

    m.def(
        "generate",
        [](const std::string& family, std::size_t n, lcsx::Symbol m,
           std::optional<std::size_t> planted_len, std::uint64_t seed) {
            const auto parsed = lcsx::family_from_name(family);
            if (!parsed) throw std::invalid_argument("unknown family: " + family);
            lcsx::InstanceSpec spec;
            spec.family = *parsed;
            spec.n = n;
            spec.m = m;
            spec.planted_len = planted_len;
            spec.seed = seed;
            const auto [s, t] = lcsx::generate(spec);
            return py::make_tuple(s.symbols, t.symbols);
        },
        py::arg("family"), py::arg("n"), py::arg("m"), py::arg("planted_len") = py::none(),
        py::arg("seed") = 1);

    m.def(
        "dilworth_levels",
        [](const std::vector<lcsx::Symbol>& p1, const std::vector<lcsx::Symbol>& p2) {
            const auto d = lcsx::dilworth_decompose(to_string(p1), to_string(p2));
            return d.levels;
        },
        py::arg("p1"), py::arg("p2"));

    m.def(
        "check_triple_product",
        [](const std::vector<lcsx::Symbol>& p1, const std::vector<lcsx::Symbol>& p2,
           const std::vector<lcsx::Symbol>& p3) {
            const auto r = lcsx::check_triple_product(to_string(p1), to_string(p2), to_string(p3));
            return py::make_tuple(r.lcs_12, r.lcs_23, r.lcs_31, r.holds);
        },
        py::arg("p1"), py::arg("p2"), py::arg("p3"));
}
