#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lcsx/bench.hpp"
#include "lcsx/exact.hpp"
#include "lcsx/instances.hpp"
#include "lcsx/pipeline.hpp"
#include "lcsx/rng.hpp"
#include "lcsx/verify.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitUsageError = 2;

int run_verify_suites(std::uint64_t seed) {
    using namespace lcsx;
    bool all_ok = true;

    {
        std::size_t checked = 0;
        bool ok = true;
        for (std::uint64_t k = 0; k < 500 && ok; ++k) {
            const Symbol m = 2 + static_cast<Symbol>(derive_seed(seed, 1, k) % 255);
            const SymbolString p1 = random_permutation(m, derive_seed(seed, 2, k));
            const SymbolString p2 = random_permutation(m, derive_seed(seed, 3, k));
            const AntichainDecomposition d = dilworth_decompose(p1, p2);
            ok = d.levels.size() == lcs_quadratic(p1, p2).size();
            ++checked;
        }
        std::cout << (ok ? "PASS" : "FAIL")
                  << " antichain decomposition level count = exact LCS (" << checked
                  << " permutation pairs)\n";
        all_ok = all_ok && ok;
    }
    {
        std::size_t checked = 0;
        bool ok = true;
        for (std::uint64_t k = 0; k < 2000 && ok; ++k) {
            const Symbol m = 3 + static_cast<Symbol>(derive_seed(seed, 4, k) % 254);
            const TripleProductResult r =
                check_triple_product(random_permutation(m, derive_seed(seed, 5, k)),
                                     random_permutation(m, derive_seed(seed, 6, k)),
                                     random_permutation(m, derive_seed(seed, 7, k)));
            ok = r.holds;
            ++checked;
        }
        std::cout << (ok ? "PASS" : "FAIL")
                  << " pairwise-LCS product of permutation triples >= m (" << checked
                  << " triples)\n";
        all_ok = all_ok && ok;
    }
    {
        InstanceSpec spec;
        spec.family = InstanceFamily::kBlockPermutation;
        spec.n = 4096;
        spec.m = 64;
        spec.seed = derive_seed(seed, 8);
        const auto [s, t] = generate(spec);
        const MaskExperimentStats stats = mask_experiment(s, t, derive_seed(seed, 9));
        std::cout << "INFO mask experiment: blocks=" << stats.block_count
                  << " universe=" << stats.universe_size
                  << " mean_pairwise_lcs=" << stats.mean_pairwise
                  << " mean_diagonal_lcs=" << stats.mean_diagonal << "\n";
    }
    return all_ok ? kExitOk : kExitValidationFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Sublinear-factor LCS approximation benchmark"};

    std::string family = "uniform";
    std::size_t n = 1024;
    std::uint32_t m = 16;
    std::optional<std::size_t> planted_len;
    std::uint64_t seed = 1;
    std::vector<std::string> algo_names;
    std::size_t trials = 1;
    std::size_t exact_cap = 100'000;
    std::string out_path;
    std::optional<double> params_delta;
    std::optional<double> params_eta;
    bool verify = false;
    std::string instance_path;
    std::string dump_instance_path;

    app.add_option("--family", family, "Instance family")
        ->check(CLI::IsMember({"uniform", "planted", "block_constant", "block_permutation"}));
    app.add_option("--n", n, "Instance length");
    app.add_option("--m", m, "Alphabet size");
    app.add_option("--planted-len", planted_len, "Planted subsequence length (planted family)");
    app.add_option("--seed", seed, "64-bit unsigned decimal seed");
    app.add_option("--algo", algo_names,
                   "Algorithm to run (repeatable): "
                   "exact|alg0|alg1|alg2|alg3|alg4|combine|pipeline");
    app.add_option("--trials", trials, "Trials per (spec, algorithm)");
    app.add_option("--exact-cap", exact_cap, "Compute the exact column when n <= cap");
    app.add_option("--out", out_path, "CSV output path");
    app.add_option("--params-delta", params_delta, "Override the optimal delta exponent");
    app.add_option("--params-eta", params_eta, "Override the optimal eta exponent");
    app.add_flag("--verify", verify, "Run the combinatorial verification suites");
    app.add_option("--instance", instance_path, "Benchmark a stored instance file");
    app.add_option("--dump-instance", dump_instance_path,
                   "Write the generated instance pair to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsageError;
    }

    try {
        if (verify) return run_verify_suites(seed);

        lcsx::BenchConfig config;
        if (params_delta) config.delta = *params_delta;
        if (params_eta) config.eta = *params_eta;
        config.trials = trials;
        config.exact_cap = exact_cap;
        for (const std::string& name : algo_names) {
            const auto algo = lcsx::algorithm_from_name(name);
            if (!algo) {
                std::cerr << "unknown algorithm: " << name << "\n";
                return kExitUsageError;
            }
            config.algorithms.push_back(*algo);
        }
        if (config.algorithms.empty()) {
            config.algorithms.push_back(lcsx::BenchAlgorithm::kPipeline);
        }

        std::vector<lcsx::BenchRow> rows;
        if (!instance_path.empty()) {
            const auto [s, t] = lcsx::load_instance(instance_path);
            std::optional<std::uint64_t> exact;
            if (s.size() <= exact_cap) exact = lcsx::lcs_sparse(s, t).size();
            for (std::size_t algo_idx = 0; algo_idx < config.algorithms.size(); ++algo_idx) {
                for (std::size_t trial = 0; trial < trials; ++trial) {
                    rows.push_back(lcsx::run_algorithm_on_instance(
                        s, t, config.algorithms[algo_idx],
                        lcsx::derive_seed(seed, algo_idx, trial), config.delta, config.eta,
                        exact, instance_path, "file"));
                }
            }
        } else {
            lcsx::InstanceSpec spec;
            spec.family = *lcsx::family_from_name(family);
            spec.n = n;
            spec.m = m;
            spec.planted_len = planted_len;
            spec.seed = seed;
            if (!dump_instance_path.empty()) {
                const auto [s, t] = lcsx::generate(spec);
                lcsx::save_instance(dump_instance_path, s, t);
            }
            config.specs.push_back(spec);
            rows = lcsx::run_bench(config);
        }

        if (!out_path.empty()) {
            lcsx::write_csv(out_path, rows);
        } else {
            std::cout << lcsx::to_csv(rows);
        }
        return kExitOk;
    } catch (const lcsx::ChainValidationError& e) {
        std::cerr << e.what() << "\n";
        return kExitValidationFailure;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsageError;
    }
}
