#include "lcsx/bench.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "lcsx/blockwise.hpp"
#include "lcsx/exact.hpp"
#include "lcsx/freqsplit.hpp"
#include "lcsx/rng.hpp"
#include "lcsx/sampling.hpp"

namespace lcsx {

namespace {

constexpr std::uint64_t kGenerateStream = 0x6e57;
constexpr std::uint64_t kAlgoStream = 0xa190;

MatchChain dispatch(const SymbolString& s, const SymbolString& t, BenchAlgorithm algo,
                    std::uint64_t seed, double delta, double eta) {
    switch (algo) {
        case BenchAlgorithm::kExact: return lcs_sparse(s, t);
        case BenchAlgorithm::kAlg0: return sqrt_baseline(s, t, seed);
        case BenchAlgorithm::kAlg1: return bounded_solution(s, t, delta, seed);
        case BenchAlgorithm::kAlg2: return frequency_split_approx(s, t, eta, seed).best;
        case BenchAlgorithm::kAlg3: return block_to_block(s, t, seed);
        case BenchAlgorithm::kAlg4: return random_shift(s, t, seed);
        case BenchAlgorithm::kCombine: return combine_blockwise(s, t, seed);
        case BenchAlgorithm::kPipeline:
            return approximate_lcs(s, t, PipelineParams::with_exponents(delta, eta, seed)).chosen;
    }
    throw std::invalid_argument("dispatch: unknown algorithm");
}

}  // namespace

std::string algorithm_name(BenchAlgorithm algo) {
    switch (algo) {
        case BenchAlgorithm::kExact: return "exact";
        case BenchAlgorithm::kAlg0: return "alg0";
        case BenchAlgorithm::kAlg1: return "alg1";
        case BenchAlgorithm::kAlg2: return "alg2";
        case BenchAlgorithm::kAlg3: return "alg3";
        case BenchAlgorithm::kAlg4: return "alg4";
        case BenchAlgorithm::kCombine: return "combine";
        case BenchAlgorithm::kPipeline: return "pipeline";
    }
    return "unknown";
}

std::optional<BenchAlgorithm> algorithm_from_name(const std::string& name) {
    for (BenchAlgorithm algo :
         {BenchAlgorithm::kExact, BenchAlgorithm::kAlg0, BenchAlgorithm::kAlg1,
          BenchAlgorithm::kAlg2, BenchAlgorithm::kAlg3, BenchAlgorithm::kAlg4,
          BenchAlgorithm::kCombine, BenchAlgorithm::kPipeline}) {
        if (algorithm_name(algo) == name) return algo;
    }
    return std::nullopt;
}

BenchConfig::BenchConfig() {
    const PipelineParams optimal = PipelineParams::optimal(0);
    delta = optimal.delta;
    eta = optimal.eta;
}

BenchRow run_algorithm_on_instance(const SymbolString& s, const SymbolString& t,
                                   BenchAlgorithm algo, std::uint64_t seed, double delta,
                                   double eta, std::optional<std::uint64_t> exact_length,
                                   const std::string& instance_id, const std::string& family) {
    const auto start = std::chrono::steady_clock::now();
    const MatchChain chain = dispatch(s, t, algo, seed, delta, eta);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    if (!validate_chain(s, t, chain)) {
        std::ostringstream msg;
        msg << "chain validation failed: instance=" << instance_id << " family=" << family
            << " n=" << s.size() << " m=" << s.alphabet_size
            << " algorithm=" << algorithm_name(algo) << " seed=" << seed;
        throw ChainValidationError(msg.str());
    }

    BenchRow row;
    row.instance_id = instance_id;
    row.family = family;
    row.n = s.size();
    row.m = std::max(s.alphabet_size, t.alphabet_size);
    row.algorithm = algorithm_name(algo);
    row.length = chain.size();
    row.exact_length = exact_length;
    if (exact_length) {
        row.ratio = static_cast<double>(*exact_length) /
                    static_cast<double>(std::max<std::uint64_t>(row.length, 1));
    }
    row.wall_time = elapsed;
    row.seed = seed;
    return row;
}

std::vector<BenchRow> run_bench(const BenchConfig& config) {
    if (config.trials < 1) throw std::invalid_argument("run_bench: trials must be >= 1");
    std::vector<BenchRow> rows;

    for (std::size_t spec_idx = 0; spec_idx < config.specs.size(); ++spec_idx) {
        const InstanceSpec& spec = config.specs[spec_idx];

        // Instances and exact lengths are shared across algorithms of one
        // (spec, trial); generate once.
        std::vector<std::pair<SymbolString, SymbolString>> instances;
        std::vector<std::optional<std::uint64_t>> exact;
        instances.reserve(config.trials);
        for (std::size_t trial = 0; trial < config.trials; ++trial) {
            InstanceSpec derived = spec;
            derived.seed = derive_seed(spec.seed, kGenerateStream, trial);
            instances.push_back(generate(derived));
            const auto& [s, t] = instances.back();
            if (s.size() <= config.exact_cap) {
                exact.push_back(lcs_sparse(s, t).size());
            } else {
                exact.push_back(std::nullopt);
            }
        }

        for (std::size_t algo_idx = 0; algo_idx < config.algorithms.size(); ++algo_idx) {
            const BenchAlgorithm algo = config.algorithms[algo_idx];
            for (std::size_t trial = 0; trial < config.trials; ++trial) {
                const auto& [s, t] = instances[trial];
                const std::uint64_t seed =
                    derive_seed(spec.seed, kAlgoStream + algo_idx, trial);
                std::ostringstream id;
                id << "s" << spec_idx << "t" << trial;
                rows.push_back(run_algorithm_on_instance(s, t, algo, seed, config.delta,
                                                         config.eta, exact[trial], id.str(),
                                                         family_name(spec.family)));
            }
        }
    }
    return rows;
}

std::string to_csv(const std::vector<BenchRow>& rows) {
    std::ostringstream out;
    out << "instance_id,family,n,m,algorithm,length,exact_length,ratio,wall_time,seed\n";
    for (const BenchRow& row : rows) {
        out << row.instance_id << ',' << row.family << ',' << row.n << ',' << row.m << ','
            << row.algorithm << ',' << row.length << ',';
        if (row.exact_length) out << *row.exact_length;
        out << ',';
        if (row.ratio) out << *row.ratio;
        out << ',' << row.wall_time << ',' << row.seed << '\n';
    }
    return out.str();
}

void write_csv(const std::string& path, const std::vector<BenchRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path);
    out << to_csv(rows);
    if (!out) throw std::runtime_error("write_csv: write failed for " + path);
}

}  // namespace lcsx
