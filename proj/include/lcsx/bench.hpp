#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "lcsx/core.hpp"
#include "lcsx/instances.hpp"
#include "lcsx/pipeline.hpp"

namespace lcsx {

enum class BenchAlgorithm {
    kExact,
    kAlg0,
    kAlg1,
    kAlg2,
    kAlg3,
    kAlg4,
    kCombine,
    kPipeline,
};

std::string algorithm_name(BenchAlgorithm algo);
std::optional<BenchAlgorithm> algorithm_from_name(const std::string& name);

struct BenchRow {
    std::string instance_id;
    std::string family;
    std::size_t n = 0;
    Symbol m = 0;
    std::string algorithm;
    std::uint64_t length = 0;
    std::optional<std::uint64_t> exact_length;
    std::optional<double> ratio;  // exact_length / max(length, 1)
    double wall_time = 0.0;       // seconds around the algorithm call only
    std::uint64_t seed = 0;
};

struct BenchConfig {
    std::vector<InstanceSpec> specs;
    std::vector<BenchAlgorithm> algorithms;
    std::size_t trials = 1;
    std::size_t exact_cap = 100'000;  // exact column computed when n <= cap
    double delta;                     // defaults below: the optimal exponents
    double eta;

    BenchConfig();
};

// Thrown when a returned chain fails validation; the message carries the
// reproducing (spec, algorithm, trial, seed) tuple.
class ChainValidationError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Runs an algorithm on one instance with an explicit seed and validates the
// chain before reporting. The bench loop and the CLI single-instance path
// both go through here.
BenchRow run_algorithm_on_instance(const SymbolString& s, const SymbolString& t,
                                   BenchAlgorithm algo, std::uint64_t seed, double delta,
                                   double eta, std::optional<std::uint64_t> exact_length,
                                   const std::string& instance_id, const std::string& family);

// Executes every (spec, algorithm, trial) on derived seeds, validating each
// chain, and returns rows sorted by (spec, algorithm, trial).
std::vector<BenchRow> run_bench(const BenchConfig& config);

// CSV with a header row, the BenchRow fields in declared order, LF endings.
void write_csv(const std::string& path, const std::vector<BenchRow>& rows);
std::string to_csv(const std::vector<BenchRow>& rows);

}  // namespace lcsx
