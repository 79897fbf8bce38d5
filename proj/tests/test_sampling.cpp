#include <doctest.h>

#include <cmath>

#include "lcsx/core.hpp"
#include "lcsx/exact.hpp"
#include "lcsx/rng.hpp"
#include "lcsx/sampling.hpp"
#include "oracles.hpp"

using namespace lcsx;

namespace {

SymbolString random_string(std::size_t n, Symbol m, Rng& rng) {
    SymbolString s;
    s.alphabet_size = m;
    for (std::size_t k = 0; k < n; ++k) {
        s.symbols.push_back(static_cast<Symbol>(rng.uniform_below(m)));
    }
    return s;
}

}  // namespace

TEST_CASE("truncated table worked case") {
    const SymbolString s_star{{0, 2}, 3};
    const SymbolString t{{1, 0, 2}, 3};
    const TruncatedDpTable table = fill_truncated_table(s_star, build_occurrence_index(t), 5);
    CHECK(table.cell(1, 1) == 2);
    CHECK(table.cell(2, 2) == 3);
    const MatchChain chain = truncated_dp_lcs(s_star, t, 5);
    CHECK(chain.size() == 2);
    CHECK(validate_chain(s_star, t, chain));
}

TEST_CASE("truncated DP respects the cap") {
    const SymbolString id{{0, 1, 2}, 3};
    CHECK(truncated_dp_lcs(id, id, 3).size() == 3);
    CHECK(truncated_dp_lcs(id, id, 2).size() == 2);
}

TEST_CASE("truncated table rows and columns are monotone") {
    Rng rng(5);
    for (int k = 0; k < 100; ++k) {
        const SymbolString a = random_string(1 + rng.uniform_below(30), 4, rng);
        const SymbolString b = random_string(1 + rng.uniform_below(30), 4, rng);
        const auto cap = static_cast<Pos>(1 + rng.uniform_below(10));
        const TruncatedDpTable table = fill_truncated_table(a, build_occurrence_index(b), cap);
        for (std::size_t i = 0; i <= table.rows; ++i) {
            CHECK(table.cell(i, 0) == 0);
            // strictly increasing along a row while finite
            for (Pos j = 1; j <= cap; ++j) {
                if (table.cell(i, j) != TruncatedDpTable::kInfinity) {
                    CHECK(table.cell(i, j) > table.cell(i, j - 1));
                }
            }
        }
        for (Pos j = 0; j <= cap; ++j) {
            for (std::size_t i = 1; i <= table.rows; ++i) {
                CHECK(table.cell(i, j) <= table.cell(i - 1, j));  // non-increasing down
            }
        }
        CHECK(table.cell(0, 1) == TruncatedDpTable::kInfinity);
    }
}

TEST_CASE("truncated DP with cap=n equals the exact oracle") {
    Rng rng(19);
    for (int k = 0; k < 200; ++k) {
        const auto n = static_cast<std::size_t>(1 + rng.uniform_below(40));
        const SymbolString a = random_string(n, 3, rng);
        const SymbolString b = random_string(n, 3, rng);
        const MatchChain chain = truncated_dp_lcs(a, b, static_cast<Pos>(n));
        CHECK(chain.size() == testing::lcs_length_dp(a, b));
        CHECK(validate_chain(a, b, chain));
    }
}

TEST_CASE("sqrt baseline on a constant string matches every sampled char") {
    const std::size_t n = 64;
    SymbolString s;
    s.alphabet_size = 1;
    s.symbols.assign(n, 0);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const MatchChain chain = sqrt_baseline(s, s, seed);
        CHECK(validate_chain(s, s, chain));
        // every sampled character matches, so only the cap can bind
        CHECK(chain.size() <= static_cast<std::size_t>(std::ceil(std::sqrt(double(n)))));
    }
}

TEST_CASE("sqrt baseline degenerate n=1") {
    const SymbolString one{{0}, 1};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const MatchChain chain = sqrt_baseline(one, one, seed);
        CHECK(chain.size() <= 1);
        CHECK(validate_chain(one, one, chain));
    }
}

TEST_CASE("bounded_solution validates delta and collapses to the baseline at 0") {
    Rng rng(3);
    const SymbolString s = random_string(50, 3, rng);
    const SymbolString t = random_string(50, 3, rng);
    CHECK_THROWS_AS(bounded_solution(s, t, -0.1, 1), std::invalid_argument);
    CHECK_THROWS_AS(bounded_solution(s, t, 1.5, 1), std::invalid_argument);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CHECK(bounded_solution(s, t, 0.0, seed) == sqrt_baseline(s, t, seed));
    }
}

TEST_CASE("bounded_solution at delta=1 finds a single match iff one exists") {
    const SymbolString s{{0, 1, 2, 3}, 8};
    const SymbolString t{{7, 2, 6, 5}, 8};
    const SymbolString u{{7, 6, 5, 4}, 8};
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        CHECK(bounded_solution(s, t, 1.0, seed).size() == 1);  // rate 1, cap 1
        CHECK(bounded_solution(s, u, 1.0, seed).empty());
    }
}

TEST_CASE("every sampler chain is valid against the original strings") {
    Rng rng(61);
    for (int k = 0; k < 50; ++k) {
        const auto n = static_cast<std::size_t>(2 + rng.uniform_below(120));
        const SymbolString s = random_string(n, 5, rng);
        const SymbolString t = random_string(n, 5, rng);
        CHECK(validate_chain(s, t, sqrt_baseline(s, t, k)));
        CHECK(validate_chain(s, t, bounded_solution(s, t, 0.3, k)));
        CHECK(validate_chain(s, t, sampled_pairs(s, t, 0.5, k)));
    }
}

TEST_CASE("geometric_skip_indices p=1 yields every index") {
    const auto all = geometric_skip_indices(10, 1.0, 99);
    REQUIRE(all.size() == 10);
    for (std::uint64_t k = 0; k < 10; ++k) CHECK(all[k] == k + 1);
    CHECK(geometric_skip_indices(0, 0.5, 99).empty());
}

TEST_CASE("geometric_skip_indices output is strictly increasing and bounded") {
    Rng rng(71);
    for (int k = 0; k < 100; ++k) {
        const std::uint64_t total = rng.uniform_below(5000);
        const double p = 0.05 + 0.95 * rng.uniform_double();
        const auto indices = geometric_skip_indices(total, p, k);
        std::uint64_t prev = 0;
        for (std::uint64_t idx : indices) {
            CHECK(idx > prev);
            CHECK(idx <= total);
            prev = idx;
        }
    }
}

TEST_CASE("geometric_skip_indices marginal inclusion rate") {
    // Marginal of a fixed index is p regardless of total; a small total and
    // many seeds make the +-0.02 window statistically sound, and one run at
    // the large total pins the expected output size.
    const double p = 0.25;
    int included = 0;
    const int seeds = 4000;
    for (int seed = 0; seed < seeds; ++seed) {
        const auto indices = geometric_skip_indices(100, p, seed);
        included += std::binary_search(indices.begin(), indices.end(), 17ULL) ? 1 : 0;
    }
    CHECK(std::abs(static_cast<double>(included) / seeds - p) < 0.02);

    const auto big = geometric_skip_indices(1'000'000, p, 12345);
    CHECK(std::abs(static_cast<double>(big.size()) / 1'000'000.0 - p) < 0.01);
}

TEST_CASE("locate_kth_match enumerates M in order") {
    const SymbolString s{{0, 0, 1}, 2};
    const SymbolString t{{0, 1, 0}, 2};
    const auto prefix = build_match_prefix(s, t);
    const OccurrenceIndex t_index = build_occurrence_index(t);
    REQUIRE(prefix.back() == 5);
    // M = (1,1),(1,3),(2,1),(2,3),(3,2)
    CHECK(locate_kth_match(s, t_index, prefix, 1) == MatchPair{1, 1});
    CHECK(locate_kth_match(s, t_index, prefix, 4) == MatchPair{2, 3});
    CHECK(locate_kth_match(s, t_index, prefix, 5) == MatchPair{3, 2});
    CHECK_THROWS_AS(locate_kth_match(s, t_index, prefix, 0), std::out_of_range);
    CHECK_THROWS_AS(locate_kth_match(s, t_index, prefix, 6), std::out_of_range);
}

TEST_CASE("sampled_pairs at p=1 equals the exact LCS") {
    Rng rng(83);
    for (int k = 0; k < 100; ++k) {
        const auto n = static_cast<std::size_t>(1 + rng.uniform_below(80));
        const SymbolString s = random_string(n, 3, rng);
        const SymbolString t = random_string(n, 3, rng);
        const MatchChain chain = sampled_pairs(s, t, 1.0, k);
        CHECK(chain.size() == lcs_sparse(s, t).size());
        CHECK(validate_chain(s, t, chain));
    }
}

TEST_CASE("sampled_pairs with no matching pairs returns empty") {
    const SymbolString s{{0, 1}, 4};
    const SymbolString t{{2, 3}, 4};
    CHECK(sampled_pairs(s, t, 0.5, 1).empty());
}

TEST_CASE("sampled_pairs mean tracks p times the exact length") {
    Rng rng(97);
    const std::size_t n = 4000;
    const SymbolString s = random_string(n, 2, rng);
    const SymbolString t = random_string(n, 2, rng);
    const auto exact = static_cast<double>(lcs_sparse(s, t).size());
    const double p = 0.1;
    double total = 0;
    const int seeds = 40;
    for (int seed = 0; seed < seeds; ++seed) {
        total += static_cast<double>(sampled_pairs(s, t, p, seed).size());
    }
    CHECK(total / seeds >= 0.5 * p * exact);
}
