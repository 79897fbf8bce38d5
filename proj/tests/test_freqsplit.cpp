#include <doctest.h>

#include <cmath>
#include <set>

#include "lcsx/core.hpp"
#include "lcsx/exact.hpp"
#include "lcsx/freqsplit.hpp"
#include "lcsx/rng.hpp"
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

std::size_t distinct(const SymbolString& s) {
    return std::set<Symbol>(s.symbols.begin(), s.symbols.end()).size();
}

}  // namespace

TEST_CASE("split_by_frequency reproduces the aabccd example") {
    // a=0 b=1 c=2 d=3: low = "bd", high = "aacc" at tau = 1.
    const SymbolString t{{0, 0, 1, 2, 2, 3}, 4};
    const FrequencySplit split = split_by_frequency(t, 1);
    CHECK(split.low.symbols == std::vector<Symbol>{1, 3});
    CHECK(split.high.symbols == std::vector<Symbol>{0, 0, 2, 2});
    CHECK(split.low_map == std::vector<Pos>{3, 6});
    CHECK(split.high_map == std::vector<Pos>{1, 2, 4, 5});
}

TEST_CASE("split_by_frequency edge splits") {
    const SymbolString all_distinct{{0, 1, 2, 3}, 4};
    const FrequencySplit d = split_by_frequency(all_distinct, 1);
    CHECK(d.high.empty());
    CHECK(d.low.symbols == all_distinct.symbols);

    SymbolString constant;
    constant.alphabet_size = 1;
    constant.symbols.assign(5, 0);
    const FrequencySplit c = split_by_frequency(constant, 4);
    CHECK(c.low.empty());
    CHECK(c.high.symbols == constant.symbols);
}

TEST_CASE("split position maps cover the parent in order") {
    Rng rng(7);
    for (int k = 0; k < 100; ++k) {
        const auto n = static_cast<std::size_t>(1 + rng.uniform_below(200));
        const SymbolString t = random_string(n, 1 + static_cast<Symbol>(rng.uniform_below(9)), rng);
        const auto tau = static_cast<std::uint32_t>(1 + rng.uniform_below(6));
        const FrequencySplit split = split_by_frequency(t, tau);

        std::vector<Pos> merged = split.low_map;
        merged.insert(merged.end(), split.high_map.begin(), split.high_map.end());
        std::sort(merged.begin(), merged.end());
        REQUIRE(merged.size() == n);
        for (Pos p = 1; p <= n; ++p) CHECK(merged[p - 1] == p);

        // rebuilding the parent through the maps reproduces it exactly
        std::vector<Symbol> rebuilt(n, 0);
        for (std::size_t q = 0; q < split.low_map.size(); ++q) {
            rebuilt[split.low_map[q] - 1] = split.low.symbols[q];
        }
        for (std::size_t q = 0; q < split.high_map.size(); ++q) {
            rebuilt[split.high_map[q] - 1] = split.high.symbols[q];
        }
        CHECK(rebuilt == t.symbols);
    }
}

TEST_CASE("four-way cover bound holds against the exact oracle") {
    Rng rng(11);
    for (int k = 0; k < 100; ++k) {
        const auto n = static_cast<std::size_t>(1 + rng.uniform_below(60));
        const SymbolString s = random_string(n, 4, rng);
        const SymbolString t = random_string(n, 4, rng);
        const auto tau = static_cast<std::uint32_t>(1 + rng.uniform_below(4));
        const FrequencySplit fs = split_by_frequency(s, tau);
        const FrequencySplit ft = split_by_frequency(t, tau);
        const std::size_t total = testing::lcs_length_dp(fs.low, ft.low) +
                                  testing::lcs_length_dp(fs.low, ft.high) +
                                  testing::lcs_length_dp(fs.high, ft.low) +
                                  testing::lcs_length_dp(fs.high, ft.high);
        CHECK(total >= testing::lcs_length_dp(s, t));
    }
}

TEST_CASE("frequency_split_approx rejects bad eta") {
    const SymbolString s{{0, 1}, 2};
    CHECK_THROWS_AS(frequency_split_approx(s, s, -0.01, 1), std::invalid_argument);
    CHECK_THROWS_AS(frequency_split_approx(s, s, 0.51, 1), std::invalid_argument);
}

TEST_CASE("all-high instance leaves everything in the residual") {
    SymbolString s;
    s.alphabet_size = 1;
    s.symbols.assign(49, 0);  // frequency 49 > tau = 7
    const FrequencySplitResult r = frequency_split_approx(s, s, 0.0, 5);
    CHECK(r.best.empty());
    CHECK(r.residual_s.symbols == s.symbols);
    CHECK(r.residual_t.symbols == s.symbols);
}

TEST_CASE("all-distinct instance is solved exactly by the low/low branch") {
    const std::size_t n = 64;
    SymbolString s;
    s.alphabet_size = static_cast<Symbol>(n);
    for (std::size_t k = 0; k < n; ++k) s.symbols.push_back(static_cast<Symbol>(k));
    const FrequencySplitResult r = frequency_split_approx(s, s, 0.0, 3);
    CHECK(r.residual_s.empty());
    CHECK(r.residual_t.empty());
    CHECK(r.best.size() == n);  // R_sub = n, so p = 1 and the branch is exact
    CHECK(validate_chain(s, s, r.best));
}

TEST_CASE("residual alphabet stays below n/tau and best chains validate") {
    Rng rng(13);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 200 + rng.uniform_below(800);
        const Symbol m = 2 + static_cast<Symbol>(rng.uniform_below(30));
        const SymbolString s = random_string(n, m, rng);
        const SymbolString t = random_string(n, m, rng);
        const double eta = 0.1 * rng.uniform_double();
        const FrequencySplitResult r = frequency_split_approx(s, t, eta, k);

        CHECK(validate_chain(s, t, r.best));
        const auto bound = static_cast<std::size_t>(
            std::ceil(static_cast<double>(n) / static_cast<double>(r.tau)));
        CHECK(distinct(r.residual_s) <= bound);
        CHECK(distinct(r.residual_t) <= bound);

        // residual position maps must address the parents consistently
        for (std::size_t q = 0; q < r.residual_s_map.size(); ++q) {
            CHECK(s.at(r.residual_s_map[q]) == r.residual_s.symbols[q]);
        }
        for (std::size_t q = 0; q < r.residual_t_map.size(); ++q) {
            CHECK(t.at(r.residual_t_map[q]) == r.residual_t.symbols[q]);
        }
    }
}

TEST_CASE("matching pairs of mixed subinstances respect the tau bound") {
    Rng rng(17);
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = 100 + rng.uniform_below(400);
        const Symbol m = 2 + static_cast<Symbol>(rng.uniform_below(12));
        const SymbolString s = random_string(n, m, rng);
        const SymbolString t = random_string(n, m, rng);
        const auto tau =
            static_cast<std::uint32_t>(std::ceil(std::sqrt(static_cast<double>(n))));
        const FrequencySplit fs = split_by_frequency(s, tau);
        const FrequencySplit ft = split_by_frequency(t, tau);
        const std::uint64_t bound = static_cast<std::uint64_t>(tau) * n;
        CHECK(count_matching_pairs(fs.low, ft.low) <= bound);
        CHECK(count_matching_pairs(fs.low, ft.high) <= bound);
        CHECK(count_matching_pairs(fs.high, ft.low) <= bound);
    }
}
