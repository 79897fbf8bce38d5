#include <doctest.h>

#include "lcsx/core.hpp"
#include "lcsx/rng.hpp"
#include "oracles.hpp"

using namespace lcsx;

namespace {

SymbolString str(std::vector<Symbol> symbols, Symbol alphabet) {
    return {std::move(symbols), alphabet};
}

SymbolString random_string(std::size_t n, Symbol m, Rng& rng) {
    SymbolString s;
    s.alphabet_size = m;
    for (std::size_t k = 0; k < n; ++k) {
        s.symbols.push_back(static_cast<Symbol>(rng.uniform_below(m)));
    }
    return s;
}

}  // namespace

TEST_CASE("pad_pair leaves equal lengths alone") {
    const auto [a, b] = pad_pair(str({0, 1}, 2), str({0, 1}, 2));
    CHECK(a.symbols == std::vector<Symbol>{0, 1});
    CHECK(b.symbols == std::vector<Symbol>{0, 1});
}

TEST_CASE("pad_pair extends the shorter side with a fresh sentinel") {
    const auto [a, b] = pad_pair(str({0}, 3), str({0, 1, 2}, 3));
    REQUIRE(a.size() == 3);
    CHECK(a.symbols[0] == 0);
    CHECK(a.symbols[1] == a.symbols[2]);
    CHECK(a.symbols[1] >= 3);  // never collides with either alphabet
    CHECK(b.symbols == std::vector<Symbol>{0, 1, 2});
    CHECK(testing::lcs_length_dp(a, b) == 1);
}

TEST_CASE("pad_pair on an empty string") {
    const auto [a, b] = pad_pair(str({}, 0), str({5, 5}, 6));
    REQUIRE(a.size() == 2);
    CHECK(a.symbols[0] == a.symbols[1]);
    CHECK(testing::lcs_length_dp(a, b) == 0);
}

TEST_CASE("pad_pair never changes the exact LCS") {
    Rng rng(101);
    for (int k = 0; k < 200; ++k) {
        const auto n1 = static_cast<std::size_t>(rng.uniform_below(9));
        const auto n2 = static_cast<std::size_t>(rng.uniform_below(9));
        const Symbol m = 1 + static_cast<Symbol>(rng.uniform_below(4));
        const SymbolString s = random_string(n1, m, rng);
        const SymbolString t = random_string(n2, m, rng);
        const auto [ps, pt] = pad_pair(s, t);
        CHECK(testing::lcs_exhaustive(ps, pt) == testing::lcs_exhaustive(s, t));
    }
}

TEST_CASE("occurrence index reads off positions") {
    const OccurrenceIndex idx = build_occurrence_index(str({0, 1, 0}, 2));
    CHECK(idx.positions(0) == std::vector<Pos>{1, 3});
    CHECK(idx.positions(1) == std::vector<Pos>{2});
    CHECK(idx.positions(7).empty());

    const OccurrenceIndex empty = build_occurrence_index(str({}, 0));
    CHECK(empty.positions(0).empty());

    const OccurrenceIndex repeated = build_occurrence_index(str({7, 7, 7}, 8));
    CHECK(repeated.positions(7) == std::vector<Pos>{1, 2, 3});
}

TEST_CASE("occurrence index lists form a permutation of 1..n") {
    Rng rng(55);
    const SymbolString s = random_string(200, 7, rng);
    const OccurrenceIndex idx = build_occurrence_index(s);
    std::vector<bool> seen(s.size() + 1, false);
    for (const auto& list : idx.by_symbol) {
        for (std::size_t k = 0; k + 1 < list.size(); ++k) CHECK(list[k] < list[k + 1]);
        for (Pos p : list) {
            CHECK(!seen[p]);
            seen[p] = true;
        }
    }
    for (Pos p = 1; p <= s.size(); ++p) CHECK(seen[p]);
}

TEST_CASE("first_occurrence_after worked cases") {
    const OccurrenceIndex idx = build_occurrence_index(str({0, 1, 0}, 2));
    CHECK(first_occurrence_after(idx, 0, 1) == Pos{3});
    CHECK(!first_occurrence_after(idx, 1, 2).has_value());
    CHECK(first_occurrence_after(idx, 0, 0) == Pos{1});
}

TEST_CASE("first_occurrence_after agrees with a linear scan") {
    Rng rng(77);
    for (int k = 0; k < 1000; ++k) {
        const auto n = static_cast<std::size_t>(1 + rng.uniform_below(40));
        const Symbol m = 1 + static_cast<Symbol>(rng.uniform_below(6));
        const SymbolString s = random_string(n, m, rng);
        const OccurrenceIndex idx = build_occurrence_index(s);
        const auto symbol = static_cast<Symbol>(rng.uniform_below(m + 1));
        const auto after = static_cast<Pos>(rng.uniform_below(n + 1));
        CHECK(first_occurrence_after(idx, symbol, after) ==
              testing::first_after_scan(s, symbol, after));
    }
}

TEST_CASE("count_matching_pairs worked cases") {
    CHECK(count_matching_pairs(str({0, 0, 1}, 2), str({0, 1, 0}, 2)) == 5);
    CHECK(count_matching_pairs(str({0}, 2), str({1}, 2)) == 0);
    CHECK(count_matching_pairs(str({3, 3}, 4), str({3, 3}, 4)) == 4);
}

TEST_CASE("count_matching_pairs is symmetric and reflexive-bounded") {
    Rng rng(31);
    for (int k = 0; k < 200; ++k) {
        const SymbolString s = random_string(1 + rng.uniform_below(50), 4, rng);
        const SymbolString t = random_string(1 + rng.uniform_below(50), 4, rng);
        CHECK(count_matching_pairs(s, t) == count_matching_pairs(t, s));
        CHECK(count_matching_pairs(s, s) >= s.size());
    }
}

TEST_CASE("validate_chain accepts and rejects as specified") {
    const SymbolString ab = str({0, 1}, 2);
    CHECK(validate_chain(ab, ab, {{1, 1}, {2, 2}}));
    CHECK(!validate_chain(ab, str({1, 0}, 2), {{1, 2}, {2, 1}}));  // j decreases
    CHECK(!validate_chain(ab, ab, {{1, 2}}));                      // symbol mismatch
    CHECK(validate_chain(ab, ab, {}));
    CHECK(!validate_chain(ab, ab, {{0, 1}}));  // positions are 1-based
    CHECK(!validate_chain(ab, ab, {{3, 3}}));  // out of range
}
