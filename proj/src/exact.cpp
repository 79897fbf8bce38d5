#include "lcsx/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>

namespace lcsx {

namespace {

// Last DP row of lcs lengths for s[s_lo..s_hi) against t[t_lo..t_hi),
// scanning s forward (or both ranges reversed when backward).
void lcs_row(const SymbolString& s, std::size_t s_lo, std::size_t s_hi, const SymbolString& t,
             std::size_t t_lo, std::size_t t_hi, bool backward, std::vector<std::uint32_t>& row) {
    const std::size_t width = t_hi - t_lo;
    row.assign(width + 1, 0);
    std::vector<std::uint32_t> prev(width + 1, 0);
    for (std::size_t a = 0; a < s_hi - s_lo; ++a) {
        prev.swap(row);
        const Symbol sc =
            backward ? s.symbols[s_hi - 1 - a] : s.symbols[s_lo + a];
        row[0] = 0;
        for (std::size_t b = 0; b < width; ++b) {
            const Symbol tc =
                backward ? t.symbols[t_hi - 1 - b] : t.symbols[t_lo + b];
            if (sc == tc) {
                row[b + 1] = prev[b] + 1;
            } else {
                row[b + 1] = std::max(row[b], prev[b + 1]);
            }
        }
    }
}

void hirschberg(const SymbolString& s, std::size_t s_lo, std::size_t s_hi, const SymbolString& t,
                std::size_t t_lo, std::size_t t_hi, MatchChain& out) {
    const std::size_t s_len = s_hi - s_lo;
    const std::size_t t_len = t_hi - t_lo;
    if (s_len == 0 || t_len == 0) return;
    if (s_len == 1) {
        const Symbol c = s.symbols[s_lo];
        for (std::size_t b = t_lo; b < t_hi; ++b) {
            if (t.symbols[b] == c) {
                out.push_back({static_cast<Pos>(s_lo + 1), static_cast<Pos>(b + 1)});
                return;
            }
        }
        return;
    }
    const std::size_t mid = s_lo + s_len / 2;
    std::vector<std::uint32_t> fwd;
    std::vector<std::uint32_t> bwd;
    lcs_row(s, s_lo, mid, t, t_lo, t_hi, false, fwd);
    lcs_row(s, mid, s_hi, t, t_lo, t_hi, true, bwd);
    std::size_t split = t_lo;
    std::uint32_t best = 0;
    for (std::size_t b = 0; b <= t_len; ++b) {
        const std::uint32_t total = fwd[b] + bwd[t_len - b];
        if (total > best) {
            best = total;
            split = t_lo + b;
        }
    }
    hirschberg(s, s_lo, mid, t, t_lo, split, out);
    hirschberg(s, mid, s_hi, t, split, t_hi, out);
}

// Prefix-maximum Fenwick tree over b-coordinates, tracking the chain
// length and the index of the pair achieving it.
class PrefixMaxTree {
  public:
    explicit PrefixMaxTree(std::size_t size)
        : len_(size + 1, 0), who_(size + 1, kNone) {}

    void update(Pos b, std::uint32_t length, std::uint32_t pair_idx) {
        for (std::size_t k = b; k < len_.size(); k += k & (~k + 1)) {
            if (length > len_[k]) {
                len_[k] = length;
                who_[k] = pair_idx;
            }
        }
    }

    // Best chain over b' in [1, b]; returns (length, pair index).
    std::pair<std::uint32_t, std::uint32_t> query(Pos b) const {
        std::uint32_t best_len = 0;
        std::uint32_t best_who = kNone;
        for (std::size_t k = b; k > 0; k -= k & (~k + 1)) {
            if (len_[k] > best_len) {
                best_len = len_[k];
                best_who = who_[k];
            }
        }
        return {best_len, best_who};
    }

    static constexpr std::uint32_t kNone = std::numeric_limits<std::uint32_t>::max();

  private:
    std::vector<std::uint32_t> len_;
    std::vector<std::uint32_t> who_;
};

}  // namespace

MatchChain lcs_quadratic(const SymbolString& s, const SymbolString& t) {
    MatchChain out;
    hirschberg(s, 0, s.size(), t, 0, t.size(), out);
    return out;
}

MatchChain lis_pairs(const PairSequence& m) {
    if (m.empty()) return {};
    Pos max_b = 0;
    for (const MatchPair& p : m) max_b = std::max(max_b, p.j);
    PrefixMaxTree tree(max_b);
    std::vector<std::uint32_t> parent(m.size(), PrefixMaxTree::kNone);
    std::vector<std::uint32_t> length(m.size(), 1);

    std::uint32_t best_len = 0;
    std::uint32_t best_idx = PrefixMaxTree::kNone;
    std::size_t group_begin = 0;
    while (group_begin < m.size()) {
        std::size_t group_end = group_begin;
        while (group_end < m.size() && m[group_end].i == m[group_begin].i) ++group_end;
        // b descending within the equal-a run; earlier updates from this run
        // sit at larger b and stay invisible to the prefix query.
        for (std::size_t k = group_end; k-- > group_begin;) {
            const MatchPair& p = m[k];
            if (p.j > 1) {
                const auto [len, who] = tree.query(p.j - 1);
                if (len > 0) {
                    length[k] = len + 1;
                    parent[k] = who;
                }
            }
            tree.update(p.j, length[k], static_cast<std::uint32_t>(k));
            if (length[k] > best_len) {
                best_len = length[k];
                best_idx = static_cast<std::uint32_t>(k);
            }
        }
        group_begin = group_end;
    }

    MatchChain chain(best_len);
    for (std::uint32_t k = best_idx; k != PrefixMaxTree::kNone; k = parent[k]) {
        chain[--best_len] = m[k];
    }
    return chain;
}

MatchChain lcs_sparse(const SymbolString& s, const SymbolString& t) {
    const std::uint64_t pair_count = count_matching_pairs(s, t);
    // Dense inputs: the quadratic path is faster and far smaller than
    // materializing R pairs. Same result either way.
    const std::uint64_t n2_quarter =
        static_cast<std::uint64_t>(s.size()) * t.size() / 4;
    constexpr std::uint64_t kPairBudget = 12'000'000;
    if (pair_count > n2_quarter || pair_count > kPairBudget) {
        return lcs_quadratic(s, t);
    }

    const OccurrenceIndex t_index = build_occurrence_index(t);
    PairSequence matches;
    matches.reserve(pair_count);
    for (Pos i = 1; i <= s.size(); ++i) {
        for (Pos j : t_index.positions(s.at(i))) matches.push_back({i, j});
    }
    return lis_pairs(matches);
}

}  // namespace lcsx
