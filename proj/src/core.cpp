#include "lcsx/core.hpp"

#include <algorithm>

namespace lcsx {

std::pair<SymbolString, SymbolString> pad_pair(const SymbolString& s, const SymbolString& t) {
    const Symbol shared_alphabet = std::max(s.alphabet_size, t.alphabet_size);
    if (s.size() == t.size()) {
        SymbolString ps = s;
        SymbolString pt = t;
        ps.alphabet_size = shared_alphabet;
        pt.alphabet_size = shared_alphabet;
        return {std::move(ps), std::move(pt)};
    }
    const Symbol sentinel = shared_alphabet;
    const std::size_t target = std::max(s.size(), t.size());
    SymbolString ps = s;
    SymbolString pt = t;
    ps.symbols.resize(target, sentinel);
    pt.symbols.resize(target, sentinel);
    ps.alphabet_size = sentinel + 1;
    pt.alphabet_size = sentinel + 1;
    return {std::move(ps), std::move(pt)};
}

OccurrenceIndex build_occurrence_index(const SymbolString& s) {
    OccurrenceIndex idx;
    idx.length = static_cast<Pos>(s.size());
    Symbol max_symbol = 0;
    for (Symbol c : s.symbols) max_symbol = std::max(max_symbol, c);
    idx.by_symbol.resize(s.empty() ? 0 : max_symbol + 1);
    for (Pos p = 1; p <= idx.length; ++p) idx.by_symbol[s.at(p)].push_back(p);
    return idx;
}

FrequencyTable build_frequency_table(const SymbolString& s) {
    FrequencyTable table;
    Symbol max_symbol = 0;
    for (Symbol c : s.symbols) max_symbol = std::max(max_symbol, c);
    table.counts.assign(s.empty() ? 0 : max_symbol + 1, 0);
    for (Symbol c : s.symbols) ++table.counts[c];
    return table;
}

std::optional<Pos> first_occurrence_after(const OccurrenceIndex& idx, Symbol symbol, Pos k) {
    const auto& occ = idx.positions(symbol);
    auto it = std::upper_bound(occ.begin(), occ.end(), k);
    if (it == occ.end()) return std::nullopt;
    return *it;
}

std::uint64_t count_matching_pairs(const SymbolString& s, const SymbolString& t) {
    const FrequencyTable freq = build_frequency_table(t);
    std::uint64_t total = 0;
    for (Symbol c : s.symbols) total += freq.count(c);
    return total;
}

bool validate_chain(const SymbolString& s, const SymbolString& t, const MatchChain& chain) {
    Pos prev_i = 0;
    Pos prev_j = 0;
    for (const MatchPair& p : chain) {
        if (p.i <= prev_i || p.j <= prev_j) return false;
        if (p.i > s.size() || p.j > t.size()) return false;
        if (s.at(p.i) != t.at(p.j)) return false;
        prev_i = p.i;
        prev_j = p.j;
    }
    return true;
}

MatchChain remap_chain(const MatchChain& chain, const std::vector<Pos>* map_i,
                       const std::vector<Pos>* map_j) {
    MatchChain out;
    out.reserve(chain.size());
    for (const MatchPair& p : chain) {
        out.push_back({map_i ? (*map_i)[p.i - 1] : p.i, map_j ? (*map_j)[p.j - 1] : p.j});
    }
    return out;
}

}  // namespace lcsx
