#include "lcsx/instances.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "lcsx/rng.hpp"

namespace lcsx {

std::string family_name(InstanceFamily family) {
    switch (family) {
        case InstanceFamily::kUniform: return "uniform";
        case InstanceFamily::kPlanted: return "planted";
        case InstanceFamily::kBlockConstant: return "block_constant";
        case InstanceFamily::kBlockPermutation: return "block_permutation";
    }
    return "unknown";
}

std::optional<InstanceFamily> family_from_name(const std::string& name) {
    if (name == "uniform") return InstanceFamily::kUniform;
    if (name == "planted") return InstanceFamily::kPlanted;
    if (name == "block_constant") return InstanceFamily::kBlockConstant;
    if (name == "block_permutation") return InstanceFamily::kBlockPermutation;
    return std::nullopt;
}

namespace {

SymbolString uniform_string(std::size_t n, Symbol m, Rng& rng) {
    SymbolString s;
    s.alphabet_size = m;
    s.symbols.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        s.symbols.push_back(static_cast<Symbol>(rng.uniform_below(m)));
    }
    return s;
}

// Sorted choice of `count` positions out of 1..n (reservoir-free: shuffle a
// prefix would bias; use the classic sequential selection).
std::vector<Pos> choose_positions(std::size_t n, std::size_t count, Rng& rng) {
    std::vector<Pos> picks;
    picks.reserve(count);
    std::size_t needed = count;
    for (std::size_t p = 1; p <= n && needed > 0; ++p) {
        const std::size_t remaining = n - p + 1;
        if (rng.uniform_below(remaining) < needed) {
            picks.push_back(static_cast<Pos>(p));
            --needed;
        }
    }
    return picks;
}

SymbolString plant(std::size_t n, const std::vector<Symbol>& planted, Symbol m, Symbol& next_noise,
                   Rng& rng) {
    SymbolString s;
    s.symbols.assign(n, 0);
    const std::vector<Pos> positions = choose_positions(n, planted.size(), rng);
    std::vector<bool> is_planted(n + 1, false);
    for (std::size_t k = 0; k < positions.size(); ++k) {
        s.symbols[positions[k] - 1] = planted[k];
        is_planted[positions[k]] = true;
    }
    for (std::size_t p = 1; p <= n; ++p) {
        if (!is_planted[p]) s.symbols[p - 1] = next_noise++;
    }
    s.alphabet_size = std::max<Symbol>(m, next_noise);
    return s;
}

}  // namespace

std::pair<SymbolString, SymbolString> generate(const InstanceSpec& spec) {
    if (spec.n == 0) throw std::invalid_argument("generate: n must be positive");
    if (spec.m < 1) throw std::invalid_argument("generate: m must be >= 1");
    if (spec.planted_len && *spec.planted_len > spec.n) {
        throw std::invalid_argument("generate: planted_len exceeds n");
    }
    Rng rng(derive_seed(spec.seed, 0xbe5c));

    switch (spec.family) {
        case InstanceFamily::kUniform: {
            SymbolString s = uniform_string(spec.n, spec.m, rng);
            SymbolString t = uniform_string(spec.n, spec.m, rng);
            return {std::move(s), std::move(t)};
        }
        case InstanceFamily::kPlanted: {
            if (!spec.planted_len) throw std::invalid_argument("generate: planted_len required");
            std::vector<Symbol> planted(*spec.planted_len);
            for (auto& c : planted) c = static_cast<Symbol>(rng.uniform_below(spec.m));
            Symbol next_noise = spec.m;
            SymbolString s = plant(spec.n, planted, spec.m, next_noise, rng);
            SymbolString t = plant(spec.n, planted, spec.m, next_noise, rng);
            s.alphabet_size = t.alphabet_size = std::max(s.alphabet_size, t.alphabet_size);
            return {std::move(s), std::move(t)};
        }
        case InstanceFamily::kBlockConstant: {
            // Both strings carry the same block-symbol sequence, which pins
            // the whole diagonal of the block scorer to full block size.
            const auto block =
                static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(spec.n))));
            SymbolString s;
            s.alphabet_size = spec.m;
            s.symbols.reserve(spec.n);
            while (s.symbols.size() < spec.n) {
                const auto c = static_cast<Symbol>(rng.uniform_below(spec.m));
                for (std::size_t k = 0; k < block && s.symbols.size() < spec.n; ++k) {
                    s.symbols.push_back(c);
                }
            }
            return {s, s};
        }
        case InstanceFamily::kBlockPermutation: {
            const auto block =
                static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(spec.n))));
            const Symbol k = std::min<Symbol>(spec.m, static_cast<Symbol>(block));
            const auto fill = [&](SymbolString& out) {
                out.alphabet_size = spec.m;
                out.symbols.reserve(spec.n);
                std::vector<Symbol> deck(k);
                while (out.symbols.size() < spec.n) {
                    for (Symbol c = 0; c < k; ++c) deck[c] = c;
                    for (Symbol c = k; c > 1; --c) {
                        std::swap(deck[c - 1], deck[rng.uniform_below(c)]);
                    }
                    const std::size_t block_left =
                        std::min<std::size_t>(block, spec.n - out.symbols.size());
                    const std::size_t take = std::min<std::size_t>(block_left, k);
                    out.symbols.insert(out.symbols.end(), deck.begin(), deck.begin() + take);
                    // A block wider than the symbol set keeps drawing fresh
                    // shuffles until the span is filled.
                    std::size_t filled = take;
                    while (filled < block_left) {
                        for (Symbol c = k; c > 1; --c) {
                            std::swap(deck[c - 1], deck[rng.uniform_below(c)]);
                        }
                        const std::size_t extra = std::min<std::size_t>(block_left - filled, k);
                        out.symbols.insert(out.symbols.end(), deck.begin(), deck.begin() + extra);
                        filled += extra;
                    }
                }
            };
            SymbolString s;
            SymbolString t;
            fill(s);
            fill(t);
            return {std::move(s), std::move(t)};
        }
    }
    throw std::invalid_argument("generate: unknown family");
}

void save_instance(const std::string& path, const SymbolString& s, const SymbolString& t) {
    if (s.size() != t.size()) throw std::invalid_argument("save_instance: lengths differ");
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("save_instance: cannot open " + path);
    out << s.size() << ' ' << std::max(s.alphabet_size, t.alphabet_size) << '\n';
    for (std::size_t k = 0; k < s.size(); ++k) out << (k ? " " : "") << s.symbols[k];
    out << '\n';
    for (std::size_t k = 0; k < t.size(); ++k) out << (k ? " " : "") << t.symbols[k];
    out << '\n';
}

std::pair<SymbolString, SymbolString> load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_instance: cannot open " + path);
    std::size_t n = 0;
    Symbol m = 0;
    if (!(in >> n >> m)) throw std::runtime_error("load_instance: malformed header");
    SymbolString s;
    SymbolString t;
    s.alphabet_size = t.alphabet_size = m;
    s.symbols.resize(n);
    t.symbols.resize(n);
    for (auto& c : s.symbols) {
        if (!(in >> c)) throw std::runtime_error("load_instance: truncated first string");
    }
    for (auto& c : t.symbols) {
        if (!(in >> c)) throw std::runtime_error("load_instance: truncated second string");
    }
    return {std::move(s), std::move(t)};
}

}  // namespace lcsx
