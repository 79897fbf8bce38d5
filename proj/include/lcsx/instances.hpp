#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "lcsx/core.hpp"

namespace lcsx {

enum class InstanceFamily {
    kUniform,           // i.i.d. symbols over m
    kPlanted,           // shared subsequence of known length inside unique noise
    kBlockConstant,     // every block one symbol; forces the block scorer exact
    kBlockPermutation,  // every block an independent shuffled symbol set
};

std::string family_name(InstanceFamily family);
std::optional<InstanceFamily> family_from_name(const std::string& name);

struct InstanceSpec {
    InstanceFamily family = InstanceFamily::kUniform;
    std::size_t n = 0;
    Symbol m = 1;
    std::optional<std::size_t> planted_len;
    std::uint64_t seed = 0;
};

// Generates an instance pair. The planted family interleaves a shared
// random subsequence with noise ids that are unique across both strings,
// so its exact LCS equals planted_len by construction. Throws
// std::invalid_argument on a spec that violates its invariants.
std::pair<SymbolString, SymbolString> generate(const InstanceSpec& spec);

// Plain-text instance format: line 1 "n m", line 2 the n symbols of s,
// line 3 the n symbols of t, all space-separated.
void save_instance(const std::string& path, const SymbolString& s, const SymbolString& t);
std::pair<SymbolString, SymbolString> load_instance(const std::string& path);

}  // namespace lcsx
