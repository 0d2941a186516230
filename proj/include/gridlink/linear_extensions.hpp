#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace gridlink {

// Abstract coordinate symbols with strict-inequality constraints between
// them. Constraint {a, b} reads symbols[a] < symbols[b].
struct SymbolOrder {
  std::vector<std::string> symbols;
  std::vector<std::pair<int, int>> constraints;

  int size() const noexcept { return static_cast<int>(symbols.size()); }
};

// Largest symbol set the subset DP accepts (mask width and 64-bit counts).
inline constexpr int kMaxDpSymbols = 20;

// Number of total orders of the symbols consistent with every constraint.
// Dynamic programme over downsets: O(2^w * w). Cyclic constraints give 0.
std::uint64_t count_linear_extensions(const SymbolOrder& order);

// Same count by scanning all w! orders; for cross-checking only.
std::uint64_t count_linear_extensions_exhaustive(const SymbolOrder& order);

}  // namespace gridlink
