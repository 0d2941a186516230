#include "gridlink/linear_extensions.hpp"

#include <algorithm>
#include <numeric>

#include "gridlink/error.hpp"

namespace gridlink {
namespace {

void check_constraints(const SymbolOrder& order) {
  for (const auto& [a, b] : order.constraints) {
    if (a < 0 || b < 0 || a >= order.size() || b >= order.size()) {
      throw Error(ErrorKind::invalid_argument,
                  "constraint references an undeclared symbol");
    }
    if (a == b) {
      throw Error(ErrorKind::invalid_argument,
                  "symbol " + order.symbols[a] + " compared with itself");
    }
  }
}

}  // namespace

std::uint64_t count_linear_extensions(const SymbolOrder& order) {
  check_constraints(order);
  const int w = order.size();
  if (w > kMaxDpSymbols) {
    throw Error(ErrorKind::too_many_symbols,
                std::to_string(w) + " symbols exceed the DP limit of " +
                    std::to_string(kMaxDpSymbols));
  }
  std::vector<std::uint32_t> preds(w, 0);
  for (const auto& [a, b] : order.constraints) preds[b] |= 1u << a;

  const std::uint32_t full = (1u << w) - 1;
  std::vector<std::uint64_t> ways(std::size_t{1} << w, 0);
  ways[0] = 1;
  for (std::uint32_t mask = 0; mask < full; ++mask) {
    const std::uint64_t here = ways[mask];
    if (here == 0) continue;
    for (int v = 0; v < w; ++v) {
      const std::uint32_t bit = 1u << v;
      if ((mask & bit) == 0 && (preds[v] & ~mask) == 0) {
        ways[mask | bit] += here;
      }
    }
  }
  return ways[full];
}

std::uint64_t count_linear_extensions_exhaustive(const SymbolOrder& order) {
  check_constraints(order);
  const int w = order.size();
  // rank[symbol] = position in the candidate order.
  std::vector<int> rank(w);
  std::iota(rank.begin(), rank.end(), 0);
  std::uint64_t count = 0;
  do {
    const bool ok = std::all_of(
        order.constraints.begin(), order.constraints.end(),
        [&](const auto& c) { return rank[c.first] < rank[c.second]; });
    if (ok) ++count;
  } while (std::next_permutation(rank.begin(), rank.end()));
  return count;
}

}  // namespace gridlink
