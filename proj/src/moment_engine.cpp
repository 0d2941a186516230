#include "gridlink/moment_engine.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <string>

#include "gridlink/error.hpp"
#include "gridlink/parallel.hpp"

namespace gridlink {

SignVector::SignVector(std::vector<int> entries) : entries_(std::move(entries)) {
  for (int e : entries_) {
    if (e != 1 && e != -1) {
      throw Error(ErrorKind::invalid_argument,
                  "sign vector entry " + std::to_string(e) + " is not +-1");
    }
  }
}

SignVector SignVector::from_mask(int length, std::uint32_t mask) {
  std::vector<int> entries(length);
  for (int i = 0; i < length; ++i) entries[i] = (mask >> i) & 1u ? -1 : 1;
  return SignVector(std::move(entries));
}

std::uint32_t SignVector::mask() const noexcept {
  std::uint32_t m = 0;
  for (int i = 0; i < size(); ++i) {
    if (entries_[i] < 0) m |= 1u << i;
  }
  return m;
}

int SignVector::product() const noexcept {
  int p = 1;
  for (int e : entries_) p *= e;
  return p;
}

SignVector SignVector::negated() const {
  std::vector<int> out(entries_);
  for (int& e : out) e = -e;
  return SignVector(std::move(out));
}

namespace {

struct Location {
  int sequence = 0;
  int position = 0;  // block index within the sequence
};

// Symbol ids for one (P, Q) pair and the location of every index in both
// types.
struct PairLayout {
  int order = 0;
  std::vector<Location> in_p;
  std::vector<Location> in_q;
  std::vector<std::vector<int>> x_chain;  // [h][0..l(p_h)]
  std::vector<std::vector<int>> x_block;  // [g][0..l(q_g)-1]
  std::vector<std::vector<int>> y_block;  // [h][0..l(p_h)-1]
  std::vector<std::vector<int>> y_chain;  // [g][0..l(q_g)]
  SymbolSets symbols;
};

std::vector<Location> locate(const SequenceType& type) {
  std::vector<Location> where(type.order());
  const auto& seqs = type.sequences();
  for (int h = 0; h < static_cast<int>(seqs.size()); ++h) {
    for (int m = 0; m < seqs[h].length(); ++m) {
      for (int i : seqs[h].blocks[m]) where[i - 1] = {h, m};
    }
  }
  return where;
}

std::string symbol_name(const char* coordinate, const char* sequence_letter,
                        int first_index, int offset) {
  std::string name = std::string(coordinate) + "_{" + sequence_letter +
                     std::to_string(first_index);
  if (offset > 0) name += "+" + std::to_string(offset);
  return name + "}";
}

PairLayout make_layout(const SequenceType& p, const SequenceType& q) {
  if (p.order() != q.order()) {
    throw Error(ErrorKind::order_mismatch,
                "types of order " + std::to_string(p.order()) + " and " +
                    std::to_string(q.order()));
  }
  PairLayout layout;
  layout.order = p.order();
  layout.in_p = locate(p);
  layout.in_q = locate(q);
  auto& xs = layout.symbols.x.symbols;
  auto& ys = layout.symbols.y.symbols;
  auto add = [](std::vector<std::string>& names, std::string name) {
    names.push_back(std::move(name));
    return static_cast<int>(names.size()) - 1;
  };
  for (const auto& seq : p.sequences()) {
    const int first = seq.blocks[0][0];
    auto& chain = layout.x_chain.emplace_back();
    for (int m = 0; m <= seq.length(); ++m) {
      chain.push_back(add(xs, symbol_name("x", "k", first, m)));
    }
  }
  for (const auto& seq : q.sequences()) {
    const int first = seq.blocks[0][0];
    auto& blocks = layout.x_block.emplace_back();
    for (int j = 0; j < seq.length(); ++j) {
      blocks.push_back(add(xs, symbol_name("x'", "l", first, j)));
    }
  }
  for (const auto& seq : p.sequences()) {
    const int first = seq.blocks[0][0];
    auto& blocks = layout.y_block.emplace_back();
    for (int m = 0; m < seq.length(); ++m) {
      blocks.push_back(add(ys, symbol_name("y", "k", first, m + 1)));
    }
  }
  for (const auto& seq : q.sequences()) {
    const int first = seq.blocks[0][0];
    auto& chain = layout.y_chain.emplace_back();
    for (int j = 0; j <= seq.length(); ++j) {
      chain.push_back(add(ys, symbol_name("y'", "l", first, j)));
    }
  }
  return layout;
}

// Constraint pairs for A^delta (x) or B^delta (y); bit i of `negative`
// set means delta_i = -1.
std::vector<std::pair<int, int>> constraints_for(const PairLayout& layout,
                                                 std::uint32_t negative,
                                                 Axis axis) {
  std::vector<std::pair<int, int>> out;
  out.reserve(2 * layout.order);
  for (int i = 0; i < layout.order; ++i) {
    const Location a = layout.in_p[i];
    const Location b = layout.in_q[i];
    int low, mid, high;
    if (axis == Axis::x) {
      // A: x_{k_i} < x'_{l_i} < x_{k_i+1}
      low = layout.x_chain[a.sequence][a.position];
      mid = layout.x_block[b.sequence][b.position];
      high = layout.x_chain[a.sequence][a.position + 1];
    } else {
      // B: y'_{l_i+1} < y_{k_i+1} < y'_{l_i}
      low = layout.y_chain[b.sequence][b.position + 1];
      mid = layout.y_block[a.sequence][a.position];
      high = layout.y_chain[b.sequence][b.position];
    }
    if ((negative >> i) & 1u) std::swap(low, high);
    out.emplace_back(low, mid);
    out.emplace_back(mid, high);
  }
  return out;
}

std::uint64_t count_order(const SymbolOrder& order,
                          const EngineOptions& options) {
  if (order.size() > options.symbol_limit) {
    throw Error(ErrorKind::too_many_symbols,
                std::to_string(order.size()) + " symbols exceed the limit of " +
                    std::to_string(options.symbol_limit));
  }
  switch (options.algorithm) {
    case CountAlgorithm::dp:
      return count_linear_extensions(order);
    case CountAlgorithm::exhaustive:
      if (order.size() > options.exhaustive_limit) {
        throw Error(ErrorKind::too_many_symbols,
                    std::to_string(order.size()) +
                        " symbols exceed the exhaustive-scan limit of " +
                        std::to_string(options.exhaustive_limit));
      }
      return count_linear_extensions_exhaustive(order);
    case CountAlgorithm::both: {
      const std::uint64_t dp = count_linear_extensions(order);
      if (order.size() <= options.exhaustive_limit) {
        const std::uint64_t scan = count_linear_extensions_exhaustive(order);
        if (scan != dp) {
          throw Error(ErrorKind::cross_check_mismatch,
                      "linear-extension DP gives " + std::to_string(dp) +
                          " but the exhaustive scan gives " +
                          std::to_string(scan));
        }
      }
      return dp;
    }
  }
  return 0;
}

BigInt to_big(unsigned __int128 v) {
  BigInt hi = static_cast<unsigned long>(v >> 64);
  BigInt lo = static_cast<unsigned long>(v & ~std::uint64_t{0});
  return (hi << 64) + lo;
}

BigInt to_big(__int128 v) {
  if (v < 0) return -to_big(static_cast<unsigned __int128>(-v));
  return to_big(static_cast<unsigned __int128>(v));
}

// Every #X_delta and #Y_delta of one pair, indexed by sign mask.
struct OrderingTable {
  int x_size = 0;
  int y_size = 0;
  std::vector<std::uint64_t> x;
  std::vector<std::uint64_t> y;
};

OrderingTable ordering_table(const SequenceType& p, const SequenceType& q,
                             const EngineOptions& options) {
  const PairLayout layout = make_layout(p, q);
  const int u = layout.order;
  const std::uint32_t masks = 1u << u;
  OrderingTable table;
  table.x_size = layout.symbols.x.size();
  table.y_size = layout.symbols.y.size();
  table.x.assign(masks, 0);
  table.y.assign(masks, 0);
  const std::uint32_t all = masks - 1;
  for (Axis axis : {Axis::x, Axis::y}) {
    SymbolOrder order = axis == Axis::x ? layout.symbols.x : layout.symbols.y;
    auto& out = axis == Axis::x ? table.x : table.y;
    // Reversing every inequality maps the solutions for delta bijectively
    // onto those for -delta, so only masks with the top bit clear are
    // counted.
    for (std::uint32_t mask = 0; mask < masks / 2; ++mask) {
      order.constraints = constraints_for(layout, mask, axis);
      out[mask] = count_order(order, options);
      out[mask ^ all] = out[mask];
    }
  }
  return table;
}

unsigned __int128 arrangements(const OrderingTable& table,
                               std::uint32_t epsilon) {
  unsigned __int128 total = 0;
  for (std::uint32_t eta = 0; eta < table.x.size(); ++eta) {
    total += static_cast<unsigned __int128>(table.x[eta]) *
             table.y[eta ^ epsilon];
  }
  return total;
}

__int128 signed_sum(const OrderingTable& table) {
  __int128 total = 0;
  for (std::uint32_t eps = 0; eps < table.x.size(); ++eps) {
    const auto n = static_cast<__int128>(arrangements(table, eps));
    total += (std::popcount(eps) % 2 == 0) ? n : -n;
  }
  return total;
}

Rational inner_from_table(const OrderingTable& table) {
  return make_rational(to_big(signed_sum(table)),
                       factorial(table.x_size) * factorial(table.y_size));
}

void check_sign_length(const SequenceType& p, const SignVector& v) {
  if (v.size() != p.order()) {
    throw Error(ErrorKind::order_mismatch,
                "sign vector of length " + std::to_string(v.size()) +
                    " for types of order " + std::to_string(p.order()));
  }
}

std::vector<PairTerm> pair_terms(const std::vector<SequenceType>& ps,
                                 const std::vector<SequenceType>& qs,
                                 const EngineOptions& options) {
  const std::size_t count = ps.size() * qs.size();
  auto inners = parallel_map(
      count,
      [&](std::size_t idx) {
        const auto& p = ps[idx / qs.size()];
        const auto& q = qs[idx % qs.size()];
        return inner_from_table(ordering_table(p, q, options));
      },
      options.threads);
  std::vector<PairTerm> terms;
  terms.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx) {
    terms.push_back({ps[idx / qs.size()], qs[idx % qs.size()],
                     std::move(inners[idx])});
  }
  return terms;
}

Polynomial moment_sum(int u, bool drop_singletons,
                      const EngineOptions& options,
                      std::vector<PairTerm>* breakdown) {
  const TypeCensus census = enumerate_types(u, drop_singletons ? 2 : 1);
  std::vector<Polynomial> counts;
  counts.reserve(census.types.size());
  for (const auto& t : census.types) {
    counts.push_back(sequence_count_polynomial(t));
  }
  auto terms = pair_terms(census.types, census.types, options);
  Polynomial total;
  const std::size_t width = census.types.size();
  for (std::size_t idx = 0; idx < terms.size(); ++idx) {
    if (terms[idx].inner == 0) continue;
    Polynomial term = counts[idx / width] * counts[idx % width];
    term *= terms[idx].inner;
    total += term;
  }
  if (breakdown) *breakdown = std::move(terms);
  return total;
}

}  // namespace

SymbolSets build_symbols(const SequenceType& p, const SequenceType& q) {
  return make_layout(p, q).symbols;
}

SymbolOrder constrained_symbols(const SequenceType& p, const SequenceType& q,
                                const SignVector& delta, Axis axis) {
  check_sign_length(p, delta);
  const PairLayout layout = make_layout(p, q);
  SymbolOrder order = axis == Axis::x ? layout.symbols.x : layout.symbols.y;
  order.constraints = constraints_for(layout, delta.mask(), axis);
  return order;
}

BigInt count_orderings(const SequenceType& p, const SequenceType& q,
                       const SignVector& delta, Axis axis,
                       const EngineOptions& options) {
  const SymbolOrder order = constrained_symbols(p, q, delta, axis);
  return BigInt(static_cast<unsigned long>(count_order(order, options)));
}

BigInt count_arrangements(const SequenceType& p, const SequenceType& q,
                          const SignVector& epsilon,
                          const EngineOptions& options) {
  check_sign_length(p, epsilon);
  return to_big(arrangements(ordering_table(p, q, options), epsilon.mask()));
}

BigInt signed_arrangement_sum(const SequenceType& p, const SequenceType& q,
                              const EngineOptions& options) {
  return to_big(signed_sum(ordering_table(p, q, options)));
}

Rational inner_sum(const SequenceType& p, const SequenceType& q,
                   const EngineOptions& options) {
  return inner_from_table(ordering_table(p, q, options));
}

MomentPolynomial moment_polynomial(int u, const EngineOptions& options,
                                   bool keep_breakdown) {
  if (u < 1) throw Error(ErrorKind::invalid_argument, "order must be >= 1");
  MomentPolynomial result;
  result.order = u;
  result.n_valid = u + 1;
  result.polynomial =
      moment_sum(u, options.drop_singleton_sequences, options,
                 keep_breakdown ? &result.breakdown : nullptr);
  if (options.verify_unfiltered && options.drop_singleton_sequences) {
    const Polynomial full = moment_sum(u, false, options, nullptr);
    if (!(full == result.polynomial)) {
      throw Error(ErrorKind::cross_check_mismatch,
                  "restricted and unrestricted moment sums differ for u = " +
                      std::to_string(u));
    }
  }
  if (u % 2 == 1 && !result.polynomial.is_zero()) {
    throw Error(ErrorKind::odd_moment_nonzero,
                "odd moment u = " + std::to_string(u) + " is not identically 0");
  }
  return result;
}

LeadingCoefficient leading_coefficient(int u, const EngineOptions& options) {
  if (u < 1 || u % 2 != 0) {
    throw Error(ErrorKind::odd_order,
                "leading coefficient needs an even order, got " +
                    std::to_string(u));
  }
  const TypeCensus census = enumerate_types(u, 2);
  std::vector<SequenceType> paired;
  for (const auto& t : census.types) {
    if (t.sequence_count() == u / 2) paired.push_back(t);
  }
  LeadingCoefficient result;
  result.breakdown = pair_terms(paired, paired, options);
  result.value = 0;
  for (const auto& term : result.breakdown) result.value += term.inner;
  return result;
}

Rational moment_bound(int u) {
  const BigInt top = factorial(2 * u) * factorial(2 * u);
  BigInt power;
  mpz_ui_pow_ui(power.get_mpz_t(), 3, 2 * u);
  const BigInt bottom = factorial(u) * factorial(u);
  return make_rational(top * power, bottom);
}

bool moment_bound_check(int u, const EngineOptions& options) {
  return leading_coefficient(2 * u, options).value <= moment_bound(u);
}

}  // namespace gridlink
