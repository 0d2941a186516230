#pragma once

#include <cstdint>
#include <vector>

#include "gridlink/exact.hpp"
#include "gridlink/linear_extensions.hpp"
#include "gridlink/type_census.hpp"

namespace gridlink {

// A vector over {-1, +1}.
class SignVector {
public:
  // Throws Error{invalid_argument} on entries other than -1 and +1.
  explicit SignVector(std::vector<int> entries);
  // Bit i set means entry i is -1.
  static SignVector from_mask(int length, std::uint32_t mask);

  int size() const noexcept { return static_cast<int>(entries_.size()); }
  const std::vector<int>& entries() const noexcept { return entries_; }
  std::uint32_t mask() const noexcept;
  int product() const noexcept;
  SignVector negated() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;

private:
  std::vector<int> entries_;
};

enum class Axis { x, y };

// Coordinate symbols used by the crossing conditions of a type pair. The x
// set has a chain x_{k+0..l(p)} per P-sequence and one x' per Q-block; the y
// set has one y per P-block and a chain y'_{l+0..l(q)} per Q-sequence.
// Constraints are left empty; they depend on the sign vector.
struct SymbolSets {
  SymbolOrder x;
  SymbolOrder y;
};

// Throws Error{order_mismatch} when P and Q have different orders.
SymbolSets build_symbols(const SequenceType& p, const SequenceType& q);

enum class CountAlgorithm {
  dp,          // downset dynamic programme
  exhaustive,  // scan of all orders
  both,        // run both and require agreement where exhaustive is allowed
};

struct EngineOptions {
  int symbol_limit = 14;
  // The exhaustive scan only runs up to this many symbols.
  int exhaustive_limit = 10;
  CountAlgorithm algorithm = CountAlgorithm::dp;
  // Restrict the moment sum to types whose sequences all hold >= 2 indices.
  bool drop_singleton_sequences = true;
  // For u <= 2 also evaluate the unrestricted sum and require equality.
  bool verify_unfiltered = false;
  int threads = 1;
};

// The symbol set of one axis with the constraints of A^delta (x axis) or
// B^delta (y axis) attached.
SymbolOrder constrained_symbols(const SequenceType& p, const SequenceType& q,
                                const SignVector& delta, Axis axis);

// #X_{P,Q,delta} or #Y_{P,Q,delta}. Throws Error{too_many_symbols}.
BigInt count_orderings(const SequenceType& p, const SequenceType& q,
                       const SignVector& delta, Axis axis,
                       const EngineOptions& options = {});

// N_{P,Q,eps} = sum over eta of #X_eta * #Y_{eta*eps}.
BigInt count_arrangements(const SequenceType& p, const SequenceType& q,
                          const SignVector& epsilon,
                          const EngineOptions& options = {});

// sum over eps of (prod eps_i) N_{P,Q,eps}; its vanishing is what lets the
// moment sum skip types with a singleton sequence.
BigInt signed_arrangement_sum(const SequenceType& p, const SequenceType& q,
                              const EngineOptions& options = {});

// sum over eps of (prod eps_i) N_{P,Q,eps} / (#X! #Y!).
Rational inner_sum(const SequenceType& p, const SequenceType& q,
                   const EngineOptions& options = {});

struct PairTerm {
  SequenceType p;
  SequenceType q;
  Rational inner;
};

struct MomentPolynomial {
  int order = 0;
  Polynomial polynomial;  // E[lk^u] as a polynomial in n
  int n_valid = 0;        // the closed form holds for n >= n_valid
  std::vector<PairTerm> breakdown;

  Rational leading() const { return polynomial.coefficient(order); }
  Rational at(int n) const { return polynomial.evaluate(Rational(n)); }
};

// E[lk^u](n) as an exact polynomial. Odd orders are computed and must come
// out zero (Error{odd_moment_nonzero} otherwise).
MomentPolynomial moment_polynomial(int u, const EngineOptions& options = {},
                                   bool keep_breakdown = false);

struct LeadingCoefficient {
  Rational value;
  std::vector<PairTerm> breakdown;
};

// a_u from the pairs with s = t = u/2 and every sequence of size exactly 2.
// Throws Error{odd_order}.
LeadingCoefficient leading_coefficient(int u,
                                       const EngineOptions& options = {});

// (2u)!^2 3^(2u) / u!^2.
Rational moment_bound(int u);
// a_{2u} <= moment_bound(u).
bool moment_bound_check(int u, const EngineOptions& options = {});

}  // namespace gridlink
