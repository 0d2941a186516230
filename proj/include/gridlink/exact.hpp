#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace gridlink {

using BigInt = mpz_class;
// Always held in canonical form: gcd(|num|, den) = 1, den > 0.
using Rational = mpq_class;

Rational make_rational(const BigInt& num, const BigInt& den);

// "num/den", including "0/1" and "5/1" for integers.
std::string to_string(const Rational& q);
// Accepts "num/den" or a bare integer.
Rational parse_rational(const std::string& text);

BigInt factorial(unsigned long k);

// Dense univariate polynomial with rational coefficients, ascending degree.
// The zero polynomial has no coefficients.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  // The monic linear factor (n - root).
  static Polynomial linear(const Rational& root);

  const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }
  // -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Rational coefficient(int power) const;

  Rational evaluate(const Rational& n) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator*=(const Rational& scalar);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    return a += b;
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  void trim();

  std::vector<Rational> coeffs_;
};

}  // namespace gridlink
