#pragma once

#include <string>
#include <vector>

#include "tldkit/bigint.hpp"

namespace tldkit {

// Univariate polynomial in the loop parameter d with big-integer
// coefficients, stored densely by degree. Canonical form: the highest
// stored coefficient is nonzero; the zero polynomial stores nothing.
class Poly {
public:
  Poly() = default;
  explicit Poly(BigInt constant);
  explicit Poly(long constant) : Poly(BigInt(constant)) {}

  static Poly monomial(BigInt coeff, int degree);
  static Poly variable() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  BigInt coeff(int deg) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator-() const;

  bool operator==(const Poly&) const = default;

  // Multiplies by coeff*d^degree in place.
  Poly& scale_by_monomial(const BigInt& coeff, int degree);

  Rational eval(const Rational& x) const;

  // Canonical text: strictly descending degrees, no spaces, e.g.
  // "d^3-2*d"; the zero polynomial is "0".
  std::string str() const;
  static Poly parse(const std::string& text);

private:
  friend Poly divexact(const Poly& a, const Poly& b);
  std::vector<BigInt> coeffs_;
  void trim();
};

// Exact quotient a / b; throws DivisionByZero when b = 0 and
// NotDivisible when b does not divide a over the integers.
Poly divexact(const Poly& a, const Poly& b);

// base^exp with exp >= 0 (exp = 0 gives 1).
Poly power(const Poly& base, long exp);

// Chebyshev-like sequence of the second kind:
// P_0 = 0, P_1 = 1, P_{s+1} = d*P_s - P_{s-1}.
Poly chebyshev_p(int s);

// Companion sequence used by the type-D determinants:
// Q_1 = 1 (convention), Q_2 = d^2, Q_3 = d^3-2d,
// Q_{t+1} = d*Q_t - Q_{t-1} for t >= 3. Throws InvalidIndex for t < 1.
Poly chebyshev_q(int t);

} // namespace tldkit
