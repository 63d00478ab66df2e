#pragma once

#include <map>
#include <string>
#include <utility>

#include "flagheight/arith.hpp"

namespace flagheight {

/// Sparse polynomial in two commuting indeterminates m and k with exact
/// rational coefficients. Zero coefficients are never stored.
class BivariatePolynomial {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (deg_m, deg_k)
  using Terms = std::map<Exponents, Rational>;

  BivariatePolynomial() = default;
  BivariatePolynomial(const Rational& constant);  // NOLINT(google-explicit-constructor)

  static BivariatePolynomial m();
  static BivariatePolynomial k();
  static BivariatePolynomial monomial(const Rational& c, unsigned deg_m, unsigned deg_k);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(unsigned deg_m, unsigned deg_k) const;

  /// Degrees; -1 for the zero polynomial.
  int degree_m() const;
  int degree_k() const;
  int total_degree() const;

  BivariatePolynomial& operator+=(const BivariatePolynomial& o);
  BivariatePolynomial& operator-=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const BivariatePolynomial& o);
  BivariatePolynomial& operator*=(const Rational& s);

  friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
  friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& s) { return a *= s; }
  friend BivariatePolynomial operator-(BivariatePolynomial a) { return a *= Rational(-1); }
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

  /// Ring homomorphism fixing m and sending k to `replacement`.
  BivariatePolynomial substitute_k(const BivariatePolynomial& replacement) const;
  Rational evaluate(const Rational& m, const Rational& k) const;

  /// Human-readable form such as "-2*k + m + 1".
  std::string to_string() const;

 private:
  void add_term(const Exponents& e, const Rational& c);

  Terms terms_;
};

}  // namespace flagheight
