#pragma once

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "flagheight/arith.hpp"
#include "flagheight/lattice.hpp"
#include "flagheight/parabolic.hpp"
#include "flagheight/polynomial.hpp"
#include "flagheight/rootsys.hpp"

namespace flagheight {

/// Finite formal sum of weights with integer (possibly negative) coefficients.
class FormalCharacter {
 public:
  using Map = std::map<Weight, long>;

  FormalCharacter() = default;
  explicit FormalCharacter(Map mult);

  const Map& multiplicities() const { return mult_; }
  long multiplicity(const Weight& mu) const;
  bool is_zero() const { return mult_.empty(); }
  /// Sum of all coefficients (the dimension, for a genuine character).
  long degree() const;

  /// this += scale * other
  void add(const FormalCharacter& other, long scale = 1);
  void add(const Weight& mu, long coefficient);

  FormalCharacter& operator*=(long s);
  friend FormalCharacter operator*(long s, FormalCharacter c) { return c *= s; }
  friend FormalCharacter operator-(FormalCharacter c) { return c *= -1; }
  friend bool operator==(const FormalCharacter&, const FormalCharacter&) = default;

 private:
  Map mult_;
};

// Weyl dimension polynomials d_{rho + m lambda - k alpha} and their graded sums.

/// prod over beta > 0 of (1 + (m <beta^v, lambda> - k <beta^v, alpha>) / <beta^v, rho>).
BivariatePolynomial dim_polynomial(const ParabolicData& pd, const Weight& lambda, const Root& alpha);
/// f_j(m, k): the sum of dim_polynomial over alpha in Psi_j.
BivariatePolynomial graded_dim_sum(const ParabolicData& pd, const Weight& lambda, long j);

// Characters. Irreducible modules are labelled by their highest weight lambda0.

long weyl_dim(const RootSystem& rs, const Weight& lambda0);
Integer weyl_dim_exact(const RootSystem& rs, const Weight& lambda0);

/// Weight multiplicities of the irreducible module of highest weight lambda0.
FormalCharacter freudenthal(const RootSystem& rs, const Weight& lambda0);
/// Multiplicity of mu via Kostant's alternating sum of partition counts.
long kostant_multiplicity(const RootSystem& rs, const Weight& lambda0, const Weight& mu);
/// Number of ways to write gamma (root coordinates) as a sum of positive roots.
Integer kostant_partition_count(const RootSystem& rs, const Root& gamma);

/// The Weyl-character-formula character with numerator weight nu: zero when nu
/// is singular, else (-1)^{l(w)} times the irreducible of highest weight
/// lambda0 where w^{-1} nu = rho + lambda0.
FormalCharacter formal_character(const RootSystem& rs, const Weight& nu);

/// mu(X) for X given by its values x_i = alpha_i(X) on the simple roots.
Rational coweight_pairing(const RootSystem& rs, const Weight& mu, std::span<const Rational> x);

/// Weyl character formula quotient at exp(2 pi i X); X must be regular.
std::complex<double> char_value(const RootSystem& rs, const Weight& nu, std::span<const Rational> x);
/// sum over mu of mult(mu) exp(2 pi i mu(X)).
std::complex<double> multiplicity_sum_value(const RootSystem& rs, const FormalCharacter& ch,
                                            std::span<const Rational> x);
/// Fixed-point (Lefschetz) expansion of the character of highest weight
/// lambda over W / W_theta: Levi characters divided by prod_{alpha in Psi}
/// (1 - exp(-2 pi i w alpha(X))).
std::complex<double> lefschetz_sum(const ParabolicData& pd, const Weight& lambda, std::span<const Rational> x);

/// Throws MathInputError when some root takes an integral value on X.
void require_regular(const RootSystem& rs, std::span<const Rational> x);

}  // namespace flagheight
