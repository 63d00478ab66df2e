#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "flagheight/arith.hpp"
#include "flagheight/parabolic.hpp"
#include "flagheight/weyl.hpp"

namespace flagheight {

enum class HeightMethod { substitution, fixed_point, harmo_bott, closed_form };

std::string to_string(HeightMethod method);

/// Global height h(G/P, L_lambda) with the data needed to audit it.
struct HeightResult {
  Rational value;
  HeightMethod method = HeightMethod::substitution;
  /// Exponent of c_1 in the arithmetic intersection: dim_C(G/P) + 1.
  int dim_plus_one = 0;
  int coxeter = 0;
  /// Prime factorization of the denominator of 2 * value.
  std::map<std::uint64_t, int> denominator_factorization;
};

/// Coefficient of x^k in Ht(x) = sum_k (-x)^k / (2 (k+1) (k+1)!).
Rational ht_coefficient(unsigned k);

/// Coefficient extraction from the graded dimension sums f_j(m, k): every k^l
/// becomes (m j)^{l+1} / (2 (l+1)^2), and the m^{n+1} coefficient is scaled by (n+1)!.
HeightResult height_substitution(const ParabolicData& pd, const Weight& lambda);

/// Localization at the torus-fixed points W/W_theta with the closed inner sum
/// over l (the fixed-point expression of the height).
HeightResult height_fixed_point(const ParabolicData& pd, const Weight& lambda,
                                const std::optional<std::vector<Rational>>& y = std::nullopt,
                                std::uint64_t cap = kDefaultWeylCap);
HeightResult height_fixed_point(const ParabolicData& pd, const Weight& lambda, const CosetList& cosets,
                                const std::vector<Rational>& y);

/// Bott residue evaluation of the characteristic-number form
/// sum_l (-1)^l / (2(l+1)) C(n+1, l+1) sum_j j^{l+1} p_l(E_j) c_1^{n-l}.
HeightResult height_harmo_bott(const ParabolicData& pd, const Weight& lambda,
                               const std::optional<std::vector<Rational>>& y = std::nullopt,
                               std::uint64_t cap = kDefaultWeylCap);
HeightResult height_harmo_bott(const ParabolicData& pd, const Weight& lambda, const CosetList& cosets,
                               const std::vector<Rational>& y);

/// Localization vector given by its values on the simple roots. The default is
/// all ones (the dual of rho); if that is not regular a deterministic search
/// over small positive integer vectors is used.
std::vector<Rational> default_localization(const ParabolicData& pd, const CosetList& cosets);
/// Throws MathInputError naming the fixed point and root where y vanishes.
void require_regular_localization(const ParabolicData& pd, const CosetList& cosets,
                                  const std::vector<Rational>& y);

// Closed forms for special families.
enum class ClosedFormFamily { projective, quadric_even, quadric_odd, hypersurface, grassmannian };

Rational projective_space_height(unsigned n);
Rational quadric_even_height(unsigned m);  // Q_{2m}
Rational quadric_odd_height(unsigned m);   // Q_{2m-1}
Rational hypersurface_height(unsigned n, unsigned d);
/// G(m, k) evaluated with the fixed-point sum over k-subsets of {1..m}, Y = sum nu e_nu^*.
Rational grassmannian_height(unsigned m, unsigned k);
Rational closed_form(ClosedFormFamily family, const std::vector<unsigned>& params);

/// Prime factorization of the denominator of 2 * value.
std::map<std::uint64_t, int> doubled_denominator_factors(const Rational& value);
/// True iff every prime power dividing the denominator of 2 * value is <= bound.
bool denominator_check(const HeightResult& result, std::uint64_t bound);

}  // namespace flagheight
