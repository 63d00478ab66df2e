#include "flagheight/height.hpp"

#include <algorithm>

#include "flagheight/charpoly.hpp"
#include "flagheight/errors.hpp"

namespace flagheight {

std::string to_string(HeightMethod method) {
  switch (method) {
    case HeightMethod::substitution: return "substitution";
    case HeightMethod::fixed_point: return "fixed-point";
    case HeightMethod::harmo_bott: return "harmo-bott";
    case HeightMethod::closed_form: return "closed-form";
  }
  return "unknown";
}

Rational ht_coefficient(unsigned k) {
  Rational c(1, 2 * (k + 1));
  c /= factorial(k + 1);
  return k % 2 == 0 ? c : Rational(-c);
}

std::map<std::uint64_t, int> doubled_denominator_factors(const Rational& value) {
  const Rational twice = 2 * value;
  return factorize(twice.get_den());
}

namespace {

HeightResult make_result(const ParabolicData& pd, Rational value, HeightMethod method) {
  HeightResult r;
  r.value = std::move(value);
  r.method = method;
  r.dim_plus_one = static_cast<int>(pd.dim()) + 1;
  r.coxeter = pd.roots().coxeter_number();
  r.denominator_factorization = doubled_denominator_factors(r.value);
  return r;
}

// Values of w(lambda) and w(alpha), alpha in Psi, on the localization vector at one fixed point.
struct FixedPointData {
  Rational phi;
  std::vector<Rational> theta;
  Rational theta_product;
};

class Localizer {
 public:
  Localizer(const ParabolicData& pd, const Weight& lambda, const std::vector<Rational>& y)
      : pd_(pd), lambda_(lambda) {
    const RootSystem& rs = pd.roots();
    if (y.size() != rs.rank())
      throw MathInputError("localization vector has length " + std::to_string(y.size()) + ", expected " +
                           std::to_string(rs.rank()));
    // mu(Y) = sum_j weight_values_[j] * mu_j
    for (std::size_t j = 0; j < rs.rank(); ++j) weight_values_.push_back(coweight_pairing(rs, rs.fundamental_weight(j), y));
    for (const Root& alpha : pd.psi()) psi_weights_.push_back(rs.root_to_weight(alpha));
  }

  FixedPointData at(const WeylElement& w) const {
    FixedPointData d;
    d.phi = value(w.act(lambda_));
    d.theta_product = 1;
    for (std::size_t a = 0; a < psi_weights_.size(); ++a) {
      d.theta.push_back(value(w.act(psi_weights_[a])));
      if (d.theta.back() == 0) {
        std::string word;
        for (int i : w.word()) word += std::to_string(i + 1);
        throw MathInputError("localization vector is not regular: w(alpha)(Y) = 0 for alpha = " +
                             pd_.psi()[a].to_string() + " at the fixed point w = s[" + word + "]");
      }
      d.theta_product *= d.theta.back();
    }
    return d;
  }

 private:
  Rational value(const Weight& mu) const {
    Rational s = 0;
    for (std::size_t j = 0; j < mu.size(); ++j)
      if (mu[j] != 0) s += weight_values_[j] * mu[j];
    return s;
  }

  const ParabolicData& pd_;
  Weight lambda_;
  std::vector<Rational> weight_values_;
  std::vector<Weight> psi_weights_;
};

std::vector<long> grading_of(const ParabolicData& pd, const Weight& lambda) {
  psi_grading(pd, lambda);  // validates ampleness
  std::vector<long> j;
  for (const Root& alpha : pd.psi()) j.push_back(pd.roots().coroot_pairing(lambda, alpha));
  return j;
}

}  // namespace

HeightResult height_substitution(const ParabolicData& pd, const Weight& lambda) {
  const PsiGrading grading = psi_grading(pd, lambda);
  const unsigned n = static_cast<unsigned>(pd.dim());
  Rational top = 0;  // coefficient of m^{n+1}
  for (const auto& [j, bucket] : grading.buckets) {
    const BivariatePolynomial f = graded_dim_sum(pd, lambda, j);
    for (const auto& [e, c] : f.terms()) {
      const auto [deg_m, deg_k] = e;
      if (deg_m + deg_k != n) continue;
      const unsigned l = deg_k;
      top += c * power(Rational(j), l + 1) / (2 * (l + 1) * (l + 1));
    }
  }
  return make_result(pd, top * factorial(n + 1), HeightMethod::substitution);
}

HeightResult height_fixed_point(const ParabolicData& pd, const Weight& lambda, const CosetList& cosets,
                                const std::vector<Rational>& y) {
  const std::vector<long> j = grading_of(pd, lambda);
  const Localizer loc(pd, lambda, y);
  const unsigned top = static_cast<unsigned>(pd.dim()) + 1;
  Rational total = 0;
  for (const WeylElement& w : cosets.reps) {
    const FixedPointData d = loc.at(w);
    const Rational phi_top = power(d.phi, top);
    Rational local = 0;
    for (std::size_t a = 0; a < d.theta.size(); ++a) {
      const Rational& theta = d.theta[a];
      const Rational reflected = d.phi - j[a] * theta;  // (S_{w alpha} w lambda)(Y)
      for (unsigned l = 1; l <= top; ++l)
        local += (phi_top - power(d.phi, top - l) * power(reflected, l)) / (2 * l * theta);
    }
    total += local / d.theta_product;
  }
  return make_result(pd, total, HeightMethod::fixed_point);
}

HeightResult height_harmo_bott(const ParabolicData& pd, const Weight& lambda, const CosetList& cosets,
                               const std::vector<Rational>& y) {
  const std::vector<long> j = grading_of(pd, lambda);
  const Localizer loc(pd, lambda, y);
  const unsigned n = static_cast<unsigned>(pd.dim());
  std::vector<Rational> weights;  // (-1)^l C(n+1, l+1) / (2 (l+1))
  for (unsigned l = 0; l <= n; ++l) {
    Rational c = ratio(binomial(n + 1, l + 1), 2 * (l + 1));
    weights.push_back(l % 2 == 0 ? c : Rational(-c));
  }
  Rational total = 0;
  for (const WeylElement& w : cosets.reps) {
    const FixedPointData d = loc.at(w);
    Rational local = 0;
    for (unsigned l = 0; l <= n; ++l) {
      Rational chern = 0;  // sum_j j^{l+1} sum_{alpha in Psi_j} theta^l
      for (std::size_t a = 0; a < d.theta.size(); ++a)
        chern += power(Rational(j[a]), l + 1) * power(d.theta[a], l);
      local += weights[l] * chern * power(d.phi, n - l);
    }
    total += local / d.theta_product;
  }
  return make_result(pd, total, HeightMethod::harmo_bott);
}

void require_regular_localization(const ParabolicData& pd, const CosetList& cosets,
                                  const std::vector<Rational>& y) {
  const Localizer loc(pd, Weight(pd.roots().rank()), y);
  for (const WeylElement& w : cosets.reps) loc.at(w);
}

std::vector<Rational> default_localization(const ParabolicData& pd, const CosetList& cosets) {
  const std::size_t r = pd.roots().rank();
  std::vector<long> digits(r, 1);
  constexpr long kMaxEntry = 6;
  while (true) {
    std::vector<Rational> y(digits.begin(), digits.end());
    try {
      require_regular_localization(pd, cosets, y);
      return y;
    } catch (const MathInputError&) {
    }
    std::size_t i = r;
    while (i > 0 && digits[i - 1] == kMaxEntry) digits[--i] = 1;
    if (i == 0) throw std::logic_error("no regular localization vector with entries up to 6");
    ++digits[i - 1];
  }
}

HeightResult height_fixed_point(const ParabolicData& pd, const Weight& lambda,
                                const std::optional<std::vector<Rational>>& y, std::uint64_t cap) {
  const CosetList cosets = coset_representatives(pd.roots(), pd.theta(), cap);
  return height_fixed_point(pd, lambda, cosets, y ? *y : default_localization(pd, cosets));
}

HeightResult height_harmo_bott(const ParabolicData& pd, const Weight& lambda,
                               const std::optional<std::vector<Rational>>& y, std::uint64_t cap) {
  const CosetList cosets = coset_representatives(pd.roots(), pd.theta(), cap);
  return height_harmo_bott(pd, lambda, cosets, y ? *y : default_localization(pd, cosets));
}

Rational projective_space_height(unsigned n) {
  return ratio(n + 1, 2) * harmonic(n) - ratio(n, 2);
}

Rational quadric_even_height(unsigned m) {
  if (m == 0) throw MathInputError("quadric_even needs m >= 1");
  return Rational(2 * m + 1) * harmonic(2 * m - 1) + harmonic(m - 1) / 2 - Rational(2 * m) + 1 + Rational(1, m);
}

Rational quadric_odd_height(unsigned m) {
  if (m == 0) throw MathInputError("quadric_odd needs m >= 1");
  return Rational(2 * m + 1) * harmonic(2 * m - 1) - harmonic(m - 1) / 2 - Rational(2 * m) + 1;
}

Rational hypersurface_height(unsigned n, unsigned d) {
  Rational sum = 0;
  const Rational one_minus_d = Rational(1) - d;
  for (unsigned l = 2; l <= n + 1; ++l)
    sum += (Rational(d) * (n + 2) - 1 + power(one_minus_d, l)) / (2 * l);
  return sum;
}

Rational grassmannian_height(unsigned m, unsigned k) {
  if (k == 0 || k >= m) throw MathInputError("grassmannian needs 0 < k < m");
  const unsigned top = k * (m - k) + 1;
  Rational total = 0;
  std::vector<bool> chosen(m, false);
  std::fill(chosen.begin(), chosen.begin() + k, true);
  // Enumerate k-subsets I of {1..m} via prev_permutation on a sorted mask.
  do {
    long s = 0;
    for (unsigned c = 0; c < m; ++c)
      if (chosen[c]) s += c + 1;
    const Rational sum_i(s);
    Rational product = 1, inner = 0;
    for (unsigned a = 0; a < m; ++a) {
      if (!chosen[a]) continue;
      for (unsigned b = 0; b < m; ++b) {
        if (chosen[b]) continue;
        const Rational diff(static_cast<long>(a) - static_cast<long>(b));
        product *= diff;
        const Rational ratio = 1 - diff / sum_i;
        for (unsigned l = 1; l <= top; ++l) inner += (1 - power(ratio, l)) / (2 * l * diff);
      }
    }
    total += power(sum_i, top) / product * inner;
  } while (std::prev_permutation(chosen.begin(), chosen.end()));
  return total;
}

Rational closed_form(ClosedFormFamily family, const std::vector<unsigned>& params) {
  auto need = [&params](std::size_t n) {
    if (params.size() != n) throw MathInputError("closed form expects " + std::to_string(n) + " parameters");
  };
  switch (family) {
    case ClosedFormFamily::projective: need(1); return projective_space_height(params[0]);
    case ClosedFormFamily::quadric_even: need(1); return quadric_even_height(params[0]);
    case ClosedFormFamily::quadric_odd: need(1); return quadric_odd_height(params[0]);
    case ClosedFormFamily::hypersurface: need(2); return hypersurface_height(params[0], params[1]);
    case ClosedFormFamily::grassmannian: need(2); return grassmannian_height(params[0], params[1]);
  }
  throw std::logic_error("unknown closed form family");
}

bool denominator_check(const HeightResult& result, std::uint64_t bound) {
  for (const auto& [p, e] : result.denominator_factorization) {
    std::uint64_t q = 1;
    for (int i = 0; i < e; ++i) {
      q *= p;
      if (q > bound) return false;
    }
  }
  return true;
}

}  // namespace flagheight
