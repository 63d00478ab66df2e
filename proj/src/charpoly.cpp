#include "flagheight/charpoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <unordered_map>

#include "flagheight/errors.hpp"
#include "flagheight/weyl.hpp"

namespace flagheight {

FormalCharacter::FormalCharacter(Map mult) {
  for (auto& [mu, c] : mult)
    if (c != 0) mult_.emplace(mu, c);
}

long FormalCharacter::multiplicity(const Weight& mu) const {
  auto it = mult_.find(mu);
  return it == mult_.end() ? 0 : it->second;
}

long FormalCharacter::degree() const {
  long d = 0;
  for (const auto& [mu, c] : mult_) d += c;
  return d;
}

void FormalCharacter::add(const Weight& mu, long coefficient) {
  if (coefficient == 0) return;
  auto [it, inserted] = mult_.emplace(mu, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second == 0) mult_.erase(it);
}

void FormalCharacter::add(const FormalCharacter& other, long scale) {
  if (scale == 0) return;
  for (const auto& [mu, c] : other.mult_) add(mu, scale * c);
}

FormalCharacter& FormalCharacter::operator*=(long s) {
  if (s == 0) mult_.clear();
  for (auto& [mu, c] : mult_) c *= s;
  return *this;
}

BivariatePolynomial dim_polynomial(const ParabolicData& pd, const Weight& lambda, const Root& alpha) {
  const RootSystem& rs = pd.roots();
  if (std::find(pd.psi().begin(), pd.psi().end(), alpha) == pd.psi().end())
    throw MathInputError(alpha.to_string() + " is not in Psi");
  if (!check_ample(pd, lambda)) throw MathInputError("weight " + lambda.to_string() + " is not ample");
  const Weight alpha_w = rs.root_to_weight(alpha);
  BivariatePolynomial d(1);
  for (const Root& beta : rs.positive_roots()) {
    const long denom = rs.coroot_pairing(rs.rho(), beta);
    BivariatePolynomial factor(1);
    factor += BivariatePolynomial::monomial(ratio(rs.coroot_pairing(lambda, beta), denom), 1, 0);
    factor -= BivariatePolynomial::monomial(ratio(rs.coroot_pairing(alpha_w, beta), denom), 0, 1);
    d *= factor;
  }
  return d;
}

BivariatePolynomial graded_dim_sum(const ParabolicData& pd, const Weight& lambda, long j) {
  const PsiGrading grading = psi_grading(pd, lambda);
  BivariatePolynomial f;
  for (const Root& alpha : grading.bucket(j)) f += dim_polynomial(pd, lambda, alpha);
  return f;
}

Integer weyl_dim_exact(const RootSystem& rs, const Weight& lambda0) {
  if (lambda0.size() != rs.rank() || !is_dominant(lambda0))
    throw MathInputError("weight " + lambda0.to_string() + " is not dominant");
  Integer num = 1, den = 1;
  const Weight shifted = lambda0 + rs.rho();
  for (const Root& alpha : rs.positive_roots()) {
    num *= rs.coroot_pairing(shifted, alpha);
    den *= rs.coroot_pairing(rs.rho(), alpha);
  }
  return num / den;
}

long weyl_dim(const RootSystem& rs, const Weight& lambda0) {
  const Integer d = weyl_dim_exact(rs, lambda0);
  if (!d.fits_slong_p()) throw std::overflow_error("dimension exceeds 64 bits");
  return d.get_si();
}

namespace {

using WeightMap = std::unordered_map<Weight, long, LatticeVectorHash<WeightTag>>;

// True iff mu <= lambda0 in the dominance order; level receives the height of lambda0 - mu.
bool below(const RootSystem& rs, const Weight& lambda0, const Weight& mu, long* level) {
  const auto coords = rs.weight_to_root_coords(lambda0 - mu);
  long h = 0;
  for (const auto& c : coords) {
    if (c.get_den() != 1 || c < 0) return false;
    h += c.get_num().get_si();
  }
  if (level) *level = h;
  return true;
}

}  // namespace

FormalCharacter freudenthal(const RootSystem& rs, const Weight& lambda0) {
  if (lambda0.size() != rs.rank() || !is_dominant(lambda0))
    throw MathInputError("weight " + lambda0.to_string() + " is not dominant");

  // Dominant weights of the module: walk down simple-root strings from lambda0,
  // keeping weights whose dominant representative lies below lambda0.
  std::vector<std::pair<long, Weight>> dominant;
  {
    std::unordered_map<Weight, bool, LatticeVectorHash<WeightTag>> seen{{lambda0, true}};
    std::vector<Weight> queue{lambda0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Weight mu = queue[head];
      long level = 0;
      if (is_dominant(mu) && below(rs, lambda0, mu, &level)) dominant.emplace_back(level, mu);
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        Weight next = mu - rs.root_to_weight(rs.simple_root(i));
        if (seen.count(next)) continue;
        const bool is_weight = below(rs, lambda0, dominant_representative(rs, next), nullptr);
        seen.emplace(next, is_weight);
        if (is_weight) queue.push_back(std::move(next));
      }
    }
  }
  std::sort(dominant.begin(), dominant.end());

  const Weight top = lambda0 + rs.rho();
  const Rational top_norm = rs.inner_product(top, top);
  std::vector<Weight> roots_w;
  for (const Root& alpha : rs.positive_roots()) roots_w.push_back(rs.root_to_weight(alpha));

  WeightMap mult;
  auto lookup = [&](const Weight& mu) -> long {
    auto it = mult.find(dominant_representative(rs, mu));
    return it == mult.end() ? -1 : it->second;
  };
  for (const auto& [level, mu] : dominant) {
    if (level == 0) {
      mult[mu] = 1;
      continue;
    }
    Rational sum = 0;
    for (const Weight& alpha : roots_w) {
      Weight shifted = mu + alpha;
      while (true) {
        const long m = lookup(shifted);
        if (m < 0) break;  // left the (unbroken) alpha-string
        sum += rs.inner_product(shifted, alpha) * m;
        shifted += alpha;
      }
    }
    const Weight mr = mu + rs.rho();
    const Rational value = 2 * sum / (top_norm - rs.inner_product(mr, mr));
    if (value.get_den() != 1) throw std::logic_error("non-integral Freudenthal multiplicity");
    mult[mu] = value.get_num().get_si();
  }

  FormalCharacter ch;
  for (const auto& [level, mu] : dominant) {
    const long m = mult[mu];
    if (m == 0) continue;
    for (const Weight& nu : orbit_of_dominant(rs, mu)) ch.add(nu, m);
  }
  return ch;
}

namespace {

class PartitionCounter {
 public:
  explicit PartitionCounter(const RootSystem& rs) : roots_(rs.positive_roots()) {}

  Integer count(std::size_t index, const Root& gamma) {
    if (gamma.is_zero()) return 1;
    if (index == roots_.size()) return 0;
    Key key{index, gamma};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    Integer total = 0;
    Root rest = gamma;
    while (true) {
      total += count(index + 1, rest);
      rest -= roots_[index];
      bool ok = true;
      for (long c : rest.coords()) ok = ok && c >= 0;
      if (!ok) break;
    }
    memo_.emplace(std::move(key), total);
    return total;
  }

 private:
  using Key = std::pair<std::size_t, Root>;
  const std::vector<Root>& roots_;
  std::map<Key, Integer> memo_;
};

}  // namespace

Integer kostant_partition_count(const RootSystem& rs, const Root& gamma) {
  for (long c : gamma.coords())
    if (c < 0) return 0;
  PartitionCounter counter(rs);
  return counter.count(0, gamma);
}

long kostant_multiplicity(const RootSystem& rs, const Weight& lambda0, const Weight& mu) {
  if (lambda0.size() != rs.rank() || !is_dominant(lambda0))
    throw MathInputError("weight " + lambda0.to_string() + " is not dominant");
  PartitionCounter counter(rs);
  const Weight top = lambda0 + rs.rho();
  const Weight target = mu + rs.rho();
  Integer total = 0;
  for (const WeylElement& w : enumerate_weyl(rs)) {
    const auto coords = rs.weight_to_root_coords(w.act(top) - target);
    Root gamma(rs.rank());
    bool ok = true;
    for (std::size_t i = 0; i < coords.size() && ok; ++i) {
      ok = coords[i].get_den() == 1 && coords[i] >= 0;
      if (ok) gamma[i] = coords[i].get_num().get_si();
    }
    if (!ok) continue;
    total += w.sign() * counter.count(0, gamma);
  }
  return total.get_si();
}

FormalCharacter formal_character(const RootSystem& rs, const Weight& nu) {
  const auto bwb = to_dominant_dotted(rs, nu - rs.rho());
  if (!bwb) return {};
  return bwb->w.sign() * freudenthal(rs, bwb->lambda0);
}

Rational coweight_pairing(const RootSystem& rs, const Weight& mu, std::span<const Rational> x) {
  if (x.size() != rs.rank()) throw MathInputError("coweight vector has wrong length");
  const auto coords = rs.weight_to_root_coords(mu);
  Rational s = 0;
  for (std::size_t i = 0; i < coords.size(); ++i) s += coords[i] * x[i];
  return s;
}

namespace {

// exp(2 pi i t) with t reduced modulo 1 exactly before rounding.
std::complex<double> unit_phase(const Rational& t) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), t.get_num_mpz_t(), t.get_den_mpz_t());
  const Rational frac = t - fl;
  return std::polar(1.0, 2.0 * std::numbers::pi * frac.get_d());
}

Rational root_value(const Root& alpha, std::span<const Rational> x) {
  Rational s = 0;
  for (std::size_t i = 0; i < alpha.size(); ++i) s += x[i] * alpha[i];
  return s;
}

}  // namespace

void require_regular(const RootSystem& rs, std::span<const Rational> x) {
  if (x.size() != rs.rank()) throw MathInputError("coweight vector has wrong length");
  for (const Root& alpha : rs.positive_roots()) {
    const Rational v = root_value(alpha, x);
    if (v.get_den() == 1)
      throw MathInputError("X is not regular: root " + alpha.to_string() + " takes the integral value " +
                           v.get_str());
  }
}

std::complex<double> char_value(const RootSystem& rs, const Weight& nu, std::span<const Rational> x) {
  require_regular(rs, x);
  std::complex<double> num = 0, den = 0;
  for (const WeylElement& w : enumerate_weyl(rs)) {
    num += static_cast<double>(w.sign()) * unit_phase(coweight_pairing(rs, w.act(nu), x));
    den += static_cast<double>(w.sign()) * unit_phase(coweight_pairing(rs, w.act(rs.rho()), x));
  }
  return num / den;
}

std::complex<double> multiplicity_sum_value(const RootSystem& rs, const FormalCharacter& ch,
                                            std::span<const Rational> x) {
  std::complex<double> s = 0;
  for (const auto& [mu, c] : ch.multiplicities())
    s += static_cast<double>(c) * unit_phase(coweight_pairing(rs, mu, x));
  return s;
}

std::complex<double> lefschetz_sum(const ParabolicData& pd, const Weight& lambda, std::span<const Rational> x) {
  const RootSystem& rs = pd.roots();
  require_regular(rs, x);
  if (!is_dominant(lambda)) throw MathInputError("weight " + lambda.to_string() + " is not dominant");

  // Levi character via its own Weyl formula; 2 rho_K keeps everything integral.
  Weight two_rho_levi(rs.rank());
  for (const Root& beta : pd.levi_positive()) two_rho_levi += rs.root_to_weight(beta);
  const Weight two_top = 2 * lambda + two_rho_levi;
  const auto levi_group = enumerate_parabolic_subgroup(rs, pd.theta());
  const auto cosets = coset_representatives(rs, pd.theta());

  std::complex<double> total = 0;
  for (const WeylElement& w : cosets.reps) {
    std::complex<double> num = 0, den = 0;
    for (const WeylElement& v : levi_group) {
      const IntMatrix wv = w.matrix() * v.matrix();
      num += static_cast<double>(v.sign()) * unit_phase(coweight_pairing(rs, wv.apply(two_top), x) / 2);
      den += static_cast<double>(v.sign()) * unit_phase(coweight_pairing(rs, wv.apply(two_rho_levi), x) / 2);
    }
    std::complex<double> euler = 1;
    for (const Root& alpha : pd.psi())
      euler *= 1.0 - unit_phase(-coweight_pairing(rs, w.act(rs.root_to_weight(alpha)), x));
    total += num / den / euler;
  }
  return total;
}

}  // namespace flagheight
