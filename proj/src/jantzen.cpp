#include "flagheight/jantzen.hpp"

#include <unordered_map>

#include "flagheight/arith.hpp"
#include "flagheight/errors.hpp"
#include "flagheight/weyl.hpp"

namespace flagheight {

const FormalCharacter& LogCharacterCombo::at(std::uint64_t prime) const {
  static const FormalCharacter zero;
  auto it = terms_.find(prime);
  return it == terms_.end() ? zero : it->second;
}

void LogCharacterCombo::add(std::uint64_t prime, const FormalCharacter& ch, long coefficient) {
  if (coefficient == 0 || ch.is_zero()) return;
  FormalCharacter& slot = terms_[prime];
  slot.add(ch, coefficient);
  if (slot.is_zero()) terms_.erase(prime);
}

void LogCharacterCombo::add_log(std::uint64_t k, const FormalCharacter& ch, long coefficient) {
  if (k == 0) throw MathInputError("log 0 is undefined");
  if (k == 1) return;
  for (const auto& [p, e] : factorize(Integer(static_cast<unsigned long>(k)))) add(p, ch, coefficient * e);
}

LogCharacterCombo& LogCharacterCombo::operator+=(const LogCharacterCombo& o) {
  for (const auto& [p, ch] : o.terms_) add(p, ch, 1);
  return *this;
}

LogCharacterCombo& LogCharacterCombo::operator*=(long s) {
  if (s == 0) terms_.clear();
  for (auto& [p, ch] : terms_) ch *= s;
  return *this;
}

LogCharacterCombo jantzen_rhs(const ParabolicData& pd, const Weight& lambda) {
  const RootSystem& rs = pd.roots();
  if (lambda.size() != rs.rank()) throw MathInputError("weight has wrong length");
  const Weight nu = rs.rho() + lambda;

  std::unordered_map<Weight, FormalCharacter, LatticeVectorHash<WeightTag>> cache;
  auto chi = [&](const Weight& v) -> const FormalCharacter& {
    auto it = cache.find(v);
    if (it == cache.end()) it = cache.emplace(v, formal_character(rs, v)).first;
    return it->second;
  };

  LogCharacterCombo combo;
  for (const Root& alpha : pd.psi()) {
    const long pairing = rs.coroot_pairing(nu, alpha);
    const Weight alpha_w = rs.root_to_weight(alpha);
    if (pairing >= 0) {
      for (long k = 2; k <= pairing - 1; ++k) combo.add_log(k, chi(nu - k * alpha_w), -1);
    } else {
      for (long k = 2; k <= -pairing - 1; ++k) combo.add_log(k, chi(nu + k * alpha_w), 1);
    }
  }
  return combo;
}

std::map<std::uint64_t, long> lambda0_component(const LogCharacterCombo& combo, const RootSystem& rs,
                                                const Weight& lambda) {
  const auto bwb = to_dominant_dotted(rs, lambda);
  if (!bwb) throw MathInputError("rho + lambda is singular; lambda0 is undefined for " + lambda.to_string());
  std::map<std::uint64_t, long> out;
  for (const auto& [p, ch] : combo.terms()) out[p] = ch.multiplicity(bwb->lambda0);
  return out;
}

bool verify_parabolic_independence(std::shared_ptr<const RootSystem> rs, const Weight& lambda,
                                   const std::vector<std::size_t>& theta) {
  for (std::size_t i : theta)
    if (i >= rs->rank() || lambda[i] != 0)
      throw MathInputError("weight " + lambda.to_string() + " does not extend to the parabolic");
  const ParabolicData parabolic(rs, theta);
  const ParabolicData borel(rs, {});
  return jantzen_rhs(parabolic, lambda) == jantzen_rhs(borel, lambda);
}

bool verify_longest_element_relation(std::shared_ptr<const RootSystem> rs, const Weight& lambda) {
  const ParabolicData borel(rs, {});
  const WeylElement w0 = longest_element(*rs);
  const LogCharacterCombo direct = jantzen_rhs(borel, lambda);
  LogCharacterCombo transformed = jantzen_rhs(borel, dotted_act(*rs, w0, lambda));
  transformed *= (w0.length() % 2 == 0) ? -1 : 1;
  return transformed == direct;
}

}  // namespace flagheight
