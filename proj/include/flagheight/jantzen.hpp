#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "flagheight/charpoly.hpp"
#include "flagheight/parabolic.hpp"

namespace flagheight {

/// sum over primes p of (a formal character) * log p.
class LogCharacterCombo {
 public:
  using Terms = std::map<std::uint64_t, FormalCharacter>;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const FormalCharacter& at(std::uint64_t prime) const;

  /// this += coefficient * ch * log k, with log k expanded over the primes of k.
  void add_log(std::uint64_t k, const FormalCharacter& ch, long coefficient);
  void add(std::uint64_t prime, const FormalCharacter& ch, long coefficient);

  LogCharacterCombo& operator+=(const LogCharacterCombo& o);
  LogCharacterCombo& operator*=(long s);
  friend LogCharacterCombo operator-(LogCharacterCombo c) { return c *= -1; }
  friend bool operator==(const LogCharacterCombo&, const LogCharacterCombo&) = default;

 private:
  Terms terms_;
};

/// Root-combinatorial side of the Jantzen sum formula for P_theta:
///   - sum_{alpha in Psi+} sum_{k=1}^{<alpha^v, rho+lambda> - 1} chi_{rho+lambda-k alpha} log k
///   + sum_{alpha in Psi-} sum_{k=1}^{<-alpha^v, rho+lambda> - 1} chi_{rho+lambda+k alpha} log k
/// with Psi+ = {alpha in Psi : <alpha^v, rho+lambda> >= 0} and Psi- its complement.
LogCharacterCombo jantzen_rhs(const ParabolicData& pd, const Weight& lambda);

/// Coefficient of the weight lambda0 (rho + lambda0 dominant in the orbit of
/// rho + lambda) in every prime component. Throws when rho + lambda is singular.
std::map<std::uint64_t, long> lambda0_component(const LogCharacterCombo& combo, const RootSystem& rs,
                                                const Weight& lambda);

/// jantzen_rhs over P_theta equals jantzen_rhs over B. lambda must vanish on theta.
bool verify_parabolic_independence(std::shared_ptr<const RootSystem> rs, const Weight& lambda,
                                   const std::vector<std::size_t>& theta);

/// Over B, jantzen_rhs(w0 . lambda) = -(-1)^{l(w0)} jantzen_rhs(lambda).
bool verify_longest_element_relation(std::shared_ptr<const RootSystem> rs, const Weight& lambda);

}  // namespace flagheight
