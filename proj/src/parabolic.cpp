#include "flagheight/parabolic.hpp"

#include <algorithm>

#include "flagheight/errors.hpp"

namespace flagheight {

ParabolicData::ParabolicData(std::shared_ptr<const RootSystem> rs, std::vector<std::size_t> theta)
    : rs_(std::move(rs)), theta_(std::move(theta)) {
  std::sort(theta_.begin(), theta_.end());
  theta_.erase(std::unique(theta_.begin(), theta_.end()), theta_.end());
  in_theta_.assign(rs_->rank(), false);
  for (std::size_t i : theta_) {
    if (i >= rs_->rank())
      throw SpecError("simple root index " + std::to_string(i + 1) + " out of range for " +
                      rs_->spec().to_string());
    in_theta_[i] = true;
  }
  for (const Root& beta : rs_->positive_roots()) {
    bool levi = true;
    for (std::size_t i : rs_->support(beta)) levi = levi && in_theta_[i];
    (levi ? levi_positive_ : psi_).push_back(beta);
  }
}

const std::vector<Root>& PsiGrading::bucket(long j) const {
  static const std::vector<Root> empty;
  auto it = buckets.find(j);
  return it == buckets.end() ? empty : it->second;
}

bool check_ample(const ParabolicData& pd, const Weight& lambda) {
  const RootSystem& rs = pd.roots();
  if (lambda.size() != rs.rank()) return false;
  for (std::size_t i : pd.theta())
    if (lambda[i] != 0) return false;
  for (const Root& alpha : pd.psi())
    if (rs.coroot_pairing(lambda, alpha) <= 0) return false;
  return true;
}

PsiGrading psi_grading(const ParabolicData& pd, const Weight& lambda) {
  const RootSystem& rs = pd.roots();
  if (lambda.size() != rs.rank())
    throw MathInputError("weight " + lambda.to_string() + " has wrong length for " + rs.spec().to_string());
  for (std::size_t i : pd.theta())
    if (lambda[i] != 0)
      throw MathInputError("weight " + lambda.to_string() + " is not ample: pairs to " +
                           std::to_string(lambda[i]) + " with Levi simple root alpha_" +
                           std::to_string(i + 1));
  PsiGrading grading{lambda, {}};
  for (const Root& alpha : pd.psi()) {
    const long j = rs.coroot_pairing(lambda, alpha);
    if (j <= 0)
      throw MathInputError("weight " + lambda.to_string() + " is not ample: pairs to " +
                           std::to_string(j) + " with root " + alpha.to_string());
    grading.buckets[j].push_back(alpha);
  }
  return grading;
}

}  // namespace flagheight
