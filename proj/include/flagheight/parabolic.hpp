#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <vector>

#include "flagheight/lattice.hpp"
#include "flagheight/rootsys.hpp"

namespace flagheight {

/// Standard parabolic P_theta: theta lists the simple roots of the Levi factor.
class ParabolicData {
 public:
  ParabolicData(std::shared_ptr<const RootSystem> rs, std::vector<std::size_t> theta);

  const RootSystem& roots() const { return *rs_; }
  std::shared_ptr<const RootSystem> root_system() const { return rs_; }
  const std::vector<std::size_t>& theta() const { return theta_; }
  bool in_theta(std::size_t i) const { return in_theta_[i]; }

  /// Positive roots of the Levi factor (support inside theta).
  const std::vector<Root>& levi_positive() const { return levi_positive_; }
  /// Positive roots outside the Levi: the weights of the isotropy representation.
  const std::vector<Root>& psi() const { return psi_; }
  /// Complex dimension of G/P, i.e. |psi|.
  std::size_t dim() const { return psi_.size(); }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<std::size_t> theta_;
  std::vector<bool> in_theta_;
  std::vector<Root> levi_positive_;
  std::vector<Root> psi_;
};

/// Psi split by j = <alpha^v, lambda>.
struct PsiGrading {
  Weight lambda;
  std::map<long, std::vector<Root>> buckets;

  /// Bucket j, empty if unpopulated.
  const std::vector<Root>& bucket(long j) const;
};

/// lambda vanishes on theta and is strictly positive on psi.
bool check_ample(const ParabolicData& pd, const Weight& lambda);

/// Throws MathInputError naming the first offending root when lambda is not ample.
PsiGrading psi_grading(const ParabolicData& pd, const Weight& lambda);

}  // namespace flagheight
