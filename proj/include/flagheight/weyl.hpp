#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "flagheight/lattice.hpp"
#include "flagheight/rootsys.hpp"

namespace flagheight {

inline constexpr std::uint64_t kDefaultWeylCap = 1'000'000;

/// Element of the Weyl group, carried as its lexicographically least reduced
/// word together with its integral action on fundamental-weight coordinates.
class WeylElement {
 public:
  WeylElement() = default;
  /// Builds the element s_{word[0]} s_{word[1]} ... (word must be reduced).
  WeylElement(const RootSystem& rs, std::vector<int> word);

  const std::vector<int>& word() const { return word_; }
  const IntMatrix& matrix() const { return matrix_; }
  int length() const { return static_cast<int>(word_.size()); }
  int sign() const { return length() % 2 == 0 ? 1 : -1; }

  Weight act(const Weight& mu) const { return matrix_.apply(mu); }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.word_ == b.word_; }

 private:
  std::vector<int> word_;
  IntMatrix matrix_;
};

/// The element w whose image of rho is `rho_image`, with its canonical word.
WeylElement element_from_rho_image(const RootSystem& rs, const Weight& rho_image);
/// Action of w on a root, in simple-root coordinates.
Root act_on_root(const RootSystem& rs, const WeylElement& w, const Root& alpha);
WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b);
WeylElement inverse(const RootSystem& rs, const WeylElement& w);

/// |W| from the classical order of each simple factor.
std::uint64_t weyl_order(const RootSystem& rs);
/// Order of the parabolic subgroup W_theta, from the types of the components of theta.
std::uint64_t parabolic_weyl_order(const RootSystem& rs, const std::vector<std::size_t>& theta);

/// All of W, ordered by length then word. Throws SizeCapError above `cap`.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::uint64_t cap = kDefaultWeylCap);
/// The subgroup generated by the simple reflections in theta.
std::vector<WeylElement> enumerate_parabolic_subgroup(const RootSystem& rs,
                                                      const std::vector<std::size_t>& theta,
                                                      std::uint64_t cap = kDefaultWeylCap);
WeylElement longest_element(const RootSystem& rs);

/// Orbit W.mu of a dominant weight, starting with mu itself.
std::vector<Weight> orbit_of_dominant(const RootSystem& rs, const Weight& mu);
/// The dominant weight in the W-orbit of mu.
Weight dominant_representative(const RootSystem& rs, Weight mu);
bool is_dominant(const Weight& mu);

/// w . mu = w(mu + rho) - rho.
Weight dotted_act(const RootSystem& rs, const WeylElement& w, const Weight& mu);

struct DominantDotted {
  WeylElement w;   // w^{-1}(rho + lambda) = rho + lambda0
  Weight lambda0;  // dominant
  int degree() const { return w.length(); }
};

/// Borel-Weil-Bott normalization; std::nullopt when rho + lambda is singular.
std::optional<DominantDotted> to_dominant_dotted(const RootSystem& rs, const Weight& lambda);

/// Minimal-length representatives of W / W_theta.
struct CosetList {
  std::vector<std::size_t> theta;  // 0-based simple indices
  std::vector<WeylElement> reps;
};

CosetList coset_representatives(const RootSystem& rs, std::vector<std::size_t> theta,
                                std::uint64_t cap = kDefaultWeylCap);

}  // namespace flagheight
