#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "flagheight/arith.hpp"
#include "flagheight/lattice.hpp"

namespace flagheight {

struct CartanFactor {
  char family;  // 'A' .. 'G'
  int rank;

  friend bool operator==(const CartanFactor&, const CartanFactor&) = default;
};

/// A semisimple Cartan type, e.g. "B2xA1".
class CartanSpec {
 public:
  CartanSpec() = default;
  explicit CartanSpec(std::vector<CartanFactor> factors);

  /// Parses the "A3", "B2xA1", "e6" grammar (case-insensitive).
  static CartanSpec parse(std::string_view text);

  const std::vector<CartanFactor>& factors() const { return factors_; }
  int rank() const;
  bool is_simple() const { return factors_.size() == 1; }
  std::string to_string() const;

  friend bool operator==(const CartanSpec&, const CartanSpec&) = default;

 private:
  std::vector<CartanFactor> factors_;
};

/// Root datum of the simply connected group of a given Cartan type.
///
/// Simple roots are numbered as in Bourbaki's plates, factor by factor. The
/// Cartan matrix is stored with A(i, j) = <alpha_j, alpha_i^v>, so the simple
/// root alpha_j has fundamental-weight coordinates given by column j of A.
/// Coroot pairings are computed from the Cartan matrix and its symmetrizer;
/// no real inner product is ever formed.
class RootSystem {
 public:
  explicit RootSystem(CartanSpec spec);

  const CartanSpec& spec() const { return spec_; }
  std::size_t rank() const { return rank_; }
  const IntMatrix& cartan_matrix() const { return cartan_; }

  /// Positive roots in lexicographic order of their simple-root coordinates.
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::size_t num_positive_roots() const { return positive_.size(); }
  Root simple_root(std::size_t i) const { return Root::unit(rank_, i); }
  const Weight& rho() const { return rho_; }
  Weight fundamental_weight(std::size_t i) const { return Weight::unit(rank_, i); }

  /// Coxeter number; for a product the maximum over the simple factors.
  int coxeter_number() const;
  int factor_coxeter_number(std::size_t factor) const { return coxeter_[factor]; }
  /// Index of the simple factor a simple root belongs to.
  std::size_t factor_of(std::size_t simple_index) const { return factor_of_[simple_index]; }
  std::size_t factor_offset(std::size_t factor) const { return offsets_[factor]; }

  bool is_root(const Root& r) const;
  bool is_positive_root(const Root& r) const;
  /// Position of a positive root in positive_roots().
  std::size_t positive_index(const Root& r) const;

  Weight root_to_weight(const Root& r) const { return cartan_.apply<WeightTag>(r); }
  /// Simple-root coordinates of a weight (rational in general).
  std::vector<Rational> weight_to_root_coords(const Weight& w) const;
  /// Exact root coordinates when w lies in the root lattice; throws otherwise.
  Root weight_to_root(const Weight& w) const;

  /// <alpha^v, mu>.
  long coroot_pairing(const Weight& mu, const Root& alpha) const;
  /// <alpha^v, beta> for two roots.
  long coroot_pairing(const Root& beta, const Root& alpha) const;

  /// S_alpha(mu) = mu - <alpha^v, mu> alpha.
  Weight reflect(const Root& alpha, const Weight& mu) const;
  Root reflect(const Root& alpha, const Root& beta) const;
  /// Simple reflection s_i on weights (cheap path).
  Weight simple_reflect(std::size_t i, const Weight& mu) const;

  /// W-invariant bilinear form on weights, normalized so short roots have
  /// squared length 2 in every simple factor.
  Rational inner_product(const Weight& a, const Weight& b) const;
  /// Squared length (alpha, alpha) of a root under the same normalization.
  long root_norm(const Root& alpha) const;

  /// Support of a root: indices of nonzero simple-root coordinates.
  std::vector<std::size_t> support(const Root& r) const;
  long height(const Root& r) const;

 private:
  CartanSpec spec_;
  std::size_t rank_ = 0;
  IntMatrix cartan_;
  std::vector<long> symmetrizer_;  // (alpha_i, alpha_i) / 2
  std::vector<std::vector<Rational>> cartan_inverse_;
  std::vector<Root> positive_;
  std::unordered_map<Root, std::size_t, LatticeVectorHash<RootTag>> positive_lookup_;
  Weight rho_;
  std::vector<int> coxeter_;
  std::vector<std::size_t> factor_of_;
  std::vector<std::size_t> offsets_;
};

/// Classical Coxeter number of a simple type.
int classical_coxeter_number(const CartanFactor& f);
/// Classical number of positive roots of a simple type.
long classical_positive_root_count(const CartanFactor& f);

}  // namespace flagheight
