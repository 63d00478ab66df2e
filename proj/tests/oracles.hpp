#pragma once

// Independent constructions used to check the library. Nothing here calls the
// code under test except to read off its numbering conventions.

#include <cstddef>
#include <vector>

#include "flagheight/arith.hpp"

namespace oracle {

using flagheight::Rational;
using flagheight::ratio;
using Vec = std::vector<Rational>;

/// Classical orthonormal-basis model of A_n, B_n, C_n: simple roots and
/// fundamental weights in epsilon coordinates (Bourbaki plates I-III).
struct EuclideanModel {
  std::vector<Vec> simple_roots;
  std::vector<Vec> fundamental_weights;

  static EuclideanModel type_a(std::size_t n) {
    EuclideanModel m;
    for (std::size_t i = 0; i < n; ++i) {
      Vec a(n + 1, 0);
      a[i] = 1;
      a[i + 1] = -1;
      m.simple_roots.push_back(a);
      Vec w(n + 1, 0);
      for (std::size_t k = 0; k <= i; ++k) w[k] = Rational(1) - ratio(i + 1, n + 1);
      for (std::size_t k = i + 1; k <= n; ++k) w[k] = -ratio(i + 1, n + 1);
      m.fundamental_weights.push_back(w);
    }
    return m;
  }

  static EuclideanModel type_b(std::size_t n) {
    EuclideanModel m;
    for (std::size_t i = 0; i < n; ++i) {
      Vec a(n, 0);
      a[i] = 1;
      if (i + 1 < n) a[i + 1] = -1;
      m.simple_roots.push_back(a);
      Vec w(n, 0);
      for (std::size_t k = 0; k <= i; ++k) w[k] = (i + 1 < n) ? Rational(1) : Rational(1, 2);
      m.fundamental_weights.push_back(w);
    }
    return m;
  }

  static EuclideanModel type_c(std::size_t n) {
    EuclideanModel m;
    for (std::size_t i = 0; i < n; ++i) {
      Vec a(n, 0);
      if (i + 1 < n) {
        a[i] = 1;
        a[i + 1] = -1;
      } else {
        a[i] = 2;
      }
      m.simple_roots.push_back(a);
      Vec w(n, 0);
      for (std::size_t k = 0; k <= i; ++k) w[k] = 1;
      m.fundamental_weights.push_back(w);
    }
    return m;
  }

  static Rational dot(const Vec& a, const Vec& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
  }

  template <class Coords>
  Vec combine(const std::vector<Vec>& basis, const Coords& c) const {
    Vec v(basis[0].size(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t k = 0; k < v.size(); ++k) v[k] += basis[i][k] * c[i];
    return v;
  }

  /// 2 (beta, mu) / (beta, beta) with beta, mu given in simple-root / fundamental-weight coordinates.
  template <class RootCoords, class WeightCoords>
  Rational coroot_pairing(const RootCoords& beta, const WeightCoords& mu) const {
    const Vec b = combine(simple_roots, beta);
    const Vec w = combine(fundamental_weights, mu);
    return 2 * dot(b, w) / dot(b, b);
  }
};

}  // namespace oracle
