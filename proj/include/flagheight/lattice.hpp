#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <span>
#include <string>
#include <type_traits>
#include <vector>

namespace flagheight {

/// Integer vector tagged with the basis it is expressed in. Weights use the
/// fundamental-weight basis, roots the simple-root basis; the tag keeps the two
/// from being mixed up silently.
template <class Tag>
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t size) : coords_(size, 0) {}
  explicit LatticeVector(std::vector<long> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords) : coords_(coords) {}

  static LatticeVector unit(std::size_t size, std::size_t index) {
    LatticeVector v(size);
    v.coords_[index] = 1;
    return v;
  }

  std::size_t size() const { return coords_.size(); }
  long operator[](std::size_t i) const { return coords_[i]; }
  long& operator[](std::size_t i) { return coords_[i]; }
  std::span<const long> coords() const { return coords_; }

  bool is_zero() const {
    for (long c : coords_)
      if (c != 0) return false;
    return true;
  }

  LatticeVector& operator+=(const LatticeVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
    return *this;
  }
  LatticeVector& operator-=(const LatticeVector& o) {
    for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
    return *this;
  }
  LatticeVector& operator*=(long s) {
    for (long& c : coords_) c *= s;
    return *this;
  }
  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(long s, LatticeVector a) { return a *= s; }
  friend LatticeVector operator-(LatticeVector a) { return a *= -1; }

  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < coords_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(coords_[i]);
    }
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const LatticeVector& v) {
    return os << v.to_string();
  }

 private:
  std::vector<long> coords_;
};

struct WeightTag {};
struct RootTag {};

using Weight = LatticeVector<WeightTag>;
using Root = LatticeVector<RootTag>;

template <class Tag>
struct LatticeVectorHash {
  std::size_t operator()(const LatticeVector<Tag>& v) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (long c : v.coords()) {
      h ^= static_cast<std::uint64_t>(c);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Small dense square integer matrix (row-major).
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(std::size_t n) : n_(n), a_(n * n, 0) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  long operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }
  long& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    IntMatrix r(x.n_);
    for (std::size_t i = 0; i < x.n_; ++i)
      for (std::size_t k = 0; k < x.n_; ++k) {
        long xik = x(i, k);
        if (xik == 0) continue;
        for (std::size_t j = 0; j < x.n_; ++j) r(i, j) += xik * y(k, j);
      }
    return r;
  }

  /// Matrix-vector product; the result may be re-tagged (e.g. root -> weight).
  template <class OutTag = void, class Tag>
  auto apply(const LatticeVector<Tag>& v) const {
    using Out = LatticeVector<std::conditional_t<std::is_void_v<OutTag>, Tag, OutTag>>;
    Out r(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      long s = 0;
      for (std::size_t j = 0; j < n_; ++j) s += (*this)(i, j) * v[j];
      r[i] = s;
    }
    return r;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<long> a_;
};

}  // namespace flagheight
