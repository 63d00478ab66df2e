#include "flagheight/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "flagheight/errors.hpp"

namespace flagheight {

namespace {

void validate_factor(const CartanFactor& f) {
  const int r = f.rank;
  bool ok = false;
  switch (f.family) {
    case 'A': ok = r >= 1; break;
    case 'B': ok = r >= 2; break;
    case 'C': ok = r >= 2; break;
    case 'D': ok = r >= 3; break;
    case 'E': ok = r >= 6 && r <= 8; break;
    case 'F': ok = r == 4; break;
    case 'G': ok = r == 2; break;
    default:
      throw SpecError(std::string("unknown Cartan family '") + f.family + "'");
  }
  if (!ok)
    throw SpecError(std::string("invalid rank ") + std::to_string(r) + " for family " + f.family);
}

// Cartan matrix of one simple factor, A(i, j) = <alpha_j, alpha_i^v>, Bourbaki numbering.
IntMatrix factor_cartan(const CartanFactor& f) {
  const std::size_t n = static_cast<std::size_t>(f.rank);
  IntMatrix a(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = 2;
  auto link = [&a](std::size_t i, std::size_t j) { a(i, j) = a(j, i) = -1; };
  switch (f.family) {
    case 'A':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'B':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 1, n - 2) = -2;  // alpha_n short
      break;
    case 'C':
      for (std::size_t i = 0; i + 1 < n; ++i) link(i, i + 1);
      a(n - 2, n - 1) = -2;  // alpha_n long
      break;
    case 'D':
      for (std::size_t i = 0; i + 2 < n; ++i) link(i, i + 1);
      link(n - 3, n - 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (std::size_t i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      a(2, 1) = -2;  // alpha_3 short, alpha_2 long
      break;
    case 'G':
      link(0, 1);
      a(0, 1) = -3;  // alpha_1 short
      break;
  }
  return a;
}

std::vector<std::vector<Rational>> invert(const IntMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = m(i, j);
    a[i][n + i] = 1;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw std::logic_error("Cartan matrix is singular");
    std::swap(a[col], a[pivot]);
    const Rational p = a[col][col];
    for (auto& x : a[col]) x /= p;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rational f = a[r][col];
      for (std::size_t c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<Rational>> inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

CartanSpec::CartanSpec(std::vector<CartanFactor> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw SpecError("empty Cartan type");
  for (auto& f : factors_) {
    f.family = static_cast<char>(std::toupper(static_cast<unsigned char>(f.family)));
    validate_factor(f);
  }
}

CartanSpec CartanSpec::parse(std::string_view text) {
  std::vector<CartanFactor> factors;
  std::size_t pos = 0;
  while (true) {
    if (pos >= text.size()) throw SpecError("malformed Cartan type '" + std::string(text) + "'");
    const char family = static_cast<char>(std::toupper(static_cast<unsigned char>(text[pos])));
    if (family < 'A' || family > 'G')
      throw SpecError("malformed Cartan type '" + std::string(text) + "'");
    ++pos;
    const std::size_t digits_begin = pos;
    int rank = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      rank = rank * 10 + (text[pos] - '0');
      if (rank > 1000) throw SpecError("rank too large in '" + std::string(text) + "'");
      ++pos;
    }
    if (pos == digits_begin)
      throw SpecError("missing rank in Cartan type '" + std::string(text) + "'");
    factors.push_back({family, rank});
    if (pos == text.size()) break;
    if (text[pos] != 'x' && text[pos] != 'X')
      throw SpecError("malformed Cartan type '" + std::string(text) + "'");
    ++pos;
  }
  return CartanSpec(std::move(factors));
}

int CartanSpec::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank;
  return r;
}

std::string CartanSpec::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) s += "x";
    s += factors_[i].family;
    s += std::to_string(factors_[i].rank);
  }
  return s;
}

int classical_coxeter_number(const CartanFactor& f) {
  switch (f.family) {
    case 'A': return f.rank + 1;
    case 'B':
    case 'C': return 2 * f.rank;
    case 'D': return 2 * f.rank - 2;
    case 'E': return f.rank == 6 ? 12 : f.rank == 7 ? 18 : 30;
    case 'F': return 12;
    case 'G': return 6;
  }
  throw std::logic_error("unreachable Cartan family");
}

long classical_positive_root_count(const CartanFactor& f) {
  return static_cast<long>(f.rank) * classical_coxeter_number(f) / 2;
}

RootSystem::RootSystem(CartanSpec spec) : spec_(std::move(spec)) {
  rank_ = static_cast<std::size_t>(spec_.rank());
  if (rank_ == 0) throw SpecError("empty Cartan type");
  cartan_ = IntMatrix(rank_);
  symmetrizer_.assign(rank_, 0);

  std::size_t offset = 0;
  for (std::size_t fi = 0; fi < spec_.factors().size(); ++fi) {
    const auto& factor = spec_.factors()[fi];
    const IntMatrix block = factor_cartan(factor);
    const std::size_t n = block.size();
    offsets_.push_back(offset);
    for (std::size_t i = 0; i < n; ++i) {
      factor_of_.push_back(fi);
      for (std::size_t j = 0; j < n; ++j) cartan_(offset + i, offset + j) = block(i, j);
    }
    // Symmetrizer: D_i A(i,j) = D_j A(j,i); propagate along the (connected) diagram.
    std::vector<Rational> d(n, 0);
    d[0] = 1;
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i || block(i, j) == 0 || d[j] != 0) continue;
        d[j] = d[i] * block(i, j) / block(j, i);
        queue.push_back(j);
      }
    }
    const Rational smallest = *std::min_element(d.begin(), d.end());
    for (std::size_t i = 0; i < n; ++i) {
      const Rational scaled = d[i] / smallest;
      if (scaled.get_den() != 1) throw std::logic_error("non-integral symmetrizer");
      symmetrizer_[offset + i] = scaled.get_num().get_si();
    }
    offset += n;
  }
  cartan_inverse_ = invert(cartan_);

  // Positive roots: closure of the simple roots under simple reflections.
  std::vector<Root> frontier;
  for (std::size_t i = 0; i < rank_; ++i) {
    Root a = simple_root(i);
    positive_lookup_.emplace(a, 0);
    frontier.push_back(a);
  }
  while (!frontier.empty()) {
    std::vector<Root> next;
    for (const Root& beta : frontier) {
      const Weight bw = root_to_weight(beta);
      for (std::size_t i = 0; i < rank_; ++i) {
        Root image = beta;
        image[i] -= bw[i];
        bool positive = true;
        for (long c : image.coords()) positive = positive && c >= 0;
        if (positive && !image.is_zero() && positive_lookup_.emplace(image, 0).second)
          next.push_back(image);
      }
    }
    frontier = std::move(next);
  }
  positive_.reserve(positive_lookup_.size());
  for (const auto& [r, unused] : positive_lookup_) positive_.push_back(r);
  std::sort(positive_.begin(), positive_.end());
  for (std::size_t i = 0; i < positive_.size(); ++i) positive_lookup_[positive_[i]] = i;

  rho_ = Weight(std::vector<long>(rank_, 1));

  for (std::size_t fi = 0; fi < spec_.factors().size(); ++fi) {
    const auto& factor = spec_.factors()[fi];
    long count = 0;
    for (const Root& r : positive_)
      if (factor_of(support(r).front()) == fi) ++count;
    if (count != classical_positive_root_count(factor))
      throw std::logic_error("positive root count mismatch for " + spec_.to_string());
    const int c = static_cast<int>(2 * count / factor.rank);
    if (c * factor.rank != 2 * count || c != classical_coxeter_number(factor))
      throw std::logic_error("Coxeter number self-check failed for " + spec_.to_string());
    coxeter_.push_back(c);
  }
}

int RootSystem::coxeter_number() const { return *std::max_element(coxeter_.begin(), coxeter_.end()); }

bool RootSystem::is_positive_root(const Root& r) const {
  return r.size() == rank_ && positive_lookup_.count(r) != 0;
}

bool RootSystem::is_root(const Root& r) const {
  return is_positive_root(r) || is_positive_root(-r);
}

std::size_t RootSystem::positive_index(const Root& r) const {
  auto it = positive_lookup_.find(r);
  if (it == positive_lookup_.end()) throw MathInputError(r.to_string() + " is not a positive root");
  return it->second;
}

std::vector<Rational> RootSystem::weight_to_root_coords(const Weight& w) const {
  std::vector<Rational> out(rank_, 0);
  for (std::size_t i = 0; i < rank_; ++i)
    for (std::size_t j = 0; j < rank_; ++j)
      if (w[j] != 0) out[i] += cartan_inverse_[i][j] * w[j];
  return out;
}

Root RootSystem::weight_to_root(const Weight& w) const {
  const auto coords = weight_to_root_coords(w);
  Root r(rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (coords[i].get_den() != 1)
      throw MathInputError(w.to_string() + " is not in the root lattice");
    r[i] = coords[i].get_num().get_si();
  }
  return r;
}

long RootSystem::root_norm(const Root& alpha) const {
  long norm = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (alpha[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j) norm += alpha[i] * alpha[j] * symmetrizer_[i] * cartan_(i, j);
  }
  return norm;
}

long RootSystem::coroot_pairing(const Weight& mu, const Root& alpha) const {
  if (mu.size() != rank_) throw MathInputError("weight has wrong length");
  if (!is_root(alpha)) throw MathInputError(alpha.to_string() + " is not a root");
  long numerator = 0;
  for (std::size_t i = 0; i < rank_; ++i) numerator += alpha[i] * symmetrizer_[i] * mu[i];
  return 2 * numerator / root_norm(alpha);
}

long RootSystem::coroot_pairing(const Root& beta, const Root& alpha) const {
  return coroot_pairing(root_to_weight(beta), alpha);
}

Weight RootSystem::reflect(const Root& alpha, const Weight& mu) const {
  return mu - coroot_pairing(mu, alpha) * root_to_weight(alpha);
}

Root RootSystem::reflect(const Root& alpha, const Root& beta) const {
  return beta - coroot_pairing(beta, alpha) * alpha;
}

Weight RootSystem::simple_reflect(std::size_t i, const Weight& mu) const {
  Weight out = mu;
  const long c = mu[i];
  if (c == 0) return out;
  for (std::size_t k = 0; k < rank_; ++k) out[k] -= c * cartan_(k, i);
  return out;
}

Rational RootSystem::inner_product(const Weight& a, const Weight& b) const {
  // (omega_i, omega_j) = (A^-1)(i, j) * D_i
  Rational s = 0;
  for (std::size_t i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < rank_; ++j)
      if (b[j] != 0) s += cartan_inverse_[i][j] * symmetrizer_[i] * (a[i] * b[j]);
  }
  return s;
}

std::vector<std::size_t> RootSystem::support(const Root& r) const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < rank_; ++i)
    if (r[i] != 0) s.push_back(i);
  return s;
}

long RootSystem::height(const Root& r) const {
  long h = 0;
  for (long c : r.coords()) h += c;
  return h;
}

}  // namespace flagheight
