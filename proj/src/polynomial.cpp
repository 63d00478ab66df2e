#include "flagheight/polynomial.hpp"

#include <algorithm>
#include <vector>

namespace flagheight {

BivariatePolynomial::BivariatePolynomial(const Rational& constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0}, constant);
}

BivariatePolynomial BivariatePolynomial::m() { return monomial(1, 1, 0); }
BivariatePolynomial BivariatePolynomial::k() { return monomial(1, 0, 1); }

BivariatePolynomial BivariatePolynomial::monomial(const Rational& c, unsigned deg_m, unsigned deg_k) {
  BivariatePolynomial p;
  p.add_term({deg_m, deg_k}, c);
  return p;
}

Rational BivariatePolynomial::coefficient(unsigned deg_m, unsigned deg_k) const {
  auto it = terms_.find({deg_m, deg_k});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BivariatePolynomial::degree_m() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first));
  return d;
}

int BivariatePolynomial::degree_k() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.second));
  return d;
}

int BivariatePolynomial::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e.first + e.second));
  return d;
}

void BivariatePolynomial::add_term(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  BivariatePolynomial r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
  return r;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const BivariatePolynomial& o) {
  *this = *this * o;
  return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= s;
  return *this;
}

BivariatePolynomial BivariatePolynomial::substitute_k(const BivariatePolynomial& replacement) const {
  const int dk = degree_k();
  if (dk < 0) return {};
  std::vector<BivariatePolynomial> powers{BivariatePolynomial(1)};
  for (int i = 1; i <= dk; ++i) powers.push_back(powers.back() * replacement);
  BivariatePolynomial r;
  for (const auto& [e, c] : terms_) r += monomial(c, e.first, 0) * powers[e.second];
  return r;
}

Rational BivariatePolynomial::evaluate(const Rational& mv, const Rational& kv) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += c * power(mv, e.first) * power(kv, e.second);
  return sum;
}

std::string BivariatePolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // Highest total degree first.
  std::vector<std::pair<Exponents, Rational>> ordered(terms_.rbegin(), terms_.rend());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    return x.first.first + x.first.second > y.first.first + y.first.second;
  });
  for (const auto& [e, c] : ordered) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto append = [&mono](const char* var, unsigned d) {
      if (d == 0) return;
      if (!mono.empty()) mono += "*";
      mono += var;
      if (d > 1) mono += "^" + std::to_string(d);
    };
    append("m", e.first);
    append("k", e.second);
    if (mono.empty()) s += mag.get_str();
    else if (mag == 1) s += mono;
    else s += mag.get_str() + "*" + mono;
  }
  return s;
}

}  // namespace flagheight
