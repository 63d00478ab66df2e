#include "flagheight/weyl.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

#include "flagheight/errors.hpp"

namespace flagheight {

namespace {

IntMatrix simple_reflection_matrix(const RootSystem& rs, int i) {
  const std::size_t n = rs.rank();
  IntMatrix s = IntMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) s(k, static_cast<std::size_t>(i)) -= rs.cartan_matrix()(k, i);
  return s;
}

// Greedy descent from `image` down to the dominant weight `target`, always
// stepping through the smallest index with a negative coordinate. Returns the
// lexicographically least reduced word of the shortest w with w(target) = image.
std::vector<int> descent_word(const RootSystem& rs, Weight image, const Weight& target) {
  std::vector<int> word;
  while (image != target) {
    std::size_t i = 0;
    while (i < rs.rank() && image[i] >= 0) ++i;
    if (i == rs.rank()) throw std::logic_error("weight is not in the orbit of " + target.to_string());
    word.push_back(static_cast<int>(i));
    image = rs.simple_reflect(i, image);
  }
  return word;
}

bool word_order(const WeylElement& a, const WeylElement& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return a.word() < b.word();
}

using WeightSet = std::unordered_set<Weight, LatticeVectorHash<WeightTag>>;

// Orbit of a dominant weight under the reflections in `generators`.
std::vector<Weight> dominant_orbit(const RootSystem& rs, const Weight& start,
                                   const std::vector<std::size_t>& generators) {
  WeightSet seen{start};
  std::vector<Weight> orbit{start};
  for (std::size_t head = 0; head < orbit.size(); ++head) {
    const Weight v = orbit[head];
    for (std::size_t i : generators) {
      if (v[i] <= 0) continue;
      Weight next = rs.simple_reflect(i, v);
      if (seen.insert(next).second) orbit.push_back(std::move(next));
    }
  }
  return orbit;
}

std::vector<std::size_t> all_indices(const RootSystem& rs) {
  std::vector<std::size_t> idx(rs.rank());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  return idx;
}

std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t simple_weyl_order(char family, int r) {
  switch (family) {
    case 'A': return factorial_u64(r + 1);
    case 'B':
    case 'C': return (std::uint64_t{1} << r) * factorial_u64(r);
    case 'D': return (std::uint64_t{1} << (r - 1)) * factorial_u64(r);
    case 'E': return r == 6 ? 51840ULL : r == 7 ? 2903040ULL : 696729600ULL;
    case 'F': return 1152;
    case 'G': return 12;
  }
  throw std::logic_error("unknown family");
}

}  // namespace

WeylElement::WeylElement(const RootSystem& rs, std::vector<int> word)
    : word_(std::move(word)), matrix_(IntMatrix::identity(rs.rank())) {
  for (int i : word_) {
    if (i < 0 || static_cast<std::size_t>(i) >= rs.rank())
      throw MathInputError("simple reflection index out of range");
    matrix_ = matrix_ * simple_reflection_matrix(rs, i);
  }
}

WeylElement element_from_rho_image(const RootSystem& rs, const Weight& rho_image) {
  return WeylElement(rs, descent_word(rs, rho_image, rs.rho()));
}

Root act_on_root(const RootSystem& rs, const WeylElement& w, const Root& alpha) {
  return rs.weight_to_root(w.act(rs.root_to_weight(alpha)));
}

WeylElement compose(const RootSystem& rs, const WeylElement& a, const WeylElement& b) {
  return element_from_rho_image(rs, a.act(b.act(rs.rho())));
}

WeylElement inverse(const RootSystem& rs, const WeylElement& w) {
  Weight image = rs.rho();
  for (int i : w.word()) image = rs.simple_reflect(static_cast<std::size_t>(i), image);
  return element_from_rho_image(rs, image);
}

std::uint64_t weyl_order(const RootSystem& rs) {
  std::uint64_t order = 1;
  for (const auto& f : rs.spec().factors()) order *= simple_weyl_order(f.family, f.rank);
  return order;
}

std::uint64_t parabolic_weyl_order(const RootSystem& rs, const std::vector<std::size_t>& theta) {
  std::vector<bool> in_theta(rs.rank(), false);
  for (std::size_t i : theta) {
    if (i >= rs.rank()) throw SpecError("simple root index out of range");
    in_theta[i] = true;
  }
  std::vector<bool> visited(rs.rank(), false);
  std::uint64_t order = 1;
  for (std::size_t start : theta) {
    if (visited[start]) continue;
    std::vector<std::size_t> component;
    std::deque<std::size_t> queue{start};
    visited[start] = true;
    while (!queue.empty()) {
      const std::size_t i = queue.front();
      queue.pop_front();
      component.push_back(i);
      for (std::size_t j = 0; j < rs.rank(); ++j)
        if (in_theta[j] && !visited[j] && rs.cartan_matrix()(i, j) != 0) {
          visited[j] = true;
          queue.push_back(j);
        }
    }
    std::vector<bool> in_component(rs.rank(), false);
    for (std::size_t i : component) in_component[i] = true;
    long positive = 0;
    for (const Root& r : rs.positive_roots()) {
      bool inside = true;
      for (std::size_t i : rs.support(r)) inside = inside && in_component[i];
      if (inside) ++positive;
    }
    bool laced = true;
    for (std::size_t i : component)
      laced = laced && rs.root_norm(rs.simple_root(i)) == rs.root_norm(rs.simple_root(component[0]));
    const int r = static_cast<int>(component.size());
    char family = 0;
    if (laced) {
      if (positive == static_cast<long>(r) * (r + 1) / 2) family = 'A';
      else if (positive == static_cast<long>(r) * (r - 1)) family = 'D';
      else if (positive == 36 || positive == 63 || positive == 120) family = 'E';
    } else {
      if (positive == static_cast<long>(r) * r) family = 'B';
      else if (r == 4 && positive == 24) family = 'F';
      else if (r == 2 && positive == 6) family = 'G';
    }
    if (family == 0) throw std::logic_error("unrecognized parabolic component");
    order *= simple_weyl_order(family, r);
  }
  return order;
}

std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::uint64_t cap) {
  return enumerate_parabolic_subgroup(rs, all_indices(rs), cap);
}

std::vector<WeylElement> enumerate_parabolic_subgroup(const RootSystem& rs,
                                                      const std::vector<std::size_t>& theta,
                                                      std::uint64_t cap) {
  const std::uint64_t order = parabolic_weyl_order(rs, theta);
  if (order > cap) throw SizeCapError("Weyl group of " + rs.spec().to_string(), order, cap);
  std::vector<WeylElement> elements;
  elements.reserve(order);
  for (const Weight& v : dominant_orbit(rs, rs.rho(), theta)) elements.push_back(element_from_rho_image(rs, v));
  std::sort(elements.begin(), elements.end(), word_order);
  return elements;
}

std::vector<Weight> orbit_of_dominant(const RootSystem& rs, const Weight& mu) {
  return dominant_orbit(rs, mu, all_indices(rs));
}

Weight dominant_representative(const RootSystem& rs, Weight mu) {
  while (true) {
    std::size_t i = 0;
    while (i < rs.rank() && mu[i] >= 0) ++i;
    if (i == rs.rank()) return mu;
    mu = rs.simple_reflect(i, mu);
  }
}

bool is_dominant(const Weight& mu) {
  for (long c : mu.coords())
    if (c < 0) return false;
  return true;
}

WeylElement longest_element(const RootSystem& rs) { return element_from_rho_image(rs, -rs.rho()); }

Weight dotted_act(const RootSystem& rs, const WeylElement& w, const Weight& mu) {
  return w.act(mu + rs.rho()) - rs.rho();
}

std::optional<DominantDotted> to_dominant_dotted(const RootSystem& rs, const Weight& lambda) {
  if (lambda.size() != rs.rank()) throw MathInputError("weight has wrong length");
  Weight nu = lambda + rs.rho();
  std::vector<int> word;
  while (true) {
    std::size_t i = 0;
    while (i < rs.rank() && nu[i] >= 0) ++i;
    if (i == rs.rank()) break;
    word.push_back(static_cast<int>(i));
    nu = rs.simple_reflect(i, nu);
  }
  for (long c : nu.coords())
    if (c == 0) return std::nullopt;
  // w = s_{word[0]} ... s_{word[k-1]}; canonicalize through its image of rho.
  Weight rho_image = rs.rho();
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    rho_image = rs.simple_reflect(static_cast<std::size_t>(*it), rho_image);
  return DominantDotted{element_from_rho_image(rs, rho_image), nu - rs.rho()};
}

CosetList coset_representatives(const RootSystem& rs, std::vector<std::size_t> theta,
                                std::uint64_t cap) {
  std::sort(theta.begin(), theta.end());
  theta.erase(std::unique(theta.begin(), theta.end()), theta.end());
  const std::uint64_t quotient = weyl_order(rs) / parabolic_weyl_order(rs, theta);
  if (quotient > cap)
    throw SizeCapError("coset space W/W_theta of " + rs.spec().to_string(), quotient, cap);

  // W/W_theta is the orbit of a dominant weight whose stabilizer is W_theta.
  Weight base(rs.rank());
  for (std::size_t i = 0; i < rs.rank(); ++i) base[i] = 1;
  for (std::size_t i : theta) base[i] = 0;

  CosetList out{theta, {}};
  out.reps.reserve(quotient);
  for (const Weight& v : dominant_orbit(rs, base, all_indices(rs)))
    out.reps.emplace_back(rs, descent_word(rs, v, base));
  std::sort(out.reps.begin(), out.reps.end(), word_order);
  return out;
}

}  // namespace flagheight
