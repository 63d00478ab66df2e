#include <memory>

#include "doctest.h"
#include "flagheight/errors.hpp"
#include "flagheight/jantzen.hpp"

using namespace flagheight;

namespace {

std::shared_ptr<const RootSystem> make(const char* t) {
  return std::make_shared<const RootSystem>(CartanSpec::parse(t));
}

// Character of the (d+1)-dimensional SL2 module.
FormalCharacter sl2_irrep(long d) {
  FormalCharacter ch;
  for (long w = -d; w <= d; w += 2) ch.add(Weight{w}, 1);
  return ch;
}

// Prime factorization by trial division, kept separate from the library's.
std::vector<std::pair<std::uint64_t, int>> primes_of(std::uint64_t k) {
  std::vector<std::pair<std::uint64_t, int>> out;
  for (std::uint64_t p = 2; p * p <= k; ++p) {
    int e = 0;
    while (k % p == 0) {
      k /= p;
      ++e;
    }
    if (e) out.emplace_back(p, e);
  }
  if (k > 1) out.emplace_back(k, 1);
  return out;
}

// The SL2 sum written out by hand: chi_{m+1-2k} is V(m-2k), zero, or -V(2k-m-2).
LogCharacterCombo sl2_oracle(long m) {
  LogCharacterCombo c;
  for (long k = 2; k <= m; ++k) {
    const long top = m + 1 - 2 * k;
    if (top == 0) continue;
    const FormalCharacter ch = top > 0 ? sl2_irrep(top - 1) : -sl2_irrep(-top - 1);
    for (const auto& [p, e] : primes_of(static_cast<std::uint64_t>(k))) c.add(p, ch, -e);
  }
  return c;
}

}  // namespace

TEST_CASE("SL2 values") {
  auto a1 = make("A1");
  ParabolicData borel(a1, {});
  CHECK(jantzen_rhs(borel, Weight{0}).is_zero());
  CHECK(jantzen_rhs(borel, Weight{1}).is_zero());
  const LogCharacterCombo three = jantzen_rhs(borel, Weight{3});
  CHECK(three.terms().size() == 1);
  CHECK(three.at(3) == sl2_irrep(1));
  CHECK(three.at(2).is_zero());
  for (long m = 0; m <= 14; ++m) {
    CAPTURE(m);
    CHECK(jantzen_rhs(borel, Weight{m}) == sl2_oracle(m));
  }
}

TEST_CASE("log expansion") {
  LogCharacterCombo c;
  const FormalCharacter ch = sl2_irrep(2);
  c.add_log(12, ch, 1);
  CHECK(c.at(2) == 2 * ch);
  CHECK(c.at(3) == ch);
  c.add_log(1, ch, 5);
  CHECK(c.terms().size() == 2);
  c.add_log(6, ch, -1);
  c.add_log(2, ch, -1);
  CHECK(c.terms().size() == 0);
  CHECK_THROWS_AS(c.add_log(0, ch, 1), MathInputError);
  LogCharacterCombo d;
  d.add_log(10, ch, 2);
  LogCharacterCombo e = d;
  e += -d;
  CHECK(e.is_zero());
}

TEST_CASE("lambda0 component vanishes") {
  for (const char* t : {"A2", "B2", "G2"}) {
    auto rs = make(t);
    ParabolicData borel(rs, {});
    for (long a = 0; a <= 3; ++a)
      for (long b = 0; b <= 3; ++b) {
        const Weight lambda{a, b};
        for (const auto& [p, m] : lambda0_component(jantzen_rhs(borel, lambda), *rs, lambda)) CHECK(m == 0);
      }
  }
  auto a1 = make("A1");
  CHECK_THROWS_AS(lambda0_component(LogCharacterCombo{}, *a1, Weight{-1}), MathInputError);
}

TEST_CASE("parabolic independence") {
  CHECK(verify_parabolic_independence(make("A2"), Weight{0, 2}, {0}));
  CHECK(verify_parabolic_independence(make("A2"), Weight{3, 0}, {1}));
  CHECK(verify_parabolic_independence(make("B2"), Weight{1, 0}, {1}));
  CHECK(verify_parabolic_independence(make("B2"), Weight{0, 3}, {0}));
  CHECK(verify_parabolic_independence(make("G2"), Weight{2, 0}, {1}));
  CHECK(verify_parabolic_independence(make("A3"), Weight{0, 2, 0}, {0, 2}));
  CHECK_THROWS_AS(verify_parabolic_independence(make("A2"), Weight{1, 1}, {0}), MathInputError);
}

TEST_CASE("longest element relation") {
  for (const char* t : {"A2", "B2"}) {
    auto rs = make(t);
    for (long a = 0; a <= 2; ++a)
      for (long b = 0; b <= 2; ++b) CHECK(verify_longest_element_relation(rs, Weight{a, b}));
  }
  CHECK(verify_longest_element_relation(make("A1"), Weight{5}));
}
