#include "flagheight/arith.hpp"

#include <stdexcept>

namespace flagheight {

std::map<std::uint64_t, int> factorize(const Integer& n) {
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  Integer rest = abs(n);
  std::map<std::uint64_t, int> factors;
  for (std::uint64_t p = 2; Integer(p) * p <= rest; ++p) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++factors[p];
      rest /= p;
    }
  }
  if (rest > 1) {
    if (!rest.fits_ulong_p()) throw std::overflow_error("factorize: prime factor exceeds 64 bits");
    ++factors[rest.get_ui()];
  }
  return factors;
}

int valuation(std::uint64_t k, std::uint64_t p) {
  int v = 0;
  while (k != 0 && k % p == 0) {
    k /= p;
    ++v;
  }
  return v;
}

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational harmonic(unsigned n) {
  Rational sum = 0;
  for (unsigned k = 1; k <= n; ++k) sum += Rational(1, k);
  return sum;
}

Rational power(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(mpq_numref(result.get_mpq_t()), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(mpq_denref(result.get_mpq_t()), base.get_den_mpz_t(), exponent);
  return result;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace flagheight
