#pragma once

#include <cstdint>
#include <map>
#include <string>

#include <gmpxx.h>

namespace flagheight {

using Integer = mpz_class;
using Rational = mpq_class;

/// Prime factorization of |n| by trial division; n must be nonzero.
std::map<std::uint64_t, int> factorize(const Integer& n);

/// Exponent of the prime p in k (k >= 1).
int valuation(std::uint64_t k, std::uint64_t p);

/// num / den in lowest terms (mpq_class(num, den) alone does not reduce).
Rational ratio(const Integer& num, const Integer& den);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

/// Harmonic number 1 + 1/2 + ... + 1/n (0 for n = 0).
Rational harmonic(unsigned n);

Rational power(const Rational& base, unsigned exponent);

std::string to_string(const Integer& value);
std::string to_string(const Rational& value);

}  // namespace flagheight
