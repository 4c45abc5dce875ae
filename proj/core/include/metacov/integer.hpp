#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace metacov {

using Integer = mpz_class;
using Rational = mpq_class;

Integer power(const Integer& base, unsigned long exponent);
std::string to_string(const Integer& value);

bool is_prime(std::uint64_t n);
// Smallest prime >= n.
std::uint64_t next_prime(std::uint64_t n);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus);

// Prime factorization as (prime, exponent) pairs, ascending.
std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n);
std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& n);

// Checked conversion; throws std::overflow_error when the value does not fit.
std::int64_t to_int64(const Integer& value);

}  // namespace metacov
