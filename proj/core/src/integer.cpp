#include "metacov/integer.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace metacov {

namespace {

using u128 = unsigned __int128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = pow_mod(a % n, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's variant of Pollard rho; n must be odd and composite.
std::uint64_t pollard_brent(std::uint64_t n) {
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

Integer power(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

std::string to_string(const Integer& value) { return value.get_str(); }

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t modulus) {
  std::uint64_t result = 1 % modulus;
  base %= modulus;
  while (exponent) {
    if (exponent & 1) result = mul_mod(result, base, modulus);
    base = mul_mod(base, base, modulus);
    exponent >>= 1;
  }
  return result;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is deterministic for all 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  if (n <= 2) return 2;
  std::uint64_t c = n | 1;
  while (!is_prime(c)) c += 2;
  return c;
}

std::vector<std::pair<std::uint64_t, unsigned>> factor_u64(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factor_u64: zero has no factorization");
  std::map<std::uint64_t, unsigned> found;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++found[p];
      n /= p;
    }
  }
  factor_into(n, found);
  return {found.begin(), found.end()};
}

std::vector<std::pair<Integer, unsigned>> factor_integer(const Integer& value) {
  Integer n = abs(value);
  if (n == 0) throw std::invalid_argument("factor_integer: zero has no factorization");
  std::vector<std::pair<Integer, unsigned>> out;
  if (n.fits_ulong_p()) {
    for (auto [p, e] : factor_u64(n.get_ui())) out.emplace_back(Integer(static_cast<unsigned long>(p)), e);
    return out;
  }
  std::map<Integer, unsigned> found;
  for (unsigned long p = 2; p < 100000 && Integer(p) * p <= n; ++p) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++found[Integer(p)];
      n /= p;
    }
  }
  if (n > 1) {
    if (n.fits_ulong_p()) {
      for (auto [p, e] : factor_u64(n.get_ui())) found[Integer(static_cast<unsigned long>(p))] += e;
    } else {
      // Cofactors beyond 64 bits stay unsplit.
      ++found[n];
    }
  }
  return {found.begin(), found.end()};
}

std::int64_t to_int64(const Integer& value) {
  if (!value.fits_slong_p()) throw std::overflow_error("integer does not fit in 64 bits");
  return value.get_si();
}

}  // namespace metacov
