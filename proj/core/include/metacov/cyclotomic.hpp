#pragma once

#include <cstdint>
#include <vector>

#include "metacov/integer.hpp"
#include "metacov/matrix.hpp"

namespace metacov {

// Element of Q(zeta_p) = Q[x]/(Phi_p), coordinates in the basis 1, x, ..., x^(p-2).
class CyclotomicElem {
 public:
  CyclotomicElem() = default;
  explicit CyclotomicElem(std::uint32_t p);
  CyclotomicElem(std::uint32_t p, std::vector<Rational> coords);

  static CyclotomicElem zeta_power(std::uint32_t p, std::int64_t k);
  static CyclotomicElem from_int(std::uint32_t p, std::int64_t v);
  // sum_e counts[e] * zeta^e for e in [0, p).
  static CyclotomicElem from_exponent_counts(std::uint32_t p, const std::vector<std::int64_t>& counts);

  std::uint32_t prime() const { return p_; }
  const std::vector<Rational>& coords() const { return c_; }
  bool is_zero() const;
  std::size_t support() const;

  CyclotomicElem operator+(const CyclotomicElem& o) const;
  CyclotomicElem operator-(const CyclotomicElem& o) const;
  CyclotomicElem operator*(const CyclotomicElem& o) const;
  CyclotomicElem operator-() const;
  CyclotomicElem galois(std::uint32_t k) const;  // zeta -> zeta^k
  CyclotomicElem inverse() const;
  bool operator==(const CyclotomicElem& o) const { return p_ == o.p_ && c_ == o.c_; }

 private:
  void check(const CyclotomicElem& o) const;
  static CyclotomicElem from_cyclic(std::uint32_t p, std::vector<Rational> cyc);
  std::uint32_t p_ = 0;
  std::vector<Rational> c_;
};

std::size_t rank_cyclotomic(const Matrix<CyclotomicElem>& m);

}  // namespace metacov
