#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "metacov/integer.hpp"
#include "metacov/laurent.hpp"

namespace metacov {

// Dense univariate polynomial over the prime field F_p, p < 2^31.
class PolyModP {
 public:
  explicit PolyModP(std::uint32_t p = 2);
  PolyModP(std::uint32_t p, std::vector<std::uint32_t> coefficients);

  static PolyModP constant(std::uint32_t p, std::int64_t value);
  static PolyModP monomial(std::uint32_t p, std::uint32_t coefficient, std::size_t degree);
  static PolyModP x(std::uint32_t p) { return monomial(p, 1, 1); }
  // Coefficientwise reduction; the Laurent polynomial must have no negative powers.
  static PolyModP reduce(const LaurentPoly& f, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  std::uint32_t coeff(std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint32_t leading() const { return c_.empty() ? 0 : c_.back(); }
  const std::vector<std::uint32_t>& coefficients() const { return c_; }
  std::size_t term_count() const;
  // Largest k with t^k dividing this polynomial.
  std::size_t t_valuation() const;

  PolyModP monic() const;
  PolyModP strip_t() const;  // divide out the largest power of t
  PolyModP derivative() const;
  std::uint32_t evaluate(std::uint32_t x) const;
  std::string to_string(const std::string& var = "t") const;

  PolyModP operator-() const;
  friend PolyModP operator+(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator-(const PolyModP& a, const PolyModP& b);
  friend PolyModP operator*(const PolyModP& a, const PolyModP& b);
  PolyModP scaled(std::uint32_t c) const;
  bool operator==(const PolyModP& o) const { return p_ == o.p_ && c_ == o.c_; }
  // Orders by degree, then coefficients from the top down.
  bool operator<(const PolyModP& o) const;

 private:
  void trim();
  std::uint32_t p_;
  std::vector<std::uint32_t> c_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p);

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b);
PolyModP operator%(const PolyModP& a, const PolyModP& b);
PolyModP gcd(PolyModP a, PolyModP b);  // monic, gcd(0,0) = 0
// a^e mod m.
PolyModP powmod(PolyModP a, const Integer& e, const PolyModP& m);

struct FactorizationModP {
  std::uint32_t p = 2;
  std::uint32_t unit = 1;  // leading coefficient
  std::vector<std::pair<PolyModP, unsigned>> factors;  // monic irreducibles, sorted
};

FactorizationModP factor_modp(const PolyModP& f);
bool is_irreducible(const PolyModP& f);

// Sage-style product string, e.g. "(-1) * (t + 1)^2" or "t * (t^2 + t + 1)".
std::string render(const FactorizationModP& f);

}  // namespace metacov
