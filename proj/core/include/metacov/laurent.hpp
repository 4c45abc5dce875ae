#pragma once

#include <optional>
#include <string>
#include <vector>

#include "metacov/integer.hpp"
#include "metacov/matrix.hpp"

namespace metacov {

// Laurent polynomial in t with integer coefficients, stored densely from the
// lowest nonzero degree upwards.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(Integer constant);
  LaurentPoly(std::vector<Integer> coefficients, int lowest_degree = 0);

  static LaurentPoly monomial(Integer coefficient, int degree);
  static LaurentPoly t() { return monomial(1, 1); }
  static LaurentPoly from_ints(std::initializer_list<long> coefficients, int lowest_degree = 0);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_monomial() const { return coeffs_.size() == 1; }
  int low_degree() const { return low_; }
  int high_degree() const { return low_ + static_cast<int>(coeffs_.size()) - 1; }
  // high_degree - low_degree; zero for monomials and for the zero polynomial.
  int span() const { return coeffs_.empty() ? 0 : static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(int degree) const;
  Integer leading() const { return coeffs_.empty() ? Integer(0) : coeffs_.back(); }
  Integer trailing() const { return coeffs_.empty() ? Integer(0) : coeffs_.front(); }
  std::size_t term_count() const;
  Integer content() const;

  Integer evaluate(const Integer& x) const;  // requires x invertible when low_degree < 0 (x = ±1)
  LaurentPoly shifted(int k) const;
  // Unit-normalized representative: trailing degree 0, positive leading coefficient.
  LaurentPoly canonical() const;
  bool is_palindromic() const;

  std::string to_string(const std::string& var = "t") const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  bool operator==(const LaurentPoly& o) const { return low_ == o.low_ && coeffs_ == o.coeffs_; }

 private:
  void trim();

  int low_ = 0;
  std::vector<Integer> coeffs_;
};

bool associates(const LaurentPoly& a, const LaurentPoly& b);

std::optional<LaurentPoly> try_divide(const LaurentPoly& numerator, const LaurentPoly& denominator);
LaurentPoly divide_exact(const LaurentPoly& numerator, const LaurentPoly& denominator);

// gcd in Z[t, t^-1], returned in canonical form; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);
// gcd over Q[t] returned as a primitive integer polynomial in canonical form.
LaurentPoly gcd_rational(const LaurentPoly& a, const LaurentPoly& b);
LaurentPoly primitive_part(const LaurentPoly& a);

// Sylvester resultant of two ordinary polynomials (lowest degree must be >= 0).
Integer resultant(const LaurentPoly& f, const LaurentPoly& g);

using LaurentMatrix = Matrix<LaurentPoly>;
LaurentPoly det_bareiss(LaurentMatrix m);

}  // namespace metacov
