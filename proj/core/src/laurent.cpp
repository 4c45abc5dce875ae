#include "metacov/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace metacov {

namespace {

using Poly = std::vector<Integer>;  // ordinary polynomial, index = degree

void trim_poly(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int deg(const Poly& p) { return static_cast<int>(p.size()) - 1; }

Poly to_poly(const LaurentPoly& f) {
  if (f.is_zero()) return {};
  if (f.low_degree() < 0) throw std::invalid_argument("expected an ordinary polynomial (no negative powers)");
  Poly p(static_cast<std::size_t>(f.low_degree()), Integer(0));
  p.insert(p.end(), f.coefficients().begin(), f.coefficients().end());
  return p;
}

Poly strip_t(const LaurentPoly& f) { return Poly(f.coefficients().begin(), f.coefficients().end()); }

Integer poly_content(const Poly& p) {
  Integer g = 0;
  for (const auto& c : p) {
    g = gcd(g, c);
    if (g == 1) break;
  }
  return g;
}

void divide_by(Poly& p, const Integer& c) {
  for (auto& x : p) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
}

// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b.
Poly pseudo_remainder(Poly a, const Poly& b) {
  const int db = deg(b);
  const Integer& lb = b.back();
  int steps = deg(a) - db + 1;
  while (!a.empty() && deg(a) >= db) {
    const Integer la = a.back();
    const int shift = deg(a) - db;
    for (auto& x : a) x *= lb;
    for (int j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim_poly(a);
    --steps;
  }
  if (steps > 0) {
    Integer f = power(lb, static_cast<unsigned long>(steps));
    for (auto& x : a) x *= f;
  }
  return a;
}

LaurentPoly from_poly(Poly p) { return LaurentPoly(std::move(p), 0); }

Poly primitive_gcd(Poly a, Poly b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  divide_by(a, poly_content(a));
  divide_by(b, poly_content(b));
  if (deg(a) < deg(b)) std::swap(a, b);
  while (!b.empty()) {
    if (deg(b) == 0) return Poly{Integer(1)};
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
    if (!b.empty()) divide_by(b, poly_content(b));
  }
  return a;
}

}  // namespace

LaurentPoly::LaurentPoly(Integer constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

LaurentPoly::LaurentPoly(std::vector<Integer> coefficients, int lowest_degree)
    : low_(lowest_degree), coeffs_(std::move(coefficients)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(Integer coefficient, int degree) {
  return LaurentPoly(std::vector<Integer>{std::move(coefficient)}, degree);
}

LaurentPoly LaurentPoly::from_ints(std::initializer_list<long> coefficients, int lowest_degree) {
  std::vector<Integer> c;
  for (long v : coefficients) c.emplace_back(v);
  return LaurentPoly(std::move(c), lowest_degree);
}

void LaurentPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  std::size_t lead_zeros = 0;
  while (lead_zeros < coeffs_.size() && coeffs_[lead_zeros] == 0) ++lead_zeros;
  if (lead_zeros) {
    coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead_zeros));
    low_ += static_cast<int>(lead_zeros);
  }
  if (coeffs_.empty()) low_ = 0;
}

Integer LaurentPoly::coefficient(int degree) const {
  if (coeffs_.empty() || degree < low_ || degree > high_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - low_)];
}

std::size_t LaurentPoly::term_count() const {
  return static_cast<std::size_t>(std::count_if(coeffs_.begin(), coeffs_.end(), [](const Integer& c) { return c != 0; }));
}

Integer LaurentPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) g = gcd(g, c);
  return g;
}

Integer LaurentPoly::evaluate(const Integer& x) const {
  if (coeffs_.empty()) return 0;
  Integer acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  if (low_ >= 0) return acc * power(x, static_cast<unsigned long>(low_));
  if (x != 1 && x != -1) throw std::domain_error("evaluating a Laurent polynomial at a non-unit");
  return (x == -1 && (-low_) % 2 == 1) ? Integer(-acc) : acc;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.coeffs_.empty()) r.low_ += k;
  return r;
}

LaurentPoly LaurentPoly::canonical() const {
  if (coeffs_.empty()) return {};
  LaurentPoly r = shifted(-low_);
  if (r.coeffs_.back() < 0) r = -r;
  return r;
}

bool LaurentPoly::is_palindromic() const {
  const std::size_t n = coeffs_.size();
  for (std::size_t i = 0; i < n / 2; ++i)
    if (coeffs_[i] != coeffs_[n - 1 - i]) return false;
  return true;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int d = high_degree(); d >= low_; --d) {
    const Integer& c = coeffs_[static_cast<std::size_t>(d - low_)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (d == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << '*';
    out << var;
    if (d != 1) out << '^' << d;
  }
  return out.str();
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.coeffs_.empty()) return *this;
  if (coeffs_.empty()) return *this = o;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_degree(), o.high_degree());
  std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), Integer(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i + static_cast<std::size_t>(low_ - lo)] = std::move(coeffs_[i]);
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i + static_cast<std::size_t>(o.low_ - lo)] += o.coeffs_[i];
  coeffs_ = std::move(c);
  low_ = lo;
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.coeffs_.empty() || b.coeffs_.empty()) return {};
  std::vector<Integer> c(a.coeffs_.size() + b.coeffs_.size() - 1, Integer(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return LaurentPoly(std::move(c), a.low_ + b.low_);
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) return *this = LaurentPoly();
  for (auto& x : coeffs_) x *= c;
  return *this;
}

bool associates(const LaurentPoly& a, const LaurentPoly& b) { return a.canonical() == b.canonical(); }

std::optional<LaurentPoly> try_divide(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  if (denominator.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (numerator.is_zero()) return LaurentPoly();
  const auto& d = denominator.coefficients();
  std::vector<Integer> r = numerator.coefficients();
  if (r.size() < d.size()) return std::nullopt;
  const std::size_t qlen = r.size() - d.size() + 1;
  std::vector<Integer> q(qlen);
  Integer rem;
  for (std::size_t k = qlen; k-- > 0;) {
    Integer& top = r[k + d.size() - 1];
    if (top == 0) {
      q[k] = 0;
      continue;
    }
    mpz_tdiv_qr(q[k].get_mpz_t(), rem.get_mpz_t(), top.get_mpz_t(), d.back().get_mpz_t());
    if (rem != 0) return std::nullopt;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] -= q[k] * d[j];
  }
  for (const auto& x : r)
    if (x != 0) return std::nullopt;
  return LaurentPoly(std::move(q), numerator.low_degree() - denominator.low_degree());
}

LaurentPoly divide_exact(const LaurentPoly& numerator, const LaurentPoly& denominator) {
  auto q = try_divide(numerator, denominator);
  if (!q) throw std::domain_error("inexact polynomial division: " + numerator.to_string() + " / " + denominator.to_string());
  return *q;
}

LaurentPoly primitive_part(const LaurentPoly& a) {
  if (a.is_zero()) return a;
  Poly p = strip_t(a);
  divide_by(p, poly_content(p));
  return LaurentPoly(std::move(p), a.low_degree());
}

LaurentPoly gcd_rational(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero()) return {};
  return from_poly(primitive_gcd(strip_t(a), strip_t(b))).canonical();
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  Integer c = gcd(a.content(), b.content());
  return (gcd_rational(a, b) * c).canonical();
}

Integer resultant(const LaurentPoly& f, const LaurentPoly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of a zero polynomial");
  Poly a = to_poly(f), b = to_poly(g);
  // Subresultant PRS (Collins), tracking the Sylvester-determinant sign.
  Integer ca = poly_content(a), cb = poly_content(b);
  divide_by(a, ca);
  divide_by(b, cb);
  Integer scale = power(ca, static_cast<unsigned long>(deg(b))) * power(cb, static_cast<unsigned long>(deg(a)));
  int sign = 1;
  if (deg(a) < deg(b)) {
    std::swap(a, b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -1;
  }
  if (deg(b) == 0) return sign * scale * power(b[0], static_cast<unsigned long>(deg(a)));
  Integer gg = 1, h = 1;
  while (true) {
    const int delta = deg(a) - deg(b);
    if (deg(a) % 2 == 1 && deg(b) % 2 == 1) sign = -sign;
    Poly r = pseudo_remainder(a, b);
    a = std::move(b);
    if (r.empty()) return 0;
    Integer divisor = gg * power(h, static_cast<unsigned long>(delta));
    divide_by(r, divisor);
    b = std::move(r);
    gg = a.back();
    // h <- g^delta / h^(delta-1); unchanged when delta = 0
    if (delta > 0) {
      Integer num = power(gg, static_cast<unsigned long>(delta));
      Integer den = power(h, static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    }
    if (deg(b) == 0) {
      const int da = deg(a);
      Integer num2 = power(b[0], static_cast<unsigned long>(da));
      Integer den2 = power(h, static_cast<unsigned long>(da - 1));
      Integer hh;
      mpz_divexact(hh.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
      return sign * scale * hh;
    }
  }
}

LaurentPoly det_bareiss(LaurentMatrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_bareiss: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return LaurentPoly(Integer(1));
  int total_shift = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int lo = 0;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (m(i, j).is_zero()) continue;
      lo = any ? std::min(lo, m(i, j).low_degree()) : m(i, j).low_degree();
      any = true;
    }
    if (!any) return {};
    if (lo != 0) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = m(i, j).shifted(-lo);
      total_shift += lo;
    }
  }
  int sign = 1;
  LaurentPoly prev(Integer(1));
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t best = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      if (best == n || m(i, k).span() < m(best, k).span() ||
          (m(i, k).span() == m(best, k).span() && m(i, k).term_count() < m(best, k).term_count()))
        best = i;
    }
    if (best == n) return {};
    if (best != k) {
      m.swap_rows(best, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        LaurentPoly v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = (k == 0) ? v : divide_exact(v, prev);
      }
      m(i, k) = LaurentPoly();
    }
    prev = m(k, k);
  }
  LaurentPoly det = m(n - 1, n - 1).shifted(total_shift);
  return sign < 0 ? -det : det;
}

}  // namespace metacov
