#include "metacov/poly_modp.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace metacov {

namespace {

std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
std::uint32_t subm(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }

void check_same(const PolyModP& a, const PolyModP& b) {
  if (a.modulus() != b.modulus()) throw std::invalid_argument("polynomials over different prime fields");
}

PolyModP pth_root(const PolyModP& f) {
  const std::uint32_t p = f.modulus();
  std::vector<std::uint32_t> c;
  for (std::size_t i = 0; i < f.coefficients().size(); i += p) c.push_back(f.coefficients()[i]);
  return PolyModP(p, std::move(c));
}

void squarefree(const PolyModP& f, unsigned mult, std::vector<std::pair<PolyModP, unsigned>>& out) {
  if (f.degree() < 1) return;
  const std::uint32_t p = f.modulus();
  PolyModP d = f.derivative();
  if (d.is_zero()) {
    squarefree(pth_root(f), mult * p, out);
    return;
  }
  PolyModP c = gcd(f, d);
  PolyModP w = divmod(f, c).first;
  unsigned i = 1;
  while (w.degree() > 0) {
    PolyModP y = gcd(w, c);
    PolyModP fac = divmod(w, y).first;
    if (fac.degree() > 0) out.emplace_back(fac.monic(), i * mult);
    w = y;
    c = divmod(c, y).first;
    ++i;
  }
  if (c.degree() > 0) squarefree(pth_root(c), mult * p, out);
}

void equal_degree(const PolyModP& f, std::size_t d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
  if (static_cast<std::size_t>(f.degree()) == d) {
    out.push_back(f.monic());
    return;
  }
  const std::uint32_t p = f.modulus();
  const std::size_t n = static_cast<std::size_t>(f.degree());
  std::uniform_int_distribution<std::uint32_t> coeff(0, p - 1);
  while (true) {
    std::vector<std::uint32_t> rc(n);
    for (auto& v : rc) v = coeff(rng);
    PolyModP a(p, std::move(rc));
    if (a.degree() < 1) continue;
    PolyModP b(p);
    if (p == 2) {
      // absolute trace a + a^2 + ... + a^(2^(d-1))
      PolyModP term = a % f;
      b = term;
      for (std::size_t k = 1; k < d; ++k) {
        term = (term * term) % f;
        b = b + term;
      }
    } else {
      Integer e = (power(Integer(p), d) - 1) / 2;
      b = powmod(a, e, f) - PolyModP::constant(p, 1);
    }
    PolyModP g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, d, rng, out);
      equal_degree(divmod(f, g).first, d, rng, out);
      return;
    }
  }
}

}  // namespace

PolyModP::PolyModP(std::uint32_t p) : p_(p) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime");
}

PolyModP::PolyModP(std::uint32_t p, std::vector<std::uint32_t> coefficients) : p_(p), c_(std::move(coefficients)) {
  if (p < 2) throw std::invalid_argument("modulus must be a prime");
  for (auto& v : c_) v %= p_;
  trim();
}

PolyModP PolyModP::constant(std::uint32_t p, std::int64_t value) {
  std::int64_t r = value % static_cast<std::int64_t>(p);
  if (r < 0) r += p;
  return PolyModP(p, {static_cast<std::uint32_t>(r)});
}

PolyModP PolyModP::monomial(std::uint32_t p, std::uint32_t coefficient, std::size_t degree) {
  std::vector<std::uint32_t> c(degree + 1, 0);
  c[degree] = coefficient;
  return PolyModP(p, std::move(c));
}

PolyModP PolyModP::reduce(const LaurentPoly& f, std::uint32_t p) {
  if (f.is_zero()) return PolyModP(p);
  if (f.low_degree() < 0) throw std::invalid_argument("reduce: negative powers of t");
  std::vector<std::uint32_t> c(static_cast<std::size_t>(f.high_degree()) + 1, 0);
  for (std::size_t i = 0; i < f.coefficients().size(); ++i) {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), f.coefficients()[i].get_mpz_t(), p);
    c[i + static_cast<std::size_t>(f.low_degree())] = static_cast<std::uint32_t>(r.get_ui());
  }
  return PolyModP(p, std::move(c));
}

void PolyModP::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::size_t PolyModP::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](std::uint32_t v) { return v != 0; }));
}

std::size_t PolyModP::t_valuation() const {
  std::size_t k = 0;
  while (k < c_.size() && c_[k] == 0) ++k;
  return k;
}

PolyModP PolyModP::monic() const {
  if (c_.empty()) return *this;
  return scaled(inverse_mod(c_.back(), p_));
}

PolyModP PolyModP::strip_t() const {
  const std::size_t k = t_valuation();
  if (k == 0) return *this;
  return PolyModP(p_, std::vector<std::uint32_t>(c_.begin() + static_cast<std::ptrdiff_t>(k), c_.end()));
}

PolyModP PolyModP::derivative() const {
  std::vector<std::uint32_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(mulm(c_[i], static_cast<std::uint32_t>(i % p_), p_));
  return PolyModP(p_, std::move(d));
}

std::uint32_t PolyModP::evaluate(std::uint32_t x) const {
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = addm(mulm(acc, x % p_, p_), *it, p_);
  return acc;
}

std::string PolyModP::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    if (k == 0) {
      out << c_[k];
      continue;
    }
    if (c_[k] != 1) out << c_[k] << '*';
    out << var;
    if (k > 1) out << '^' << k;
  }
  return out.str();
}

PolyModP PolyModP::operator-() const {
  PolyModP r = *this;
  for (auto& v : r.c_) v = v ? p_ - v : 0;
  return r;
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
  check_same(a, b);
  const std::uint32_t p = a.modulus();
  std::vector<std::uint32_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = addm(a.coeff(i), b.coeff(i), p);
  return PolyModP(p, std::move(c));
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) { return a + (-b); }

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return PolyModP(a.modulus());
  const std::uint32_t p = a.modulus();
  std::vector<std::uint64_t> acc(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (!a.c_[i]) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      acc[i + j] += static_cast<std::uint64_t>(a.c_[i]) * b.c_[j];
      if (acc[i + j] >> 63) acc[i + j] %= p;
    }
  }
  std::vector<std::uint32_t> c(acc.size());
  for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint32_t>(acc[i] % p);
  return PolyModP(p, std::move(c));
}

PolyModP PolyModP::scaled(std::uint32_t k) const {
  PolyModP r = *this;
  for (auto& v : r.c_) v = mulm(v, k % p_, p_);
  r.trim();
  return r;
}

bool PolyModP::operator<(const PolyModP& o) const {
  if (degree() != o.degree()) return degree() < o.degree();
  for (std::size_t k = c_.size(); k-- > 0;)
    if (c_[k] != o.c_[k]) return c_[k] < o.c_[k];
  return false;
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  if (nr == 0) throw std::domain_error("inverse of zero modulo p");
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (r != 1) throw std::domain_error("element not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::pair<PolyModP, PolyModP> divmod(const PolyModP& a, const PolyModP& b) {
  check_same(a, b);
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  const std::uint32_t p = a.modulus();
  if (a.degree() < b.degree()) return {PolyModP(p), a};
  std::vector<std::uint32_t> r = a.coefficients();
  const auto& d = b.coefficients();
  const std::uint32_t inv = inverse_mod(d.back(), p);
  std::vector<std::uint32_t> q(r.size() - d.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    std::uint32_t top = r[k + d.size() - 1];
    if (!top) continue;
    std::uint32_t f = mulm(top, inv, p);
    q[k] = f;
    for (std::size_t j = 0; j < d.size(); ++j) r[k + j] = subm(r[k + j], mulm(f, d[j], p), p);
  }
  r.resize(d.size() - 1);
  return {PolyModP(p, std::move(q)), PolyModP(p, std::move(r))};
}

PolyModP operator%(const PolyModP& a, const PolyModP& b) { return divmod(a, b).second; }

PolyModP gcd(PolyModP a, PolyModP b) {
  check_same(a, b);
  while (!b.is_zero()) {
    PolyModP r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyModP powmod(PolyModP a, const Integer& e, const PolyModP& m) {
  if (e < 0) throw std::domain_error("negative exponent");
  a = a % m;
  PolyModP result = PolyModP::constant(m.modulus(), 1) % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * a) % m;
  }
  return result;
}

FactorizationModP factor_modp(const PolyModP& f) {
  if (f.is_zero()) throw std::invalid_argument("factor_modp: zero polynomial");
  const std::uint32_t p = f.modulus();
  FactorizationModP out;
  out.p = p;
  out.unit = f.leading();
  std::vector<std::pair<PolyModP, unsigned>> sqf;
  squarefree(f.monic(), 1, sqf);

  std::mt19937_64 rng(0x5eed5eedULL + p);
  for (auto& [g0, mult] : sqf) {
    PolyModP g = g0;
    PolyModP h = PolyModP::x(p);
    for (std::size_t i = 1; g.degree() >= static_cast<int>(2 * i); ++i) {
      h = powmod(h, Integer(p), g);
      PolyModP d = gcd(h - PolyModP::x(p) % g, g);
      if (d.degree() > 0) {
        std::vector<PolyModP> parts;
        equal_degree(d, i, rng, parts);
        for (auto& q : parts) out.factors.emplace_back(q, mult);
        g = divmod(g, d).first;
        h = h % g;
      }
    }
    if (g.degree() > 0) out.factors.emplace_back(g.monic(), mult);
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return a.first < b.first;
  });
  // merge duplicates that arise from separate squarefree layers
  std::vector<std::pair<PolyModP, unsigned>> merged;
  for (auto& fm : out.factors) {
    if (!merged.empty() && merged.back().first == fm.first)
      merged.back().second += fm.second;
    else
      merged.push_back(fm);
  }
  out.factors = std::move(merged);
  return out;
}

bool is_irreducible(const PolyModP& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_modp(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

std::string render(const FactorizationModP& f) {
  std::vector<std::string> parts;
  const std::uint32_t p = f.p;
  auto symmetric = [p](std::uint32_t u) {
    long v = static_cast<long>(u);
    if (v > static_cast<long>(p) / 2) v -= static_cast<long>(p);
    return std::to_string(v);
  };
  if (f.factors.empty()) return symmetric(f.unit);
  const bool product = (f.unit != 1) + f.factors.size() > 1;
  if (f.unit != 1) parts.push_back("(" + symmetric(f.unit) + ")");
  for (const auto& [g, e] : f.factors) {
    std::string s = g.to_string();
    const bool atomic = s.find(' ') == std::string::npos;
    if (e > 1)
      s = (atomic ? s : "(" + s + ")") + "^" + std::to_string(e);
    else if (product && !atomic)
      s = "(" + s + ")";
    parts.push_back(std::move(s));
  }
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += " * ";
    out += parts[i];
  }
  return out;
}

}  // namespace metacov
