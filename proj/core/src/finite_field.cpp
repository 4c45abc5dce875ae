#include "metacov/finite_field.hpp"

#include <limits>
#include <stdexcept>

namespace metacov {

FiniteField::FiniteField(std::uint32_t p, const PolyModP& g) : p_(p), d_(0), q_(1), g_(g.monic()) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
  if (g.modulus() != p) throw std::invalid_argument("modulus polynomial lives over a different prime field");
  if (!is_irreducible(g)) throw std::invalid_argument("modulus " + g.to_string() + " is reducible over F_" + std::to_string(p));
  d_ = static_cast<std::size_t>(g_.degree());
  for (std::size_t i = 0; i < d_; ++i) {
    if (q_ > std::numeric_limits<std::uint64_t>::max() / p_) throw std::overflow_error("field order exceeds 64 bits");
    q_ *= p_;
  }
}

FieldElem FiniteField::from_int(std::int64_t v) const {
  FieldElem e = zero();
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  e.coords[0] = static_cast<std::uint32_t>(r);
  return e;
}

FieldElem FiniteField::from_poly(const PolyModP& f) const {
  PolyModP r = f % g_;
  FieldElem e = zero();
  for (std::size_t i = 0; i < d_; ++i) e.coords[i] = r.coeff(i);
  return e;
}

PolyModP FiniteField::to_poly(const FieldElem& e) const { return PolyModP(p_, e.coords); }

FieldElem FiniteField::generator() const { return from_poly(PolyModP::x(p_)); }

bool FiniteField::is_zero(const FieldElem& e) const {
  for (auto c : e.coords)
    if (c) return false;
  return true;
}

FieldElem FiniteField::add(const FieldElem& a, const FieldElem& b) const {
  FieldElem r = zero();
  for (std::size_t i = 0; i < d_; ++i) {
    std::uint32_t s = a.coords[i] + b.coords[i];
    r.coords[i] = s >= p_ ? s - p_ : s;
  }
  return r;
}

FieldElem FiniteField::neg(const FieldElem& a) const {
  FieldElem r = zero();
  for (std::size_t i = 0; i < d_; ++i) r.coords[i] = a.coords[i] ? p_ - a.coords[i] : 0;
  return r;
}

FieldElem FiniteField::sub(const FieldElem& a, const FieldElem& b) const { return add(a, neg(b)); }

FieldElem FiniteField::mul(const FieldElem& a, const FieldElem& b) const {
  if (d_ == 1) {
    FieldElem r{{static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.coords[0]) * b.coords[0] % p_)}};
    return r;
  }
  std::vector<std::uint64_t> acc(2 * d_ - 1, 0);
  for (std::size_t i = 0; i < d_; ++i)
    for (std::size_t j = 0; j < d_; ++j) acc[i + j] = (acc[i + j] + static_cast<std::uint64_t>(a.coords[i]) * b.coords[j]) % p_;
  const auto& g = g_.coefficients();
  for (std::size_t k = 2 * d_ - 1; k-- > d_;) {
    const std::uint64_t top = acc[k];
    if (!top) continue;
    // t^k = t^(k-d) * t^d and t^d = -(g_0 + ... + g_(d-1) t^(d-1))
    for (std::size_t j = 0; j < d_; ++j) acc[k - d_ + j] = (acc[k - d_ + j] + (p_ - g[j]) * top) % p_;
    acc[k] = 0;
  }
  FieldElem r = zero();
  for (std::size_t i = 0; i < d_; ++i) r.coords[i] = static_cast<std::uint32_t>(acc[i]);
  return r;
}

FieldElem FiniteField::scale(const FieldElem& a, std::uint32_t c) const {
  FieldElem r = a;
  for (auto& v : r.coords) v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * (c % p_) % p_);
  return r;
}

FieldElem FiniteField::inv(const FieldElem& a) const {
  if (is_zero(a)) throw std::domain_error("inverse of zero in F_" + std::to_string(q_));
  return pow(a, static_cast<std::int64_t>(q_ - 2));
}

FieldElem FiniteField::pow(FieldElem a, std::int64_t e) const {
  if (e < 0) {
    a = inv(a);
    e = -e;
  }
  FieldElem r = one();
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t FiniteField::mult_order(const FieldElem& e) const {
  if (is_zero(e)) throw std::domain_error("zero has no multiplicative order");
  std::uint64_t order = q_ - 1;
  for (auto [prime, mult] : factor_u64(q_ - 1)) {
    for (unsigned k = 0; k < mult; ++k) {
      if (pow(e, static_cast<std::int64_t>(order / prime)) == one())
        order /= prime;
      else
        break;
    }
  }
  return order;
}

std::uint64_t FiniteField::index(const FieldElem& e) const {
  std::uint64_t v = 0;
  for (std::size_t i = d_; i-- > 0;) v = v * p_ + e.coords[i];
  return v;
}

FieldElem FiniteField::element(std::uint64_t index) const {
  FieldElem e = zero();
  for (std::size_t i = 0; i < d_; ++i) {
    e.coords[i] = static_cast<std::uint32_t>(index % p_);
    index /= p_;
  }
  return e;
}

std::uint64_t FiniteField::add_index(std::uint64_t a, std::uint64_t b) const {
  if (d_ == 1) {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t out = 0, place = 1;
  for (std::size_t i = 0; i < d_; ++i) {
    std::uint64_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    out += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return out;
}

std::string FiniteField::to_string(const FieldElem& e) const {
  if (d_ == 1) return std::to_string(e.coords[0]);
  return to_poly(e).to_string("a");
}

std::shared_ptr<const FiniteField> make_field(std::uint32_t p, const PolyModP& g) {
  return std::make_shared<const FiniteField>(p, g);
}

}  // namespace metacov
