#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "metacov/poly_modp.hpp"

namespace metacov {

// Element of F_p[t]/(g) in the power basis 1, t, ..., t^(d-1).
struct FieldElem {
  std::vector<std::uint32_t> coords;
  bool operator==(const FieldElem& o) const = default;
};

class FiniteField {
 public:
  // Throws std::invalid_argument if p is composite or g is not irreducible.
  FiniteField(std::uint32_t p, const PolyModP& g);

  std::uint32_t characteristic() const { return p_; }
  std::size_t degree() const { return d_; }
  std::uint64_t order() const { return q_; }
  const PolyModP& modulus() const { return g_; }

  FieldElem zero() const { return FieldElem{std::vector<std::uint32_t>(d_, 0)}; }
  FieldElem one() const { return from_int(1); }
  FieldElem from_int(std::int64_t v) const;
  FieldElem from_poly(const PolyModP& f) const;
  PolyModP to_poly(const FieldElem& e) const;
  FieldElem generator() const;  // class of t

  bool is_zero(const FieldElem& e) const;
  FieldElem add(const FieldElem& a, const FieldElem& b) const;
  FieldElem sub(const FieldElem& a, const FieldElem& b) const;
  FieldElem neg(const FieldElem& a) const;
  FieldElem mul(const FieldElem& a, const FieldElem& b) const;
  FieldElem scale(const FieldElem& a, std::uint32_t c) const;
  FieldElem inv(const FieldElem& a) const;
  FieldElem pow(FieldElem a, std::int64_t e) const;
  std::uint64_t mult_order(const FieldElem& e) const;

  // Bijection F_{p^d} <-> [0, p^d) via base-p digits of the coordinates.
  std::uint64_t index(const FieldElem& e) const;
  FieldElem element(std::uint64_t index) const;
  std::uint64_t add_index(std::uint64_t a, std::uint64_t b) const;

  std::string to_string(const FieldElem& e) const;

 private:
  std::uint32_t p_;
  std::size_t d_;
  std::uint64_t q_;
  PolyModP g_;
};

std::shared_ptr<const FiniteField> make_field(std::uint32_t p, const PolyModP& g);

}  // namespace metacov
