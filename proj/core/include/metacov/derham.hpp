#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "metacov/finite_field.hpp"
#include "metacov/poly_modp.hpp"
#include "metacov/presentation.hpp"

namespace metacov {

struct RootInfo {
  PolyModP factor;   // monic irreducible, not t
  std::size_t degree = 0;
  std::uint64_t order = 0;  // multiplicative order of the class of t
  unsigned multiplicity = 1;
};

// Irreducible factors of Delta_p other than t, in factorization order.
// Throws std::domain_error when Delta_p has no nonzero root.
std::vector<RootInfo> roots_of_delta_modp(const PolyModP& delta_p);

// The affine map z -> m z + b.
struct AffineMap {
  FieldElem m;
  FieldElem b;
  bool operator==(const AffineMap& o) const = default;
};

class AffineRep {
 public:
  AffineRep(std::shared_ptr<const FiniteField> field, std::vector<std::int64_t> exponents,
            std::vector<FieldElem> translations);

  const FiniteField& field() const { return *field_; }
  std::shared_ptr<const FiniteField> field_ptr() const { return field_; }
  std::uint32_t p() const { return field_->characteristic(); }
  std::size_t d() const { return field_->degree(); }
  std::uint64_t field_order() const { return field_->order(); }
  const FieldElem& alpha() const { return alpha_; }
  std::uint64_t order_alpha() const { return order_alpha_; }
  // n * p^d
  std::uint64_t expected_image_order() const { return order_alpha_ * field_->order(); }
  std::size_t num_generators() const { return translations_.size(); }
  const std::vector<FieldElem>& translations() const { return translations_; }
  const std::vector<std::int64_t>& exponents() const { return exponents_; }

  AffineMap compose(const AffineMap& g, const AffineMap& h) const;  // g after h
  AffineMap invert(const AffineMap& g) const;
  AffineMap identity() const;
  AffineMap image(Letter l) const;
  AffineMap evaluate(const Word& w) const;
  // Composes with conjugation c -> g^-1 c g.
  AffineRep conjugated(const AffineMap& g) const;

 private:
  std::shared_ptr<const FiniteField> field_;
  FieldElem alpha_;
  std::uint64_t order_alpha_ = 0;
  std::vector<std::int64_t> exponents_;
  std::vector<FieldElem> translations_;
  std::vector<AffineMap> images_, inverse_images_;
};

// Solves the Fox Jacobian at t = alpha with the meridian translation pinned to 0.
AffineRep build_rep(const GroupPresentation& pres, std::uint32_t p, const PolyModP& factor);

struct RepReport {
  bool relators_ok = true;
  std::string failed_relator;
  std::uint64_t image_order = 0;
  std::uint64_t expected_order = 0;
  bool nonabelian = false;
  bool spanning = false;
  bool meridian_alpha = false;
  bool longitude_translation = true;  // vacuous without a longitude

  bool ok() const {
    return relators_ok && image_order == expected_order && nonabelian && spanning && meridian_alpha &&
           longitude_translation;
  }
};

RepReport verify_rep(const AffineRep& rep, const GroupPresentation& pres);

nlohmann::json rep_to_json(const AffineRep& rep);

}  // namespace metacov
