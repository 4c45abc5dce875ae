#include "metacov/derham.hpp"

#include <deque>
#include <stdexcept>
#include <unordered_set>

#include "metacov/fox.hpp"

namespace metacov {

namespace {

constexpr std::uint64_t kClosureLimit = 4'000'000;

FieldElem evaluate_at(const FiniteField& f, const LaurentPoly& poly, const FieldElem& alpha) {
  FieldElem acc = f.zero();
  if (poly.is_zero()) return acc;
  FieldElem power = f.pow(alpha, poly.low_degree());
  const std::int64_t p = f.characteristic();
  for (const Integer& c : poly.coefficients()) {
    Integer r = c % p;
    if (r < 0) r += p;
    if (r != 0) acc = f.add(acc, f.scale(power, static_cast<std::uint32_t>(r.get_ui())));
    power = f.mul(power, alpha);
  }
  return acc;
}

// Row-reduced echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(const FiniteField& f, std::vector<std::vector<FieldElem>>& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t piv = row;
    while (piv < m.size() && f.is_zero(m[piv][c])) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[row]);
    const FieldElem inv = f.inv(m[row][c]);
    for (auto& x : m[row]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || f.is_zero(m[i][c])) continue;
      const FieldElem factor = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = f.sub(m[i][j], f.mul(factor, m[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

// Dimension over F_p of the span of alpha^k y_j, k < d.
std::size_t orbit_span_dimension(const AffineRep& rep) {
  const FiniteField& f = rep.field();
  const std::uint32_t p = f.characteristic();
  const std::size_t d = f.degree();
  std::vector<std::vector<std::uint32_t>> basis;  // echelon rows keyed by leading coordinate
  std::vector<std::size_t> lead;
  for (const FieldElem& y : rep.translations()) {
    FieldElem v = y;
    for (std::size_t k = 0; k < d; ++k, v = f.mul(v, rep.alpha())) {
      std::vector<std::uint32_t> w = v.coords;
      for (std::size_t b = 0; b < basis.size(); ++b) {
        const std::uint32_t c = w[lead[b]];
        if (!c) continue;
        for (std::size_t j = 0; j < d; ++j)
          w[j] = static_cast<std::uint32_t>((w[j] + static_cast<std::uint64_t>(p - c) * basis[b][j]) % p);
      }
      std::size_t l = 0;
      while (l < d && w[l] == 0) ++l;
      if (l == d) continue;
      const std::uint32_t inv = inverse_mod(w[l], p);
      for (auto& x : w) x = static_cast<std::uint32_t>(static_cast<std::uint64_t>(x) * inv % p);
      basis.push_back(std::move(w));
      lead.push_back(l);
      if (basis.size() == d) return d;
    }
  }
  return basis.size();
}

}  // namespace

std::vector<RootInfo> roots_of_delta_modp(const PolyModP& delta_p) {
  if (delta_p.is_zero()) throw std::domain_error("Delta_p vanishes");
  const FactorizationModP fac = factor_modp(delta_p);
  std::vector<RootInfo> out;
  for (const auto& [g, mult] : fac.factors) {
    if (g == PolyModP::x(delta_p.modulus())) continue;
    RootInfo r;
    r.factor = g;
    r.degree = static_cast<std::size_t>(g.degree());
    r.multiplicity = mult;
    const FiniteField field(delta_p.modulus(), g);
    r.order = field.mult_order(field.generator());
    out.push_back(r);
  }
  if (out.empty())
    throw std::domain_error("no representation exists at this prime: Delta_p = " + delta_p.to_string() +
                            " has no nonzero root");
  return out;
}

AffineRep::AffineRep(std::shared_ptr<const FiniteField> field, std::vector<std::int64_t> exponents,
                     std::vector<FieldElem> translations)
    : field_(std::move(field)), exponents_(std::move(exponents)), translations_(std::move(translations)) {
  if (exponents_.size() != translations_.size()) throw std::invalid_argument("AffineRep: size mismatch");
  alpha_ = field_->generator();
  order_alpha_ = field_->mult_order(alpha_);
  for (std::size_t g = 0; g < translations_.size(); ++g) {
    AffineMap a{field_->pow(alpha_, exponents_[g]), translations_[g]};
    images_.push_back(a);
    inverse_images_.push_back(invert(a));
  }
}

AffineMap AffineRep::compose(const AffineMap& g, const AffineMap& h) const {
  const FiniteField& f = *field_;
  return {f.mul(g.m, h.m), f.add(f.mul(g.m, h.b), g.b)};
}

AffineMap AffineRep::invert(const AffineMap& g) const {
  const FiniteField& f = *field_;
  const FieldElem mi = f.inv(g.m);
  return {mi, f.neg(f.mul(mi, g.b))};
}

AffineMap AffineRep::identity() const { return {field_->one(), field_->zero()}; }

AffineMap AffineRep::image(Letter l) const {
  const std::size_t g = generator_of(l);
  if (g >= images_.size()) throw std::out_of_range("AffineRep: letter out of range");
  return l > 0 ? images_[g] : inverse_images_[g];
}

AffineMap AffineRep::evaluate(const Word& w) const {
  AffineMap acc = identity();
  for (Letter l : w) acc = compose(acc, image(l));
  return acc;
}

AffineRep AffineRep::conjugated(const AffineMap& g) const {
  const AffineMap gi = invert(g);
  std::vector<FieldElem> ys;
  for (const AffineMap& a : images_) {
    const AffineMap c = compose(gi, compose(a, g));
    if (!(c.m == a.m)) throw std::logic_error("conjugation changed a multiplier");
    ys.push_back(c.b);
  }
  return AffineRep(field_, exponents_, std::move(ys));
}

AffineRep build_rep(const GroupPresentation& pres, std::uint32_t p, const PolyModP& factor) {
  if (factor.modulus() != p) throw std::invalid_argument("factor lives over a different prime");
  if (factor.degree() < 1 || factor.monic() == PolyModP::x(p))
    throw std::invalid_argument("factor must be a nonconstant polynomial other than t");
  auto field = make_field(p, factor);
  const FiniteField& f = *field;
  const FieldElem alpha = f.generator();
  const std::vector<std::int64_t> a = abelianization_map(pres);
  const LaurentMatrix jac = jacobian(pres);
  const std::size_t r = pres.num_generators;

  std::vector<std::vector<FieldElem>> m;
  for (std::size_t j = 0; j < jac.rows(); ++j) {
    std::vector<FieldElem> row(r);
    for (std::size_t i = 0; i < r; ++i) row[i] = evaluate_at(f, jac(j, i), alpha);
    m.push_back(std::move(row));
  }
  std::vector<FieldElem> pin(r, f.zero());
  pin[pres.meridian_index] = f.one();
  m.push_back(std::move(pin));

  const std::vector<std::size_t> pivots = rref(f, m, r);
  std::vector<bool> is_pivot(r, false);
  for (auto c : pivots) is_pivot[c] = true;

  for (std::size_t free = 0; free < r; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElem> y(r, f.zero());
    y[free] = f.one();
    for (std::size_t k = 0; k < pivots.size(); ++k) y[pivots[k]] = f.neg(m[k][free]);
    std::size_t lead = 0;
    while (lead < r && f.is_zero(y[lead])) ++lead;
    const FieldElem s = f.inv(y[lead]);
    for (auto& v : y) v = f.mul(v, s);
    AffineRep rep(field, a, std::move(y));
    if (orbit_span_dimension(rep) == f.degree()) return rep;
  }
  throw std::runtime_error("no kernel vector of the Jacobian at alpha spans F_" + std::to_string(f.order()) +
                           " (factor " + factor.to_string() + ")");
}

RepReport verify_rep(const AffineRep& rep, const GroupPresentation& pres) {
  RepReport out;
  const FiniteField& f = rep.field();
  const AffineMap id = rep.identity();
  for (const Word& w : pres.relators) {
    if (!(rep.evaluate(w) == id)) {
      out.relators_ok = false;
      out.failed_relator = word_to_string(w);
      break;
    }
  }
  out.expected_order = rep.expected_image_order();
  out.spanning = orbit_span_dimension(rep) == f.degree();

  const AffineMap mu = rep.image(make_letter(pres.meridian_index));
  out.meridian_alpha = mu.m == rep.alpha();
  for (std::size_t g = 0; g < rep.num_generators() && !out.nonabelian; ++g) {
    const AffineMap x = rep.image(make_letter(g));
    out.nonabelian = !(rep.compose(mu, x) == rep.compose(x, mu));
  }
  if (pres.longitude) out.longitude_translation = rep.evaluate(*pres.longitude).m == f.one();

  if (out.expected_order <= kClosureLimit && f.order() <= (1u << 31)) {
    const std::uint64_t q = f.order();
    auto key = [&](const AffineMap& g) { return f.index(g.m) * q + f.index(g.b); };
    std::unordered_set<std::uint64_t> seen{key(id)};
    std::deque<AffineMap> queue{id};
    while (!queue.empty() && seen.size() <= 2 * kClosureLimit) {
      const AffineMap g = queue.front();
      queue.pop_front();
      for (std::size_t i = 0; i < rep.num_generators(); ++i) {
        const AffineMap h = rep.compose(g, rep.image(make_letter(i)));
        if (seen.insert(key(h)).second) queue.push_back(h);
      }
    }
    out.image_order = seen.size();
  } else {
    // <alpha> acting on the translation span
    std::uint64_t order = rep.order_alpha();
    for (std::size_t k = 0; k < orbit_span_dimension(rep); ++k) order *= f.characteristic();
    out.image_order = order;
  }
  return out;
}

nlohmann::json rep_to_json(const AffineRep& rep) {
  const FiniteField& f = rep.field();
  nlohmann::json j;
  j["p"] = f.characteristic();
  j["d"] = f.degree();
  j["modulus"] = f.modulus().to_string();
  j["modulus_coeffs"] = f.modulus().coefficients();
  j["alpha_coords"] = rep.alpha().coords;
  j["order_alpha"] = rep.order_alpha();
  nlohmann::json ys = nlohmann::json::array();
  for (const auto& y : rep.translations()) ys.push_back(y.coords);
  j["translations"] = ys;
  j["order"] = rep.expected_image_order();
  return j;
}

}  // namespace metacov
