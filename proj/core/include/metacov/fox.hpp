#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>
#include <vector>

#include "metacov/knot_io.hpp"
#include "metacov/laurent.hpp"
#include "metacov/poly_modp.hpp"
#include "metacov/presentation.hpp"

namespace metacov {

// Element of the integral group ring of a free group: reduced word -> coefficient.
using GroupRingElem = std::map<Word, Integer>;

// Fox derivative D_g(w); zero coefficients are dropped.
GroupRingElem fox_derivative(const Word& w, std::size_t generator, std::size_t num_generators);

// Rows are relators, columns generators; entry (j, i) is the image of D_i(R_j)
// under the abelianization map to <t>.
LaurentMatrix jacobian(const GroupPresentation& pres);

// Canonical representative of the Alexander polynomial.
LaurentPoly alexander_poly(const GroupPresentation& pres);

struct ModPAlexander {
  std::uint32_t p = 2;
  // Invariant factors of the Jacobian over F_p[t, 1/t], monic and free of t.
  std::vector<PolyModP> invariant_factors;
  std::size_t rank = 0;
  // Product of the nonzero invariant factors.
  PolyModP delta;
};

ModPAlexander alexander_modp(const GroupPresentation& pres, std::uint32_t p);

struct CongruenceReport {
  std::uint32_t p = 2;
  bool ok = true;
  std::vector<std::string> mismatches;
};

CongruenceReport check_congruence(const GroupPresentation& pres, std::uint32_t p);

struct PropsReport {
  bool value_at_one = false;  // Delta(1) = +-1
  bool palindromic = false;
  bool degree_bound = false;  // span <= c_K - 1
  bool enough_terms = true;   // at least three terms unless Delta = 1
  Integer delta_at_one;

  bool ok() const { return value_at_one && palindromic && degree_bound && enough_terms; }
};

PropsReport check_props(const LaurentPoly& delta, std::size_t crossing_count);

struct Twist {
  long k = 0, l = 0;
};
struct Pretzel {
  long p = 0, q = 0, r = 0;
};
struct Torus {
  long p = 0, q = 0;
};
using FamilySpec = std::variant<Twist, Pretzel, Torus>;

FamilySpec family_from_tag(const FamilyTag& tag);
std::string family_name(const FamilySpec& f);
LaurentPoly family_poly(const FamilySpec& f);

// Delta reduced mod p with the factor t kept, factored over F_p.
FactorizationModP factor_delta_modp(const LaurentPoly& delta, std::uint32_t p);
std::string factorization_string(const LaurentPoly& delta, std::uint32_t p);
// "(<factorization>, p)"
std::string render_modp(const LaurentPoly& delta, std::uint32_t p);
// Delta mod p is not of the form c * t^k.
bool nontrivial_modp(const LaurentPoly& delta, std::uint32_t p);

}  // namespace metacov
