#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "metacov/covers.hpp"
#include "metacov/cyclotomic.hpp"
#include "metacov/derham.hpp"

namespace metacov {

// Vector chi in (Z/p)^d; the character is x -> zeta_p^<q(x), chi>.
struct CharacterSpec {
  std::uint32_t p = 2;
  std::vector<std::uint32_t> chi;
};

// Translation part of each Schreier generator of Gamma_n, in F_p^d coordinates.
struct DeckMap {
  std::uint32_t p = 2;
  std::size_t d = 1;
  std::vector<std::vector<std::uint32_t>> images;
};

// sys must come from the degree-n cyclic table of the presentation the rep lives on.
DeckMap deck_map(const SchreierSystem& sys, const AffineRep& rep);

Matrix<CyclotomicElem> jacobian_at_character(const GroupPresentation& gamma_n, const DeckMap& q,
                                             const CharacterSpec& chi);

struct HironakaResult {
  std::size_t betti = 0;
  std::size_t betti_cyclic = 0;
  std::size_t r = 0;                     // generators of the Gamma_n presentation
  std::size_t characters = 0;            // nontrivial characters accounted for
  std::size_t evaluated = 0;             // one per Galois orbit
  std::size_t min_rank = 0;              // smallest rank over nontrivial characters
  std::size_t max_corank = 0;
};

struct StratificationBudget {
  std::size_t max_cyclic_degree = 64;
  std::size_t max_evaluations = 5000;
};

// pres: a deficiency-one presentation of the knot group on which rep is defined.
HironakaResult hironaka_betti(const GroupPresentation& pres, const AffineRep& rep, const LaurentPoly& delta,
                              const StratificationBudget& budget = {});

struct FiberedVerdict {
  bool applicable = false;
  bool top_stratum_empty = false;
  std::int64_t bound = 0;  // (2g - 1)(p^d - 1) + betti_cyclic
  bool bound_ok = false;
  bool ok() const { return !applicable || (top_stratum_empty && bound_ok); }
};

FiberedVerdict fibered_shortcut_check(std::optional<bool> fibered, std::optional<int> genus,
                                      const HironakaResult& h, std::uint64_t field_order);

}  // namespace metacov
