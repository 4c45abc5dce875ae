#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "metacov/abelian_group.hpp"
#include "metacov/derham.hpp"
#include "metacov/laurent.hpp"
#include "metacov/presentation.hpp"
#include "metacov/smith.hpp"

namespace metacov {

// Right action of the generators on cosets 0..degree-1; coset 0 is the basepoint.
class CosetTable {
 public:
  CosetTable() = default;
  // Throws std::invalid_argument unless every row is a permutation.
  explicit CosetTable(std::vector<std::vector<std::uint32_t>> forward);

  std::size_t degree() const { return degree_; }
  std::size_t num_generators() const { return forward_.size(); }
  std::uint32_t act(std::uint32_t coset, Letter l) const {
    return l > 0 ? forward_[generator_of(l)][coset] : backward_[generator_of(l)][coset];
  }
  std::uint32_t act(std::uint32_t coset, const Word& w) const;
  const std::vector<std::uint32_t>& permutation(std::size_t g) const { return forward_[g]; }

  bool is_transitive() const;
  bool relators_closed(const GroupPresentation& pres) const;
  // Orbits of the subgroup generated by the given words.
  std::vector<std::vector<std::uint32_t>> orbits(const std::vector<Word>& words) const;

 private:
  std::size_t degree_ = 0;
  std::vector<std::vector<std::uint32_t>> forward_, backward_;
};

// Cosets are the elements of the image group, degree n * p^d.
CosetTable kernel_table(const AffineRep& rep);
// Cosets of the stabilizer of 0, i.e. the points of F_{p^d}.
CosetTable preimage_table(const AffineRep& rep);
// Cosets of the kernel of the map to Z/n.
CosetTable cyclic_table(const std::vector<std::int64_t>& exponents, std::size_t n);

// Breadth-first Schreier transversal and the induced generating set.
class SchreierSystem {
 public:
  explicit SchreierSystem(const CosetTable& table);

  const CosetTable& table() const { return table_; }
  std::size_t num_generators() const { return generators_.size(); }
  // (coset, generator) for each Schreier generator.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& generators() const { return generators_; }
  const Word& transversal(std::uint32_t coset) const { return transversal_[coset]; }
  // Schreier generator for the edge (coset, g), or -1 on a tree edge.
  std::int64_t generator_at(std::uint32_t coset, std::size_t g) const { return index_[coset][g]; }

  // Rewrites w read from the given coset; the walk need not close up.
  Word rewrite(std::uint32_t coset, const Word& w) const;
  // Exponent-sum row of the rewritten word.
  std::vector<std::pair<std::uint32_t, std::int64_t>> rewrite_abelian(std::uint32_t coset, const Word& w) const;

 private:
  CosetTable table_;
  std::vector<Word> transversal_;
  std::vector<std::vector<std::int64_t>> index_;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> generators_;
};

// Reidemeister-Schreier presentation: one rewritten relator per (coset, relator).
GroupPresentation rs_presentation(const GroupPresentation& pres, const SchreierSystem& sys);

struct Budget {
  std::size_t max_degree = 200;
  std::size_t max_entries = 4'000'000;
};

class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class CoverKind { kernel, preimage, cyclic };
std::string to_string(CoverKind k);

struct CoverHomology {
  CoverKind kind = CoverKind::kernel;
  std::size_t degree = 0;
  AbelianGroup h1;
  std::size_t rs_generators = 0;
  std::size_t rs_relators = 0;
  std::size_t boundary_components = 0;
  std::size_t peripheral_rank = 0;
  std::size_t nonperipheral_rank = 0;
  bool peripheral_computed = false;
};

// H1 of the cover given by the table. The presentation's meridian and
// longitude define the boundary tori. Throws BudgetExceeded when over budget.
CoverHomology cover_homology(const GroupPresentation& pres, const CosetTable& table, CoverKind kind,
                             const Budget& budget, bool with_peripheral = true);

std::size_t boundary_components(const GroupPresentation& pres, const CosetTable& table);

struct CyclicInvariants {
  std::size_t betti = 1;
  Integer torsion_order = 1;
};

CyclicInvariants fox_cyclic_invariants(const LaurentPoly& delta, std::size_t n);

struct Theorem3Verdict {
  std::int64_t beta = 0;
  std::int64_t beta_cyclic = 0;
  std::int64_t lower = 0;
  std::int64_t upper = 0;    // n (c_K - 1)(p^d - 1) + beta_cyclic
  std::int64_t upper_r = 0;  // (r - 1)(p^d - 1) + beta_cyclic, r from the Gamma_n presentation
  bool lower_ok = false;
  bool upper_ok = false;
  bool upper_r_ok = false;
  bool ok() const { return lower_ok && upper_ok; }
};

Theorem3Verdict check_theorem3(std::size_t beta, std::size_t beta_cyclic, std::uint64_t field_order,
                               std::uint64_t n, std::size_t crossing_count, std::size_t cyclic_rs_generators);

enum class TorsionVerdict { holds, fails, both_free };
std::string to_string(TorsionVerdict v);

TorsionVerdict torsion_ratio_check(const AbelianGroup& kernel_h1, const AbelianGroup& cyclic_h1,
                                   std::uint64_t field_order);

}  // namespace metacov
