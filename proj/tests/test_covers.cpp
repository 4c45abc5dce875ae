#include <gtest/gtest.h>

#include "metacov/covers.hpp"
#include "metacov/fox.hpp"
#include "metacov/knot_io.hpp"
#include "oracles.hpp"

using namespace metacov;

namespace {

const Budget kWide{5000, 40'000'000};

struct Cover {
  AffineRep rep;
  CoverHomology kernel;
  CoverHomology cyclic;
};

Cover cover_at(const GroupPresentation& pres, std::uint32_t p, const PolyModP& factor) {
  AffineRep rep = build_rep(pres, p, factor);
  CoverHomology k = cover_homology(pres, kernel_table(rep), CoverKind::kernel, kWide);
  CoverHomology c = cover_homology(pres, cyclic_table(abelianization_map(pres), rep.order_alpha()),
                                   CoverKind::cyclic, kWide, false);
  return {std::move(rep), std::move(k), std::move(c)};
}

std::vector<PolyModP> factors(const GroupPresentation& s, std::uint32_t p) {
  std::vector<PolyModP> out;
  try {
    for (const RootInfo& r : roots_of_delta_modp(alexander_modp(s, p).delta)) out.push_back(r.factor);
  } catch (const std::domain_error&) {
  }
  return out;
}

}  // namespace

TEST(CosetTable, ValidatesPermutations) {
  EXPECT_THROW(CosetTable({{0, 0}}), std::invalid_argument);
  const CosetTable t({{1, 2, 0}, {0, 2, 1}});
  EXPECT_TRUE(t.is_transitive());
  EXPECT_EQ(t.act(0, Word{1, 1, -2}), 1u);
  EXPECT_EQ(t.act(2, Word{-1}), 1u);
  EXPECT_EQ(t.orbits({{2}}).size(), 2u);
}

TEST(Schreier, GeneratorCountAndClosedRelators) {
  const GroupPresentation w = wirtinger(builtin_knot("4_1"));
  const CosetTable t = cyclic_table(abelianization_map(w), 5);
  EXPECT_TRUE(t.relators_closed(w));
  const SchreierSystem sys(t);
  EXPECT_EQ(sys.num_generators(), t.degree() * (w.num_generators - 1) + 1);
  for (std::uint32_t c = 0; c < t.degree(); ++c) EXPECT_EQ(t.act(0, sys.transversal(c)), c);
  const GroupPresentation rs = rs_presentation(w, sys);
  EXPECT_EQ(rs.num_generators, sys.num_generators());
  EXPECT_EQ(rs.relators.size(), t.degree() * w.relators.size());
}

// Small cyclic covers against the determinantal-divisor oracle on the RS relation matrix.
TEST(CyclicCover, SnfAgreesWithMinorsOracle) {
  const GroupPresentation s = simplify(wirtinger(builtin_knot("3_1")));
  for (std::size_t n = 2; n <= 4; ++n) {
    const GroupPresentation rs = rs_presentation(s, SchreierSystem(cyclic_table(abelianization_map(s), n)));
    const auto e = exponent_matrix(rs);
    Matrix<Integer> m(e.size(), rs.num_generators, Integer(0));
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < e[i].size(); ++j) m(i, j) = e[i][j];
    const CoverHomology h = cover_homology(s, cyclic_table(abelianization_map(s), n), CoverKind::cyclic, kWide, false);
    EXPECT_EQ(h.h1, oracle::cokernel_by_minors(m)) << "n=" << n;
  }
}

TEST(CyclicCover, FoxFormulaMatchesReidemeisterSchreier) {
  for (const std::string& name : KnotTable::shipped().names()) {
    const GroupPresentation s = simplify(wirtinger(builtin_knot(name)));
    const LaurentPoly delta = alexander_poly(s);
    const auto ab = abelianization_map(s);
    for (std::size_t n = 1; n <= 10; ++n) {
      const CoverHomology h = cover_homology(s, cyclic_table(ab, n), CoverKind::cyclic, kWide, false);
      const CyclicInvariants fox = fox_cyclic_invariants(delta, n);
      EXPECT_EQ(h.h1.free_rank(), fox.betti) << name << " n=" << n;
      EXPECT_EQ(h.h1.torsion_order(), fox.torsion_order) << name << " n=" << n;
    }
  }
  const CyclicInvariants f = fox_cyclic_invariants(LaurentPoly::from_ints({1, -3, 1}), 3);
  EXPECT_EQ(f.betti, 1u);
  EXPECT_EQ(f.torsion_order, 16);
}

TEST(KernelCover, PresentationIndependent) {
  for (const std::string name : {"3_1", "4_1", "5_2", "6_1"}) {
    const GroupPresentation w = wirtinger(builtin_knot(name));
    const GroupPresentation s = simplify(w);
    for (std::uint32_t p : {3u, 5u, 7u}) {
      for (const PolyModP& g : factors(s, p)) {
        const Cover a = cover_at(w, p, g);
        const Cover b = cover_at(s, p, g);
        EXPECT_EQ(a.kernel.h1, b.kernel.h1) << name << " p=" << p;
        EXPECT_EQ(a.cyclic.h1, b.cyclic.h1) << name << " p=" << p;
        EXPECT_EQ(a.kernel.peripheral_rank, b.kernel.peripheral_rank) << name << " p=" << p;
      }
    }
  }
}

TEST(KernelCover, KnownCells) {
  const GroupPresentation s4 = simplify(wirtinger(builtin_knot("4_1")));
  const Cover c = cover_at(s4, 2, PolyModP(2, {1, 1, 1}));
  EXPECT_EQ(c.kernel.h1, AbelianGroup::parse("[0^4, 2^2]"));
  EXPECT_EQ(c.cyclic.h1, AbelianGroup::parse("[0, 4^2]"));
  EXPECT_EQ(c.kernel.degree, 12u);

  const GroupPresentation s3 = simplify(wirtinger(builtin_knot("3_1")));
  const Cover t = cover_at(s3, 2, PolyModP(2, {1, 1, 1}));
  EXPECT_EQ(t.kernel.h1, AbelianGroup::parse("[0^4]"));
  EXPECT_EQ(t.cyclic.h1, AbelianGroup::parse("[0, 2^2]"));
}

TEST(KernelCover, BoundaryAndSandwich) {
  std::size_t checked = 0;
  for (const std::string& name : KnotTable::shipped().names()) {
    const KnotDiagram d = builtin_knot(name);
    const GroupPresentation s = simplify(wirtinger(d));
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      for (const PolyModP& g : factors(s, p)) {
        const AffineRep rep = build_rep(s, p, g);
        if (rep.expected_image_order() > 600) continue;
        const Cover c = cover_at(s, p, g);
        EXPECT_EQ(c.kernel.boundary_components, rep.field_order()) << name << " p=" << p;
        EXPECT_EQ(c.kernel.peripheral_rank + c.kernel.nonperipheral_rank, c.kernel.h1.free_rank());
        EXPECT_LE(c.kernel.peripheral_rank, c.kernel.boundary_components);
        const Theorem3Verdict v = check_theorem3(c.kernel.h1.free_rank(), c.cyclic.h1.free_rank(), rep.field_order(),
                                                 rep.order_alpha(), d.crossing_count(), c.cyclic.rs_generators);
        EXPECT_TRUE(v.ok()) << name << " p=" << p << " beta=" << v.beta << " in [" << v.lower << ", " << v.upper << "]";
        EXPECT_TRUE(v.upper_r_ok) << name << " p=" << p;
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 20u);
}

TEST(KernelCover, BudgetIsEnforced) {
  const GroupPresentation s = simplify(wirtinger(builtin_knot("4_1")));
  const AffineRep rep = build_rep(s, 11, PolyModP(11, {6, 1}));
  EXPECT_THROW(cover_homology(s, kernel_table(rep), CoverKind::kernel, Budget{50, 1000}), BudgetExceeded);
}

TEST(TorsionRatio, Verdicts) {
  const GroupPresentation s4 = simplify(wirtinger(builtin_knot("4_1")));
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
    for (const PolyModP& g : factors(s4, p)) {
      const Cover c = cover_at(s4, p, g);
      EXPECT_EQ(torsion_ratio_check(c.kernel.h1, c.cyclic.h1, c.rep.field_order()), TorsionVerdict::holds) << p;
    }
  }
  const GroupPresentation s5 = simplify(wirtinger(builtin_knot("5_2")));
  const Cover c = cover_at(s5, 3, PolyModP(3, {1, 0, 1}));
  EXPECT_EQ(torsion_ratio_check(c.kernel.h1, c.cyclic.h1, 9), TorsionVerdict::fails);
  EXPECT_EQ(torsion_ratio_check(AbelianGroup(4, {}), AbelianGroup(1, {}), 4), TorsionVerdict::both_free);
  EXPECT_EQ(to_string(TorsionVerdict::both_free), "both-free");
}

TEST(BettiSandwich, Arithmetic) {
  const Theorem3Verdict v = check_theorem3(4, 1, 4, 3, 4, 3);
  EXPECT_EQ(v.lower, 4);
  EXPECT_EQ(v.upper, 3 * 3 * 3 + 1);
  EXPECT_EQ(v.upper_r, 2 * 3 + 1);
  EXPECT_TRUE(v.ok());
  EXPECT_FALSE(check_theorem3(2, 1, 4, 3, 4, 3).lower_ok);
}
