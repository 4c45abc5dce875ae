#include <gtest/gtest.h>

#include "metacov/fox.hpp"
#include "metacov/knot_io.hpp"
#include "metacov/stratification.hpp"

using namespace metacov;

namespace {

const Budget kWide{5000, 40'000'000};

}  // namespace

TEST(Hironaka, AgreesWithSmithNormalForm) {
  std::size_t compared = 0;
  for (const std::string& name : KnotTable::shipped().names()) {
    if (name == "unknot") continue;
    const GroupPresentation s = simplify(wirtinger(builtin_knot(name)));
    const LaurentPoly delta = alexander_poly(s);
    for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u}) {
      std::vector<RootInfo> roots;
      try {
        roots = roots_of_delta_modp(alexander_modp(s, p).delta);
      } catch (const std::domain_error&) {
        continue;
      }
      for (const RootInfo& r : roots) {
        const AffineRep rep = build_rep(s, p, r.factor);
        if (rep.expected_image_order() > 700) continue;
        const CoverHomology k = cover_homology(s, kernel_table(rep), CoverKind::kernel, kWide, false);
        const HironakaResult h = hironaka_betti(s, rep, delta);
        EXPECT_EQ(h.betti, k.h1.free_rank()) << name << " p=" << p << " " << r.factor.to_string();
        EXPECT_EQ(h.betti_cyclic, fox_cyclic_invariants(delta, rep.order_alpha()).betti);
        EXPECT_EQ(h.characters, rep.field_order() - 1);
        EXPECT_LE(h.evaluated, h.characters);
        ++compared;
      }
    }
  }
  EXPECT_GT(compared, 25u);
}

TEST(Hironaka, BudgetIsEnforced) {
  const GroupPresentation s = simplify(wirtinger(builtin_knot("4_1")));
  const AffineRep rep = build_rep(s, 13, PolyModP(13, {1, 10, 1}));
  EXPECT_THROW(hironaka_betti(s, rep, alexander_poly(s), StratificationBudget{2, 5000}), BudgetExceeded);
}

TEST(DeckMap, TranslationsSpanTheField) {
  const GroupPresentation s = simplify(wirtinger(builtin_knot("4_1")));
  const AffineRep rep = build_rep(s, 2, PolyModP(2, {1, 1, 1}));
  const SchreierSystem sys(cyclic_table(abelianization_map(s), rep.order_alpha()));
  const DeckMap q = deck_map(sys, rep);
  EXPECT_EQ(q.images.size(), sys.num_generators());
  EXPECT_EQ(q.d, 2u);
  bool nonzero = false;
  for (const auto& v : q.images) {
    ASSERT_EQ(v.size(), 2u);
    nonzero = nonzero || v[0] != 0 || v[1] != 0;
  }
  EXPECT_TRUE(nonzero);
}

TEST(Fibered, TopStratumEmptyAndBoundHolds) {
  for (const std::string name : {"3_1", "4_1", "5_1", "6_3"}) {
    const KnotRecord& rec = KnotTable::shipped().get(name);
    ASSERT_TRUE(rec.fibered.value_or(false)) << name;
    const GroupPresentation s = simplify(wirtinger(rec.diagram));
    const LaurentPoly delta = alexander_poly(s);
    for (std::uint32_t p : {2u, 3u, 5u}) {
      std::vector<RootInfo> roots;
      try {
        roots = roots_of_delta_modp(alexander_modp(s, p).delta);
      } catch (const std::domain_error&) {
        continue;
      }
      for (const RootInfo& r : roots) {
        const AffineRep rep = build_rep(s, p, r.factor);
        if (rep.expected_image_order() > 700) continue;
        const HironakaResult h = hironaka_betti(s, rep, delta);
        const FiberedVerdict v = fibered_shortcut_check(rec.fibered, rec.genus, h, rep.field_order());
        EXPECT_TRUE(v.applicable);
        EXPECT_TRUE(v.ok()) << name << " p=" << p << " bound " << v.bound << " betti " << h.betti;
      }
    }
  }
  const FiberedVerdict na = fibered_shortcut_check(false, 1, HironakaResult{}, 4);
  EXPECT_FALSE(na.applicable);
  EXPECT_TRUE(na.ok());
}
