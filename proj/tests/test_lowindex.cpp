#include <gtest/gtest.h>

#include "metacov/fox.hpp"
#include "metacov/knot_io.hpp"
#include "metacov/lowindex.hpp"
#include "oracles.hpp"

using namespace metacov;

namespace {

GroupPresentation simplified(const std::string& name) { return simplify(wirtinger(builtin_knot(name))); }

std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

}  // namespace

TEST(LowIndex, UnknotHasOnlyCyclicCovers) {
  const GroupPresentation w = wirtinger(builtin_knot("unknot"));
  const auto subs = low_index_subgroups(w, 4);
  ASSERT_EQ(subs.size(), 4u);
  for (const SubgroupRecord& s : subs) {
    EXPECT_TRUE(s.is_cyclic_cover);
    EXPECT_EQ(s.class_size, 1u);
  }
}

TEST(LowIndex, OneCyclicClassPerIndex) {
  for (const std::string name : {"3_1", "4_1", "5_2"}) {
    const GroupPresentation s = simplified(name);
    std::vector<std::size_t> cyclic(6, 0);
    for (const SubgroupRecord& r : low_index_subgroups(s, 5)) {
      EXPECT_TRUE(r.table.is_transitive());
      EXPECT_TRUE(r.table.relators_closed(s));
      if (r.is_cyclic_cover) ++cyclic[r.index];
    }
    for (std::size_t k = 1; k <= 5; ++k) EXPECT_EQ(cyclic[k], 1u) << name << " index " << k;
  }
}

// Subgroups of index k correspond to transitive maps into S_k with 0 fixed as basepoint.
TEST(LowIndex, ClassSizesMatchBruteForceHomCount) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {{"3_1", 5}, {"4_1", 5}, {"5_1", 4}, {"5_2", 4}};
  for (const auto& [name, kmax] : cases) {
    const GroupPresentation s = simplified(name);
    for (std::size_t k = 2; k <= kmax; ++k) {
      std::size_t subgroups = 0;
      for_each_subgroup_of_index(s, k, [&](const SubgroupRecord& r) {
        EXPECT_EQ(r.class_size, conjugacy_class_size(r.table));
        subgroups += r.class_size;
        return true;
      });
      const std::uint64_t homs = oracle::transitive_hom_count(s, static_cast<int>(k));
      EXPECT_EQ(subgroups * factorial(k - 1), homs) << name << " index " << k;
    }
  }
}

TEST(LowIndex, MinimalNoncyclicDegrees) {
  EXPECT_EQ(minimal_noncyclic_degree(simplified("3_1"), 8).degree, 3u);
  EXPECT_EQ(minimal_noncyclic_degree(simplified("4_1"), 8).degree, 4u);
  EXPECT_EQ(minimal_noncyclic_degree(simplified("5_2"), 8).degree, 5u);
  const MinimalDegree none = minimal_noncyclic_degree(wirtinger(builtin_knot("unknot")), 4);
  EXPECT_FALSE(none.degree);
  EXPECT_EQ(none.cap, 4u);
}

TEST(LowIndex, FigureEightHasNoNoncyclicClassBelowFour) {
  const GroupPresentation s = simplified("4_1");
  for (const SubgroupRecord& r : low_index_subgroups(s, 3)) EXPECT_TRUE(r.is_cyclic_cover) << "index " << r.index;
  bool noncyclic_at_four = false;
  for_each_subgroup_of_index(s, 4, [&](const SubgroupRecord& r) {
    noncyclic_at_four = !r.is_cyclic_cover;
    return !noncyclic_at_four;
  });
  EXPECT_TRUE(noncyclic_at_four);
}

TEST(LowIndex, PreimageCoverAppearsAmongClasses) {
  const GroupPresentation s = simplified("3_1");
  const AffineRep rep = build_rep(s, 3, PolyModP(3, {1, 1}));
  const CosetTable y = preimage_table(rep);
  ASSERT_EQ(y.degree(), 3u);
  EXPECT_FALSE(is_cyclic_cover(y));
  auto equivalent = [&](const CosetTable& a, const CosetTable& b) {
    for (const auto& sigma : oracle::all_permutations(3)) {
      bool ok = true;
      for (std::size_t g = 0; g < s.num_generators && ok; ++g)
        for (std::uint32_t c = 0; c < 3 && ok; ++c)
          ok = static_cast<std::uint32_t>(sigma[a.act(c, make_letter(g))]) == b.act(sigma[c], make_letter(g));
      if (ok) return true;
    }
    return false;
  };
  std::size_t matches = 0;
  for_each_subgroup_of_index(s, 3, [&](const SubgroupRecord& r) {
    if (equivalent(y, r.table)) ++matches;
    return true;
  });
  EXPECT_EQ(matches, 1u);
}

TEST(LowIndex, CapIsEnforced) {
  EXPECT_THROW(low_index_subgroups(simplified("3_1"), 9), std::invalid_argument);
  EXPECT_THROW(low_index_subgroups(simplified("3_1"), 12, LowIndexOptions{10}), std::invalid_argument);
}

TEST(MinimalLine, Formatting) {
  EXPECT_EQ(minimal_line("3_1", MinimalDegree{3, 8}, true, {"((t + 1)^2, 3)"}), "3_1, 3: Yes, ((t + 1)^2, 3)");
  EXPECT_EQ(minimal_line("6_1", MinimalDegree{6, 8}, false, {"((-1) * (t + 1)^2, 3)", "(t * (t + 1), 2)"}),
            "6_1, 6: No, ((-1) * (t + 1)^2, 3), (t * (t + 1), 2)");
  EXPECT_EQ(minimal_line("9_1", MinimalDegree{std::nullopt, 8}, false, {}), "9_1, none <= 8");
}
