#include <gtest/gtest.h>

#include <random>

#include "metacov/bounds.hpp"
#include "oracles.hpp"

using namespace metacov;

namespace {

// Leibniz expansion; only practical for n <= 5.
LaurentPoly det_leibniz(const LaurentMatrix& m) {
  const int n = static_cast<int>(m.rows());
  LaurentPoly sum;
  for (const auto& perm : oracle::all_permutations(n)) {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    LaurentPoly term(Integer(inversions % 2 ? -1 : 1));
    for (int i = 0; i < n; ++i) term *= m(i, perm[i]);
    sum += term;
  }
  return sum;
}

Integer max_abs_coefficient(const LaurentPoly& f) {
  Integer best = 0;
  for (const Integer& c : f.coefficients()) best = std::max<Integer>(best, abs(c));
  return best;
}

}  // namespace

TEST(DeterminantBound, ThousandRandomMatrices) {
  std::mt19937_64 rng(20240611);
  std::size_t cross_checked = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const LaurentMatrix m = random_lemma31_matrix(n, rng);
    const Lemma31Result r = lemma31_bound_check(m);
    EXPECT_TRUE(r.ok) << "trial " << trial << " n=" << n << " max " << r.max_coefficient;
    EXPECT_EQ(r.bound, power(4, n - 1));
    if (n <= 5) {
      EXPECT_EQ(r.max_coefficient, max_abs_coefficient(det_leibniz(m))) << "trial " << trial;
      ++cross_checked;
    }
  }
  EXPECT_GT(cross_checked, 600u);
}

TEST(DeterminantBound, SmallCases) {
  const LaurentPoly t = LaurentPoly::t(), one(Integer(1)), tm1 = LaurentPoly::from_ints({-1, 1});
  LaurentMatrix a(1, 1);
  a(0, 0) = tm1;
  EXPECT_EQ(lemma31_bound_check(a).max_coefficient, 1);

  LaurentMatrix b(2, 2);
  b(0, 0) = tm1, b(0, 1) = one, b(1, 0) = one, b(1, 1) = tm1;
  const Lemma31Result r = lemma31_bound_check(b);
  EXPECT_EQ(r.max_coefficient, 2);
  EXPECT_EQ(r.bound, 4);
  EXPECT_TRUE(r.ok);

  LaurentMatrix zero_row(2, 2);
  zero_row(0, 0) = t;
  EXPECT_THROW(lemma31_bound_check(zero_row), std::invalid_argument);
  LaurentMatrix repeated(1, 2);
  repeated(0, 0) = t, repeated(0, 1) = t;
  EXPECT_THROW(lemma31_bound_check(repeated), std::invalid_argument);
  LaurentMatrix bad_entry(1, 1);
  bad_entry(0, 0) = LaurentPoly::from_ints({2});
  EXPECT_THROW(lemma31_bound_check(bad_entry), std::invalid_argument);
}

TEST(IndexBounds, ExactPowers) {
  const Theorem1Bounds b = theorem1_bounds(3);
  EXPECT_EQ(b.regular, power(4, 15));
  EXPECT_EQ(b.irregular, power(4, 3));
  EXPECT_EQ(b.abstract_regular, power(2, 36));
  EXPECT_EQ(b.abstract_irregular, power(2, 18));
  EXPECT_GT(theorem1_bounds(12).regular, Integer(1) << 64);
}

TEST(GoodPrime, LiesBelowTheBertrandWindow) {
  for (const std::string& name : KnotTable::shipped().names()) {
    if (name == "unknot") continue;
    const KnotRecord& rec = KnotTable::shipped().get(name);
    const std::size_t c = rec.diagram.crossing_count();
    const GoodPrime g = good_prime(alexander_poly(wirtinger(rec.diagram)), c);
    EXPECT_TRUE(is_prime(g.p)) << name;
    EXPECT_EQ(g.window_low, power(4, c - 1));
    EXPECT_EQ(g.window_high, 2 * power(4, c - 1) - 2);
    EXPECT_TRUE(g.below_window) << name;
    EXPECT_TRUE(g.sample_ok) << name;
  }
}

TEST(Witness, FigureEightFiberedBoundIsAttained) {
  const LaurentPoly delta = LaurentPoly::from_ints({1, -3, 1});
  const auto best = best_witness(delta, {2, 3, 5, 7, 11, 13});
  ASSERT_TRUE(best);
  EXPECT_EQ(best->p, 2u);
  EXPECT_EQ(best->d, 2u);
  EXPECT_EQ(best->index, 4);
  EXPECT_EQ(best->index, fibered_genus_bound(1).value);
  EXPECT_EQ(best->regular_index, 12);
  EXPECT_FALSE(witness_at(LaurentPoly::from_ints({2, -3, 2}), 2));
}

TEST(Witness, AchievedIndicesRespectEveryBound) {
  for (const std::string& name : KnotTable::shipped().names()) {
    if (name == "unknot") continue;
    const KnotRecord& rec = KnotTable::shipped().get(name);
    const BoundReport r = bound_report(rec, alexander_poly(wirtinger(rec.diagram)));
    EXPECT_TRUE(r.ok()) << name << ": " << (r.violations.empty() ? "" : r.violations.front());
    ASSERT_TRUE(r.best) << name;
    for (const BoundEntry& e : r.special) EXPECT_LE(r.best->index, e.value) << name << " " << e.source;
  }
}

TEST(FamilyBounds, ClosedForms) {
  const auto twist = family_bounds(Twist{2, 4});
  ASSERT_FALSE(twist.empty());
  EXPECT_EQ(twist.front().value, 4 * 4 - 8 + 4);
  EXPECT_EQ(family_bounds(Pretzel{3, 1, 3}).front().value, 36);
  EXPECT_EQ(degree_bound(2).value, power(2, 8));
  EXPECT_EQ(large_prime_bound(2).value, 36);
  EXPECT_EQ(fibered_crossing_bound(4).value, 16);
}
