#include <gtest/gtest.h>

#include "metacov/fox.hpp"
#include "metacov/knot_io.hpp"

using namespace metacov;

namespace {

const std::vector<std::uint32_t> kPrimes = {2, 3, 5, 7, 11, 13};

GroupRingElem times_generator_minus_one(const GroupRingElem& a, std::size_t g) {
  GroupRingElem out;
  for (const auto& [w, c] : a) {
    Word wx = w;
    wx.push_back(make_letter(g));
    out[free_reduce(wx)] += c;
    out[w] -= c;
  }
  return out;
}

void add_into(GroupRingElem& acc, const GroupRingElem& b) {
  for (const auto& [w, c] : b) acc[w] += c;
}

void drop_zeros(GroupRingElem& a) {
  for (auto it = a.begin(); it != a.end();) it = it->second == 0 ? a.erase(it) : std::next(it);
}

}  // namespace

// w - 1 = sum_i D_i(w) (x_i - 1) in the free group ring.
TEST(FoxDerivative, FundamentalFormula) {
  const std::vector<Word> words = {{1, 2, -1, -2}, {1, 1, 1}, {-2, 3, 1, -3, 2}, {2, -1, -1, 3, -2}, {}};
  for (const Word& w : words) {
    GroupRingElem sum;
    for (std::size_t g = 0; g < 3; ++g) add_into(sum, times_generator_minus_one(fox_derivative(w, g, 3), g));
    drop_zeros(sum);
    GroupRingElem expected;
    expected[free_reduce(w)] += 1;
    expected[Word{}] -= 1;
    drop_zeros(expected);
    EXPECT_EQ(sum, expected) << word_to_string(w);
  }
  EXPECT_THROW(fox_derivative({1, 4}, 0, 3), std::out_of_range);
}

TEST(FoxDerivative, ConjugationRelator) {
  // D_1(x1 x2 x1^-1 x2^-1) = 1 - x1 x2 x1^-1
  const GroupRingElem d = fox_derivative({1, 2, -1, -2}, 0, 2);
  GroupRingElem expected{{Word{}, Integer(1)}, {Word{1, 2, -1}, Integer(-1)}};
  EXPECT_EQ(d, expected);
}

TEST(Jacobian, RowsAnnihilateMeridianVector) {
  for (const std::string name : {"3_1", "4_1", "6_2", "7_7"}) {
    const GroupPresentation w = wirtinger(builtin_knot(name));
    const LaurentMatrix j = jacobian(w);
    for (std::size_t r = 0; r < j.rows(); ++r) {
      LaurentPoly sum;
      for (std::size_t c = 0; c < j.cols(); ++c) sum += j(r, c);
      EXPECT_TRUE(sum.is_zero()) << name << " row " << r;
    }
  }
}

TEST(AlexanderPoly, Props) {
  for (const std::string& name : KnotTable::shipped().names()) {
    const KnotDiagram d = builtin_knot(name);
    const LaurentPoly delta = alexander_poly(wirtinger(d));
    const PropsReport r = check_props(delta, std::max<std::size_t>(d.crossing_count(), 1));
    EXPECT_TRUE(r.ok()) << name;
    EXPECT_EQ(abs(r.delta_at_one), 1);
  }
  EXPECT_FALSE(check_props(LaurentPoly::from_ints({1, 1}), 3).ok());
  EXPECT_FALSE(check_props(LaurentPoly::from_ints({1, -2, 2}), 3).ok());
}

TEST(AlexanderModP, ReducesTheIntegerPolynomial) {
  for (const std::string& name : KnotTable::shipped().names()) {
    const GroupPresentation s = simplify(wirtinger(builtin_knot(name)));
    const LaurentPoly delta = alexander_poly(s);
    for (std::uint32_t p : kPrimes) {
      const ModPAlexander m = alexander_modp(s, p);
      EXPECT_EQ(m.delta, PolyModP::reduce(delta, p).strip_t().monic()) << name << " p=" << p;
    }
  }
  EXPECT_THROW(alexander_modp(wirtinger(builtin_knot("3_1")), 4), std::invalid_argument);
}

TEST(AlexanderModP, HigherIdealCongruences) {
  for (const std::string& name : KnotTable::shipped().names()) {
    const GroupPresentation w = wirtinger(builtin_knot(name));
    for (std::uint32_t p : kPrimes) {
      const CongruenceReport r = check_congruence(w, p);
      EXPECT_TRUE(r.ok) << name << " p=" << p << (r.mismatches.empty() ? "" : ": " + r.mismatches.front());
    }
  }
}

TEST(Families, ClosedFormsMatchDiagrams) {
  for (const std::string& name : KnotTable::shipped().names()) {
    const KnotRecord& rec = KnotTable::shipped().get(name);
    const LaurentPoly delta = alexander_poly(wirtinger(rec.diagram));
    for (const FamilyTag& tag : rec.families) {
      const FamilySpec f = family_from_tag(tag);
      EXPECT_TRUE(associates(family_poly(f), delta)) << name << " as " << family_name(f);
    }
  }
}

TEST(Families, TwistKnotsWithUnitFirstParameterAreTorusKnots) {
  for (long n = 1; n <= 4; ++n) {
    EXPECT_TRUE(associates(family_poly(Twist{-1, 2 * n}), family_poly(Torus{2 * n + 1, 2}))) << n;
    EXPECT_TRUE(associates(family_poly(Twist{1, 2 * n}), family_poly(Torus{2 * n - 1, 2}))) << n;
  }
  EXPECT_EQ(family_name(Twist{2, 4}), "J(2,4)");
  EXPECT_THROW(family_poly(Twist{2, 3}), std::invalid_argument);
  EXPECT_THROW(family_poly(Pretzel{2, 1, 1}), std::invalid_argument);
  EXPECT_THROW(family_poly(Torus{4, 2}), std::invalid_argument);
}

TEST(Factorization, RenderedLines) {
  auto delta = [](const std::string& k) { return alexander_poly(wirtinger(builtin_knot(k))); };
  EXPECT_EQ(render_modp(delta("3_1"), 3), "((t + 1)^2, 3)");
  EXPECT_EQ(render_modp(delta("5_2"), 5), "((2) * (t^2 + t + 1), 5)");
  EXPECT_EQ(render_modp(delta("6_1"), 3), "((-1) * (t + 1)^2, 3)");
  EXPECT_EQ(render_modp(delta("7_3"), 2), "(t * (t^2 + t + 1), 2)");
  EXPECT_EQ(render_modp(delta("7_6"), 5), "((t + 2)^2 * (t + 3)^2, 5)");
  EXPECT_FALSE(nontrivial_modp(delta("5_2"), 2));
  EXPECT_FALSE(nontrivial_modp(delta("6_1"), 2));
  EXPECT_TRUE(nontrivial_modp(delta("3_1"), 2));
  EXPECT_FALSE(nontrivial_modp(delta("unknot"), 7));
}
