#include "metacov/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "metacov/derham.hpp"

namespace metacov {

namespace {

Integer pow4(long e) { return e < 0 ? Integer(0) : power(4, static_cast<unsigned long>(e)); }

const std::vector<std::uint32_t> kTablePrimes = {2, 3, 5, 7, 11, 13};

}  // namespace

Theorem1Bounds theorem1_bounds(std::size_t c) {
  if (c < 3) throw std::invalid_argument("crossing number must be at least 3");
  const long cc = static_cast<long>(c);
  Theorem1Bounds b;
  b.regular = pow4(2 * cc * cc - cc);
  b.irregular = pow4(cc * cc - 2 * cc);
  b.abstract_regular = power(2, static_cast<unsigned long>(4 * cc * cc));
  b.abstract_irregular = power(2, static_cast<unsigned long>(2 * cc * cc));
  return b;
}

GoodPrime good_prime(const LaurentPoly& delta, std::size_t c) {
  const LaurentPoly d = delta.canonical();
  if (d.is_monomial()) throw std::domain_error("Alexander polynomial is trivial");
  GoodPrime g;
  for (std::uint32_t p = 2;; p = static_cast<std::uint32_t>(next_prime(p + 1)))
    if (nontrivial_modp(d, p)) {
      g.p = p;
      break;
    }
  const long cc = static_cast<long>(std::max<std::size_t>(c, 2));
  g.window_low = pow4(cc - 1);
  g.window_high = 2 * g.window_low - 2;
  mpz_nextprime(g.first_window_prime.get_mpz_t(), Integer(g.window_low - 1).get_mpz_t());
  g.below_window = g.first_window_prime <= g.window_high && g.p <= g.first_window_prime;

  mpz_nextprime(g.sample_prime.get_mpz_t(), Integer(pow4(cc - 2) - 1).get_mpz_t());
  std::size_t terms = 0;
  for (const Integer& a : d.coefficients())
    if (a % g.sample_prime != 0) ++terms;
  g.sample_terms = terms;
  g.sample_ok = terms >= 3;
  return g;
}

Lemma31Result lemma31_bound_check(const LaurentMatrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) throw std::invalid_argument("determinant bound input must be a nonempty square matrix");
  const LaurentPoly one(Integer(1)), t = LaurentPoly::t(), tm1 = LaurentPoly::t() - LaurentPoly(Integer(1));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    int seen_one = 0, seen_t = 0, seen_tm1 = 0;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const LaurentPoly& e = m(i, j);
      if (e.is_zero()) continue;
      if (e == one)
        ++seen_one;
      else if (e == t)
        ++seen_t;
      else if (e == tm1)
        ++seen_tm1;
      else
        throw std::invalid_argument("entry " + e.to_string() + " is not in {0, 1, t, t-1}");
    }
    if (seen_one > 1 || seen_t > 1 || seen_tm1 > 1) throw std::invalid_argument("row repeats one of 1, t, t-1");
    if (seen_one + seen_t + seen_tm1 == 0) throw std::invalid_argument("zero row");
  }
  Lemma31Result r;
  r.bound = pow4(static_cast<long>(m.rows()) - 1);
  const LaurentPoly det = det_bareiss(m);
  for (const Integer& a : det.coefficients()) r.max_coefficient = std::max(r.max_coefficient, Integer(abs(a)));
  r.ok = r.max_coefficient <= r.bound;
  return r;
}

LaurentMatrix random_lemma31_matrix(std::size_t n, std::mt19937_64& rng) {
  const LaurentPoly choices[3] = {LaurentPoly(Integer(1)), LaurentPoly::t(), LaurentPoly::t() - LaurentPoly(Integer(1))};
  LaurentMatrix m(n, n);
  std::vector<std::size_t> cols(n);
  for (std::size_t i = 0; i < n; ++i) {
    unsigned mask = 0;
    while (mask == 0 || static_cast<std::size_t>(__builtin_popcount(mask)) > n)
      mask = std::uniform_int_distribution<unsigned>(1, 7)(rng);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
    std::shuffle(cols.begin(), cols.end(), rng);
    std::size_t used = 0;
    for (unsigned k = 0; k < 3; ++k)
      if (mask & (1u << k)) m(i, cols[used++]) = choices[k];
  }
  return m;
}

std::vector<BoundEntry> family_bounds(const FamilySpec& family) {
  std::vector<BoundEntry> out;
  if (const auto* tw = std::get_if<Twist>(&family)) {
    if (tw->l == 0 || tw->l % 2 != 0 || tw->k == 0) throw std::invalid_argument("twist J(k,l) needs k != 0 and nonzero even l");
    const long n = tw->l / 2;
    if (tw->k % 2 == 0) {
      const Integer mn = Integer(tw->k / 2) * n;
      out.push_back({"twist J(2m,2n): (2mn)^2 - 4mn + 4", 4 * mn * mn - 4 * mn + 4});
      if (tw->k == 2 || tw->k == -2) out.push_back({"twist knot: 16n^2", Integer(16) * n * n});
    } else {
      const long m = (tw->k - 1) / 2;
      if (tw->l == 2)
        out.push_back({"twist J(2m+1,2): (2m)^2", Integer(4) * m * m});
      else if (tw->l > 2)
        out.push_back({"twist J(2m+1,2n), n > 1: 2^(2n-1)", power(2, static_cast<unsigned long>(2 * n - 1))});
      else
        out.push_back({"twist J(2m+1,2n), n < 0: 2^(2n)", power(2, static_cast<unsigned long>(-2 * n))});
    }
  } else if (const auto* pz = std::get_if<Pretzel>(&family)) {
    const long big = std::max({std::labs(pz->p), std::labs(pz->q), std::labs(pz->r)});
    out.push_back({"pretzel: 4p^2", Integer(4) * big * big});
  }
  return out;
}

BoundEntry fibered_genus_bound(int genus) { return {"fibered: 2^(2g)", power(2, static_cast<unsigned long>(2 * genus))}; }

BoundEntry fibered_crossing_bound(std::size_t crossings) {
  return {"fibered: 2^c", power(2, static_cast<unsigned long>(crossings))};
}

BoundEntry degree_bound(int degree) {
  return {"degree n: 2^(2n^2)", power(2, static_cast<unsigned long>(2 * degree * degree))};
}

BoundEntry large_prime_bound(int degree) {
  const Integer base = 2 * pow4(degree - 1) - 2;
  return {"degree d, p > 4^(c-1): (2*4^(d-1) - 2)^d", power(base, static_cast<unsigned long>(degree))};
}

std::optional<IndexWitness> witness_at(const LaurentPoly& delta, std::uint32_t p) {
  if (!nontrivial_modp(delta, p)) return std::nullopt;
  const PolyModP f = PolyModP::reduce(delta.canonical(), p);
  std::vector<RootInfo> roots;
  try {
    roots = roots_of_delta_modp(f);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
  const auto best = std::min_element(roots.begin(), roots.end(),
                                     [](const RootInfo& a, const RootInfo& b) { return a.degree < b.degree; });
  IndexWitness w;
  w.p = p;
  w.d = best->degree;
  w.n = best->order;
  w.index = power(p, static_cast<unsigned long>(w.d));
  w.regular_index = w.index * static_cast<unsigned long>(w.n);
  return w;
}

std::optional<IndexWitness> best_witness(const LaurentPoly& delta, const std::vector<std::uint32_t>& primes) {
  std::optional<IndexWitness> best;
  for (std::uint32_t p : primes) {
    auto w = witness_at(delta, p);
    if (w && (!best || w->index < best->index)) best = w;
  }
  return best;
}

BoundReport bound_report(const KnotRecord& rec, const LaurentPoly& delta) {
  BoundReport r;
  r.knot = rec.name;
  r.crossing_count = rec.diagram.crossing_count();
  r.theorem1 = theorem1_bounds(r.crossing_count);
  r.good = good_prime(delta, r.crossing_count);
  r.good_witness = witness_at(delta, r.good.p);
  r.best = best_witness(delta, kTablePrimes);

  auto fail = [&](const std::string& what) { r.violations.push_back(what); };
  if (!r.good.below_window) fail("good prime exceeds the Bertrand window");
  if (!r.good.sample_ok) fail("Delta loses terms modulo the sample prime");
  if (!r.good_witness) {
    fail("no representation at the good prime");
  } else {
    if (r.good_witness->index > r.theorem1.irregular) fail("p^d exceeds the irregular bound");
    if (r.good_witness->regular_index > r.theorem1.regular) fail("n p^d exceeds the regular bound");
  }

  const int degree = delta.canonical().span();
  for (const FamilyTag& tag : rec.families)
    for (BoundEntry& e : family_bounds(family_from_tag(tag))) r.special.push_back(std::move(e));
  if (rec.fibered.value_or(false)) {
    if (rec.genus) r.special.push_back(fibered_genus_bound(*rec.genus));
    r.special.push_back(fibered_crossing_bound(r.crossing_count));
  }
  r.special.push_back(degree_bound(degree));
  r.special.push_back(large_prime_bound(degree));
  for (const BoundEntry& e : r.special)
    if (!r.best || r.best->index > e.value) fail("achieved index exceeds " + e.source);
  return r;
}

namespace {

nlohmann::json witness_json(const std::optional<IndexWitness>& w) {
  if (!w) return nullptr;
  return {{"p", w->p}, {"d", w->d}, {"n", w->n}, {"index", to_string(w->index)},
          {"regular_index", to_string(w->regular_index)}};
}

}  // namespace

nlohmann::json to_json(const BoundReport& r) {
  nlohmann::json j;
  j["knot"] = r.knot;
  j["crossing_count"] = r.crossing_count;
  j["theorem1"] = {{"regular", to_string(r.theorem1.regular)},
                   {"irregular", to_string(r.theorem1.irregular)},
                   {"abstract_regular", to_string(r.theorem1.abstract_regular)},
                   {"abstract_irregular", to_string(r.theorem1.abstract_irregular)}};
  j["good_prime"] = {{"p", r.good.p},
                     {"window", {to_string(r.good.window_low), to_string(r.good.window_high)}},
                     {"first_window_prime", to_string(r.good.first_window_prime)},
                     {"below_window", r.good.below_window},
                     {"sample_prime", to_string(r.good.sample_prime)},
                     {"sample_terms", r.good.sample_terms}};
  j["witness"] = witness_json(r.good_witness);
  j["best"] = witness_json(r.best);
  nlohmann::json special = nlohmann::json::array();
  for (const auto& e : r.special) special.push_back({{"source", e.source}, {"bound", to_string(e.value)}});
  j["special"] = special;
  j["violations"] = r.violations;
  j["ok"] = r.ok();
  return j;
}

}  // namespace metacov
