#include "metacov/fox.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "metacov/smith.hpp"

namespace metacov {

namespace {

constexpr std::size_t kMinorLimit = 5000;

// 1 + t + ... + t^(|a|-1), the factor by which deleting column i scales the minor.
LaurentPoly column_cofactor(std::int64_t a) {
  const auto n = static_cast<std::size_t>(a < 0 ? -a : a);
  return LaurentPoly(std::vector<Integer>(n, Integer(1)), 0);
}

// Every k-subset of {0..n-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  while (true) {
    out.push_back(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

Integer binomial(std::size_t n, std::size_t k) {
  Integer b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return b;
}

// gcd of all k x k minors; k = 0 gives 1.
LaurentPoly minor_gcd(const LaurentMatrix& m, std::size_t k) {
  if (k == 0) return LaurentPoly(Integer(1));
  if (k > m.rows() || k > m.cols()) return LaurentPoly();
  if (binomial(m.rows(), k) * binomial(m.cols(), k) > kMinorLimit)
    throw std::runtime_error("too many minors to take their gcd");
  LaurentPoly g;
  for (const auto& rows : subsets(m.rows(), k))
    for (const auto& cols : subsets(m.cols(), k)) g = gcd(g, det_bareiss(m.submatrix(rows, cols)));
  return g;
}

// Monic, t-free image of an integral Laurent polynomial in F_p[t].
PolyModP reduce_normalized(const LaurentPoly& f, std::uint32_t p) {
  if (f.is_zero()) return PolyModP(p);
  PolyModP r = PolyModP::reduce(f.shifted(-f.low_degree()), p);
  if (r.is_zero()) return r;
  return r.strip_t().monic();
}

}  // namespace

GroupRingElem fox_derivative(const Word& w, std::size_t generator, std::size_t num_generators) {
  if (generator >= num_generators) throw std::out_of_range("fox_derivative: generator index out of range");
  GroupRingElem out;
  Word prefix;
  for (Letter l : w) {
    if (generator_of(l) >= num_generators) throw std::out_of_range("fox_derivative: letter out of range");
    if (generator_of(l) == generator) {
      if (l > 0) {
        out[free_reduce(prefix)] += 1;
      } else {
        Word term = prefix;
        term.push_back(l);
        out[free_reduce(term)] -= 1;
      }
    }
    prefix.push_back(l);
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

LaurentMatrix jacobian(const GroupPresentation& pres) {
  const std::vector<std::int64_t> a = abelianization_map(pres);
  LaurentMatrix m(pres.relators.size(), pres.num_generators);
  for (std::size_t j = 0; j < pres.relators.size(); ++j) {
    std::int64_t e = 0;
    for (Letter l : pres.relators[j]) {
      const std::size_t g = generator_of(l);
      if (l > 0) {
        m(j, g) += LaurentPoly::monomial(1, static_cast<int>(e));
        e += a[g];
      } else {
        e -= a[g];
        m(j, g) -= LaurentPoly::monomial(1, static_cast<int>(e));
      }
    }
  }
  return m;
}

LaurentPoly alexander_poly(const GroupPresentation& pres) {
  const std::vector<std::int64_t> a = abelianization_map(pres);
  const LaurentMatrix jac = jacobian(pres);
  const std::size_t r = pres.num_generators, s = pres.relators.size();
  const std::size_t none = static_cast<std::size_t>(-1);

  std::vector<std::size_t> usable;
  for (std::size_t i = 0; i < r; ++i)
    if (a[i] != 0) usable.push_back(i);

  LaurentPoly delta;
  if (s == r || s + 1 == r) {
    const LaurentMatrix base = s == r ? jac.without(s - 1, none) : jac;
    const std::size_t i0 = usable.front();
    const LaurentPoly d0 = det_bareiss(base.without(none, i0));
    if (!d0.is_zero()) {
      delta = divide_exact(d0, column_cofactor(a[i0]));
      if (usable.size() > 1) {
        const std::size_t i1 = usable[1];
        const LaurentPoly d1 = det_bareiss(base.without(none, i1));
        if (!associates(d0 * column_cofactor(a[i1]), d1 * column_cofactor(a[i0])))
          throw std::logic_error("column-deletion minors disagree: " + d0.to_string() + " vs " + d1.to_string());
      }
    }
  }
  if (delta.is_zero() && s + 1 != r) {
    // general shape: gcd of the (r-1)-minors, each corrected by its column factor
    for (std::size_t i : usable) {
      const LaurentMatrix minus = jac.without(none, i);
      delta = gcd(delta, divide_exact(minor_gcd(minus, r - 1), column_cofactor(a[i])));
    }
  }
  if (delta.is_zero()) throw std::domain_error("Jacobian rank is below r-1; the Alexander polynomial vanishes");
  return delta.canonical();
}

ModPAlexander alexander_modp(const GroupPresentation& pres, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("not prime: " + std::to_string(p));
  const LaurentMatrix jac = jacobian(pres);
  Matrix<PolyModP> m(jac.rows(), jac.cols(), PolyModP(p));
  for (std::size_t i = 0; i < jac.rows(); ++i) {
    int low = 0;
    bool any = false;
    for (std::size_t j = 0; j < jac.cols(); ++j) {
      if (jac(i, j).is_zero()) continue;
      low = any ? std::min(low, jac(i, j).low_degree()) : jac(i, j).low_degree();
      any = true;
    }
    for (std::size_t j = 0; j < jac.cols(); ++j) m(i, j) = PolyModP::reduce(jac(i, j).shifted(-low), p);
  }
  ModPAlexander out;
  out.p = p;
  out.delta = PolyModP::constant(p, 1);
  for (const PolyModP& f : snf_poly(std::move(m))) {
    if (f.is_zero()) {
      out.invariant_factors.push_back(f);
      continue;
    }
    PolyModP g = f.strip_t().monic();
    out.invariant_factors.push_back(g);
    out.delta = out.delta * g;
    ++out.rank;
  }
  return out;
}

CongruenceReport check_congruence(const GroupPresentation& pres, std::uint32_t p) {
  CongruenceReport rep;
  rep.p = p;
  const ModPAlexander mp = alexander_modp(pres, p);
  const LaurentMatrix jac = jacobian(pres);
  const std::size_t r = pres.num_generators;
  if (r == 0) return rep;

  auto mismatch = [&](const std::string& what) {
    rep.ok = false;
    rep.mismatches.push_back(what);
  };
  const PolyModP lhs = reduce_normalized(alexander_poly(pres), p);
  if (!(lhs == mp.delta)) mismatch("i=0: " + lhs.to_string() + " vs " + mp.delta.to_string());

  // Delta_i generates the ideal of (r-1-i)-minors; over F_p that ideal is
  // generated by the product of the first r-1-i invariant factors.
  for (std::size_t i = 1; i + 1 < r; ++i) {
    const std::size_t k = r - 1 - i;
    if (binomial(jac.rows(), k) * binomial(jac.cols(), k) > kMinorLimit) continue;
    PolyModP modp = PolyModP::constant(p, 1);
    for (std::size_t j = 0; j < k && j < mp.invariant_factors.size(); ++j) modp = modp * mp.invariant_factors[j];
    const PolyModP integral = reduce_normalized(minor_gcd(jac, k), p);
    if (!(integral == modp))
      mismatch("i=" + std::to_string(i) + ": " + integral.to_string() + " vs " + modp.to_string());
  }
  return rep;
}

PropsReport check_props(const LaurentPoly& delta, std::size_t crossing_count) {
  PropsReport rep;
  const LaurentPoly c = delta.canonical();
  rep.delta_at_one = c.evaluate(1);
  rep.value_at_one = abs(rep.delta_at_one) == 1;
  rep.palindromic = c.is_palindromic();
  rep.degree_bound = static_cast<std::size_t>(c.span()) + 1 <= std::max<std::size_t>(crossing_count, 1);
  if (!c.is_monomial()) rep.enough_terms = c.term_count() >= 3;
  return rep;
}

FamilySpec family_from_tag(const FamilyTag& tag) {
  const auto need = [&](std::size_t n) {
    if (tag.params.size() != n) throw std::invalid_argument("family " + tag.kind + " expects " + std::to_string(n) + " parameters");
  };
  if (tag.kind == "twist") {
    need(2);
    return Twist{tag.params[0], tag.params[1]};
  }
  if (tag.kind == "pretzel") {
    need(3);
    return Pretzel{tag.params[0], tag.params[1], tag.params[2]};
  }
  if (tag.kind == "torus") {
    need(2);
    return Torus{tag.params[0], tag.params[1]};
  }
  throw std::invalid_argument("unknown family kind: " + tag.kind);
}

std::string family_name(const FamilySpec& f) {
  std::ostringstream os;
  if (const auto* t = std::get_if<Twist>(&f))
    os << "J(" << t->k << "," << t->l << ")";
  else if (const auto* pz = std::get_if<Pretzel>(&f))
    os << "P(" << pz->p << "," << pz->q << "," << pz->r << ")";
  else {
    const auto& tr = std::get<Torus>(f);
    os << "T(" << tr.p << "," << tr.q << ")";
  }
  return os.str();
}

namespace {

LaurentPoly twist_poly(const Twist& tw) {
  if (tw.k == 0 || tw.l == 0 || tw.l % 2 != 0) throw std::invalid_argument("twist J(k,l) needs k != 0 and nonzero even l");
  const long n = tw.l / 2;
  if (tw.k % 2 == 0) {
    const long m = tw.k / 2;
    return LaurentPoly::from_ints({n * m, 1 - 2 * m * n, n * m}).canonical();
  }
  const long m = (tw.k - 1) / 2;
  const long top = 2 * (n > 0 ? n : -n);
  const long end = n > 0 ? m : m + 1;
  std::vector<Integer> c(static_cast<std::size_t>(top) + 1);
  c.front() = end;
  c.back() = end;
  for (long j = 1; j < top; ++j) c[static_cast<std::size_t>(j)] = Integer(1 + 2 * m) * (j % 2 ? -1 : 1);
  return LaurentPoly(std::move(c)).canonical();
}

LaurentPoly pretzel_poly(const Pretzel& pz) {
  for (long v : {pz.p, pz.q, pz.r})
    if (v % 2 == 0) throw std::invalid_argument("pretzel K(p,q,r): p,q,r must be odd");
  const Integer s = Integer(pz.p) * pz.q + Integer(pz.q) * pz.r + Integer(pz.r) * pz.p;
  // (s (t-1)^2 + (t+1)^2) / 4
  std::vector<Integer> num = {s + 1, -2 * s + 2, s + 1};
  for (auto& c : num) {
    if (c % 4 != 0) throw std::domain_error("pretzel polynomial is not integral");
    c /= 4;
  }
  const LaurentPoly d(std::move(num));
  if (d.is_zero()) throw std::domain_error("pretzel polynomial vanishes");
  return d.canonical();
}

LaurentPoly torus_poly(const Torus& tr) {
  const long p = tr.p < 0 ? -tr.p : tr.p, q = tr.q < 0 ? -tr.q : tr.q;
  if (p == 0 || q == 0 || std::gcd(p, q) != 1) throw std::invalid_argument("torus T(p,q) needs coprime nonzero p, q");
  auto tn_minus_1 = [](long n) { return LaurentPoly::monomial(1, static_cast<int>(n)) - LaurentPoly(Integer(1)); };
  const LaurentPoly num = tn_minus_1(p * q) * tn_minus_1(1);
  return divide_exact(num, tn_minus_1(p) * tn_minus_1(q)).canonical();
}

}  // namespace

LaurentPoly family_poly(const FamilySpec& f) {
  return std::visit(
      [](const auto& spec) -> LaurentPoly {
        using T = std::decay_t<decltype(spec)>;
        if constexpr (std::is_same_v<T, Twist>)
          return twist_poly(spec);
        else if constexpr (std::is_same_v<T, Pretzel>)
          return pretzel_poly(spec);
        else
          return torus_poly(spec);
      },
      f);
}

FactorizationModP factor_delta_modp(const LaurentPoly& delta, std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("not prime: " + std::to_string(p));
  const PolyModP f = PolyModP::reduce(delta.canonical(), p);
  if (f.is_zero()) throw std::domain_error("Alexander polynomial vanishes mod " + std::to_string(p));
  return factor_modp(f);
}

std::string factorization_string(const LaurentPoly& delta, std::uint32_t p) {
  return render(factor_delta_modp(delta, p));
}

std::string render_modp(const LaurentPoly& delta, std::uint32_t p) {
  return "(" + factorization_string(delta, p) + ", " + std::to_string(p) + ")";
}

bool nontrivial_modp(const LaurentPoly& delta, std::uint32_t p) {
  const PolyModP f = PolyModP::reduce(delta.canonical(), p);
  return f.term_count() >= 2;
}

}  // namespace metacov
