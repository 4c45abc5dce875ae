#include "metacov/stratification.hpp"

#include <stdexcept>

namespace metacov {

namespace {

std::size_t rank_mod_p(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p, std::size_t width) {
  std::size_t rank = 0;
  for (std::size_t c = 0; c < width && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint64_t inv = inverse_mod(rows[rank][c], p);
    for (std::size_t i = rank + 1; i < rows.size(); ++i) {
      if (!rows[i][c]) continue;
      const std::uint64_t f = rows[i][c] * inv % p;
      for (std::size_t j = c; j < width; ++j)
        rows[i][j] = static_cast<std::uint32_t>((rows[i][j] + (p - f) * rows[rank][j]) % p);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

DeckMap deck_map(const SchreierSystem& sys, const AffineRep& rep) {
  const FiniteField& f = rep.field();
  DeckMap q;
  q.p = f.characteristic();
  q.d = f.degree();
  const CosetTable& tab = sys.table();
  for (const auto& [c, g] : sys.generators()) {
    const std::uint32_t next = tab.act(c, make_letter(g));
    Word loop = sys.transversal(c);
    loop.push_back(make_letter(g));
    const Word back = inverse(sys.transversal(next));
    loop.insert(loop.end(), back.begin(), back.end());
    const AffineMap img = rep.evaluate(loop);
    if (!(img.m == f.one())) throw std::logic_error("Schreier generator of Gamma_n is not sent to a translation");
    q.images.push_back(img.b.coords);
  }
  if (rank_mod_p(q.images, q.p, q.d) != q.d)
    throw std::logic_error("deck map is not onto (Z/p)^d");
  return q;
}

Matrix<CyclotomicElem> jacobian_at_character(const GroupPresentation& gamma_n, const DeckMap& q,
                                             const CharacterSpec& chi) {
  const std::uint32_t p = chi.p;
  if (chi.chi.size() != q.d || p != q.p) throw std::invalid_argument("character does not match the deck group");
  const std::size_t r = gamma_n.num_generators;
  std::vector<std::uint32_t> weight(r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < q.d; ++k) s += static_cast<std::uint64_t>(q.images[i][k]) * chi.chi[k];
    weight[i] = static_cast<std::uint32_t>(s % p);
  }
  Matrix<CyclotomicElem> m(gamma_n.relators.size(), r, CyclotomicElem(p));
  std::vector<std::vector<std::int64_t>> counts(r);
  for (std::size_t j = 0; j < gamma_n.relators.size(); ++j) {
    std::vector<std::size_t> touched;
    std::uint32_t e = 0;
    for (Letter l : gamma_n.relators[j]) {
      const std::size_t g = generator_of(l);
      if (counts[g].empty()) {
        counts[g].assign(p, 0);
        touched.push_back(g);
      }
      if (l > 0) {
        ++counts[g][e];
        e = (e + weight[g]) % p;
      } else {
        e = (e + p - weight[g]) % p;
        --counts[g][e];
      }
    }
    for (std::size_t g : touched) {
      m(j, g) = CyclotomicElem::from_exponent_counts(p, counts[g]);
      counts[g].clear();
    }
  }
  return m;
}

HironakaResult hironaka_betti(const GroupPresentation& pres, const AffineRep& rep, const LaurentPoly& delta,
                              const StratificationBudget& budget) {
  const std::uint64_t n = rep.order_alpha();
  if (n > budget.max_cyclic_degree)
    throw BudgetExceeded("cyclic degree " + std::to_string(n) + " exceeds the stratification budget");
  const std::uint32_t p = rep.p();
  const std::size_t d = rep.d();
  const std::uint64_t q = rep.field_order();
  if ((q - 1) / (p - 1) > budget.max_evaluations)
    throw BudgetExceeded("too many character orbits: " + std::to_string((q - 1) / (p - 1)));

  const std::vector<std::int64_t> a = abelianization_map(pres);
  const SchreierSystem sys(cyclic_table(a, n));
  const GroupPresentation gamma_n = rs_presentation(pres, sys);
  const DeckMap qmap = deck_map(sys, rep);

  HironakaResult out;
  out.r = gamma_n.num_generators;
  out.betti_cyclic = fox_cyclic_invariants(delta, n).betti;
  out.min_rank = out.r;
  // Galois orbit representatives: first nonzero coordinate equal to 1
  for (std::uint64_t idx = 1; idx < q; ++idx) {
    CharacterSpec chi{p, std::vector<std::uint32_t>(d)};
    std::uint64_t v = idx;
    for (std::size_t k = 0; k < d; ++k, v /= p) chi.chi[k] = static_cast<std::uint32_t>(v % p);
    std::size_t lead = 0;
    while (chi.chi[lead] == 0) ++lead;
    if (chi.chi[lead] != 1) continue;
    const std::size_t rank = rank_cyclotomic(jacobian_at_character(gamma_n, qmap, chi));
    const std::size_t corank = rank + 1 < out.r ? out.r - 1 - rank : 0;
    out.betti += (p - 1) * corank;
    out.characters += p - 1;
    ++out.evaluated;
    out.min_rank = std::min(out.min_rank, rank);
    out.max_corank = std::max(out.max_corank, corank);
  }
  if (out.characters != q - 1) throw std::logic_error("character count mismatch");
  out.betti += out.betti_cyclic;
  return out;
}

FiberedVerdict fibered_shortcut_check(std::optional<bool> fibered, std::optional<int> genus,
                                      const HironakaResult& h, std::uint64_t field_order) {
  FiberedVerdict v;
  v.applicable = fibered.value_or(false) && genus.has_value() && *genus >= 1;
  if (!v.applicable) return v;
  // twisted H1 has dimension at most 2g - 1 off the trivial character
  v.top_stratum_empty = h.max_corank + 1 <= 2 * static_cast<std::size_t>(*genus);
  v.bound = (2 * static_cast<std::int64_t>(*genus) - 1) * (static_cast<std::int64_t>(field_order) - 1) +
            static_cast<std::int64_t>(h.betti_cyclic);
  v.bound_ok = static_cast<std::int64_t>(h.betti) <= v.bound;
  return v;
}

}  // namespace metacov
