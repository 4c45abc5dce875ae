#include "metacov/covers.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <numeric>

namespace metacov {

CosetTable::CosetTable(std::vector<std::vector<std::uint32_t>> forward) : forward_(std::move(forward)) {
  degree_ = forward_.empty() ? 1 : forward_.front().size();
  backward_.resize(forward_.size());
  for (std::size_t g = 0; g < forward_.size(); ++g) {
    if (forward_[g].size() != degree_) throw std::invalid_argument("coset table rows differ in length");
    backward_[g].assign(degree_, static_cast<std::uint32_t>(degree_));
    for (std::uint32_t c = 0; c < degree_; ++c) {
      const std::uint32_t img = forward_[g][c];
      if (img >= degree_ || backward_[g][img] != degree_)
        throw std::invalid_argument("generator " + std::to_string(g + 1) + " does not act as a permutation");
      backward_[g][img] = c;
    }
  }
}

std::uint32_t CosetTable::act(std::uint32_t coset, const Word& w) const {
  for (Letter l : w) coset = act(coset, l);
  return coset;
}

bool CosetTable::is_transitive() const {
  std::vector<bool> seen(degree_, false);
  std::deque<std::uint32_t> queue{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!queue.empty()) {
    const std::uint32_t c = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < forward_.size(); ++g)
      for (std::uint32_t next : {forward_[g][c], backward_[g][c]})
        if (!seen[next]) {
          seen[next] = true;
          ++count;
          queue.push_back(next);
        }
  }
  return count == degree_;
}

bool CosetTable::relators_closed(const GroupPresentation& pres) const {
  for (const Word& w : pres.relators)
    for (std::uint32_t c = 0; c < degree_; ++c)
      if (act(c, w) != c) return false;
  return true;
}

std::vector<std::vector<std::uint32_t>> CosetTable::orbits(const std::vector<Word>& words) const {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<bool> seen(degree_, false);
  for (std::uint32_t start = 0; start < degree_; ++start) {
    if (seen[start]) continue;
    std::vector<std::uint32_t> orbit{start};
    seen[start] = true;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (const Word& w : words)
        for (std::uint32_t next : {act(orbit[i], w), act(orbit[i], inverse(w))})
          if (!seen[next]) {
            seen[next] = true;
            orbit.push_back(next);
          }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

CosetTable kernel_table(const AffineRep& rep) {
  const FiniteField& f = rep.field();
  const std::uint64_t n = rep.order_alpha(), q = f.order();
  if (n * q > std::numeric_limits<std::uint32_t>::max()) throw std::overflow_error("kernel cover degree too large");
  std::vector<FieldElem> powers{f.one()};
  for (std::uint64_t k = 1; k < n; ++k) powers.push_back(f.mul(powers.back(), rep.alpha()));

  // element (alpha^k, b) has index k*q + index(b); right multiplication by (alpha^a, y)
  // sends it to (alpha^(k+a), alpha^k y + b)
  std::vector<std::vector<std::uint32_t>> forward(rep.num_generators(), std::vector<std::uint32_t>(n * q));
  for (std::size_t g = 0; g < rep.num_generators(); ++g) {
    const std::int64_t a = rep.exponents()[g];
    const std::uint64_t shift = static_cast<std::uint64_t>(((a % static_cast<std::int64_t>(n)) + static_cast<std::int64_t>(n)) % static_cast<std::int64_t>(n));
    for (std::uint64_t k = 0; k < n; ++k) {
      const std::uint64_t ty = f.index(f.mul(powers[k], rep.translations()[g]));
      const std::uint64_t k2 = (k + shift) % n;
      for (std::uint64_t b = 0; b < q; ++b)
        forward[g][k * q + b] = static_cast<std::uint32_t>(k2 * q + f.add_index(ty, b));
    }
  }
  return CosetTable(std::move(forward));
}

CosetTable preimage_table(const AffineRep& rep) {
  const FiniteField& f = rep.field();
  const std::uint64_t q = f.order();
  std::vector<std::vector<std::uint32_t>> forward(rep.num_generators(), std::vector<std::uint32_t>(q));
  for (std::size_t g = 0; g < rep.num_generators(); ++g) {
    const AffineMap inv = rep.image(make_letter(g, true));
    for (std::uint64_t z = 0; z < q; ++z) {
      const FieldElem img = f.add(f.mul(inv.m, f.element(z)), inv.b);
      forward[g][z] = static_cast<std::uint32_t>(f.index(img));
    }
  }
  return CosetTable(std::move(forward));
}

CosetTable cyclic_table(const std::vector<std::int64_t>& exponents, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic cover degree must be positive");
  const auto sn = static_cast<std::int64_t>(n);
  std::vector<std::vector<std::uint32_t>> forward(exponents.size(), std::vector<std::uint32_t>(n));
  for (std::size_t g = 0; g < exponents.size(); ++g)
    for (std::int64_t c = 0; c < sn; ++c) forward[g][c] = static_cast<std::uint32_t>((((c + exponents[g]) % sn) + sn) % sn);
  return CosetTable(std::move(forward));
}

SchreierSystem::SchreierSystem(const CosetTable& table) : table_(table) {
  const std::size_t N = table.degree(), r = table.num_generators();
  transversal_.assign(N, Word{});
  index_.assign(N, std::vector<std::int64_t>(r, -1));
  std::vector<bool> reached(N, false);
  // tree edges are recorded as (coset, letter) with the letter possibly inverted
  std::vector<std::vector<bool>> tree(N, std::vector<bool>(r, false));
  std::deque<std::uint32_t> queue{0};
  reached[0] = true;
  while (!queue.empty()) {
    const std::uint32_t c = queue.front();
    queue.pop_front();
    for (std::size_t g = 0; g < r; ++g) {
      for (bool inv : {false, true}) {
        const Letter l = make_letter(g, inv);
        const std::uint32_t next = table.act(c, l);
        if (reached[next]) continue;
        reached[next] = true;
        transversal_[next] = transversal_[c];
        transversal_[next].push_back(l);
        if (inv)
          tree[next][g] = true;
        else
          tree[c][g] = true;
        queue.push_back(next);
      }
    }
  }
  if (std::find(reached.begin(), reached.end(), false) != reached.end())
    throw std::logic_error("coset table is not transitive");
  for (std::uint32_t c = 0; c < N; ++c)
    for (std::uint32_t g = 0; g < r; ++g)
      if (!tree[c][g]) {
        index_[c][g] = static_cast<std::int64_t>(generators_.size());
        generators_.emplace_back(c, g);
      }
}

Word SchreierSystem::rewrite(std::uint32_t coset, const Word& w) const {
  Word out;
  for (Letter l : w) {
    const std::size_t g = generator_of(l);
    if (l > 0) {
      if (index_[coset][g] >= 0) out.push_back(make_letter(static_cast<std::size_t>(index_[coset][g])));
      coset = table_.act(coset, l);
    } else {
      coset = table_.act(coset, l);
      if (index_[coset][g] >= 0) out.push_back(make_letter(static_cast<std::size_t>(index_[coset][g]), true));
    }
  }
  return out;
}

std::vector<std::pair<std::uint32_t, std::int64_t>> SchreierSystem::rewrite_abelian(std::uint32_t coset,
                                                                                   const Word& w) const {
  std::vector<std::pair<std::uint32_t, std::int64_t>> out;
  for (Letter l : rewrite(coset, w)) out.emplace_back(static_cast<std::uint32_t>(generator_of(l)), l > 0 ? 1 : -1);
  return out;
}

GroupPresentation rs_presentation(const GroupPresentation& pres, const SchreierSystem& sys) {
  GroupPresentation out;
  out.num_generators = sys.num_generators();
  const CosetTable& tab = sys.table();
  for (std::uint32_t c = 0; c < tab.degree(); ++c)
    for (const Word& w : pres.relators) {
      if (tab.act(c, w) != c) throw std::logic_error("relator does not close up on the coset table");
      out.relators.push_back(sys.rewrite(c, w));
    }
  const Word mu{make_letter(pres.meridian_index)};
  Word mu_power;
  std::uint32_t c = 0;
  do {
    mu_power.push_back(mu.front());
    c = tab.act(c, mu.front());
  } while (c != 0);
  const Word lifted = sys.rewrite(0, mu_power);
  out.meridian_index = lifted.size() == 1 ? generator_of(lifted.front()) : 0;
  if (pres.longitude && tab.act(0, *pres.longitude) == 0) out.longitude = sys.rewrite(0, *pres.longitude);
  if (pres.num_generators == pres.relators.size() + 1 &&
      out.num_generators != out.relators.size() + 1)
    throw std::logic_error("Reidemeister-Schreier output lost deficiency one");
  return out;
}

std::string to_string(CoverKind k) {
  switch (k) {
    case CoverKind::kernel:
      return "kernel";
    case CoverKind::preimage:
      return "preimage_alpha";
    case CoverKind::cyclic:
      return "cyclic";
  }
  return "?";
}

std::size_t boundary_components(const GroupPresentation& pres, const CosetTable& table) {
  std::vector<Word> peripheral{Word{make_letter(pres.meridian_index)}};
  if (pres.longitude) peripheral.push_back(*pres.longitude);
  return table.orbits(peripheral).size();
}

CoverHomology cover_homology(const GroupPresentation& pres, const CosetTable& table, CoverKind kind,
                             const Budget& budget, bool with_peripheral) {
  const std::size_t N = table.degree();
  if (N > budget.max_degree)
    throw BudgetExceeded("degree " + std::to_string(N) + " exceeds budget " + std::to_string(budget.max_degree));
  std::size_t letters = 0;
  for (const Word& w : pres.relators) letters += w.size();
  if (N * letters > budget.max_entries)
    throw BudgetExceeded("presentation size " + std::to_string(N * letters) + " exceeds budget");

  const SchreierSystem sys(table);
  CoverHomology out;
  out.kind = kind;
  out.degree = N;
  out.rs_generators = sys.num_generators();

  SparseIntMatrix rel;
  rel.cols = sys.num_generators();
  for (std::uint32_t c = 0; c < N; ++c)
    for (const Word& w : pres.relators) {
      if (table.act(c, w) != c) throw std::logic_error("relator does not close up on the coset table");
      rel.add_row(sys.rewrite_abelian(c, w));
    }
  out.rs_relators = rel.rows.size();
  if (pres.num_generators == pres.relators.size() + 1 && out.rs_generators != out.rs_relators + 1)
    throw std::logic_error("Reidemeister-Schreier output lost deficiency one");

  out.h1 = snf_int(rel);
  out.boundary_components = boundary_components(pres, table);
  if (!with_peripheral || !pres.longitude) return out;

  // For each boundary torus: the meridian loop and a longitude loop corrected
  // by a meridian power so that it closes up.
  const Letter mu = make_letter(pres.meridian_index);
  const Word& lambda = *pres.longitude;
  SparseIntMatrix both = rel;
  for (const auto& orbit : table.orbits({Word{mu}, lambda})) {
    const std::uint32_t c = orbit.front();
    std::map<std::uint32_t, std::size_t> cycle_pos;
    std::uint32_t x = c;
    do {
      cycle_pos[x] = cycle_pos.size();
      x = table.act(x, mu);
    } while (x != c);
    const std::size_t m = cycle_pos.size();
    both.add_row(sys.rewrite_abelian(c, Word(m, mu)));

    Word loop;
    std::uint32_t y = c;
    do {
      loop.insert(loop.end(), lambda.begin(), lambda.end());
      y = table.act(y, lambda);
    } while (!cycle_pos.count(y));
    const std::size_t j = cycle_pos[y];
    for (std::size_t k = 0; k < j; ++k) loop.push_back(-mu);
    both.add_row(sys.rewrite_abelian(c, loop));
  }
  const std::size_t rank_rel = rel.cols - out.h1.free_rank();
  out.peripheral_rank = rank_q(both) - rank_rel;
  out.nonperipheral_rank = out.h1.free_rank() - out.peripheral_rank;
  out.peripheral_computed = true;
  return out;
}

CyclicInvariants fox_cyclic_invariants(const LaurentPoly& delta, std::size_t n) {
  if (n == 0) throw std::invalid_argument("cyclic cover degree must be positive");
  const LaurentPoly d = delta.canonical();
  const LaurentPoly tn = LaurentPoly::monomial(1, static_cast<int>(n)) - LaurentPoly(Integer(1));
  const LaurentPoly g = gcd_rational(d, tn);
  CyclicInvariants out;
  out.betti = 1 + static_cast<std::size_t>(g.span());
  // Z[t]/(g a, g h) is an extension of the free group Z[t]/(g) by Z[t]/(a, h)
  const LaurentPoly h = divide_exact(tn, g).canonical();
  const LaurentPoly a = divide_exact(d, g).canonical();
  out.torsion_order = abs(resultant(h, a));
  if (out.torsion_order == 0) throw std::logic_error("cyclic torsion resultant vanished");
  return out;
}

Theorem3Verdict check_theorem3(std::size_t beta, std::size_t beta_cyclic, std::uint64_t field_order,
                               std::uint64_t n, std::size_t crossing_count, std::size_t cyclic_rs_generators) {
  Theorem3Verdict v;
  v.beta = static_cast<std::int64_t>(beta);
  v.beta_cyclic = static_cast<std::int64_t>(beta_cyclic);
  const auto q1 = static_cast<std::int64_t>(field_order) - 1;
  v.lower = q1 + v.beta_cyclic;
  v.upper = static_cast<std::int64_t>(n) * (static_cast<std::int64_t>(crossing_count) - 1) * q1 + v.beta_cyclic;
  v.upper_r = (static_cast<std::int64_t>(cyclic_rs_generators) - 1) * q1 + v.beta_cyclic;
  v.lower_ok = v.lower <= v.beta;
  v.upper_ok = v.beta <= v.upper;
  v.upper_r_ok = v.beta <= v.upper_r;
  return v;
}

std::string to_string(TorsionVerdict v) {
  switch (v) {
    case TorsionVerdict::holds:
      return "holds";
    case TorsionVerdict::fails:
      return "fails";
    case TorsionVerdict::both_free:
      return "both-free";
  }
  return "?";
}

TorsionVerdict torsion_ratio_check(const AbelianGroup& kernel_h1, const AbelianGroup& cyclic_h1,
                                   std::uint64_t field_order) {
  if (kernel_h1.is_torsion_free() && cyclic_h1.is_torsion_free()) return TorsionVerdict::both_free;
  const Integer lhs = kernel_h1.torsion_order() * static_cast<unsigned long>(field_order);
  return lhs == cyclic_h1.torsion_order() ? TorsionVerdict::holds : TorsionVerdict::fails;
}

}  // namespace metacov
