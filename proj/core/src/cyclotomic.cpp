#include "metacov/cyclotomic.hpp"

#include <limits>
#include <map>
#include <stdexcept>

namespace metacov {

CyclotomicElem::CyclotomicElem(std::uint32_t p) : p_(p), c_(p - 1) {
  if (p < 2) throw std::invalid_argument("cyclotomic prime must be >= 2");
}

CyclotomicElem::CyclotomicElem(std::uint32_t p, std::vector<Rational> coords) : p_(p), c_(std::move(coords)) {
  if (c_.size() != p - 1) throw std::invalid_argument("cyclotomic element needs p-1 coordinates");
}

CyclotomicElem CyclotomicElem::from_cyclic(std::uint32_t p, std::vector<Rational> cyc) {
  CyclotomicElem r(p);
  const Rational top = cyc[p - 1];
  for (std::uint32_t i = 0; i + 1 < p; ++i) r.c_[i] = cyc[i] - top;
  return r;
}

CyclotomicElem CyclotomicElem::zeta_power(std::uint32_t p, std::int64_t k) {
  std::vector<Rational> cyc(p);
  std::int64_t e = k % static_cast<std::int64_t>(p);
  if (e < 0) e += p;
  cyc[static_cast<std::size_t>(e)] = 1;
  return from_cyclic(p, std::move(cyc));
}

CyclotomicElem CyclotomicElem::from_int(std::uint32_t p, std::int64_t v) {
  CyclotomicElem r(p);
  r.c_[0] = static_cast<long>(v);
  return r;
}

CyclotomicElem CyclotomicElem::from_exponent_counts(std::uint32_t p, const std::vector<std::int64_t>& counts) {
  if (counts.size() != p) throw std::invalid_argument("exponent counts must have length p");
  std::vector<Rational> cyc(p);
  for (std::uint32_t i = 0; i < p; ++i) cyc[i] = static_cast<long>(counts[i]);
  return from_cyclic(p, std::move(cyc));
}

bool CyclotomicElem::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

std::size_t CyclotomicElem::support() const {
  std::size_t n = 0;
  for (const auto& x : c_)
    if (x != 0) ++n;
  return n;
}

void CyclotomicElem::check(const CyclotomicElem& o) const {
  if (p_ != o.p_) throw std::invalid_argument("cyclotomic elements over different primes");
}

CyclotomicElem CyclotomicElem::operator+(const CyclotomicElem& o) const {
  check(o);
  CyclotomicElem r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] += o.c_[i];
  return r;
}

CyclotomicElem CyclotomicElem::operator-(const CyclotomicElem& o) const {
  check(o);
  CyclotomicElem r = *this;
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] -= o.c_[i];
  return r;
}

CyclotomicElem CyclotomicElem::operator-() const {
  CyclotomicElem r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

CyclotomicElem CyclotomicElem::operator*(const CyclotomicElem& o) const {
  check(o);
  std::vector<Rational> cyc(p_);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) {
    if (c_[i] == 0) continue;
    for (std::uint32_t j = 0; j + 1 < p_; ++j) {
      if (o.c_[j] == 0) continue;
      cyc[(i + j) % p_] += c_[i] * o.c_[j];
    }
  }
  return from_cyclic(p_, std::move(cyc));
}

CyclotomicElem CyclotomicElem::galois(std::uint32_t k) const {
  if (k % p_ == 0) throw std::invalid_argument("galois exponent must be prime to p");
  std::vector<Rational> cyc(p_);
  for (std::uint32_t i = 0; i + 1 < p_; ++i) cyc[static_cast<std::uint64_t>(i) * k % p_] = c_[i];
  return from_cyclic(p_, std::move(cyc));
}

CyclotomicElem CyclotomicElem::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero in Q(zeta)");
  // conjugate product over the nontrivial Galois automorphisms; a * conj is the norm
  CyclotomicElem conj = from_int(p_, 1);
  for (std::uint32_t k = 2; k < p_; ++k) conj = conj * galois(k);
  CyclotomicElem norm = *this * conj;
  const Rational n = norm.c_[0];
  for (std::size_t i = 1; i < norm.c_.size(); ++i)
    if (norm.c_[i] != 0) throw std::logic_error("norm is not rational");
  for (auto& x : conj.c_) x /= n;
  return conj;
}

std::size_t rank_cyclotomic(const Matrix<CyclotomicElem>& m) {
  if (m.empty()) return 0;
  const std::uint32_t p = m(0, 0).prime();
  using Row = std::map<std::size_t, CyclotomicElem>;
  std::vector<Row> rows(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& e = m(i, j);
      if (e.prime() != p) throw std::invalid_argument("rank_cyclotomic: mixed primes across entries");
      if (!e.is_zero()) rows[i].emplace(j, e);
    }
  std::vector<bool> alive(rows.size(), true);
  std::size_t rank = 0;
  while (true) {
    std::vector<std::size_t> col_count(m.cols(), 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (alive[i])
        for (auto& [j, e] : rows[i]) ++col_count[j];
    std::size_t best_row = rows.size(), best_col = 0;
    std::size_t best_cost = std::numeric_limits<std::size_t>::max(), best_support = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive[i]) continue;
      for (auto& [j, e] : rows[i]) {
        const std::size_t cost = (rows[i].size() - 1) * (col_count[j] - 1);
        const std::size_t sup = e.support();
        if (cost < best_cost || (cost == best_cost && sup < best_support)) {
          best_cost = cost;
          best_support = sup;
          best_row = i;
          best_col = j;
        }
      }
    }
    if (best_row == rows.size()) break;
    ++rank;
    alive[best_row] = false;
    const Row& piv = rows[best_row];
    const CyclotomicElem inv = piv.at(best_col).inverse();
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (!alive[i]) continue;
      auto hit = rows[i].find(best_col);
      if (hit == rows[i].end()) continue;
      const CyclotomicElem factor = hit->second * inv;
      for (auto& [j, e] : piv) {
        CyclotomicElem v = rows[i].count(j) ? rows[i][j] - factor * e : -(factor * e);
        if (v.is_zero())
          rows[i].erase(j);
        else
          rows[i][j] = std::move(v);
      }
    }
  }
  return rank;
}

}  // namespace metacov
