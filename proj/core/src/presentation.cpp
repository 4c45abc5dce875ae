#include "metacov/presentation.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "metacov/smith.hpp"

namespace metacov {

Word inverse(const Word& w) {
  Word r(w.rbegin(), w.rend());
  for (auto& l : r) l = -l;
  return r;
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (Letter l : w) {
    if (!out.empty() && out.back() == -l)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

Word concat(const Word& a, const Word& b) {
  Word r = a;
  r.insert(r.end(), b.begin(), b.end());
  return free_reduce(r);
}

std::string word_to_string(const Word& w) {
  if (w.empty()) return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out << ' ';
    out << 'x' << generator_of(w[i]) + 1;
    if (w[i] < 0) out << "^-1";
  }
  return out.str();
}

void GroupPresentation::validate() const {
  auto check = [this](const Word& w, const char* what) {
    for (Letter l : w)
      if (l == 0 || generator_of(l) >= num_generators)
        throw std::invalid_argument(std::string(what) + " uses a generator index out of range");
  };
  for (const auto& r : relators) check(r, "relator");
  if (longitude) check(*longitude, "longitude");
  if (num_generators > 0 && meridian_index >= num_generators) throw std::invalid_argument("meridian index out of range");
}

std::vector<std::vector<std::int64_t>> exponent_matrix(const GroupPresentation& pres) {
  std::vector<std::vector<std::int64_t>> m(pres.relators.size(), std::vector<std::int64_t>(pres.num_generators, 0));
  for (std::size_t i = 0; i < pres.relators.size(); ++i)
    for (Letter l : pres.relators[i]) m[i][generator_of(l)] += l > 0 ? 1 : -1;
  return m;
}

AbelianGroup abelianization(const GroupPresentation& pres) {
  SparseIntMatrix s;
  s.cols = pres.num_generators;
  for (const auto& row : exponent_matrix(pres)) {
    std::vector<std::pair<std::uint32_t, std::int64_t>> e;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j]) e.emplace_back(static_cast<std::uint32_t>(j), row[j]);
    s.add_row(e);
  }
  return snf_int(s);
}

std::vector<std::int64_t> abelianization_map(const GroupPresentation& pres) {
  pres.validate();
  const AbelianGroup h1 = abelianization(pres);
  if (h1.free_rank() != 1 || !h1.is_torsion_free())
    throw std::domain_error("abelianization " + h1.to_string() + " is not infinite cyclic");
  const std::size_t r = pres.num_generators;
  // one-dimensional rational kernel of the exponent matrix
  std::vector<std::vector<Rational>> m;
  for (const auto& row : exponent_matrix(pres)) {
    std::vector<Rational> q(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) q[j] = static_cast<long>(row[j]);
    m.push_back(std::move(q));
  }
  std::vector<std::size_t> pivot_col;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < r && rank < m.size(); ++c) {
    std::size_t piv = rank;
    while (piv < m.size() && m[piv][c] == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[rank]);
    Rational inv = 1 / m[rank][c];
    for (auto& x : m[rank]) x *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == rank || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < r; ++j) m[i][j] -= f * m[rank][j];
    }
    pivot_col.push_back(c);
    ++rank;
  }
  std::vector<bool> is_pivot(r, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::size_t free_col = r;
  for (std::size_t c = 0; c < r; ++c)
    if (!is_pivot[c]) {
      free_col = c;
      break;
    }
  if (free_col == r) throw std::logic_error("exponent matrix has trivial kernel");
  std::vector<Rational> v(r, 0);
  v[free_col] = 1;
  for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -m[i][free_col];
  Integer den = 1;
  for (auto& x : v) den = lcm(den, Integer(x.get_den()));
  std::vector<Integer> iv(r);
  Integer g = 0;
  for (std::size_t j = 0; j < r; ++j) {
    iv[j] = v[j].get_num() * (den / v[j].get_den());
    g = gcd(g, iv[j]);
  }
  std::vector<std::int64_t> out(r);
  for (std::size_t j = 0; j < r; ++j) out[j] = to_int64(iv[j] / g);
  if (out[pres.meridian_index] < 0)
    for (auto& x : out) x = -x;
  if (out[pres.meridian_index] != 1) throw std::domain_error("meridian does not generate the abelianization");
  return out;
}

std::int64_t exponent_sum(const Word& w, const std::vector<std::int64_t>& images) {
  std::int64_t s = 0;
  for (Letter l : w) s += l > 0 ? images[generator_of(l)] : -images[generator_of(l)];
  return s;
}

}  // namespace metacov
