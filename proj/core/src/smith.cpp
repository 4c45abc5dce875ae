#include "metacov/smith.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

namespace metacov {

void SparseIntMatrix::add_row(const std::vector<std::pair<std::uint32_t, std::int64_t>>& entries) {
  std::map<std::uint32_t, std::int64_t> acc;
  for (auto [c, v] : entries) {
    if (c >= cols) throw std::out_of_range("sparse row column out of range");
    acc[c] += v;
  }
  SparseRow row;
  for (auto [c, v] : acc)
    if (v != 0) row.push_back({c, Integer(static_cast<long>(v))});
  rows.push_back(std::move(row));
}

std::size_t SparseIntMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.size();
  return n;
}

SparseIntMatrix SparseIntMatrix::from_dense(const Matrix<Integer>& m) {
  SparseIntMatrix s;
  s.cols = m.cols();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    SparseRow row;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) row.push_back({static_cast<std::uint32_t>(j), m(i, j)});
    s.rows.push_back(std::move(row));
  }
  return s;
}

namespace {

// Rounded quotient: w - q*v has absolute value at most |v|/2.
Integer round_quotient(const Integer& w, const Integer& v) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), w.get_mpz_t(), v.get_mpz_t());
  Integer twice = 2 * abs(r);
  if (twice > abs(v)) q += 1;
  return q;
}

class Eliminator {
 public:
  explicit Eliminator(SparseIntMatrix m)
      : rows_(std::move(m.rows)), row_alive_(rows_.size(), true), col_rows_(m.cols), col_count_(m.cols, 0) {
    for (std::uint32_t i = 0; i < rows_.size(); ++i) {
      for (auto& e : rows_[i]) {
        col_rows_[e.col].push_back(i);
        ++col_count_[e.col];
      }
      by_len_.insert({rows_[i].size(), i});
    }
  }

  Diagonalization run(std::size_t cols) {
    Diagonalization d;
    d.rows = rows_.size();
    d.cols = cols;
    unit_phase(d);
    general_phase(d);
    return d;
  }

 private:
  const Integer* find(std::uint32_t r, std::uint32_t c) const {
    const auto& row = rows_[r];
    auto it = std::lower_bound(row.begin(), row.end(), c, [](const SparseEntry& e, std::uint32_t col) { return e.col < col; });
    return (it != row.end() && it->col == c) ? &it->value : nullptr;
  }

  // rows_[s] -= f * rows_[r]
  void axpy(std::uint32_t s, const Integer& f, std::uint32_t r) {
    const auto& src = rows_[r];
    auto& dst = rows_[s];
    SparseRow out;
    out.reserve(dst.size() + src.size());
    std::size_t i = 0, j = 0;
    while (i < dst.size() || j < src.size()) {
      if (j == src.size() || (i < dst.size() && dst[i].col < src[j].col)) {
        out.push_back(std::move(dst[i++]));
      } else if (i == dst.size() || src[j].col < dst[i].col) {
        Integer v = -f * src[j].value;
        col_rows_[src[j].col].push_back(s);
        ++col_count_[src[j].col];
        out.push_back({src[j].col, std::move(v)});
        ++j;
      } else {
        Integer v = dst[i].value - f * src[j].value;
        if (v == 0)
          --col_count_[dst[i].col];
        else
          out.push_back({dst[i].col, std::move(v)});
        ++i;
        ++j;
      }
    }
    resize_row(s, std::move(out));
  }

  void resize_row(std::uint32_t s, SparseRow&& row) {
    by_len_.erase({rows_[s].size(), s});
    rows_[s] = std::move(row);
    by_len_.insert({rows_[s].size(), s});
  }

  std::vector<std::uint32_t> live_rows(std::uint32_t c) {
    std::vector<std::uint32_t> out;
    std::sort(col_rows_[c].begin(), col_rows_[c].end());
    col_rows_[c].erase(std::unique(col_rows_[c].begin(), col_rows_[c].end()), col_rows_[c].end());
    for (auto r : col_rows_[c])
      if (row_alive_[r] && find(r, c)) out.push_back(r);
    col_rows_[c] = out;
    return out;
  }

  void kill(std::uint32_t r, std::uint32_t c) {
    row_alive_[r] = false;
    by_len_.erase({rows_[r].size(), r});
    for (auto& e : rows_[r]) --col_count_[e.col];
    rows_[r].clear();
    col_rows_[c].clear();
  }

  void unit_phase(Diagonalization& d) {
    while (true) {
      std::uint32_t best_r = 0, best_c = 0;
      std::size_t best_cost = std::numeric_limits<std::size_t>::max();
      int examined = 0;
      for (auto& [len, r] : by_len_) {
        if (len == 0) continue;
        bool has_unit = false;
        for (auto& e : rows_[r]) {
          if (e.value != 1 && e.value != -1) continue;
          has_unit = true;
          const std::size_t cost = (len - 1) * (col_count_[e.col] - 1);
          if (cost < best_cost) {
            best_cost = cost;
            best_r = r;
            best_c = e.col;
          }
        }
        if (has_unit && (++examined >= 48 || best_cost == 0)) break;
      }
      if (best_cost == std::numeric_limits<std::size_t>::max()) return;
      const Integer v = *find(best_r, best_c);
      for (auto s : live_rows(best_c)) {
        if (s == best_r) continue;
        Integer f = *find(s, best_c) * v;
        axpy(s, f, best_r);
      }
      kill(best_r, best_c);
      ++d.unit_pivots;
    }
  }

  void general_phase(Diagonalization& d) {
    while (true) {
      // smallest magnitude entry, ties broken by Markowitz cost
      bool found = false;
      std::uint32_t r = 0, c = 0;
      Integer best_abs;
      std::size_t best_cost = 0;
      for (auto& [len, i] : by_len_) {
        for (auto& e : rows_[i]) {
          Integer a = abs(e.value);
          std::size_t cost = (len - 1) * (col_count_[e.col] - 1);
          if (!found || a < best_abs || (a == best_abs && cost < best_cost)) {
            found = true;
            best_abs = a;
            best_cost = cost;
            r = i;
            c = e.col;
          }
        }
      }
      if (!found) return;
      reduce_pivot(r, c);
      d.nonunit_pivots.push_back(abs(*find(r, c)));
      if (d.nonunit_pivots.back() == 1) {
        d.nonunit_pivots.pop_back();
        ++d.unit_pivots;
      }
      kill(r, c);
    }
  }

  // Euclidean reduction until (r, c) is alone in its row and column.
  void reduce_pivot(std::uint32_t& r, std::uint32_t& c) {
    while (true) {
      Integer v = *find(r, c);
      bool column_clean = true;
      for (auto s : live_rows(c)) {
        if (s == r) continue;
        Integer q = round_quotient(*find(s, c), v);
        if (q != 0) axpy(s, q, r);
        if (find(s, c)) column_clean = false;
      }
      if (!column_clean) {
        std::uint32_t next = r;
        Integer best = abs(v);
        for (auto s : live_rows(c)) {
          Integer a = abs(*find(s, c));
          if (a < best) {
            best = a;
            next = s;
          }
        }
        r = next;
        continue;
      }
      // column c now meets only row r, so column operations touch row r alone
      SparseRow row;
      std::uint32_t next_c = c;
      Integer best = abs(v);
      for (auto& e : rows_[r]) {
        if (e.col == c) {
          row.push_back(e);
          continue;
        }
        Integer u = e.value - round_quotient(e.value, v) * v;
        if (u == 0) {
          --col_count_[e.col];
          continue;
        }
        if (abs(u) < best) {
          best = abs(u);
          next_c = e.col;
        }
        row.push_back({e.col, std::move(u)});
      }
      const bool done = row.size() == 1;
      resize_row(r, std::move(row));
      if (done) return;
      c = next_c;
    }
  }

  std::vector<SparseRow> rows_;
  std::vector<bool> row_alive_;
  std::vector<std::vector<std::uint32_t>> col_rows_;
  std::vector<std::size_t> col_count_;
  std::set<std::pair<std::size_t, std::uint32_t>> by_len_;
};

}  // namespace

Diagonalization diagonalize(SparseIntMatrix m) {
  const std::size_t cols = m.cols;
  Eliminator e(std::move(m));
  return e.run(cols);
}

AbelianGroup snf_int(const SparseIntMatrix& m) {
  Diagonalization d = diagonalize(m);
  return AbelianGroup(d.cols - d.rank(), d.nonunit_pivots);
}

AbelianGroup snf_int(const Matrix<Integer>& m) { return snf_int(SparseIntMatrix::from_dense(m)); }

std::size_t rank_q(const SparseIntMatrix& m) { return diagonalize(m).rank(); }

std::vector<PolyModP> snf_poly(Matrix<PolyModP> m) {
  const std::size_t R = m.rows(), C = m.cols();
  const std::size_t n = std::min(R, C);
  std::vector<PolyModP> out;
  if (n == 0) return out;
  const std::uint32_t p = m(0, 0).modulus();
  std::size_t k = 0;
  for (; k < n; ++k) {
    while (true) {
      std::size_t bi = R, bj = C;
      for (std::size_t i = k; i < R; ++i)
        for (std::size_t j = k; j < C; ++j)
          if (!m(i, j).is_zero() && (bi == R || m(i, j).degree() < m(bi, bj).degree())) {
            bi = i;
            bj = j;
          }
      if (bi == R) goto finished;
      m.swap_rows(k, bi);
      m.swap_cols(k, bj);
      bool clean = true;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (m(i, k).is_zero()) continue;
        auto [q, rem] = divmod(m(i, k), m(k, k));
        for (std::size_t j = k; j < C; ++j) m(i, j) = m(i, j) - q * m(k, j);
        if (!rem.is_zero()) clean = false;
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (m(k, j).is_zero()) continue;
        auto [q, rem] = divmod(m(k, j), m(k, k));
        for (std::size_t i = k; i < R; ++i) m(i, j) = m(i, j) - q * m(i, k);
        if (!rem.is_zero()) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = R;
      for (std::size_t i = k + 1; i < R && bad == R; ++i)
        for (std::size_t j = k + 1; j < C; ++j)
          if (!(m(i, j) % m(k, k)).is_zero()) {
            bad = i;
            break;
          }
      if (bad == R) break;
      for (std::size_t j = k; j < C; ++j) m(k, j) = m(k, j) + m(bad, j);
    }
    out.push_back(m(k, k).monic());
  }
finished:
  while (out.size() < n) out.push_back(PolyModP(p));
  return out;
}

}  // namespace metacov
