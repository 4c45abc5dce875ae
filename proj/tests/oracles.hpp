#pragma once

// Slow, direct computations used to cross-check the library in tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <vector>

#include "metacov/abelian_group.hpp"
#include "metacov/integer.hpp"
#include "metacov/laurent.hpp"
#include "metacov/matrix.hpp"
#include "metacov/presentation.hpp"

namespace oracle {

using metacov::Integer;
using metacov::Matrix;
using metacov::Rational;

inline Rational det_rational(Matrix<Rational> m) {
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m(piv, k) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      m.swap_rows(piv, k);
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Rational f = m(i, k) / m(k, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return det;
}

inline Integer det_int(const Matrix<Integer>& a) {
  Matrix<Rational> m(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m(i, j) = a(i, j);
  const Rational d = det_rational(m);
  return d.get_num();
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Cokernel of an integer matrix from determinantal divisors d_k = gcd of k-minors.
inline metacov::AbelianGroup cokernel_by_minors(const Matrix<Integer>& a) {
  const std::size_t r = a.rows(), c = a.cols();
  std::vector<Integer> d{1};
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    Integer g = 0;
    for_each_subset(r, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(c, k, [&](const std::vector<std::size_t>& cols) {
        const Integer m = det_int(a.submatrix(rows, cols));
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
      });
    });
    if (g == 0) break;
    d.push_back(g);
  }
  const std::size_t rank = d.size() - 1;
  std::vector<Integer> orders;
  for (std::size_t k = 1; k <= rank; ++k) orders.push_back(d[k] / d[k - 1]);
  return metacov::AbelianGroup(c - rank, orders);
}

// Permutations of {0..k-1} as image vectors.
inline std::vector<std::vector<int>> all_permutations(int k) {
  std::vector<int> p(k);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline int apply_word(const std::vector<const std::vector<int>*>& img, const std::vector<std::vector<int>>& inv,
                      const metacov::Word& w, int x) {
  for (metacov::Letter l : w) {
    const std::size_t g = metacov::generator_of(l);
    x = l > 0 ? (*img[g])[x] : inv[g][x];
  }
  return x;
}

// Number of homomorphisms G -> S_k with transitive image, by exhaustive search.
inline std::uint64_t transitive_hom_count(const metacov::GroupPresentation& pres, int k) {
  const auto perms = all_permutations(k);
  const std::size_t r = pres.num_generators;
  std::vector<std::size_t> choice(r, 0);
  std::vector<const std::vector<int>*> img(r);
  std::vector<std::vector<int>> inv(r, std::vector<int>(k));
  std::uint64_t count = 0;
  while (true) {
    for (std::size_t g = 0; g < r; ++g) {
      img[g] = &perms[choice[g]];
      for (int x = 0; x < k; ++x) inv[g][(*img[g])[x]] = x;
    }
    bool hom = true;
    for (const auto& w : pres.relators) {
      for (int x = 0; x < k && hom; ++x)
        if (apply_word(img, inv, w, x) != x) hom = false;
      if (!hom) break;
    }
    if (hom) {
      std::vector<bool> seen(k, false);
      std::vector<int> stack{0};
      seen[0] = true;
      while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (std::size_t g = 0; g < r; ++g)
          for (int y : {(*img[g])[x], inv[g][x]})
            if (!seen[y]) {
              seen[y] = true;
              stack.push_back(y);
            }
      }
      if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) ++count;
    }
    std::size_t g = 0;
    while (g < r && ++choice[g] == perms.size()) choice[g++] = 0;
    if (g == r) break;
  }
  return count;
}

// Sylvester matrix determinant of two ordinary integer polynomials.
inline Integer sylvester_resultant(const metacov::LaurentPoly& f, const metacov::LaurentPoly& g) {
  const int m = f.high_degree(), n = g.high_degree();
  const std::size_t N = static_cast<std::size_t>(m + n);
  Matrix<Rational> s(N, N, Rational(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j) s(i, i + j) = f.coefficient(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j) s(n + i, i + j) = g.coefficient(n - j);
  return det_rational(s).get_num();
}

}  // namespace oracle
