#pragma once

#include <cstdint>
#include <vector>

#include "metacov/abelian_group.hpp"
#include "metacov/integer.hpp"
#include "metacov/matrix.hpp"
#include "metacov/poly_modp.hpp"

namespace metacov {

struct SparseEntry {
  std::uint32_t col;
  Integer value;
};
using SparseRow = std::vector<SparseEntry>;  // strictly increasing columns, no zeros

struct SparseIntMatrix {
  std::size_t cols = 0;
  std::vector<SparseRow> rows;

  // Adds a row given as unsorted (column, value) pairs; repeated columns are summed.
  void add_row(const std::vector<std::pair<std::uint32_t, std::int64_t>>& entries);
  std::size_t nonzeros() const;
  static SparseIntMatrix from_dense(const Matrix<Integer>& m);
};

struct Diagonalization {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t unit_pivots = 0;
  std::vector<Integer> nonunit_pivots;  // absolute values, not yet a divisibility chain
  std::size_t rank() const { return unit_pivots + nonunit_pivots.size(); }
};

// Equivalence to diagonal form by unimodular row and column operations.
Diagonalization diagonalize(SparseIntMatrix m);

// Cokernel Z^cols / rowspace.
AbelianGroup snf_int(const SparseIntMatrix& m);
AbelianGroup snf_int(const Matrix<Integer>& m);
std::size_t rank_q(const SparseIntMatrix& m);

// Invariant factors over F_p[t]: min(rows, cols) entries, monic, each dividing
// the next; zero polynomials at the end account for rank deficiency.
std::vector<PolyModP> snf_poly(Matrix<PolyModP> m);

}  // namespace metacov
