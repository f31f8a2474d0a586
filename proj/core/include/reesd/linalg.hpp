#pragma once

#include <utility>
#include <vector>

#include "reesd/rational.hpp"

namespace reesd {

// Sparse row: (column, coefficient) pairs sorted by column, coefficients
// nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;

struct SparseMatrix {
  int ncols = 0;
  std::vector<SparseRow> rows;

  void add_row(SparseRow r);
};

// Rank over Q via fraction-free (integer, content-stripped) elimination.
long rank_of(SparseMatrix m);

// Basis of the right kernel {v : M v = 0}; dense vectors of length ncols,
// one per free column, deterministic order.
std::vector<std::vector<Rational>> kernel_basis(SparseMatrix m);

}  // namespace reesd
