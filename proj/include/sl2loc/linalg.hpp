#pragma once

#include <vector>

#include "sl2loc/rational.hpp"

#include <map>

namespace sl2loc::linalg {

using Row = std::vector<Rational>;
using Matrix = std::vector<Row>;

/// Reduced row echelon form in place; returns the rank.
long rref(Matrix& m);

long rank(Matrix m);

/// Basis of the right kernel {v : m v = 0} of an (n x ncols) matrix.
std::vector<Row> kernel_basis(const Matrix& m, size_t ncols);

// Sparse variants for the banded systems the module solves produce.

using SparseRow = std::map<size_t, Rational>;  // column -> nonzero entry

/// Right kernel of a sparse matrix with the given column count.
std::vector<SparseRow> sparse_kernel_basis(const std::vector<SparseRow>& rows,
                                           size_t ncols);

long sparse_rank(const std::vector<SparseRow>& rows);

/// Incremental echelon span over sparse rows keyed by arbitrary long
/// indices; used for generated-subspace closures.
class SparseSpan {
 public:
  using Vec = std::map<long, Rational>;

  /// Reduces v against the span; inserts the residue if nonzero.
  /// Returns true when v enlarged the span.
  bool insert(Vec v);

  size_t dimension() const { return rows_.size(); }

  /// Fully reduced (RREF) basis, ascending pivot order.
  std::vector<Vec> reduced_basis() const;

 private:
  std::map<long, Vec> rows_;  // pivot index -> row with leading 1
};

}  // namespace sl2loc::linalg
