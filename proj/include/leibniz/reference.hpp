#pragma once

// Serial dense Gauss-Jordan elimination over Q. Slow and simple; kept as the
// independent route that the blocked sparse kernels are tested against.

#include <cstddef>
#include <vector>

#include "leibniz/sparse.hpp"

namespace leibniz::reference {

using DenseMatrix = std::vector<std::vector<Rational>>;

DenseMatrix to_dense(const SparseMatrix& m);

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(DenseMatrix& a);

std::size_t rank(const SparseMatrix& m);

/// Null-space basis with one vector per free column (value 1 there).
std::vector<std::vector<Rational>> kernel(const SparseMatrix& m);

}  // namespace leibniz::reference
