#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "leibniz/sparse.hpp"

namespace leibniz {

/// Incremental reduced row echelon form over the rationals. Every pivot row
/// has a 1 in its pivot column and zeros in all other pivot columns, and
/// remembers which combination of the inserted vectors produced it.
class Echelon {
 public:
  explicit Echelon(std::size_t dim = 0, bool track_combinations = true)
      : dim_(dim), track_(track_combinations), pivot_row_(dim, npos) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rows_.size(); }
  std::size_t inserted() const { return inserted_; }

  /// Inserts v and returns true when it was independent of what came before.
  /// Either way v is counted as an inserted vector for combination tracking.
  bool insert(const SparseVector& v);

  /// Coefficients c with v = sum_i c_i * inserted_i, when v lies in the span.
  /// Only independent insertions carry nonzero coefficients. Requires
  /// combination tracking.
  std::optional<std::vector<Rational>> solve(const SparseVector& v) const;

  /// Residual of v after reducing against every pivot row.
  SparseVector reduce(const SparseVector& v) const;

  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivot_columns() const { return pivots_; }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t dim_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<SparseVector> rows_;
  std::vector<SparseVector> combos_;  // over inserted-vector indices
  std::vector<std::size_t> pivots_;
  std::vector<std::size_t> pivot_row_;
};

/// Linearly independent family of vectors spanning a subspace of Q^n.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient_dim = 0);

  /// Throws std::invalid_argument if the vectors are dependent or have the
  /// wrong length.
  static Subspace from_basis(std::size_t ambient_dim, std::vector<SparseVector> basis);
  /// Greedily keeps the vectors that are independent of the earlier ones.
  static Subspace span_of(std::size_t ambient_dim, const std::vector<SparseVector>& vectors);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_dim_; }
  std::size_t dim() const { return basis_.size(); }
  const std::vector<SparseVector>& basis() const { return basis_; }

  /// Coefficients of v in basis(); nullopt when v is outside the span.
  /// Throws std::invalid_argument on a length mismatch.
  std::optional<std::vector<Rational>> coordinates(const SparseVector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  /// Basis vectors as the columns of an ambient_dim x dim matrix.
  SparseMatrix as_matrix() const;

 private:
  std::size_t ambient_dim_;
  std::vector<SparseVector> basis_;
  Echelon echelon_;
};

/// Exact rank over Q. The matrix is split into the connected components of
/// its row/column incidence graph and each block is eliminated
/// fraction-free over the integers; blocks run in parallel.
std::size_t rank(const SparseMatrix& m);

/// Basis of the right null space, ordered by free column.
Subspace kernel_basis(const SparseMatrix& m);

/// Basis of the column space, chosen greedily from the columns in order.
Subspace image_basis(const SparseMatrix& m);

std::optional<std::vector<Rational>> in_span(const Subspace& s, const SparseVector& v);

/// Fixed complement of `boundaries` inside `cycles`: the boundary basis is
/// extended by the cycle basis vectors, in order, that are independent of
/// everything chosen so far. Coordinates are read off that complement.
class Quotient {
 public:
  Quotient(const Subspace& cycles, const Subspace& boundaries);

  std::size_t dim() const { return complement_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }
  const std::vector<SparseVector>& complement() const { return complement_; }
  const Subspace& cycles() const { return cycles_; }
  const Subspace& boundaries() const { return boundaries_; }

  /// Throws std::invalid_argument if v is not in the cycle space.
  std::vector<Rational> coordinates(const SparseVector& v) const;
  bool is_boundary(const SparseVector& v) const { return boundaries_.contains(v); }

 private:
  std::size_t ambient_dim_;
  Subspace cycles_;
  Subspace boundaries_;
  std::vector<SparseVector> complement_;
  std::vector<std::size_t> slots_;  // insertion index of each complement vector
  Echelon combined_;                // boundary basis first, then cycle basis
};

std::vector<Rational> quotient_coordinates(const Subspace& cycles, const Subspace& boundaries,
                                           const SparseVector& v);

/// Connected components of the bipartite row/column graph of m. Each
/// component lists its rows and columns in increasing order; empty rows and
/// columns form singleton components.
struct Block {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};
std::vector<Block> connected_blocks(const SparseMatrix& m);

}  // namespace leibniz
