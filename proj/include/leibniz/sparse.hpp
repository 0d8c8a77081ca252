#pragma once

#include <cstddef>
#include <span>
#include <tuple>
#include <utility>
#include <vector>

#include "leibniz/rational.hpp"

namespace leibniz {

struct Entry {
  std::size_t index;
  Rational value;

  friend bool operator==(const Entry& a, const Entry& b) {
    return a.index == b.index && a.value == b.value;
  }
};

/// Sparse rational vector: entries sorted by index, no stored zeros.
class SparseVector {
 public:
  SparseVector() = default;
  explicit SparseVector(std::size_t dim) : dim_(dim) {}

  /// Accepts entries in any order, possibly repeated or zero; they are summed
  /// and zeros dropped. Throws std::out_of_range for an index >= dim.
  static SparseVector from_entries(std::size_t dim, std::vector<Entry> entries);
  static SparseVector from_dense(std::span<const Rational> values);
  static SparseVector unit(std::size_t dim, std::size_t index, Rational value = Rational(1));

  std::size_t dim() const { return dim_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }
  const std::vector<Entry>& entries() const { return entries_; }

  Rational operator[](std::size_t index) const;
  std::vector<Rational> to_dense() const;

  /// this += factor * other
  void add_scaled(const SparseVector& other, const Rational& factor);
  SparseVector scaled(const Rational& factor) const;

  friend SparseVector operator+(const SparseVector& a, const SparseVector& b);
  friend SparseVector operator-(const SparseVector& a, const SparseVector& b);
  friend bool operator==(const SparseVector& a, const SparseVector& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<Entry> entries_;
};

/// Sparse rational matrix stored by columns; column j is the image of the
/// j-th basis vector of the domain.
class SparseMatrix {
 public:
  using Triplet = std::tuple<std::size_t, std::size_t, Rational>;

  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);

  static SparseMatrix from_columns(std::size_t rows, std::vector<SparseVector> columns);
  static SparseMatrix from_triplets(std::size_t rows, std::size_t cols, const std::vector<Triplet>& triplets);
  static SparseMatrix from_dense(const std::vector<std::vector<Rational>>& rows);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nnz() const;
  bool is_zero() const;

  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  const std::vector<SparseVector>& columns() const { return columns_; }
  Rational at(std::size_t row, std::size_t col) const;
  std::vector<Triplet> triplets() const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;
  SparseMatrix scaled(const Rational& factor) const;
  SparseMatrix select_columns(std::span<const std::size_t> which) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.rows_ == b.rows_ && a.columns_ == b.columns_;
  }

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

/// Stacks matrices with equal column counts on top of each other.
SparseMatrix vstack(std::span<const SparseMatrix> blocks);
/// Places matrices with equal row counts side by side.
SparseMatrix hstack(std::span<const SparseMatrix> blocks);
/// Kronecker product a ⊗ b; row/col index of the result is (i_a * dim_b + i_b).
SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

}  // namespace leibniz
