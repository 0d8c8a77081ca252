#include "leibniz/sparse.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace leibniz {

SparseVector SparseVector::from_entries(std::size_t dim, std::vector<Entry> entries) {
  for (const auto& e : entries)
    if (e.index >= dim)
      throw std::out_of_range("vector index " + std::to_string(e.index) + " >= dim " + std::to_string(dim));
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.index < b.index; });
  SparseVector v(dim);
  v.entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (!v.entries_.empty() && v.entries_.back().index == e.index) {
      v.entries_.back().value += e.value;
    } else {
      if (!v.entries_.empty() && v.entries_.back().value.is_zero()) v.entries_.pop_back();
      v.entries_.push_back(std::move(e));
    }
  }
  if (!v.entries_.empty() && v.entries_.back().value.is_zero()) v.entries_.pop_back();
  return v;
}

SparseVector SparseVector::from_dense(std::span<const Rational> values) {
  SparseVector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (!values[i].is_zero()) v.entries_.push_back({i, values[i]});
  return v;
}

SparseVector SparseVector::unit(std::size_t dim, std::size_t index, Rational value) {
  return from_entries(dim, {{index, std::move(value)}});
}

Rational SparseVector::operator[](std::size_t index) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), index,
                             [](const Entry& e, std::size_t i) { return e.index < i; });
  if (it != entries_.end() && it->index == index) return it->value;
  return Rational(0);
}

std::vector<Rational> SparseVector::to_dense() const {
  std::vector<Rational> out(dim_);
  for (const auto& e : entries_) out[e.index] = e.value;
  return out;
}

void SparseVector::add_scaled(const SparseVector& other, const Rational& factor) {
  if (other.dim_ != dim_) throw std::invalid_argument("vector dimension mismatch");
  if (factor.is_zero() || other.is_zero()) return;
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->index < a->index) {
      merged.push_back({b->index, b->value * factor});
      ++b;
    } else {
      Rational s = a->value + b->value * factor;
      if (!s.is_zero()) merged.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
}

SparseVector SparseVector::scaled(const Rational& factor) const {
  SparseVector v(dim_);
  if (factor.is_zero()) return v;
  v.entries_.reserve(entries_.size());
  for (const auto& e : entries_) v.entries_.push_back({e.index, e.value * factor});
  return v;
}

SparseVector operator+(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.add_scaled(b, Rational(1));
  return r;
}

SparseVector operator-(const SparseVector& a, const SparseVector& b) {
  SparseVector r = a;
  r.add_scaled(b, Rational(-1));
  return r;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), columns_(cols, SparseVector(rows)) {}

SparseMatrix SparseMatrix::from_columns(std::size_t rows, std::vector<SparseVector> columns) {
  for (const auto& c : columns)
    if (c.dim() != rows) throw std::invalid_argument("column length does not match row count");
  SparseMatrix m;
  m.rows_ = rows;
  m.columns_ = std::move(columns);
  return m;
}

SparseMatrix SparseMatrix::from_triplets(std::size_t rows, std::size_t cols,
                                         const std::vector<Triplet>& triplets) {
  std::vector<std::vector<Entry>> per_col(cols);
  for (const auto& [r, c, v] : triplets) {
    if (r >= rows || c >= cols) throw std::out_of_range("matrix entry out of range");
    per_col[c].push_back({r, v});
  }
  std::vector<SparseVector> columns;
  columns.reserve(cols);
  for (auto& entries : per_col) columns.push_back(SparseVector::from_entries(rows, std::move(entries)));
  return from_columns(rows, std::move(columns));
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.front().size();
  std::vector<Triplet> t;
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw std::invalid_argument("ragged dense matrix");
    for (std::size_t j = 0; j < c; ++j)
      if (!rows[i][j].is_zero()) t.emplace_back(i, j, rows[i][j]);
  }
  return from_triplets(r, c, t);
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  std::vector<SparseVector> columns;
  columns.reserve(n);
  for (std::size_t i = 0; i < n; ++i) columns.push_back(SparseVector::unit(n, i));
  return from_columns(n, std::move(columns));
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.nnz();
  return n;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVector& c) { return c.is_zero(); });
}

Rational SparseMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_) throw std::out_of_range("matrix row out of range");
  return columns_.at(col)[row];
}

std::vector<SparseMatrix::Triplet> SparseMatrix::triplets() const {
  std::vector<Triplet> out;
  out.reserve(nnz());
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& e : columns_[j].entries()) out.emplace_back(e.index, j, e.value);
  std::sort(out.begin(), out.end(), [](const Triplet& a, const Triplet& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  std::vector<std::vector<Entry>> per_row(rows_);
  for (std::size_t j = 0; j < columns_.size(); ++j)
    for (const auto& e : columns_[j].entries()) per_row[e.index].push_back({j, e.value});
  std::vector<SparseVector> cols;
  cols.reserve(rows_);
  for (auto& entries : per_row) cols.push_back(SparseVector::from_entries(columns_.size(), std::move(entries)));
  return from_columns(columns_.size(), std::move(cols));
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  if (v.dim() != cols()) throw std::invalid_argument("matrix-vector dimension mismatch");
  std::vector<Entry> acc;
  for (const auto& e : v.entries())
    for (const auto& m : columns_[e.index].entries()) acc.push_back({m.index, m.value * e.value});
  return SparseVector::from_entries(rows_, std::move(acc));
}

SparseMatrix SparseMatrix::scaled(const Rational& factor) const {
  std::vector<SparseVector> cols;
  cols.reserve(columns_.size());
  for (const auto& c : columns_) cols.push_back(c.scaled(factor));
  return from_columns(rows_, std::move(cols));
}

SparseMatrix SparseMatrix::select_columns(std::span<const std::size_t> which) const {
  std::vector<SparseVector> cols;
  cols.reserve(which.size());
  for (auto j : which) cols.push_back(columns_.at(j));
  return from_columns(rows_, std::move(cols));
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product dimension mismatch");
  std::vector<SparseVector> cols(b.cols());
#pragma omp parallel for schedule(dynamic, 64)
  for (std::size_t j = 0; j < b.cols(); ++j) cols[j] = a.apply(b.column(j));
  return SparseMatrix::from_columns(a.rows(), std::move(cols));
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix sum dimension mismatch");
  std::vector<SparseVector> cols;
  cols.reserve(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(a.column(j) + b.column(j));
  return SparseMatrix::from_columns(a.rows(), std::move(cols));
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  return a + b.scaled(Rational(-1));
}

SparseMatrix vstack(std::span<const SparseMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += b.rows();
  }
  std::vector<SparseVector> out;
  out.reserve(cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Entry> entries;
    std::size_t offset = 0;
    for (const auto& b : blocks) {
      for (const auto& e : b.column(j).entries()) entries.push_back({e.index + offset, e.value});
      offset += b.rows();
    }
    out.push_back(SparseVector::from_entries(rows, std::move(entries)));
  }
  return SparseMatrix::from_columns(rows, std::move(out));
}

SparseMatrix hstack(std::span<const SparseMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t rows = blocks.front().rows();
  std::vector<SparseVector> out;
  for (const auto& b : blocks) {
    if (b.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    out.insert(out.end(), b.columns().begin(), b.columns().end());
  }
  return SparseMatrix::from_columns(rows, std::move(out));
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  const std::size_t rows = a.rows() * b.rows();
  std::vector<SparseVector> out;
  out.reserve(a.cols() * b.cols());
  for (std::size_t ja = 0; ja < a.cols(); ++ja) {
    for (std::size_t jb = 0; jb < b.cols(); ++jb) {
      std::vector<Entry> entries;
      for (const auto& ea : a.column(ja).entries())
        for (const auto& eb : b.column(jb).entries())
          entries.push_back({ea.index * b.rows() + eb.index, ea.value * eb.value});
      out.push_back(SparseVector::from_entries(rows, std::move(entries)));
    }
  }
  return SparseMatrix::from_columns(rows, std::move(out));
}

}  // namespace leibniz
