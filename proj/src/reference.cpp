#include "leibniz/reference.hpp"

namespace leibniz::reference {

DenseMatrix to_dense(const SparseMatrix& m) {
  DenseMatrix a(m.rows(), std::vector<Rational>(m.cols()));
  for (std::size_t j = 0; j < m.cols(); ++j)
    for (const auto& e : m.column(j).entries()) a[e.index][j] = e.value;
  return a;
}

std::vector<std::size_t> rref(DenseMatrix& a) {
  std::vector<std::size_t> pivots;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const Rational inv = inverse(a[r][c]);
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::size_t rank(const SparseMatrix& m) {
  auto a = to_dense(m);
  return rref(a).size();
}

std::vector<std::vector<Rational>> kernel(const SparseMatrix& m) {
  auto a = to_dense(m);
  const auto pivots = rref(a);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : pivots) is_pivot[p] = 1;
  std::vector<std::vector<Rational>> out;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = Rational(1);
    for (std::size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -a[k][f];
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace leibniz::reference
