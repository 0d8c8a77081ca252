#include "leibniz/linalg.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "elimination.hpp"

namespace leibniz {

namespace {

constexpr std::size_t kComboDim = std::numeric_limits<std::size_t>::max();

// Smallest-height entry, ties broken by index.
std::size_t choose_pivot(const SparseVector& r) {
  const auto& es = r.entries();
  std::size_t best = 0;
  for (std::size_t i = 1; i < es.size(); ++i) {
    const auto& a = es[i].value;
    const auto& b = es[best].value;
    const int c = mpz_cmpabs(a.raw().get_num_mpz_t(), b.raw().get_num_mpz_t());
    if (c < 0 || (c == 0 && a.raw().get_den() < b.raw().get_den())) best = i;
  }
  return es[best].index;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Scales a rational vector to a primitive integer vector with the same span.
template <class Ops>
detail::IntVector<Ops> to_integers(const std::vector<std::pair<std::uint32_t, const Rational*>>& entries) {
  mpz_class l = 1;
  for (const auto& [i, v] : entries) l = lcm(l, v->raw().get_den());
  detail::IntVector<Ops> out;
  out.reserve(entries.size());
  for (const auto& [i, v] : entries) {
    mpz_class n = v->raw().get_num() * (l / v->raw().get_den());
    if constexpr (std::is_same_v<typename Ops::Int, std::int64_t>) {
      if (!n.fits_slong_p()) throw detail::Overflow{};
      out.emplace_back(i, static_cast<std::int64_t>(n.get_si()));
    } else {
      out.emplace_back(i, std::move(n));
    }
  }
  return out;
}

using LocalVectors = std::vector<std::vector<std::pair<std::uint32_t, const Rational*>>>;

std::size_t block_rank(const LocalVectors& vectors, std::size_t dim) {
  try {
    std::vector<detail::IntVector<detail::Int64Ops>> ints;
    ints.reserve(vectors.size());
    for (const auto& v : vectors) ints.push_back(to_integers<detail::Int64Ops>(v));
    return detail::integer_rank<detail::Int64Ops>(std::move(ints), dim);
  } catch (const detail::Overflow&) {
    std::vector<detail::IntVector<detail::MpzOps>> ints;
    ints.reserve(vectors.size());
    for (const auto& v : vectors) ints.push_back(to_integers<detail::MpzOps>(v));
    return detail::integer_rank<detail::MpzOps>(std::move(ints), dim);
  }
}

}  // namespace

// ---------------------------------------------------------------------------
// Echelon

bool Echelon::insert(const SparseVector& v) {
  if (v.dim() != dim_) throw std::invalid_argument("echelon: vector dimension mismatch");
  const std::size_t t = inserted_++;
  SparseVector r = v;
  SparseVector combo(kComboDim);
  if (track_) combo = SparseVector::unit(kComboDim, t);
  for (const auto& e : v.entries()) {
    const auto k = pivot_row_[e.index];
    if (k == npos) continue;
    r.add_scaled(rows_[k], -e.value);
    if (track_) combo.add_scaled(combos_[k], -e.value);
  }
  if (r.is_zero()) return false;
  const std::size_t p = choose_pivot(r);
  const Rational inv = inverse(r[p]);
  r = r.scaled(inv);
  if (track_) combo = combo.scaled(inv);
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    const Rational f = rows_[j][p];
    if (f.is_zero()) continue;
    rows_[j].add_scaled(r, -f);
    if (track_) combos_[j].add_scaled(combo, -f);
  }
  pivot_row_[p] = rows_.size();
  pivots_.push_back(p);
  rows_.push_back(std::move(r));
  combos_.push_back(std::move(combo));
  return true;
}

SparseVector Echelon::reduce(const SparseVector& v) const {
  if (v.dim() != dim_) throw std::invalid_argument("echelon: vector dimension mismatch");
  SparseVector r = v;
  for (const auto& e : v.entries()) {
    const auto k = pivot_row_[e.index];
    if (k != npos) r.add_scaled(rows_[k], -e.value);
  }
  return r;
}

std::optional<std::vector<Rational>> Echelon::solve(const SparseVector& v) const {
  if (!track_) throw std::logic_error("echelon: solve needs combination tracking");
  if (v.dim() != dim_) throw std::invalid_argument("echelon: vector dimension mismatch");
  SparseVector r = v;
  SparseVector combo(kComboDim);
  for (const auto& e : v.entries()) {
    const auto k = pivot_row_[e.index];
    if (k == npos) continue;
    r.add_scaled(rows_[k], -e.value);
    combo.add_scaled(combos_[k], e.value);
  }
  if (!r.is_zero()) return std::nullopt;
  std::vector<Rational> out(inserted_);
  for (const auto& e : combo.entries()) out[e.index] = e.value;
  return out;
}

// ---------------------------------------------------------------------------
// Subspace

Subspace::Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim), echelon_(ambient_dim) {}

Subspace Subspace::from_basis(std::size_t ambient_dim, std::vector<SparseVector> basis) {
  Subspace s(ambient_dim);
  for (auto& v : basis) {
    if (v.dim() != ambient_dim) throw std::invalid_argument("subspace: basis vector has wrong length");
    if (!s.echelon_.insert(v)) throw std::invalid_argument("subspace: basis vectors are dependent");
  }
  s.basis_ = std::move(basis);
  return s;
}

Subspace Subspace::span_of(std::size_t ambient_dim, const std::vector<SparseVector>& vectors) {
  Echelon probe(ambient_dim, false);
  std::vector<SparseVector> kept;
  for (const auto& v : vectors)
    if (probe.insert(v)) kept.push_back(v);
  return from_basis(ambient_dim, std::move(kept));
}

Subspace Subspace::full(std::size_t ambient_dim) {
  std::vector<SparseVector> basis;
  basis.reserve(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) basis.push_back(SparseVector::unit(ambient_dim, i));
  return from_basis(ambient_dim, std::move(basis));
}

std::optional<std::vector<Rational>> Subspace::coordinates(const SparseVector& v) const {
  if (v.dim() != ambient_dim_) throw std::invalid_argument("subspace: dimension mismatch");
  return echelon_.solve(v);
}

bool Subspace::contains(const SparseVector& v) const {
  if (v.dim() != ambient_dim_) throw std::invalid_argument("subspace: dimension mismatch");
  return echelon_.reduce(v).is_zero();
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_dim_ != ambient_dim_) return false;
  return std::all_of(other.basis_.begin(), other.basis_.end(),
                     [&](const SparseVector& v) { return contains(v); });
}

SparseMatrix Subspace::as_matrix() const { return SparseMatrix::from_columns(ambient_dim_, basis_); }

std::optional<std::vector<Rational>> in_span(const Subspace& s, const SparseVector& v) {
  return s.coordinates(v);
}

// ---------------------------------------------------------------------------
// Blocks, rank, kernel

std::vector<Block> connected_blocks(const SparseMatrix& m) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  UnionFind uf(R + C);
  for (std::size_t j = 0; j < C; ++j)
    for (const auto& e : m.column(j).entries()) uf.unite(e.index, R + j);
  std::vector<std::size_t> block_of(R + C, static_cast<std::size_t>(-1));
  std::vector<Block> blocks;
  for (std::size_t x = 0; x < R + C; ++x) {
    const auto root = uf.find(x);
    if (block_of[root] == static_cast<std::size_t>(-1)) {
      block_of[root] = blocks.size();
      blocks.emplace_back();
    }
    auto& b = blocks[block_of[root]];
    if (x < R)
      b.rows.push_back(x);
    else
      b.cols.push_back(x - R);
  }
  return blocks;
}

std::size_t rank(const SparseMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto blocks = connected_blocks(m);
  std::erase_if(blocks, [](const Block& b) { return b.rows.empty() || b.cols.empty(); });
  std::sort(blocks.begin(), blocks.end(), [](const Block& a, const Block& b) {
    return a.rows.size() * a.cols.size() > b.rows.size() * b.cols.size();
  });

  std::vector<std::uint32_t> local_row(m.rows()), local_col(m.cols());
  bool need_transpose = false;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows.size(); ++i) local_row[b.rows[i]] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < b.cols.size(); ++i) local_col[b.cols[i]] = static_cast<std::uint32_t>(i);
    need_transpose = need_transpose || b.rows.size() > b.cols.size();
  }
  const SparseMatrix mt = need_transpose ? m.transpose() : SparseMatrix();

  std::vector<std::size_t> ranks(blocks.size(), 0);
#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& b = blocks[bi];
    LocalVectors vectors;
    std::size_t dim;
    if (b.cols.size() >= b.rows.size()) {
      dim = b.rows.size();
      vectors.reserve(b.cols.size());
      for (auto j : b.cols) {
        auto& v = vectors.emplace_back();
        for (const auto& e : m.column(j).entries()) v.emplace_back(local_row[e.index], &e.value);
      }
    } else {
      dim = b.cols.size();
      vectors.reserve(b.rows.size());
      for (auto i : b.rows) {
        auto& v = vectors.emplace_back();
        for (const auto& e : mt.column(i).entries()) v.emplace_back(local_col[e.index], &e.value);
      }
    }
    ranks[bi] = block_rank(vectors, dim);
  }
  return std::accumulate(ranks.begin(), ranks.end(), std::size_t{0});
}

Subspace kernel_basis(const SparseMatrix& m) {
  const std::size_t C = m.cols();
  auto blocks = connected_blocks(m);
  const SparseMatrix mt = m.transpose();
  // (free column, kernel vector) per block
  std::vector<std::vector<std::pair<std::size_t, SparseVector>>> per_block(blocks.size());

#pragma omp parallel for schedule(dynamic, 1)
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    const Block& b = blocks[bi];
    if (b.cols.empty()) continue;
    if (b.rows.empty()) {
      for (auto j : b.cols) per_block[bi].emplace_back(j, SparseVector::unit(C, j));
      continue;
    }
    std::vector<std::uint32_t> local(C);
    for (std::size_t i = 0; i < b.cols.size(); ++i) local[b.cols[i]] = static_cast<std::uint32_t>(i);
    Echelon ech(b.cols.size(), false);
    for (auto i : b.rows) {
      std::vector<Entry> es;
      for (const auto& e : mt.column(i).entries()) es.push_back({local[e.index], e.value});
      ech.insert(SparseVector::from_entries(b.cols.size(), std::move(es)));
    }
    std::vector<char> is_pivot(b.cols.size(), 0);
    for (auto p : ech.pivot_columns()) is_pivot[p] = 1;
    std::vector<std::vector<Entry>> by_free(b.cols.size());
    const auto& rows = ech.rows();
    for (std::size_t k = 0; k < rows.size(); ++k)
      for (const auto& e : rows[k].entries())
        if (!is_pivot[e.index]) by_free[e.index].push_back({b.cols[ech.pivot_columns()[k]], -e.value});
    for (std::size_t f = 0; f < b.cols.size(); ++f) {
      if (is_pivot[f]) continue;
      auto es = std::move(by_free[f]);
      es.push_back({b.cols[f], Rational(1)});
      per_block[bi].emplace_back(b.cols[f], SparseVector::from_entries(C, std::move(es)));
    }
  }

  std::vector<std::pair<std::size_t, SparseVector>> keyed;
  for (auto& vs : per_block)
    for (auto& kv : vs) keyed.push_back(std::move(kv));
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<SparseVector> basis;
  basis.reserve(keyed.size());
  for (auto& kv : keyed) basis.push_back(std::move(kv.second));
  return Subspace::from_basis(C, std::move(basis));
}

Subspace image_basis(const SparseMatrix& m) { return Subspace::span_of(m.rows(), m.columns()); }

// ---------------------------------------------------------------------------
// Quotient

Quotient::Quotient(const Subspace& cycles, const Subspace& boundaries)
    : ambient_dim_(cycles.ambient_dim()), cycles_(cycles), boundaries_(boundaries), combined_(ambient_dim_) {
  if (boundaries.ambient_dim() != ambient_dim_)
    throw std::invalid_argument("quotient: ambient dimension mismatch");
  if (!cycles_.contains(boundaries_))
    throw std::invalid_argument("quotient: boundaries are not contained in cycles");
  for (const auto& b : boundaries_.basis()) combined_.insert(b);
  for (const auto& z : cycles_.basis()) {
    const std::size_t slot = combined_.inserted();
    if (combined_.insert(z)) {
      complement_.push_back(z);
      slots_.push_back(slot);
    }
  }
}

std::vector<Rational> Quotient::coordinates(const SparseVector& v) const {
  if (v.dim() != ambient_dim_) throw std::invalid_argument("quotient: dimension mismatch");
  auto all = combined_.solve(v);
  if (!all) throw std::invalid_argument("quotient: vector is not a cycle");
  std::vector<Rational> out;
  out.reserve(slots_.size());
  for (auto s : slots_) out.push_back((*all)[s]);
  return out;
}

std::vector<Rational> quotient_coordinates(const Subspace& cycles, const Subspace& boundaries,
                                           const SparseVector& v) {
  return Quotient(cycles, boundaries).coordinates(v);
}

}  // namespace leibniz
