#include "leibniz/complexes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "leibniz/linalg.hpp"

namespace leibniz {

namespace {

// Fills the columns of a rows x cols matrix independently.
template <class F>
SparseMatrix build_columns(std::size_t rows, std::size_t cols, F&& fill) {
  std::vector<SparseVector> out(cols);
  const auto n = static_cast<std::int64_t>(cols);
#pragma omp parallel for schedule(dynamic, 64)
  for (std::int64_t c = 0; c < n; ++c) {
    std::vector<Entry> entries;
    fill(static_cast<std::size_t>(c), entries);
    out[c] = SparseVector::from_entries(rows, std::move(entries));
  }
  return SparseMatrix::from_columns(rows, std::move(out));
}

Rational sign_of(std::size_t exponent) { return exponent % 2 == 0 ? Rational(1) : Rational(-1); }

Rational factorial(std::size_t n) {
  Rational r(1);
  for (std::size_t i = 2; i <= n; ++i) r *= Rational(static_cast<std::int64_t>(i));
  return r;
}

int permutation_sign(const std::vector<std::size_t>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// ChainComplex / ChainMap

ChainComplex::ChainComplex(std::string name, std::vector<Degree> degrees, int shift) {
  if (degrees.empty()) throw std::invalid_argument("chain complex needs at least degree 0");
  for (std::size_t n = 0; n < degrees.size(); ++n) {
    const auto& deg = degrees[n];
    const std::size_t below = n == 0 ? 0 : degrees[n - 1].dim;
    if (deg.d.rows() != below || deg.d.cols() != deg.dim)
      throw std::invalid_argument("boundary matrix has the wrong shape in degree " + std::to_string(n));
    if (deg.embedding && deg.embedding->cols() != deg.dim)
      throw std::invalid_argument("embedding has the wrong shape in degree " + std::to_string(n));
  }
  data_ = std::make_shared<const Data>(Data{std::move(name), std::move(degrees), shift});
}

const ChainComplex::Degree& ChainComplex::at(std::size_t n) const {
  if (!data_ || n >= data_->degrees.size()) throw std::out_of_range("degree " + std::to_string(n) + " not built");
  return data_->degrees[n];
}

std::vector<std::size_t> ChainComplex::dims() const {
  std::vector<std::size_t> out;
  for (const auto& d : data_->degrees) out.push_back(d.dim);
  return out;
}

std::size_t ChainComplex::ambient_dim(std::size_t n) const {
  const auto& deg = at(n);
  return deg.embedding ? deg.embedding->rows() : deg.dim;
}

SparseVector ChainComplex::to_ambient(std::size_t n, const SparseVector& v) const {
  const auto& deg = at(n);
  return deg.embedding ? deg.embedding->apply(v) : v;
}

std::optional<std::size_t> ChainComplex::find_d_squared_failure() const {
  for (std::size_t n = 2; n <= top(); ++n)
    if (!(d(n - 1) * d(n)).is_zero()) return n;
  return std::nullopt;
}

ChainMap::ChainMap(ChainComplex source, ChainComplex target, int shift, std::vector<std::optional<SparseMatrix>> maps)
    : source_(std::move(source)), target_(std::move(target)), shift_(shift), maps_(std::move(maps)) {
  for (std::size_t n = 0; n < maps_.size(); ++n) {
    if (!maps_[n]) continue;
    const auto t = static_cast<std::int64_t>(n) + shift_;
    if (n > source_.top() || t < 0 || static_cast<std::size_t>(t) > target_.top())
      throw std::invalid_argument("chain map defined outside the built range");
    if (maps_[n]->cols() != source_.dim(n) || maps_[n]->rows() != target_.dim(static_cast<std::size_t>(t)))
      throw std::invalid_argument("chain map has the wrong shape in degree " + std::to_string(n));
  }
}

const SparseMatrix& ChainMap::map(std::size_t n) const {
  if (!defined(n)) throw std::out_of_range("chain map not defined in degree " + std::to_string(n));
  return *maps_[n];
}

std::optional<std::size_t> ChainMap::find_commute_failure() const {
  for (std::size_t n = 1; n < maps_.size(); ++n) {
    if (!defined(n) || !defined(n - 1)) continue;
    const auto t = static_cast<std::size_t>(static_cast<std::int64_t>(n) + shift_);
    if (!(target_.d(t) * map(n) == map(n - 1) * source_.d(n))) return n;
  }
  return std::nullopt;
}

ChainMap compose(const ChainMap& g, const ChainMap& f) {
  if (f.target().dims() != g.source().dims()) throw std::invalid_argument("chain maps are not composable");
  std::vector<std::optional<SparseMatrix>> maps(f.source().top() + 1);
  for (std::size_t n = 0; n < maps.size(); ++n) {
    if (!f.defined(n)) continue;
    const auto mid = static_cast<std::size_t>(static_cast<std::int64_t>(n) + f.shift());
    if (!g.defined(mid)) continue;
    maps[n] = g.map(mid) * f.map(n);
  }
  return ChainMap(f.source(), g.target(), f.shift() + g.shift(), std::move(maps));
}

// ---------------------------------------------------------------------------
// Builders

SparseMatrix lie_boundary(const LieAlgebra& g, std::size_t k) {
  const auto dim = g.dim();
  const auto dst = BasisIndexer::wedge(dim, k == 0 ? 0 : k - 1);
  const auto src = BasisIndexer::wedge(dim, k);
  if (k == 0) return SparseMatrix(0, 1);
  if (k == 1) return SparseMatrix(1, dim);
  return build_columns(dst.size(), src.size(), [&](std::size_t c, std::vector<Entry>& out) {
    const auto w = src.word(c);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto sj = sign_of(j + 1);
        for (const auto& e : g.bracket(w[i], w[j]).entries()) {
          Word v = w;
          v[i] = static_cast<std::uint32_t>(e.index);
          v.erase(v.begin() + static_cast<std::ptrdiff_t>(j));
          const int s = wedge_normalize(v);
          if (s == 0) continue;
          out.push_back({*dst.index(v), s > 0 ? sj * e.value : -(sj * e.value)});
        }
      }
    }
  });
}

ChainComplex lie_complex(const LieAlgebra& g, std::size_t N) {
  std::vector<ChainComplex::Degree> degrees;
  for (std::size_t k = 0; k <= N; ++k) {
    auto idx = BasisIndexer::wedge(g.dim(), k);
    degrees.push_back({idx.size(), lie_boundary(g, k), idx, std::nullopt});
  }
  return ChainComplex("Lambda(" + g.name() + ")", std::move(degrees));
}

SparseMatrix leibniz_boundary(const LieAlgebra& g, std::size_t k) {
  const auto dim = g.dim();
  if (k == 0) return SparseMatrix(0, 1);
  if (k == 1) return SparseMatrix(1, dim);
  const auto src = BasisIndexer::tensor(dim, k);
  const auto dst = BasisIndexer::tensor(dim, k - 1);
  return build_columns(dst.size(), src.size(), [&](std::size_t c, std::vector<Entry>& out) {
    const auto w = src.word(c);
    Word v(k - 1);
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto& br = g.bracket(w[i], w[j]);
        if (br.is_zero()) continue;
        const auto sj = sign_of(j + 1);
        std::copy(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(j), v.begin());
        std::copy(w.begin() + static_cast<std::ptrdiff_t>(j) + 1, w.end(), v.begin() + static_cast<std::ptrdiff_t>(j));
        for (const auto& e : br.entries()) {
          v[i] = static_cast<std::uint32_t>(e.index);
          out.push_back({*dst.index(v), sj * e.value});
        }
      }
    }
  });
}

ChainComplex leibniz_complex(const LieAlgebra& g, std::size_t N) {
  std::vector<ChainComplex::Degree> degrees;
  for (std::size_t k = 0; k <= N; ++k) {
    auto idx = BasisIndexer::tensor(g.dim(), k);
    degrees.push_back({idx.size(), leibniz_boundary(g, k), idx, std::nullopt});
  }
  return ChainComplex("T(" + g.name() + ")", std::move(degrees));
}

SparseMatrix coeff_boundary(const LieAlgebra& L, const Representation& M, std::size_t k) {
  const auto dim = L.dim();
  const auto mdim = M.dim();
  if (k == 0) return SparseMatrix(0, mdim);
  const auto src = BasisIndexer::coeff(mdim, dim, k);
  const auto dst = BasisIndexer::coeff(mdim, dim, k - 1);
  return build_columns(dst.size(), src.size(), [&](std::size_t c, std::vector<Entry>& out) {
    const auto w = src.word(c);  // w[0] module index, w[1..k] wedge word
    Word v;
    // first sum: [m, a_p] = -rho(a_p) m
    for (std::size_t p = 0; p < k; ++p) {
      const auto sp = sign_of(p);
      for (const auto& e : M.action(w[p + 1]).column(w[0]).entries()) {
        v.assign(w.begin(), w.end());
        v.erase(v.begin() + static_cast<std::ptrdiff_t>(p) + 1);
        v[0] = static_cast<std::uint32_t>(e.index);
        out.push_back({*dst.index(v), -(sp * e.value)});
      }
    }
    // second sum: brackets inside the wedge
    for (std::size_t p = 0; p < k; ++p) {
      for (std::size_t q = p + 1; q < k; ++q) {
        const auto sq = sign_of(q);
        for (const auto& e : L.bracket(w[p + 1], w[q + 1]).entries()) {
          Word u(w.begin() + 1, w.end());
          u[p] = static_cast<std::uint32_t>(e.index);
          u.erase(u.begin() + static_cast<std::ptrdiff_t>(q));
          const int s = wedge_normalize(u);
          if (s == 0) continue;
          u.insert(u.begin(), w[0]);
          out.push_back({*dst.index(u), s > 0 ? sq * e.value : -(sq * e.value)});
        }
      }
    }
  });
}

ChainComplex coeff_complex(const LieAlgebra& L, const Representation& M, std::size_t N) {
  if (!(M.algebra() == L)) throw std::invalid_argument("module is over a different algebra");
  if (auto r = check_representation(M); !r.ok()) throw std::invalid_argument("invalid representation:\n" + r.to_text(L.labels()));
  std::vector<ChainComplex::Degree> degrees;
  for (std::size_t k = 0; k <= N; ++k) {
    auto idx = BasisIndexer::coeff(M.dim(), L.dim(), k);
    degrees.push_back({idx.size(), coeff_boundary(L, M, k), idx, std::nullopt});
  }
  return ChainComplex("M(x)Lambda(" + L.name() + ")", std::move(degrees));
}

ChainComplex adjoint_complex(const LieAlgebra& g, std::size_t N) { return coeff_complex(g, adjoint_rep(g), N); }

Representation ideal_module(const AbelianExtension& ext) {
  std::vector<SparseMatrix> action;
  for (std::size_t a = 0; a < ext.i_dim(); ++a) action.push_back(ext.h.ad(ext.i_index(a)));
  return Representation(ext.ideal(), ext.h.labels(), std::move(action));
}

ChainComplex ideal_coeff_complex(const AbelianExtension& ext, std::size_t N) {
  return coeff_complex(ext.ideal(), ideal_module(ext), N);
}

// ---------------------------------------------------------------------------
// Projections and inclusions

namespace {

// Map between indexed complexes given by sending each source word to a
// signed target word (or nothing).
template <class F>
SparseMatrix word_map(const BasisIndexer& src, const BasisIndexer& dst, F&& image) {
  return build_columns(dst.size(), src.size(), [&](std::size_t c, std::vector<Entry>& out) {
    Word v;
    const int s = image(src.word(c), v);
    if (s != 0) out.push_back({*dst.index(v), Rational(s)});
  });
}

}  // namespace

ChainMap proj_pi(const LieAlgebra& g, std::size_t N) {
  auto src = adjoint_complex(g, N);
  auto dst = lie_complex(g, N + 1);
  std::vector<std::optional<SparseMatrix>> maps(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    maps[n] = word_map(*src.indexer(n), *dst.indexer(n + 1), [](const Word& w, Word& v) {
      v = w;
      return wedge_normalize(v);
    });
  }
  return ChainMap(std::move(src), std::move(dst), 1, std::move(maps));
}

ChainMap proj_pi_prime(const LieAlgebra& g, std::size_t N) {
  auto src = leibniz_complex(g, N);
  auto dst = lie_complex(g, N);
  std::vector<std::optional<SparseMatrix>> maps(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    maps[n] = word_map(*src.indexer(n), *dst.indexer(n), [](const Word& w, Word& v) {
      v = w;
      return wedge_normalize(v);
    });
  }
  return ChainMap(std::move(src), std::move(dst), 0, std::move(maps));
}

ChainMap proj_tensor_to_coeff(const LieAlgebra& g, std::size_t N) {
  if (N == 0) throw std::invalid_argument("projection needs N >= 1");
  auto src = leibniz_complex(g, N);
  auto dst = adjoint_complex(g, N - 1);
  std::vector<std::optional<SparseMatrix>> maps(N + 1);
  for (std::size_t n = 1; n <= N; ++n) {
    maps[n] = word_map(*src.indexer(n), *dst.indexer(n - 1), [](const Word& w, Word& v) {
      Word rest(w.begin() + 1, w.end());
      const int s = wedge_normalize(rest);
      v.assign(1, w[0]);
      v.insert(v.end(), rest.begin(), rest.end());
      return s;
    });
  }
  return ChainMap(std::move(src), std::move(dst), -1, std::move(maps));
}

ChainMap ideal_inclusion(const AbelianExtension& ext, std::size_t N) {
  auto src = ideal_coeff_complex(ext, N);
  auto dst = adjoint_complex(ext.h, N);
  const auto off = static_cast<std::uint32_t>(ext.g_dim());
  std::vector<std::optional<SparseMatrix>> maps(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    maps[n] = word_map(*src.indexer(n), *dst.indexer(n), [off](const Word& w, Word& v) {
      v = w;
      for (std::size_t i = 1; i < v.size(); ++i) v[i] += off;
      return 1;
    });
  }
  return ChainMap(std::move(src), std::move(dst), 0, std::move(maps));
}

namespace {

ChainMap wedge_offset_inclusion(const LieAlgebra& from, const LieAlgebra& to, std::uint32_t off, std::size_t N) {
  auto src = lie_complex(from, N);
  auto dst = lie_complex(to, N);
  std::vector<std::optional<SparseMatrix>> maps(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    maps[n] = word_map(*src.indexer(n), *dst.indexer(n), [off](const Word& w, Word& v) {
      v = w;
      for (auto& x : v) x += off;
      return 1;
    });
  }
  return ChainMap(std::move(src), std::move(dst), 0, std::move(maps));
}

}  // namespace

ChainMap wedge_inclusion_ideal(const AbelianExtension& ext, std::size_t N) {
  return wedge_offset_inclusion(ext.ideal(), ext.h, static_cast<std::uint32_t>(ext.g_dim()), N);
}

ChainMap wedge_inclusion_base(const AbelianExtension& ext, std::size_t N) {
  return wedge_offset_inclusion(ext.g, ext.h, 0, N);
}

// ---------------------------------------------------------------------------
// ζ, ε, skew-symmetrization

SparseMatrix zeta_matrix(const AbelianExtension& ext, std::size_t n) {
  const auto d = ext.i_dim();
  const auto src = BasisIndexer::wedge(d, n + 1);
  const auto dst = BasisIndexer::coeff(ext.h.dim(), d, n);
  const Rational scale(1, static_cast<std::int64_t>(n + 1));
  return build_columns(dst.size(), src.size(), [&](std::size_t c, std::vector<Entry>& out) {
    const auto w = src.word(c);
    for (std::size_t i = 0; i <= n; ++i) {
      Word v;
      v.push_back(static_cast<std::uint32_t>(ext.i_index(w[i])));
      for (std::size_t j = 0; j <= n; ++j)
        if (j != i) v.push_back(w[j]);
      out.push_back({*dst.index(v), sign_of(i) * scale});
    }
  });
}

ChainMap zeta(const AbelianExtension& ext, std::size_t N) {
  auto src = lie_complex(ext.ideal(), N + 1);
  auto dst = ideal_coeff_complex(ext, N);
  std::vector<std::optional<SparseMatrix>> maps(N + 2);
  for (std::size_t k = 1; k <= N + 1; ++k) maps[k] = zeta_matrix(ext, k - 1);
  return ChainMap(std::move(src), std::move(dst), -1, std::move(maps));
}

SparseMatrix epsilon_matrix(const AbelianExtension& ext, std::size_t n) {
  const auto d = ext.i_dim();
  const auto hd = ext.h.dim();
  const auto src = BasisIndexer::coeff(hd, d, n);
  const auto dst = BasisIndexer::tensor(hd, n + 1);
  const Rational scale = inverse(factorial(n));
  return build_columns(dst.size(), src.size(), [&](std::size_t c, std::vector<Entry>& out) {
    const auto w = src.word(c);
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Word v(n + 1);
    v[0] = w[0];
    do {
      for (std::size_t i = 0; i < n; ++i) v[i + 1] = static_cast<std::uint32_t>(ext.i_index(w[perm[i] + 1]));
      out.push_back({*dst.index(v), permutation_sign(perm) > 0 ? scale : -scale});
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
}

ChainMap epsilon(const AbelianExtension& ext, std::size_t N) {
  auto src = ideal_coeff_complex(ext, N);
  auto dst = leibniz_complex(ext.h, N + 1);
  std::vector<std::optional<SparseMatrix>> maps(N + 1);
  for (std::size_t n = 0; n <= N; ++n) maps[n] = epsilon_matrix(ext, n);
  return ChainMap(std::move(src), std::move(dst), 1, std::move(maps));
}

SparseMatrix skew_symmetrize(std::size_t d, std::size_t k) {
  const auto src = BasisIndexer::wedge(d, k);
  const auto dst = BasisIndexer::tensor(d, k);
  const Rational scale = inverse(factorial(k));
  return build_columns(dst.size(), src.size(), [&](std::size_t c, std::vector<Entry>& out) {
    const auto w = src.word(c);
    std::vector<std::size_t> perm(k);
    std::iota(perm.begin(), perm.end(), 0);
    Word v(k);
    do {
      for (std::size_t i = 0; i < k; ++i) v[i] = w[perm[i]];
      out.push_back({*dst.index(v), permutation_sign(perm) > 0 ? scale : -scale});
    } while (std::next_permutation(perm.begin(), perm.end()));
  });
}

// ---------------------------------------------------------------------------
// Subcomplexes

namespace {

// Restricts d to subspaces given per degree; the image of each basis vector
// of sub[n] must lie in sub[n-1].
std::vector<ChainComplex::Degree> restrict_to_subspaces(const ChainComplex& c, const std::vector<Subspace>& sub) {
  std::vector<ChainComplex::Degree> degrees;
  for (std::size_t n = 0; n < sub.size(); ++n) {
    const auto& s = sub[n];
    SparseMatrix d(n == 0 ? 0 : sub[n - 1].dim(), s.dim());
    if (n > 0 && s.dim() > 0) {
      std::vector<SparseVector> cols(s.dim());
      bool leaked = false;
      const auto count = static_cast<std::int64_t>(s.dim());
#pragma omp parallel for schedule(dynamic, 16)
      for (std::int64_t i = 0; i < count; ++i) {
        auto image = c.d(n).apply(s.basis()[i]);
        auto coords = sub[n - 1].coordinates(image);
        if (!coords) {
#pragma omp atomic write
          leaked = true;
          continue;
        }
        cols[i] = SparseVector::from_dense(*coords);
        if (cols[i].dim() != sub[n - 1].dim()) cols[i] = SparseVector(sub[n - 1].dim());
      }
      if (leaked) throw std::logic_error("differential leaves the subspace in degree " + std::to_string(n));
      d = SparseMatrix::from_columns(sub[n - 1].dim(), std::move(cols));
    }
    auto emb = s.as_matrix();
    if (c.embedding(n)) emb = *c.embedding(n) * emb;
    degrees.push_back({s.dim(), std::move(d), c.indexer(n), std::move(emb)});
  }
  return degrees;
}

}  // namespace

ChainComplex ker_subcomplex(const ChainMap& f, int shift) {
  const auto& src = f.source();
  std::vector<Subspace> kernels;
  for (std::size_t n = 0; n <= src.top(); ++n) {
    if (!f.defined(n)) throw std::invalid_argument("chain map undefined in degree " + std::to_string(n));
    kernels.push_back(kernel_basis(f.map(n)));
  }
  return ChainComplex("Ker(" + src.name() + ")", restrict_to_subspaces(src, kernels), shift);
}

ComplexAction wedge_action(const Representation& v, std::size_t N) {
  ComplexAction out;
  for (std::size_t k = 0; k <= N; ++k) out.push_back(wedge_rep(v, k));
  return out;
}

ComplexAction tensor_action(const Representation& v, std::size_t N) {
  ComplexAction out;
  for (std::size_t k = 0; k <= N; ++k) out.push_back(tensor_rep(v, k));
  return out;
}

ComplexAction coeff_action(const Representation& m, const Representation& l, std::size_t N) {
  ComplexAction out;
  for (std::size_t k = 0; k <= N; ++k) out.push_back(tensor_product(m, wedge_rep(l, k)));
  return out;
}

ComplexAction ideal_coeff_g_action(const AbelianExtension& ext, std::size_t N) {
  return coeff_action(restrict_to(adjoint_rep(ext.h), ext.g), ext.rep, N);
}

ComplexAction tensor_g_action(const AbelianExtension& ext, std::size_t N) {
  return tensor_action(restrict_to(adjoint_rep(ext.h), ext.g), N);
}

ComplexAction tensor_h_action(const AbelianExtension& ext, std::size_t N) { return tensor_action(adjoint_rep(ext.h), N); }

std::optional<std::size_t> find_action_commute_failure(const ChainComplex& c, const ComplexAction& action) {
  if (action.size() < c.top() + 1) throw std::invalid_argument("action does not cover every degree");
  for (std::size_t n = 0; n <= c.top(); ++n)
    if (action[n].dim() != c.dim(n)) throw std::invalid_argument("action has the wrong size in degree " + std::to_string(n));
  for (std::size_t n = 1; n <= c.top(); ++n) {
    for (std::size_t x = 0; x < action[n].action().size(); ++x)
      if (!(c.d(n) * action[n].action(x) == action[n - 1].action(x) * c.d(n))) return n;
  }
  return std::nullopt;
}

ChainComplex invariant_subcomplex(const ChainComplex& c, const ComplexAction& action) {
  if (auto bad = find_action_commute_failure(c, action))
    throw std::invalid_argument("action does not commute with d in degree " + std::to_string(*bad));
  std::vector<Subspace> inv;
  for (std::size_t n = 0; n <= c.top(); ++n) inv.push_back(invariants(action[n]));
  return ChainComplex(c.name() + "^inv", restrict_to_subspaces(c, inv), c.shift());
}

ChainMap subcomplex_inclusion(const ChainComplex& sub, const ChainComplex& ambient) {
  if (sub.top() > ambient.top()) throw std::invalid_argument("subcomplex is longer than its ambient complex");
  std::vector<std::optional<SparseMatrix>> maps(sub.top() + 1);
  for (std::size_t n = 0; n <= sub.top(); ++n) {
    if (!sub.embedding(n)) {
      maps[n] = SparseMatrix::identity(sub.dim(n));
      continue;
    }
    const auto& emb = *sub.embedding(n);
    if (!ambient.embedding(n)) {
      maps[n] = emb;
      continue;
    }
    auto basis = Subspace::from_basis(emb.rows(), ambient.embedding(n)->columns());
    std::vector<SparseVector> cols;
    for (const auto& col : emb.columns()) {
      auto coords = basis.coordinates(col);
      if (!coords) throw std::invalid_argument("subcomplex is not contained in the ambient complex");
      cols.push_back(SparseVector::from_dense(*coords));
    }
    maps[n] = SparseMatrix::from_columns(ambient.dim(n), std::move(cols));
  }
  return ChainMap(sub, ambient, 0, std::move(maps));
}

}  // namespace leibniz
