#include "leibniz/structure.hpp"

#include <sstream>
#include <stdexcept>

#include "leibniz/complexes.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/reference.hpp"

namespace leibniz {

Series tensor_algebra_series(const Series& p, const Series& k, std::size_t N) {
  if (!k.empty() && k[0] != 0) throw std::invalid_argument("generator series must vanish in degree 0");
  Series q(N + 1, 0);
  q[0] = 1;
  for (std::size_t m = 1; m <= N; ++m)
    for (std::size_t j = 1; j <= m && j < k.size(); ++j) q[m] += k[j] * q[m - j];
  Series out(N + 1, 0);
  for (std::size_t m = 0; m <= N; ++m)
    for (std::size_t i = 0; i <= m && i < p.size(); ++i) out[m] += p[i] * q[m - i];
  return out;
}

Series invariant_wedge_dims(const AbelianExtension& ext, std::size_t N) {
  Series out;
  for (std::size_t k = 0; k <= N; ++k)
    out.push_back(k <= ext.i_dim() ? invariants(wedge_rep(ext.rep, k)).dim() : 0);
  return out;
}

// ---------------------------------------------------------------------------
// K_n

KDegree compute_K(const AbelianExtension& ext, std::size_t n) {
  KDegree out;
  out.degree = n;
  if (n > ext.i_dim()) return out;  // h ⊗ Λ^n(I) = 0
  const auto full = ideal_coeff_complex(ext, n + 1);
  const auto inv = invariant_subcomplex(full, ideal_coeff_g_action(ext, n + 1));
  const auto f = compose(proj_pi(ext.h, n + 1), compose(ideal_inclusion(ext, n + 1), subcomplex_inclusion(inv, full)));
  const auto source = homology(inv, n);
  const auto target = homology(f.target(), n + 1);
  out.invariant_homology_dim = source.dim();
  out.induced = induced_on_homology(f, source, target);
  const auto ker = kernel_basis(out.induced);
  out.dim = ker.dim();
  for (const auto& c : ker.basis()) {
    SparseVector z(inv.dim(n));
    for (const auto& e : c.entries()) z.add_scaled(source.representatives()[e.index], e.value);
    out.representatives.push_back(inv.to_ambient(n, z));
  }
  return out;
}

std::vector<KDegree> compute_K_range(const AbelianExtension& ext, std::size_t upto) {
  std::vector<KDegree> out;
  for (std::size_t n = 0; n <= upto; ++n) out.push_back(compute_K(ext, n));
  return out;
}

// ---------------------------------------------------------------------------
// Hypothesis A

bool HypothesisAResult::ok() const {
  for (bool b : found)
    if (!b) return false;
  return true;
}

HypothesisAResult hypothesis_A_check(const AbelianExtension& ext, const KDegree& k) {
  HypothesisAResult out;
  out.degree = k.degree;
  if (k.representatives.empty()) return out;
  const auto n = k.degree;
  const auto eps = epsilon_matrix(ext, n);
  const auto invariant = invariants(tensor_rep(adjoint_rep(ext.h), n + 1));
  std::vector<SparseMatrix> blocks{invariant.as_matrix(), leibniz_boundary(ext.h, n + 2)};
  const auto A = hstack(blocks);
  const auto base = rank(A);
  for (const auto& z : k.representatives) {
    std::vector<SparseMatrix> aug{A, SparseMatrix::from_columns(A.rows(), {eps.apply(z)})};
    out.found.push_back(rank(hstack(aug)) == base);
  }
  return out;
}

HypothesisAResult hypothesis_A_check(const AbelianExtension& ext, std::size_t n) {
  return hypothesis_A_check(ext, compute_K(ext, n));
}

// ---------------------------------------------------------------------------
// Balanced tensors

namespace {

SparseMatrix dense_inverse(const SparseMatrix& m) {
  const auto n = m.rows();
  if (m.cols() != n) throw std::invalid_argument("matrix is not square");
  auto a = reference::to_dense(m);
  for (std::size_t i = 0; i < n; ++i) {
    a[i].resize(2 * n, Rational(0));
    a[i][n + i] = Rational(1);
  }
  const auto pivots = reference::rref(a);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::invalid_argument("matrix is singular");
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (!a[i][n + j].is_zero()) t.emplace_back(i, j, a[i][n + j]);
  return SparseMatrix::from_triplets(n, n, t);
}

// Derivation action of x ∈ h (basis index) on h^{⊗k}.
SparseVector act_on_tensor(const AbelianExtension& ext, std::size_t x, const SparseVector& v, std::size_t k) {
  const auto idx = BasisIndexer::tensor(ext.h.dim(), k);
  if (v.dim() != idx.size()) throw std::invalid_argument("tensor has the wrong length");
  std::vector<Entry> out;
  for (const auto& e : v.entries()) {
    auto w = idx.word(e.index);
    for (std::size_t p = 0; p < k; ++p) {
      const auto letter = w[p];
      for (const auto& b : ext.h.bracket(x, letter).entries()) {
        w[p] = static_cast<std::uint32_t>(b.index);
        out.push_back({*idx.index(w), e.value * b.value});
      }
      w[p] = letter;
    }
  }
  return SparseVector::from_entries(idx.size(), std::move(out));
}

}  // namespace

std::pair<SparseVector, SparseVector> balanced_tensor_parts(const AbelianExtension& ext, const SparseMatrix& alpha) {
  const auto& g = ext.g;
  if (alpha.rows() != ext.i_dim() || alpha.cols() != g.dim())
    throw std::invalid_argument("alpha must be a dim I x dim g matrix");
  for (std::size_t x = 0; x < g.dim(); ++x)
    if (!(alpha * g.ad(x) == ext.rep.action(x) * alpha)) throw std::invalid_argument("alpha is not g-equivariant");
  const auto binv = dense_inverse(killing_form(g));
  const auto hd = ext.h.dim();
  std::vector<Entry> first, second;
  for (const auto& [j, i, c] : binv.triplets()) {  // (B^{-1})_{ji}
    for (const auto& a : alpha.column(i).entries())
      first.push_back({ext.g_index(j) * hd + ext.i_index(a.index), c * a.value});
    for (const auto& a : alpha.column(j).entries())
      second.push_back({ext.i_index(a.index) * hd + ext.g_index(i), c * a.value});
  }
  return {SparseVector::from_entries(hd * hd, std::move(first)), SparseVector::from_entries(hd * hd, std::move(second))};
}

SparseVector balanced_tensor(const AbelianExtension& ext, const SparseMatrix& alpha) {
  auto [a, b] = balanced_tensor_parts(ext, alpha);
  return a + b;
}

bool is_h_invariant(const AbelianExtension& ext, const SparseVector& v, std::size_t k) {
  for (std::size_t x = 0; x < ext.h.dim(); ++x)
    if (!act_on_tensor(ext, x, v, k).is_zero()) return false;
  return true;
}

bool is_g_invariant(const AbelianExtension& ext, const SparseVector& v, std::size_t k) {
  for (std::size_t x = 0; x < ext.g_dim(); ++x)
    if (!act_on_tensor(ext, ext.g_index(x), v, k).is_zero()) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Series and reports

namespace {

Series k_series(const std::vector<KDegree>& ks) {
  Series out(ks.size() + 1, 0);
  for (const auto& k : ks) out[k.degree + 1] = k.dim;
  return out;
}

}  // namespace

Series structure_series(const AbelianExtension& ext, std::size_t N) {
  const auto ks = N == 0 ? std::vector<KDegree>{} : compute_K_range(ext, N - 1);
  return tensor_algebra_series(invariant_wedge_dims(ext, N), k_series(ks), N);
}

bool StructureReport::betti_match() const {
  for (const auto& r : rows)
    if (!r.match()) return false;
  return !rows.empty();
}

bool StructureReport::hypothesis_a_ok() const {
  for (const auto& h : hypothesis_a)
    if (!h.ok()) return false;
  return true;
}

StructureReport verify_structure_theorem(const AbelianExtension& ext, std::size_t N, std::size_t hyp_a_max) {
  StructureReport r;
  r.name = ext.h.name();
  r.max_degree = N;
  r.invariant_dims = invariant_wedge_dims(ext, N);
  const auto ks = N == 0 ? std::vector<KDegree>{} : compute_K_range(ext, N - 1);
  for (const auto& k : ks) {
    r.k_dims.push_back(k.dim);
    if (k.dim > 0 && k.degree + 1 <= hyp_a_max) r.hypothesis_a.push_back(hypothesis_A_check(ext, k));
  }
  r.predicted = tensor_algebra_series(r.invariant_dims, k_series(ks), N);
  r.direct = leibniz_betti(ext.h, N);
  for (std::size_t n = 0; n <= N; ++n) r.rows.push_back({n, r.direct[n], r.predicted[n]});
  return r;
}

HRReport verify_HR_formula(const AbelianExtension& ext, std::size_t n) {
  HRReport r;
  r.degree = n;
  const auto cr = cr_complex(ext.h, n + 2);
  r.direct = homology(cr, n + 1).dim();

  const auto hg = homology(lie_complex(ext.g, n + 4), n + 3);
  r.delta_source = hg.dim();
  if (hg.dim() > 0) {
    const auto inc = wedge_inclusion_base(ext, n + 3).map(n + 3);
    std::vector<SparseVector> pushed;
    for (const auto& z : hg.representatives()) pushed.push_back(inc.apply(z));
    r.delta_part = rank(connecting_delta_lie(ext.h, n + 2, pushed).matrix);
  }

  const auto lie_g = lie_betti(ext.g, n + 1);
  for (std::size_t i = 0; i <= n + 1; ++i) r.k_part += compute_K(ext, n + 1 - i).dim * lie_g[i];
  return r;
}

SplittingReport splitting_check(const AbelianExtension& ext, std::size_t n) {
  SplittingReport r;
  r.degree = n;
  const auto full = ideal_coeff_complex(ext, n + 1);
  r.invariant_homology_dim = invariant_homology(full, ideal_coeff_g_action(ext, n + 1), n).dim();
  const auto wedge_inv = n + 1 <= ext.i_dim() ? invariants(wedge_rep(ext.rep, n + 1)) : Subspace(0);
  r.wedge_invariant_dim = wedge_inv.dim();
  r.k_dim = compute_K(ext, n).dim;
  if (wedge_inv.dim() == 0) {
    r.zeta_injective = true;
    return r;
  }
  const auto h = homology(full, n);
  const auto z = zeta_matrix(ext, n);
  std::vector<SparseVector> classes;
  for (const auto& w : wedge_inv.basis()) {
    auto c = SparseVector::from_dense(h.coordinates(z.apply(w)));
    if (c.dim() != h.dim()) c = SparseVector(h.dim());
    classes.push_back(std::move(c));
  }
  r.zeta_injective = rank(SparseMatrix::from_columns(h.dim(), std::move(classes))) == wedge_inv.dim();
  return r;
}

namespace {

std::string join(const Series& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

}  // namespace

std::string to_text(const StructureReport& r) {
  std::ostringstream os;
  os << "structure " << r.name << " N=" << r.max_degree << "\n";
  os << "invariants " << join(r.invariant_dims) << "\n";
  os << "K " << join(r.k_dims) << "\n";
  os << "degree direct predicted match\n";
  for (const auto& row : r.rows)
    os << row.degree << " " << row.direct << " " << row.predicted << " " << (row.match() ? "yes" : "NO") << "\n";
  for (const auto& h : r.hypothesis_a) {
    os << "hypothesis A K_" << h.degree << ":";
    for (bool b : h.found) os << (b ? " found" : " missing");
    os << "\n";
  }
  os << (r.ok() ? "ok" : "FAILED") << "\n";
  return os.str();
}

std::string to_text(const HRReport& r) {
  std::ostringstream os;
  os << "HR_" << r.degree << " direct=" << r.direct << " delta=" << r.delta_part << " (of " << r.delta_source
     << ") K=" << r.k_part << " predicted=" << r.predicted() << " " << (r.match() ? "match" : "MISMATCH") << "\n";
  return os.str();
}

}  // namespace leibniz
