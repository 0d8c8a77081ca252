#include "leibniz/catalog.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "leibniz/basis.hpp"
#include "leibniz/linalg.hpp"
#include "leibniz/structure.hpp"

namespace leibniz {

namespace {

SparseVector flatten(const SparseMatrix& m) {
  std::vector<Entry> entries;
  for (auto& [r, c, v] : m.triplets()) entries.push_back({c * m.rows() + r, v});
  return SparseVector::from_entries(m.rows() * m.cols(), std::move(entries));
}

std::vector<std::string> coordinate_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("d" + std::to_string(i));
  return out;
}

int inversion_sign(const std::vector<std::size_t>& seq) {
  int s = 1;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j)
      if (seq[i] > seq[j]) s = -s;
  return s;
}

// All (p, q) shuffles of 1..p+q as sequences (σ(1), ..., σ(p+q)).
std::vector<std::vector<std::size_t>> shuffles(std::size_t p, std::size_t q) {
  const auto n = p + q;
  std::vector<std::vector<std::size_t>> out;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(p), true);
  do {
    std::vector<std::size_t> first, second;
    for (std::size_t i = 0; i < n; ++i) (pick[i] ? first : second).push_back(i + 1);
    first.insert(first.end(), second.begin(), second.end());
    out.push_back(std::move(first));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

SparseVector tensor(const SparseVector& u, const SparseVector& v) {
  std::vector<Entry> out;
  for (const auto& a : u.entries())
    for (const auto& b : v.entries()) out.push_back({a.index * v.dim() + b.index, a.value * b.value});
  return SparseVector::from_entries(u.dim() * v.dim(), std::move(out));
}

// Skew-symmetrized wedge of h basis vectors, 1/k! normalization.
SparseVector skew(std::size_t hdim, const std::vector<std::size_t>& letters) {
  const auto k = letters.size();
  std::vector<std::size_t> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  Rational fact(1);
  for (std::size_t i = 2; i <= k; ++i) fact *= Rational(static_cast<std::int64_t>(i));
  const auto idx = BasisIndexer::tensor(hdim, k);
  std::vector<Entry> out;
  Word w(k);
  do {
    for (std::size_t i = 0; i < k; ++i) w[i] = static_cast<std::uint32_t>(letters[perm[i]]);
    out.push_back({*idx.index(w), Rational(inversion_sign(perm)) / fact});
  } while (std::next_permutation(perm.begin(), perm.end()));
  return SparseVector::from_entries(idx.size(), std::move(out));
}

// so(n) ⋉ R^n bookkeeping: α_ij for 1-based i, j and ∂_k.
struct SoLayout {
  std::size_t n;
  std::size_t m;  // dim so(n)
  std::size_t hdim() const { return m + n; }
  std::size_t alpha_index(std::size_t i, std::size_t j) const {  // i < j
    std::size_t idx = 0;
    for (std::size_t a = 1; a < i; ++a) idx += n - a;
    return idx + (j - i - 1);
  }
  SparseVector alpha(std::size_t i, std::size_t j) const {
    if (i == j) return SparseVector(hdim());
    if (i < j) return SparseVector::unit(hdim(), alpha_index(i, j));
    return SparseVector::unit(hdim(), alpha_index(j, i), Rational(-1));
  }
  std::size_t partial(std::size_t k) const { return m + k - 1; }
  SparseVector eps(const std::vector<std::size_t>& ks) const {
    std::vector<std::size_t> letters;
    for (auto k : ks) letters.push_back(partial(k));
    return skew(hdim(), letters);
  }
};

SoLayout so_layout(std::size_t n) {
  if (n < 3) throw std::invalid_argument("so(n) chains need n >= 3");
  return SoLayout{n, n * (n - 1) / 2};
}

SparseVector zero_tensor(std::size_t hdim, std::size_t k) { return SparseVector(BasisIndexer::tensor(hdim, k).size()); }

// Σ_{σ ∈ Sh(n-2,2)} sgn(σ) ε(∂σ1 ∧ ... ∧ ∂σ(n-2)) ⊗ α_{σ(n-1) σ(n)}
SparseVector second_sum(const SoLayout& L) {
  auto out = zero_tensor(L.hdim(), L.n - 1);
  for (const auto& s : shuffles(L.n - 2, 2)) {
    std::vector<std::size_t> head(s.begin(), s.end() - 2);
    out.add_scaled(tensor(L.eps(head), L.alpha(s[L.n - 2], s[L.n - 1])), Rational(inversion_sign(s)));
  }
  return out;
}

}  // namespace

SparseMatrix elementary(std::size_t n, std::size_t i, std::size_t j) {
  return SparseMatrix::from_triplets(n, n, {{i, j, Rational(1)}});
}

MatrixAlgebra matrix_algebra(std::string name, std::vector<std::string> labels, std::vector<SparseMatrix> matrices,
                             std::vector<std::string> space_labels) {
  if (labels.size() != matrices.size()) throw std::invalid_argument("one label per matrix required");
  const auto n = space_labels.size();
  std::vector<SparseVector> flat;
  for (const auto& m : matrices) {
    if (m.rows() != n || m.cols() != n) throw std::invalid_argument("matrix size does not match the space");
    flat.push_back(flatten(m));
  }
  const auto span = Subspace::from_basis(n * n, flat);
  LieAlgebra g(std::move(labels), name);
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    for (std::size_t j = i + 1; j < matrices.size(); ++j) {
      const auto c = matrices[i] * matrices[j] - matrices[j] * matrices[i];
      auto coords = span.coordinates(flatten(c));
      if (!coords) throw std::invalid_argument("matrices are not closed under commutators");
      auto v = SparseVector::from_dense(*coords);
      if (v.dim() != g.dim()) v = SparseVector(g.dim());
      g.set_bracket(i, j, v);
    }
  }
  Representation standard(g, std::move(space_labels), matrices);
  return MatrixAlgebra{std::move(g), std::move(matrices), std::move(standard)};
}

MatrixAlgebra sl(std::size_t n) {
  if (n < 2) throw std::invalid_argument("sl(n) needs n >= 2");
  std::vector<std::string> labels;
  std::vector<SparseMatrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
      mats.push_back(elementary(n, i, j));
    }
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    labels.push_back("H" + std::to_string(i + 1));
    mats.push_back(elementary(n, i, i) - elementary(n, i + 1, i + 1));
  }
  if (n == 2) labels = {"e", "f", "h"};
  return matrix_algebra("sl" + std::to_string(n), std::move(labels), std::move(mats), coordinate_labels(n));
}

MatrixAlgebra so(std::size_t n) {
  if (n < 3) throw std::invalid_argument("so(n) needs n >= 3");
  std::vector<std::string> labels;
  std::vector<SparseMatrix> mats;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      labels.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
      mats.push_back(elementary(n, i, j) - elementary(n, j, i));
    }
  }
  return matrix_algebra("so" + std::to_string(n), std::move(labels), std::move(mats), coordinate_labels(n));
}

MatrixAlgebra sp(std::size_t n) {
  if (n < 1) throw std::invalid_argument("sp(n) needs n >= 1");
  const auto N = 2 * n;
  auto x = [](std::size_t k) { return k - 1; };
  auto y = [n](std::size_t k) { return n + k - 1; };
  auto s = [](std::size_t k) { return std::to_string(k); };
  std::vector<std::string> labels;
  std::vector<SparseMatrix> mats;
  for (std::size_t k = 1; k <= n; ++k) {
    labels.push_back("P" + s(k));  // x_k d/dy^k
    mats.push_back(elementary(N, x(k), y(k)));
  }
  for (std::size_t k = 1; k <= n; ++k) {
    labels.push_back("Q" + s(k));  // y_k d/dx^k
    mats.push_back(elementary(N, y(k), x(k)));
  }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      labels.push_back("P" + s(i) + s(j));
      mats.push_back(elementary(N, x(i), y(j)) + elementary(N, x(j), y(i)));
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = i + 1; j <= n; ++j) {
      labels.push_back("Q" + s(i) + s(j));
      mats.push_back(elementary(N, y(i), x(j)) + elementary(N, y(j), x(i)));
    }
  for (std::size_t i = 1; i <= n; ++i)
    for (std::size_t j = 1; j <= n; ++j) {
      labels.push_back("R" + s(i) + s(j));  // y_j d/dy^i - x_i d/dx^j
      mats.push_back(elementary(N, y(j), y(i)) - elementary(N, x(i), x(j)));
    }
  std::vector<std::string> space;
  for (std::size_t k = 1; k <= n; ++k) space.push_back("dx" + s(k));
  for (std::size_t k = 1; k <= n; ++k) space.push_back("dy" + s(k));
  return matrix_algebra("sp" + s(n), std::move(labels), std::move(mats), std::move(space));
}

MatrixAlgebra so31() {
  auto E = [](std::size_t i, std::size_t j) { return elementary(4, i - 1, j - 1); };
  std::vector<SparseMatrix> mats{E(1, 2) - E(2, 1), E(1, 3) - E(3, 1), E(2, 3) - E(3, 2),
                                 E(1, 4) + E(4, 1), E(2, 4) + E(4, 2), E(3, 4) + E(4, 3)};
  return matrix_algebra("so31", {"a12", "a13", "a23", "b14", "b24", "b34"}, std::move(mats), coordinate_labels(4));
}

MatrixAlgebra sl2c_real() {
  auto E = [](std::size_t i, std::size_t j) { return elementary(4, i - 1, j - 1); };
  std::vector<SparseMatrix> mats{
      E(1, 1) + E(2, 2) - E(3, 3) - E(4, 4),
      E(1, 2) - E(2, 1) - E(3, 4) + E(4, 3),
      E(1, 3) + E(2, 4),
      E(1, 4) - E(2, 3),
      E(3, 1) + E(4, 2),
      E(3, 2) - E(4, 1),
  };
  return matrix_algebra("sl2c", {"v1", "v2", "v3", "v4", "v5", "v6"}, std::move(mats), coordinate_labels(4));
}

// ---------------------------------------------------------------------------
// Entries

namespace {

Series wedge_invariants_of(const Representation& rep) {
  Series out;
  for (std::size_t k = 0; k <= rep.dim(); ++k) out.push_back(invariants(wedge_rep(rep, k)).dim());
  return out;
}

}  // namespace

CatalogEntry affine(const MatrixAlgebra& m, std::string name) {
  auto ext = semidirect(m.algebra, m.standard, name);
  CatalogEntry e;
  e.name = name;
  e.description = m.algebra.name() + " acting on R^" + std::to_string(m.standard.dim());
  e.algebra = ext.h;
  e.representations = {m.standard};
  e.extension = std::move(ext);
  return e;
}

CatalogEntry poincare() {
  auto e = affine(sl2c_real(), "poincare");
  e.description = "sl2(C) as a real algebra acting on R^4";
  e.expected_invariants = Series{1, 0, 2, 0, 1};
  e.expected_series = tensor_algebra_series(*e.expected_invariants, Series{}, 8);
  return e;
}

CatalogEntry affine_lorentz() {
  auto e = affine(so31(), "affine-lorentz");
  e.description = "so(3,1) acting on R^4";
  e.expected_invariants = Series{1, 0, 0, 0, 1};
  return e;
}

CatalogEntry reductive(const LieAlgebra& g, std::size_t d, std::string name) {
  if (name.empty()) name = "reductive-" + g.name() + "-d" + std::to_string(d);
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= d; ++i) labels.push_back("t" + std::to_string(i));
  Representation triv(g, labels, std::vector<SparseMatrix>(g.dim(), SparseMatrix(d, d)));
  auto ext = semidirect(g, triv, name);
  CatalogEntry e;
  e.name = name;
  e.description = g.name() + " plus an abelian summand of dimension " + std::to_string(d);
  e.algebra = ext.h;
  e.representations = {triv};
  e.extension = std::move(ext);
  Series inv, all;
  std::size_t pw = 1;
  for (std::size_t k = 0; k <= 8; ++k) {
    if (k <= d) inv.push_back(binomial(d, k));
    all.push_back(pw);
    pw *= d;
  }
  e.expected_invariants = inv;
  e.expected_series = all;
  return e;
}

namespace {

CatalogEntry algebra_entry(const MatrixAlgebra& m, std::string description) {
  CatalogEntry e;
  e.name = m.algebra.name();
  e.description = std::move(description);
  e.algebra = m.algebra;
  e.representations = {m.standard, adjoint_rep(m.algebra)};
  return e;
}

CatalogEntry volume_affine(const MatrixAlgebra& m, std::string name) {
  auto e = affine(m, std::move(name));
  Series inv(m.standard.dim() + 1, 0);
  inv.front() = 1;
  inv.back() = 1;
  e.expected_invariants = inv;
  return e;
}

const std::map<std::string, std::function<CatalogEntry()>>& registry() {
  static const std::map<std::string, std::function<CatalogEntry()>> r = {
      {"sl2", [] { return algebra_entry(sl(2), "sl(2), basis e, f, h"); }},
      {"sl3", [] { return algebra_entry(sl(3), "sl(3)"); }},
      {"so3", [] { return algebra_entry(so(3), "so(3)"); }},
      {"so4", [] { return algebra_entry(so(4), "so(4)"); }},
      {"sp1", [] { return algebra_entry(sp(1), "sp(1)"); }},
      {"sp2", [] { return algebra_entry(sp(2), "sp(2)"); }},
      {"so31", [] { return algebra_entry(so31(), "so(3,1)"); }},
      {"sl2c", [] { return algebra_entry(sl2c_real(), "sl2(C) as a real algebra"); }},
      {"sl2-affine",
       [] {
         auto e = volume_affine(sl(2), "sl2-affine");
         e.expected_series = e.expected_invariants;
         return e;
       }},
      {"sl3-affine",
       [] {
         auto e = volume_affine(sl(3), "sl3-affine");
         e.expected_series = e.expected_invariants;
         return e;
       }},
      {"so3-affine",
       [] {
         auto e = volume_affine(so(3), "so3-affine");
         e.expected_series = tensor_algebra_series(*e.expected_invariants, Series{0, 0, 1}, 8);
         return e;
       }},
      {"so4-affine",
       [] {
         return volume_affine(so(4), "so4-affine");
       }},
      {"sp1-affine",
       [] {
         auto e = affine(sp(1), "sp1-affine");
         e.expected_invariants = Series{1, 0, 1};
         e.expected_series = e.expected_invariants;
         return e;
       }},
      {"sp2-affine",
       [] {
         auto e = affine(sp(2), "sp2-affine");
         e.expected_invariants = Series{1, 0, 1, 0, 1};
         e.expected_series = e.expected_invariants;
         return e;
       }},
      {"poincare", [] { return poincare(); }},
      {"affine-lorentz", [] { return affine_lorentz(); }},
      {"so31-affine",
       [] {
         auto e = affine_lorentz();
         e.name = "so31-affine";
         return e;
       }},
      {"reductive-sl2-d1", [] { return reductive(sl(2).algebra, 1, "reductive-sl2-d1"); }},
      {"reductive-sl2-d2", [] { return reductive(sl(2).algebra, 2, "reductive-sl2-d2"); }},
  };
  return r;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (const auto& [name, _] : registry()) out.push_back(name);
  return out;
}

CatalogEntry catalog_entry(const std::string& name) {
  const auto& r = registry();
  auto it = r.find(name);
  if (it == r.end()) throw std::invalid_argument("unknown catalog entry: " + name);
  auto e = it->second();
  if (e.extension && !e.expected_invariants) e.expected_invariants = wedge_invariants_of(e.extension->rep);
  return e;
}

// ---------------------------------------------------------------------------
// Chains

SparseVector lambda_so_n(std::size_t n) {
  const auto L = so_layout(n);
  auto out = zero_tensor(L.hdim(), n - 1);
  for (const auto& s : shuffles(2, n - 2)) {
    std::vector<std::size_t> tail(s.begin() + 2, s.end());
    out.add_scaled(tensor(L.alpha(s[0], s[1]), L.eps(tail)), Rational(inversion_sign(s)));
  }
  return out;
}

SparseVector beta_so_n(std::size_t n) {
  const auto L = so_layout(n);
  return second_sum(L).scaled(n % 2 == 1 ? Rational(1) : Rational(-1));  // (-1)^{n+1}
}

SparseVector omega_so_n(std::size_t n) { return lambda_so_n(n) + beta_so_n(n); }

SparseVector gamma_so_n(std::size_t n) {
  const auto L = so_layout(n);
  auto out = zero_tensor(L.hdim(), n);
  for (const auto& s : shuffles(n - 2, 2)) {
    std::vector<std::size_t> head(s.begin(), s.end() - 2);
    auto a = zero_tensor(L.hdim(), 2);
    for (std::size_t i = 0; i + 2 < n; ++i) a = a + tensor(L.alpha(s[i], s[n - 2]), L.alpha(s[i], s[n - 1]));
    out.add_scaled(tensor(L.eps(head), a), Rational(inversion_sign(s)));
  }
  return out;
}

SparseVector omega_so31_displayed() {
  const std::size_t hdim = 10;
  auto g = [&](std::size_t i) { return SparseVector::unit(hdim, i); };
  auto w = [&](std::size_t a, std::size_t b) { return skew(hdim, {6 + a - 1, 6 + b - 1}); };
  struct Term {
    int sign;
    std::size_t gen;
    std::size_t a, b;
  };
  // a12, a13, a23, b14, b24, b34 are h indices 0..5
  const Term terms[] = {{+1, 0, 3, 4}, {-1, 1, 2, 4}, {+1, 2, 1, 4}, {+1, 3, 2, 3}, {-1, 4, 1, 3}, {+1, 5, 1, 2}};
  auto out = zero_tensor(hdim, 3);
  for (const auto& t : terms) {
    out.add_scaled(tensor(g(t.gen), w(t.a, t.b)), Rational(t.sign));
    out.add_scaled(tensor(w(t.a, t.b), g(t.gen)), Rational(-t.sign));
  }
  return out;
}

SparseVector omega_so31() {
  // d4 -> -d4 intertwines -X^T with X on R^4 for X in so(3,1)
  const auto idx = BasisIndexer::tensor(10, 3);
  auto v = omega_so31_displayed();
  std::vector<Entry> out;
  for (const auto& e : v.entries()) {
    const auto w = idx.word(e.index);
    const auto odd = std::count(w.begin(), w.end(), 9u) % 2 == 1;
    out.push_back({e.index, odd ? -e.value : e.value});
  }
  return SparseVector::from_entries(v.dim(), std::move(out));
}

AbelianExtension so31_vector_field() {
  const auto m = so31();
  return semidirect(m.algebra, dual_rep(m.standard), "so31-vector-field");
}

SparseVector omega_sp(std::size_t n) {
  const auto idx = BasisIndexer::wedge(2 * n, 2);
  std::vector<Entry> out;
  for (std::size_t i = 0; i < n; ++i) {
    Word w{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(n + i)};
    out.push_back({*idx.index(w), Rational(1)});
  }
  return SparseVector::from_entries(idx.size(), std::move(out));
}

SparseMatrix sp1_to_sl2() {
  const auto a = sp(1);
  const auto b = sl(2);
  std::vector<SparseVector> flat;
  for (const auto& m : b.matrices) flat.push_back(flatten(m));
  const auto span = Subspace::from_basis(4, flat);
  std::vector<SparseVector> cols;
  for (const auto& m : a.matrices) {
    auto c = span.coordinates(flatten(m));
    if (!c) throw std::logic_error("sp(1) is not inside sl(2)");
    cols.push_back(SparseVector::from_dense(*c));
  }
  return SparseMatrix::from_columns(3, std::move(cols));
}

}  // namespace leibniz
