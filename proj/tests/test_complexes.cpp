#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "leibniz/catalog.hpp"
#include "leibniz/complexes.hpp"
#include "leibniz/homology.hpp"
#include "oracle.hpp"

using namespace leibniz;
using oracle::Chain;
using OWord = oracle::Word;

namespace {

std::vector<OWord> coeff_words(int m, int d, int k) {
  std::vector<OWord> out;
  for (int x = 0; x < m; ++x)
    for (auto w : oracle::wedge_words(d, k)) {
      w.insert(w.begin(), x);
      out.push_back(w);
    }
  return out;
}

std::function<oracle::Vec(int, int)> action_of(const Representation& r) {
  return [r](int a, int m) {
    oracle::Vec out;
    for (const auto& e : r.action(static_cast<std::size_t>(a)).column(static_cast<std::size_t>(m)).entries())
      out[static_cast<int>(e.index)] = e.value;
    return out;
  };
}

SparseMatrix oracle_coeff_boundary(const LieAlgebra& L, const Representation& M, int k) {
  const int m = static_cast<int>(M.dim()), d = static_cast<int>(L.dim());
  if (k == 0) return SparseMatrix(0, static_cast<std::size_t>(m));
  auto br = oracle::bracket_of(L);
  auto act = action_of(M);
  return oracle::matrix(coeff_words(m, d, k), coeff_words(m, d, k - 1),
                        [&](const OWord& w) { return oracle::coeff_d(br, act, w); });
}

Rational factorial(int n) {
  Rational f(1);
  for (int i = 2; i <= n; ++i) f *= Rational(i);
  return f;
}

int perm_sign(const std::vector<int>& p) {
  int s = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

// ε_n over words: b ⊗ a_1 ∧ ... ∧ a_n -> (1/n!) Σ sgn σ b ⊗ a_σ1 ⊗ ... (ideal letters shifted by g).
SparseMatrix oracle_epsilon(const AbelianExtension& ext, int n) {
  const int hd = static_cast<int>(ext.h.dim()), gd = static_cast<int>(ext.g_dim()), d = static_cast<int>(ext.i_dim());
  return oracle::matrix(coeff_words(hd, d, n), oracle::tensor_words(hd, n + 1), [&](const OWord& w) {
    Chain out;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
      OWord v{w[0]};
      for (int i : p) v.push_back(w[static_cast<std::size_t>(i) + 1] + gd);
      oracle::add(out, v, Rational(perm_sign(p)) / factorial(n));
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  });
}

// ζ over words: a_0 ∧ ... ∧ a_n -> 1/(n+1) Σ (-1)^i a_i ⊗ (... â_i ...).
SparseMatrix oracle_zeta(const AbelianExtension& ext, int n) {
  const int hd = static_cast<int>(ext.h.dim()), gd = static_cast<int>(ext.g_dim()), d = static_cast<int>(ext.i_dim());
  return oracle::matrix(oracle::wedge_words(d, n + 1), coeff_words(hd, d, n), [&](const OWord& w) {
    Chain out;
    for (int i = 0; i <= n; ++i) {
      OWord v{w[static_cast<std::size_t>(i)] + gd};
      for (int j = 0; j <= n; ++j)
        if (j != i) v.push_back(w[static_cast<std::size_t>(j)]);
      oracle::add(out, v, Rational(i % 2 == 0 ? 1 : -1, n + 1));
    }
    return out;
  });
}

std::vector<std::string> extension_names() {
  return {"sl2-affine", "so3-affine", "sp1-affine", "reductive-sl2-d1", "reductive-sl2-d2"};
}

}  // namespace

TEST_CASE("Lie boundary matches the oracle") {
  auto sl2 = catalog_entry("sl2").algebra;
  for (int k = 0; k <= 3; ++k) {
    CHECK(lie_boundary(sl2, static_cast<std::size_t>(k)) == oracle::wedge_boundary(oracle::sl2_bracket, 3, k));
  }
  for (const auto& name : {"so3-affine", "sl3", "sp1-affine"}) {
    auto g = catalog_entry(name).algebra;
    auto br = oracle::bracket_of(g);
    for (int k = 0; k <= 4; ++k)
      CHECK_MESSAGE(lie_boundary(g, static_cast<std::size_t>(k)) == oracle::wedge_boundary(br, static_cast<int>(g.dim()), k),
                    name << " degree " << k);
  }
}

TEST_CASE("Lie boundary of sl2 in low degree") {
  auto sl2 = catalog_entry("sl2").algebra;
  // d(e ∧ f) = h, d(e ∧ h) = -2e, d(f ∧ h) = 2f
  auto d2 = lie_boundary(sl2, 2);
  CHECK(d2.at(2, 0) == Rational(1));
  CHECK(d2.at(0, 1) == Rational(-2));
  CHECK(d2.at(1, 2) == Rational(2));
  CHECK(lie_boundary(sl2, 1).is_zero());
  CHECK(lie_boundary(sl2, 3).is_zero());
}

TEST_CASE("Leibniz boundary matches the oracle") {
  auto sl2 = catalog_entry("sl2").algebra;
  for (int k = 0; k <= 4; ++k)
    CHECK(leibniz_boundary(sl2, static_cast<std::size_t>(k)) == oracle::tensor_boundary(oracle::sl2_bracket, 3, k));
  for (const auto& name : {"sl2-affine", "so3-affine"}) {
    auto g = catalog_entry(name).algebra;
    auto br = oracle::bracket_of(g);
    for (int k = 0; k <= 3; ++k)
      CHECK_MESSAGE(leibniz_boundary(g, static_cast<std::size_t>(k)) ==
                        oracle::tensor_boundary(br, static_cast<int>(g.dim()), k),
                    name << " degree " << k);
  }
}

TEST_CASE("Leibniz boundary keeps order: d(x ⊗ y) = [x, y]") {
  auto sl2 = catalog_entry("sl2").algebra;
  auto d2 = leibniz_boundary(sl2, 2);
  // columns: e⊗f is index 1, f⊗e is index 3
  CHECK(d2.column(1) == SparseVector::unit(3, 2));
  CHECK(d2.column(3) == SparseVector::unit(3, 2, Rational(-1)));
}

TEST_CASE("coefficient boundary matches the oracle") {
  auto sl2 = catalog_entry("sl2").algebra;
  for (int k = 0; k <= 3; ++k)
    CHECK(coeff_boundary(sl2, adjoint_rep(sl2), static_cast<std::size_t>(k)) ==
          oracle_coeff_boundary(sl2, adjoint_rep(sl2), k));
  auto v = sl(2).standard;
  for (int k = 0; k <= 3; ++k)
    CHECK(coeff_boundary(sl2, v, static_cast<std::size_t>(k)) == oracle_coeff_boundary(sl2, v, k));
  for (const auto& name : extension_names()) {
    auto ext = *catalog_entry(name).extension;
    auto c = ideal_coeff_complex(ext, 3);
    for (int k = 0; k <= 3; ++k)
      CHECK_MESSAGE(c.d(static_cast<std::size_t>(k)) == oracle_coeff_boundary(ext.ideal(), ideal_module(ext), k), name);
  }
}

TEST_CASE("coefficient complex of sl2-affine in low degree") {
  auto ext = *catalog_entry("sl2-affine").extension;
  auto c = ideal_coeff_complex(ext, 2);
  const auto& idx = *c.indexer(1);
  // d(h ⊗ d1) = [h, d1] = d1
  auto col = *idx.index(Word{2, 0});
  CHECK(c.d(1).column(col) == SparseVector::unit(5, 3));
  // degree-1 boundary is minus the module action: d(m ⊗ a) = -a.m
  auto M = ideal_module(ext);
  for (std::size_t m = 0; m < 5; ++m)
    for (std::size_t a = 0; a < 2; ++a)
      CHECK(c.d(1).column(*idx.index(Word{static_cast<std::uint32_t>(m), static_cast<std::uint32_t>(a)})) ==
            M.action(a).column(m).scaled(Rational(-1)));
}

TEST_CASE("d squared vanishes on catalog complexes") {
  for (const auto& name : catalog_names()) {
    auto e = catalog_entry(name);
    const std::size_t N = e.algebra.dim() > 8 ? 3 : 4;
    CHECK_MESSAGE(!lie_complex(e.algebra, N + 1).find_d_squared_failure(), name);
    CHECK_MESSAGE(!leibniz_complex(e.algebra, N).find_d_squared_failure(), name);
    CHECK_MESSAGE(!adjoint_complex(e.algebra, N).find_d_squared_failure(), name);
    if (e.extension) CHECK_MESSAGE(!ideal_coeff_complex(*e.extension, N).find_d_squared_failure(), name);
  }
}

TEST_CASE("find_d_squared_failure detects a broken bracket") {
  LieAlgebra g({"e", "f", "h"});
  g.set_bracket(0, 1, SparseVector::unit(3, 2));
  g.set_bracket(2, 0, SparseVector::unit(3, 0, Rational(3)));
  g.set_bracket(2, 1, SparseVector::unit(3, 1, Rational(-2)));
  CHECK(lie_complex(g, 3).find_d_squared_failure().has_value());
}

TEST_CASE("chain complex dimensions") {
  auto sl2 = catalog_entry("sl2").algebra;
  CHECK(lie_complex(sl2, 3).dims() == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(leibniz_complex(sl2, 3).dims() == std::vector<std::size_t>{1, 3, 9, 27});
  CHECK(adjoint_complex(sl2, 3).dims() == std::vector<std::size_t>{3, 9, 9, 3});
  auto ext = *catalog_entry("so3-affine").extension;
  CHECK(ideal_coeff_complex(ext, 3).dims() == std::vector<std::size_t>{6, 18, 18, 6});
}

TEST_CASE("projections agree with word-level maps") {
  auto sl2 = catalog_entry("sl2").algebra;
  auto pi = proj_pi(sl2, 2);
  // π(h ⊗ e ∧ f) = h ∧ e ∧ f = e ∧ f ∧ h
  CHECK(pi.map(2).column(*pi.source().indexer(2)->index(Word{2, 0, 1})) == SparseVector::unit(1, 0));
  // π(e ⊗ f ∧ h) = e ∧ f ∧ h, π(f ⊗ e ∧ h) = -e ∧ f ∧ h
  CHECK(pi.map(2).column(*pi.source().indexer(2)->index(Word{0, 1, 2})) == SparseVector::unit(1, 0));
  CHECK(pi.map(2).column(*pi.source().indexer(2)->index(Word{1, 0, 2})) == SparseVector::unit(1, 0, Rational(-1)));
  // π(e ⊗ e) = 0
  CHECK(pi.map(1).column(*pi.source().indexer(1)->index(Word{0, 0})).is_zero());

  auto pp = proj_pi_prime(sl2, 2);
  const auto& t2 = *pp.source().indexer(2);
  CHECK(pp.map(2).column(*t2.index(Word{0, 1})) == SparseVector::unit(3, 0));
  CHECK(pp.map(2).column(*t2.index(Word{1, 0})) == SparseVector::unit(3, 0, Rational(-1)));
  CHECK(pp.map(2).column(*t2.index(Word{0, 0})).is_zero());
  CHECK(pp.map(1) == SparseMatrix::identity(3));

  for (const auto& name : {"sl2", "so3-affine", "reductive-sl2-d1"}) {
    auto g = catalog_entry(name).algebra;
    const int d = static_cast<int>(g.dim());
    auto p = proj_pi(g, 3);
    auto q = proj_pi_prime(g, 3);
    auto t = proj_tensor_to_coeff(g, 3);
    for (int n = 0; n <= 3; ++n) {
      auto sort_map = [](const OWord& w) {
        Chain c;
        OWord v = w;
        int s = oracle::sort_sign(v);
        if (s != 0) oracle::add(c, v, Rational(s));
        return c;
      };
      CHECK(p.map(n) == oracle::matrix(coeff_words(d, d, n), oracle::wedge_words(d, n + 1), sort_map));
      CHECK(q.map(n) == oracle::matrix(oracle::tensor_words(d, n), oracle::wedge_words(d, n), sort_map));
      if (n >= 1)
        CHECK(t.map(n) == oracle::matrix(oracle::tensor_words(d, n), coeff_words(d, d, n - 1), [](const OWord& w) {
                Chain c;
                OWord v(w.begin() + 1, w.end());
                int s = oracle::sort_sign(v);
                v.insert(v.begin(), w[0]);
                if (s != 0) oracle::add(c, v, Rational(s));
                return c;
              }));
      // π' factors through g ⊗ Λ(g)
      if (n >= 1) CHECK(q.map(n) == p.map(n - 1) * t.map(n));
    }
    CHECK_MESSAGE(!p.find_commute_failure(), name);
    CHECK_MESSAGE(!q.find_commute_failure(), name);
    CHECK_MESSAGE(!t.find_commute_failure(), name);
  }
}

TEST_CASE("kernel subcomplexes") {
  auto sl2 = catalog_entry("sl2").algebra;
  auto rel = ker_subcomplex(proj_pi_prime(sl2, 3), 2);
  CHECK(rel.shift() == 2);
  CHECK(rel.dim(2) == 6);  // Λ² and S² split 9 = 3 + 6
  CHECK(rel.dim(0) == 0);
  CHECK(rel.dim(1) == 0);
  CHECK(!rel.find_d_squared_failure());
  for (std::size_t n = 0; n <= 3; ++n) CHECK(rel.ambient_dim(n) == leibniz_complex(sl2, 3).dim(n));

  auto cr = ker_subcomplex(proj_pi(sl2, 2), 1);
  CHECK(cr.dims() == std::vector<std::size_t>{3 - 3, 9 - 3, 9 - 1});

  // abelian algebra: kernel of π has dim d C(d,n) - C(d,n+1) and zero differential
  LieAlgebra ab({"x", "y", "z"});
  auto k = ker_subcomplex(proj_pi(ab, 3), 1);
  for (std::size_t n = 0; n <= 3; ++n) {
    CHECK(k.dim(n) == 3 * oracle::choose(3, n) - oracle::choose(3, n + 1));
    CHECK(k.d(n).is_zero());
  }

  // the identity map has zero kernel
  auto c = lie_complex(sl2, 3);
  std::vector<std::optional<SparseMatrix>> ids;
  for (std::size_t n = 0; n <= 3; ++n) ids.push_back(SparseMatrix::identity(c.dim(n)));
  auto zero = ker_subcomplex(ChainMap(c, c, 0, ids), 0);
  for (std::size_t n = 0; n <= 3; ++n) CHECK(zero.dim(n) == 0);
}

TEST_CASE("zeta") {
  for (const auto& name : extension_names()) {
    auto ext = *catalog_entry(name).extension;
    const std::size_t d = ext.i_dim();
    for (std::size_t n = 0; n + 1 <= d && n <= 3; ++n)
      CHECK_MESSAGE(zeta_matrix(ext, n) == oracle_zeta(ext, static_cast<int>(n)), name << " n=" << n);
    auto z = zeta(ext, 3);
    CHECK_MESSAGE(!z.find_commute_failure(), name);
  }
  auto ext = *catalog_entry("so3-affine").extension;
  // n = 0: ζ(a) = a in h
  CHECK(zeta_matrix(ext, 0).column(1) == SparseVector::unit(6, 4));
  // n = 1: ζ(a0 ∧ a1) = ½ (a0 ⊗ a1 - a1 ⊗ a0)
  auto z1 = zeta_matrix(ext, 1);
  const auto cidx = BasisIndexer::coeff(6, 3, 1);
  CHECK(z1.column(0).nnz() == 2);
  CHECK(z1.at(*cidx.index(Word{3, 1}), 0) == Rational(1, 2));
  CHECK(z1.at(*cidx.index(Word{4, 0}), 0) == Rational(-1, 2));
}

TEST_CASE("pi after zeta composed with the ideal inclusion is the wedge inclusion") {
  for (const auto& name : extension_names()) {
    auto ext = *catalog_entry(name).extension;
    const std::size_t N = std::min<std::size_t>(3, ext.i_dim());
    auto j = ideal_inclusion(ext, N);
    auto p = proj_pi(ext.h, N);
    auto z = zeta(ext, N);
    auto w = wedge_inclusion_ideal(ext, N + 1);
    for (std::size_t k = 1; k <= N + 1; ++k) CHECK_MESSAGE(p.map(k - 1) * j.map(k - 1) * z.map(k) == w.map(k), name);
  }
}

TEST_CASE("epsilon") {
  for (const auto& name : extension_names()) {
    auto ext = *catalog_entry(name).extension;
    for (std::size_t n = 0; n <= 3; ++n)
      CHECK_MESSAGE(epsilon_matrix(ext, n) == oracle_epsilon(ext, static_cast<int>(n)), name << " n=" << n);
    auto e = epsilon(ext, 3);
    CHECK_MESSAGE(!e.find_commute_failure(), name);
    // projection back to h ⊗ Λ(h) recovers the inclusion
    auto t = proj_tensor_to_coeff(ext.h, 4);
    auto j = ideal_inclusion(ext, 3);
    for (std::size_t n = 0; n <= 3; ++n) CHECK_MESSAGE(t.map(n + 1) * e.map(n) == j.map(n), name);
  }
  auto ext = *catalog_entry("sl2-affine").extension;
  // ε_0 is the identity of h, ε_2(x ⊗ a ∧ b) = ½(x⊗a⊗b - x⊗b⊗a)
  CHECK(epsilon_matrix(ext, 0) == SparseMatrix::identity(5));
  auto e2 = epsilon_matrix(ext, 2);
  const auto t3 = BasisIndexer::tensor(5, 3);
  CHECK(e2.column(0).nnz() == 2);
  CHECK(e2.at(*t3.index(Word{0, 3, 4}), 0) == Rational(1, 2));
  CHECK(e2.at(*t3.index(Word{0, 4, 3}), 0) == Rational(-1, 2));
}

TEST_CASE("skew-symmetrization") {
  CHECK(skew_symmetrize(4, 1) == SparseMatrix::identity(4));
  auto s2 = skew_symmetrize(3, 2);
  CHECK(s2.at(1, 0) == Rational(1, 2));
  CHECK(s2.at(3, 0) == Rational(-1, 2));
  auto sl2 = catalog_entry("sl2").algebra;
  auto q = proj_pi_prime(sl2, 3);
  for (std::size_t k = 0; k <= 3; ++k) CHECK(q.map(k) * skew_symmetrize(3, k) == SparseMatrix::identity(oracle::choose(3, k)));
}

TEST_CASE("equivariance of zeta and epsilon") {
  for (const auto& name : extension_names()) {
    auto ext = *catalog_entry(name).extension;
    auto coeff = ideal_coeff_g_action(ext, 3);
    auto wedge = wedge_action(ext.rep, 4);
    auto tens = tensor_g_action(ext, 4);
    for (std::size_t x = 0; x < ext.g_dim(); ++x) {
      for (std::size_t n = 0; n + 1 <= std::min<std::size_t>(ext.i_dim(), 3); ++n)
        CHECK_MESSAGE(zeta_matrix(ext, n) * wedge[n + 1].action(x) == coeff[n].action(x) * zeta_matrix(ext, n), name);
      for (std::size_t n = 0; n <= 3; ++n)
        CHECK_MESSAGE(epsilon_matrix(ext, n) * coeff[n].action(x) == tens[n + 1].action(x) * epsilon_matrix(ext, n), name);
    }
  }
}

TEST_CASE("complex actions commute with d") {
  auto ext = *catalog_entry("so3-affine").extension;
  CHECK(!find_action_commute_failure(ideal_coeff_complex(ext, 3), ideal_coeff_g_action(ext, 3)));
  CHECK(!find_action_commute_failure(leibniz_complex(ext.h, 3), tensor_h_action(ext, 3)));
  CHECK(!find_action_commute_failure(lie_complex(ext.h, 3), wedge_action(adjoint_rep(ext.h), 3)));
}

TEST_CASE("invariant subcomplexes") {
  auto sl2 = catalog_entry("sl2").algebra;
  // trivial action keeps everything
  auto c = lie_complex(sl2, 3);
  ComplexAction triv;
  for (std::size_t n = 0; n <= 3; ++n) triv.push_back(trivial_rep(sl2, c.dim(n)));
  CHECK(invariant_subcomplex(c, triv).dims() == c.dims());

  auto ext = *catalog_entry("sl2-affine").extension;
  auto wi = invariant_subcomplex(lie_complex(ext.ideal(), 2), wedge_action(ext.rep, 2));
  CHECK(wi.dims() == std::vector<std::size_t>{1, 0, 1});

  auto so3 = *catalog_entry("so3-affine").extension;
  auto ci = invariant_subcomplex(ideal_coeff_complex(so3, 2), ideal_coeff_g_action(so3, 2));
  CHECK(ci.dim(1) == 2);  // Hom_so3 of so3 and R^3 into R^3 ⊗ R^3
  CHECK(!ci.find_d_squared_failure());
  auto inc = subcomplex_inclusion(ci, ideal_coeff_complex(so3, 2));
  CHECK(!inc.find_commute_failure());

  // an action that does not commute with d is refused
  auto wrong = wedge_action(adjoint_rep(sl2), 3);
  std::swap(wrong[1], wrong[2]);
  CHECK_THROWS_AS(invariant_subcomplex(lie_complex(sl2, 3), wrong), std::invalid_argument);
  auto bad = wedge_action(sl(2).standard, 2);
  CHECK_THROWS_AS(invariant_subcomplex(lie_complex(sl2, 2), bad), std::invalid_argument);
}
