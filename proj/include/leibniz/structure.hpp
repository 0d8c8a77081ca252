#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/homology.hpp"
#include "leibniz/lie_algebra.hpp"

namespace leibniz {

using Series = std::vector<std::size_t>;

/// Truncated p(t) / (1 - k(t)) with k(0) = 0, coefficients 0..N.
Series tensor_algebra_series(const Series& p, const Series& k, std::size_t N);

/// dim [Λ^k(I)]^g for k = 0..N.
Series invariant_wedge_dims(const AbelianExtension& ext, std::size_t N);

/// K_n = Ker[H_n(I; h)^g -> H_{n+1}(h)], through π ∘ j on the g-invariant
/// subcomplex of h ⊗ Λ*(I).
struct KDegree {
  std::size_t degree = 0;
  std::size_t invariant_homology_dim = 0;   // dim H_n(I; h)^g
  std::size_t dim = 0;                      // dim K_n
  std::vector<SparseVector> representatives;  // cycles in h ⊗ Λ^n(I) coordinates
  SparseMatrix induced;                     // (π j)_* in representative bases
};
KDegree compute_K(const AbelianExtension& ext, std::size_t n);
std::vector<KDegree> compute_K_range(const AbelianExtension& ext, std::size_t upto);

/// Does ε(z) have an h-invariant representative in HL_{n+1}(h) for every
/// basis class z of K_n? Decided by an exact solve: ε(z) ∈ (h^{⊗(n+1)})^h + im d.
struct HypothesisAResult {
  std::size_t degree = 0;
  std::vector<bool> found;  // per K_n basis class
  bool ok() const;
};
HypothesisAResult hypothesis_A_check(const AbelianExtension& ext, const KDegree& k);
HypothesisAResult hypothesis_A_check(const AbelianExtension& ext, std::size_t n);

/// ω = Σ_{i,j} (B^{-1})_{ji} (b_j ⊗ α(b_i) + α(b_j) ⊗ b_i) in h ⊗ h, with B the
/// Killing form of g and α : g -> I given as an I.dim x g.dim matrix.
/// Throws std::invalid_argument if α is not equivariant or B is singular.
SparseVector balanced_tensor(const AbelianExtension& ext, const SparseMatrix& alpha);
/// The two sums of the balanced tensor separately (g ⊗ I part, I ⊗ g part).
std::pair<SparseVector, SparseVector> balanced_tensor_parts(const AbelianExtension& ext, const SparseMatrix& alpha);

/// Whether every h basis element annihilates v ∈ h^{⊗k} under the adjoint
/// derivation action.
bool is_h_invariant(const AbelianExtension& ext, const SparseVector& v, std::size_t k);
bool is_g_invariant(const AbelianExtension& ext, const SparseVector& v, std::size_t k);

/// Coefficients of Λ*(I)^g ⊗ T(K_*) with K_n placed in degree n + 1.
Series structure_series(const AbelianExtension& ext, std::size_t N);

struct DegreeComparison {
  std::size_t degree;
  std::size_t direct;
  std::size_t predicted;
  bool match() const { return direct == predicted; }
};

struct StructureReport {
  std::string name;
  std::size_t max_degree = 0;
  Series invariant_dims;
  std::vector<std::size_t> k_dims;   // dim K_n, n = 0..N-1
  Series predicted;
  Series direct;
  std::vector<DegreeComparison> rows;
  std::vector<HypothesisAResult> hypothesis_a;
  bool betti_match() const;
  bool hypothesis_a_ok() const;
  bool ok() const { return betti_match() && hypothesis_a_ok(); }
};
/// Predicted series vs. direct HL_*(h) through degree N. Hypothesis A is
/// checked for every nonzero K_n with n + 1 <= hyp_a_max.
StructureReport verify_structure_theorem(const AbelianExtension& ext, std::size_t N, std::size_t hyp_a_max = 3);

/// dim HR_n(h) directly vs. the sum of rank of δ^Lie on H_{n+3}(g) (pushed
/// into h) and Σ_i dim K_{n+1-i} · dim H_i(g).
struct HRReport {
  std::size_t degree = 0;
  std::size_t direct = 0;
  std::size_t delta_part = 0;     // rank of H_{n+3}(g) -> H_{n+3}(h) -> HR_n(h)
  std::size_t delta_source = 0;   // dim H_{n+3}(g)
  std::size_t k_part = 0;
  std::size_t predicted() const { return delta_part + k_part; }
  bool match() const { return direct == predicted(); }
};
HRReport verify_HR_formula(const AbelianExtension& ext, std::size_t n);

/// dim H_n(I; h)^g = dim [Λ^{n+1}(I)]^g + dim K_n and injectivity of ζ_*.
struct SplittingReport {
  std::size_t degree = 0;
  std::size_t invariant_homology_dim = 0;
  std::size_t wedge_invariant_dim = 0;
  std::size_t k_dim = 0;
  bool zeta_injective = false;
  bool ok() const { return invariant_homology_dim == wedge_invariant_dim + k_dim && zeta_injective; }
};
SplittingReport splitting_check(const AbelianExtension& ext, std::size_t n);

std::string to_text(const StructureReport& r);
std::string to_text(const HRReport& r);

}  // namespace leibniz
