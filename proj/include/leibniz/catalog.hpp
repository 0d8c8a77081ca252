#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/lie_algebra.hpp"

namespace leibniz {

/// A Lie algebra realized by matrices; `standard` is the action on column
/// vectors.
struct MatrixAlgebra {
  LieAlgebra algebra;
  std::vector<SparseMatrix> matrices;
  Representation standard;
};

/// Closes a list of matrices under commutators by solving for structure
/// constants. Throws std::invalid_argument if the span is not closed or the
/// matrices are dependent.
MatrixAlgebra matrix_algebra(std::string name, std::vector<std::string> labels, std::vector<SparseMatrix> matrices,
                             std::vector<std::string> space_labels);

/// E_ij (0-based) in gl(n).
SparseMatrix elementary(std::size_t n, std::size_t i, std::size_t j);

/// sl(n): E_ij (i != j) then H_i = E_ii - E_{i+1,i+1}; for n = 2 the basis is e, f, h.
MatrixAlgebra sl(std::size_t n);
/// so(n): α_ij = E_ij - E_ji, i < j, lexicographic.
MatrixAlgebra so(std::size_t n);
/// sp(n) on R^{2n} with coordinates x_1..x_n, y_1..y_n, by the five families
/// x_k d/dy^k, y_k d/dx^k, x_i d/dy^j + x_j d/dy^i, y_i d/dx^j + y_j d/dx^i,
/// y_j d/dy^i - x_i d/dx^j.
MatrixAlgebra sp(std::size_t n);
/// so(3,1): α_12, α_13, α_23, β_14, β_24, β_34 with β_i4 = E_i4 + E_4i.
MatrixAlgebra so31();
/// sl_2(C) as a real algebra inside gl_4(R), basis v1..v6.
MatrixAlgebra sl2c_real();

struct CatalogEntry {
  std::string name;
  std::string description;
  LieAlgebra algebra;                          // h for extensions
  std::optional<AbelianExtension> extension;
  std::vector<Representation> representations;
  std::optional<std::vector<std::size_t>> expected_invariants;  // dim [Λ^k I]^g
  std::optional<std::vector<std::size_t>> expected_series;      // dim HL_k
};

/// g ⋉ R^n for a matrix algebra acting on its standard representation.
CatalogEntry affine(const MatrixAlgebra& m, std::string name);
/// sl_2(C) ⋉ R^4.
CatalogEntry poincare();
/// so(3,1) ⋉ R^4.
CatalogEntry affine_lorentz();
/// g ⊕ R^d with trivial action.
CatalogEntry reductive(const LieAlgebra& g, std::size_t d, std::string name = {});

std::vector<std::string> catalog_names();
/// Throws std::invalid_argument for an unknown name.
CatalogEntry catalog_entry(const std::string& name);

// Explicit chains. Tensor chains are in the tensor basis of h = so(n) ⋉ R^n
// (resp. so(3,1) ⋉ R^4); skew-symmetrization carries the 1/k! factor.

/// ω in h^{⊗(n-1)}.
SparseVector omega_so_n(std::size_t n);
/// λ in h^{⊗(n-1)}: the first shuffle sum of ω.
SparseVector lambda_so_n(std::size_t n);
/// γ in h^{⊗n}.
SparseVector gamma_so_n(std::size_t n);
/// β in h^{⊗(n-1)}.
SparseVector beta_so_n(std::size_t n);
/// The twelve-term so(3,1) chain with the displayed coefficients, wedges
/// skew-symmetrized, in h^{⊗3}. The coefficients refer to the vector-field
/// action [x_i d/dx^j, d/dx^k] = -δ_ik d/dx^j, i.e. h = so31_vector_field().
SparseVector omega_so31_displayed();
/// The same chain moved into the catalog realization (E_ij acting on column
/// vectors) by d/dx^4 -> -d/dx^4.
SparseVector omega_so31();
/// so(3,1) ⋉ R^4 with X acting on R^4 by -X^T.
AbelianExtension so31_vector_field();
/// ω_n = Σ dx^i ∧ dy^i in Λ²(R^{2n}).
SparseVector omega_sp(std::size_t n);

/// Change of basis φ : sp(1) -> sl(2) (columns are images of the sp(1)
/// basis in the e, f, h basis), solved from the matrix realizations.
SparseMatrix sp1_to_sl2();

}  // namespace leibniz
