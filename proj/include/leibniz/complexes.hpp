#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/basis.hpp"
#include "leibniz/lie_algebra.hpp"
#include "leibniz/sparse.hpp"

namespace leibniz {

/// Chain complex C_0 <- C_1 <- ... <- C_N of finite-dimensional rational
/// vector spaces. d(n) : C_n -> C_{n-1}; d(0) is the zero map to 0.
///
/// Subcomplexes (kernels, invariants) keep the indexer of the complex they
/// were cut out of and an embedding whose columns are their basis vectors in
/// ambient coordinates. `shift` records the degree offset of shifted kernel
/// complexes: the conventional degree of internal degree n is n - shift.
class ChainComplex {
 public:
  struct Degree {
    std::size_t dim = 0;
    SparseMatrix d;                          // dim(n-1) x dim(n)
    std::optional<BasisIndexer> indexer;     // of the ambient chain group
    std::optional<SparseMatrix> embedding;   // ambient x dim, absent when ambient
  };

  ChainComplex() = default;
  ChainComplex(std::string name, std::vector<Degree> degrees, int shift = 0);

  const std::string& name() const { return data_->name; }
  std::size_t top() const { return data_->degrees.size() - 1; }
  int shift() const { return data_->shift; }
  std::size_t dim(std::size_t n) const { return at(n).dim; }
  std::vector<std::size_t> dims() const;
  const SparseMatrix& d(std::size_t n) const { return at(n).d; }
  const std::optional<BasisIndexer>& indexer(std::size_t n) const { return at(n).indexer; }
  const std::optional<SparseMatrix>& embedding(std::size_t n) const { return at(n).embedding; }
  std::size_t ambient_dim(std::size_t n) const;
  /// Chain coordinates -> ambient coordinates.
  SparseVector to_ambient(std::size_t n, const SparseVector& v) const;

  /// Largest n with d(n-1) d(n) != 0, or nullopt when d^2 = 0 throughout.
  std::optional<std::size_t> find_d_squared_failure() const;

 private:
  const Degree& at(std::size_t n) const;

  struct Data {
    std::string name;
    std::vector<Degree> degrees;
    int shift = 0;
  };
  std::shared_ptr<const Data> data_;
};

/// f_n : S_n -> T_{n + shift}, stored for every source degree n whose target
/// degree lies in the built range of the target.
class ChainMap {
 public:
  ChainMap() = default;
  ChainMap(ChainComplex source, ChainComplex target, int shift, std::vector<std::optional<SparseMatrix>> maps);

  const ChainComplex& source() const { return source_; }
  const ChainComplex& target() const { return target_; }
  int shift() const { return shift_; }
  bool defined(std::size_t n) const { return n < maps_.size() && maps_[n].has_value(); }
  const SparseMatrix& map(std::size_t n) const;

  /// First source degree n where d_T f_n != f_{n-1} d_S, if any.
  std::optional<std::size_t> find_commute_failure() const;

 private:
  ChainComplex source_;
  ChainComplex target_;
  int shift_ = 0;
  std::vector<std::optional<SparseMatrix>> maps_;
};

/// g ∘ f
ChainMap compose(const ChainMap& g, const ChainMap& f);

/// Single boundary matrices d_k, for callers that want one degree at a time.
SparseMatrix lie_boundary(const LieAlgebra& g, std::size_t k);
SparseMatrix leibniz_boundary(const LieAlgebra& g, std::size_t k);
SparseMatrix coeff_boundary(const LieAlgebra& L, const Representation& M, std::size_t k);

/// Λ*(g) through degree N.
ChainComplex lie_complex(const LieAlgebra& g, std::size_t N);
/// M ⊗ Λ*(L) with both sums; [m, a] is taken to be -rho(a) m.
ChainComplex coeff_complex(const LieAlgebra& L, const Representation& M, std::size_t N);
/// T(g) through degree N.
ChainComplex leibniz_complex(const LieAlgebra& g, std::size_t N);

/// g ⊗ Λ*(g) with the adjoint action.
ChainComplex adjoint_complex(const LieAlgebra& g, std::size_t N);
/// h ⊗ Λ*(I) for an Abelian extension.
ChainComplex ideal_coeff_complex(const AbelianExtension& ext, std::size_t N);
/// h viewed as a module over the Abelian algebra I by the bracket.
Representation ideal_module(const AbelianExtension& ext);

/// π : g ⊗ Λ^n(g) -> Λ^{n+1}(g), from adjoint_complex(g, N) to lie_complex(g, N+1).
ChainMap proj_pi(const LieAlgebra& g, std::size_t N);
/// π' : g^{⊗n} -> Λ^n(g), from leibniz_complex(g, N) to lie_complex(g, N).
ChainMap proj_pi_prime(const LieAlgebra& g, std::size_t N);
/// g^{⊗(n+1)} -> g ⊗ Λ^n(g), from leibniz_complex(g, N) to adjoint_complex(g, N-1).
ChainMap proj_tensor_to_coeff(const LieAlgebra& g, std::size_t N);

/// Kernel of f in every source degree, with the restricted differential.
/// Throws std::logic_error if the differential leaves the kernel.
ChainComplex ker_subcomplex(const ChainMap& f, int shift);

/// Inclusion j : h ⊗ Λ*(I) -> h ⊗ Λ*(h).
ChainMap ideal_inclusion(const AbelianExtension& ext, std::size_t N);
/// Λ*(I) -> Λ*(h) and Λ*(g) -> Λ*(h).
ChainMap wedge_inclusion_ideal(const AbelianExtension& ext, std::size_t N);
ChainMap wedge_inclusion_base(const AbelianExtension& ext, std::size_t N);

/// ζ : Λ^{n+1}(I) -> h ⊗ Λ^n(I) as a matrix.
SparseMatrix zeta_matrix(const AbelianExtension& ext, std::size_t n);
/// ζ as a chain map lie_complex(I, N+1) -> ideal_coeff_complex(ext, N), shift -1.
ChainMap zeta(const AbelianExtension& ext, std::size_t N);
/// ε_n : h ⊗ Λ^n(I) -> h^{⊗(n+1)} as a matrix.
SparseMatrix epsilon_matrix(const AbelianExtension& ext, std::size_t n);
/// ε as a chain map ideal_coeff_complex(ext, N) -> leibniz_complex(h, N+1), shift +1.
ChainMap epsilon(const AbelianExtension& ext, std::size_t N);
/// a_1 ∧ ... ∧ a_k -> (1/k!) Σ sgn(σ) a_σ(1) ⊗ ... ⊗ a_σ(k) on a space of dimension d.
SparseMatrix skew_symmetrize(std::size_t d, std::size_t k);

/// Per-degree action of an algebra on a complex.
using ComplexAction = std::vector<Representation>;

/// Actions of `on` (through a representation V of it on the underlying
/// space) on the standard complexes, degree by degree.
ComplexAction wedge_action(const Representation& v, std::size_t N);
ComplexAction tensor_action(const Representation& v, std::size_t N);
/// Action on M ⊗ Λ*(L) given the action on M and on L.
ComplexAction coeff_action(const Representation& m, const Representation& l, std::size_t N);
/// g acting on h ⊗ Λ*(I), h^{⊗*} and Λ*(h) for an extension.
ComplexAction ideal_coeff_g_action(const AbelianExtension& ext, std::size_t N);
ComplexAction tensor_g_action(const AbelianExtension& ext, std::size_t N);
ComplexAction tensor_h_action(const AbelianExtension& ext, std::size_t N);

/// Index of the first degree where the action does not commute with d.
std::optional<std::size_t> find_action_commute_failure(const ChainComplex& c, const ComplexAction& action);

/// Subcomplex of invariants; throws std::invalid_argument if the action does
/// not commute with d or has the wrong shape.
ChainComplex invariant_subcomplex(const ChainComplex& c, const ComplexAction& action);
/// Inclusion of an invariant (or any embedded) subcomplex into its ambient
/// complex.
ChainMap subcomplex_inclusion(const ChainComplex& sub, const ChainComplex& ambient);

}  // namespace leibniz
