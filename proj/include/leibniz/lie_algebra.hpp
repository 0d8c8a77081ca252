#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "leibniz/linalg.hpp"
#include "leibniz/sparse.hpp"

namespace leibniz {

/// Finite-dimensional Lie algebra given by rational structure constants
/// [b_i, b_j] = sum_k c(i,j,k) b_k over a labeled basis. The table is stored
/// as given; check_algebra() decides whether it is actually a Lie algebra.
class LieAlgebra {
 public:
  LieAlgebra() = default;
  /// Abelian algebra on the given labels.
  explicit LieAlgebra(std::vector<std::string> labels, std::string name = {});

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Sets c(i,j,.) only.
  void set_bracket_raw(std::size_t i, std::size_t j, SparseVector value);
  /// Sets c(i,j,.) = value and c(j,i,.) = -value.
  void set_bracket(std::size_t i, std::size_t j, const SparseVector& value);

  const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  SparseVector bracket(const SparseVector& x, const SparseVector& y) const;

  /// Matrix of ad(b_i); column k is [b_i, b_k].
  SparseMatrix ad(std::size_t i) const;

  bool all_integer() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.labels_ == b.labels_ && a.table_ == b.table_;
  }

 private:
  std::vector<std::string> labels_;
  std::string name_;
  std::vector<SparseVector> table_;
};

/// Action of a Lie algebra on a vector space: one matrix per basis element
/// of the algebra, acting on column vectors.
class Representation {
 public:
  Representation() = default;
  Representation(LieAlgebra algebra, std::vector<std::string> space_labels, std::vector<SparseMatrix> action);

  const LieAlgebra& algebra() const { return algebra_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& space_labels() const { return labels_; }
  const std::vector<SparseMatrix>& action() const { return action_; }
  const SparseMatrix& action(std::size_t generator) const { return action_.at(generator); }

  friend bool operator==(const Representation&, const Representation&) = default;

 private:
  LieAlgebra algebra_;
  std::vector<std::string> labels_;
  std::vector<SparseMatrix> action_;
};

struct Violation {
  enum class Kind { antisymmetry, jacobi, representation };
  Kind kind;
  std::vector<std::size_t> indices;  // the offending pair or triple
  SparseVector defect;               // nonzero residual (vector or flattened matrix)
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  std::string to_text(const std::vector<std::string>& labels) const;
};

/// Exhaustive antisymmetry and Jacobi check over all basis pairs/triples.
ValidationReport check_algebra(const LieAlgebra& g);
/// Checks rho([x,y]) = rho(x)rho(y) - rho(y)rho(x) on all basis pairs, plus
/// matrix shapes.
ValidationReport check_representation(const Representation& rep);

/// Data of an Abelian extension 0 -> I -> h -> g -> 0 with h = g ⋉ I. In h
/// the basis of g comes first, followed by the basis of I.
struct AbelianExtension {
  LieAlgebra g;
  Representation rep;
  LieAlgebra h;

  std::size_t g_dim() const { return g.dim(); }
  std::size_t i_dim() const { return rep.dim(); }
  std::size_t g_index(std::size_t i) const { return i; }
  std::size_t i_index(std::size_t a) const { return g.dim() + a; }
  bool in_ideal(std::size_t h_index) const { return h_index >= g.dim(); }

  /// j : I -> h
  SparseMatrix inclusion() const;
  /// rho : h -> g
  SparseMatrix projection() const;
  /// The abelian Lie algebra I on the representation's labels.
  LieAlgebra ideal() const;
};

/// h = g ⋉ I with [g1 + a, g2 + b] = [g1, g2] + g1.b - g2.a. Throws
/// std::invalid_argument if g or rep fail validation.
AbelianExtension semidirect(const LieAlgebra& g, const Representation& rep, std::string name = {});

/// B(i,j) = trace(ad b_i ∘ ad b_j).
SparseMatrix killing_form(const LieAlgebra& g);

/// Common kernel of all generator matrices.
Subspace invariants(const Representation& rep);

Representation trivial_rep(const LieAlgebra& g, std::size_t dim);
Representation adjoint_rep(const LieAlgebra& g);
/// Derivation action on V^{⊗k}.
Representation tensor_rep(const Representation& rep, std::size_t k);
/// Derivation action on Λ^k V.
Representation wedge_rep(const Representation& rep, std::size_t k);
/// Contragredient action -rho(x)^T.
Representation dual_rep(const Representation& rep);
/// rho_V ⊗ 1 + 1 ⊗ rho_W, V-index major.
Representation tensor_product(const Representation& v, const Representation& w);
/// Pulls a representation of h back to g along the first g.dim() basis
/// vectors of h, which must span a copy of g.
Representation restrict_to(const Representation& rep, const LieAlgebra& g);

/// Basis of Hom_g(V, W) as W.dim x V.dim matrices, from (V* ⊗ W)^g.
/// Throws std::invalid_argument when V and W are over different algebras.
std::vector<SparseMatrix> equivariant_maps(const Representation& v, const Representation& w);
std::size_t equivariant_hom_dim(const LieAlgebra& g, const Representation& v, const Representation& w);

}  // namespace leibniz
