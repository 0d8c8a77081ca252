#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/complexes.hpp"
#include "leibniz/linalg.hpp"

namespace leibniz {

/// One degree of homology: cycles, boundaries and a fixed complement whose
/// vectors serve as class representatives.
class HomologyGroup {
 public:
  HomologyGroup(std::size_t degree, Subspace cycles, Subspace boundaries)
      : degree_(degree), quotient_(cycles, boundaries) {}

  std::size_t degree() const { return degree_; }
  std::size_t dim() const { return quotient_.dim(); }
  const std::vector<SparseVector>& representatives() const { return quotient_.complement(); }
  const Subspace& cycles() const { return quotient_.cycles(); }
  const Subspace& boundaries() const { return quotient_.boundaries(); }
  /// Class coordinates of a cycle; throws std::invalid_argument otherwise.
  std::vector<Rational> coordinates(const SparseVector& v) const { return quotient_.coordinates(v); }
  bool is_boundary(const SparseVector& v) const { return quotient_.is_boundary(v); }

 private:
  std::size_t degree_;
  Quotient quotient_;
};

struct GradedHomology {
  std::string name;
  int shift = 0;
  std::vector<HomologyGroup> groups;  // degree 0 .. top
  std::vector<std::size_t> betti() const;
};

/// dim H_n from ranks only. Requires n + 1 <= c.top().
std::size_t betti(const ChainComplex& c, std::size_t n);
/// Betti numbers in degrees 0..upto (upto + 1 <= c.top()).
std::vector<std::size_t> betti_numbers(const ChainComplex& c, std::size_t upto);
/// Ranks of d(1) .. d(upto + 1), computed once each.
std::vector<std::size_t> boundary_ranks(const ChainComplex& c, std::size_t upto);

/// H_n with representatives. Throws std::out_of_range if n + 1 > c.top().
HomologyGroup homology(const ChainComplex& c, std::size_t n);
GradedHomology graded_homology(const ChainComplex& c, std::size_t upto);

/// HL_* of g through degree N, from ranks.
std::vector<std::size_t> leibniz_betti(const LieAlgebra& g, std::size_t N);
std::vector<std::size_t> lie_betti(const LieAlgebra& g, std::size_t N);

/// Matrix of f_* : H_n(S) -> H_{n+shift}(T) in the representative bases.
/// Throws std::logic_error if f sends a cycle to a non-cycle.
SparseMatrix induced_on_homology(const ChainMap& f, const HomologyGroup& source, const HomologyGroup& target);
SparseMatrix induced_on_homology(const ChainMap& f, std::size_t n);

/// δ : H_n^Lie(g) -> H^rel_{n-3}(g). Lifts along w_1∧...∧w_n -> w_1⊗...⊗w_n,
/// applies the Leibniz boundary and reads the class in Ker π'[2].
struct ConnectingMap {
  SparseMatrix matrix;   // target dim x source dim
  std::size_t source_dim = 0;
  std::size_t target_dim = 0;
};
ConnectingMap connecting_delta(const LieAlgebra& g, std::size_t n);
/// δ^Lie : H_{n+1}^Lie(g) -> HR_{n-2}(g), lifting along the section
/// w_0∧...∧w_n -> (1/(n+1)) Σ (-1)^i w_i ⊗ (w without w_i).
ConnectingMap connecting_delta_lie(const LieAlgebra& g, std::size_t n);
/// δ^Lie evaluated on the given cycles of Λ^{n+1}(g) instead of a homology basis.
ConnectingMap connecting_delta_lie(const LieAlgebra& g, std::size_t n, const std::vector<SparseVector>& cycles);

/// CR complex Ker π[1] of g through internal degree N.
ChainComplex cr_complex(const LieAlgebra& g, std::size_t N);
/// C^rel complex Ker π'[2] of g through internal degree N.
ChainComplex rel_complex(const LieAlgebra& g, std::size_t N);

/// H_n of the invariant subcomplex.
HomologyGroup invariant_homology(const ChainComplex& c, const ComplexAction& action, std::size_t n);

/// Compares dim H_n(C^g) with the dimension of the invariants of the action
/// induced on H_n(C).
struct InvariantCrossCheck {
  std::size_t degree;
  std::size_t subcomplex_dim;
  std::size_t induced_dim;
  bool match() const { return subcomplex_dim == induced_dim; }
};
InvariantCrossCheck invariant_cross_check(const ChainComplex& c, const ComplexAction& action, std::size_t n);

}  // namespace leibniz
