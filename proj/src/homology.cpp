#include "leibniz/homology.hpp"

#include <stdexcept>

namespace leibniz {

std::vector<std::size_t> GradedHomology::betti() const {
  std::vector<std::size_t> out;
  for (const auto& g : groups) out.push_back(g.dim());
  return out;
}

std::vector<std::size_t> boundary_ranks(const ChainComplex& c, std::size_t upto) {
  if (upto + 1 > c.top()) throw std::out_of_range("complex built only through degree " + std::to_string(c.top()));
  std::vector<std::size_t> r(upto + 2, 0);
  for (std::size_t k = 1; k <= upto + 1; ++k) r[k] = rank(c.d(k));
  return r;
}

std::vector<std::size_t> betti_numbers(const ChainComplex& c, std::size_t upto) {
  const auto r = boundary_ranks(c, upto);
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= upto; ++n) out.push_back(c.dim(n) - r[n] - r[n + 1]);
  return out;
}

std::size_t betti(const ChainComplex& c, std::size_t n) {
  if (n + 1 > c.top()) throw std::out_of_range("complex built only through degree " + std::to_string(c.top()));
  const std::size_t below = n == 0 ? 0 : rank(c.d(n));
  return c.dim(n) - below - rank(c.d(n + 1));
}

namespace {

// Betti numbers through N without holding more than one boundary matrix.
template <class Boundary>
std::vector<std::size_t> streamed_betti(std::size_t N, Boundary&& boundary, std::vector<std::size_t> dims) {
  std::vector<std::size_t> r(N + 2, 0);
  for (std::size_t k = 1; k <= N + 1; ++k) r[k] = rank(boundary(k));
  std::vector<std::size_t> out;
  for (std::size_t n = 0; n <= N; ++n) out.push_back(dims[n] - r[n] - r[n + 1]);
  return out;
}

}  // namespace

std::vector<std::size_t> leibniz_betti(const LieAlgebra& g, std::size_t N) {
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= N; ++k) dims.push_back(BasisIndexer::tensor(g.dim(), k).size());
  return streamed_betti(N, [&](std::size_t k) { return leibniz_boundary(g, k); }, dims);
}

std::vector<std::size_t> lie_betti(const LieAlgebra& g, std::size_t N) {
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= N; ++k) dims.push_back(BasisIndexer::wedge(g.dim(), k).size());
  return streamed_betti(N, [&](std::size_t k) { return lie_boundary(g, k); }, dims);
}

HomologyGroup homology(const ChainComplex& c, std::size_t n) {
  if (n + 1 > c.top()) throw std::out_of_range("homology in degree " + std::to_string(n) + " needs degree " +
                                               std::to_string(n + 1) + " of the complex");
  return HomologyGroup(n, kernel_basis(c.d(n)), image_basis(c.d(n + 1)));
}

GradedHomology graded_homology(const ChainComplex& c, std::size_t upto) {
  GradedHomology out{c.name(), c.shift(), {}};
  for (std::size_t n = 0; n <= upto; ++n) out.groups.push_back(homology(c, n));
  return out;
}

SparseMatrix induced_on_homology(const ChainMap& f, const HomologyGroup& source, const HomologyGroup& target) {
  const auto n = source.degree();
  const auto& m = f.map(n);
  std::vector<SparseVector> cols;
  for (const auto& rep : source.representatives()) {
    const auto image = m.apply(rep);
    try {
      cols.push_back(SparseVector::from_dense(target.coordinates(image)));
    } catch (const std::invalid_argument&) {
      throw std::logic_error("chain map sends a cycle to a non-cycle in degree " + std::to_string(n));
    }
    if (cols.back().dim() != target.dim()) cols.back() = SparseVector(target.dim());
  }
  return SparseMatrix::from_columns(target.dim(), std::move(cols));
}

SparseMatrix induced_on_homology(const ChainMap& f, std::size_t n) {
  const auto t = static_cast<std::int64_t>(n) + f.shift();
  if (t < 0) throw std::out_of_range("target degree is negative");
  return induced_on_homology(f, homology(f.source(), n), homology(f.target(), static_cast<std::size_t>(t)));
}

ChainComplex cr_complex(const LieAlgebra& g, std::size_t N) { return ker_subcomplex(proj_pi(g, N), 1); }

ChainComplex rel_complex(const LieAlgebra& g, std::size_t N) { return ker_subcomplex(proj_pi_prime(g, N), 2); }

namespace {

// Class of an ambient vector lying in a kernel subcomplex.
std::vector<Rational> class_in_subcomplex(const ChainComplex& sub, const Subspace& basis, const HomologyGroup& h,
                                          const SparseVector& ambient) {
  auto coords = basis.coordinates(ambient);
  if (!coords) throw std::logic_error("boundary of the lift does not lie in the kernel subcomplex");
  auto v = SparseVector::from_dense(*coords);
  if (v.dim() != sub.dim(h.degree())) v = SparseVector(sub.dim(h.degree()));
  try {
    return h.coordinates(v);
  } catch (const std::invalid_argument&) {
    throw std::logic_error("boundary of the lift is not a cycle of the kernel subcomplex");
  }
}

ConnectingMap assemble(std::vector<std::vector<Rational>> columns, std::size_t source_dim, std::size_t target_dim) {
  std::vector<SparseVector> cols;
  for (auto& c : columns) {
    auto v = SparseVector::from_dense(c);
    if (v.dim() != target_dim) v = SparseVector(target_dim);
    cols.push_back(std::move(v));
  }
  return ConnectingMap{SparseMatrix::from_columns(target_dim, std::move(cols)), source_dim, target_dim};
}

}  // namespace

ConnectingMap connecting_delta(const LieAlgebra& g, std::size_t n) {
  if (n < 3) throw std::invalid_argument("connecting map needs n >= 3");
  const auto lie = lie_complex(g, n + 1);
  const auto h = homology(lie, n);
  const auto rel = rel_complex(g, n);
  const auto hrel = homology(rel, n - 1);
  const auto basis = Subspace::from_basis(rel.ambient_dim(n - 1), rel.embedding(n - 1)->columns());
  const auto d = leibniz_boundary(g, n);
  const auto wedge = BasisIndexer::wedge(g.dim(), n);
  const auto tensor = BasisIndexer::tensor(g.dim(), n);
  std::vector<std::vector<Rational>> cols;
  for (const auto& z : h.representatives()) {
    std::vector<Entry> lift;
    for (const auto& e : z.entries()) lift.push_back({*tensor.index(wedge.word(e.index)), e.value});
    const auto image = d.apply(SparseVector::from_entries(tensor.size(), std::move(lift)));
    cols.push_back(class_in_subcomplex(rel, basis, hrel, image));
  }
  return assemble(std::move(cols), h.dim(), hrel.dim());
}

ConnectingMap connecting_delta_lie(const LieAlgebra& g, std::size_t n) {
  if (n < 2) throw std::invalid_argument("connecting map needs n >= 2");
  const auto h = homology(lie_complex(g, n + 2), n + 1);
  return connecting_delta_lie(g, n, h.representatives());
}

ConnectingMap connecting_delta_lie(const LieAlgebra& g, std::size_t n, const std::vector<SparseVector>& cycles) {
  if (n < 2) throw std::invalid_argument("connecting map needs n >= 2");
  const auto cr = cr_complex(g, n);
  const auto hcr = homology(cr, n - 1);
  const auto basis = Subspace::from_basis(cr.ambient_dim(n - 1), cr.embedding(n - 1)->columns());
  const auto d = coeff_boundary(g, adjoint_rep(g), n);
  const auto wedge = BasisIndexer::wedge(g.dim(), n + 1);
  const auto coeff = BasisIndexer::coeff(g.dim(), g.dim(), n);
  const Rational scale(1, static_cast<std::int64_t>(n + 1));
  std::vector<std::vector<Rational>> cols;
  for (const auto& z : cycles) {
    if (z.dim() != wedge.size()) throw std::invalid_argument("cycle has the wrong length");
    std::vector<Entry> lift;
    for (const auto& e : z.entries()) {
      const auto w = wedge.word(e.index);
      for (std::size_t i = 0; i <= n; ++i) {
        Word v{w[i]};
        for (std::size_t j = 0; j <= n; ++j)
          if (j != i) v.push_back(w[j]);
        lift.push_back({*coeff.index(v), (i % 2 == 0 ? e.value : -e.value) * scale});
      }
    }
    const auto image = d.apply(SparseVector::from_entries(coeff.size(), std::move(lift)));
    cols.push_back(class_in_subcomplex(cr, basis, hcr, image));
  }
  return assemble(std::move(cols), cycles.size(), hcr.dim());
}

HomologyGroup invariant_homology(const ChainComplex& c, const ComplexAction& action, std::size_t n) {
  return homology(invariant_subcomplex(c, action), n);
}

InvariantCrossCheck invariant_cross_check(const ChainComplex& c, const ComplexAction& action, std::size_t n) {
  const auto sub = invariant_homology(c, action, n);
  const auto h = homology(c, n);
  const auto& rep = action.at(n);
  std::vector<SparseMatrix> induced;
  for (const auto& x : rep.action()) {
    std::vector<SparseVector> cols;
    for (const auto& z : h.representatives()) {
      auto v = SparseVector::from_dense(h.coordinates(x.apply(z)));
      if (v.dim() != h.dim()) v = SparseVector(h.dim());
      cols.push_back(std::move(v));
    }
    induced.push_back(SparseMatrix::from_columns(h.dim(), std::move(cols)));
  }
  std::vector<std::string> labels(h.dim(), "c");
  Representation on_homology(rep.algebra(), std::move(labels), std::move(induced));
  return InvariantCrossCheck{n, sub.dim(), invariants(on_homology).dim()};
}

}  // namespace leibniz
