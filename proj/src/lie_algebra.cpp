#include "leibniz/lie_algebra.hpp"

#include <sstream>
#include <stdexcept>

#include "leibniz/basis.hpp"

namespace leibniz {

LieAlgebra::LieAlgebra(std::vector<std::string> labels, std::string name)
    : labels_(std::move(labels)), name_(std::move(name)) {
  const auto n = labels_.size();
  table_.assign(n * n, SparseVector(n));
}

void LieAlgebra::set_bracket_raw(std::size_t i, std::size_t j, SparseVector value) {
  if (i >= dim() || j >= dim()) throw std::out_of_range("bracket index out of range");
  if (value.dim() != dim()) throw std::invalid_argument("bracket value has wrong length");
  table_[i * dim() + j] = std::move(value);
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const SparseVector& value) {
  set_bracket_raw(i, j, value);
  set_bracket_raw(j, i, value.scaled(Rational(-1)));
}

SparseVector LieAlgebra::bracket(const SparseVector& x, const SparseVector& y) const {
  if (x.dim() != dim() || y.dim() != dim()) throw std::invalid_argument("bracket argument has wrong length");
  SparseVector out(dim());
  for (const auto& a : x.entries())
    for (const auto& b : y.entries()) out.add_scaled(bracket(a.index, b.index), a.value * b.value);
  return out;
}

SparseMatrix LieAlgebra::ad(std::size_t i) const {
  std::vector<SparseVector> cols;
  cols.reserve(dim());
  for (std::size_t k = 0; k < dim(); ++k) cols.push_back(bracket(i, k));
  return SparseMatrix::from_columns(dim(), std::move(cols));
}

bool LieAlgebra::all_integer() const {
  for (const auto& v : table_)
    for (const auto& e : v.entries())
      if (!e.value.is_integer()) return false;
  return true;
}

Representation::Representation(LieAlgebra algebra, std::vector<std::string> space_labels,
                               std::vector<SparseMatrix> action)
    : algebra_(std::move(algebra)), labels_(std::move(space_labels)), action_(std::move(action)) {}

namespace {

std::string kind_name(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::antisymmetry: return "antisymmetry";
    case Violation::Kind::jacobi: return "jacobi";
    case Violation::Kind::representation: return "representation";
  }
  return "?";
}

SparseVector flatten(const SparseMatrix& m) {
  std::vector<Entry> entries;
  for (auto& [r, c, v] : m.triplets()) entries.push_back({c * m.rows() + r, v});
  return SparseVector::from_entries(m.rows() * m.cols(), std::move(entries));
}

}  // namespace

std::string ValidationReport::to_text(const std::vector<std::string>& labels) const {
  std::ostringstream os;
  if (ok()) {
    os << "ok\n";
    return os.str();
  }
  for (const auto& v : violations) {
    os << kind_name(v.kind) << " (";
    for (std::size_t i = 0; i < v.indices.size(); ++i) {
      if (i) os << ", ";
      const auto idx = v.indices[i];
      if (idx < labels.size()) os << labels[idx];
      else os << idx;
    }
    os << ")";
    if (v.kind != Violation::Kind::representation && !v.defect.is_zero()) {
      os << ": ";
      bool first = true;
      for (const auto& e : v.defect.entries()) {
        if (!first) os << " + ";
        first = false;
        os << e.value << "*" << (e.index < labels.size() ? labels[e.index] : std::to_string(e.index));
      }
    }
    os << "\n";
  }
  return os.str();
}

ValidationReport check_algebra(const LieAlgebra& g) {
  ValidationReport report;
  const auto n = g.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      auto s = g.bracket(i, j) + g.bracket(j, i);
      if (!s.is_zero()) report.violations.push_back({Violation::Kind::antisymmetry, {i, j}, std::move(s)});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        auto unit = [&](std::size_t a) { return SparseVector::unit(n, a); };
        auto s = g.bracket(g.bracket(i, j), unit(k)) + g.bracket(g.bracket(j, k), unit(i)) +
                 g.bracket(g.bracket(k, i), unit(j));
        if (!s.is_zero()) report.violations.push_back({Violation::Kind::jacobi, {i, j, k}, std::move(s)});
      }
    }
  }
  return report;
}

ValidationReport check_representation(const Representation& rep) {
  ValidationReport report;
  const auto& g = rep.algebra();
  const auto d = rep.dim();
  if (rep.action().size() != g.dim()) {
    report.violations.push_back({Violation::Kind::representation, {}, SparseVector()});
    return report;
  }
  bool shapes_ok = true;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    const auto& m = rep.action(i);
    if (m.rows() != d || m.cols() != d) {
      report.violations.push_back({Violation::Kind::representation, {i}, SparseVector()});
      shapes_ok = false;
    }
  }
  if (!shapes_ok) return report;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i + 1; j < g.dim(); ++j) {
      SparseMatrix lhs(d, d);
      for (const auto& e : g.bracket(i, j).entries()) lhs = lhs + rep.action(e.index).scaled(e.value);
      auto rhs = rep.action(i) * rep.action(j) - rep.action(j) * rep.action(i);
      auto diff = lhs - rhs;
      if (!diff.is_zero()) report.violations.push_back({Violation::Kind::representation, {i, j}, flatten(diff)});
    }
  }
  return report;
}

SparseMatrix AbelianExtension::inclusion() const {
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t a = 0; a < i_dim(); ++a) t.emplace_back(i_index(a), a, Rational(1));
  return SparseMatrix::from_triplets(h.dim(), i_dim(), t);
}

SparseMatrix AbelianExtension::projection() const {
  std::vector<SparseMatrix::Triplet> t;
  for (std::size_t i = 0; i < g_dim(); ++i) t.emplace_back(i, g_index(i), Rational(1));
  return SparseMatrix::from_triplets(g_dim(), h.dim(), t);
}

LieAlgebra AbelianExtension::ideal() const { return LieAlgebra(rep.space_labels(), "I"); }

AbelianExtension semidirect(const LieAlgebra& g, const Representation& rep, std::string name) {
  if (auto r = check_algebra(g); !r.ok()) throw std::invalid_argument("not a Lie algebra:\n" + r.to_text(g.labels()));
  if (!(rep.algebra() == g)) throw std::invalid_argument("representation is over a different algebra");
  if (auto r = check_representation(rep); !r.ok())
    throw std::invalid_argument("not a representation:\n" + r.to_text(g.labels()));

  const auto n = g.dim();
  const auto d = rep.dim();
  auto labels = g.labels();
  labels.insert(labels.end(), rep.space_labels().begin(), rep.space_labels().end());
  LieAlgebra h(labels, std::move(name));
  auto embed = [&](const SparseVector& v, std::size_t offset) {
    std::vector<Entry> e;
    for (const auto& x : v.entries()) e.push_back({x.index + offset, x.value});
    return SparseVector::from_entries(n + d, std::move(e));
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) h.set_bracket_raw(i, j, embed(g.bracket(i, j), 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t a = 0; a < d; ++a) h.set_bracket(i, n + a, embed(rep.action(i).column(a), n));
  }
  return AbelianExtension{g, rep, std::move(h)};
}

SparseMatrix killing_form(const LieAlgebra& g) {
  const auto n = g.dim();
  std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
  // B(i,j) = sum_{k,l} c(i,l,k) c(j,k,l)
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      Rational s;
      for (std::size_t l = 0; l < n; ++l)
        for (const auto& e : g.bracket(i, l).entries()) s += e.value * g.bracket(j, e.index)[l];
      b[i][j] = s;
      b[j][i] = s;
    }
  }
  return SparseMatrix::from_dense(b);
}

Subspace invariants(const Representation& rep) {
  if (rep.action().empty()) return Subspace::full(rep.dim());
  return kernel_basis(vstack(rep.action()));
}

Representation trivial_rep(const LieAlgebra& g, std::size_t dim) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < dim; ++i) labels.push_back("v" + std::to_string(i + 1));
  return Representation(g, std::move(labels), std::vector<SparseMatrix>(g.dim(), SparseMatrix(dim, dim)));
}

Representation adjoint_rep(const LieAlgebra& g) {
  std::vector<SparseMatrix> action;
  for (std::size_t i = 0; i < g.dim(); ++i) action.push_back(g.ad(i));
  return Representation(g, g.labels(), std::move(action));
}

namespace {

std::string join_word(const Word& w, const std::vector<std::string>& labels, const char* sep) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += sep;
    s += labels[w[i]];
  }
  return s;
}

}  // namespace

Representation tensor_rep(const Representation& rep, std::size_t k) {
  const auto d = rep.dim();
  const auto basis = BasisIndexer::tensor(d, k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i)
    labels.push_back(k == 0 ? "1" : join_word(basis.word(i), rep.space_labels(), "⊗"));
  std::vector<SparseMatrix> action;
  for (const auto& m : rep.action()) {
    SparseMatrix total(basis.size(), basis.size());
    for (std::size_t p = 0; p < k; ++p) {
      std::size_t left = 1, right = 1;
      for (std::size_t q = 0; q < p; ++q) left *= d;
      for (std::size_t q = p + 1; q < k; ++q) right *= d;
      total = total + kron(kron(SparseMatrix::identity(left), m), SparseMatrix::identity(right));
    }
    action.push_back(std::move(total));
  }
  return Representation(rep.algebra(), std::move(labels), std::move(action));
}

Representation wedge_rep(const Representation& rep, std::size_t k) {
  const auto d = rep.dim();
  const auto basis = BasisIndexer::wedge(d, k);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i)
    labels.push_back(k == 0 ? "1" : join_word(basis.word(i), rep.space_labels(), "∧"));
  std::vector<SparseMatrix> action;
  for (const auto& m : rep.action()) {
    std::vector<SparseVector> cols;
    cols.reserve(basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) {
      const auto w = basis.word(c);
      std::vector<Entry> out;
      for (std::size_t p = 0; p < k; ++p) {
        for (const auto& e : m.column(w[p]).entries()) {
          Word v = w;
          v[p] = static_cast<std::uint32_t>(e.index);
          const int s = wedge_normalize(v);
          if (s == 0) continue;
          out.push_back({*basis.index(v), s > 0 ? e.value : -e.value});
        }
      }
      cols.push_back(SparseVector::from_entries(basis.size(), std::move(out)));
    }
    action.push_back(SparseMatrix::from_columns(basis.size(), std::move(cols)));
  }
  return Representation(rep.algebra(), std::move(labels), std::move(action));
}

Representation dual_rep(const Representation& rep) {
  std::vector<std::string> labels;
  for (const auto& l : rep.space_labels()) labels.push_back(l + "*");
  std::vector<SparseMatrix> action;
  for (const auto& m : rep.action()) action.push_back(m.transpose().scaled(Rational(-1)));
  return Representation(rep.algebra(), std::move(labels), std::move(action));
}

Representation tensor_product(const Representation& v, const Representation& w) {
  if (!(v.algebra() == w.algebra())) throw std::invalid_argument("representations over different algebras");
  std::vector<std::string> labels;
  for (const auto& a : v.space_labels())
    for (const auto& b : w.space_labels()) labels.push_back(a + "⊗" + b);
  std::vector<SparseMatrix> action;
  const auto iv = SparseMatrix::identity(v.dim());
  const auto iw = SparseMatrix::identity(w.dim());
  for (std::size_t i = 0; i < v.algebra().dim(); ++i)
    action.push_back(kron(v.action(i), iw) + kron(iv, w.action(i)));
  return Representation(v.algebra(), std::move(labels), std::move(action));
}

Representation restrict_to(const Representation& rep, const LieAlgebra& g) {
  const auto& h = rep.algebra();
  if (g.dim() > h.dim()) throw std::invalid_argument("subalgebra larger than algebra");
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = 0; j < g.dim(); ++j) {
      const auto& hb = h.bracket(i, j);
      const auto& gb = g.bracket(i, j);
      bool same = true;
      for (const auto& e : hb.entries())
        if (e.index >= g.dim() || gb[e.index] != e.value) same = false;
      if (hb.nnz() != gb.nnz()) same = false;
      if (!same) throw std::invalid_argument("leading basis vectors do not span a copy of the subalgebra");
    }
  }
  std::vector<SparseMatrix> action(rep.action().begin(), rep.action().begin() + static_cast<std::ptrdiff_t>(g.dim()));
  return Representation(g, rep.space_labels(), std::move(action));
}

std::vector<SparseMatrix> equivariant_maps(const Representation& v, const Representation& w) {
  const auto hom = tensor_product(dual_rep(v), w);
  const auto inv = invariants(hom);
  std::vector<SparseMatrix> maps;
  for (const auto& vec : inv.basis()) {
    std::vector<SparseMatrix::Triplet> t;
    for (const auto& e : vec.entries()) t.emplace_back(e.index % w.dim(), e.index / w.dim(), e.value);
    maps.push_back(SparseMatrix::from_triplets(w.dim(), v.dim(), t));
  }
  return maps;
}

std::size_t equivariant_hom_dim(const LieAlgebra& g, const Representation& v, const Representation& w) {
  if (!(v.algebra() == g) || !(w.algebra() == g)) throw std::invalid_argument("representations over different algebras");
  return invariants(tensor_product(dual_rep(v), w)).dim();
}

}  // namespace leibniz
