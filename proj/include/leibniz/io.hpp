#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/complexes.hpp"
#include "leibniz/homology.hpp"
#include "leibniz/lie_algebra.hpp"
#include "leibniz/structure.hpp"

namespace leibniz::io {

using Json = nlohmann::ordered_json;

/// Malformed text or a document that does not fit the schema. `where` is
/// "line L, column C" for syntax errors and a JSON path otherwise.
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

/// Parses JSON text, reporting syntax errors with line and column.
Json parse(const std::string& text);
Json read_file(const std::string& path);

Json to_json(const Rational& r);
Rational rational_from_json(const Json& j, const std::string& path = "$");

/// [[index, "p/q"], ...]
Json to_json(const SparseVector& v);
/// {"rows": r, "cols": c, "entries": [[row, col, "p/q"], ...]}
Json to_json(const SparseMatrix& m);
SparseMatrix matrix_from_json(const Json& j, const std::string& path = "$");

/// {"name", "dim", "basis", "brackets": [{"i", "j", "coeffs": {"k": "p/q"}}]}
/// with one entry per i < j with a nonzero bracket.
Json to_json(const LieAlgebra& g);
/// A listed (i, j) also sets (j, i) to the negative unless (j, i) is listed
/// too, in which case both are stored as given.
LieAlgebra algebra_from_json(const Json& j, const std::string& path = "$");

/// {"dim", "basis", "action": [{"generator": i, "entries": [[r, c, "p/q"]]}]}
Json to_json(const Representation& r);
Representation representation_from_json(const LieAlgebra& g, const Json& j, const std::string& path = "$");

/// A parsed input document: either an algebra (with optional
/// representations) or an extension given by g and its action on I.
struct Document {
  std::string name;
  std::optional<LieAlgebra> algebra;
  std::vector<Representation> representations;
  std::optional<LieAlgebra> base;
  std::optional<Representation> module;
  bool is_extension() const { return base.has_value(); }
};
Document document_from_json(const Json& j);
/// Catalog entries export as documents that read back to the same entry.
Json to_json(const CatalogEntry& e);

Json to_json(const ValidationReport& r, const std::vector<std::string>& labels);
Json to_json(const ChainComplex& c);
Json to_json(const GradedHomology& h);
Json to_json(const StructureReport& r);
Json to_json(const HRReport& r);

}  // namespace leibniz::io
