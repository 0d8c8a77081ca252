#include "leibniz/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace leibniz::io {

namespace {

std::string line_col(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object()) throw InputError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(path, std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const Json& j, std::size_t bound, const std::string& path) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
    throw InputError(path, "expected a non-negative integer");
  const auto v = j.get<std::size_t>();
  if (v >= bound) throw InputError(path, "index " + std::to_string(v) + " out of range (< " + std::to_string(bound) + ")");
  return v;
}

std::vector<std::string> labels_from_json(const Json& j, std::size_t dim, const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array of labels");
  if (j.size() != dim) throw InputError(path, "expected " + std::to_string(dim) + " labels");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) throw InputError(path + "[" + std::to_string(i) + "]", "expected a string");
    out.push_back(j[i].get<std::string>());
  }
  return out;
}

std::vector<SparseMatrix::Triplet> triplets_from_json(const Json& j, std::size_t rows, std::size_t cols,
                                                      const std::string& path) {
  if (!j.is_array()) throw InputError(path, "expected an array of [row, col, value] triples");
  std::vector<SparseMatrix::Triplet> out;
  for (std::size_t n = 0; n < j.size(); ++n) {
    const auto p = path + "[" + std::to_string(n) + "]";
    const auto& t = j[n];
    if (!t.is_array() || t.size() != 3) throw InputError(p, "expected [row, col, value]");
    out.emplace_back(index_from_json(t[0], rows, p + "[0]"), index_from_json(t[1], cols, p + "[1]"),
                     rational_from_json(t[2], p + "[2]"));
  }
  return out;
}

Json triplets_to_json(const SparseMatrix& m) {
  Json out = Json::array();
  for (const auto& [r, c, v] : m.triplets()) out.push_back(Json::array({r, c, to_json(v)}));
  return out;
}

std::size_t dim_from_json(const Json& j, const std::string& path) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) throw InputError(path, "expected a non-negative integer");
  return j.get<std::size_t>();
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError(line_col(text, e.byte == 0 ? 0 : e.byte - 1), msg);
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  try {
    return parse(ss.str());
  } catch (const InputError& e) {
    throw InputError(path + ", " + e.where(), std::string(e.what()).substr(e.where().size() + 2));
  }
}

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (!j.is_string()) throw InputError(path, "expected a rational \"p/q\" or an integer");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(path, e.what());
  }
}

Json to_json(const SparseVector& v) {
  Json out = Json::array();
  for (const auto& e : v.entries()) out.push_back(Json::array({e.index, to_json(e.value)}));
  return out;
}

Json to_json(const SparseMatrix& m) {
  Json out;
  out["rows"] = m.rows();
  out["cols"] = m.cols();
  out["entries"] = triplets_to_json(m);
  return out;
}

SparseMatrix matrix_from_json(const Json& j, const std::string& path) {
  const auto rows = dim_from_json(field(j, "rows", path), path + ".rows");
  const auto cols = dim_from_json(field(j, "cols", path), path + ".cols");
  return SparseMatrix::from_triplets(rows, cols, triplets_from_json(field(j, "entries", path), rows, cols, path + ".entries"));
}

Json to_json(const LieAlgebra& g) {
  Json out;
  if (!g.name().empty()) out["name"] = g.name();
  out["dim"] = g.dim();
  out["basis"] = g.labels();
  Json brackets = Json::array();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    for (std::size_t j = i; j < g.dim(); ++j) {
      const auto& b = g.bracket(i, j);
      const auto& mirror = g.bracket(j, i);
      if (b.is_zero() && mirror.is_zero()) continue;
      auto emit = [&](std::size_t a, std::size_t c, const SparseVector& v) {
        Json coeffs = Json::object();
        for (const auto& e : v.entries()) coeffs[std::to_string(e.index)] = to_json(e.value);
        brackets.push_back({{"i", a}, {"j", c}, {"coeffs", coeffs}});
      };
      emit(i, j, b);
      // a table that is not antisymmetric needs its mirror written out
      if (i != j && !(mirror == b.scaled(Rational(-1)))) emit(j, i, mirror);
    }
  }
  out["brackets"] = brackets;
  return out;
}

LieAlgebra algebra_from_json(const Json& j, const std::string& path) {
  const auto dim = dim_from_json(field(j, "dim", path), path + ".dim");
  auto labels = labels_from_json(field(j, "basis", path), dim, path + ".basis");
  std::string name;
  if (auto it = j.find("name"); it != j.end() && it->is_string()) name = it->get<std::string>();
  LieAlgebra g(std::move(labels), name);
  const auto& brackets = field(j, "brackets", path);
  if (!brackets.is_array()) throw InputError(path + ".brackets", "expected an array");
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> listed;
  for (std::size_t n = 0; n < brackets.size(); ++n) {
    const auto p = path + ".brackets[" + std::to_string(n) + "]";
    const auto& b = brackets[n];
    const auto i = index_from_json(field(b, "i", p), dim, p + ".i");
    const auto k = index_from_json(field(b, "j", p), dim, p + ".j");
    const auto& coeffs = field(b, "coeffs", p);
    if (!coeffs.is_object()) throw InputError(p + ".coeffs", "expected an object {\"k\": \"p/q\"}");
    std::vector<Entry> entries;
    for (auto it = coeffs.begin(); it != coeffs.end(); ++it) {
      const auto cp = p + ".coeffs." + it.key();
      std::size_t idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoul(it.key(), &used);
        if (used != it.key().size()) throw std::invalid_argument("trailing characters");
      } catch (const std::exception&) {
        throw InputError(cp, "coefficient key must be a basis index");
      }
      if (idx >= dim) throw InputError(cp, "index out of range");
      entries.push_back({idx, rational_from_json(it.value(), cp)});
    }
    if (listed.count({i, k})) throw InputError(p, "bracket listed twice");
    listed[{i, k}] = SparseVector::from_entries(dim, std::move(entries));
  }
  for (const auto& [ij, v] : listed) {
    g.set_bracket_raw(ij.first, ij.second, v);
    if (ij.first != ij.second && !listed.count({ij.second, ij.first}))
      g.set_bracket_raw(ij.second, ij.first, v.scaled(Rational(-1)));
  }
  return g;
}

Json to_json(const Representation& r) {
  Json out;
  out["dim"] = r.dim();
  out["basis"] = r.space_labels();
  Json action = Json::array();
  for (std::size_t i = 0; i < r.action().size(); ++i) {
    if (r.action(i).is_zero()) continue;
    action.push_back({{"generator", i}, {"entries", triplets_to_json(r.action(i))}});
  }
  out["action"] = action;
  return out;
}

Representation representation_from_json(const LieAlgebra& g, const Json& j, const std::string& path) {
  const auto dim = dim_from_json(field(j, "dim", path), path + ".dim");
  auto labels = labels_from_json(field(j, "basis", path), dim, path + ".basis");
  std::vector<SparseMatrix> action(g.dim(), SparseMatrix(dim, dim));
  std::vector<bool> seen(g.dim(), false);
  const auto& list = field(j, "action", path);
  if (!list.is_array()) throw InputError(path + ".action", "expected an array");
  for (std::size_t n = 0; n < list.size(); ++n) {
    const auto p = path + ".action[" + std::to_string(n) + "]";
    const auto gen = index_from_json(field(list[n], "generator", p), g.dim(), p + ".generator");
    if (seen[gen]) throw InputError(p, "generator listed twice");
    seen[gen] = true;
    action[gen] = SparseMatrix::from_triplets(dim, dim, triplets_from_json(field(list[n], "entries", p), dim, dim, p + ".entries"));
  }
  return Representation(g, std::move(labels), std::move(action));
}

Document document_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("$", "expected an object");
  Document d;
  if (auto it = j.find("name"); it != j.end() && it->is_string()) d.name = it->get<std::string>();
  if (j.contains("g")) {
    d.base = algebra_from_json(j["g"], "$.g");
    d.module = representation_from_json(*d.base, field(j, "rep", "$"), "$.rep");
    return d;
  }
  d.algebra = algebra_from_json(j, "$");
  if (d.name.empty()) d.name = d.algebra->name();
  if (auto it = j.find("representations"); it != j.end()) {
    if (!it->is_array()) throw InputError("$.representations", "expected an array");
    for (std::size_t n = 0; n < it->size(); ++n)
      d.representations.push_back(
          representation_from_json(*d.algebra, (*it)[n], "$.representations[" + std::to_string(n) + "]"));
  }
  return d;
}

Json to_json(const CatalogEntry& e) {
  if (e.extension) {
    Json out;
    out["name"] = e.name;
    out["description"] = e.description;
    out["g"] = to_json(e.extension->g);
    out["rep"] = to_json(e.extension->rep);
    return out;
  }
  Json out;
  out["name"] = e.name;
  out["description"] = e.description;
  const Json alg = to_json(e.algebra);
  for (const auto& [k, v] : alg.items())
    if (k != "name") out[k] = v;
  Json reps = Json::array();
  for (const auto& r : e.representations) reps.push_back(to_json(r));
  out["representations"] = reps;
  return out;
}

Json to_json(const ValidationReport& r, const std::vector<std::string>& labels) {
  Json out;
  out["valid"] = r.ok();
  Json list = Json::array();
  for (const auto& v : r.violations) {
    Json item;
    item["kind"] = v.kind == Violation::Kind::antisymmetry ? "antisymmetry"
                   : v.kind == Violation::Kind::jacobi     ? "jacobi"
                                                           : "representation";
    item["indices"] = v.indices;
    Json names = Json::array();
    for (auto i : v.indices) names.push_back(i < labels.size() ? labels[i] : std::to_string(i));
    item["labels"] = names;
    item["defect"] = to_json(v.defect);
    list.push_back(item);
  }
  out["violations"] = list;
  return out;
}

Json to_json(const ChainComplex& c) {
  Json out;
  out["name"] = c.name();
  out["shift"] = c.shift();
  out["dims"] = c.dims();
  Json ds = Json::array();
  for (std::size_t n = 0; n <= c.top(); ++n) ds.push_back(to_json(c.d(n)));
  out["boundaries"] = ds;
  return out;
}

Json to_json(const GradedHomology& h) {
  Json out;
  out["name"] = h.name;
  out["shift"] = h.shift;
  out["betti"] = h.betti();
  Json degrees = Json::array();
  for (const auto& g : h.groups) {
    Json reps = Json::array();
    for (const auto& r : g.representatives()) reps.push_back(to_json(r));
    degrees.push_back({{"degree", static_cast<int>(g.degree()) - h.shift}, {"dim", g.dim()}, {"representatives", reps}});
  }
  out["degrees"] = degrees;
  return out;
}

Json to_json(const StructureReport& r) {
  Json out;
  out["name"] = r.name;
  out["max_degree"] = r.max_degree;
  out["invariant_dims"] = r.invariant_dims;
  out["k_dims"] = r.k_dims;
  out["predicted"] = r.predicted;
  out["direct"] = r.direct;
  Json rows = Json::array();
  for (const auto& row : r.rows)
    rows.push_back({{"degree", row.degree}, {"direct", row.direct}, {"predicted", row.predicted}, {"match", row.match()}});
  out["rows"] = rows;
  Json hyp = Json::array();
  for (const auto& h : r.hypothesis_a) hyp.push_back({{"degree", h.degree}, {"found", h.found}});
  out["hypothesis_a"] = hyp;
  out["ok"] = r.ok();
  return out;
}

Json to_json(const HRReport& r) {
  return {{"degree", r.degree},           {"direct", r.direct},       {"delta_part", r.delta_part},
          {"delta_source", r.delta_source}, {"k_part", r.k_part},     {"predicted", r.predicted()},
          {"match", r.match()}};
}

}  // namespace leibniz::io
