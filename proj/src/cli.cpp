#include "leibniz/cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "leibniz/catalog.hpp"
#include "leibniz/complexes.hpp"
#include "leibniz/homology.hpp"
#include "leibniz/io.hpp"
#include "leibniz/structure.hpp"

namespace leibniz {

namespace {

constexpr double bytes_per_entry = 80.0;

struct Config {
  std::string catalog;
  std::string input;
  std::string theory = "lie";
  std::optional<std::size_t> max_degree;
  std::string format = "text";
  int jobs = 0;
  std::optional<double> budget_mb;
};

class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(std::size_t degree, double need_mb, double budget_mb)
      : std::runtime_error("degree " + std::to_string(degree) + " needs about " +
                           std::to_string(static_cast<long long>(std::ceil(need_mb))) + " MB, budget is " +
                           std::to_string(static_cast<long long>(budget_mb)) + " MB"),
        degree(degree) {}
  std::size_t degree;
};

class Invalid : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

double budget_from_env() {
  if (const char* v = std::getenv("LEIBNIZ_BUDGET_MB")) {
    try {
      return std::stod(v);
    } catch (const std::exception&) {
      throw io::InputError("LEIBNIZ_BUDGET_MB", "not a number");
    }
  }
  return 2048.0;
}

std::string join(const std::vector<std::size_t>& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out;
}

double choose(std::size_t n, std::size_t k) { return k > n ? 0.0 : static_cast<double>(binomial(n, k)); }

double bracket_density(const LieAlgebra& g) {
  if (g.dim() == 0) return 0.0;
  double nnz = 0;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = 0; j < g.dim(); ++j) nnz += static_cast<double>(g.bracket(i, j).nnz());
  return nnz / static_cast<double>(g.dim() * g.dim());
}

// Estimated bytes of d_k and of the work done on it.
double estimate_bytes(const std::string& theory, const LieAlgebra& g, std::size_t module_dim, std::size_t k,
                      bool representatives) {
  const double d = static_cast<double>(g.dim());
  const double s = std::max(bracket_density(g), 1.0 / std::max(d, 1.0));
  const double pairs = choose(k, 2);
  double cols = 0, per_col = 0, factor = representatives ? 4.0 : 1.0;
  if (theory == "lie") {
    cols = choose(g.dim(), k);
    per_col = pairs * s;
  } else if (theory == "leibniz" || theory == "rel") {
    cols = std::pow(d, static_cast<double>(k));
    per_col = pairs * s;
    if (theory == "rel") factor *= 4.0;
  } else if (theory == "lie-adjoint" || theory == "hr") {
    cols = d * choose(g.dim(), k);
    per_col = (static_cast<double>(k) + pairs) * s * 2.0;
    if (theory == "hr") factor *= 4.0;
  } else {  // coeff-invariant: h ⊗ Λ^k(I)
    cols = static_cast<double>(g.dim()) * choose(module_dim, k);
    per_col = static_cast<double>(k) * s * 2.0 + 1.0;
    factor *= 2.0;
  }
  return cols * std::max(per_col, 1.0) * bytes_per_entry * factor;
}

void guard(const Config& cfg, const std::string& theory, const LieAlgebra& g, std::size_t module_dim, std::size_t top,
           bool representatives) {
  const double budget = cfg.budget_mb ? *cfg.budget_mb : budget_from_env();
  for (std::size_t k = 1; k <= top; ++k) {
    const double mb = estimate_bytes(theory, g, module_dim, k, representatives) / (1024.0 * 1024.0);
    if (mb > budget) throw BudgetExceeded(k, mb, budget);
  }
}

// ---------------------------------------------------------------------------
// Loading

struct Loaded {
  std::string name;
  io::Document doc;                   // raw input (file inputs only)
  std::optional<CatalogEntry> entry;  // usable entry once validated
};

Loaded load(const Config& cfg) {
  Loaded l;
  if (!cfg.catalog.empty()) {
    try {
      l.entry = catalog_entry(cfg.catalog);
    } catch (const std::invalid_argument& e) {
      throw io::InputError("--catalog", e.what());
    }
    l.name = l.entry->name;
    return l;
  }
  l.doc = io::document_from_json(io::read_file(cfg.input));
  l.name = l.doc.name.empty() ? cfg.input : l.doc.name;
  return l;
}

struct Validation {
  std::string object;
  std::vector<std::string> labels;
  ValidationReport report;
};

std::vector<Validation> validate(const Loaded& l) {
  std::vector<Validation> out;
  auto add_algebra = [&](const std::string& what, const LieAlgebra& g) {
    out.push_back({what, g.labels(), check_algebra(g)});
  };
  auto add_rep = [&](const std::string& what, const Representation& r) {
    out.push_back({what, r.algebra().labels(), check_representation(r)});
  };
  if (l.entry) {
    const auto& e = *l.entry;
    if (e.extension) {
      add_algebra("g", e.extension->g);
      add_rep("rep", e.extension->rep);
      add_algebra("h", e.extension->h);
    } else {
      add_algebra("algebra", e.algebra);
      for (std::size_t i = 0; i < e.representations.size(); ++i)
        add_rep("representation " + std::to_string(i), e.representations[i]);
    }
    return out;
  }
  const auto& d = l.doc;
  if (d.is_extension()) {
    add_algebra("g", *d.base);
    add_rep("rep", *d.module);
    bool ok = std::all_of(out.begin(), out.end(), [](const Validation& v) { return v.report.ok(); });
    if (ok) add_algebra("h", semidirect(*d.base, *d.module, l.name).h);
  } else {
    add_algebra("algebra", *d.algebra);
    for (std::size_t i = 0; i < d.representations.size(); ++i)
      add_rep("representation " + std::to_string(i), d.representations[i]);
  }
  return out;
}

// The entry for computations; throws Invalid when the input fails validation.
CatalogEntry usable(const Loaded& l) {
  if (l.entry) return *l.entry;
  for (const auto& v : validate(l))
    if (!v.report.ok()) throw Invalid(v.object + " is invalid:\n" + v.report.to_text(v.labels));
  const auto& d = l.doc;
  CatalogEntry e;
  e.name = l.name;
  if (d.is_extension()) {
    auto ext = semidirect(*d.base, *d.module, l.name);
    e.algebra = ext.h;
    e.representations = {*d.module};
    e.extension = std::move(ext);
  } else {
    e.algebra = *d.algebra;
    e.algebra.set_name(l.name);
    e.representations = d.representations;
  }
  return e;
}

const AbelianExtension& need_extension(const CatalogEntry& e) {
  if (!e.extension) throw io::InputError(e.name, "this command needs an extension (g with an action on I)");
  return *e.extension;
}

// ---------------------------------------------------------------------------
// Commands

int cmd_list(const Config& cfg, std::ostream& out) {
  io::Json list = io::Json::array();
  for (const auto& name : catalog_names()) {
    const auto e = catalog_entry(name);
    if (cfg.format == "json") {
      list.push_back({{"name", name}, {"description", e.description}, {"extension", e.extension.has_value()},
                      {"dim", e.algebra.dim()}});
    } else {
      out << name << "\t" << e.algebra.dim() << "\t" << e.description << "\n";
    }
  }
  if (cfg.format == "json") out << list.dump(2) << "\n";
  return exit_ok;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  const auto l = load(cfg);
  const auto checks = validate(l);
  bool ok = true;
  io::Json reports = io::Json::array();
  for (const auto& v : checks) {
    ok = ok && v.report.ok();
    auto j = io::to_json(v.report, v.labels);
    j["object"] = v.object;
    reports.push_back(j);
  }
  if (cfg.format == "json") {
    out << io::Json{{"name", l.name}, {"valid", ok}, {"reports", reports}}.dump(2) << "\n";
  } else {
    for (const auto& v : checks) {
      out << l.name << " " << v.object << ": " << (v.report.ok() ? "valid" : "INVALID") << "\n";
      if (!v.report.ok()) out << v.report.to_text(v.labels);
    }
  }
  return ok ? exit_ok : exit_mismatch;
}

struct HomologyRun {
  std::vector<std::size_t> betti;
  io::Json degrees = io::Json::array();
};

io::Json group_json(const ChainComplex& c, const HomologyGroup& h) {
  io::Json reps = io::Json::array();
  for (const auto& r : h.representatives()) reps.push_back(io::to_json(c.to_ambient(h.degree(), r)));
  return {{"degree", static_cast<int>(h.degree()) - c.shift()}, {"dim", h.dim()}, {"representatives", reps}};
}

HomologyRun homology_run(const Config& cfg, const CatalogEntry& e, std::size_t N, bool reps) {
  const auto& t = cfg.theory;
  const auto& g = e.algebra;
  HomologyRun run;
  auto from_complex = [&](const ChainComplex& c, std::size_t first, std::size_t last) {
    for (std::size_t n = first; n <= last; ++n) {
      if (reps) {
        const auto h = homology(c, n);
        run.betti.push_back(h.dim());
        run.degrees.push_back(group_json(c, h));
      } else {
        run.betti.push_back(betti(c, n));
      }
    }
  };
  if (t == "lie") {
    guard(cfg, t, g, 0, N + 1, reps);
    if (reps) from_complex(lie_complex(g, N + 1), 0, N);
    else run.betti = lie_betti(g, N);
  } else if (t == "leibniz") {
    guard(cfg, t, g, 0, N + 1, reps);
    if (reps) from_complex(leibniz_complex(g, N + 1), 0, N);
    else run.betti = leibniz_betti(g, N);
  } else if (t == "lie-adjoint") {
    guard(cfg, t, g, 0, N + 1, reps);
    from_complex(adjoint_complex(g, N + 1), 0, N);
  } else if (t == "hr") {
    guard(cfg, t, g, 0, N + 2, reps);
    from_complex(cr_complex(g, N + 2), 1, N + 1);
  } else if (t == "rel") {
    guard(cfg, t, g, 0, N + 3, reps);
    from_complex(rel_complex(g, N + 3), 2, N + 2);
  } else if (t == "coeff-invariant") {
    const auto& ext = need_extension(e);
    guard(cfg, t, g, ext.i_dim(), N + 1, reps);
    from_complex(invariant_subcomplex(ideal_coeff_complex(ext, N + 1), ideal_coeff_g_action(ext, N + 1)), 0, N);
  } else {
    throw io::InputError("--theory", "unknown theory " + t);
  }
  return run;
}

int cmd_homology(const Config& cfg, std::ostream& out) {
  const auto e = usable(load(cfg));
  const auto N = cfg.max_degree.value_or(3);
  const bool json = cfg.format == "json";
  const auto run = homology_run(cfg, e, N, json);
  if (json) {
    out << io::Json{{"name", e.name}, {"theory", cfg.theory}, {"max_degree", N}, {"betti", run.betti}, {"degrees", run.degrees}}
               .dump(2)
        << "\n";
  } else {
    out << cfg.theory << " homology of " << e.name << ", degrees 0.." << N << "\n";
    out << "betti: " << join(run.betti) << "\n";
  }
  return exit_ok;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto e = usable(load(cfg));
  const auto& ext = need_extension(e);
  const auto N = cfg.max_degree.value_or(3);
  guard(cfg, "leibniz", ext.h, 0, N + 1, false);
  const auto report = verify_structure_theorem(ext, N);
  const auto hr = verify_HR_formula(ext, 0);
  std::vector<std::string> expected_diffs;
  if (e.expected_series) {
    for (std::size_t n = 0; n <= N && n < e.expected_series->size(); ++n)
      if ((*e.expected_series)[n] != report.direct[n])
        expected_diffs.push_back("degree " + std::to_string(n) + ": expected " + std::to_string((*e.expected_series)[n]) +
                                 ", direct " + std::to_string(report.direct[n]));
  }
  const bool ok = report.ok() && hr.match() && expected_diffs.empty();
  if (cfg.format == "json") {
    out << io::Json{{"name", e.name},
                    {"structure", io::to_json(report)},
                    {"hr", io::to_json(hr)},
                    {"expected_mismatches", expected_diffs},
                    {"ok", ok}}
               .dump(2)
        << "\n";
  } else {
    out << to_text(report) << to_text(hr);
    for (const auto& d : expected_diffs) out << "expected series mismatch at " << d << "\n";
    out << (ok ? "verified" : "MISMATCH") << "\n";
  }
  return ok ? exit_ok : exit_mismatch;
}

std::string wedge_text(const std::vector<std::string>& labels, const Word& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "^" : "") + labels[w[i]];
  return s;
}

int cmd_invariants(const Config& cfg, std::ostream& out) {
  const auto e = usable(load(cfg));
  const Representation* rep = nullptr;
  if (e.extension) rep = &e.extension->rep;
  else if (!e.representations.empty()) rep = &e.representations.front();
  else throw io::InputError(e.name, "no representation to take invariants of");
  const auto top = std::min(cfg.max_degree.value_or(rep->dim()), rep->dim());
  io::Json degrees = io::Json::array();
  std::vector<std::size_t> dims;
  std::ostringstream text;
  for (std::size_t k = 0; k <= top; ++k) {
    const auto inv = invariants(wedge_rep(*rep, k));
    const auto idx = BasisIndexer::wedge(rep->dim(), k);
    dims.push_back(inv.dim());
    io::Json basis = io::Json::array();
    text << "k=" << k << " dim " << inv.dim() << "\n";
    for (const auto& v : inv.basis()) {
      basis.push_back(io::to_json(v));
      text << " ";
      bool first = true;
      for (const auto& en : v.entries()) {
        text << (first ? " " : " + ") << en.value << "*" << wedge_text(rep->space_labels(), idx.word(en.index));
        first = false;
      }
      text << "\n";
    }
    degrees.push_back({{"degree", k}, {"dim", inv.dim()}, {"basis", basis}});
  }
  if (cfg.format == "json")
    out << io::Json{{"name", e.name}, {"dims", dims}, {"degrees", degrees}}.dump(2) << "\n";
  else
    out << "invariants of " << e.name << " on exterior powers: " << join(dims) << "\n" << text.str();
  return exit_ok;
}

int cmd_export(const Config& cfg, std::ostream& out, bool with_complex) {
  const auto l = load(cfg);
  if (!with_complex) {
    if (l.entry) {
      out << io::to_json(*l.entry).dump(2) << "\n";
    } else {
      out << io::to_json(usable(l)).dump(2) << "\n";
    }
    return exit_ok;
  }
  const auto e = usable(l);
  const auto N = cfg.max_degree.value_or(3);
  const auto& t = cfg.theory;
  const auto& g = e.algebra;
  const std::size_t mdim = e.extension ? e.extension->i_dim() : 0;
  guard(cfg, t, g, mdim, N, false);
  ChainComplex c;
  if (t == "lie") c = lie_complex(g, N);
  else if (t == "leibniz") c = leibniz_complex(g, N);
  else if (t == "lie-adjoint") c = adjoint_complex(g, N);
  else if (t == "hr") c = cr_complex(g, N);
  else if (t == "rel") c = rel_complex(g, N);
  else if (t == "coeff-invariant") {
    const auto& ext = need_extension(e);
    c = invariant_subcomplex(ideal_coeff_complex(ext, N), ideal_coeff_g_action(ext, N));
  } else {
    throw io::InputError("--theory", "unknown theory " + t);
  }
  out << io::to_json(c).dump(2) << "\n";
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lie and Leibniz homology of Lie algebras and their Abelian extensions"};
  app.require_subcommand(1);
  Config cfg;
  bool export_complex = false;

  auto source = [&](CLI::App* sub) {
    auto* c = sub->add_option("--catalog", cfg.catalog, "catalog entry name");
    auto* i = sub->add_option("--input", cfg.input, "JSON algebra or extension file");
    c->excludes(i);
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", cfg.jobs, "worker threads (0: default)")->check(CLI::NonNegativeNumber);
    sub->add_option("--budget-mb", cfg.budget_mb, "memory budget in MB (default: LEIBNIZ_BUDGET_MB or 2048)")
        ->check(CLI::PositiveNumber);
    sub->add_option("-N,--max-degree", cfg.max_degree, "highest homological degree");
  };
  const std::vector<std::string> theories{"lie", "lie-adjoint", "leibniz", "hr", "rel", "coeff-invariant"};

  auto* list = app.add_subcommand("list", "list catalog entries");
  list->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json"}));
  auto* check = app.add_subcommand("check", "validate an algebra, representation or extension");
  source(check);
  auto* hom = app.add_subcommand("homology", "Betti numbers of one of the complexes");
  source(hom);
  hom->add_option("--theory", cfg.theory, "complex")->check(CLI::IsMember(theories));
  auto* verify = app.add_subcommand("verify", "structure theorem vs direct Leibniz homology");
  source(verify);
  auto* inv = app.add_subcommand("invariants", "invariants on exterior powers of the module");
  source(inv);
  auto* exp = app.add_subcommand("export", "export an entry or a complex as JSON");
  source(exp);
  exp->add_option("--theory", cfg.theory, "export this complex instead of the entry")
      ->check(CLI::IsMember(theories))
      ->each([&](const std::string&) { export_complex = true; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_input;
  }

  for (auto* sub : {check, hom, verify, inv, exp}) {
    if (sub->parsed() && cfg.catalog.empty() && cfg.input.empty()) {
      err << "error: one of --catalog or --input is required\n";
      return exit_input;
    }
  }
  if (cfg.jobs > 0) omp_set_num_threads(cfg.jobs);

  try {
    if (list->parsed()) return cmd_list(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (hom->parsed()) return cmd_homology(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (inv->parsed()) return cmd_invariants(cfg, out);
    if (exp->parsed()) return cmd_export(cfg, out, export_complex);
  } catch (const io::InputError& e) {
    err << "input error: " << e.what() << "\n";
    return exit_input;
  } catch (const Invalid& e) {
    err << e.what();
    return exit_mismatch;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return exit_budget;
  }
  return exit_input;
}

}  // namespace leibniz
