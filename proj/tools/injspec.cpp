// Command-line front end: reads JSON query documents, dispatches to the
// library, and prints deterministic JSON reports.  Exit codes: 0 success,
// 1 malformed input (with a line/column diagnostic), 2 domain errors,
// 3 law-suite failure.  Stdout carries UTF-8 JSON only; diagnostics and
// timing go to stderr so identical inputs give byte-identical output.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "injspec/json_io.hpp"

namespace {

using namespace injspec;
using injspec::detail::jarray;
using injspec::detail::jfield;
using injspec::detail::jint;
using injspec::detail::jstr;

constexpr const char* kVersion = "1.0.0";

void print_json(const json& j) { std::cout << j.dump(2) << "\n"; }

int emit_error(const std::string& kind, const std::string& message, int exit_code, int line = -1,
               int column = -1) {
  json e;
  e["kind"] = kind;
  e["message"] = message;
  if (line >= 0) {
    e["line"] = line;
    e["column"] = column;
  }
  json out;
  out["format"] = kFormatVersion;
  out["error"] = std::move(e);
  out["version"] = kVersion;
  print_json(out);
  return exit_code;
}

std::pair<int, int> line_column(const std::string& text, size_t byte) {
  int line = 1, col = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

// INJSPEC_CAPS: comma-separated key=value overrides for the enumeration caps.
void apply_caps_env() {
  const char* env = std::getenv("INJSPEC_CAPS");
  if (env == nullptr || *env == '\0') return;
  std::string s(env);
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string item = s.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? s.size() + 1 : comma + 1;
    if (item.empty()) continue;
    size_t eq = item.find('=');
    require(eq != std::string::npos, errc::invalid_input,
            "INJSPEC_CAPS entries are key=value pairs");
    std::string key = item.substr(0, eq);
    long long value = 0;
    try {
      value = std::stoll(item.substr(eq + 1));
    } catch (const std::exception&) {
      fail(errc::invalid_input, "INJSPEC_CAPS values must be integers");
    }
    require(value > 0, errc::invalid_input, "INJSPEC_CAPS values must be positive");
    if (key == "element_enum")
      caps().element_enum = value;
    else if (key == "lattice")
      caps().lattice = static_cast<int>(value);
    else
      fail(errc::invalid_input, "unknown INJSPEC_CAPS key: " + key);
  }
}

json pointset_result(const PointSet& s) {
  json r;
  r["set"] = pointset_to_json(s);
  r["has_z"] = s.has_generic;
  r["ray"] = s.y_base == PointSet::ybase_t::ray ? json(s.ray_start) : json(nullptr);
  return r;
}

void support_notes(backend_t b, std::vector<std::string>& notes) {
  switch (b) {
    case backend_t::findim:
      notes.push_back("support: the simples occurring in the radical filtration layers");
      break;
    case backend_t::polyline:
      notes.push_back(
          "a positive free rank meets every point: a free module maps onto each cyclic torsion "
          "module; torsion alone meets the points of its last invariant factor");
      break;
    case backend_t::gradedline:
      notes.push_back(
          "free summands contribute the generic point and the ray above their generator degree; "
          "torsion intervals contribute exactly their supported degrees");
      break;
  }
}

// Dispatch one query operation.  Fills the canonical argument echo and the
// derivation notes; returns the result payload and sets the exit code (only
// the laws operation can make it nonzero).
json run_op(const SpaceHandle& space, const std::string& op, const json& q, const Window& w,
            json& cq, std::vector<std::string>& notes, int& exit_code) {
  json result;

  if (op == "inj") {
    InjPoints ip = inj_points(space, w);
    json pts = json::array();
    for (const Point& x : ip.points) pts.push_back(point_to_json(x));
    result["points"] = std::move(pts);
    result["count"] = static_cast<int>(ip.points.size());
    result["truncated"] = ip.truncated;
    notes.push_back("one point per isomorphism class of indecomposable injectives");
    if (ip.truncated) notes.push_back("the window truncates an infinite family of closed points");
    return result;
  }

  if (op == "support") {
    PointSet s = PointSet::empty_set(space.backend);
    if (q.contains("module")) {
      ModuleHandle m = module_from_json(space, q["module"]);
      cq["module"] = module_to_json(m);
      s = support_of(space, m);
      support_notes(space.backend, notes);
    } else {
      WeaklyClosedSpec z = spec_from_json(space, jfield(q, "subspace"));
      cq["subspace"] = spec_to_json(z);
      s = v_of(space, z);
      notes.push_back("the support variety of a subspace is the union over its description");
    }
    return pointset_result(s);
  }

  if (op == "sigma-member") {
    ModuleHandle n = module_from_json(space, jfield(q, "module"));
    cq["module"] = module_to_json(n);
    std::vector<ModuleHandle> gens;
    json cg = json::array();
    for (const json& e : jarray(jfield(q, "generators"), "generators")) {
      gens.push_back(module_from_json(space, e));
      cg.push_back(module_to_json(gens.back()));
    }
    cq["generators"] = std::move(cg);
    bool member = spec_member(space, n, WeaklyClosedSpec::sigma(std::move(gens)));
    result["member"] = member;
    switch (space.backend) {
      case backend_t::findim:
        notes.push_back(
            "trace criterion: the candidate belongs exactly when it lies inside the trace of the "
            "generator in the candidate's injective hull");
        break;
      case backend_t::polyline:
        notes.push_back(
            "a free generator admits everything; otherwise the candidate must be torsion with its "
            "last invariant factor dividing the generator's");
        break;
      case backend_t::gradedline:
        notes.push_back(
            "summand-wise: frees need a generator free of lower degree, intervals need a free "
            "below them or a covering torsion interval");
        break;
    }
    return result;
  }

  if (op == "gabriel-member") {
    ModuleHandle n = module_from_json(space, jfield(q, "module"));
    cq["module"] = module_to_json(n);
    std::vector<WeaklyClosedSpec> parts;
    json cp = json::array();
    for (const json& e : jarray(jfield(q, "factors"), "factors")) {
      parts.push_back(spec_from_json(space, e));
      cp.push_back(spec_to_json(parts.back()));
    }
    cq["factors"] = std::move(cp);
    result["member"] = spec_member(space, n, WeaklyClosedSpec::gabriel(std::move(parts)));
    notes.push_back(
        "factors peel from the right: the largest submodule lying in the last factor is split "
        "off and the quotient is tested against the remaining product");
    return result;
  }

  if (op == "saturate") {
    WeaklyClosedSpec z = spec_from_json(space, jfield(q, "subspace"));
    cq["subspace"] = spec_to_json(z);
    SaturationInfo info = saturation_closure(space, z);
    result["simple_support"] = pointset_to_json(info.simple_support);
    result["allows_free"] = info.allows_free;
    notes.push_back(
        "the saturation closes the class under extensions; it is determined by the surviving "
        "simple support together with whether torsion-free members are admitted");
    if (q.contains("module")) {
      ModuleHandle m = module_from_json(space, q["module"]);
      cq["module"] = module_to_json(m);
      result["member"] = saturation_member(space, info, m);
      notes.push_back("membership tests the module against that pair");
    }
    return result;
  }

  if (op == "localize") {
    Point x = point_from_json(space, jfield(q, "point"));
    cq["point"] = point_to_json(x);
    Localization loc = localize(space, x);
    result["point"] = point_to_json(loc.at);
    result["structure"] = symbolic_to_json(loc.structure);
    result["residue_ring"] = ring_to_json(loc.ring);
    for (const std::string& n : loc.notes) notes.push_back(n);
    return result;
  }

  if (op == "irreducible") {
    if (q.contains("set")) {
      PointSet s = pointset_from_json(space, q["set"]);
      cq["set"] = pointset_to_json(s);
      SetIrreducibility r = is_irreducible_set(space, s);
      result["irreducible"] = r.irreducible;
      result["input_closed"] = r.input_closed;
      result["decided_on"] = pointset_to_json(r.decided_on);
      result["generic"] = r.has_generic ? point_to_json(r.generic) : json(nullptr);
      result["parts"] = r.has_parts
                            ? json::array({pointset_to_json(r.part_a), pointset_to_json(r.part_b)})
                            : json(nullptr);
      if (!r.note.empty()) result["note"] = r.note;
      notes.push_back(
          "a set is irreducible exactly when some member's closure covers it; otherwise two "
          "proper closed parts are exhibited");
      if (!r.input_closed) notes.push_back("the input was not closed; its closure was analyzed");
    } else {
      IrreducibilityResult r = is_topologically_irreducible(space);
      result["irreducible"] = r.irreducible;
      result["generic"] = r.has_generic ? point_to_json(r.generic) : json(nullptr);
      result["parts"] = r.irreducible
                            ? json(nullptr)
                            : json::array({pointset_to_json(r.part_a), pointset_to_json(r.part_b)});
      notes.push_back(
          "the whole space is irreducible exactly when it cannot be covered by two proper closed "
          "sets; a generic point certifies this");
    }
    return result;
  }

  if (op == "prime") {
    ModuleHandle m = module_from_json(space, jfield(q, "module"));
    cq["module"] = module_to_json(m);
    result["prime"] = is_prime_module(space, m);
    result["has_prime_submodule"] = has_prime_submodule(space, m);
    notes.push_back("prime: the module lies in the sigma of each of its nonzero submodules");
    return result;
  }

  if (op == "prime-filtration") {
    ModuleHandle m = module_from_json(space, jfield(q, "module"));
    cq["module"] = module_to_json(m);
    std::vector<ModuleHandle> factors = prime_filtration(space, m);
    json f = json::array();
    for (const ModuleHandle& x : factors) f.push_back(module_to_json(x));
    result["factors"] = std::move(f);
    result["length"] = static_cast<int>(factors.size());
    notes.push_back("built bottom-up: each step splits off a prime submodule of the quotient");
    return result;
  }

  if (op == "xred") {
    XRedResult r = x_red(space);
    result["reduced"] = r.is_reduced;
    result["space"] = space_to_inline_json(r.reduced);
    result["homeo"] = check_report_to_json(r.homeo);
    notes.push_back(
        "the reduced subspace is cut out by the nilradical; the checks compare points and "
        "topologies of the two spaces");
    return result;
  }

  if (op == "integral") {
    IntegralityResult r = is_integral(space);
    result["integral"] = r.integral;
    result["big_injective"] = r.has_big ? json("E(" + r.big.key() + ")") : json(nullptr);
    result["point"] = r.has_big ? point_to_json(r.big) : json(nullptr);
    result["ring"] = r.has_big ? ring_to_json(r.ring) : json(nullptr);
    if (!r.note.empty()) result["note"] = r.note;
    notes.push_back(
        "integral: one indecomposable injective subgenerates the space and its full endomorphism "
        "ring is a division ring");
    return result;
  }

  if (op == "mori") {
    MoriResult r = mori_check(space);
    result["unique_critical_point"] = r.unique_critical_point;
    result["sigma_covers"] = r.sigma_covers;
    result["division_ring"] = ring_to_json(r.ring);
    if (!r.note.empty()) result["note"] = r.note;
    notes.push_back(
        "both characterizations (a unique top-dimensional critical point; its sigma absorbing "
        "the space over the small-dimension part) are computed independently and must agree");
    return result;
  }

  if (op == "weak-point") {
    Point x = point_from_json(space, jfield(q, "point"));
    cq["point"] = point_to_json(x);
    WeakPoint wp = weak_point(space, x);
    if (q.contains("subspace")) {
      WeaklyClosedSpec z = spec_from_json(space, q["subspace"]);
      cq["subspace"] = spec_to_json(z);
      wp = weak_restrict(space, z, wp);
      notes.push_back(
          "restriction replaces the structure module by its largest submodule inside the "
          "subspace");
    }
    result["at"] = point_to_json(wp.at);
    result["structure"] = symbolic_to_json(wp.structure);
    result["is_point"] = wp.point;
    notes.push_back(
        "a weak point is a point exactly when its structure module is tiny over its endomorphism "
        "ring");
    return result;
  }

  if (op == "tiny") {
    Point x = point_from_json(space, jfield(q, "point"));
    cq["point"] = point_to_json(x);
    TinyResult t = tiny_test(space, x);
    result["tiny"] = t.tiny;
    notes.push_back(t.derivation);
    return result;
  }

  if (op == "spec") {
    ModuleHandle m = module_from_json(space, jfield(q, "module"));
    cq["module"] = module_to_json(m);
    bool in_spec = spec_class_member(space, m);
    result["in_spec"] = in_spec;
    result["point"] = in_spec ? point_to_json(phi_point(space, m)) : json(nullptr);
    notes.push_back(
        "spectrum membership: the module is nonzero and lies in the sigma of each of its nonzero "
        "submodules");
    return result;
  }

  if (op == "phi") {
    if (q.contains("module")) {
      ModuleHandle m = module_from_json(space, q["module"]);
      cq["module"] = module_to_json(m);
      result["point"] = point_to_json(phi_point(space, m));
      notes.push_back("the comparison map sends a spectrum class to the point under its hull");
    } else {
      PhiImage img = phi_image_window(space, w);
      json hits = json::array();
      for (const auto& [x, attained] : img.hits)
        hits.push_back(json{{"point", point_to_json(x)}, {"attained", attained}});
      result["hits"] = std::move(hits);
      if (!img.note.empty()) result["note"] = img.note;
      notes.push_back(
          "each positive answer produces a class mapping to the point; each negative one a "
          "computed refutation");
    }
    return result;
  }

  if (op == "closure") {
    PointSet s = pointset_from_json(space, jfield(q, "set"));
    cq["set"] = pointset_to_json(s);
    result["closure"] = pointset_to_json(closure(space, s));
    result["input_closed"] = is_closed_set(space, s);
    notes.push_back(closed_family_rule(space.backend));
    return result;
  }

  if (op == "basic") {
    PointSet s = pointset_from_json(space, jfield(q, "set"));
    cq["set"] = pointset_to_json(s);
    BasicClosed b = is_basic_closed(space, s);
    result["basic"] = b.basic;
    result["witness"] = b.witness ? spec_to_json(*b.witness) : json(nullptr);
    if (!b.note.empty()) result["note"] = b.note;
    notes.push_back(
        "basic closed means: the support variety of some weakly closed subspace; the witness "
        "realizes the set");
    return result;
  }

  if (op == "laws") {
    std::string suite = q.contains("suite") ? jstr(q["suite"], "suite") : "all";
    int seed = q.contains("seed") ? jint(q["seed"], "seed") : 0;
    require(seed >= 0, errc::invalid_input, "seed must be nonnegative");
    cq["suite"] = suite;
    cq["seed"] = seed;
    LawReport r = check_laws(suite, static_cast<std::uint64_t>(seed), w);
    result = law_report_to_json(r);
    notes.push_back(
        "suites run the built-in catalog plus seeded random instances; instance keys order the "
        "report deterministically");
    if (!r.all_pass()) exit_code = 3;
    return result;
  }

  fail(errc::invalid_input, "unknown operation: " + op + " (see `schema print`)");
}

int cmd_query(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return emit_error("IoError", "cannot open input file: " + path, 1);
  std::stringstream ss;
  ss << in.rdbuf();
  const std::string text = ss.str();

  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    auto [line, col] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    return emit_error("ParseError", e.what(), 1, line, col);
  }

  auto t0 = std::chrono::steady_clock::now();
  require(doc.is_object(), errc::invalid_input, "the document must be a JSON object");
  require(doc.contains("format"), errc::invalid_input, "the document must declare \"format\": 1");
  require(doc["format"].is_number_integer() && doc["format"].get<int>() == kFormatVersion,
          errc::invalid_input, "unsupported document format; this tool reads format 1");

  SpaceHandle space = space_from_json(jfield(doc, "space"));
  const json& q = jfield(doc, "query");
  std::string op = jstr(jfield(q, "op"), "op");
  Window w{-8, 8, 3};
  if (doc.contains("options")) {
    const json& opts = doc["options"];
    require(opts.is_object(), errc::invalid_input, "options must be an object");
    if (opts.contains("window")) w = window_from_json(opts["window"], w);
  }

  json cq;
  cq["op"] = op;
  std::vector<std::string> notes;
  int exit_code = 0;
  json result = run_op(space, op, q, w, cq, notes, exit_code);

  json input;
  input["format"] = kFormatVersion;
  input["space"] = space_to_json(space);
  input["query"] = std::move(cq);
  input["options"] = json{{"window", window_to_json(w)}};

  json report;
  report["format"] = kFormatVersion;
  report["input"] = std::move(input);
  report["result"] = std::move(result);
  report["notes"] = notes;
  report["version"] = kVersion;
  print_json(report);

  auto us = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() -
                                                                  t0)
                .count();
  std::fprintf(stderr, "timing: %s completed in %lld us\n", op.c_str(),
               static_cast<long long>(us));
  return exit_code;
}

int cmd_laws(const std::string& suite, std::uint64_t seed, const std::vector<int>& winv) {
  Window w{-8, 8, 3};
  if (!winv.empty()) {
    w.lo = winv[0];
    w.hi = winv[1];
    require(w.lo <= w.hi, errc::invalid_input, "window lo must not exceed hi");
  }
  auto t0 = std::chrono::steady_clock::now();
  LawReport r = check_laws(suite, seed, w);
  json out = law_report_to_json(r);
  out["format"] = kFormatVersion;
  out["version"] = kVersion;
  print_json(out);
  auto ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
          .count();
  std::fprintf(stderr, "timing: laws(%s) completed in %lld ms\n", suite.c_str(),
               static_cast<long long>(ms));
  return r.all_pass() ? 0 : 3;
}

int cmd_catalog_list() {
  json spaces = json::array();
  for (const CatalogSpace& cs : catalog_spaces()) {
    json e;
    e["id"] = cs.id;
    e["backend"] = backend_name(cs.space.backend);
    e["p"] = cs.space.p;
    json mods = json::array();
    for (const CatalogModule& cm : catalog_modules(cs.id)) mods.push_back(cm.id);
    e["modules"] = std::move(mods);
    spaces.push_back(std::move(e));
  }
  json out;
  out["format"] = kFormatVersion;
  out["spaces"] = std::move(spaces);
  out["version"] = kVersion;
  print_json(out);
  return 0;
}

int cmd_schema_print() {
  json s;
  s["format"] = kFormatVersion;
  s["document"] = json{
      {"format", "integer, must be 1"},
      {"space", "a catalog reference or an inline space literal"},
      {"query", "object with field \"op\" plus the operation's arguments"},
      {"options", "optional; {\"window\": {\"lo\", \"hi\", \"maxdeg\"}} with defaults -8, 8, 3"}};
  s["space_literals"] = json{
      {"catalog", "{\"catalog\": id}; ids via `catalog list`"},
      {"findim",
       "{\"backend\": \"findim\", \"p\": prime, \"structure_constants\": c[i][j][k] triple-nested "
       "with e_i*e_j = sum_k c[i][j][k] e_k, \"unit\": coordinates of 1}"},
      {"polyline", "{\"backend\": \"polyline\", \"p\": prime}"},
      {"gradedline", "{\"backend\": \"gradedline\", \"p\": prime}"}};
  s["module_literals"] = json{
      {"findim",
       "{\"matrices\": [one row-major square matrix per algebra basis element]}; the zero module "
       "uses empty matrices"},
      {"polyline",
       "{\"presentation\": rows of polynomials (cokernel of the matrix)} or the normal form "
       "{\"torsion\": [invariant factors], \"rank\": n}; both are canonicalized"},
      {"gradedline", "{\"frees\": [generator degrees], \"torsions\": [[start, length], ...]}"},
      {"catalog", "{\"catalog\": module id} when the space is a catalog space"}};
  s["polynomial_literal"] = "array of coefficients, lowest degree first, reduced mod p";
  s["point_literals"] = json{
      {"generic", "\"z\" (the line backends)"},
      {"findim", "integer simple index, or {\"simple\": i}"},
      {"polyline", "coefficient array of a monic irreducible, or {\"y\": [coefficients]}"},
      {"gradedline", "integer degree, or {\"y\": i}"}};
  s["pointset_literal"] = json{{"z", "boolean, include the generic point"},
                               {"ray", "integer or null; all degrees >= ray (graded line only)"},
                               {"all_y", "boolean, every closed point (line backends)"},
                               {"plus", "array of closed points added to the extent"},
                               {"minus", "array of closed points removed from the extent"}};
  s["subspace_literals"] = json{
      {"zero", "{\"kind\": \"zero\"}"},
      {"whole", "{\"kind\": \"whole\"}"},
      {"sigma", "{\"kind\": \"sigma\", \"generators\": [modules]}"},
      {"simple_family", "{\"kind\": \"simple_family\", \"points\": point set} (graded line)"},
      {"dim_below", "{\"kind\": \"dim_below\", \"alpha\": 0 or 1}"},
      {"gabriel", "{\"kind\": \"gabriel\", \"parts\": [two or more subspaces, ordered]}"},
      {"saturation", "{\"kind\": \"saturation\", \"inner\": subspace}"},
      {"intersect", "{\"kind\": \"intersect\", \"parts\": [subspaces]}"}};
  s["operations"] = json{
      {"inj", "the spectrum within the window; no arguments"},
      {"support", "support of \"module\", or the support variety of \"subspace\""},
      {"sigma-member", "\"module\" against \"generators\" (array of modules)"},
      {"gabriel-member", "\"module\" against \"factors\" (array of subspaces, ordered)"},
      {"saturate", "saturation of \"subspace\"; optional \"module\" membership"},
      {"localize", "structure module and residue division ring at \"point\""},
      {"irreducible", "of \"set\" when given, else of the whole space"},
      {"prime", "primeness of \"module\" and existence of a prime submodule"},
      {"prime-filtration", "bottom-up prime filtration of \"module\""},
      {"xred", "the reduced subspace and the point/topology comparison"},
      {"integral", "integrality via a big indecomposable injective"},
      {"mori", "the two equivalent one-point characterizations"},
      {"weak-point", "weak point at \"point\", restricted to optional \"subspace\""},
      {"tiny", "is the structure module at \"point\" tiny"},
      {"spec", "spectrum-class membership of \"module\""},
      {"phi", "image point of \"module\", or the attained points of the window"},
      {"closure", "closure of \"set\" and whether the input was closed"},
      {"basic", "is \"set\" basic closed, with a subspace witness"},
      {"laws", "run law suites: optional \"suite\" (default all) and \"seed\""}};
  s["exit_codes"] = json{{"0", "success"},
                         {"1", "malformed input; parse diagnostic with line and column"},
                         {"2", "domain error; machine-readable error object"},
                         {"3", "law failure; counterexample payload"}};
  s["env"] = json{{"INJSPEC_CAPS",
                   "comma-separated key=value overrides of the enumeration caps; keys "
                   "element_enum and lattice"}};
  s["version"] = kVersion;
  print_json(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computable injective spectra over three decidable module categories"};
  app.require_subcommand(1);

  std::string query_file;
  CLI::App* qcmd = app.add_subcommand("query", "run a JSON query document");
  qcmd->add_option("file", query_file, "path to the document")->required();

  std::string suite = "all";
  std::uint64_t seed = 0;
  std::vector<int> winv;
  CLI::App* lcmd = app.add_subcommand("laws", "run the property-law suites");
  lcmd->add_option("--suite", suite, "suite name (default: all)");
  lcmd->add_option("--seed", seed, "seed for the random instances");
  lcmd->add_option("--window", winv, "index window: lo hi")->expected(2);

  CLI::App* ccmd = app.add_subcommand("catalog", "built-in spaces and modules");
  ccmd->require_subcommand(1);
  CLI::App* clist = ccmd->add_subcommand("list", "list the catalog");

  CLI::App* scmd = app.add_subcommand("schema", "the input document schema");
  scmd->require_subcommand(1);
  CLI::App* sprint = scmd->add_subcommand("print", "print the schema");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      std::cerr << app.help();
      return 0;
    }
    return emit_error("UsageError", e.what(), 1);
  }

  try {
    apply_caps_env();
    if (qcmd->parsed()) return cmd_query(query_file);
    if (lcmd->parsed()) return cmd_laws(suite, seed, winv);
    if (clist->parsed()) return cmd_catalog_list();
    if (sprint->parsed()) return cmd_schema_print();
  } catch (const domain_error& e) {
    return emit_error(errc_name(e.code()), e.what(), 2);
  } catch (const std::exception& e) {
    return emit_error("InternalAssertionFailed", e.what(), 2);
  }
  return 0;
}
