#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

#include "injspec/catalog.hpp"
#include "injspec/dimension.hpp"
#include "injspec/laws.hpp"
#include "injspec/spectrum.hpp"
#include "injspec/topology.hpp"

// JSON forms of the domain types, format version 1.  Writers emit canonical
// forms (normalized modules and sets, sorted keys via the default object
// ordering); readers accept exactly those shapes plus documented shorthands
// and throw domain_error(invalid_input / unknown_point) on bad content, never
// on bad syntax (syntax is the caller's concern).  Unknown object keys are
// ignored so canonical echoes may carry "display" annotations.

namespace injspec {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

// ----- writers ---------------------------------------------------------------------

inline json poly_to_json(const Poly& f) {
  json a = json::array();
  for (int c : f.c) a.push_back(c);
  return a;
}

inline json mat_to_json(const Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows; ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols; ++c) row.push_back(m.at(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

// Closed points inside set literals: a simple index, a degree, or the
// lowest-first coefficients of a monic irreducible.
inline json closed_point_to_json(const Point& x) {
  switch (x.kind) {
    case Point::kind_t::simple: return json(x.index);
    case Point::kind_t::graded_y: return json(x.index);
    case Point::kind_t::poly_irr: return poly_to_json(x.irr);
    case Point::kind_t::generic: break;
  }
  fail(errc::internal_assertion, "a generic point has no closed-point literal");
}

inline json point_to_json(const Point& x) {
  if (x.is_generic()) return json("z");
  if (x.kind == Point::kind_t::simple) return json{{"simple", x.index}};
  if (x.kind == Point::kind_t::poly_irr) return json{{"y", poly_to_json(x.irr)}};
  return json{{"y", x.index}};
}

inline json pointset_to_json(const PointSet& s) {
  json j;
  j["z"] = s.has_generic;
  j["all_y"] = s.y_base == PointSet::ybase_t::all;
  j["ray"] = s.y_base == PointSet::ybase_t::ray ? json(s.ray_start) : json(nullptr);
  json plus = json::array(), minus = json::array();
  for (const Point& x : s.plus) plus.push_back(closed_point_to_json(x));
  for (const Point& x : s.minus) minus.push_back(closed_point_to_json(x));
  j["plus"] = std::move(plus);
  j["minus"] = std::move(minus);
  j["display"] = ps_to_string(s);
  return j;
}

inline json module_to_json(const ModuleHandle& m) {
  json j;
  switch (m.backend) {
    case backend_t::findim: {
      json mats = json::array();
      for (const Mat& a : m.rep.action) mats.push_back(mat_to_json(a));
      j["matrices"] = std::move(mats);
      break;
    }
    case backend_t::polyline: {
      json t = json::array();
      for (const Poly& f : m.pm.factors) t.push_back(poly_to_json(f));
      j["torsion"] = std::move(t);
      j["rank"] = m.pm.rank;
      break;
    }
    case backend_t::gradedline: {
      j["frees"] = m.gm.frees;
      json t = json::array();
      for (const auto& [b, n] : m.gm.torsions) t.push_back(json::array({b, n}));
      j["torsions"] = std::move(t);
      break;
    }
  }
  return j;
}

// Inline literal regardless of any catalog id (derived spaces carry ids that
// are not catalog entries).
inline json space_to_inline_json(const SpaceHandle& s) {
  json j;
  j["backend"] = backend_name(s.backend);
  j["p"] = s.p;
  if (s.backend == backend_t::findim) {
    json c = json::array();
    for (int i = 0; i < s.alg.dim; ++i) {
      json ci = json::array();
      for (int jj = 0; jj < s.alg.dim; ++jj) {
        json cij = json::array();
        for (int k = 0; k < s.alg.dim; ++k) cij.push_back(s.alg.c(i, jj, k));
        ci.push_back(std::move(cij));
      }
      c.push_back(std::move(ci));
    }
    j["structure_constants"] = std::move(c);
    j["unit"] = s.alg.unit;
  }
  return j;
}

inline json space_to_json(const SpaceHandle& s) {
  if (!s.id.empty()) return json{{"catalog", s.id}};
  return space_to_inline_json(s);
}

inline json spec_to_json(const WeaklyClosedSpec& z) {
  using K = WeaklyClosedSpec::kind_t;
  json j;
  switch (z.kind) {
    case K::zero: j["kind"] = "zero"; break;
    case K::whole: j["kind"] = "whole"; break;
    case K::sigma: {
      j["kind"] = "sigma";
      json g = json::array();
      for (const ModuleHandle& m : z.generators) g.push_back(module_to_json(m));
      j["generators"] = std::move(g);
      break;
    }
    case K::simple_family:
      j["kind"] = "simple_family";
      j["points"] = pointset_to_json(z.family);
      break;
    case K::dim_below:
      j["kind"] = "dim_below";
      j["alpha"] = z.alpha.v;
      break;
    case K::gabriel:
    case K::intersect: {
      j["kind"] = z.kind == K::gabriel ? "gabriel" : "intersect";
      json parts = json::array();
      for (const WeaklyClosedSpec& p : z.parts) parts.push_back(spec_to_json(p));
      j["parts"] = std::move(parts);
      break;
    }
    case K::saturation:
      j["kind"] = "saturation";
      j["inner"] = spec_to_json(z.parts[0]);
      break;
  }
  return j;
}

inline json symbolic_to_json(const SymbolicModule& s) {
  json j;
  j["display"] = s.str();
  switch (s.kind) {
    case SymbolicModule::kind_t::finite:
      j["kind"] = "finite";
      j["module"] = module_to_json(s.finite);
      break;
    case SymbolicModule::kind_t::function_field: j["kind"] = "function_field"; break;
    case SymbolicModule::kind_t::laurent: j["kind"] = "laurent"; break;
    case SymbolicModule::kind_t::prufer:
      j["kind"] = "prufer";
      j["at"] = poly_to_json(s.at);
      break;
    case SymbolicModule::kind_t::graded_copoly:
      j["kind"] = "graded_copoly";
      j["shift"] = s.shift;
      break;
  }
  return j;
}

inline json ring_to_json(const DivisionRingDescriptor& d) {
  json j;
  j["display"] = d.str();
  j["is_division"] = d.is_division;
  switch (d.kind) {
    case DivisionRingDescriptor::kind_t::finite_field:
      j["kind"] = "finite_field";
      j["p"] = d.p;
      j["deg"] = d.deg;
      break;
    case DivisionRingDescriptor::kind_t::rational_function_field:
      j["kind"] = "rational_function_field";
      j["p"] = d.p;
      break;
    case DivisionRingDescriptor::kind_t::end_ring:
      j["kind"] = "end_ring";
      j["dim"] = d.dim;
      break;
  }
  return j;
}

inline json window_to_json(const Window& w) {
  return json{{"lo", w.lo}, {"hi", w.hi}, {"maxdeg", w.maxdeg}};
}

inline json check_report_to_json(const CheckReport& r) {
  json checks = json::array();
  for (const CheckEntry& e : r.entries)
    checks.push_back(json{{"label", e.label}, {"instance", e.instance}, {"pass", e.pass}});
  return json{{"all_pass", r.all_pass()}, {"checks", std::move(checks)}};
}

inline json law_report_to_json(const LawReport& r) {
  json suites = json::array();
  for (const LawSuite& s : r.suites) {
    json e;
    e["name"] = s.name;
    e["pass"] = s.pass_count;
    e["fail"] = s.fail_count;
    e["first_counterexample"] = s.fail_count > 0 ? json(s.first_counterexample) : json(nullptr);
    e["detail"] =
        s.fail_count > 0 && !s.first_detail.empty() ? json(s.first_detail) : json(nullptr);
    suites.push_back(std::move(e));
  }
  json j;
  j["seed"] = r.seed;
  j["window"] = window_to_json(r.window);
  j["suites"] = std::move(suites);
  j["all_pass"] = r.all_pass();
  return j;
}

// ----- readers ---------------------------------------------------------------------

namespace detail {

inline const json& jfield(const json& j, const char* key) {
  require(j.is_object(), errc::invalid_input, std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  require(it != j.end(), errc::invalid_input, std::string("missing field '") + key + "'");
  return *it;
}

inline int jint(const json& j, const char* what) {
  require(j.is_number_integer(), errc::invalid_input, std::string(what) + " must be an integer");
  return j.get<int>();
}

inline bool jbool(const json& j, const char* what) {
  require(j.is_boolean(), errc::invalid_input, std::string(what) + " must be a boolean");
  return j.get<bool>();
}

inline std::string jstr(const json& j, const char* what) {
  require(j.is_string(), errc::invalid_input, std::string(what) + " must be a string");
  return j.get<std::string>();
}

inline const json& jarray(const json& j, const char* what) {
  require(j.is_array(), errc::invalid_input, std::string(what) + " must be an array");
  return j;
}

}  // namespace detail

inline Poly poly_from_json(const PrimeField& F, const json& j) {
  detail::jarray(j, "a polynomial (lowest-first coefficient array)");
  std::vector<int> c;
  for (const json& e : j) c.push_back(detail::jint(e, "polynomial coefficient"));
  return p_norm(F, std::move(c));
}

inline SpaceHandle space_from_json(const json& j) {
  require(j.is_object(), errc::invalid_input, "space must be an object");
  if (j.contains("catalog"))
    return catalog_space(detail::jstr(j["catalog"], "space catalog id")).space;
  std::string b = detail::jstr(detail::jfield(j, "backend"), "backend");
  int p = detail::jint(detail::jfield(j, "p"), "p");
  if (b == "polyline") return SpaceHandle::polyline(p);
  if (b == "gradedline") return SpaceHandle::gradedline(p);
  require(b == "findim", errc::invalid_input,
          "backend must be one of findim, polyline, gradedline");
  const PrimeField F(p);
  const json& unit = detail::jarray(detail::jfield(j, "unit"), "unit");
  const json& sc = detail::jarray(detail::jfield(j, "structure_constants"), "structure_constants");
  int dim = static_cast<int>(unit.size());
  require(dim >= 1, errc::invalid_input, "a unital algebra has positive dimension");
  require(static_cast<int>(sc.size()) == dim, errc::invalid_input,
          "structure_constants must be a dim x dim x dim array");
  Algebra A;
  A.p = p;
  A.dim = dim;
  A.mult.assign(static_cast<size_t>(dim) * dim * dim, 0);
  for (int i = 0; i < dim; ++i) {
    const json& ci = detail::jarray(sc[i], "structure_constants row");
    require(static_cast<int>(ci.size()) == dim, errc::invalid_input,
            "structure_constants must be a dim x dim x dim array");
    for (int jj = 0; jj < dim; ++jj) {
      const json& cij = detail::jarray(ci[jj], "structure_constants entry");
      require(static_cast<int>(cij.size()) == dim, errc::invalid_input,
              "structure_constants must be a dim x dim x dim array");
      for (int k = 0; k < dim; ++k)
        A.c(i, jj, k) = F.norm(detail::jint(cij[k], "structure constant"));
    }
  }
  for (const json& e : unit) A.unit.push_back(F.norm(detail::jint(e, "unit coordinate")));
  std::vector<AlgebraViolation> bad = validate_algebra(A);
  if (!bad.empty())
    fail(errc::invalid_input, "structure constants violate the " + bad[0].law + " law");
  return SpaceHandle::findim(std::move(A));
}

inline ModuleHandle module_from_json(const SpaceHandle& space, const json& j) {
  require(j.is_object(), errc::invalid_input, "module must be an object");
  if (j.contains("catalog")) {
    require(!space.id.empty(), errc::invalid_input,
            "module catalog references need a catalog space");
    return catalog_module(space.id, detail::jstr(j["catalog"], "module catalog id"));
  }
  const PrimeField F = space.field();
  switch (space.backend) {
    case backend_t::findim: {
      const json& mats = detail::jarray(detail::jfield(j, "matrices"), "matrices");
      require(static_cast<int>(mats.size()) == space.alg.dim, errc::invalid_input,
              "a module needs one action matrix per algebra basis element");
      Rep r;
      r.dim = static_cast<int>(detail::jarray(mats[0], "matrix").size());
      for (const json& jm : mats) {
        const json& rows = detail::jarray(jm, "matrix");
        require(static_cast<int>(rows.size()) == r.dim, errc::invalid_input,
                "action matrices must be square of equal size");
        Mat m(r.dim, r.dim);
        for (int a = 0; a < r.dim; ++a) {
          const json& row = detail::jarray(rows[a], "matrix row");
          require(static_cast<int>(row.size()) == r.dim, errc::invalid_input,
                  "action matrices must be square of equal size");
          for (int b = 0; b < r.dim; ++b) m.at(a, b) = F.norm(detail::jint(row[b], "matrix entry"));
        }
        r.action.push_back(std::move(m));
      }
      require(rep_ok(space.alg, r), errc::invalid_input,
              "matrices do not satisfy the algebra relations");
      return ModuleHandle::findim(std::move(r));
    }
    case backend_t::polyline: {
      PolyMat M;
      if (j.contains("presentation")) {
        const json& rows = detail::jarray(j["presentation"], "presentation");
        int cols = -1;
        for (const json& jr : rows) {
          const json& row = detail::jarray(jr, "presentation row");
          if (cols < 0) cols = static_cast<int>(row.size());
          require(static_cast<int>(row.size()) == cols, errc::invalid_input,
                  "presentation rows must have equal length");
        }
        if (cols < 0) cols = 0;
        M = PolyMat(static_cast<int>(rows.size()), cols);
        for (int a = 0; a < M.rows; ++a)
          for (int b = 0; b < M.cols; ++b) M.at(a, b) = poly_from_json(F, rows[a][b]);
      } else {
        // normal-form shorthand: a diagonal presentation from the torsion
        // list plus relation-free generators for the rank
        const json& tor = detail::jarray(detail::jfield(j, "torsion"), "torsion");
        int rank = detail::jint(detail::jfield(j, "rank"), "rank");
        require(rank >= 0, errc::invalid_input, "rank must be nonnegative");
        int k = static_cast<int>(tor.size());
        M = PolyMat(k, k + rank);
        for (int a = 0; a < k; ++a) M.at(a, a) = poly_from_json(F, tor[a]);
      }
      return ModuleHandle::polyline(pm_classify(F, M));
    }
    case backend_t::gradedline: {
      GradedModule g;
      const json& frees = detail::jarray(detail::jfield(j, "frees"), "frees");
      for (const json& e : frees) g.frees.push_back(detail::jint(e, "free generator degree"));
      const json& tor = detail::jarray(detail::jfield(j, "torsions"), "torsions");
      for (const json& e : tor) {
        const json& pair = detail::jarray(e, "torsion summand");
        require(pair.size() == 2, errc::invalid_input,
                "torsion summands are [start, length] pairs");
        g.torsions.emplace_back(detail::jint(pair[0], "torsion start"),
                                detail::jint(pair[1], "torsion length"));
      }
      return ModuleHandle::gradedline(gm_sorted(std::move(g)));
    }
  }
  fail(errc::internal_assertion, "unreachable backend");
}

inline Point point_from_json(const SpaceHandle& space, const json& j) {
  Point x;
  if (j.is_string()) {
    require(detail::jstr(j, "point") == "z", errc::invalid_input,
            "the only string point literal is \"z\"");
    require(space.backend != backend_t::findim, errc::unknown_point,
            "this space has no generic point");
    x = space.backend == backend_t::polyline ? Point::poly_generic() : Point::graded_z();
  } else if (j.is_number_integer()) {
    int i = j.get<int>();
    require(space.backend != backend_t::polyline, errc::invalid_input,
            "closed points of the line are coefficient arrays");
    x = space.backend == backend_t::findim ? Point::findim_simple(i) : Point::graded_y(i);
  } else if (j.is_array()) {
    require(space.backend == backend_t::polyline, errc::invalid_input,
            "coefficient-array points belong to the polynomial line");
    x = Point::poly_irr(p_monic(space.field(), poly_from_json(space.field(), j)));
  } else if (j.is_object() && j.contains("simple")) {
    require(space.backend == backend_t::findim, errc::invalid_input,
            "simple-indexed points belong to finite-dimensional spaces");
    x = Point::findim_simple(detail::jint(j["simple"], "simple index"));
  } else if (j.is_object() && j.contains("y")) {
    if (space.backend == backend_t::polyline)
      x = Point::poly_irr(p_monic(space.field(), poly_from_json(space.field(), j["y"])));
    else if (space.backend == backend_t::gradedline)
      x = Point::graded_y(detail::jint(j["y"], "point degree"));
    else
      fail(errc::invalid_input, "y-points belong to the line backends");
  } else {
    fail(errc::invalid_input, "unrecognized point literal");
  }
  detail::validate_point(space, x);
  return x;
}

inline PointSet pointset_from_json(const SpaceHandle& space, const json& j) {
  require(j.is_object(), errc::invalid_input,
          "a point set is an object with keys z, ray, plus, minus, all_y");
  bool z = j.contains("z") ? detail::jbool(j["z"], "z") : false;
  bool all_y = j.contains("all_y") ? detail::jbool(j["all_y"], "all_y") : false;
  if (z)
    require(space.backend != backend_t::findim, errc::invalid_input,
            "this space has no generic point");
  if (all_y)
    require(space.backend != backend_t::findim, errc::invalid_input,
            "finite-dimensional sets list their simples explicitly");
  PointSet::ybase_t base = all_y ? PointSet::ybase_t::all : PointSet::ybase_t::empty;
  int ray_start = 0;
  if (j.contains("ray") && !j["ray"].is_null()) {
    require(space.backend == backend_t::gradedline, errc::invalid_input,
            "rays exist on the graded line only");
    require(!all_y, errc::invalid_input, "a set has one extent: ray or all_y, not both");
    base = PointSet::ybase_t::ray;
    ray_start = detail::jint(j["ray"], "ray start");
  }
  auto closed_list = [&](const char* key) {
    std::vector<Point> out;
    if (!j.contains(key)) return out;
    for (const json& e : detail::jarray(j[key], key)) {
      Point x = point_from_json(space, e);
      require(!x.is_generic(), errc::invalid_input,
              std::string(key) + " lists closed points only");
      out.push_back(std::move(x));
    }
    return out;
  };
  return ps_make(space.backend, z, base, ray_start, closed_list("plus"), closed_list("minus"));
}

inline WeaklyClosedSpec spec_from_json(const SpaceHandle& space, const json& j) {
  require(j.is_object(), errc::invalid_input, "a subspace is an object with a 'kind' field");
  std::string kind = detail::jstr(detail::jfield(j, "kind"), "kind");
  if (kind == "zero") return WeaklyClosedSpec::zero();
  if (kind == "whole") return WeaklyClosedSpec::whole();
  if (kind == "sigma") {
    std::vector<ModuleHandle> gens;
    for (const json& e : detail::jarray(detail::jfield(j, "generators"), "generators"))
      gens.push_back(module_from_json(space, e));
    return WeaklyClosedSpec::sigma(std::move(gens));
  }
  if (kind == "simple_family")
    return WeaklyClosedSpec::simple_family(
        pointset_from_json(space, detail::jfield(j, "points")));
  if (kind == "dim_below") {
    int a = detail::jint(detail::jfield(j, "alpha"), "alpha");
    return WeaklyClosedSpec::dim_below(a < 0 ? Kdim::minus_one() : Kdim::fin(a));
  }
  if (kind == "gabriel" || kind == "intersect") {
    std::vector<WeaklyClosedSpec> parts;
    for (const json& e : detail::jarray(detail::jfield(j, "parts"), "parts"))
      parts.push_back(spec_from_json(space, e));
    return kind == "gabriel" ? WeaklyClosedSpec::gabriel(std::move(parts))
                             : WeaklyClosedSpec::intersect(std::move(parts));
  }
  if (kind == "saturation")
    return WeaklyClosedSpec::saturation(spec_from_json(space, detail::jfield(j, "inner")));
  fail(errc::invalid_input, "unknown subspace kind: " + kind);
}

inline Window window_from_json(const json& j, Window w) {
  if (j.is_null()) return w;
  require(j.is_object(), errc::invalid_input, "window must be an object");
  if (j.contains("lo")) w.lo = detail::jint(j["lo"], "window lo");
  if (j.contains("hi")) w.hi = detail::jint(j["hi"], "window hi");
  if (j.contains("maxdeg")) w.maxdeg = detail::jint(j["maxdeg"], "window maxdeg");
  require(w.lo <= w.hi, errc::invalid_input, "window lo must not exceed hi");
  require(w.maxdeg >= 1, errc::invalid_input, "window maxdeg must be positive");
  return w;
}

}  // namespace injspec
