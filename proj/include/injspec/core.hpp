#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "injspec/mat.hpp"
#include "injspec/poly.hpp"
#include "injspec/smith.hpp"

namespace injspec {

enum class backend_t { findim, polyline, gradedline };

inline const char* backend_name(backend_t b) {
  switch (b) {
    case backend_t::findim: return "findim";
    case backend_t::polyline: return "polyline";
    case backend_t::gradedline: return "gradedline";
  }
  return "?";
}

// Krull dimension value.  The three backends only realize -1, 0 and 1; any
// computation that would need more fails loudly instead of guessing.
struct Kdim {
  int v = -1;  // -1 encodes the zero module
  static Kdim minus_one() { return Kdim{-1}; }
  static Kdim fin(int n) {
    require(n == 0 || n == 1, errc::cap_exceeded, "dimension beyond the supported range");
    return Kdim{n};
  }
  bool operator==(const Kdim&) const = default;
  bool operator<(const Kdim& o) const { return v < o.v; }
  std::string str() const { return v < 0 ? "-1" : std::to_string(v); }
};

inline Kdim kdim_sup(Kdim a, Kdim b) { return a.v >= b.v ? a : b; }

// ---------------------------------------------------------------------------
// Backend module data
// ---------------------------------------------------------------------------

// Finite-dimensional algebra over F_p given by structure constants:
// e_i * e_j = sum_k c[i][j][k] e_k, with the coordinates of 1 in `unit`.
struct Algebra {
  int p = 2;
  int dim = 0;
  std::vector<int> mult;  // c[i][j][k] at ((i*dim)+j)*dim+k
  std::vector<int> unit;

  PrimeField field() const { return PrimeField(p); }
  int c(int i, int j, int k) const {
    return mult[(static_cast<size_t>(i) * dim + j) * dim + k];
  }
  int& c(int i, int j, int k) { return mult[(static_cast<size_t>(i) * dim + j) * dim + k]; }
};

// Right module over an Algebra: one action matrix per algebra basis element,
// acting on row vectors.
struct Rep {
  int dim = 0;
  std::vector<Mat> action;
};

// Finitely generated module over F_p[x] in normal form: invariant factors
// (monic, nonunit, divisibility chain) plus a free rank.
struct PolyModule {
  std::vector<Poly> factors;
  int rank = 0;
};

// Finitely generated graded module over F_p[x] (deg x = 1) in normal form:
// free summands by generator degree, torsion summands (b, n) supported in
// degrees [b, b+n).
struct GradedModule {
  std::vector<int> frees;                    // sorted ascending
  std::vector<std::pair<int, int>> torsions;  // sorted, n >= 1
};

struct ModuleHandle {
  backend_t backend = backend_t::findim;
  Rep rep;          // findim
  PolyModule pm;    // polyline
  GradedModule gm;  // gradedline

  static ModuleHandle findim(Rep r) {
    ModuleHandle h;
    h.backend = backend_t::findim;
    h.rep = std::move(r);
    return h;
  }
  static ModuleHandle polyline(PolyModule m) {
    ModuleHandle h;
    h.backend = backend_t::polyline;
    h.pm = std::move(m);
    return h;
  }
  static ModuleHandle gradedline(GradedModule m) {
    ModuleHandle h;
    h.backend = backend_t::gradedline;
    h.gm = std::move(m);
    return h;
  }
};

inline bool module_is_zero(const ModuleHandle& m) {
  switch (m.backend) {
    case backend_t::findim: return m.rep.dim == 0;
    case backend_t::polyline: return m.pm.factors.empty() && m.pm.rank == 0;
    case backend_t::gradedline: return m.gm.frees.empty() && m.gm.torsions.empty();
  }
  return true;
}

// Canonical key used for deterministic ordering of handles.
inline std::string module_key(const ModuleHandle& m) {
  std::string s;
  switch (m.backend) {
    case backend_t::findim:
      s = "f:" + std::to_string(m.rep.dim) + ":";
      for (const Mat& a : m.rep.action) s += mat_key(a) + ";";
      break;
    case backend_t::polyline:
      s = "p:r" + std::to_string(m.pm.rank) + ":";
      for (const Poly& f : m.pm.factors) s += p_to_string(f) + ";";
      break;
    case backend_t::gradedline:
      s = "g:";
      for (int a : m.gm.frees) s += "F" + std::to_string(a) + ";";
      for (auto& [b, n] : m.gm.torsions) s += "T" + std::to_string(b) + "," + std::to_string(n) + ";";
      break;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Spaces and points
// ---------------------------------------------------------------------------

struct SpaceHandle {
  backend_t backend = backend_t::findim;
  int p = 2;
  Algebra alg;  // findim only
  std::string id;

  PrimeField field() const { return PrimeField(p); }

  static SpaceHandle findim(Algebra a, std::string id = "") {
    SpaceHandle s;
    s.backend = backend_t::findim;
    s.p = a.p;
    s.alg = std::move(a);
    s.id = std::move(id);
    return s;
  }
  static SpaceHandle polyline(int p, std::string id = "") {
    SpaceHandle s;
    s.backend = backend_t::polyline;
    s.p = p;
    s.id = std::move(id);
    return s;
  }
  static SpaceHandle gradedline(int p, std::string id = "") {
    SpaceHandle s;
    s.backend = backend_t::gradedline;
    s.p = p;
    s.id = std::move(id);
    return s;
  }
};

inline void check_backend(const SpaceHandle& s, const ModuleHandle& m) {
  require(s.backend == m.backend, errc::backend_mismatch, "module does not belong to this space");
}

// A point of the injective spectrum, i.e. an isomorphism class of
// indecomposable injectives, identified by backend-specific data.
struct Point {
  backend_t backend = backend_t::findim;
  enum class kind_t { simple, generic, poly_irr, graded_y } kind = kind_t::simple;
  int index = 0;  // simple index (findim) or degree (graded y)
  Poly irr;       // poly_irr

  static Point findim_simple(int i) { return Point{backend_t::findim, kind_t::simple, i, {}}; }
  static Point poly_generic() { return Point{backend_t::polyline, kind_t::generic, 0, {}}; }
  static Point poly_irr(Poly f) { return Point{backend_t::polyline, kind_t::poly_irr, 0, std::move(f)}; }
  static Point graded_z() { return Point{backend_t::gradedline, kind_t::generic, 0, {}}; }
  static Point graded_y(int i) { return Point{backend_t::gradedline, kind_t::graded_y, i, {}}; }

  bool is_generic() const { return kind == kind_t::generic; }

  std::string key() const {
    switch (kind) {
      case kind_t::simple: return "s" + std::to_string(index);
      case kind_t::generic: return "z";
      case kind_t::poly_irr: return "y(" + p_to_string(irr) + ")";
      case kind_t::graded_y: return "y" + std::to_string(index);
    }
    return "?";
  }
  bool operator==(const Point& o) const {
    return backend == o.backend && kind == o.kind && index == o.index && irr == o.irr;
  }
};

// z first, then closed points in canonical order.
inline bool point_less(const Point& a, const Point& b) {
  if (a.is_generic() != b.is_generic()) return a.is_generic();
  if (a.kind == Point::kind_t::poly_irr && b.kind == Point::kind_t::poly_irr)
    return p_less(a.irr, b.irr);
  return a.index < b.index;
}

// A (possibly infinite) set of points in symbolic form.  Semantics:
//   members = (has_generic ? {z} : {})
//           + (extent(y_base) minus `minus`)
//           + `plus`
// where extent(empty) = {}, extent(ray c) = { y_i : i >= c } (graded line
// only) and extent(all) = every closed point of the backend.
struct PointSet {
  backend_t backend = backend_t::findim;
  bool has_generic = false;
  enum class ybase_t { empty, ray, all } y_base = ybase_t::empty;
  int ray_start = 0;
  std::vector<Point> plus;   // finite, sorted, disjoint from effective extent
  std::vector<Point> minus;  // finite, sorted, contained in extent

  static PointSet empty_set(backend_t b) { return PointSet{b}; }
};

// ---------------------------------------------------------------------------
// Weakly closed subspace descriptions
// ---------------------------------------------------------------------------

struct WeaklyClosedSpec {
  enum class kind_t { sigma, simple_family, dim_below, gabriel, saturation, intersect, whole, zero };
  kind_t kind = kind_t::zero;
  std::vector<ModuleHandle> generators;  // sigma
  PointSet family;                       // simple_family (closed points only)
  Kdim alpha;                            // dim_below
  std::vector<WeaklyClosedSpec> parts;   // gabriel (>=2, ordered), intersect (>=1), saturation (1)

  static WeaklyClosedSpec sigma(std::vector<ModuleHandle> gens) {
    for (const ModuleHandle& g : gens)
      require(!module_is_zero(g), errc::zero_module, "sigma generators must be nonzero");
    WeaklyClosedSpec s;
    s.kind = kind_t::sigma;
    s.generators = std::move(gens);
    return s;
  }
  static WeaklyClosedSpec simple_family(PointSet ps) {
    require(!ps.has_generic, errc::invalid_input, "simple families consist of closed points");
    WeaklyClosedSpec s;
    s.kind = kind_t::simple_family;
    s.family = std::move(ps);
    return s;
  }
  static WeaklyClosedSpec dim_below(Kdim a) {
    WeaklyClosedSpec s;
    s.kind = kind_t::dim_below;
    s.alpha = a;
    return s;
  }
  static WeaklyClosedSpec gabriel(std::vector<WeaklyClosedSpec> parts) {
    require(parts.size() >= 2, errc::invalid_input, "gabriel product needs at least two factors");
    WeaklyClosedSpec s;
    s.kind = kind_t::gabriel;
    s.parts = std::move(parts);
    return s;
  }
  static WeaklyClosedSpec saturation(WeaklyClosedSpec inner) {
    WeaklyClosedSpec s;
    s.kind = kind_t::saturation;
    s.parts.push_back(std::move(inner));
    return s;
  }
  static WeaklyClosedSpec intersect(std::vector<WeaklyClosedSpec> parts) {
    require(!parts.empty(), errc::invalid_input, "intersection needs at least one part");
    WeaklyClosedSpec s;
    s.kind = kind_t::intersect;
    s.parts = std::move(parts);
    return s;
  }
  static WeaklyClosedSpec whole() {
    WeaklyClosedSpec s;
    s.kind = kind_t::whole;
    return s;
  }
  static WeaklyClosedSpec zero() {
    WeaklyClosedSpec s;
    s.kind = kind_t::zero;
    return s;
  }
};

// ---------------------------------------------------------------------------
// Series, residue data
// ---------------------------------------------------------------------------

struct CriticalSeries {
  struct Step {
    ModuleHandle factor;
    Kdim dim;
  };
  std::vector<Step> steps;  // dims nondecreasing
};

// Symbolic description of a module that need not be finitely generated
// (tildes and indecomposable injectives).
struct SymbolicModule {
  enum class kind_t { finite, function_field, laurent, prufer, graded_copoly } kind = kind_t::finite;
  ModuleHandle finite;  // kind == finite
  Poly at;              // prufer: the irreducible p; E = lim k[x]/(p^n)
  int shift = 0;        // graded_copoly: E(S_i) = k[x,1/x]/(x^{i+1} k[x])

  static SymbolicModule fin(ModuleHandle m) {
    SymbolicModule s;
    s.kind = kind_t::finite;
    s.finite = std::move(m);
    return s;
  }
  static SymbolicModule function_field() { return SymbolicModule{kind_t::function_field, {}, {}, 0}; }
  static SymbolicModule laurent() { return SymbolicModule{kind_t::laurent, {}, {}, 0}; }
  static SymbolicModule prufer(Poly p) { return SymbolicModule{kind_t::prufer, {}, std::move(p), 0}; }
  static SymbolicModule graded_copoly(int i) { return SymbolicModule{kind_t::graded_copoly, {}, {}, i}; }

  std::string str() const {
    switch (kind) {
      case kind_t::finite: return "finite(" + module_key(finite) + ")";
      case kind_t::function_field: return "k(x)";
      case kind_t::laurent: return "k[x,1/x]";
      case kind_t::prufer: return "prufer(" + p_to_string(at) + ")";
      case kind_t::graded_copoly: return "copoly(" + std::to_string(shift) + ")";
    }
    return "?";
  }
};

struct DivisionRingDescriptor {
  enum class kind_t { finite_field, rational_function_field, end_ring } kind = kind_t::end_ring;
  int p = 2;
  int deg = 1;     // finite_field: D = F_{p^deg}
  int dim = 0;     // end_ring: dimension over F_p
  bool is_division = false;

  static DivisionRingDescriptor finite_field(int p, int deg) {
    return DivisionRingDescriptor{kind_t::finite_field, p, deg, deg, true};
  }
  static DivisionRingDescriptor rational_function_field(int p) {
    return DivisionRingDescriptor{kind_t::rational_function_field, p, 0, 0, true};
  }
  static DivisionRingDescriptor end_ring(int p, int dim, bool division) {
    return DivisionRingDescriptor{kind_t::end_ring, p, 0, dim, division};
  }

  std::string str() const {
    switch (kind) {
      case kind_t::finite_field:
        return deg == 1 ? ("F_" + std::to_string(p)) : ("F_{" + std::to_string(p) + "^" + std::to_string(deg) + "}");
      case kind_t::rational_function_field: return "F_" + std::to_string(p) + "(x)";
      case kind_t::end_ring:
        return "end(dim=" + std::to_string(dim) + (is_division ? ",division" : ",not division") + ")";
    }
    return "?";
  }
};

}  // namespace injspec
