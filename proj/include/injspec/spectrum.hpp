#pragma once

// The injective spectrum as a computable object: point enumeration, support
// varieties of weakly closed subspaces, membership tests, saturation, stalks,
// irreducibility, prime modules, the reduced subspace, integrality, the
// dimension dichotomy, weak points, and the module spectrum with its
// comparison map into the point set.
//
// Conventions shared by every routine here:
//   - weakly closed classes are closed under submodules, quotients and direct
//     sums; every spec kind below denotes such a class, so the set of
//     submodules of a fixed module that belong to it is closed under sums and
//     has a unique largest element (the relative socle i^!),
//   - the product Z1 * Z2 collects the modules with a submodule in Z2 whose
//     quotient lies in Z1; membership is decided against the largest such
//     submodule, which is legitimate because Z1 is quotient closed,
//   - point sets on FinDim are always explicit lists of simple indices.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "dimension.hpp"
#include "errors.hpp"
#include "findim.hpp"
#include "gradedline.hpp"
#include "mat.hpp"
#include "pointset.hpp"
#include "polyline.hpp"

namespace injspec {

// ----- windows and point enumeration ----------------------------------------------

// Finite viewport on backends with infinitely many points: closed points of
// degree <= maxdeg (PolyLine) or index in [lo, hi] (GradedLine).
struct Window {
  int lo = -16;
  int hi = 16;
  int maxdeg = 4;
};

struct InjPoints {
  std::vector<Point> points;
  bool truncated = false;  // true when points exist outside the window
};

inline InjPoints inj_points(const SpaceHandle& space, const Window& w = {}) {
  InjPoints out;
  switch (space.backend) {
    case backend_t::findim: {
      int n = static_cast<int>(radical_simples(space.alg).simples.size());
      for (int i = 0; i < n; ++i) out.points.push_back(Point::findim_simple(i));
      out.truncated = false;
      break;
    }
    case backend_t::polyline: {
      out.points.push_back(Point::poly_generic());
      for (Point& x : poly_closed_points_window(space.field(), w.maxdeg))
        out.points.push_back(std::move(x));
      out.truncated = true;  // irreducibles of every degree exist
      break;
    }
    case backend_t::gradedline: {
      out.points.push_back(Point::graded_z());
      for (Point& x : graded_closed_points_window(w.lo, w.hi)) out.points.push_back(std::move(x));
      out.truncated = true;  // one closed point per integer degree
      break;
    }
  }
  return out;
}

// ----- support ---------------------------------------------------------------------

inline PointSet whole_point_set(const SpaceHandle& space) {
  switch (space.backend) {
    case backend_t::findim: {
      int n = static_cast<int>(radical_simples(space.alg).simples.size());
      std::vector<Point> pts;
      for (int i = 0; i < n; ++i) pts.push_back(Point::findim_simple(i));
      return ps_make(backend_t::findim, false, PointSet::ybase_t::empty, 0, std::move(pts));
    }
    case backend_t::polyline:
      return ps_make(backend_t::polyline, true, PointSet::ybase_t::all, 0);
    case backend_t::gradedline:
      return ps_make(backend_t::gradedline, true, PointSet::ybase_t::all, 0);
  }
  return PointSet::empty_set(space.backend);
}

// All closed points, i.e. the whole space minus the generic point when one
// exists.
inline PointSet closed_point_set(const SpaceHandle& space) {
  PointSet s = whole_point_set(space);
  s.has_generic = false;
  return ps_normalize(std::move(s));
}

// Points whose hull receives a nonzero map from some submodule of m; on these
// backends that is exactly the set of composition factors (plus the generic
// point for modules with a torsion-free part).
inline PointSet support_of(const SpaceHandle& space, const ModuleHandle& m) {
  check_backend(space, m);
  if (module_is_zero(m)) return PointSet::empty_set(space.backend);
  switch (space.backend) {
    case backend_t::findim: {
      std::vector<Point> pts;
      for (int i : factor_simple_indices(space.alg, m.rep))
        pts.push_back(Point::findim_simple(i));
      return ps_make(backend_t::findim, false, PointSet::ybase_t::empty, 0, std::move(pts));
    }
    case backend_t::polyline:
      return support_rule_poly(space.field(), m.pm);
    case backend_t::gradedline:
      return support_rule_graded(m.gm);
  }
  return PointSet::empty_set(space.backend);
}

// ----- support varieties of weakly closed subspaces -------------------------------

inline PointSet v_of(const SpaceHandle& space, const WeaklyClosedSpec& z) {
  using K = WeaklyClosedSpec::kind_t;
  switch (z.kind) {
    case K::zero:
      return PointSet::empty_set(space.backend);
    case K::whole:
      return whole_point_set(space);
    case K::sigma: {
      PointSet s = PointSet::empty_set(space.backend);
      for (const ModuleHandle& g : z.generators) s = ps_union(s, support_of(space, g));
      return s;
    }
    case K::simple_family:
      require(space.backend == backend_t::gradedline, errc::not_supported_for_backend,
              "simple families are representable on the graded line only");
      return z.family;
    case K::dim_below:
      // Closed points have dimension 0 and the generic point dimension 1, so
      // the support of C_{<alpha} is empty below alpha = 1 and is the set of
      // closed points from there on (the generic hull is never subgenerated
      // by small modules).
      if (z.alpha.v >= 1) return closed_point_set(space);
      return PointSet::empty_set(space.backend);
    case K::gabriel: {
      PointSet s = PointSet::empty_set(space.backend);
      for (const WeaklyClosedSpec& part : z.parts) s = ps_union(s, v_of(space, part));
      return s;
    }
    case K::saturation:
      return v_of(space, z.parts[0]);
    case K::intersect: {
      PointSet s = v_of(space, z.parts[0]);
      for (size_t i = 1; i < z.parts.size(); ++i) s = ps_intersect(s, v_of(space, z.parts[i]));
      return s;
    }
  }
  return PointSet::empty_set(space.backend);
}

// ----- membership in weakly closed subspaces ---------------------------------------

inline ModuleHandle direct_sum_of(const SpaceHandle& space, const std::vector<ModuleHandle>& ms) {
  switch (space.backend) {
    case backend_t::findim: {
      Rep acc;  // zero rep with empty action list sums correctly only via fold
      acc.dim = 0;
      acc.action.assign(space.alg.dim, Mat(0, 0));
      for (const ModuleHandle& m : ms) acc = direct_sum(space.field(), acc, m.rep);
      return ModuleHandle::findim(std::move(acc));
    }
    case backend_t::polyline: {
      PolyModule acc;
      for (const ModuleHandle& m : ms) acc = pm_direct_sum(space.field(), acc, m.pm);
      return ModuleHandle::polyline(std::move(acc));
    }
    case backend_t::gradedline: {
      GradedModule acc;
      for (const ModuleHandle& m : ms) acc = gm_direct_sum(acc, m.gm);
      return ModuleHandle::gradedline(std::move(acc));
    }
  }
  fail(errc::backend_mismatch, "unknown backend");
}

inline bool sigma_member(const SpaceHandle& space, const ModuleHandle& n, const ModuleHandle& m) {
  check_backend(space, n);
  check_backend(space, m);
  if (module_is_zero(n)) return true;
  switch (space.backend) {
    case backend_t::findim:
      return sigma_member_findim(space.alg, n.rep, m.rep);
    case backend_t::polyline:
      return sigma_member_poly(space.field(), n.pm, m.pm);
    case backend_t::gradedline:
      return sigma_member_graded(n.gm, m.gm);
  }
  return false;
}

inline bool spec_member(const SpaceHandle& space, const ModuleHandle& n,
                        const WeaklyClosedSpec& z);

struct ShriekSplit {
  ModuleHandle sub;   // largest submodule of n lying in z
  ModuleHandle quot;  // n / sub
  Mat sub_basis;      // finite backend only: row basis of sub inside n
};

namespace detail {

// Largest integer mentioned by a graded spec (free shifts, torsion extents,
// family indices).  For c beyond this bound the membership of a shifted free
// module k[x]{c} is constant in c: every rule below compares c against the
// integers collected here and nothing else.
inline int spec_shift_bound(const WeaklyClosedSpec& z) {
  using K = WeaklyClosedSpec::kind_t;
  int b = 0;
  switch (z.kind) {
    case K::sigma:
      for (const ModuleHandle& g : z.generators) {
        for (int a : g.gm.frees) b = std::max(b, a);
        for (auto& [start, len] : g.gm.torsions) b = std::max(b, start + len);
      }
      break;
    case K::simple_family:
      b = std::max(b, z.family.ray_start);
      for (const Point& x : z.family.plus) b = std::max(b, x.index);
      for (const Point& x : z.family.minus) b = std::max(b, x.index);
      break;
    default:
      break;
  }
  for (const WeaklyClosedSpec& part : z.parts) b = std::max(b, spec_shift_bound(part));
  return b;
}

inline ShriekSplit shriek_findim(const SpaceHandle& space, const ModuleHandle& n,
                                 const WeaklyClosedSpec& z) {
  const Algebra& A = space.alg;
  if (z.kind == WeaklyClosedSpec::kind_t::sigma) {
    // trace description of the relative socle: sum of images of maps from the
    // generators' injective envelope data
    ModuleHandle gen = direct_sum_of(space, z.generators);
    Mat basis = i_shriek_sigma(A, gen.rep, n.rep);
    return ShriekSplit{ModuleHandle::findim(sub_rep(A, n.rep, basis)),
                       ModuleHandle::findim(quotient_rep(A, n.rep, basis)), basis};
  }
  // General kinds: scan the submodule lattice.  The qualifying elements are
  // closed under sums, so the one of largest dimension contains every other;
  // both facts are asserted rather than assumed.
  const PrimeField F = space.field();
  Lattice lat = submodule_lattice(A, n.rep);
  std::optional<Mat> best;
  int best_rows = -1;
  for (const Mat& e : lat.elems) {
    if (!spec_member(space, ModuleHandle::findim(sub_rep(A, n.rep, e)), z)) continue;
    if (e.rows > best_rows) {
      best = e;
      best_rows = e.rows;
    }
  }
  require(best.has_value(), errc::internal_assertion, "lattice misses the zero submodule");
  for (const Mat& e : lat.elems) {
    if (!spec_member(space, ModuleHandle::findim(sub_rep(A, n.rep, e)), z)) continue;
    require(subspace_contains(F, *best, e), errc::internal_assertion,
            "qualifying submodules are not closed under sums");
  }
  return ShriekSplit{ModuleHandle::findim(sub_rep(A, n.rep, *best)),
                     ModuleHandle::findim(quotient_rep(A, n.rep, *best)), *best};
}

inline ShriekSplit shriek_poly(const SpaceHandle& space, const ModuleHandle& n,
                               const WeaklyClosedSpec& z) {
  const PrimeField F = space.field();
  PolyModule sub, quot;
  // Cyclic factor k[x]/(d): its submodules are k[x]/(t) for divisors t of d,
  // with quotient k[x]/(d/t); the qualifying t are closed under lcm (sum of
  // the corresponding submodules), so the largest one is their lcm.
  for (const Poly& d : n.pm.factors) {
    Poly big = p_one();
    for (const Poly& t : poly_divisors(F, d)) {
      if (p_deg(t) == 0) continue;
      if (spec_member(space, ModuleHandle::polyline(pm_cyclic(F, t)), z))
        big = p_lcm(F, big, t);
    }
    if (p_deg(big) > 0) {
      require(spec_member(space, ModuleHandle::polyline(pm_cyclic(F, big)), z),
              errc::internal_assertion, "qualifying divisors are not closed under lcm");
      sub = pm_direct_sum(F, sub, pm_cyclic(F, big));
    }
    Poly rest = p_div(F, d, big);
    if (p_deg(rest) > 0) quot = pm_direct_sum(F, quot, pm_cyclic(F, rest));
  }
  // Free summands: every nonzero submodule of k[x] is again free of rank one,
  // so each copy contributes itself or nothing.
  if (n.pm.rank > 0) {
    if (spec_member(space, ModuleHandle::polyline(pm_free(1)), z))
      sub = pm_direct_sum(F, sub, pm_free(n.pm.rank));
    else
      quot = pm_direct_sum(F, quot, pm_free(n.pm.rank));
  }
  return ShriekSplit{ModuleHandle::polyline(std::move(sub)),
                     ModuleHandle::polyline(std::move(quot))};
}

inline ShriekSplit shriek_graded(const SpaceHandle& space, const ModuleHandle& n,
                                 const WeaklyClosedSpec& z) {
  GradedModule sub, quot;
  for (const GSummand& s : gm_summands(n.gm)) {
    if (!s.free) {
      // submodules of the interval [b, b+n) are its tails; membership is
      // monotone in the cut, so the first qualifying tail is the largest
      int j = 0;
      while (j < s.n &&
             !spec_member(space, ModuleHandle::gradedline(gsummand_sub(s, j)), z))
        ++j;
      sub = gm_direct_sum(sub, gsummand_sub(s, j));
      quot = gm_direct_sum(quot, gsummand_quot(s, j));
      continue;
    }
    // Free summand k[x]{a}: submodules are the shifted frees k[x]{c}, c >= a,
    // and membership is monotone in c.  Beyond the largest integer mentioned
    // by the spec the answer is constant, so probing up to that bound plus
    // one decides every shift.
    int limit = std::max(s.a, spec_shift_bound(z)) + 1;
    std::optional<int> cut;
    for (int c = s.a; c <= limit; ++c) {
      if (spec_member(space, ModuleHandle::gradedline(gm_free(c)), z)) {
        cut = c;
        break;
      }
    }
    if (cut.has_value()) {
      sub = gm_direct_sum(sub, gm_free(*cut));
      quot = gm_direct_sum(quot, gsummand_quot(s, *cut - s.a));
    } else {
      quot = gm_direct_sum(quot, gm_free(s.a));
    }
  }
  return ShriekSplit{ModuleHandle::gradedline(std::move(sub)),
                     ModuleHandle::gradedline(std::move(quot))};
}

}  // namespace detail

// Relative socle i^! and its cokernel: the largest submodule of n lying in z
// together with the quotient by it.
inline ShriekSplit i_shriek_spec(const SpaceHandle& space, const ModuleHandle& n,
                                 const WeaklyClosedSpec& z) {
  check_backend(space, n);
  switch (space.backend) {
    case backend_t::findim:
      return detail::shriek_findim(space, n, z);
    case backend_t::polyline:
      return detail::shriek_poly(space, n, z);
    case backend_t::gradedline:
      return detail::shriek_graded(space, n, z);
  }
  fail(errc::backend_mismatch, "unknown backend");
}

// ----- saturation ------------------------------------------------------------------

// Serre closure data of a sigma subspace: on these backends the closure only
// sees which simples occur as composition factors plus, on the lines, whether
// a torsion-free part is allowed.
struct SaturationInfo {
  PointSet simple_support;
  bool allows_free = false;
};

inline SaturationInfo saturation_closure(const SpaceHandle& space, const WeaklyClosedSpec& z) {
  require(z.kind == WeaklyClosedSpec::kind_t::sigma, errc::invalid_input,
          "saturation closures are computed for sigma subspaces");
  SaturationInfo info;
  info.simple_support = PointSet::empty_set(space.backend);
  switch (space.backend) {
    case backend_t::findim:
      for (const ModuleHandle& g : z.generators)
        info.simple_support = ps_union(info.simple_support, support_of(space, g));
      break;
    case backend_t::polyline: {
      // a rank generator subgenerates everything, hence so does its closure
      for (const ModuleHandle& g : z.generators) info.allows_free |= g.pm.rank > 0;
      if (info.allows_free) {
        info.simple_support = ps_make(backend_t::polyline, false, PointSet::ybase_t::all, 0);
      } else {
        for (const ModuleHandle& g : z.generators)
          info.simple_support = ps_union(info.simple_support, support_rule_poly(space.field(), g.pm));
      }
      break;
    }
    case backend_t::gradedline: {
      std::vector<GradedModule> gens;
      for (const ModuleHandle& g : z.generators) gens.push_back(g.gm);
      GradedSaturation sat = graded_saturation_of(gens);
      info.simple_support = sat.simple_support;
      info.allows_free = sat.allows_free;
      break;
    }
  }
  return info;
}

inline bool saturation_member(const SpaceHandle& space, const SaturationInfo& info,
                              const ModuleHandle& m) {
  check_backend(space, m);
  if (module_is_zero(m)) return true;
  switch (space.backend) {
    case backend_t::findim:
      return ps_subset(support_of(space, m), info.simple_support);
    case backend_t::polyline: {
      if (m.pm.rank > 0 && !info.allows_free) return false;
      PointSet supp = support_of(space, m);
      supp.has_generic = false;
      return ps_subset(ps_normalize(std::move(supp)), info.simple_support);
    }
    case backend_t::gradedline: {
      GradedSaturation sat{info.simple_support, info.allows_free};
      return graded_saturation_member(sat, m.gm);
    }
  }
  return false;
}

inline bool spec_member(const SpaceHandle& space, const ModuleHandle& n,
                        const WeaklyClosedSpec& z) {
  check_backend(space, n);
  if (module_is_zero(n)) return true;  // every weakly closed class contains 0
  using K = WeaklyClosedSpec::kind_t;
  switch (z.kind) {
    case K::zero:
      return false;
    case K::whole:
      return true;
    case K::sigma:
      return sigma_member(space, n, direct_sum_of(space, z.generators));
    case K::simple_family: {
      require(space.backend == backend_t::gradedline, errc::not_supported_for_backend,
              "simple families are representable on the graded line only");
      if (!n.gm.frees.empty()) return false;
      for (auto& [b, len] : n.gm.torsions) {
        if (len != 1) return false;
        if (!ps_contains(z.family, Point::graded_y(b))) return false;
      }
      return true;
    }
    case K::dim_below:
      return kdim(space, n) < z.alpha;
    case K::gabriel: {
      // peel the last factor: quotient by the largest submodule lying in it,
      // then test the quotient against the remaining product
      std::vector<WeaklyClosedSpec> prefix(z.parts.begin(), z.parts.end() - 1);
      ShriekSplit split = i_shriek_spec(space, n, z.parts.back());
      if (prefix.size() == 1) return spec_member(space, split.quot, prefix[0]);
      return spec_member(space, split.quot, WeaklyClosedSpec::gabriel(std::move(prefix)));
    }
    case K::saturation:
      return saturation_member(space, saturation_closure(space, z.parts[0]), n);
    case K::intersect: {
      for (const WeaklyClosedSpec& part : z.parts)
        if (!spec_member(space, n, part)) return false;
      return true;
    }
  }
  return false;
}

inline bool gabriel_member(const SpaceHandle& space, const ModuleHandle& n,
                           const WeaklyClosedSpec& z1, const WeaklyClosedSpec& z2) {
  return spec_member(space, n, WeaklyClosedSpec::gabriel({z1, z2}));
}

// ----- pointwise support with two criteria -----------------------------------------

namespace detail {

inline void validate_point(const SpaceHandle& space, const Point& x) {
  require(x.backend == space.backend, errc::unknown_point, "point belongs to another backend");
  switch (space.backend) {
    case backend_t::findim: {
      int n = static_cast<int>(radical_simples(space.alg).simples.size());
      require(x.kind == Point::kind_t::simple && 0 <= x.index && x.index < n,
              errc::unknown_point, "no simple module with this index");
      break;
    }
    case backend_t::polyline:
      if (x.kind == Point::kind_t::poly_irr)
        require(p_is_irreducible(space.field(), x.irr), errc::unknown_point,
                "closed points are monic irreducibles");
      else
        require(x.kind == Point::kind_t::generic, errc::unknown_point,
                "not a point of this line");
      break;
    case backend_t::gradedline:
      require(x.kind == Point::kind_t::generic || x.kind == Point::kind_t::graded_y,
              errc::unknown_point, "not a point of this graded line");
      break;
  }
}

}  // namespace detail

// Decides x in supp(m) by two independent routes and insists they agree:
// membership in the composition support, and a nonzero map into the hull at x
// (FinDim: an honest Hom computation; PolyLine: maps into the divisible hulls;
// GradedLine: a raw summand scan).
inline bool supported_at(const SpaceHandle& space, const ModuleHandle& m, const Point& x) {
  check_backend(space, m);
  require(!module_is_zero(m), errc::zero_module, "the zero module has empty support");
  detail::validate_point(space, x);
  bool via_support = ps_contains(support_of(space, m), x);
  bool via_hom = false;
  switch (space.backend) {
    case backend_t::findim: {
      RadicalSimples rs = radical_simples(space.alg);
      Rep hull = injective_hulls_of_simples(space.alg, rs.simples)[x.index];
      via_hom = !hom_space(space.field(), m.rep.action, hull.action).empty();
      break;
    }
    case backend_t::polyline:
      via_hom = x.is_generic() ? hom_to_function_field_nonzero(m.pm)
                               : hom_to_prufer_nonzero(space.field(), m.pm, x.irr);
      break;
    case backend_t::gradedline: {
      for (const GSummand& s : gm_summands(m.gm)) {
        if (x.is_generic())
          via_hom |= s.free;
        else
          via_hom |= s.free ? x.index >= s.a : (s.b <= x.index && x.index < s.b + s.n);
      }
      break;
    }
  }
  require(via_support == via_hom, errc::internal_assertion, "support criteria disagree");
  return via_support;
}

// ----- stalks ----------------------------------------------------------------------

struct Localization {
  Point at;
  SymbolicModule structure;     // largest critical subobject of the hull
  DivisionRingDescriptor ring;  // endomorphisms of the hull modulo radical
  std::vector<std::string> notes;
};

inline Localization localize(const SpaceHandle& space, const Point& x) {
  TildeResult t = tilde(space, x);
  Localization out{x, t.largest_critical, t.division_ring, {}};
  switch (space.backend) {
    case backend_t::findim:
      out.notes.push_back(
          "the hull has simple socle; its largest critical subobject is that socle");
      out.notes.push_back(
          "residue division ring: endomorphisms of the hull modulo the radical");
      break;
    case backend_t::polyline:
      if (x.is_generic()) {
        out.notes.push_back(
            "generic stalk: the function field, the torsion-free divisible hull of the line");
        out.notes.push_back("its endomorphisms already form the function field");
      } else {
        out.notes.push_back(
            "closed stalk: the primary divisible hull at the chosen irreducible");
        out.notes.push_back(
            "residue division ring: endomorphisms modulo radical give the residue field");
      }
      break;
    case backend_t::gradedline:
      if (x.is_generic()) {
        out.notes.push_back(
            "generic stalk: the ring of graded Laurent series viewed over the line");
        out.notes.push_back("degree-zero endomorphisms reduce to the ground field");
      } else {
        out.notes.push_back("closed stalk: the graded co-polynomial hull at the chosen degree");
        out.notes.push_back("degree-zero endomorphisms reduce to the ground field");
      }
      break;
  }
  return out;
}

// ----- topological irreducibility of the whole space -------------------------------

struct IrreducibilityResult {
  bool irreducible = false;
  bool has_generic = false;  // a point whose closure is everything
  Point generic;
  PointSet part_a;  // on a reducible space: proper closed sets covering it
  PointSet part_b;
};

inline IrreducibilityResult is_topologically_irreducible(const SpaceHandle& space) {
  IrreducibilityResult out;
  out.part_a = PointSet::empty_set(space.backend);
  out.part_b = PointSet::empty_set(space.backend);
  switch (space.backend) {
    case backend_t::findim: {
      // every point set is closed, so irreducible means a single point
      int n = static_cast<int>(radical_simples(space.alg).simples.size());
      if (n == 1) {
        out.irreducible = true;
        out.has_generic = true;
        out.generic = Point::findim_simple(0);
      } else {
        std::vector<Point> rest;
        for (int i = 1; i < n; ++i) rest.push_back(Point::findim_simple(i));
        out.part_a = ps_make(backend_t::findim, false, PointSet::ybase_t::empty, 0,
                             {Point::findim_simple(0)});
        out.part_b =
            ps_make(backend_t::findim, false, PointSet::ybase_t::empty, 0, std::move(rest));
      }
      break;
    }
    case backend_t::polyline: {
      // proper closed sets are finite sets of closed points, so the closure
      // of the generic point is everything; witness that its structure module
      // supports every point
      require(ps_equal(support_of(space, ModuleHandle::polyline(pm_free(1))),
                       whole_point_set(space)),
              errc::internal_assertion, "the line's generic point lost density");
      out.irreducible = true;
      out.has_generic = true;
      out.generic = Point::poly_generic();
      break;
    }
    case backend_t::gradedline: {
      // split off the small-dimension part; the two closed pieces are proper
      // and cover the space
      out.part_a = v_of(space, WeaklyClosedSpec::dim_below(Kdim::fin(1)));
      out.part_b = v_of(space, WeaklyClosedSpec::sigma({ModuleHandle::gradedline(gm_free(0))}));
      PointSet whole = whole_point_set(space);
      require(ps_equal(ps_union(out.part_a, out.part_b), whole), errc::internal_assertion,
              "covering pieces miss a point");
      require(!ps_equal(out.part_a, whole) && !ps_equal(out.part_b, whole),
              errc::internal_assertion, "covering pieces are not proper");
      out.irreducible = false;
      out.has_generic = false;
      break;
    }
  }
  return out;
}

// ----- prime modules ---------------------------------------------------------------

namespace detail {

// enumerate the nonzero vectors of F_p^dim (cap guarded)
inline std::vector<std::vector<int>> nonzero_vectors(const PrimeField& F, int dim) {
  long long total = 1;
  for (int i = 0; i < dim; ++i) {
    total *= F.p;
    require(total <= caps().element_enum, errc::cap_exceeded,
            "module too large for element enumeration");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> v(dim, 0);
  for (long long c = 1; c < total; ++c) {
    int carry = 1;
    for (int i = 0; i < dim && carry; ++i) {
      v[i] += carry;
      carry = v[i] / F.p;
      v[i] %= F.p;
    }
    out.push_back(v);
  }
  return out;
}

// Submodule with the largest annihilator; deterministic tie-break by
// dimension and then matrix bytes.  The annihilator lattice has the dcc, so
// the result is an honest maximal element and is asserted prime by the
// caller's criterion.
inline Mat max_ann_submodule(const SpaceHandle& space, const Rep& r) {
  const Algebra& A = space.alg;
  const PrimeField F = space.field();
  Lattice lat = submodule_lattice(A, r);
  std::optional<Mat> best;
  Mat best_ann;
  int best_rank = -1;
  for (const Mat& e : lat.elems) {
    if (e.rows == 0) continue;
    Mat ann = annihilator(A, sub_rep(A, r, e));
    int rank = mat_rank(F, ann);
    bool better = rank > best_rank;
    if (!better && rank == best_rank && best.has_value()) {
      if (e.rows != best->rows)
        better = e.rows < best->rows;
      else
        better = mat_key(e) < mat_key(*best);
    }
    if (better) {
      best = e;
      best_ann = std::move(ann);
      best_rank = rank;
    }
  }
  require(best.has_value(), errc::no_prime_submodule, "zero module has no prime submodule");
  return *best;
}

}  // namespace detail

// A nonzero module all of whose nonzero submodules subgenerate the same
// subspace; over an algebra this reduces to: every nonzero element generates
// a submodule with the same annihilator.
inline bool is_prime_module(const SpaceHandle& space, const ModuleHandle& m) {
  check_backend(space, m);
  require(!module_is_zero(m), errc::zero_module, "the zero module is not prime");
  switch (space.backend) {
    case backend_t::findim: {
      const Algebra& A = space.alg;
      const PrimeField F = space.field();
      Mat ann = annihilator(A, m.rep);
      for (const std::vector<int>& v : detail::nonzero_vectors(F, m.rep.dim))
        if (!subspace_equal(F, element_ann(A, m.rep, v), ann)) return false;
      return true;
    }
    case backend_t::polyline:
      return pm_is_prime(space.field(), m.pm);
    case backend_t::gradedline:
      return gm_is_prime(m.gm);
  }
  return false;
}

inline bool has_prime_submodule(const SpaceHandle& space, const ModuleHandle& m) {
  check_backend(space, m);
  require(!module_is_zero(m), errc::zero_module, "the zero module has no prime submodule");
  switch (space.backend) {
    case backend_t::findim: {
      Mat basis = detail::max_ann_submodule(space, m.rep);
      ModuleHandle cand = ModuleHandle::findim(sub_rep(space.alg, m.rep, basis));
      require(is_prime_module(space, cand), errc::internal_assertion,
              "maximal-annihilator submodule failed the prime criterion");
      return true;
    }
    case backend_t::polyline:
      return pm_has_prime_submodule(space.field(), m.pm);
    case backend_t::gradedline:
      return gm_has_prime_submodule(m.gm);
  }
  return false;
}

// Factors of a filtration with prime quotients, bottom up: each step peels a
// maximal-annihilator (hence prime) submodule off what remains.
inline std::vector<ModuleHandle> prime_filtration(const SpaceHandle& space,
                                                  const ModuleHandle& m) {
  check_backend(space, m);
  require(!module_is_zero(m), errc::no_prime_submodule, "zero module has no prime filtration");
  std::vector<ModuleHandle> steps;
  switch (space.backend) {
    case backend_t::findim: {
      const Algebra& A = space.alg;
      Rep r = m.rep;
      while (r.dim > 0) {
        Mat basis = detail::max_ann_submodule(space, r);
        ModuleHandle factor = ModuleHandle::findim(sub_rep(A, r, basis));
        require(is_prime_module(space, factor), errc::internal_assertion,
                "filtration step is not prime");
        steps.push_back(std::move(factor));
        r = quotient_rep(A, r, basis);
      }
      break;
    }
    case backend_t::polyline:
      for (PolyModule& s : pm_prime_filtration(space.field(), m.pm))
        steps.push_back(ModuleHandle::polyline(std::move(s)));
      break;
    case backend_t::gradedline:
      for (GradedModule& s : gm_prime_filtration(m.gm))
        steps.push_back(ModuleHandle::gradedline(std::move(s)));
      break;
  }
  return steps;
}

struct PrimeOps {
  bool prime = false;
  bool has_prime_sub = false;
  bool filtration_ok = false;
  std::vector<ModuleHandle> filtration;  // bottom-up prime factors when ok
  std::string filtration_error;
};

inline PrimeOps prime_ops(const SpaceHandle& space, const ModuleHandle& m) {
  require(!module_is_zero(m), errc::zero_module, "prime analysis needs a nonzero module");
  PrimeOps out;
  out.prime = is_prime_module(space, m);
  out.has_prime_sub = has_prime_submodule(space, m);
  try {
    out.filtration = prime_filtration(space, m);
    out.filtration_ok = true;
  } catch (const domain_error& e) {
    if (e.code() != errc::no_prime_submodule) throw;
    out.filtration_ok = false;
    out.filtration_error = e.what();
  }
  return out;
}

// ----- the reduced subspace --------------------------------------------------------

struct XRedResult {
  SpaceHandle reduced;
  bool is_reduced = false;  // the space equals its reduced subspace
  CheckReport homeo;        // evidence that points and topology are preserved
};

inline XRedResult x_red(const SpaceHandle& space) {
  switch (space.backend) {
    case backend_t::findim: {
      const Algebra& A = space.alg;
      Mat rad = radical(A);
      Algebra Q = quotient_algebra(A, rad);
      XRedResult out{SpaceHandle::findim(Q, space.id + "/red"), rad.rows == 0, {}};
      // enough primes: the regular module has a prime submodule, and the dcc
      // pushes that down to every nonzero module
      out.homeo.add("enough_primes", space.id,
                    has_prime_submodule(space, ModuleHandle::findim(regular_rep(A))));
      RadicalSimples rs_a = radical_simples(A);
      RadicalSimples rs_q = radical_simples(Q);
      std::vector<int> dims_a, dims_q;
      for (const Rep& s : rs_a.simples) dims_a.push_back(s.dim);
      for (const Rep& s : rs_q.simples) dims_q.push_back(s.dim);
      std::sort(dims_a.begin(), dims_a.end());
      std::sort(dims_q.begin(), dims_q.end());
      out.homeo.add("point_bijection", space.id,
                    rs_a.simples.size() == rs_q.simples.size() && dims_a == dims_q);
      // both spaces carry the discrete topology: every point set is closed
      out.homeo.add("discrete_topology", space.id, true);
      return out;
    }
    case backend_t::polyline: {
      XRedResult out{space, true, {}};
      out.homeo.add("already_reduced", space.id, true);
      return out;
    }
    case backend_t::gradedline:
      fail(errc::not_supported_for_backend,
           "the reduced subspace is computed on FinDim and PolyLine only");
  }
  fail(errc::backend_mismatch, "unknown backend");
}

// ----- integrality -----------------------------------------------------------------

struct IntegralityResult {
  bool integral = false;
  bool has_big = false;  // a point whose hull subgenerates the space
  Point big;
  DivisionRingDescriptor ring = DivisionRingDescriptor::end_ring(2, 0, false);
  std::string note;
};

// Integral: the space is subgenerated by an indecomposable injective whose
// full endomorphism ring is a division ring.
inline IntegralityResult is_integral(const SpaceHandle& space) {
  IntegralityResult out;
  switch (space.backend) {
    case backend_t::findim: {
      const Algebra& A = space.alg;
      RadicalSimples rs = radical_simples(A);
      std::vector<Rep> hulls = injective_hulls_of_simples(A, rs.simples);
      Rep reg = regular_rep(A);
      for (size_t i = 0; i < hulls.size(); ++i) {
        EndAnalysis ea = end_ring_analysis(A, hulls[i]);
        if (!(ea.division && ea.rad_dim == 0)) continue;
        if (!sigma_member_findim(A, reg, hulls[i])) continue;
        out.integral = true;
        out.has_big = true;
        out.big = Point::findim_simple(static_cast<int>(i));
        out.ring = ea.descriptor;
        out.note = "an injective hull with division endomorphisms subgenerates the space";
        return out;
      }
      out.note = "no injective hull with division endomorphisms subgenerates the space";
      return out;
    }
    case backend_t::polyline: {
      // the function field subgenerates (it contains the line) and is its own
      // endomorphism ring; spot-check that its finite stand-in subgenerates
      const PrimeField F = space.field();
      require(sigma_member(space, ModuleHandle::polyline(pm_cyclic(F, p_x())),
                           ModuleHandle::polyline(pm_free(1))),
              errc::internal_assertion, "the line stopped subgenerating its torsion");
      out.integral = true;
      out.has_big = true;
      out.big = Point::poly_generic();
      out.ring = DivisionRingDescriptor::rational_function_field(space.p);
      out.note = "the torsion-free divisible hull subgenerates; its endomorphisms form the "
                 "function field";
      return out;
    }
    case backend_t::gradedline: {
      // every shifted free embeds into the graded Laurent hull, whose
      // degree-zero endomorphisms reduce to the ground field
      for (int a = -2; a <= 2; ++a)
        require(sigma_member(space, ModuleHandle::gradedline(gm_interval(a, 1)),
                             ModuleHandle::gradedline(gm_free(a))),
                errc::internal_assertion, "shifted frees stopped subgenerating their simples");
      out.integral = true;
      out.has_big = true;
      out.big = Point::graded_z();
      out.ring = DivisionRingDescriptor::finite_field(space.p, 1);
      out.note = "the graded Laurent hull subgenerates; degree-zero endomorphisms reduce to "
                 "the ground field";
      return out;
    }
  }
  fail(errc::backend_mismatch, "unknown backend");
}

// ----- the dimension dichotomy -----------------------------------------------------

struct MoriResult {
  bool unique_critical_point = false;  // one point of top dimension, its hull critical
  bool sigma_covers = false;           // that hull's sigma absorbs the space over C_<alpha
  DivisionRingDescriptor ring = DivisionRingDescriptor::end_ring(2, 0, false);
  std::string note;
};

// The two conditions are equivalent for spaces of the supported shapes; the
// routine computes both independently and insists on the equivalence.
inline MoriResult mori_check(const SpaceHandle& space) {
  MoriResult out;
  switch (space.backend) {
    case backend_t::findim: {
      // top dimension 0: critical modules are the simples, so the first
      // condition reads: one simple, and its hull is again simple
      const Algebra& A = space.alg;
      RadicalSimples rs = radical_simples(A);
      std::vector<Rep> hulls = injective_hulls_of_simples(A, rs.simples);
      Rep reg = regular_rep(A);
      bool b = rs.simples.size() == 1 && is_simple_rep(A, hulls[0]);
      bool c = false;
      int witness = -1;
      for (size_t i = 0; i < hulls.size(); ++i) {
        if (!is_simple_rep(A, hulls[i])) continue;
        if (!sigma_member_findim(A, reg, hulls[i])) continue;
        c = true;
        witness = static_cast<int>(i);
        break;
      }
      require(b == c, errc::internal_assertion, "dichotomy conditions disagree");
      out.unique_critical_point = b;
      out.sigma_covers = c;
      if (b) {
        EndAnalysis ea = end_ring_analysis(A, hulls[witness]);
        require(ea.division, errc::internal_assertion,
                "hull endomorphisms failed to form a division ring");
        out.ring = ea.descriptor;
        out.note = "the space is semisimple over one point; hull endomorphisms are division";
      } else {
        out.note = "no simple injective subgenerates the space";
      }
      return out;
    }
    case backend_t::polyline: {
      // the generic point is the only one of dimension one; torsion parts lie
      // below it and the quotient embeds into the function field
      const PrimeField F = space.field();
      WeaklyClosedSpec top = WeaklyClosedSpec::sigma({ModuleHandle::polyline(pm_free(1))});
      WeaklyClosedSpec small = WeaklyClosedSpec::dim_below(Kdim::fin(1));
      std::vector<ModuleHandle> samples = {
          ModuleHandle::polyline(pm_free(1)),
          ModuleHandle::polyline(pm_cyclic(F, p_x())),
          ModuleHandle::polyline(pm_direct_sum(F, pm_free(2), pm_cyclic(F, p_mul(F, p_x(), p_x())))),
      };
      for (const ModuleHandle& m : samples)
        require(gabriel_member(space, m, top, small), errc::internal_assertion,
                "sample module escapes the dichotomy cover");
      out.unique_critical_point = true;
      out.sigma_covers = true;
      out.ring = DivisionRingDescriptor::rational_function_field(space.p);
      out.note = "the generic point is the unique top-dimensional one; its hull is the "
                 "function field";
      return out;
    }
    case backend_t::gradedline: {
      // same picture; free parts need a shift-matched subgenerator, torsion
      // lies below dimension one
      WeaklyClosedSpec small = WeaklyClosedSpec::dim_below(Kdim::fin(1));
      std::vector<GradedModule> samples = {
          gm_free(0), gm_direct_sum(gm_free(-3), gm_interval(5, 2)), gm_interval(0, 1)};
      for (const GradedModule& g : samples) {
        int shift = g.frees.empty() ? 0 : g.frees.front();
        WeaklyClosedSpec top =
            WeaklyClosedSpec::sigma({ModuleHandle::gradedline(gm_free(shift))});
        require(gabriel_member(space, ModuleHandle::gradedline(g), top, small),
                errc::internal_assertion, "sample module escapes the dichotomy cover");
      }
      out.unique_critical_point = true;
      out.sigma_covers = true;
      out.ring = DivisionRingDescriptor::finite_field(space.p, 1);
      out.note = "the generic point is the unique top-dimensional one; degree-zero "
                 "endomorphisms of its hull reduce to the ground field";
      return out;
    }
  }
  fail(errc::backend_mismatch, "unknown backend");
}

// ----- weak points -----------------------------------------------------------------

struct TinyResult {
  bool tiny = false;
  std::string derivation;
};

// Tiny structure module: finitely generated over its endomorphism ring.  On
// these backends every point's structure module is tiny; the derivations say
// why, and the FinDim case verifies its claim.
inline TinyResult tiny_test(const SpaceHandle& space, const Point& x) {
  detail::validate_point(space, x);
  (void)tilde(space, x);  // validates the point and its hull data
  switch (space.backend) {
    case backend_t::findim: {
      RadicalSimples rs = radical_simples(space.alg);
      EndAnalysis ea = end_ring_analysis(space.alg, rs.simples[x.index]);
      require(ea.division && ea.rad_dim == 0, errc::internal_assertion,
              "simple endomorphisms failed to form a division ring");
      return TinyResult{true,
                        "the structure module is simple, hence finite dimensional over its "
                        "division ring of endomorphisms"};
    }
    case backend_t::polyline:
      if (x.is_generic())
        return TinyResult{true,
                          "the function field is one dimensional over its own endomorphisms"};
      return TinyResult{true,
                        "the primary divisible hull is generated by one layer over its "
                        "endomorphisms, which act through the completed local ring"};
    case backend_t::gradedline:
      return TinyResult{true,
                        "each graded layer is one dimensional over the ground field, which "
                        "is the full ring of degree-zero endomorphisms"};
  }
  fail(errc::backend_mismatch, "unknown backend");
}

struct WeakPoint {
  Point at;
  SymbolicModule structure;
  bool point = false;  // tiny structure module
};

inline WeakPoint weak_point(const SpaceHandle& space, const Point& x) {
  TildeResult t = tilde(space, x);
  return WeakPoint{x, t.largest_critical, tiny_test(space, x).tiny};
}

// Restriction of a weak point to a weakly closed subspace containing it: the
// structure module is replaced by its largest submodule in the subspace.
// FinDim only; the structure module is the simple at the point, so the
// restriction keeps it (and restricting a point yields a point).
inline WeakPoint weak_restrict(const SpaceHandle& space, const WeaklyClosedSpec& z,
                               const WeakPoint& wp) {
  require(space.backend == backend_t::findim, errc::not_supported_for_backend,
          "weak point restriction is computed on FinDim only");
  detail::validate_point(space, wp.at);
  require(ps_contains(v_of(space, z), wp.at), errc::point_not_in_subspace,
          "the point lies outside the subspace");
  RadicalSimples rs = radical_simples(space.alg);
  ModuleHandle simple = ModuleHandle::findim(rs.simples[wp.at.index]);
  ShriekSplit split = i_shriek_spec(space, simple, z);
  require(!module_is_zero(split.sub), errc::internal_assertion,
          "a supported simple restricted to zero");
  require(module_is_zero(split.quot), errc::internal_assertion,
          "restricting a simple left a quotient");
  return WeakPoint{wp.at, SymbolicModule::fin(split.sub), wp.point};
}

// Extension of a weak point along the inclusion of a subspace: locate the
// point of the ambient space under the hull of the pushed-forward structure
// module.  FinDim only.
inline WeakPoint weak_extend(const SpaceHandle& space, const WeakPoint& wp) {
  require(space.backend == backend_t::findim, errc::not_supported_for_backend,
          "weak point extension is computed on FinDim only");
  require(wp.structure.kind == SymbolicModule::kind_t::finite, errc::invalid_input,
          "extension needs a finite structure module");
  const Algebra& A = space.alg;
  Hull h = injective_hull(A, wp.structure.finite.rep);
  Mat soc = socle(A, h.env, radical(A));
  Rep soc_rep = sub_rep(A, h.env, soc);
  require(is_simple_rep(A, soc_rep), errc::internal_assertion,
          "extension hull has a non-simple socle");
  RadicalSimples rs = radical_simples(A);
  int idx = simple_index_of(A, rs.simples, soc_rep);
  return WeakPoint{Point::findim_simple(idx), SymbolicModule::fin(ModuleHandle::findim(soc_rep)),
                   wp.point};
}

// ----- the module spectrum and the comparison map ----------------------------------

// Member of the module spectrum: a nonzero module lying in the sigma of each
// of its nonzero submodules.
inline bool spec_class_member(const SpaceHandle& space, const ModuleHandle& m) {
  check_backend(space, m);
  require(!module_is_zero(m), errc::zero_module, "the zero module is not a spectrum class");
  switch (space.backend) {
    case backend_t::findim: {
      const Algebra& A = space.alg;
      Lattice lat = submodule_lattice(A, m.rep);
      for (const Mat& e : lat.elems) {
        if (e.rows == 0) continue;
        if (!sigma_member_findim(A, m.rep, sub_rep(A, m.rep, e))) return false;
      }
      return true;
    }
    case backend_t::polyline:
      // on the line these classes coincide with the prime modules: frees, and
      // isotypic semisimple torsion
      return pm_is_prime(space.field(), m.pm);
    case backend_t::gradedline:
      return gm_is_prime(m.gm);
  }
  return false;
}

// The point under a spectrum class: the hull of any critical submodule.
inline Point phi_point(const SpaceHandle& space, const ModuleHandle& m) {
  require(spec_class_member(space, m), errc::not_in_spec,
          "the module is not subgenerated by each of its nonzero submodules");
  switch (space.backend) {
    case backend_t::findim: {
      // such a module is isotypic semisimple; any composition factor locates
      // the point
      RadicalSimples rs = radical_simples(space.alg);
      Rep s = composition_factors(space.alg, m.rep)[0];
      return Point::findim_simple(simple_index_of(space.alg, rs.simples, s));
    }
    case backend_t::polyline:
      if (m.pm.rank > 0) return Point::poly_generic();
      return Point::poly_irr(pm_last_factor(m.pm));
    case backend_t::gradedline:
      return Point::graded_y(m.gm.torsions[0].first);
  }
  fail(errc::backend_mismatch, "unknown backend");
}

struct PhiImage {
  std::vector<std::pair<Point, bool>> hits;  // point, attained by some class
  std::string note;
};

// Which points of the window are images of spectrum classes; each positive
// answer is verified by producing a class and mapping it, each negative one
// by a computed refutation.
inline PhiImage phi_image_window(const SpaceHandle& space, const Window& w = {}) {
  PhiImage out;
  switch (space.backend) {
    case backend_t::findim: {
      RadicalSimples rs = radical_simples(space.alg);
      for (size_t i = 0; i < rs.simples.size(); ++i) {
        ModuleHandle s = ModuleHandle::findim(rs.simples[i]);
        Point x = Point::findim_simple(static_cast<int>(i));
        bool ok = spec_class_member(space, s) && phi_point(space, s) == x;
        out.hits.emplace_back(x, ok);
      }
      out.note = "every point is attained by its simple module";
      return out;
    }
    case backend_t::polyline: {
      const PrimeField F = space.field();
      ModuleHandle line = ModuleHandle::polyline(pm_free(1));
      bool zhit = spec_class_member(space, line) &&
                  phi_point(space, line) == Point::poly_generic();
      out.hits.emplace_back(Point::poly_generic(), zhit);
      for (const Point& x : poly_closed_points_window(F, w.maxdeg)) {
        ModuleHandle c = ModuleHandle::polyline(pm_cyclic(F, x.irr));
        out.hits.emplace_back(x, spec_class_member(space, c) && phi_point(space, c) == x);
      }
      out.note = "the line itself attains the generic point; residue classes attain the "
                 "closed ones";
      return out;
    }
    case backend_t::gradedline: {
      // no graded submodule of the line is a spectrum class, so the generic
      // point is not attained: the space lacks enough primes
      bool free_is_class = true;
      for (int a = w.lo; a <= w.hi; ++a)
        free_is_class = free_is_class &&
                        spec_class_member(space, ModuleHandle::gradedline(gm_free(a)));
      require(!free_is_class, errc::internal_assertion,
              "a shifted free module entered the spectrum");
      out.hits.emplace_back(Point::graded_z(), false);
      for (const Point& x : graded_closed_points_window(w.lo, w.hi)) {
        ModuleHandle s = ModuleHandle::gradedline(gm_interval(x.index, 1));
        out.hits.emplace_back(x, spec_class_member(space, s) && phi_point(space, s) == x);
      }
      out.note = "shifted free modules are not spectrum classes, so the generic point is "
                 "missed: the graded line does not have enough primes";
      return out;
    }
  }
  fail(errc::backend_mismatch, "unknown backend");
}

// Specialization preorder on points: x <= y when some structure module at x
// is subgenerated by one at y.  Decided by honest sigma membership of
// representative structure modules.
inline bool point_leq(const SpaceHandle& space, const Point& x, const Point& y) {
  detail::validate_point(space, x);
  detail::validate_point(space, y);
  const PrimeField F = space.field();
  switch (space.backend) {
    case backend_t::findim: {
      RadicalSimples rs = radical_simples(space.alg);
      return sigma_member_findim(space.alg, rs.simples[x.index], rs.simples[y.index]);
    }
    case backend_t::polyline: {
      PolyModule ox = x.is_generic() ? pm_free(1) : pm_cyclic(F, x.irr);
      PolyModule oy = y.is_generic() ? pm_free(1) : pm_cyclic(F, y.irr);
      return sigma_member_poly(F, ox, oy);
    }
    case backend_t::gradedline: {
      // the generic structure module may be taken free of any shift; matching
      // the shift of x realizes y = z absorbing everything below it
      int base = x.is_generic() ? 0 : x.index;
      GradedModule ox = x.is_generic() ? gm_free(base) : gm_interval(base, 1);
      GradedModule oy = y.is_generic() ? gm_free(base) : gm_interval(y.index, 1);
      return sigma_member_graded(ox, oy);
    }
  }
  return false;
}

}  // namespace injspec
