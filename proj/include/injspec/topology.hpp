#pragma once

// Symbolic point-set topology on a spectrum window: set algebra, the
// basic-vs-closed distinction, closure, irreducibility of subsets, and
// transport of sets into subspaces.
//
// The closed families are interpretive commitments, one per backend:
//   - FinDim: every subset is closed (arbitrary sums of simples are weakly
//     closed, so the topology is discrete),
//   - PolyLine: finite sets of closed points and the whole space (a set
//     containing the generic point, or infinite by construction, is dense),
//   - GradedLine: every representable point set is closed (simple families
//     realize any y-set, and the generic singleton is an intersection of
//     basic sets).
// Every query works inside the representable family and says so in notes.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core.hpp"
#include "errors.hpp"
#include "pointset.hpp"
#include "spectrum.hpp"

namespace injspec {

// ----- the closed family -----------------------------------------------------------

inline std::string closed_family_rule(backend_t b) {
  switch (b) {
    case backend_t::findim:
      return "every point set is closed (discrete topology)";
    case backend_t::polyline:
      return "closed sets: finite sets of closed points, and the whole space";
    case backend_t::gradedline:
      return "every representable point set is closed";
  }
  return "";
}

inline bool is_closed_set(const SpaceHandle& space, const PointSet& s0) {
  require(s0.backend == space.backend, errc::backend_mismatch, "point set backend mismatch");
  PointSet s = ps_normalize(s0);
  if (space.backend != backend_t::polyline) return true;
  if (ps_equal(s, whole_point_set(space))) return true;
  return !s.has_generic && s.y_base == PointSet::ybase_t::empty;
}

// ----- set algebra -----------------------------------------------------------------

struct PointSetAlgebra {
  PointSet union_set;
  PointSet intersect_set;
  bool a_subset_b = false;
  bool b_subset_a = false;
  bool equal = false;
};

inline PointSetAlgebra pointset_algebra(const PointSet& a, const PointSet& b) {
  PointSetAlgebra out{ps_union(a, b), ps_intersect(a, b), ps_subset(a, b), ps_subset(b, a),
                      ps_equal(a, b)};
  return out;
}

// ----- basic closed sets -----------------------------------------------------------

struct BasicClosed {
  bool basic = false;
  std::optional<WeaklyClosedSpec> witness;  // v_of(witness) equals the input
  std::string note;
};

inline BasicClosed is_basic_closed(const SpaceHandle& space, const PointSet& s0) {
  require(s0.backend == space.backend, errc::backend_mismatch, "point set backend mismatch");
  PointSet s = ps_normalize(s0);
  BasicClosed out;
  switch (space.backend) {
    case backend_t::findim: {
      out.basic = true;
      if (ps_is_empty(s)) {
        out.witness = WeaklyClosedSpec::zero();
        out.note = "the empty set is the support of the zero subspace";
      } else {
        RadicalSimples rs = radical_simples(space.alg);
        std::vector<ModuleHandle> gens;
        for (const Point& x : s.plus) gens.push_back(ModuleHandle::findim(rs.simples[x.index]));
        out.witness = WeaklyClosedSpec::sigma(std::move(gens));
        out.note = "sigma of the direct sum of the listed simples";
      }
      break;
    }
    case backend_t::polyline: {
      if (ps_is_empty(s)) {
        out.basic = true;
        out.witness = WeaklyClosedSpec::zero();
        out.note = "the empty set is the support of the zero subspace";
        break;
      }
      if (ps_equal(s, whole_point_set(space))) {
        out.basic = true;
        out.witness = WeaklyClosedSpec::sigma({ModuleHandle::polyline(pm_free(1))});
        out.note = "the line subgenerates everything, so its sigma supports every point";
        break;
      }
      if (s.has_generic) {
        out.note = "a proper set containing the generic point is dense, hence not closed";
        break;
      }
      if (s.y_base != PointSet::ybase_t::empty) {
        out.note = "an infinite set of closed points is dense, hence not closed";
        break;
      }
      const PrimeField F = space.field();
      Poly prod = p_one();
      for (const Point& x : s.plus) prod = p_mul(F, prod, x.irr);
      out.basic = true;
      out.witness = WeaklyClosedSpec::sigma({ModuleHandle::polyline(pm_cyclic(F, prod))});
      out.note = "sigma of the residue class ring at the product of the listed irreducibles";
      break;
    }
    case backend_t::gradedline: {
      GradedBasicResult gr = is_basic_closed_graded(s);
      out.basic = gr.basic;
      out.witness = gr.witness;
      out.note = gr.basic
                     ? "simple families realize y-sets; a shifted free adds the generic ray"
                     : "a set with the generic point but no full ray of y-points is not basic";
      break;
    }
  }
  if (out.witness.has_value())
    require(ps_equal(v_of(space, *out.witness), s), errc::internal_assertion,
            "basic witness supports the wrong set");
  return out;
}

// ----- closure ---------------------------------------------------------------------

inline PointSet closure(const SpaceHandle& space, const PointSet& s0) {
  require(s0.backend == space.backend, errc::backend_mismatch, "point set backend mismatch");
  PointSet s = ps_normalize(s0);
  if (space.backend != backend_t::polyline) return s;
  if (ps_is_empty(s)) return s;
  if (s.has_generic || s.y_base != PointSet::ybase_t::empty) return whole_point_set(space);
  return s;
}

// ----- irreducibility of subsets ---------------------------------------------------

namespace detail {

// any member of a nonempty normalized set, generic point first
inline Point some_member(const PointSet& s) {
  if (s.has_generic)
    return s.backend == backend_t::polyline ? Point::poly_generic() : Point::graded_z();
  if (!s.plus.empty()) return s.plus.front();
  require(s.y_base != PointSet::ybase_t::empty, errc::internal_assertion,
          "member requested from an empty set");
  if (s.y_base == PointSet::ybase_t::ray) return Point::graded_y(s.ray_start);
  // base "all": the predecessor of the smallest excluded index is present
  int c = 0;
  for (const Point& x : s.minus) c = std::min(c, x.index);
  return Point::graded_y(c - 1);
}

inline PointSet without(const PointSet& s0, const Point& x) {
  PointSet s = s0;
  if (x.is_generic()) {
    s.has_generic = false;
    return ps_normalize(std::move(s));
  }
  for (size_t i = 0; i < s.plus.size(); ++i) {
    if (s.plus[i] == x) {
      s.plus.erase(s.plus.begin() + static_cast<long>(i));
      return ps_normalize(std::move(s));
    }
  }
  s.minus.push_back(x);
  return ps_normalize(std::move(s));
}

}  // namespace detail

struct SetIrreducibility {
  bool irreducible = false;
  bool input_closed = true;  // when false, the closure below was analyzed instead
  PointSet decided_on;
  bool has_generic = false;  // a member whose closure is the whole set
  Point generic;
  bool has_parts = false;  // on a reducible set: proper closed pieces covering it
  PointSet part_a;
  PointSet part_b;
  std::string note;
};

inline SetIrreducibility is_irreducible_set(const SpaceHandle& space, const PointSet& s0) {
  SetIrreducibility out;
  out.input_closed = is_closed_set(space, s0);
  out.decided_on = closure(space, s0);
  out.part_a = PointSet::empty_set(space.backend);
  out.part_b = PointSet::empty_set(space.backend);
  const PointSet& s = out.decided_on;
  if (ps_is_empty(s)) {
    out.note = "the empty set is not irreducible and admits no decomposition";
    return out;
  }
  // the whole line is irreducible: its proper closed subsets are finite, so
  // two of them never cover it, and the generic point is dense
  if (space.backend == backend_t::polyline && ps_equal(s, whole_point_set(space))) {
    require(ps_equal(closure(space, ps_make(backend_t::polyline, true, PointSet::ybase_t::empty, 0)),
                     s),
            errc::internal_assertion, "the generic point lost density");
    out.irreducible = true;
    out.has_generic = true;
    out.generic = Point::poly_generic();
    out.note = "proper closed subsets are finite; the generic point is dense";
    return out;
  }
  Point first = detail::some_member(s);
  PointSet rest = detail::without(s, first);
  if (ps_is_empty(rest)) {
    out.irreducible = true;
    out.has_generic = true;
    out.generic = first;
    out.note = "a singleton is irreducible with itself as generic point";
    return out;
  }
  // every remaining representable set splits into two proper closed pieces
  out.has_parts = true;
  out.part_a = ps_make(space.backend, first.is_generic(), PointSet::ybase_t::empty, 0,
                       first.is_generic() ? std::vector<Point>{} : std::vector<Point>{first});
  out.part_b = rest;
  require(is_closed_set(space, out.part_a) && is_closed_set(space, out.part_b),
          errc::internal_assertion, "decomposition pieces are not closed");
  require(ps_equal(ps_union(out.part_a, out.part_b), s), errc::internal_assertion,
          "decomposition pieces do not cover the set");
  require(!ps_equal(out.part_a, s) && !ps_equal(out.part_b, s), errc::internal_assertion,
          "decomposition pieces are not proper");
  out.note = "split one point off; both pieces are closed in this backend's family";
  return out;
}

// ----- transport into a subspace ---------------------------------------------------

struct TransportResult {
  PointSet set;               // the input, point keys preserved
  PointSet subspace_closure;  // closure within the subspace topology
  bool closed_in_subspace = false;
  bool irreducible_in_subspace = false;
};

// Reinterprets s as a subset of the subspace cut out by z.  The subspace
// topology is induced, so its closure is the ambient closure intersected
// with the subspace; both descriptions are computed and compared.
inline TransportResult transport(const SpaceHandle& space, const WeaklyClosedSpec& z,
                                 const PointSet& s0) {
  require(s0.backend == space.backend, errc::backend_mismatch, "point set backend mismatch");
  PointSet s = ps_normalize(s0);
  PointSet v = v_of(space, z);
  require(ps_subset(s, v), errc::point_not_in_subspace, "the set leaves the subspace");
  TransportResult out{s, PointSet::empty_set(space.backend), false, false};

  // induced description: ambient closure cut down to the subspace
  PointSet induced = ps_intersect(closure(space, s), v);
  // direct description: the subspace's own closed family (relative version of
  // the ambient one: on the line, finite sets and the full subspace)
  PointSet direct = s;
  if (space.backend == backend_t::polyline && !ps_is_empty(s) &&
      (s.has_generic || s.y_base != PointSet::ybase_t::empty))
    direct = v;
  require(ps_equal(induced, direct), errc::internal_assertion,
          "subspace closure descriptions disagree");
  out.subspace_closure = induced;
  out.closed_in_subspace = ps_equal(s, out.subspace_closure);

  // irreducibility within the subspace: proper relatively-closed subsets are
  // the ambient ones cut down, so the verdict matches the ambient verdict on
  // the relative closure
  bool direct_irr;
  const PointSet& c = out.subspace_closure;
  if (ps_is_empty(c)) {
    direct_irr = false;
  } else if (space.backend == backend_t::polyline && ps_equal(c, v) &&
             (v.has_generic || ps_extent_infinite(v))) {
    direct_irr = true;  // proper relatively-closed sets are finite, c is not
  } else {
    direct_irr = ps_is_empty(detail::without(c, detail::some_member(c)));
  }
  bool ambient_irr = is_irreducible_set(space, c).irreducible;
  require(direct_irr == ambient_irr, errc::internal_assertion,
          "subspace irreducibility descriptions disagree");
  out.irreducible_in_subspace = direct_irr;
  return out;
}

}  // namespace injspec
