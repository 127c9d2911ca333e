#pragma once

#include <algorithm>
#include <vector>

#include "injspec/core.hpp"

namespace injspec {

// ---------------------------------------------------------------------------
// Exact algebra on symbolic point sets.
//
// A PointSet denotes  (has_generic ? {z} : {})  +  (extent(y_base) - minus)
// + plus.  The extent of a ray is infinite (graded line), the extent of
// `all` is infinite for the polyline and the graded line.  All operations
// below are exact: they never enumerate an infinite extent, only the finite
// correction sets.
// ---------------------------------------------------------------------------

inline bool point_in_extent(const PointSet& s, const Point& x) {
  if (x.is_generic()) return false;
  switch (s.y_base) {
    case PointSet::ybase_t::empty: return false;
    case PointSet::ybase_t::all: return true;
    case PointSet::ybase_t::ray: return x.kind == Point::kind_t::graded_y && x.index >= s.ray_start;
  }
  return false;
}

inline bool ps_contains(const PointSet& s, const Point& x) {
  if (x.is_generic()) return s.has_generic;
  for (const Point& p : s.plus)
    if (p == x) return true;
  if (!point_in_extent(s, x)) return false;
  for (const Point& p : s.minus)
    if (p == x) return false;
  return true;
}

namespace detail {

inline void sort_dedupe(std::vector<Point>& v) {
  std::sort(v.begin(), v.end(), point_less);
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

inline bool erase_point(std::vector<Point>& v, const Point& x) {
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] == x) {
      v.erase(v.begin() + i);
      return true;
    }
  return false;
}

}  // namespace detail

// Canonical form: plus disjoint from the extent, minus inside the extent,
// rays maximally extended and tightly started.
inline PointSet ps_normalize(PointSet s) {
  require(s.backend == backend_t::gradedline || s.y_base != PointSet::ybase_t::ray,
          errc::invalid_input, "ray extents only exist on the graded line");
  for (const Point& p : s.plus)
    require(!p.is_generic(), errc::invalid_input, "generic point belongs in has_generic");
  for (const Point& p : s.minus)
    require(!p.is_generic(), errc::invalid_input, "generic point belongs in has_generic");
  detail::sort_dedupe(s.plus);
  detail::sort_dedupe(s.minus);
  if (s.y_base == PointSet::ybase_t::empty) s.minus.clear();

  // a point both added and removed is a member: cancel the pair
  for (size_t i = 0; i < s.plus.size();) {
    if (detail::erase_point(s.minus, s.plus[i]) && point_in_extent(s, s.plus[i]))
      s.plus.erase(s.plus.begin() + i);
    else
      ++i;
  }
  // plus entries already covered by the extent are redundant
  s.plus.erase(std::remove_if(s.plus.begin(), s.plus.end(),
                              [&](const Point& p) {
                                if (!point_in_extent(s, p)) return false;
                                for (const Point& m : s.minus)
                                  if (m == p) return false;
                                return true;
                              }),
               s.plus.end());
  // minus entries outside the extent are meaningless
  s.minus.erase(std::remove_if(s.minus.begin(), s.minus.end(),
                               [&](const Point& p) { return !point_in_extent(s, p); }),
                s.minus.end());

  // a ray keeps no holes: restart it above the last removed index and list
  // the surviving members below as explicit pluses, so that equal sets
  // cannot split into a ray-minus form and a plus-ray form
  if (s.y_base == PointSet::ybase_t::ray && !s.minus.empty()) {
    int top = s.minus.back().index;
    for (int i = s.ray_start; i <= top; ++i) {
      Point y = Point::graded_y(i);
      bool removed = false;
      for (const Point& m : s.minus) removed = removed || m == y;
      if (!removed) s.plus.push_back(y);
    }
    s.minus.clear();
    s.ray_start = top + 1;
    detail::sort_dedupe(s.plus);
  }

  if (s.y_base == PointSet::ybase_t::ray) {
    bool changed = true;
    while (changed) {
      changed = false;
      Point below = Point::graded_y(s.ray_start - 1);
      if (detail::erase_point(s.plus, below)) {
        s.ray_start -= 1;
        changed = true;
      }
      Point at = Point::graded_y(s.ray_start);
      if (detail::erase_point(s.minus, at)) {
        s.ray_start += 1;
        changed = true;
      }
    }
  }
  return s;
}

inline PointSet ps_make(backend_t b, bool has_generic, PointSet::ybase_t base, int ray_start,
                        std::vector<Point> plus = {}, std::vector<Point> minus = {}) {
  PointSet s;
  s.backend = b;
  s.has_generic = has_generic;
  s.y_base = base;
  s.ray_start = ray_start;
  s.plus = std::move(plus);
  s.minus = std::move(minus);
  return ps_normalize(std::move(s));
}

inline bool ps_is_empty(const PointSet& s) {
  return !s.has_generic && s.y_base == PointSet::ybase_t::empty && s.plus.empty();
}

inline bool ps_extent_infinite(const PointSet& s) {
  return s.y_base != PointSet::ybase_t::empty;
}

namespace detail {

// all > ray(lower start) > empty as extents; assumes same backend.
inline int extent_rank(const PointSet& s) {
  switch (s.y_base) {
    case PointSet::ybase_t::empty: return 0;
    case PointSet::ybase_t::ray: return 1;
    case PointSet::ybase_t::all: return 2;
  }
  return 0;
}

}  // namespace detail

inline PointSet ps_union(const PointSet& a0, const PointSet& b0) {
  require(a0.backend == b0.backend, errc::backend_mismatch, "point sets from different backends");
  PointSet a = ps_normalize(a0), b = ps_normalize(b0);
  PointSet r;
  r.backend = a.backend;
  r.has_generic = a.has_generic || b.has_generic;
  int ra = detail::extent_rank(a), rb = detail::extent_rank(b);
  r.y_base = ra >= rb ? a.y_base : b.y_base;
  if (r.y_base == PointSet::ybase_t::ray)
    r.ray_start = (a.y_base == PointSet::ybase_t::ray && b.y_base == PointSet::ybase_t::ray)
                      ? std::min(a.ray_start, b.ray_start)
                      : (a.y_base == PointSet::ybase_t::ray ? a.ray_start : b.ray_start);
  // a point of the result extent is missing only if it is missing from both
  // inputs; every candidate lies in one of the minus sets
  std::vector<Point> candidates = a.minus;
  candidates.insert(candidates.end(), b.minus.begin(), b.minus.end());
  for (const Point& x : candidates)
    if (point_in_extent(r, x) && !ps_contains(a, x) && !ps_contains(b, x)) r.minus.push_back(x);
  // members outside the result extent all come from the plus sets
  std::vector<Point> pluses = a.plus;
  pluses.insert(pluses.end(), b.plus.begin(), b.plus.end());
  for (const Point& x : pluses)
    if (!point_in_extent(r, x)) r.plus.push_back(x);
  return ps_normalize(std::move(r));
}

inline PointSet ps_intersect(const PointSet& a0, const PointSet& b0) {
  require(a0.backend == b0.backend, errc::backend_mismatch, "point sets from different backends");
  PointSet a = ps_normalize(a0), b = ps_normalize(b0);
  PointSet r;
  r.backend = a.backend;
  r.has_generic = a.has_generic && b.has_generic;
  int ra = detail::extent_rank(a), rb = detail::extent_rank(b);
  const PointSet& weaker = ra <= rb ? a : b;
  r.y_base = weaker.y_base;
  if (r.y_base == PointSet::ybase_t::ray)
    r.ray_start = (a.y_base == PointSet::ybase_t::ray && b.y_base == PointSet::ybase_t::ray)
                      ? std::max(a.ray_start, b.ray_start)
                      : weaker.ray_start;
  // points of the result extent that fail membership in either input
  std::vector<Point> candidates = a.minus;
  candidates.insert(candidates.end(), b.minus.begin(), b.minus.end());
  for (const Point& x : candidates)
    if (point_in_extent(r, x) && !(ps_contains(a, x) && ps_contains(b, x))) r.minus.push_back(x);
  // shared members outside the result extent come from a plus set
  std::vector<Point> pluses = a.plus;
  pluses.insert(pluses.end(), b.plus.begin(), b.plus.end());
  for (const Point& x : pluses)
    if (!point_in_extent(r, x) && ps_contains(a, x) && ps_contains(b, x)) r.plus.push_back(x);
  return ps_normalize(std::move(r));
}

inline bool ps_equal(const PointSet& a0, const PointSet& b0) {
  PointSet a = ps_normalize(a0), b = ps_normalize(b0);
  if (a.backend != b.backend || a.has_generic != b.has_generic || a.y_base != b.y_base) return false;
  if (a.y_base == PointSet::ybase_t::ray && a.ray_start != b.ray_start) return false;
  return a.plus == b.plus && a.minus == b.minus;
}

inline bool ps_subset(const PointSet& a, const PointSet& b) {
  return ps_equal(ps_union(a, b), b);
}

inline std::string ps_to_string(const PointSet& s0) {
  PointSet s = ps_normalize(s0);
  std::string out;
  if (s.has_generic) out += "z";
  auto add = [&](const std::string& part) {
    if (!out.empty()) out += " u ";
    out += part;
  };
  switch (s.y_base) {
    case PointSet::ybase_t::empty: break;
    case PointSet::ybase_t::ray: add("ray(" + std::to_string(s.ray_start) + ")"); break;
    case PointSet::ybase_t::all: add("all-y"); break;
  }
  if (!s.minus.empty()) {
    std::string m = "minus {";
    for (size_t i = 0; i < s.minus.size(); ++i) m += (i ? "," : "") + s.minus[i].key();
    out += " " + m + "}";
  }
  if (!s.plus.empty()) {
    std::string p = "{";
    for (size_t i = 0; i < s.plus.size(); ++i) p += (i ? "," : "") + s.plus[i].key();
    add(p + "}");
  }
  if (out.empty()) out = "{}";
  return out;
}

// Finite view of a point set inside a window: graded indices in [lo, hi],
// polynomial points of degree <= maxdeg, findim simple indices in [0, hi].
// The generic point is included when present.
inline std::vector<Point> ps_members_in_window(const PointSet& s, int lo, int hi,
                                               const std::vector<Point>& closed_window) {
  std::vector<Point> out;
  if (s.has_generic) {
    if (s.backend == backend_t::polyline) out.push_back(Point::poly_generic());
    if (s.backend == backend_t::gradedline) out.push_back(Point::graded_z());
  }
  (void)lo;
  (void)hi;
  for (const Point& x : closed_window)
    if (ps_contains(s, x)) out.push_back(x);
  return out;
}

}  // namespace injspec
