#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "injspec/core.hpp"
#include "injspec/pointset.hpp"

namespace injspec {

// ---------------------------------------------------------------------------
// Backend for finitely generated graded F_p[x]-modules, deg x = 1.
//
// Normal form: GradedModule{frees, torsions} with free summands recorded by
// generator degree and torsion summands (b, n) supported in degrees [b, b+n).
// Simples are S_i = (i, 1); the free module generated in degree a is written
// free(a).
// ---------------------------------------------------------------------------

inline GradedModule gm_sorted(GradedModule m) {
  std::sort(m.frees.begin(), m.frees.end());
  std::sort(m.torsions.begin(), m.torsions.end());
  for (auto& [b, n] : m.torsions)
    require(n >= 1, errc::invalid_input, "torsion summand needs positive length");
  return m;
}

inline GradedModule gm_free(int a) {
  GradedModule m;
  m.frees.push_back(a);
  return m;
}

inline GradedModule gm_interval(int b, int n) {
  GradedModule m;
  m.torsions.emplace_back(b, n);
  return gm_sorted(std::move(m));
}

inline GradedModule gm_simple(int i) { return gm_interval(i, 1); }

inline bool gm_is_zero(const GradedModule& m) { return m.frees.empty() && m.torsions.empty(); }

inline GradedModule gm_direct_sum(const GradedModule& a, const GradedModule& b) {
  GradedModule m = a;
  m.frees.insert(m.frees.end(), b.frees.begin(), b.frees.end());
  m.torsions.insert(m.torsions.end(), b.torsions.begin(), b.torsions.end());
  return gm_sorted(std::move(m));
}

inline std::string gm_key(const GradedModule& m) { return module_key(ModuleHandle::gradedline(m)); }

inline bool gm_equal(const GradedModule& a, const GradedModule& b) {
  return gm_sorted(a).frees == gm_sorted(b).frees && gm_sorted(a).torsions == gm_sorted(b).torsions;
}

// generator degrees all shifted by s: free(a) -> free(a+s), (b,n) -> (b+s,n)
inline GradedModule gm_shift(const GradedModule& m, int s) {
  GradedModule r = m;
  for (int& a : r.frees) a += s;
  for (auto& [b, n] : r.torsions) b += s;
  return gm_sorted(std::move(r));
}

inline int gm_component_dim(const GradedModule& m, int i) {
  int d = 0;
  for (int a : m.frees)
    if (a <= i) ++d;
  for (auto& [b, n] : m.torsions)
    if (b <= i && i < b + n) ++d;
  return d;
}

inline int gm_torsion_dim(const GradedModule& m) {
  int d = 0;
  for (auto& [b, n] : m.torsions) d += n;
  return d;
}

// ----- classification from a graded presentation ----------------------------

// Presentation: generators g_i of degree gendeg[i]; relation columns r_j with
// entry (i, j) in F_p[x] multiplying g_i.  Homogeneity forces every nonzero
// entry to be a monomial c x^e with e = coldeg(j) - gendeg(i), where coldeg(j)
// is shared by the whole column.
inline GradedModule classify_graded(const PrimeField& F, const std::vector<int>& gendeg,
                                    const PolyMat& rel) {
  int ng = static_cast<int>(gendeg.size());
  require(rel.rows == ng, errc::invalid_input, "one presentation row per generator");
  int nr = rel.cols;

  struct Entry {
    int c = 0;  // coefficient, 0 = absent
    int e = 0;  // exponent, fixed by the degrees
  };
  std::vector<std::vector<Entry>> M(static_cast<size_t>(ng), std::vector<Entry>(static_cast<size_t>(nr)));
  std::vector<std::optional<int>> coldeg(static_cast<size_t>(nr));

  for (int j = 0; j < nr; ++j) {
    for (int i = 0; i < ng; ++i) {
      const Poly& f = rel.at(i, j);
      if (p_is_zero(f)) continue;
      int nonzero = 0, exp = 0;
      for (size_t k = 0; k < f.c.size(); ++k)
        if (f.c[k] != 0) {
          ++nonzero;
          exp = static_cast<int>(k);
        }
      if (nonzero != 1)
        fail(errc::inhomogeneous_relation,
             "relation " + std::to_string(j) + " entry " + std::to_string(i) +
                 " is not a monomial");
      int implied = gendeg[static_cast<size_t>(i)] + exp;
      if (!coldeg[static_cast<size_t>(j)]) coldeg[static_cast<size_t>(j)] = implied;
      if (*coldeg[static_cast<size_t>(j)] != implied)
        fail(errc::inhomogeneous_relation,
             "relation " + std::to_string(j) + " mixes degrees " +
                 std::to_string(*coldeg[static_cast<size_t>(j)]) + " and " +
                 std::to_string(implied) + " at entry " + std::to_string(i));
      M[static_cast<size_t>(i)][static_cast<size_t>(j)] = Entry{f.c[static_cast<size_t>(exp)], exp};
    }
  }

  // Pivot on a globally minimal exponent.  Homogeneity is preserved: a row or
  // column operation only ever adds monomials of matching degree, so entries
  // stay monomials and their exponents never change.  Fill-in exponents are
  // at least the pivot exponent, so the global minimum is stable.
  std::vector<bool> row_done(static_cast<size_t>(ng), false),
      col_done(static_cast<size_t>(nr), false);
  std::vector<std::pair<int, int>> pivots;  // (row, exponent)
  auto entry = [&](int i, int j) -> Entry& {
    return M[static_cast<size_t>(i)][static_cast<size_t>(j)];
  };
  for (;;) {
    int best_e = -1;
    int bi = 0, bj = 0;
    for (int i = 0; i < ng; ++i) {
      if (row_done[static_cast<size_t>(i)]) continue;
      for (int j = 0; j < nr; ++j) {
        if (col_done[static_cast<size_t>(j)] || entry(i, j).c == 0) continue;
        if (best_e < 0 || entry(i, j).e < best_e) {
          best_e = entry(i, j).e;
          bi = i;
          bj = j;
        }
      }
    }
    if (best_e < 0) break;
    int pc = entry(bi, bj).c;
    // clear column bj with row operations
    for (int i = 0; i < ng; ++i) {
      if (i == bi || entry(i, bj).c == 0) continue;
      int mult = F.mul(entry(i, bj).c, F.inv(pc));
      int shift = entry(i, bj).e - best_e;
      for (int j = 0; j < nr; ++j) {
        if (entry(bi, j).c == 0) continue;
        int add_c = F.neg(F.mul(mult, entry(bi, j).c));
        int add_e = entry(bi, j).e + shift;
        if (entry(i, j).c == 0) {
          entry(i, j) = Entry{add_c, add_e};
        } else {
          require(entry(i, j).e == add_e, errc::internal_assertion, "graded reduction degree drift");
          entry(i, j).c = F.add(entry(i, j).c, add_c);
        }
        if (entry(i, j).c == 0) entry(i, j) = Entry{};
      }
    }
    // clear row bi with column operations; column bj now has a single entry,
    // so these touch row bi only
    for (int j = 0; j < nr; ++j) {
      if (j == bj) continue;
      entry(bi, j) = Entry{};
    }
    row_done[static_cast<size_t>(bi)] = true;
    col_done[static_cast<size_t>(bj)] = true;
    pivots.emplace_back(bi, best_e);
  }

  GradedModule out;
  for (auto& [i, e] : pivots)
    if (e >= 1) out.torsions.emplace_back(gendeg[static_cast<size_t>(i)], e);
  for (int i = 0; i < ng; ++i)
    if (!row_done[static_cast<size_t>(i)]) out.frees.push_back(gendeg[static_cast<size_t>(i)]);
  return gm_sorted(std::move(out));
}

// ----- support ----------------------------------------------------------------

// V(sigma[M]): free generators contribute z and the ray from the least free
// shift; a torsion summand (b, n) contributes y_b .. y_{b+n-1}.
inline PointSet support_rule_graded(const GradedModule& m) {
  bool hf = !m.frees.empty();
  std::vector<Point> pts;
  int ray = 0;
  if (hf) ray = *std::min_element(m.frees.begin(), m.frees.end());
  for (auto& [b, n] : m.torsions)
    for (int i = b; i < b + n; ++i)
      if (!hf || i < ray) pts.push_back(Point::graded_y(i));
  return ps_make(backend_t::gradedline, hf,
                 hf ? PointSet::ybase_t::ray : PointSet::ybase_t::empty, ray, std::move(pts));
}

// ----- sigma membership --------------------------------------------------------

// Subquotients of sums in the graded serial category: free(a) needs a free
// generator of m in degree <= a; an interval [b, e) fits under a free
// generator in degree <= b or inside some torsion interval [B, E) of m with
// B <= b and e <= E.
inline bool sigma_member_graded(const GradedModule& n, const GradedModule& m) {
  if (gm_is_zero(n)) return true;
  bool hf = !m.frees.empty();
  int A = hf ? *std::min_element(m.frees.begin(), m.frees.end()) : 0;
  for (int a : n.frees)
    if (!(hf && a >= A)) return false;
  for (auto& [b, len] : n.torsions) {
    int e = b + len;
    bool ok = hf && b >= A;
    if (!ok)
      for (auto& [B, N] : m.torsions)
        if (B <= b && e <= B + N) {
          ok = true;
          break;
        }
    if (!ok) return false;
  }
  return true;
}

// ----- summand decomposition (for relative socle scans) ------------------------

struct GSummand {
  bool free = false;
  int a = 0;  // free shift
  int b = 0;  // interval start
  int n = 0;  // interval length
};

inline std::vector<GSummand> gm_summands(const GradedModule& m) {
  std::vector<GSummand> out;
  for (int a : m.frees) out.push_back(GSummand{true, a, 0, 0});
  for (auto& [b, n] : m.torsions) out.push_back(GSummand{false, 0, b, n});
  return out;
}

// submodule of a summand after cutting j layers off the bottom
inline GradedModule gsummand_sub(const GSummand& s, int j) {
  if (s.free) return gm_free(s.a + j);
  if (j >= s.n) return GradedModule{};
  return gm_interval(s.b + j, s.n - j);
}

// the corresponding quotient: the first j layers
inline GradedModule gsummand_quot(const GSummand& s, int j) {
  if (s.free) return j == 0 ? GradedModule{} : gm_interval(s.a, j);
  int jj = std::min(j, s.n);
  return jj == 0 ? GradedModule{} : gm_interval(s.b, jj);
}

// ----- saturation ---------------------------------------------------------------

// Serre closure of sigma[gens]: membership only sees which simples occur as
// composition factors and whether a free summand is present.
struct GradedSaturation {
  PointSet simple_support;  // y-part only
  bool allows_free = false;
};

inline PointSet gm_component_support(const GradedModule& m) {
  PointSet s = support_rule_graded(m);
  s.has_generic = false;
  return ps_normalize(std::move(s));
}

inline GradedSaturation graded_saturation_of(const std::vector<GradedModule>& gens) {
  GradedSaturation sat;
  sat.simple_support = PointSet::empty_set(backend_t::gradedline);
  for (const GradedModule& g : gens) {
    sat.simple_support = ps_union(sat.simple_support, gm_component_support(g));
    sat.allows_free = sat.allows_free || !g.frees.empty();
  }
  return sat;
}

inline bool graded_saturation_member(const GradedSaturation& sat, const GradedModule& m) {
  if (!m.frees.empty() && !sat.allows_free) return false;
  return ps_subset(gm_component_support(m), sat.simple_support);
}

// ----- primes --------------------------------------------------------------------

// graded prime: all nonzero submodules share the annihilator, which pins the
// module to an isotypic semisimple S_i^m
inline bool gm_is_prime(const GradedModule& m) {
  if (gm_is_zero(m) || !m.frees.empty()) return false;
  int b0 = m.torsions.front().first;
  for (auto& [b, n] : m.torsions)
    if (n != 1 || b != b0) return false;
  return true;
}

inline bool gm_has_prime_submodule(const GradedModule& m) { return !m.torsions.empty(); }

// Factors of a filtration with prime (isotypic semisimple) quotients.  Free
// summands obstruct: free(a) has no prime submodule at all, and no finite
// chain through a module with a free summand has all factors prime.
inline std::vector<GradedModule> gm_prime_filtration(const GradedModule& m) {
  if (gm_is_zero(m)) fail(errc::no_prime_submodule, "zero module has no prime filtration");
  if (!m.frees.empty()) {
    if (m.torsions.empty())
      fail(errc::no_prime_submodule, "free graded modules have no prime submodule");
    fail(errc::no_prime_submodule,
         "a free summand admits no finite filtration with graded prime factors");
  }
  std::vector<GradedModule> steps;
  for (auto& [b, n] : m.torsions)
    for (int i = 0; i < n; ++i) steps.push_back(gm_simple(b + i));
  std::sort(steps.begin(), steps.end(),
            [](const GradedModule& x, const GradedModule& y) { return gm_key(x) < gm_key(y); });
  return steps;
}

// ----- basic closed sets -----------------------------------------------------------

struct GradedBasicResult {
  bool basic = false;
  std::optional<WeaklyClosedSpec> witness;
};

// s is of the form V(Z) iff it avoids z or contains a full ray of y-points.
// Witnesses: a simple family realizes any set of closed points; a shifted
// free module realizes {z} + ray; a Gabriel product unions the two.
inline GradedBasicResult is_basic_closed_graded(const PointSet& s0) {
  PointSet s = ps_normalize(s0);
  require(s.backend == backend_t::gradedline, errc::backend_mismatch, "graded point set expected");
  GradedBasicResult r;
  if (!s.has_generic) {
    r.basic = true;
    r.witness = WeaklyClosedSpec::simple_family(s);
    return r;
  }
  if (s.y_base == PointSet::ybase_t::empty) {
    r.basic = false;  // z in V(Z) forces a free generator, whose ray follows
    return r;
  }
  r.basic = true;
  int tail = s.y_base == PointSet::ybase_t::ray ? s.ray_start : 0;
  for (const Point& x : s.minus) tail = std::max(tail, x.index + 1);
  PointSet ypart = s;
  ypart.has_generic = false;
  ypart = ps_normalize(std::move(ypart));
  if (s.y_base == PointSet::ybase_t::ray && s.plus.empty() && s.minus.empty()) {
    r.witness = WeaklyClosedSpec::sigma({ModuleHandle::gradedline(gm_free(s.ray_start))});
  } else {
    r.witness = WeaklyClosedSpec::gabriel(
        {WeaklyClosedSpec::simple_family(ypart),
         WeaklyClosedSpec::sigma({ModuleHandle::gradedline(gm_free(tail))})});
  }
  return r;
}

// ----- windows ----------------------------------------------------------------------

inline std::vector<Point> graded_closed_points_window(int lo, int hi) {
  std::vector<Point> pts;
  for (int i = lo; i <= hi; ++i) pts.push_back(Point::graded_y(i));
  return pts;
}

}  // namespace injspec
