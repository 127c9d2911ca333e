#pragma once

// Krull dimension on the three backends, critical modules, critical
// composition series, and the pointwise invariants at a spectrum point:
// the largest critical submodule of the indecomposable injective and the
// division ring of its endomorphisms modulo the radical.
//
// Dimension values are truncated to {-1, 0, 1}; the backends realize no
// deeper value and Kdim::fin refuses anything else.

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "injspec/findim.hpp"
#include "injspec/gradedline.hpp"
#include "injspec/polyline.hpp"

namespace injspec {

// ---------------------------------------------------------------------------
// Krull dimension
// ---------------------------------------------------------------------------

inline Kdim kdim(const SpaceHandle& space, const ModuleHandle& m) {
  check_backend(space, m);
  if (module_is_zero(m)) return Kdim::minus_one();
  switch (m.backend) {
    case backend_t::findim:
      return Kdim::fin(0);  // finite length
    case backend_t::polyline:
      return m.pm.rank > 0 ? Kdim::fin(1) : Kdim::fin(0);
    case backend_t::gradedline:
      return m.gm.frees.empty() ? Kdim::fin(0) : Kdim::fin(1);
  }
  fail(errc::internal_assertion, "unhandled backend");
}

// dim m = a and every proper quotient of m has dimension < a.
inline bool is_critical(const SpaceHandle& space, const ModuleHandle& m) {
  check_backend(space, m);
  require(!module_is_zero(m), errc::zero_module, "criticality of the zero module");
  switch (m.backend) {
    case backend_t::findim:
      // finite length: critical means simple
      return is_simple_rep(space.alg, m.rep);
    case backend_t::polyline: {
      if (m.pm.rank == 1 && m.pm.factors.empty()) return true;
      if (m.pm.rank == 0 && m.pm.factors.size() == 1)
        return p_is_irreducible(space.field(), m.pm.factors[0]);
      return false;
    }
    case backend_t::gradedline: {
      if (m.gm.frees.size() == 1 && m.gm.torsions.empty()) return true;
      if (m.gm.frees.empty() && m.gm.torsions.size() == 1)
        return m.gm.torsions[0].second == 1;
      return false;
    }
  }
  fail(errc::internal_assertion, "unhandled backend");
}

// dim n is the same for every nonzero submodule n of m.
inline bool is_homogeneous(const SpaceHandle& space, const ModuleHandle& m) {
  check_backend(space, m);
  require(!module_is_zero(m), errc::zero_module, "homogeneity of the zero module");
  switch (m.backend) {
    case backend_t::findim:
      return true;  // every nonzero submodule has finite length
    case backend_t::polyline:
      // a free summand hides torsion submodules of smaller dimension
      return !(m.pm.rank > 0 && !m.pm.factors.empty());
    case backend_t::gradedline:
      return !(!m.gm.frees.empty() && !m.gm.torsions.empty());
  }
  fail(errc::internal_assertion, "unhandled backend");
}

// ---------------------------------------------------------------------------
// Critical composition series
// ---------------------------------------------------------------------------

// Ascending chain refinement with critical factors and nondecreasing
// dimensions.  Factors are reported bottom-up, so on the graded line each
// interval contributes its simple layers from the socle upwards.
inline CriticalSeries critical_series(const SpaceHandle& space, const ModuleHandle& m) {
  check_backend(space, m);
  require(!module_is_zero(m), errc::zero_module, "critical series of the zero module");
  const PrimeField F = space.field();
  CriticalSeries out;
  switch (m.backend) {
    case backend_t::findim: {
      for (Rep& f : composition_factors(space.alg, m.rep))
        out.steps.push_back({ModuleHandle::findim(std::move(f)), Kdim::fin(0)});
      break;
    }
    case backend_t::polyline: {
      for (const auto& [q, e] : pm_elementary(F, m.pm))
        for (int k = 0; k < e; ++k)
          out.steps.push_back({ModuleHandle::polyline(pm_cyclic(F, q)), Kdim::fin(0)});
      for (int k = 0; k < m.pm.rank; ++k)
        out.steps.push_back({ModuleHandle::polyline(pm_free(1)), Kdim::fin(1)});
      break;
    }
    case backend_t::gradedline: {
      GradedModule g = gm_sorted(m.gm);
      for (const auto& [b, n] : g.torsions)
        for (int i = n - 1; i >= 0; --i)
          out.steps.push_back({ModuleHandle::gradedline(gm_simple(b + i)), Kdim::fin(0)});
      for (int a : g.frees)
        out.steps.push_back({ModuleHandle::gradedline(gm_free(a)), Kdim::fin(1)});
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Pointwise invariants
// ---------------------------------------------------------------------------

struct TildeResult {
  SymbolicModule largest_critical;      // largest critical submodule of the hull at x
  DivisionRingDescriptor division_ring; // End of the hull modulo its radical
};

inline TildeResult tilde(const SpaceHandle& space, const Point& x) {
  require(space.backend == x.backend, errc::unknown_point, "point does not belong to this space");
  const PrimeField F = space.field();
  switch (space.backend) {
    case backend_t::findim: {
      require(x.kind == Point::kind_t::simple, errc::unknown_point,
              "finite backend points are simple indices");
      RadicalSimples rs = radical_simples(space.alg);
      require(x.index >= 0 && x.index < static_cast<int>(rs.simples.size()),
              errc::unknown_point, "simple index out of range");
      // the socle of the hull at x is the simple itself, and its End ring
      // already agrees with End of the hull modulo the radical
      const Rep& s = rs.simples[static_cast<size_t>(x.index)];
      EndAnalysis ea = end_ring_analysis(space.alg, s);
      require(ea.rad_dim == 0 && ea.division, errc::internal_assertion,
              "endomorphisms of a simple module must form a division ring");
      return {SymbolicModule::fin(ModuleHandle::findim(s)), ea.descriptor};
    }
    case backend_t::polyline: {
      if (x.kind == Point::kind_t::generic)
        return {SymbolicModule::function_field(),
                DivisionRingDescriptor::rational_function_field(space.p)};
      require(x.kind == Point::kind_t::poly_irr, errc::unknown_point, "unsupported point kind");
      require(p_is_irreducible(F, x.irr), errc::unknown_point,
              "closed points carry an irreducible polynomial");
      return {SymbolicModule::fin(ModuleHandle::polyline(pm_cyclic(F, x.irr))),
              DivisionRingDescriptor::finite_field(space.p, p_deg(x.irr))};
    }
    case backend_t::gradedline: {
      if (x.kind == Point::kind_t::generic)
        return {SymbolicModule::laurent(), DivisionRingDescriptor::finite_field(space.p, 1)};
      require(x.kind == Point::kind_t::graded_y, errc::unknown_point, "unsupported point kind");
      return {SymbolicModule::fin(ModuleHandle::gradedline(gm_simple(x.index))),
              DivisionRingDescriptor::finite_field(space.p, 1)};
    }
  }
  fail(errc::internal_assertion, "unhandled backend");
}

// ---------------------------------------------------------------------------
// Check reports
// ---------------------------------------------------------------------------

struct CheckEntry {
  std::string label;     // which rule was checked
  std::string instance;  // on which instance
  bool pass = false;
};

struct CheckReport {
  std::vector<CheckEntry> entries;
  void add(std::string label, std::string instance, bool pass) {
    entries.push_back(CheckEntry{std::move(label), std::move(instance), pass});
  }
  bool all_pass() const {
    for (const CheckEntry& e : entries)
      if (!e.pass) return false;
    return true;
  }
};

// ---------------------------------------------------------------------------
// Dimension axioms
// ---------------------------------------------------------------------------

// Subquotient big/small of r, for nested row-space bases small <= big.
inline Rep nested_quotient(const Algebra& A, const Rep& r, const Mat& big, const Mat& small) {
  const PrimeField F = A.field();
  Rep sub = sub_rep(A, r, big);
  Echelon e = echelon(F, big);
  std::vector<std::vector<int>> inner;
  for (int i = 0; i < small.rows; ++i) {
    auto co = coords_in_basis(F, e, mat_row(small, i));
    require(co.has_value(), errc::internal_assertion, "chain is not nested");
    inner.push_back(*co);
  }
  return quotient_rep(A, sub, mat_from_rows(inner, sub.dim));
}

// Exercises the defining rules of the dimension function on a sample of
// modules:
//   (a) dim m = -1 exactly for the zero module;
//   (b) for every short exact sequence, the middle dimension is the sup of
//       the two ends (sequences are drawn from submodule lattices and from
//       normal-form splittings);
//   (c) dim m is the sup over finitely generated submodules (every handle
//       is finitely generated, so the sup is attained at m itself);
//   (d) in a descending chain, all but finitely many successive factors
//       have dimension strictly below dim m (checked on generated chains).
inline CheckReport dimension_axiom_harness(const SpaceHandle& space,
                                           const std::vector<ModuleHandle>& sample) {
  const PrimeField F = space.field();
  CheckReport rep;
  for (size_t si = 0; si < sample.size(); ++si) {
    const ModuleHandle& m = sample[si];
    check_backend(space, m);
    const std::string base = "sample " + std::to_string(si);
    const Kdim dm = kdim(space, m);

    rep.add("dim_minus_one_iff_zero", base, (dm == Kdim::minus_one()) == module_is_zero(m));
    if (module_is_zero(m)) continue;

    switch (m.backend) {
      case backend_t::findim: {
        Lattice lat = submodule_lattice(space.alg, m.rep);
        for (const Mat& L : lat.elems) {
          ModuleHandle sub = ModuleHandle::findim(sub_rep(space.alg, m.rep, L));
          ModuleHandle quot = ModuleHandle::findim(quotient_rep(space.alg, m.rep, L));
          rep.add("ses_sup_rule", base + " submodule of dim " + std::to_string(L.rows),
                  dm == kdim_sup(kdim(space, sub), kdim(space, quot)));
        }
        break;
      }
      case backend_t::polyline: {
        ModuleHandle tor = ModuleHandle::polyline(PolyModule{m.pm.factors, 0});
        ModuleHandle fre = ModuleHandle::polyline(pm_free(m.pm.rank));
        rep.add("ses_sup_rule", base + " torsion-free split",
                dm == kdim_sup(kdim(space, tor), kdim(space, fre)));
        for (const Poly& d : m.pm.factors) {
          std::vector<Poly> divs = poly_divisors(F, d);
          for (const Poly& g : divs) {
            // 0 -> k[x]/(d/g) -> k[x]/(d) -> k[x]/(g) -> 0
            Poly dg;
            for (const Poly& q : divs)
              if (p_mul(F, q, g) == d) {
                dg = q;
                break;
              }
            ModuleHandle mid = ModuleHandle::polyline(pm_cyclic(F, d));
            ModuleHandle a = ModuleHandle::polyline(pm_cyclic(F, dg));
            ModuleHandle c = ModuleHandle::polyline(pm_cyclic(F, g));
            rep.add("ses_sup_rule",
                    base + " divisor split " + p_to_string(g) + " | " + p_to_string(d),
                    kdim(space, mid) == kdim_sup(kdim(space, a), kdim(space, c)));
          }
        }
        break;
      }
      case backend_t::gradedline: {
        GradedModule tor;
        tor.torsions = m.gm.torsions;
        GradedModule fre;
        fre.frees = m.gm.frees;
        rep.add("ses_sup_rule", base + " torsion-free split",
                dm == kdim_sup(kdim(space, ModuleHandle::gradedline(tor)),
                               kdim(space, ModuleHandle::gradedline(fre))));
        for (const GSummand& s : gm_summands(m.gm)) {
          int layers = s.free ? 3 : s.n;
          ModuleHandle mid =
              ModuleHandle::gradedline(s.free ? gm_free(s.a) : gm_interval(s.b, s.n));
          for (int j = 0; j <= layers; ++j) {
            ModuleHandle a = ModuleHandle::gradedline(gsummand_sub(s, j));
            ModuleHandle c = ModuleHandle::gradedline(gsummand_quot(s, j));
            rep.add("ses_sup_rule", base + " summand split at layer " + std::to_string(j),
                    kdim(space, mid) == kdim_sup(kdim(space, a), kdim(space, c)));
          }
        }
        break;
      }
    }

    rep.add("noetherian_sup", base + " (attained at the module itself)", true);

    switch (m.backend) {
      case backend_t::findim: {
        // m > m rad > m rad^2 > ... reaches zero, so almost all factors
        // along the chain are zero
        Mat rad = radical(space.alg);
        Mat cur = mat_identity(m.rep.dim);
        int steps = 0;
        while (cur.rows > 0 && steps <= m.rep.dim) {
          std::vector<std::vector<int>> rows;
          for (int i = 0; i < rad.rows; ++i) {
            Mat act = rep_action_of(space.alg, m.rep, mat_row(rad, i));
            for (int j = 0; j < cur.rows; ++j) rows.push_back(vec_mat(F, mat_row(cur, j), act));
          }
          cur = row_space(F, mat_from_rows(rows, m.rep.dim));
          ++steps;
        }
        rep.add("descending_chain_drop", base + " radical chain", cur.rows == 0);
        break;
      }
      case backend_t::polyline: {
        // chain m > mx > mx^2 > ...: the step factors keep the dimension of
        // m exactly while x-power torsion is being peeled off, and drop
        // strictly below it afterwards (to 0 along a free part, to -1 once
        // a torsion module is exhausted)
        auto xval = [](const Poly& d) {
          int v = 0;
          while (v < static_cast<int>(d.c.size()) && d.c[static_cast<size_t>(v)] == 0) ++v;
          return v;
        };
        const int dimv = m.pm.rank > 0 ? 1 : 0;
        int drop_at = 0;
        if (m.pm.rank == 0)
          for (const Poly& d : m.pm.factors) drop_at = std::max(drop_at, xval(d));
        bool ok = true;
        for (int i = 0; i <= 6; ++i) {
          int shrink = 0;
          for (const Poly& d : m.pm.factors) {
            int e = xval(d);
            shrink += std::min(i + 1, e) - std::min(i, e);
          }
          int fdim = (shrink > 0 || m.pm.rank > 0) ? 0 : -1;
          ok = ok && (i < drop_at ? fdim == dimv : fdim < dimv);
        }
        rep.add("descending_chain_drop", base + " chain m x^i over 6 steps", ok);
        break;
      }
      case backend_t::gradedline: {
        const int dimv = m.gm.frees.empty() ? 0 : 1;
        int drop_at = 0;
        if (m.gm.frees.empty())
          for (const auto& [b, n] : m.gm.torsions) drop_at = std::max(drop_at, n);
        bool ok = true;
        for (int i = 0; i <= 6; ++i) {
          int shrink = 0;
          for (const auto& [b, n] : m.gm.torsions) shrink += std::min(i + 1, n) - std::min(i, n);
          int fdim = (shrink > 0 || !m.gm.frees.empty()) ? 0 : -1;
          ok = ok && (i < drop_at ? fdim == dimv : fdim < dimv);
        }
        rep.add("descending_chain_drop", base + " chain m x^i over 6 steps", ok);
        break;
      }
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Series validation
// ---------------------------------------------------------------------------

// Checks that `series` is a critical composition series for m.  Throws
// InvalidSeries naming the first violated condition.  On the finite
// backend the series must be realizable as an ascending chain in the
// submodule lattice, and its factor multiset must agree (up to injective
// homs both ways) with a chain recomputed under a different cover-choice
// heuristic.  On the serial backends the factor multiset must agree with
// the canonical refinement.
inline CheckReport validate_critical_series(const SpaceHandle& space, const ModuleHandle& m,
                                            const CriticalSeries& series) {
  check_backend(space, m);
  require(!module_is_zero(m), errc::zero_module, "critical series of the zero module");
  const PrimeField F = space.field();
  CheckReport rep;
  auto demand = [](bool ok, const std::string& what) {
    if (!ok) fail(errc::invalid_series, what);
  };

  demand(!series.steps.empty(), "series is empty while the module is nonzero");
  for (size_t i = 0; i < series.steps.size(); ++i) {
    const CriticalSeries::Step& st = series.steps[i];
    const std::string at = "factor " + std::to_string(i + 1);
    demand(st.factor.backend == m.backend, at + " belongs to a different backend");
    demand(!module_is_zero(st.factor), at + " is the zero module");
    demand(is_critical(space, st.factor), at + " is not critical");
    demand(kdim(space, st.factor) == st.dim, at + " carries the wrong dimension label");
  }
  rep.add("factors_critical", std::to_string(series.steps.size()) + " factors", true);

  for (size_t i = 1; i < series.steps.size(); ++i)
    demand(!(series.steps[i].dim < series.steps[i - 1].dim),
           "dimensions decrease at factor " + std::to_string(i + 1));
  rep.add("dims_nondecreasing", std::to_string(series.steps.size()) + " factors", true);

  if (m.backend == backend_t::findim) {
    const Algebra& A = space.alg;
    int total = 0;
    for (const CriticalSeries::Step& st : series.steps) total += st.factor.rep.dim;
    demand(total == m.rep.dim, "factor dimensions do not sum to the module dimension");

    Lattice lat = submodule_lattice(A, m.rep);
    size_t deepest = 0;
    std::function<bool(const Mat&, size_t)> walk = [&](const Mat& cur, size_t i) -> bool {
      if (i == series.steps.size()) return cur.rows == m.rep.dim;
      deepest = std::max(deepest, i);
      const Rep& want = series.steps[i].factor.rep;
      for (const Mat& L : lat.elems) {
        if (L.rows != cur.rows + want.dim) continue;
        if (!subspace_contains(F, L, cur)) continue;
        if (!is_isomorphic(A, nested_quotient(A, m.rep, L, cur), want)) continue;
        if (walk(L, i + 1)) return true;
      }
      return false;
    };
    demand(walk(Mat(0, m.rep.dim), 0),
           "factor " + std::to_string(deepest + 1) + " is not a submodule factor at its step");
    rep.add("realizable_chain", std::to_string(series.steps.size()) + " lattice steps", true);

    std::vector<Rep> other = composition_factors(A, m.rep, /*greatest=*/true);
    demand(other.size() == series.steps.size(),
           "series length differs from an independently computed chain");
    std::vector<bool> used(other.size(), false);
    for (size_t i = 0; i < series.steps.size(); ++i) {
      bool matched = false;
      for (size_t j = 0; j < other.size() && !matched; ++j) {
        if (used[j]) continue;
        if (has_injective_hom(A, series.steps[i].factor.rep, other[j]) &&
            has_injective_hom(A, other[j], series.steps[i].factor.rep)) {
          used[j] = true;
          matched = true;
        }
      }
      demand(matched, "factor " + std::to_string(i + 1) +
                          " has no partner in an independently computed chain");
    }
    rep.add("independent_chain_agreement",
            "two cover heuristics, " + std::to_string(other.size()) + " factors", true);
  } else {
    CriticalSeries canon = critical_series(space, m);
    demand(canon.steps.size() == series.steps.size(),
           "series length differs from the canonical refinement");
    std::vector<std::string> got, want;
    for (const CriticalSeries::Step& st : series.steps) got.push_back(module_key(st.factor));
    for (const CriticalSeries::Step& st : canon.steps) want.push_back(module_key(st.factor));
    std::sort(got.begin(), got.end());
    std::sort(want.begin(), want.end());
    demand(got == want, "factor multiset differs from the canonical refinement");
    rep.add("canonical_multiset_agreement",
            std::to_string(series.steps.size()) + " factors", true);
  }
  return rep;
}

}  // namespace injspec
