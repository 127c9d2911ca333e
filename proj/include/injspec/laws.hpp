#pragma once

// Property-law runner over the built-in catalog plus seeded random instances.
// Each suite evaluates a family of identities end to end through the public
// operations and reports per-law pass counts with the first counterexample
// key.  Instance keys are constructed in a deterministic order, so a report
// is reproducible from (suite, seed, window) alone.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "injspec/catalog.hpp"
#include "injspec/spectrum.hpp"
#include "injspec/topology.hpp"

namespace injspec {

struct LawSuite {
  std::string name;
  int pass_count = 0;
  int fail_count = 0;
  std::string first_counterexample;  // instance key of the first failure
  std::string first_detail;          // error text when that instance threw
};

struct LawReport {
  std::uint64_t seed = 0;
  Window window;
  std::vector<LawSuite> suites;
  bool all_pass() const {
    for (const LawSuite& s : suites)
      if (s.fail_count > 0) return false;
    return true;
  }
};

inline const std::vector<std::string>& law_suite_names() {
  static const std::vector<std::string> names = {"union", "intersection", "hom",
                                                 "endiso", "series", "thm614",
                                                 "thm73",  "phi",          "roundtrip",
                                                 "axioms"};
  return names;
}

namespace detail {

class SuiteRecorder {
 public:
  explicit SuiteRecorder(std::string name) { out_.name = std::move(name); }

  template <class Fn>
  void law(const std::string& key, Fn&& fn) {
    bool pass = false;
    std::string detail;
    try {
      pass = fn();
    } catch (const std::exception& e) {
      detail = e.what();
    }
    if (pass) {
      ++out_.pass_count;
      return;
    }
    ++out_.fail_count;
    if (out_.first_counterexample.empty()) {
      out_.first_counterexample = key;
      out_.first_detail = detail;
    }
  }

  LawSuite take() { return std::move(out_); }

 private:
  LawSuite out_;
};

inline const std::vector<std::string>& law_findim_ids() {
  static const std::vector<std::string> ids = {"F2",    "F4",    "F2xF2", "F2_t2", "T2_F2",
                                               "M2_F2", "T2_F3", "F3xF3", "F3_t2", "M2_F3"};
  return ids;
}

inline const std::vector<std::string>& law_serial_ids() {
  static const std::vector<std::string> ids = {"poly2", "poly3", "graded2"};
  return ids;
}

inline std::vector<std::string> law_all_ids() {
  std::vector<std::string> ids = law_findim_ids();
  for (const std::string& id : law_serial_ids()) ids.push_back(id);
  return ids;
}

inline std::mt19937_64 suite_rng(std::uint64_t seed, size_t suite_index) {
  return std::mt19937_64(seed ^ (0x9e3779b97f4a7c15ULL * (suite_index + 1)));
}

// random direct sum of simples, dimension at most 4
inline ModuleHandle random_findim_module(std::mt19937_64& rng, const SpaceHandle& space) {
  RadicalSimples rs = radical_simples(space.alg);
  const PrimeField F = space.field();
  Rep acc;
  int dim = 0;
  int parts = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < parts; ++k) {
    const Rep& s = rs.simples[rng() % rs.simples.size()];
    if (dim + s.dim > 4) break;
    acc = dim == 0 ? s : direct_sum(F, acc, s);
    dim += s.dim;
  }
  if (dim == 0) acc = rs.simples[0];
  return ModuleHandle::findim(std::move(acc));
}

inline ModuleHandle random_poly_module(std::mt19937_64& rng, const PrimeField& F, int maxdeg) {
  std::vector<Poly> pool;
  for (const Point& x : poly_closed_points_window(F, maxdeg)) pool.push_back(x.irr);
  std::vector<std::pair<Poly, int>> elem;
  int ne = static_cast<int>(rng() % 3);
  for (int k = 0; k < ne; ++k)
    elem.push_back({pool[rng() % pool.size()], 1 + static_cast<int>(rng() % 2)});
  int rank = static_cast<int>(rng() % 2);
  if (elem.empty() && rank == 0) rank = 1;
  return ModuleHandle::polyline(pm_from_elementary(F, std::move(elem), rank));
}

inline ModuleHandle random_graded_module(std::mt19937_64& rng, const Window& w) {
  GradedModule m;
  int span = w.hi - w.lo + 1;
  int nf = static_cast<int>(rng() % 2);
  int nt = static_cast<int>(rng() % 3);
  for (int k = 0; k < nf; ++k) m.frees.push_back(w.lo + static_cast<int>(rng() % span));
  for (int k = 0; k < nt; ++k)
    m.torsions.push_back({w.lo + static_cast<int>(rng() % span), 1 + static_cast<int>(rng() % 3)});
  if (m.frees.empty() && m.torsions.empty()) m.torsions.push_back({0, 1});
  return ModuleHandle::gradedline(gm_sorted(std::move(m)));
}

inline ModuleHandle random_module(std::mt19937_64& rng, const SpaceHandle& space, const Window& w) {
  switch (space.backend) {
    case backend_t::findim: return random_findim_module(rng, space);
    case backend_t::polyline: return random_poly_module(rng, space.field(), w.maxdeg);
    case backend_t::gradedline: return random_graded_module(rng, w);
  }
  fail(errc::internal_assertion, "unhandled backend");
}

// pointwise view of a symbolic set inside the window, as comparable keys
inline std::set<std::string> window_view(const SpaceHandle& space, const PointSet& s,
                                         const Window& w) {
  std::vector<Point> pool;
  for (const Point& x : inj_points(space, w).points)
    if (!x.is_generic()) pool.push_back(x);
  std::set<std::string> keys;
  for (const Point& x : ps_members_in_window(s, w.lo, w.hi, pool)) keys.insert(x.key());
  return keys;
}

// basis of the intersection of two row spaces: combinations (a | b) with
// a*U + b*V = 0 give a*U ranging over the intersection
inline Mat rowspace_intersection(const PrimeField& F, const Mat& u, const Mat& v) {
  if (u.rows == 0 || v.rows == 0) return Mat(0, u.cols);
  Mat k = left_kernel(F, mat_vstack(u, v));
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < k.rows; ++i) {
    std::vector<int> row(u.cols, 0);
    for (int j = 0; j < u.rows; ++j)
      for (int c = 0; c < u.cols; ++c)
        row[c] = F.add(row[c], F.mul(k.at(i, j), u.at(j, c)));
    rows.push_back(std::move(row));
  }
  return row_space(F, mat_from_rows(rows, u.cols));
}

inline LawSuite laws_union(std::mt19937_64& rng, const Window& w) {
  SuiteRecorder rec("union");
  for (const std::string& id : law_all_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    std::vector<CatalogModule> mods = catalog_modules(id);

    // supports of direct sums against unions of supports
    for (size_t i = 0; i < mods.size(); ++i)
      for (size_t j = i; j < mods.size(); ++j) {
        if (space.backend == backend_t::findim && mods[i].m.rep.dim + mods[j].m.rep.dim > 4)
          continue;
        rec.law("pair/" + id + "/" + mods[i].id + "+" + mods[j].id, [&] {
          ModuleHandle sum = direct_sum_of(space, {mods[i].m, mods[j].m});
          return ps_equal(support_of(space, sum),
                          ps_union(support_of(space, mods[i].m), support_of(space, mods[j].m)));
        });
      }

    // the product of two subspaces supports the union of their supports
    size_t gcap = std::min<size_t>(mods.size(), 4);
    for (size_t i = 0; i < gcap; ++i)
      for (size_t j = 0; j < gcap; ++j) {
        if (module_is_zero(mods[i].m) || module_is_zero(mods[j].m)) continue;
        rec.law("gabriel/" + id + "/" + mods[i].id + "-" + mods[j].id, [&] {
          WeaklyClosedSpec z1 = WeaklyClosedSpec::sigma({mods[i].m});
          WeaklyClosedSpec z2 = WeaklyClosedSpec::sigma({mods[j].m});
          return ps_equal(v_of(space, WeaklyClosedSpec::gabriel({z1, z2})),
                          ps_union(v_of(space, z1), v_of(space, z2)));
        });
      }

    // seeded random pairs
    for (int k = 0; k < 12; ++k) {
      rec.law("random/" + id + "/" + std::to_string(k), [&] {
        ModuleHandle a = random_module(rng, space, w);
        ModuleHandle b = random_module(rng, space, w);
        return ps_equal(support_of(space, direct_sum_of(space, {a, b})),
                        ps_union(support_of(space, a), support_of(space, b)));
      });
    }
  }

  // support decomposes along every submodule/quotient pair of the lattice
  for (const std::string& id : law_findim_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    if (space.p != 2) continue;
    for (const CatalogModule& cm : catalog_modules(id)) {
      if (cm.m.rep.dim > 4 || module_is_zero(cm.m)) continue;
      Lattice lat = submodule_lattice(space.alg, cm.m.rep);
      for (size_t n = 0; n < lat.elems.size(); ++n) {
        rec.law("lattice/" + id + "/" + cm.id + "/" + std::to_string(n), [&] {
          ModuleHandle sub = ModuleHandle::findim(sub_rep(space.alg, cm.m.rep, lat.elems[n]));
          ModuleHandle quot =
              ModuleHandle::findim(quotient_rep(space.alg, cm.m.rep, lat.elems[n]));
          return ps_equal(support_of(space, cm.m),
                          ps_union(support_of(space, sub), support_of(space, quot)));
        });
      }
    }
  }
  return rec.take();
}

inline LawSuite laws_intersection(std::mt19937_64& rng, const Window& w) {
  SuiteRecorder rec("intersection");
  for (const std::string& id : law_all_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    std::vector<CatalogModule> mods = catalog_modules(id);

    // both lattice operations against the pointwise window oracle
    for (size_t i = 0; i < mods.size(); ++i)
      for (size_t j = i; j < mods.size(); ++j) {
        rec.law("window/" + id + "/" + mods[i].id + "&" + mods[j].id, [&] {
          PointSet sa = support_of(space, mods[i].m);
          PointSet sb = support_of(space, mods[j].m);
          std::set<std::string> ma = window_view(space, sa, w);
          std::set<std::string> mb = window_view(space, sb, w);
          std::set<std::string> mi, mu = ma;
          mu.insert(mb.begin(), mb.end());
          for (const std::string& k : ma)
            if (mb.count(k)) mi.insert(k);
          return window_view(space, ps_intersect(sa, sb), w) == mi &&
                 window_view(space, ps_union(sa, sb), w) == mu;
        });
      }

    for (int k = 0; k < 12; ++k) {
      rec.law("random/" + id + "/" + std::to_string(k), [&] {
        PointSet sa = support_of(space, random_module(rng, space, w));
        PointSet sb = support_of(space, random_module(rng, space, w));
        std::set<std::string> ma = window_view(space, sa, w);
        std::set<std::string> mb = window_view(space, sb, w);
        std::set<std::string> mi;
        for (const std::string& key : ma)
          if (mb.count(key)) mi.insert(key);
        return window_view(space, ps_intersect(sa, sb), w) == mi;
      });
    }
  }

  // the relative socle of an intersection is the intersection of the
  // relative socles (computed through independent lattice scans)
  for (const std::string& id : law_findim_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    if (space.p != 2) continue;
    const PrimeField F = space.field();
    RadicalSimples rs = radical_simples(space.alg);
    ModuleHandle reg = ModuleHandle::findim(regular_rep(space.alg));
    std::vector<ModuleHandle> gens;
    for (const Rep& s : rs.simples) gens.push_back(ModuleHandle::findim(s));
    if (id == "T2_F2") gens.push_back(catalog_module(id, "P1"));
    for (size_t i = 0; i < gens.size(); ++i)
      for (size_t j = 0; j < gens.size(); ++j) {
        rec.law("shriek/" + id + "/" + std::to_string(i) + "-" + std::to_string(j), [&] {
          WeaklyClosedSpec z1 = WeaklyClosedSpec::sigma({gens[i]});
          WeaklyClosedSpec z2 = WeaklyClosedSpec::sigma({gens[j]});
          ShriekSplit s1 = i_shriek_spec(space, reg, z1);
          ShriekSplit s2 = i_shriek_spec(space, reg, z2);
          ShriekSplit si = i_shriek_spec(space, reg, WeaklyClosedSpec::intersect({z1, z2}));
          Mat want = rowspace_intersection(F, s1.sub_basis, s2.sub_basis);
          return subspace_equal(F, si.sub_basis, want);
        });
      }
  }
  return rec.take();
}

inline LawSuite laws_hom(std::mt19937_64&, const Window& w) {
  SuiteRecorder rec("hom");
  for (const std::string& id : law_all_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    InjPoints pts = inj_points(space, w);
    for (const CatalogModule& cm : catalog_modules(id)) {
      if (module_is_zero(cm.m)) continue;
      for (const Point& x : pts.points) {
        rec.law("agree/" + id + "/" + cm.id + "/" + x.key(), [&] {
          // supported_at itself asserts that the support-set route and the
          // hom route agree; a disagreement surfaces as a thrown error
          return supported_at(space, cm.m, x) == ps_contains(support_of(space, cm.m), x);
        });
      }
    }
  }
  return rec.take();
}

inline LawSuite laws_endiso(std::mt19937_64&, const Window& w) {
  SuiteRecorder rec("endiso");
  for (const std::string& id : law_findim_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    RadicalSimples rs = radical_simples(space.alg);
    std::vector<Rep> hulls = injective_hulls_of_simples(space.alg, rs.simples);
    for (size_t i = 0; i < rs.simples.size(); ++i) {
      rec.law("endiso/" + id + "/x" + std::to_string(i), [&] {
        EndAnalysis eh = end_ring_analysis(space.alg, hulls[i]);
        EndAnalysis es = end_ring_analysis(space.alg, rs.simples[i]);
        return eh.division && es.division && eh.quot_dim == es.quot_dim;
      });
    }
  }
  for (const std::string& id : law_all_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    InjPoints pts = inj_points(space, w);
    for (const Point& x : pts.points)
      rec.law("tiny/" + id + "/" + x.key(), [&] { return tiny_test(space, x).tiny; });
  }
  return rec.take();
}

inline LawSuite laws_series(std::mt19937_64&, const Window&) {
  SuiteRecorder rec("series");
  for (const std::string& id : law_findim_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    for (const CatalogModule& cm : catalog_modules(id)) {
      if (module_is_zero(cm.m) || cm.m.rep.dim > 4) continue;
      rec.law("two-chains/" + id + "/" + cm.id, [&] {
        std::vector<Rep> f0 = composition_factors(space.alg, cm.m.rep, false);
        std::vector<Rep> f1 = composition_factors(space.alg, cm.m.rep, true);
        if (f0.size() != f1.size()) return false;
        std::vector<bool> used(f1.size(), false);
        for (const Rep& a : f0) {
          bool matched = false;
          for (size_t k = 0; k < f1.size(); ++k) {
            if (used[k] || !is_isomorphic(space.alg, a, f1[k])) continue;
            used[k] = true;
            matched = true;
            break;
          }
          if (!matched) return false;
        }
        return true;
      });
      rec.law("validate/" + id + "/" + cm.id, [&] {
        return validate_critical_series(space, cm.m, critical_series(space, cm.m)).all_pass();
      });
    }
  }
  for (const std::string& id : law_serial_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    for (const CatalogModule& cm : catalog_modules(id)) {
      if (module_is_zero(cm.m)) continue;
      rec.law("validate/" + id + "/" + cm.id, [&] {
        return validate_critical_series(space, cm.m, critical_series(space, cm.m)).all_pass();
      });
    }
  }
  // pinned shape: a torsion factor with two layers below one free factor
  rec.law("pinned/poly2/mixed", [&] {
    CriticalSeries cs =
        critical_series(catalog_space("poly2").space, catalog_module("poly2", "mixed_x^2+x_free"));
    return cs.steps.size() == 3 && cs.steps[0].dim == Kdim::fin(0) &&
           cs.steps[1].dim == Kdim::fin(0) && cs.steps[2].dim == Kdim::fin(1);
  });
  return rec.take();
}

inline LawSuite laws_thm614(std::mt19937_64&, const Window&) {
  SuiteRecorder rec("thm614");
  for (const std::string& id : law_findim_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    rec.law("thm614/" + id, [&] {
      bool irr = is_topologically_irreducible(space).irreducible;
      return irr == is_prime_ring(quotient_algebra(space.alg, radical(space.alg)));
    });
  }
  return rec.take();
}

inline LawSuite laws_thm73(std::mt19937_64&, const Window&) {
  SuiteRecorder rec("thm73");
  for (const std::string& id : law_findim_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    rec.law("thm73/" + id, [&] {
      bool lhs = x_red(space).is_reduced && is_integral(space).integral;
      return lhs == is_prime_ring(space.alg);
    });
  }
  rec.law("thm73/T2_F2/pinned", [&] {
    const SpaceHandle& t2 = catalog_space("T2_F2").space;
    return is_integral(t2).integral && !x_red(t2).is_reduced && !is_prime_ring(t2.alg);
  });
  return rec.take();
}

inline LawSuite laws_phi(std::mt19937_64&, const Window& w) {
  SuiteRecorder rec("phi");
  for (const std::string& id : law_all_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    PhiImage im = phi_image_window(space, w);
    for (const auto& [pt, hit] : im.hits) {
      bool expect = !(space.backend == backend_t::gradedline && pt.is_generic());
      rec.law("image/" + id + "/" + pt.key(), [&] { return hit == expect; });
    }

    // injectivity on the window: hit points listed pairwise distinct
    rec.law("injective/" + id, [&] {
      std::set<std::string> seen;
      size_t hits = 0;
      for (const auto& [pt, hit] : im.hits) {
        if (!hit) continue;
        ++hits;
        seen.insert(pt.key());
      }
      return seen.size() == hits;
    });

    // the comparison map preserves subgeneration on comparable spectrum classes
    std::vector<CatalogModule> mods = catalog_modules(id);
    for (size_t i = 0; i < mods.size(); ++i) {
      if (module_is_zero(mods[i].m) || !spec_class_member(space, mods[i].m)) continue;
      for (size_t j = 0; j < mods.size(); ++j) {
        if (i == j || module_is_zero(mods[j].m) || !spec_class_member(space, mods[j].m)) continue;
        if (!sigma_member(space, mods[i].m, mods[j].m)) continue;
        rec.law("preorder/" + id + "/" + mods[i].id + "<=" + mods[j].id, [&] {
          return point_leq(space, phi_point(space, mods[i].m), phi_point(space, mods[j].m));
        });
      }
    }
  }
  return rec.take();
}

inline LawSuite laws_roundtrip(std::mt19937_64&, const Window&) {
  SuiteRecorder rec("roundtrip");
  for (const std::string& id : law_findim_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    RadicalSimples rs = radical_simples(space.alg);
    std::vector<Rep> hulls = injective_hulls_of_simples(space.alg, rs.simples);
    for (size_t i = 0; i < rs.simples.size(); ++i) {
      Point x = Point::findim_simple(static_cast<int>(i));
      rec.law("weakpoint/" + id + "/x" + std::to_string(i), [&] {
        WeakPoint wp = weak_point(space, x);
        WeaklyClosedSpec zc = WeaklyClosedSpec::sigma({ModuleHandle::findim(rs.simples[i])});
        WeakPoint back = weak_extend(space, weak_restrict(space, zc, wp));
        return back.at == x && back.point;
      });
      rec.law("tilde/" + id + "/x" + std::to_string(i), [&] {
        Mat soc = socle(space.alg, hulls[i], radical(space.alg));
        Rep socle_rep = sub_rep(space.alg, hulls[i], soc);
        return is_simple_rep(space.alg, socle_rep) &&
               simple_index_of(space.alg, rs.simples, socle_rep) == static_cast<int>(i);
      });
    }
  }
  for (const std::string& id : law_all_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    for (const CatalogModule& cm : catalog_modules(id)) {
      if (module_is_zero(cm.m)) continue;
      rec.law("satgen/" + id + "/" + cm.id, [&] {
        SaturationInfo info = saturation_closure(space, WeaklyClosedSpec::sigma({cm.m}));
        return saturation_member(space, info, cm.m);
      });
    }
  }
  return rec.take();
}

inline LawSuite laws_axioms(std::mt19937_64&, const Window&) {
  SuiteRecorder rec("axioms");
  for (const std::string& id : law_all_ids()) {
    const SpaceHandle& space = catalog_space(id).space;
    std::vector<ModuleHandle> sample;
    for (const CatalogModule& cm : catalog_modules(id)) {
      if (space.backend == backend_t::findim && cm.m.rep.dim > 4) continue;
      sample.push_back(cm.m);
    }
    CheckReport report = dimension_axiom_harness(space, sample);
    for (const CheckEntry& e : report.entries)
      rec.law(id + "/" + e.label + "/" + e.instance, [&] { return e.pass; });
  }
  return rec.take();
}

}  // namespace detail

inline LawReport check_laws(const std::string& suite, std::uint64_t seed = 0,
                            Window w = Window{-8, 8, 3}) {
  using Runner = LawSuite (*)(std::mt19937_64&, const Window&);
  static const std::vector<std::pair<std::string, Runner>> runners = {
      {"union", detail::laws_union},     {"intersection", detail::laws_intersection},
      {"hom", detail::laws_hom},         {"endiso", detail::laws_endiso},
      {"series", detail::laws_series},   {"thm614", detail::laws_thm614},
      {"thm73", detail::laws_thm73},     {"phi", detail::laws_phi},
      {"roundtrip", detail::laws_roundtrip}, {"axioms", detail::laws_axioms}};

  LawReport out;
  out.seed = seed;
  out.window = w;
  bool matched = false;
  for (size_t i = 0; i < runners.size(); ++i) {
    if (suite != "all" && suite != runners[i].first) continue;
    matched = true;
    std::mt19937_64 rng = detail::suite_rng(seed, i);
    out.suites.push_back(runners[i].second(rng, w));
  }
  require(matched, errc::invalid_input, "unknown law suite: " + suite);
  return out;
}

}  // namespace injspec
