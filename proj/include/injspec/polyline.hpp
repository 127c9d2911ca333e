#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "injspec/core.hpp"
#include "injspec/pointset.hpp"
#include "injspec/smith.hpp"

namespace injspec {

// ---------------------------------------------------------------------------
// Backend for finitely generated F_p[x]-modules.
//
// Normal form: PolyModule{factors, rank} where factors is the invariant
// factor chain (monic, nonunit, each dividing the next) and rank counts free
// summands.  Every operation below works on normal forms; pm_classify
// produces one from a presentation matrix.
// ---------------------------------------------------------------------------

inline Poly p_pow(const PrimeField& F, const Poly& b, int e) {
  Poly r = p_one();
  for (int i = 0; i < e; ++i) r = p_mul(F, r, b);
  return r;
}

// M = coker(A) = F_p[x]^cols / rowspace(A).
inline PolyModule pm_classify(const PrimeField& F, const PolyMat& A) {
  SmithResult s = smith_normal_form(F, A);
  PolyModule m;
  int nonzero_diag = std::min(A.rows, A.cols) - s.rank_defect;
  m.rank = A.cols - nonzero_diag;
  m.factors = s.invariant_factors;
  return m;
}

inline bool pm_is_zero(const PolyModule& m) { return m.factors.empty() && m.rank == 0; }

inline int pm_torsion_dim(const PolyModule& m) {
  int d = 0;
  for (const Poly& f : m.factors) d += p_deg(f);
  return d;
}

inline std::string pm_key(const PolyModule& m) { return module_key(ModuleHandle::polyline(m)); }

inline bool pm_equal(const PolyModule& a, const PolyModule& b) {
  return a.rank == b.rank && pm_key(a) == pm_key(b);
}

inline Poly pm_last_factor(const PolyModule& m) {
  require(!m.factors.empty(), errc::invalid_input, "module has no torsion");
  return m.factors.back();
}

// elementary divisors: multiset of (irreducible, exponent)
inline std::vector<std::pair<Poly, int>> pm_elementary(const PrimeField& F, const PolyModule& m) {
  std::vector<std::pair<Poly, int>> out;
  for (const Poly& d : m.factors)
    for (const auto& [p, e] : poly_factor(F, d)) out.emplace_back(p, e);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (!(a.first == b.first)) return p_less(a.first, b.first);
    return a.second < b.second;
  });
  return out;
}

// rebuild the invariant chain from elementary divisors
inline PolyModule pm_from_elementary(const PrimeField& F, std::vector<std::pair<Poly, int>> elem,
                                     int rank) {
  std::map<std::string, std::pair<Poly, std::vector<int>>> by_prime;
  for (auto& [p, e] : elem) {
    require(e >= 1, errc::invalid_input, "exponent must be positive");
    auto& slot = by_prime[p_to_string(p)];
    slot.first = p;
    slot.second.push_back(e);
  }
  size_t chain_len = 0;
  for (auto& [k, slot] : by_prime) {
    std::sort(slot.second.begin(), slot.second.end(), std::greater<int>());
    chain_len = std::max(chain_len, slot.second.size());
  }
  PolyModule m;
  m.rank = rank;
  // factor j from the top collects the (j+1)-th largest exponent of each prime
  std::vector<Poly> rev;
  for (size_t j = 0; j < chain_len; ++j) {
    Poly d = p_one();
    for (auto& [k, slot] : by_prime)
      if (j < slot.second.size()) d = p_mul(F, d, p_pow(F, slot.first, slot.second[j]));
    rev.push_back(d);
  }
  m.factors.assign(rev.rbegin(), rev.rend());
  return m;
}

inline PolyModule pm_direct_sum(const PrimeField& F, const PolyModule& a, const PolyModule& b) {
  auto ea = pm_elementary(F, a);
  auto eb = pm_elementary(F, b);
  ea.insert(ea.end(), eb.begin(), eb.end());
  return pm_from_elementary(F, ea, a.rank + b.rank);
}

inline PolyModule pm_cyclic(const PrimeField& F, const Poly& d) {
  require(!p_is_zero(d), errc::invalid_input, "cyclic torsion module needs a nonzero annihilator");
  PolyModule m;
  m.rank = 0;
  Poly dm = p_monic(F, d);
  if (p_deg(dm) > 0) m.factors.push_back(dm);
  return m;
}

inline PolyModule pm_free(int rank) {
  PolyModule m;
  m.rank = rank;
  return m;
}

// all monic divisors of d, sorted
inline std::vector<Poly> poly_divisors(const PrimeField& F, const Poly& d) {
  auto fac = poly_factor(F, d);
  std::vector<Poly> out{p_one()};
  for (const auto& [p, e] : fac) {
    std::vector<Poly> next;
    Poly pw = p_one();
    for (int k = 0; k <= e; ++k) {
      for (const Poly& g : out) next.push_back(p_mul(F, g, pw));
      if (k < e) pw = p_mul(F, pw, p);
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end(), p_less);
  return out;
}

// ----- support and residue data --------------------------------------------

inline std::vector<Point> poly_points_of(const PrimeField& F, const Poly& d) {
  std::vector<Point> pts;
  for (const auto& [p, e] : poly_factor(F, d)) pts.push_back(Point::poly_irr(p));
  return pts;
}

// V(sigma[M]): everything when a free summand is present, otherwise the
// irreducible divisors of the last invariant factor.
inline PointSet support_rule_poly(const PrimeField& F, const PolyModule& m) {
  if (m.rank > 0) return ps_make(backend_t::polyline, true, PointSet::ybase_t::all, 0);
  if (m.factors.empty()) return ps_make(backend_t::polyline, false, PointSet::ybase_t::empty, 0);
  return ps_make(backend_t::polyline, false, PointSet::ybase_t::empty, 0,
                 poly_points_of(F, pm_last_factor(m)));
}

// ----- sigma membership and relative socles --------------------------------

// n in sigma[m]: free generators make sigma[m] everything; torsion m admits
// exactly the torsion n whose chain divides m's last factor.
inline bool sigma_member_poly(const PrimeField& F, const PolyModule& n, const PolyModule& m) {
  if (pm_is_zero(n)) return true;
  if (m.rank > 0) return true;
  if (n.rank > 0) return false;
  if (m.factors.empty()) return false;
  return p_divides(F, pm_last_factor(n), pm_last_factor(m));
}

struct PolyShriek {
  PolyModule sub;
  PolyModule quot;
};

// largest submodule annihilated into e: summand k[x]/(d) contributes
// k[x]/gcd(d,e), free summands contribute nothing
inline PolyShriek pm_socle_along(const PrimeField& F, const PolyModule& m, const Poly& e) {
  PolyShriek r;
  std::vector<std::pair<Poly, int>> sub_elem, quot_elem;
  for (const Poly& d : m.factors) {
    Poly g = p_gcd(F, d, e);
    Poly q = p_div(F, d, g);
    for (const auto& pe : poly_factor(F, g)) sub_elem.push_back(pe);
    for (const auto& pe : poly_factor(F, q)) quot_elem.push_back(pe);
  }
  r.sub = pm_from_elementary(F, sub_elem, 0);
  r.quot = pm_from_elementary(F, quot_elem, m.rank);
  return r;
}

// ----- concrete matrix model (independent Hom computations) -----------------

inline Mat companion_matrix(const PrimeField& F, const Poly& d) {
  int n = p_deg(d);
  require(n >= 1, errc::invalid_input, "companion matrix needs degree >= 1");
  Poly dm = p_monic(F, d);
  // row convention: row i is the image of basis vector x^i under x
  Mat C(n, n);
  for (int i = 0; i + 1 < n; ++i) C.at(i, i + 1) = 1;
  for (int j = 0; j < n; ++j) C.at(n - 1, j) = F.neg(dm.c[static_cast<size_t>(j)]);
  return C;
}

// x acting on the torsion part of m, block by block
inline Mat torsion_action(const PrimeField& F, const PolyModule& m) {
  int n = pm_torsion_dim(m);
  Mat X(n, n);
  int off = 0;
  for (const Poly& d : m.factors) {
    Mat C = companion_matrix(F, d);
    for (int i = 0; i < C.rows; ++i)
      for (int j = 0; j < C.cols; ++j) X.at(off + i, off + j) = C.at(i, j);
    off += p_deg(d);
  }
  return X;
}

// dim Hom(torsion(m), torsion(n)) by intertwiner count; free parts handled
// by the caller
inline int hom_dim_torsion(const PrimeField& F, const PolyModule& m, const PolyModule& n) {
  int dm = pm_torsion_dim(m), dn = pm_torsion_dim(n);
  if (dm == 0 || dn == 0) return 0;
  auto basis = hom_space(F, {torsion_action(F, m)}, {torsion_action(F, n)});
  return static_cast<int>(basis.size());
}

// Hom(m, E(y_p)) != 0, computed through the envelope's socle chain: a map
// from a finitely generated module into the Pruefer module lands in some
// k[x]/(p^k), so nonvanishing is detected at k = the multiplicity ceiling.
inline bool hom_to_prufer_nonzero(const PrimeField& F, const PolyModule& m, const Poly& p) {
  if (m.rank > 0) return true;
  if (m.factors.empty()) return false;
  int cap = 0;
  for (const auto& [q, e] : pm_elementary(F, m))
    if (q == p) cap = std::max(cap, e);
  if (cap == 0) return false;
  PolyModule target = pm_cyclic(F, p_pow(F, p, cap));
  return hom_dim_torsion(F, m, target) > 0;
}

inline bool hom_to_function_field_nonzero(const PolyModule& m) {
  // torsion dies in k(x); a free generator maps isomorphically
  return m.rank > 0;
}

// ----- primes and filtrations -----------------------------------------------

// all nonzero submodules share the annihilator iff the module is free of
// positive rank or isotypic k[x]/(p)^m
inline bool pm_is_prime(const PrimeField& F, const PolyModule& m) {
  if (pm_is_zero(m)) return false;
  if (m.rank > 0) return m.factors.empty();
  Poly last = pm_last_factor(m);
  if (!p_is_irreducible(F, last)) return false;
  for (const Poly& d : m.factors)
    if (!(d == last)) return false;
  return true;
}

inline bool pm_has_prime_submodule(const PrimeField& F, const PolyModule& m) {
  (void)F;
  return !pm_is_zero(m);
}

// factors of a filtration with prime quotients: socle layers of each primary
// component, then the free summands
inline std::vector<PolyModule> pm_prime_filtration(const PrimeField& F, const PolyModule& m) {
  require(!pm_is_zero(m), errc::no_prime_submodule, "zero module has no prime filtration");
  std::vector<PolyModule> steps;
  for (const auto& [p, e] : pm_elementary(F, m))
    for (int k = 0; k < e; ++k) steps.push_back(pm_cyclic(F, p));
  for (int k = 0; k < m.rank; ++k) steps.push_back(pm_free(1));
  return steps;
}

// ----- windows ---------------------------------------------------------------

inline std::vector<Point> poly_closed_points_window(const PrimeField& F, int maxdeg) {
  std::vector<Point> pts;
  for (const Poly& p : monic_irreducibles_up_to(F, maxdeg)) pts.push_back(Point::poly_irr(p));
  std::sort(pts.begin(), pts.end(), point_less);
  return pts;
}

}  // namespace injspec
