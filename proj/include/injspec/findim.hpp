#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "injspec/core.hpp"

namespace injspec {

// ---------------------------------------------------------------------------
// Algebra arithmetic
// ---------------------------------------------------------------------------

struct AlgebraViolation {
  std::string law;  // "associativity" | "left-unit" | "right-unit" | "shape"
  int i = -1, j = -1, k = -1;
};

inline std::vector<AlgebraViolation> validate_algebra(const Algebra& A) {
  std::vector<AlgebraViolation> bad;
  if (static_cast<int>(A.mult.size()) != A.dim * A.dim * A.dim ||
      static_cast<int>(A.unit.size()) != A.dim) {
    bad.push_back({"shape", -1, -1, -1});
    return bad;
  }
  const PrimeField F = A.field();
  long long points = 1;
  for (int i = 0; i < A.dim; ++i) {
    points *= F.p;
    if (points > caps().element_enum) fail(errc::cap_exceeded, "algebra too large to validate");
  }
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (int k = 0; k < A.dim; ++k) {
        // (e_i e_j) e_k == e_i (e_j e_k), coordinatewise
        for (int l = 0; l < A.dim; ++l) {
          int lhs = 0, rhs = 0;
          for (int m = 0; m < A.dim; ++m) {
            lhs = F.norm(lhs + static_cast<long long>(A.c(i, j, m)) * A.c(m, k, l));
            rhs = F.norm(rhs + static_cast<long long>(A.c(j, k, m)) * A.c(i, m, l));
          }
          if (lhs != rhs) {
            bad.push_back({"associativity", i, j, k});
            l = A.dim;
          }
        }
      }
  for (int j = 0; j < A.dim; ++j)
    for (int k = 0; k < A.dim; ++k) {
      int lu = 0, ru = 0;
      for (int i = 0; i < A.dim; ++i) {
        lu = F.norm(lu + static_cast<long long>(A.unit[i]) * A.c(i, j, k));
        ru = F.norm(ru + static_cast<long long>(A.unit[i]) * A.c(j, i, k));
      }
      if (lu != (j == k ? 1 : 0)) bad.push_back({"left-unit", j, k, -1});
      if (ru != (j == k ? 1 : 0)) bad.push_back({"right-unit", j, k, -1});
    }
  return bad;
}

inline std::vector<int> algebra_mul(const Algebra& A, const std::vector<int>& x,
                                    const std::vector<int>& y) {
  const PrimeField F = A.field();
  std::vector<int> z(A.dim, 0);
  for (int i = 0; i < A.dim; ++i) {
    if (x[i] == 0) continue;
    for (int j = 0; j < A.dim; ++j) {
      if (y[j] == 0) continue;
      int s = F.mul(x[i], y[j]);
      for (int k = 0; k < A.dim; ++k) z[k] = F.norm(z[k] + static_cast<long long>(s) * A.c(i, j, k));
    }
  }
  return z;
}

// y -> x*y as a matrix on row vectors.
inline Mat left_mult_matrix(const Algebra& A, const std::vector<int>& x) {
  const PrimeField F = A.field();
  Mat m(A.dim, A.dim);
  for (int j = 0; j < A.dim; ++j)
    for (int k = 0; k < A.dim; ++k) {
      int v = 0;
      for (int i = 0; i < A.dim; ++i) v = F.norm(v + static_cast<long long>(x[i]) * A.c(i, j, k));
      m.at(j, k) = v;
    }
  return m;
}

// v -> v*x as a matrix on row vectors.
inline Mat right_mult_matrix(const Algebra& A, const std::vector<int>& x) {
  const PrimeField F = A.field();
  Mat m(A.dim, A.dim);
  for (int j = 0; j < A.dim; ++j)
    for (int k = 0; k < A.dim; ++k) {
      int v = 0;
      for (int i = 0; i < A.dim; ++i) v = F.norm(v + static_cast<long long>(x[i]) * A.c(j, i, k));
      m.at(j, k) = v;
    }
  return m;
}

// Opposite algebra: multiplication reversed.
inline Algebra opposite(const Algebra& A) {
  Algebra B = A;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j)
      for (int k = 0; k < A.dim; ++k) B.c(i, j, k) = A.c(j, i, k);
  return B;
}

inline Rep regular_rep(const Algebra& A) {
  Rep r;
  r.dim = A.dim;
  for (int i = 0; i < A.dim; ++i) {
    std::vector<int> e(A.dim, 0);
    e[i] = 1;
    r.action.push_back(right_mult_matrix(A, e));
  }
  return r;
}

// Check that a representation respects multiplication and the unit.
inline bool rep_ok(const Algebra& A, const Rep& r) {
  if (static_cast<int>(r.action.size()) != A.dim) return false;
  const PrimeField F = A.field();
  for (const Mat& m : r.action)
    if (m.rows != r.dim || m.cols != r.dim) return false;
  Mat unit_act(r.dim, r.dim);
  for (int i = 0; i < A.dim; ++i)
    unit_act = mat_add(F, unit_act, mat_scale(F, A.unit[i], r.action[i]));
  if (!(unit_act == mat_identity(r.dim))) return false;
  for (int i = 0; i < A.dim; ++i)
    for (int j = 0; j < A.dim; ++j) {
      Mat lhs = mat_mul(F, r.action[i], r.action[j]);
      Mat rhs(r.dim, r.dim);
      for (int k = 0; k < A.dim; ++k) rhs = mat_add(F, rhs, mat_scale(F, A.c(i, j, k), r.action[k]));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

// Action of a general algebra element on a representation.
inline Mat rep_action_of(const Algebra& A, const Rep& r, const std::vector<int>& x) {
  const PrimeField F = A.field();
  Mat m(r.dim, r.dim);
  for (int i = 0; i < A.dim; ++i)
    if (x[i] != 0) m = mat_add(F, m, mat_scale(F, x[i], r.action[i]));
  return m;
}

// ---------------------------------------------------------------------------
// Submodules, quotients, sums
// ---------------------------------------------------------------------------

// Submodule spanned by v under the action (v*A = span of v*action[i]).
inline Mat cyclic_span(const Algebra& A, const Rep& r, const std::vector<int>& v) {
  const PrimeField F = A.field();
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < A.dim; ++i) rows.push_back(vec_mat(F, v, r.action[i]));
  return row_space(F, mat_from_rows(rows, r.dim));
}

// Representation induced on a submodule given by a canonical rref basis.
inline Rep sub_rep(const Algebra& A, const Rep& r, const Mat& basis) {
  const PrimeField F = A.field();
  Echelon e = echelon(F, basis);
  Rep s;
  s.dim = e.rank;
  for (int i = 0; i < A.dim; ++i) {
    Mat m(s.dim, s.dim);
    for (int br = 0; br < s.dim; ++br) {
      std::vector<int> img = vec_mat(F, mat_row(e.rref, br), r.action[i]);
      auto co = coords_in_basis(F, e, img);
      require(co.has_value(), errc::internal_assertion, "basis does not span a submodule");
      for (int bc = 0; bc < s.dim; ++bc) m.at(br, bc) = (*co)[bc];
    }
    s.action.push_back(std::move(m));
  }
  return s;
}

// Representation induced on the quotient by a submodule; coordinates are the
// non-pivot columns of the submodule basis.
inline Rep quotient_rep(const Algebra& A, const Rep& r, const Mat& basis) {
  const PrimeField F = A.field();
  Echelon e = echelon(F, basis);
  std::vector<int> free_cols;
  {
    std::vector<bool> piv(r.dim, false);
    for (int c : e.pivots) piv[c] = true;
    for (int c = 0; c < r.dim; ++c)
      if (!piv[c]) free_cols.push_back(c);
  }
  auto reduce = [&](std::vector<int> v) {
    for (int i = 0; i < e.rank; ++i) {
      int f = v[e.pivots[i]];
      if (f == 0) continue;
      for (int j = 0; j < r.dim; ++j) v[j] = F.sub(v[j], F.mul(f, e.rref.at(i, j)));
    }
    std::vector<int> q;
    for (int c : free_cols) q.push_back(v[c]);
    return q;
  };
  Rep qr;
  qr.dim = static_cast<int>(free_cols.size());
  for (int i = 0; i < A.dim; ++i) {
    Mat m(qr.dim, qr.dim);
    for (int br = 0; br < qr.dim; ++br) {
      std::vector<int> v(r.dim, 0);
      v[free_cols[br]] = 1;
      std::vector<int> q = reduce(vec_mat(F, v, r.action[i]));
      for (int bc = 0; bc < qr.dim; ++bc) m.at(br, bc) = q[bc];
    }
    qr.action.push_back(std::move(m));
  }
  return qr;
}

inline Rep direct_sum(const PrimeField& F, const Rep& a, const Rep& b) {
  Rep s;
  s.dim = a.dim + b.dim;
  for (size_t i = 0; i < a.action.size(); ++i) {
    Mat m(s.dim, s.dim);
    for (int r = 0; r < a.dim; ++r)
      for (int c = 0; c < a.dim; ++c) m.at(r, c) = a.action[i].at(r, c);
    for (int r = 0; r < b.dim; ++r)
      for (int c = 0; c < b.dim; ++c) m.at(a.dim + r, a.dim + c) = b.action[i].at(r, c);
    s.action.push_back(std::move(m));
  }
  (void)F;
  return s;
}

// Enumerate all vectors of F_p^n in canonical counting order (0 first).
inline bool next_vector(int p, std::vector<int>& v) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (++v[i] < p) return true;
    v[i] = 0;
  }
  return false;
}

struct Lattice {
  // Canonical rref bases of every submodule, sorted by (dim, key); the first
  // entry is 0, the last is the whole module.
  std::vector<Mat> elems;
};

// All submodules: cyclic spans of every vector, closed under sums.
inline Lattice submodule_lattice(const Algebra& A, const Rep& r) {
  const PrimeField F = A.field();
  long long count = 1;
  for (int i = 0; i < r.dim; ++i) {
    count *= F.p;
    if (count > caps().element_enum) fail(errc::cap_exceeded, "module too large to enumerate vectors");
  }
  std::map<std::string, Mat> seen;
  seen[mat_key(Mat(0, r.dim))] = Mat(0, r.dim);
  std::vector<int> v(r.dim, 0);
  std::vector<Mat> fresh;
  while (next_vector(F.p, v)) {
    Mat s = cyclic_span(A, r, v);
    std::string k = mat_key(s);
    if (!seen.count(k)) {
      seen[k] = s;
      fresh.push_back(std::move(s));
    }
  }
  // close under pairwise sums
  while (!fresh.empty()) {
    if (static_cast<int>(seen.size()) > caps().lattice)
      fail(errc::cap_exceeded, "submodule lattice exceeds the configured cap");
    std::vector<Mat> next;
    std::vector<Mat> current;
    current.reserve(seen.size());
    for (auto& [k, m] : seen) current.push_back(m);
    for (const Mat& a : fresh)
      for (const Mat& b : current) {
        Mat s = subspace_sum(F, a, b);
        std::string k = mat_key(s);
        if (!seen.count(k)) {
          seen[k] = s;
          next.push_back(std::move(s));
        }
      }
    fresh = std::move(next);
  }
  Lattice L;
  for (auto& [k, m] : seen) L.elems.push_back(m);
  std::sort(L.elems.begin(), L.elems.end(), [](const Mat& a, const Mat& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    return mat_key(a) < mat_key(b);
  });
  return L;
}

// ---------------------------------------------------------------------------
// Radical, socle, simples
// ---------------------------------------------------------------------------

// Jacobson radical of A as a subspace of A (intersection of the maximal
// submodules of the regular module; for an artinian algebra this is also the
// nilradical used by the reduced-space construction).
inline Mat radical(const Algebra& A) {
  const PrimeField F = A.field();
  Rep reg = regular_rep(A);
  Lattice L = submodule_lattice(A, reg);
  Mat rad = mat_identity(A.dim);
  for (const Mat& m : L.elems) {
    if (m.rows == A.dim) continue;
    bool maximal = true;
    for (const Mat& n : L.elems)
      if (n.rows > m.rows && n.rows < A.dim && subspace_contains(F, n, m) && !(subspace_equal(F, n, m))) {
        maximal = false;
        break;
      }
    if (maximal) rad = subspace_intersect(F, rad, m);
  }
  return row_space(F, rad);
}

// Largest semisimple submodule: the annihilator of the radical.
inline Mat socle(const Algebra& A, const Rep& r, const Mat& rad) {
  const PrimeField F = A.field();
  if (rad.rows == 0) return mat_identity(r.dim);
  Mat stacked(r.dim, 0);
  for (int i = 0; i < rad.rows; ++i)
    stacked = mat_hstack(stacked, rep_action_of(A, r, mat_row(rad, i)));
  return left_kernel(F, stacked);
}

// Composition series from the bottom; `greatest` flips the cover choice so a
// second, independent chain can be produced.
inline std::vector<Rep> composition_factors(const Algebra& A, const Rep& r, bool greatest = false) {
  const PrimeField F = A.field();
  if (r.dim == 0) return {};
  Lattice L = submodule_lattice(A, r);
  std::vector<Rep> factors;
  Mat cur(0, r.dim);
  while (cur.rows < r.dim) {
    const Mat* chosen = nullptr;
    for (const Mat& m : L.elems) {
      if (m.rows <= cur.rows || !subspace_contains(F, m, cur)) continue;
      bool covers = true;
      for (const Mat& w : L.elems)
        if (w.rows > cur.rows && w.rows < m.rows && subspace_contains(F, m, w) &&
            subspace_contains(F, w, cur)) {
          covers = false;
          break;
        }
      if (!covers) continue;
      if (!chosen) {
        chosen = &m;
      } else {
        bool better = greatest ? mat_key(m) > mat_key(*chosen) : mat_key(m) < mat_key(*chosen);
        if (better) chosen = &m;
      }
    }
    require(chosen != nullptr, errc::internal_assertion, "no cover found in lattice");
    Rep step = sub_rep(A, r, *chosen);
    // coordinates of cur inside chosen
    Echelon ech = echelon(F, *chosen);
    std::vector<std::vector<int>> inner;
    for (int i = 0; i < cur.rows; ++i) {
      auto co = coords_in_basis(F, ech, mat_row(cur, i));
      require(co.has_value(), errc::internal_assertion, "chain is not nested");
      inner.push_back(*co);
    }
    factors.push_back(quotient_rep(A, step, mat_from_rows(inner, step.dim)));
    cur = *chosen;
  }
  return factors;
}

inline bool is_simple_rep(const Algebra& A, const Rep& r) {
  if (r.dim == 0) return false;
  const PrimeField F = A.field();
  std::vector<int> v(r.dim, 0);
  while (next_vector(F.p, v)) {
    if (cyclic_span(A, r, v).rows != r.dim) return false;
  }
  return true;
}

// Existence of an injective hom a -> b, by exhausting the hom space.
inline bool has_injective_hom(const Algebra& A, const Rep& a, const Rep& b) {
  if (a.dim == 0) return true;
  if (a.dim > b.dim) return false;
  const PrimeField F = A.field();
  std::vector<Mat> homs = hom_space(F, a.action, b.action);
  if (homs.empty()) return false;
  for (const Mat& h : homs)
    if (mat_rank(F, h) == a.dim) return true;
  long long combos = 1;
  for (size_t i = 0; i < homs.size(); ++i) {
    combos *= F.p;
    if (combos > caps().element_enum) fail(errc::cap_exceeded, "hom space too large for embedding search");
  }
  std::vector<int> co(homs.size(), 0);
  while (next_vector(F.p, co)) {
    Mat t(a.dim, b.dim);
    for (size_t i = 0; i < homs.size(); ++i)
      if (co[i] != 0) t = mat_add(F, t, mat_scale(F, co[i], homs[i]));
    if (mat_rank(F, t) == a.dim) return true;
  }
  return false;
}

inline bool is_isomorphic(const Algebra& A, const Rep& a, const Rep& b) {
  return a.dim == b.dim && (a.dim == 0 || has_injective_hom(A, a, b));
}

struct RadicalSimples {
  Mat radical;               // subspace of A
  std::vector<Rep> simples;  // pairwise nonisomorphic, canonical order
};

inline std::string rep_key(const Rep& r) {
  std::string s = std::to_string(r.dim) + "|";
  for (const Mat& m : r.action) s += mat_key(m);
  return s;
}

inline RadicalSimples radical_simples(const Algebra& A) {
  RadicalSimples out;
  out.radical = radical(A);
  Rep reg = regular_rep(A);
  Rep semis = quotient_rep(A, reg, out.radical);
  std::vector<Rep> factors = composition_factors(A, semis);
  for (Rep& f : factors) {
    bool dup = false;
    for (const Rep& s : out.simples)
      if (is_isomorphic(A, s, f)) {
        dup = true;
        break;
      }
    if (!dup) out.simples.push_back(std::move(f));
  }
  std::sort(out.simples.begin(), out.simples.end(), [](const Rep& x, const Rep& y) {
    if (x.dim != y.dim) return x.dim < y.dim;
    return rep_key(x) < rep_key(y);
  });
  return out;
}

inline int simple_index_of(const Algebra& A, const std::vector<Rep>& simples, const Rep& s) {
  for (size_t i = 0; i < simples.size(); ++i)
    if (is_isomorphic(A, simples[i], s)) return static_cast<int>(i);
  fail(errc::internal_assertion, "composition factor is not among the simples");
}

// Indices of the simples occurring as composition factors, without building
// the submodule lattice: each radical layer M J^k / M J^{k+1} is semisimple,
// and a simple occurs in it exactly when it admits a nonzero map into it.
inline std::set<int> factor_simple_indices(const Algebra& A, const Rep& r) {
  const PrimeField F = A.field();
  RadicalSimples rs = radical_simples(A);
  std::set<int> out;
  Mat cur = mat_identity(r.dim);
  while (cur.rows > 0) {
    Mat below(0, r.dim);
    for (int i = 0; i < rs.radical.rows; ++i)
      below = mat_vstack(below, mat_mul(F, cur, rep_action_of(A, r, mat_row(rs.radical, i))));
    below = row_space(F, below);
    require(below.rows < cur.rows, errc::internal_assertion, "radical filtration must shrink");
    Rep outer = sub_rep(A, r, cur);
    Echelon ech = echelon(F, cur);
    std::vector<std::vector<int>> inner;
    for (int i = 0; i < below.rows; ++i) {
      auto co = coords_in_basis(F, ech, mat_row(below, i));
      require(co.has_value(), errc::internal_assertion, "radical filtration is not nested");
      inner.push_back(*co);
    }
    Rep layer = quotient_rep(A, outer, mat_from_rows(inner, outer.dim));
    for (size_t i = 0; i < rs.simples.size(); ++i) {
      if (out.count(static_cast<int>(i))) continue;
      if (!hom_space(F, rs.simples[i].action, layer.action).empty())
        out.insert(static_cast<int>(i));
    }
    cur = below;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Duality and injective hulls
// ---------------------------------------------------------------------------

// Dual module: a right module over the opposite algebra, transposed actions.
inline Rep dualize(const Rep& r) {
  Rep d;
  d.dim = r.dim;
  for (const Mat& m : r.action) d.action.push_back(mat_transpose(m));
  return d;
}

// All idempotents of A, canonical enumeration order.
inline std::vector<std::vector<int>> idempotents(const Algebra& A) {
  const PrimeField F = A.field();
  long long count = 1;
  for (int i = 0; i < A.dim; ++i) {
    count *= F.p;
    if (count > caps().element_enum) fail(errc::cap_exceeded, "algebra too large for idempotent search");
  }
  std::vector<std::vector<int>> out;
  std::vector<int> v(A.dim, 0);
  out.push_back(v);  // 0
  while (next_vector(F.p, v))
    if (algebra_mul(A, v, v) == v) out.push_back(v);
  return out;
}

// Greedy split of 1 into primitive orthogonal idempotents.
inline std::vector<std::vector<int>> primitive_idempotent_decomposition(const Algebra& A) {
  const PrimeField F = A.field();
  std::vector<std::vector<int>> idem = idempotents(A);
  std::vector<int> zero(A.dim, 0);
  auto is_zero = [&](const std::vector<int>& x) { return x == zero; };
  auto sub = [&](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> r(A.dim);
    for (int i = 0; i < A.dim; ++i) r[i] = F.sub(a[i], b[i]);
    return r;
  };
  std::vector<std::vector<int>> work{A.unit}, prims;
  while (!work.empty()) {
    std::vector<int> e = work.back();
    work.pop_back();
    if (is_zero(e)) continue;
    bool split = false;
    for (const auto& f : idem) {
      if (is_zero(f) || f == e) continue;
      if (algebra_mul(A, e, f) == f && algebra_mul(A, f, e) == f) {
        work.push_back(f);
        work.push_back(sub(e, f));
        split = true;
        break;
      }
    }
    if (!split) prims.push_back(std::move(e));
  }
  std::sort(prims.begin(), prims.end());
  return prims;
}

struct Hull {
  Rep env;    // the injective hull E(M)
  Mat embed;  // dim(M) x dim(E), injective intertwiner
};

// Injective hull of each simple: the dual of the indecomposable projective of
// the opposite algebra whose top is dual to the simple.
inline std::vector<Rep> injective_hulls_of_simples(const Algebra& A, const std::vector<Rep>& simples) {
  const PrimeField F = A.field();
  Algebra B = opposite(A);
  Rep regB = regular_rep(B);
  Mat radB = radical(B);
  std::vector<Rep> projsB;
  for (const auto& e : primitive_idempotent_decomposition(B))
    projsB.push_back(sub_rep(B, regB, cyclic_span(B, regB, e)));
  // tops of the opposite projectives
  std::vector<Rep> tops;
  for (const Rep& P : projsB) {
    // P * rad(B): span of images of basis vectors under radical elements
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < radB.rows; ++i) {
      Mat act = rep_action_of(B, P, mat_row(radB, i));
      for (int r = 0; r < P.dim; ++r) {
        std::vector<int> v(P.dim, 0);
        v[r] = 1;
        rows.push_back(vec_mat(F, v, act));
      }
    }
    tops.push_back(quotient_rep(B, P, row_space(F, mat_from_rows(rows, P.dim))));
  }
  std::vector<Rep> hulls;
  for (const Rep& S : simples) {
    Rep Sdual = dualize(S);  // simple B-module
    int found = -1;
    for (size_t i = 0; i < projsB.size(); ++i)
      if (tops[i].dim == Sdual.dim && is_isomorphic(B, tops[i], Sdual)) {
        found = static_cast<int>(i);
        break;
      }
    require(found >= 0, errc::internal_assertion, "no projective cover matches the dual simple");
    hulls.push_back(dualize(projsB[found]));  // back to an A-module
  }
  return hulls;
}

// Greedy decomposition of a semisimple module into independent simple
// submodules (bases in ambient coordinates).
inline std::vector<Mat> semisimple_summands(const Algebra& A, const Rep& r, const Mat& ambient_basis) {
  const PrimeField F = A.field();
  Rep s = sub_rep(A, r, ambient_basis);
  if (s.dim == 0) return {};
  long long count = 1;
  for (int i = 0; i < s.dim; ++i) {
    count *= F.p;
    if (count > caps().element_enum) fail(errc::cap_exceeded, "socle too large to decompose");
  }
  std::map<std::string, Mat> cyclics;
  std::vector<int> v(s.dim, 0);
  while (next_vector(F.p, v)) {
    Mat c = cyclic_span(A, s, v);
    cyclics.emplace(mat_key(c), std::move(c));
  }
  std::vector<Mat> sorted;
  for (auto& [k, m] : cyclics) sorted.push_back(m);
  std::sort(sorted.begin(), sorted.end(), [](const Mat& a, const Mat& b) {
    if (a.rows != b.rows) return a.rows < b.rows;
    return mat_key(a) < mat_key(b);
  });
  std::vector<Mat> parts;
  Mat sum(0, s.dim);
  for (const Mat& c : sorted) {
    if (sum.rows == s.dim) break;
    if (subspace_intersect(F, c, sum).rows == 0) {
      parts.push_back(c);
      sum = subspace_sum(F, sum, c);
    }
  }
  require(sum.rows == s.dim, errc::internal_assertion, "socle failed to decompose");
  // back to ambient coordinates
  Echelon amb = echelon(F, ambient_basis);
  std::vector<Mat> out;
  for (const Mat& p : parts) {
    std::vector<std::vector<int>> rows;
    for (int i = 0; i < p.rows; ++i) rows.push_back(vec_mat(F, mat_row(p, i), amb.rref));
    out.push_back(row_space(F, mat_from_rows(rows, r.dim)));
  }
  return out;
}

// A nonzero hom that is injective on `a` (for simples any nonzero hom works).
inline Mat iso_between(const Algebra& A, const Rep& a, const Rep& b) {
  const PrimeField F = A.field();
  std::vector<Mat> homs = hom_space(F, a.action, b.action);
  for (const Mat& h : homs)
    if (mat_rank(F, h) == a.dim) return h;
  std::vector<int> co(homs.size(), 0);
  long long combos = 1;
  for (size_t i = 0; i < homs.size(); ++i) {
    combos *= F.p;
    if (combos > caps().element_enum) fail(errc::cap_exceeded, "hom space too large for isomorphism search");
  }
  while (next_vector(F.p, co)) {
    Mat t(a.dim, b.dim);
    for (size_t i = 0; i < homs.size(); ++i)
      if (co[i] != 0) t = mat_add(F, t, mat_scale(F, co[i], homs[i]));
    if (mat_rank(F, t) == a.dim) return t;
  }
  fail(errc::internal_assertion, "expected isomorphism not found");
}

// Injective hull of a nonzero module: hulls of the socle's simple summands,
// glued along an extension of the socle embedding.  The extension exists
// because the target is injective, and is injective because the socle is
// essential.
inline Hull injective_hull(const Algebra& A, const Rep& m) {
  require(m.dim > 0, errc::zero_module, "the zero module has no indecomposable hull data");
  const PrimeField F = A.field();
  RadicalSimples rs = radical_simples(A);
  std::vector<Rep> hulls = injective_hulls_of_simples(A, rs.simples);
  Mat soc = socle(A, m, rs.radical);
  std::vector<Mat> parts = semisimple_summands(A, m, soc);

  // assemble E = direct sum of hulls matching the socle summands
  Rep E;
  E.dim = 0;
  E.action.assign(A.dim, Mat(0, 0));
  std::vector<int> offsets;
  std::vector<int> classes;
  for (const Mat& part : parts) {
    Rep S = sub_rep(A, m, part);
    int cls = simple_index_of(A, rs.simples, S);
    offsets.push_back(E.dim);
    classes.push_back(cls);
    E = E.dim == 0 ? hulls[cls] : direct_sum(F, E, hulls[cls]);
  }

  // constraints: T is an intertwiner and restricts to the chosen socle maps
  int unknowns = m.dim * E.dim;
  std::vector<std::vector<int>> eqs;
  std::vector<int> rhs;
  for (int g = 0; g < A.dim; ++g)
    for (int r = 0; r < m.dim; ++r)
      for (int c = 0; c < E.dim; ++c) {
        std::vector<int> eq(unknowns, 0);
        for (int k = 0; k < m.dim; ++k) eq[k * E.dim + c] = F.add(eq[k * E.dim + c], m.action[g].at(r, k));
        for (int k = 0; k < E.dim; ++k) eq[r * E.dim + k] = F.sub(eq[r * E.dim + k], E.action[g].at(k, c));
        eqs.push_back(std::move(eq));
        rhs.push_back(0);
      }
  for (size_t pi = 0; pi < parts.size(); ++pi) {
    Rep S = sub_rep(A, m, parts[pi]);
    Rep socE = sub_rep(A, hulls[classes[pi]],
                       socle(A, hulls[classes[pi]], rs.radical));
    Mat to_simple = iso_between(A, S, rs.simples[classes[pi]]);
    Mat to_socE = iso_between(A, rs.simples[classes[pi]], socE);
    Mat socE_basis = row_space(F, socle(A, hulls[classes[pi]], rs.radical));
    Mat comp = mat_mul(F, mat_mul(F, to_simple, to_socE), socE_basis);  // S -> E(S) coords
    for (int i = 0; i < parts[pi].rows; ++i) {
      std::vector<int> u = mat_row(parts[pi], i);       // in m coords
      std::vector<int> target(E.dim, 0);                // embed into block pi
      for (int j = 0; j < comp.cols; ++j) target[offsets[pi] + j] = comp.at(i, j);
      for (int c = 0; c < E.dim; ++c) {
        std::vector<int> eq(unknowns, 0);
        for (int k = 0; k < m.dim; ++k) eq[k * E.dim + c] = u[k];
        eqs.push_back(std::move(eq));
        rhs.push_back(target[c]);
      }
    }
  }
  // solve the combined affine system
  Mat sys = mat_from_rows(eqs, unknowns);
  Mat aug = mat_hstack(sys, [&] {
    Mat r(static_cast<int>(rhs.size()), 1);
    for (size_t i = 0; i < rhs.size(); ++i) r.at(static_cast<int>(i), 0) = rhs[i];
    return r;
  }());
  Echelon e = echelon(F, aug);
  Mat T(m.dim, E.dim);
  for (int i = 0; i < e.rank; ++i) {
    int c = e.pivots[i];
    require(c < unknowns, errc::internal_assertion, "socle extension system inconsistent");
    T.a[c] = e.rref.at(i, unknowns);
  }
  require(mat_rank(F, T) == m.dim, errc::internal_assertion, "hull embedding is not injective");
  return Hull{std::move(E), std::move(T)};
}

// ---------------------------------------------------------------------------
// Trace, support, annihilators, primality
// ---------------------------------------------------------------------------

// trace(G, T): the sum of the images of all homomorphisms G -> T.
inline Mat trace_submodule(const Algebra& A, const Rep& gen, const Rep& target) {
  const PrimeField F = A.field();
  std::vector<Mat> homs = hom_space(F, gen.action, target.action);
  Mat rows(0, target.dim);
  for (const Mat& h : homs) rows = mat_vstack(rows, h);
  return row_space(F, rows);
}

// Largest submodule of `target` lying in sigma[gen]: pull the trace inside
// the injective hull back along the embedding.
inline Mat i_shriek_sigma(const Algebra& A, const Rep& gen, const Rep& target) {
  if (target.dim == 0) return Mat(0, 0);
  const PrimeField F = A.field();
  Hull h = injective_hull(A, target);
  Mat tr = trace_submodule(A, gen, h.env);
  Mat inside = subspace_intersect(F, row_space(F, h.embed), tr);
  std::vector<std::vector<int>> pre;
  for (int i = 0; i < inside.rows; ++i) {
    auto x = solve_left(F, h.embed, mat_row(inside, i));
    require(x.has_value(), errc::internal_assertion, "preimage under hull embedding missing");
    pre.push_back(*x);
  }
  return row_space(F, mat_from_rows(pre, target.dim));
}

// sigma-membership: n lies in sigma[m] iff n is contained in the trace of m
// in the injective hull of n.
inline bool sigma_member_findim(const Algebra& A, const Rep& n, const Rep& m) {
  if (n.dim == 0) return true;
  if (m.dim == 0) return false;
  const PrimeField F = A.field();
  Hull h = injective_hull(A, n);
  Mat tr = trace_submodule(A, m, h.env);
  return subspace_contains(F, tr, row_space(F, h.embed));
}

// Two-sided annihilator of a module, as a subspace of A.
inline Mat annihilator(const Algebra& A, const Rep& r) {
  const PrimeField F = A.field();
  Mat sys(A.dim, r.dim * r.dim);
  for (int i = 0; i < A.dim; ++i)
    for (int b = 0; b < r.dim; ++b)
      for (int c = 0; c < r.dim; ++c) sys.at(i, b * r.dim + c) = r.action[i].at(b, c);
  return left_kernel(F, sys);
}

// Annihilator of the cyclic submodule generated by v.
inline Mat element_ann(const Algebra& A, const Rep& r, const std::vector<int>& v) {
  const PrimeField F = A.field();
  Mat sys(A.dim, A.dim * r.dim);
  for (int s = 0; s < A.dim; ++s) {
    std::vector<int> w = vec_mat(F, v, r.action[s]);
    for (int i = 0; i < A.dim; ++i) {
      std::vector<int> img = vec_mat(F, w, r.action[i]);
      for (int c = 0; c < r.dim; ++c) sys.at(i, s * r.dim + c) = img[c];
    }
  }
  return left_kernel(F, sys);
}

// R is prime iff x*R*y != 0 for all nonzero x, y.
inline bool is_prime_ring(const Algebra& A) {
  const PrimeField F = A.field();
  long long count = 1;
  for (int i = 0; i < A.dim; ++i) {
    count *= F.p;
    if (count > caps().element_enum) fail(errc::cap_exceeded, "algebra too large for primality search");
  }
  std::vector<int> x(A.dim, 0);
  while (next_vector(F.p, x)) {
    // y with x*e_j*y = 0 for all j?
    Mat sys(A.dim, 0);
    for (int j = 0; j < A.dim; ++j) {
      std::vector<int> ej(A.dim, 0);
      ej[j] = 1;
      sys = mat_hstack(sys, left_mult_matrix(A, algebra_mul(A, x, ej)));
    }
    if (left_kernel(F, sys).rows > 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Endomorphism rings
// ---------------------------------------------------------------------------

struct EndAnalysis {
  int end_dim = 0;
  int rad_dim = 0;
  int quot_dim = 0;       // dim of End/rad
  bool division = false;  // of End/rad
  DivisionRingDescriptor descriptor;
  Algebra end_algebra;
};

// Quotient of an algebra by a two-sided ideal (given as a subspace basis).
inline Algebra quotient_algebra(const Algebra& A, const Mat& ideal) {
  const PrimeField F = A.field();
  Echelon e = echelon(F, ideal);
  std::vector<int> free_cols;
  {
    std::vector<bool> piv(A.dim, false);
    for (int c : e.pivots) piv[c] = true;
    for (int c = 0; c < A.dim; ++c)
      if (!piv[c]) free_cols.push_back(c);
  }
  auto reduce = [&](std::vector<int> v) {
    for (int i = 0; i < e.rank; ++i) {
      int f = v[e.pivots[i]];
      if (f == 0) continue;
      for (int j = 0; j < A.dim; ++j) v[j] = F.sub(v[j], F.mul(f, e.rref.at(i, j)));
    }
    std::vector<int> q;
    for (int c : free_cols) q.push_back(v[c]);
    return q;
  };
  Algebra Q;
  Q.p = A.p;
  Q.dim = static_cast<int>(free_cols.size());
  Q.mult.assign(static_cast<size_t>(Q.dim) * Q.dim * Q.dim, 0);
  for (int i = 0; i < Q.dim; ++i)
    for (int j = 0; j < Q.dim; ++j) {
      std::vector<int> a(A.dim, 0), b(A.dim, 0);
      a[free_cols[i]] = 1;
      b[free_cols[j]] = 1;
      std::vector<int> q = reduce(algebra_mul(A, a, b));
      for (int k = 0; k < Q.dim; ++k) Q.c(i, j, k) = q[k];
    }
  Q.unit = reduce(A.unit);
  return Q;
}

inline bool algebra_is_division(const Algebra& A) {
  const PrimeField F = A.field();
  if (A.dim == 0) return false;
  long long count = 1;
  for (int i = 0; i < A.dim; ++i) {
    count *= F.p;
    if (count > caps().element_enum) fail(errc::cap_exceeded, "algebra too large for division test");
  }
  std::vector<int> v(A.dim, 0);
  while (next_vector(F.p, v))
    if (mat_rank(F, left_mult_matrix(A, v)) != A.dim) return false;
  return true;
}

// Endomorphism ring of a module as an abstract algebra (composition order:
// apply the first matrix, then the second).
inline EndAnalysis end_ring_analysis(const Algebra& A, const Rep& m) {
  require(m.dim > 0, errc::zero_module, "endomorphisms of the zero module");
  const PrimeField F = A.field();
  std::vector<Mat> basis = hom_space(F, m.action, m.action);
  int e = static_cast<int>(basis.size());
  // coordinates in the hom basis via the vectorized rref
  std::vector<std::vector<int>> vecs;
  for (const Mat& b : basis) vecs.push_back(b.a);
  Echelon hb = echelon(F, mat_from_rows(vecs, m.dim * m.dim));
  auto coords = [&](const Mat& t) {
    auto co = coords_in_basis(F, hb, t.a);
    require(co.has_value(), errc::internal_assertion, "endomorphism outside the hom space");
    return *co;
  };
  // hom_space returns the rref basis itself, so coordinates line up
  Algebra E;
  E.p = A.p;
  E.dim = e;
  E.mult.assign(static_cast<size_t>(e) * e * e, 0);
  for (int i = 0; i < e; ++i)
    for (int j = 0; j < e; ++j) {
      std::vector<int> co = coords(mat_mul(F, basis[i], basis[j]));
      for (int k = 0; k < e; ++k) E.c(i, j, k) = co[k];
    }
  E.unit = coords(mat_identity(m.dim));

  EndAnalysis out;
  out.end_algebra = E;
  out.end_dim = e;
  Mat rad = radical(E);
  out.rad_dim = rad.rows;
  Algebra Q = quotient_algebra(E, rad);
  out.quot_dim = Q.dim;
  out.division = algebra_is_division(Q);
  out.descriptor = out.division ? DivisionRingDescriptor::finite_field(A.p, Q.dim)
                                : DivisionRingDescriptor::end_ring(A.p, e, false);
  return out;
}

}  // namespace injspec
