#pragma once

#include <utility>
#include <vector>

#include "injspec/poly.hpp"

namespace injspec {

// Row-major matrix over F_p[x].
struct PolyMat {
  int rows = 0, cols = 0;
  std::vector<Poly> a;

  PolyMat() = default;
  PolyMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}
  Poly& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Poly& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

struct SmithResult {
  std::vector<Poly> invariant_factors;  // monic, nonunit, d1 | d2 | ... | dk
  int rank_defect = 0;                  // zero columns of the diagonalization
};

// Smith normal form over the euclidean domain F_p[x].  Only the invariant
// factors are returned; transforms are not tracked.
inline SmithResult smith_normal_form(const PrimeField& F, PolyMat M) {
  int n = std::min(M.rows, M.cols);
  std::vector<Poly> diag;

  auto row_op = [&](int dst, int src, const Poly& q) {  // row_dst -= q * row_src
    for (int j = 0; j < M.cols; ++j) M.at(dst, j) = p_sub(F, M.at(dst, j), p_mul(F, q, M.at(src, j)));
  };
  auto col_op = [&](int dst, int src, const Poly& q) {
    for (int i = 0; i < M.rows; ++i) M.at(i, dst) = p_sub(F, M.at(i, dst), p_mul(F, q, M.at(i, src)));
  };
  auto swap_rows = [&](int i, int j) {
    if (i != j)
      for (int c = 0; c < M.cols; ++c) std::swap(M.at(i, c), M.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    if (i != j)
      for (int r = 0; r < M.rows; ++r) std::swap(M.at(r, i), M.at(r, j));
  };

  for (int t = 0; t < n; ++t) {
    while (true) {
      int bi = -1, bj = -1;
      for (int i = t; i < M.rows; ++i)
        for (int j = t; j < M.cols; ++j)
          if (!p_is_zero(M.at(i, j)) &&
              (bi < 0 || p_deg(M.at(i, j)) < p_deg(M.at(bi, bj))))
            bi = i, bj = j;
      if (bi < 0) goto collect;  // submatrix is zero
      swap_rows(t, bi);
      swap_cols(t, bj);

      bool dirty = false;
      for (int i = t + 1; i < M.rows; ++i) {
        if (p_is_zero(M.at(i, t))) continue;
        auto [q, r] = p_divmod(F, M.at(i, t), M.at(t, t));
        row_op(i, t, q);
        dirty |= !p_is_zero(r);
      }
      for (int j = t + 1; j < M.cols; ++j) {
        if (p_is_zero(M.at(t, j))) continue;
        auto [q, r] = p_divmod(F, M.at(t, j), M.at(t, t));
        col_op(j, t, q);
        dirty |= !p_is_zero(r);
      }
      if (dirty) continue;  // smaller-degree remainders appeared; re-pick the pivot

      // pivot must divide the rest of the submatrix
      bool fixed = false;
      for (int i = t + 1; i < M.rows && !fixed; ++i)
        for (int j = t + 1; j < M.cols && !fixed; ++j)
          if (!p_is_zero(p_mod(F, M.at(i, j), M.at(t, t)))) {
            row_op(t, i, p_scale(F, F.neg(1), p_one()));  // row_t += row_i
            fixed = true;
          }
      if (!fixed) break;
    }
    diag.push_back(p_monic(F, M.at(t, t)));
  }

collect:
  // enforce the divisibility chain d1 | d2 | ... (gcd/lcm exchanges)
  for (bool changed = true; changed;) {
    changed = false;
    for (size_t i = 0; i + 1 < diag.size(); ++i)
      for (size_t j = i + 1; j < diag.size(); ++j)
        if (!p_divides(F, diag[i], diag[j])) {
          Poly g = p_gcd(F, diag[i], diag[j]);
          diag[j] = p_lcm(F, diag[i], diag[j]);
          diag[i] = g;
          changed = true;
        }
  }
  SmithResult res;
  res.rank_defect = n - static_cast<int>(diag.size());
  for (Poly& d : diag)
    if (p_deg(d) >= 1) res.invariant_factors.push_back(std::move(d));
  return res;
}

}  // namespace injspec
