#pragma once

#include <optional>
#include <string>
#include <vector>

#include "injspec/fp.hpp"

namespace injspec {

// Dense row-major matrix over a prime field.  Vectors are rows throughout;
// module actions multiply on the right (v -> v*M), so Hom spaces consist of
// matrices T with A_i*T = T*B_i.
struct Mat {
  int rows = 0, cols = 0;
  std::vector<int> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  int at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
  bool is_zero() const {
    for (int x : a)
      if (x != 0) return false;
    return true;
  }
  bool operator==(const Mat&) const = default;
};

inline Mat mat_identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

inline Mat mat_from_rows(const std::vector<std::vector<int>>& rows, int cols) {
  Mat m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows; ++i) {
    require(static_cast<int>(rows[i].size()) == cols, errc::dimension_mismatch, "ragged row list");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

inline std::vector<int> mat_row(const Mat& m, int r) {
  return std::vector<int>(m.a.begin() + static_cast<size_t>(r) * m.cols,
                          m.a.begin() + static_cast<size_t>(r + 1) * m.cols);
}

inline Mat mat_transpose(const Mat& m) {
  Mat t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

inline Mat mat_mul(const PrimeField& F, const Mat& x, const Mat& y) {
  require(x.cols == y.rows, errc::dimension_mismatch, "matrix product shape mismatch");
  Mat z(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      int v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < y.cols; ++j)
        z.at(i, j) = F.norm(z.at(i, j) + static_cast<long long>(v) * y.at(k, j));
    }
  return z;
}

inline Mat mat_add(const PrimeField& F, const Mat& x, const Mat& y) {
  require(x.rows == y.rows && x.cols == y.cols, errc::dimension_mismatch, "matrix sum shape mismatch");
  Mat z = x;
  for (size_t i = 0; i < z.a.size(); ++i) z.a[i] = F.add(z.a[i], y.a[i]);
  return z;
}

inline Mat mat_scale(const PrimeField& F, int c, const Mat& x) {
  Mat z = x;
  for (int& v : z.a) v = F.mul(c, v);
  return z;
}

inline Mat mat_sub(const PrimeField& F, const Mat& x, const Mat& y) {
  return mat_add(F, x, mat_scale(F, F.neg(1), y));
}

inline Mat mat_vstack(const Mat& x, const Mat& y) {
  if (x.rows == 0) return y;
  if (y.rows == 0) return x;
  require(x.cols == y.cols, errc::dimension_mismatch, "vstack width mismatch");
  Mat z(x.rows + y.rows, x.cols);
  std::copy(x.a.begin(), x.a.end(), z.a.begin());
  std::copy(y.a.begin(), y.a.end(), z.a.begin() + x.a.size());
  return z;
}

inline Mat mat_hstack(const Mat& x, const Mat& y) {
  if (x.cols == 0) return y;
  if (y.cols == 0) return x;
  require(x.rows == y.rows, errc::dimension_mismatch, "hstack height mismatch");
  Mat z(x.rows, x.cols + y.cols);
  for (int i = 0; i < x.rows; ++i) {
    for (int j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (int j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
  }
  return z;
}

inline std::vector<int> vec_mat(const PrimeField& F, const std::vector<int>& v, const Mat& m) {
  require(static_cast<int>(v.size()) == m.rows, errc::dimension_mismatch, "vector/matrix shape mismatch");
  std::vector<int> r(m.cols, 0);
  for (int i = 0; i < m.rows; ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols; ++j) r[j] = F.norm(r[j] + static_cast<long long>(v[i]) * m.at(i, j));
  }
  return r;
}

struct Echelon {
  Mat rref;                 // canonical reduced row echelon form, zero rows dropped
  int rank = 0;
  std::vector<int> pivots;  // pivot column per rref row
};

// Canonical RREF.  Every subspace is stored this way, so equality of
// subspaces is equality of matrices.
inline Echelon echelon(const PrimeField& F, Mat m) {
  Echelon e;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int piv = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(piv, j));
    int s = F.inv(m.at(r, c));
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = F.mul(s, m.at(r, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      int f = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = F.sub(m.at(i, j), F.mul(f, m.at(r, j)));
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rank = r;
  e.rref = Mat(r, m.cols);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < m.cols; ++j) e.rref.at(i, j) = m.at(i, j);
  return e;
}

inline Mat row_space(const PrimeField& F, const Mat& m) { return echelon(F, m).rref; }

inline int mat_rank(const PrimeField& F, const Mat& m) { return echelon(F, m).rank; }

// Basis (as rows) of { v : m * v^T = 0 }, i.e. the right kernel.
inline Mat right_kernel(const PrimeField& F, const Mat& m) {
  Echelon e = echelon(F, m);
  std::vector<bool> is_piv(m.cols, false);
  for (int c : e.pivots) is_piv[c] = true;
  std::vector<std::vector<int>> rows;
  for (int c = 0; c < m.cols; ++c) {
    if (is_piv[c]) continue;
    std::vector<int> v(m.cols, 0);
    v[c] = 1;
    for (int i = 0; i < e.rank; ++i) v[e.pivots[i]] = F.neg(e.rref.at(i, c));
    rows.push_back(std::move(v));
  }
  return row_space(F, mat_from_rows(rows, m.cols));
}

// Basis (as rows) of { x : x * m = 0 }.
inline Mat left_kernel(const PrimeField& F, const Mat& m) { return right_kernel(F, mat_transpose(m)); }

struct RankBasis {
  int rank = 0;
  Mat row_space;     // canonical rref
  Mat kernel_basis;  // rows spanning the right kernel; rank + kernel rows == cols
};

inline RankBasis rank_basis(const PrimeField& F, const Mat& m) {
  RankBasis rb;
  Echelon e = echelon(F, m);
  rb.rank = e.rank;
  rb.row_space = e.rref;
  rb.kernel_basis = right_kernel(F, m);
  return rb;
}

// Coordinates of v in a canonical rref basis, if v lies in its row space.
inline std::optional<std::vector<int>> coords_in_basis(const PrimeField& F, const Echelon& basis,
                                                       std::vector<int> v) {
  std::vector<int> coord(basis.rank, 0);
  for (int i = 0; i < basis.rank; ++i) {
    int c = basis.pivots[i];
    coord[i] = v[c];
    if (coord[i] == 0) continue;
    for (int j = 0; j < basis.rref.cols; ++j) v[j] = F.sub(v[j], F.mul(coord[i], basis.rref.at(i, j)));
  }
  for (int x : v)
    if (x != 0) return std::nullopt;
  return coord;
}

enum class SubspaceRel { sum, intersect, contains, equal };

inline void check_same_ambient(const Mat& a, const Mat& b) {
  require(a.cols == b.cols, errc::dimension_mismatch, "subspaces live in different ambient spaces");
}

inline Mat subspace_sum(const PrimeField& F, const Mat& a, const Mat& b) {
  check_same_ambient(a, b);
  return row_space(F, mat_vstack(a, b));
}

// Intersection of row spaces: solutions of x*a = y*b pulled back through a.
inline Mat subspace_intersect(const PrimeField& F, const Mat& a, const Mat& b) {
  check_same_ambient(a, b);
  if (a.rows == 0 || b.rows == 0) return Mat(0, a.cols);
  Mat stacked = mat_vstack(a, b);
  Mat lk = left_kernel(F, stacked);  // rows (x | y') with x*a + y'*b = 0
  std::vector<std::vector<int>> pts;
  for (int i = 0; i < lk.rows; ++i) {
    std::vector<int> x(lk.a.begin() + static_cast<size_t>(i) * lk.cols,
                       lk.a.begin() + static_cast<size_t>(i) * lk.cols + a.rows);
    pts.push_back(vec_mat(F, x, a));
  }
  return row_space(F, mat_from_rows(pts, a.cols));
}

inline bool subspace_contains(const PrimeField& F, const Mat& a, const Mat& b) {
  check_same_ambient(a, b);
  Echelon ea = echelon(F, a);
  for (int i = 0; i < b.rows; ++i)
    if (!coords_in_basis(F, ea, mat_row(b, i))) return false;
  return true;
}

inline bool subspace_equal(const PrimeField& F, const Mat& a, const Mat& b) {
  check_same_ambient(a, b);
  return row_space(F, a) == row_space(F, b);
}

// One solution of x*A = b (free variables zero), if solvable.
inline std::optional<std::vector<int>> solve_left(const PrimeField& F, const Mat& A,
                                                  const std::vector<int>& b) {
  require(static_cast<int>(b.size()) == A.cols, errc::dimension_mismatch, "rhs width mismatch");
  // x*A = b  <=>  A^T x^T = b^T; eliminate on the augmented transpose.
  Mat rhs(A.cols, 1);
  for (int i = 0; i < A.cols; ++i) rhs.at(i, 0) = b[i];
  Echelon e = echelon(F, mat_hstack(mat_transpose(A), rhs));
  std::vector<int> x(A.rows, 0);
  for (int i = 0; i < e.rank; ++i) {
    int c = e.pivots[i];
    if (c == A.rows) return std::nullopt;  // pivot in the rhs column: inconsistent
    x[c] = e.rref.at(i, A.rows);
  }
  return x;
}

// Basis of { T : actA[i] * T = T * actB[i] for all i }, i.e. Hom of the row
// modules defined by the two action lists.  Canonical rref order.
inline std::vector<Mat> hom_space(const PrimeField& F, const std::vector<Mat>& actA,
                                  const std::vector<Mat>& actB) {
  require(actA.size() == actB.size(), errc::dimension_mismatch, "action lists differ in length");
  int m = actA.empty() ? 0 : actA[0].rows;
  int n = actB.empty() ? 0 : actB[0].rows;
  for (const Mat& x : actA) require(x.rows == m && x.cols == m, errc::dimension_mismatch, "action must be square");
  for (const Mat& x : actB) require(x.rows == n && x.cols == n, errc::dimension_mismatch, "action must be square");
  if (m == 0 || n == 0) return {};
  int unknowns = m * n;
  std::vector<std::vector<int>> eqs;
  for (size_t g = 0; g < actA.size(); ++g) {
    for (int r = 0; r < m; ++r)
      for (int c = 0; c < n; ++c) {
        std::vector<int> eq(unknowns, 0);
        for (int k = 0; k < m; ++k) eq[k * n + c] = F.add(eq[k * n + c], actA[g].at(r, k));
        for (int k = 0; k < n; ++k) eq[r * n + k] = F.sub(eq[r * n + k], actB[g].at(k, c));
        bool nz = false;
        for (int v : eq) nz |= (v != 0);
        if (nz) eqs.push_back(std::move(eq));
      }
  }
  Mat sys = mat_from_rows(eqs, unknowns);
  Mat ker = right_kernel(F, sys.rows ? sys : Mat(0, unknowns));
  std::vector<Mat> basis;
  for (int i = 0; i < ker.rows; ++i) {
    Mat t(m, n);
    for (int k = 0; k < unknowns; ++k) t.a[k] = ker.at(i, k);
    basis.push_back(std::move(t));
  }
  return basis;
}

inline std::string mat_key(const Mat& m) {
  std::string s = std::to_string(m.rows) + "x" + std::to_string(m.cols) + ":";
  for (int v : m.a) {
    s += std::to_string(v);
    s += ',';
  }
  return s;
}

}  // namespace injspec
