#include "loopmoment/linalg.hpp"

#include <algorithm>
#include <cstdlib>

namespace loopmoment {

Rat bilinear(const RatMat& m, const RatVec& x, const RatVec& y) {
  if (static_cast<int>(x.size()) != m.rows ||
      static_cast<int>(y.size()) != m.cols)
    fail("bilinear: dimension mismatch");
  Rat s(0);
  for (int i = 0; i < m.rows; ++i) {
    if (x[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < m.cols; ++j) row += m.at(i, j) * y[j];
    s += x[i] * row;
  }
  return s;
}

Rat bilinear_int(const RatMat& m, const IntVec& x, const IntVec& y) {
  RatVec xr(x.begin(), x.end()), yr(y.begin(), y.end());
  return bilinear(m, xr, yr);
}

RatMat rat_inverse(const RatMat& m) {
  if (m.rows != m.cols) fail("rat_inverse: not square");
  int n = m.rows;
  RatMat a = m, inv = RatMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) fail("rat_inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    Rat d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) /= d;
      inv.at(col, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col) == 0) continue;
      Rat f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::optional<RatVec> rat_solve(const RatMat& m, const RatVec& b) {
  if (static_cast<int>(b.size()) != m.rows) fail("rat_solve: bad rhs");
  int R = m.rows, C = m.cols;
  RatMat a(R, C + 1);
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) a.at(i, j) = m.at(i, j);
    a.at(i, C) = b[i];
  }
  std::vector<int> pivot_col(R, -1);
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    int piv = -1;
    for (int r = row; r < R; ++r)
      if (a.at(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j <= C; ++j) std::swap(a.at(piv, j), a.at(row, j));
    Rat d = a.at(row, col);
    for (int j = 0; j <= C; ++j) a.at(row, j) /= d;
    for (int r = 0; r < R; ++r) {
      if (r == row || a.at(r, col) == 0) continue;
      Rat f = a.at(r, col);
      for (int j = 0; j <= C; ++j) a.at(r, j) -= f * a.at(row, j);
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int r = row; r < R; ++r)
    if (a.at(r, C) != 0) return std::nullopt;  // inconsistent
  RatVec x(C, Rat(0));
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = a.at(r, C);
  return x;
}

namespace {

// Smith normal form of an integer matrix.  Returns D and unimodular V with
// A*V congruent to column form: we only need V and the rank, so the
// reduction tracks column operations on A while row operations act on A
// alone.
struct SmithResult {
  IntMat d;  // diagonalized matrix
  IntMat v;  // column-operation accumulator, A_original * v = row_ops(d)
  int rank;
};

SmithResult smith(IntMat a) {
  int R = a.rows, C = a.cols;
  IntMat v = IntMat::identity(C);
  int t = 0;
  auto swap_rows = [&](int i, int j) {
    for (int c = 0; c < C; ++c) std::swap(a.at(i, c), a.at(j, c));
  };
  auto swap_cols = [&](int i, int j) {
    for (int r = 0; r < R; ++r) std::swap(a.at(r, i), a.at(r, j));
    for (int r = 0; r < C; ++r) std::swap(v.at(r, i), v.at(r, j));
  };
  auto add_row = [&](int dst, int src, long long f) {
    for (int c = 0; c < C; ++c) a.at(dst, c) += f * a.at(src, c);
  };
  auto add_col = [&](int dst, int src, long long f) {
    for (int r = 0; r < R; ++r) a.at(r, dst) += f * a.at(r, src);
    for (int r = 0; r < C; ++r) v.at(r, dst) += f * v.at(r, src);
  };
  while (t < R && t < C) {
    // find a nonzero pivot in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < R && pi < 0; ++i)
      for (int j = t; j < C; ++j)
        if (a.at(i, j) != 0) {
          pi = i;
          pj = j;
          break;
        }
    if (pi < 0) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = t + 1; i < R; ++i)
        while (a.at(i, t) != 0) {
          long long q = a.at(i, t) / a.at(t, t);
          add_row(i, t, -q);
          if (a.at(i, t) != 0) {
            swap_rows(t, i);
            clean = false;
          }
        }
      for (int j = t + 1; j < C; ++j)
        while (a.at(t, j) != 0) {
          long long q = a.at(t, j) / a.at(t, t);
          add_col(j, t, -q);
          if (a.at(t, j) != 0) {
            swap_cols(t, j);
            clean = false;
          }
        }
    }
    ++t;
  }
  return {a, v, t};
}

}  // namespace

std::vector<IntVec> integer_kernel_basis(const IntMat& m) {
  SmithResult s = smith(m);
  std::vector<IntVec> basis;
  for (int j = 0; j < m.cols; ++j) {
    bool zero_col = true;
    for (int i = 0; i < s.d.rows; ++i)
      if (s.d.at(i, j) != 0) {
        zero_col = false;
        break;
      }
    if (!zero_col) continue;
    IntVec col(m.cols);
    for (int i = 0; i < m.cols; ++i) col[i] = s.v.at(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

GaussMat gauss_inverse(const GaussMat& m) {
  if (m.rows != m.cols) fail("gauss_inverse: not square");
  int n = m.rows;
  GaussMat a = m, inv = GaussMat::identity(n);
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) fail("gauss_inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(piv, j), a.at(col, j));
        std::swap(inv.at(piv, j), inv.at(col, j));
      }
    GaussRat d = a.at(col, col);
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = a.at(col, j) / d;
      inv.at(col, j) = inv.at(col, j) / d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      GaussRat f = a.at(r, col);
      for (int j = 0; j < n; ++j) {
        a.at(r, j) -= f * a.at(col, j);
        inv.at(r, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

std::optional<std::vector<GaussRat>> coords_in_span(
    const std::vector<GaussMat>& basis, const GaussMat& target) {
  if (basis.empty()) fail("coords_in_span: empty basis");
  int R = basis[0].rows * basis[0].cols;
  int C = static_cast<int>(basis.size());
  // Row-reduce [B | t] over the Gaussian-rational field.
  GaussMat a(R, C + 1);
  for (int j = 0; j < C; ++j) {
    if (basis[j].rows != basis[0].rows || basis[j].cols != basis[0].cols)
      fail("coords_in_span: basis shape mismatch");
    for (int k = 0; k < R; ++k) a.at(k, j) = basis[j].a[k];
  }
  if (target.rows != basis[0].rows || target.cols != basis[0].cols)
    fail("coords_in_span: target shape mismatch");
  for (int k = 0; k < R; ++k) a.at(k, C) = target.a[k];

  std::vector<int> pivot_col(R, -1);
  int row = 0;
  for (int col = 0; col < C && row < R; ++col) {
    int piv = -1;
    for (int r = row; r < R; ++r)
      if (!a.at(r, col).is_zero()) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j <= C; ++j) std::swap(a.at(piv, j), a.at(row, j));
    GaussRat d = a.at(row, col);
    for (int j = 0; j <= C; ++j) a.at(row, j) = a.at(row, j) / d;
    for (int r = 0; r < R; ++r) {
      if (r == row || a.at(r, col).is_zero()) continue;
      GaussRat f = a.at(r, col);
      for (int j = 0; j <= C; ++j) a.at(r, j) -= f * a.at(row, j);
    }
    pivot_col[row] = col;
    ++row;
  }
  for (int r = row; r < R; ++r)
    if (!a.at(r, C).is_zero()) return std::nullopt;
  std::vector<GaussRat> x(C);
  for (int r = 0; r < row; ++r) x[pivot_col[r]] = a.at(r, C);
  return x;
}

}  // namespace loopmoment
