#pragma once

#include "loopmoment/rational.hpp"

#include <optional>
#include <vector>

namespace loopmoment {

using IntVec = std::vector<long long>;
using RatVec = std::vector<Rat>;

// Dense square-or-rectangular matrices at desk scale.  These deliberately
// stay tiny: ranks never exceed 8 and matrix dims never exceed 8x8 on the
// exact side.

struct IntMat {
  int rows = 0, cols = 0;
  std::vector<long long> a;

  IntMat() = default;
  IntMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}

  long long& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  long long at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static IntMat identity(int n) {
    IntMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  friend IntMat operator*(const IntMat& x, const IntMat& y) {
    if (x.cols != y.rows) fail("IntMat multiply: dimension mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        long long v = x.at(i, k);
        if (v == 0) continue;
        for (int j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
      }
    return z;
  }

  IntVec apply(const IntVec& v) const {
    if (static_cast<int>(v.size()) != cols) fail("IntMat apply: bad vector");
    IntVec w(rows, 0);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w[i] += at(i, j) * v[j];
    return w;
  }

  friend bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
  friend auto operator<=>(const IntMat& x, const IntMat& y) = default;
};

struct RatMat {
  int rows = 0, cols = 0;
  std::vector<Rat> a;

  RatMat() = default;
  RatMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const Rat& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static RatMat identity(int n) {
    RatMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }
  static RatMat from_int(const IntMat& m) {
    RatMat r(m.rows, m.cols);
    for (int i = 0; i < m.rows; ++i)
      for (int j = 0; j < m.cols; ++j) r.at(i, j) = m.at(i, j);
    return r;
  }

  friend RatMat operator*(const RatMat& x, const RatMat& y) {
    if (x.cols != y.rows) fail("RatMat multiply: dimension mismatch");
    RatMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (x.at(i, k) == 0) continue;
        for (int j = 0; j < y.cols; ++j)
          z.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return z;
  }

  RatVec apply(const RatVec& v) const {
    if (static_cast<int>(v.size()) != cols) fail("RatMat apply: bad vector");
    RatVec w(rows, Rat(0));
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) w[i] += at(i, j) * v[j];
    return w;
  }

  RatMat transposed() const {
    RatMat t(cols, rows);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  friend bool operator==(const RatMat& x, const RatMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }
};

// x^T M y, all exact.
Rat bilinear(const RatMat& m, const RatVec& x, const RatVec& y);
Rat bilinear_int(const RatMat& m, const IntVec& x, const IntVec& y);

// Exact Gauss-Jordan inverse; fails on singular input.
RatMat rat_inverse(const RatMat& m);

// Solves M x = b exactly; nullopt when inconsistent (M may be rectangular;
// when the system is underdetermined one solution is returned).
std::optional<RatVec> rat_solve(const RatMat& m, const RatVec& b);

// Basis of the integer kernel {x in Z^n : M x = 0}, computed via the Smith
// normal form, so the result generates the full kernel lattice.
std::vector<IntVec> integer_kernel_basis(const IntMat& m);

struct GaussMat {
  int rows = 0, cols = 0;
  std::vector<GaussRat> a;

  GaussMat() = default;
  GaussMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  GaussRat& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  const GaussRat& at(int i, int j) const {
    return a[static_cast<size_t>(i) * cols + j];
  }

  static GaussMat identity(int n) {
    GaussMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = GaussRat(1);
    return m;
  }
  // Elementary matrix E_{ij} (1-based indices).
  static GaussMat unit(int n, int i, int j) {
    GaussMat m(n, n);
    m.at(i - 1, j - 1) = GaussRat(1);
    return m;
  }

  bool is_zero() const {
    for (const auto& x : a)
      if (!x.is_zero()) return false;
    return true;
  }

  GaussMat conj_entrywise() const {
    GaussMat m(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k].conj();
    return m;
  }

  GaussMat scaled(const GaussRat& s) const {
    GaussMat m(rows, cols);
    for (size_t k = 0; k < a.size(); ++k) m.a[k] = a[k] * s;
    return m;
  }

  friend GaussMat operator+(const GaussMat& x, const GaussMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail("GaussMat add: size");
    GaussMat z(x.rows, x.cols);
    for (size_t k = 0; k < x.a.size(); ++k) z.a[k] = x.a[k] + y.a[k];
    return z;
  }
  friend GaussMat operator-(const GaussMat& x, const GaussMat& y) {
    if (x.rows != y.rows || x.cols != y.cols) fail("GaussMat sub: size");
    GaussMat z(x.rows, x.cols);
    for (size_t k = 0; k < x.a.size(); ++k) z.a[k] = x.a[k] - y.a[k];
    return z;
  }
  friend GaussMat operator*(const GaussMat& x, const GaussMat& y) {
    if (x.cols != y.rows) fail("GaussMat multiply: dimension mismatch");
    GaussMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
      for (int k = 0; k < x.cols; ++k) {
        if (x.at(i, k).is_zero()) continue;
        for (int j = 0; j < y.cols; ++j)
          z.at(i, j) += x.at(i, k) * y.at(k, j);
      }
    return z;
  }
  friend bool operator==(const GaussMat& x, const GaussMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
  }

  GaussRat trace() const {
    GaussRat t;
    for (int i = 0; i < rows && i < cols; ++i) t += at(i, i);
    return t;
  }
};

// [X, Y] = XY - YX.
inline GaussMat bracket(const GaussMat& x, const GaussMat& y) {
  return x * y - y * x;
}

// Exact inverse over the Gaussian-rational field.
GaussMat gauss_inverse(const GaussMat& m);

// Solves, exactly, for coefficients c with sum_i c_i B_i = target, where
// matrices are flattened to vectors.  nullopt if target is not in the span.
std::optional<std::vector<GaussRat>> coords_in_span(
    const std::vector<GaussMat>& basis, const GaussMat& target);

}  // namespace loopmoment
