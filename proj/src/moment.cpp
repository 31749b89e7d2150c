#include "loopmoment/moment.hpp"

#include <algorithm>

namespace loopmoment::moment {

MomentPoint moment_of_homomorphism(const RootSystem& rs, const IntVec& xi) {
  MomentPoint p;
  p.xi = rs.lattice_to_ambient(xi);
  p.energy = rs.lattice_norm2(xi) / 2;
  p.coroot = xi;
  return p;
}

namespace {

void scan(const RootSystem& rs, const Rat& e_max,
          const std::vector<long long>& box, IntVec& cur, int dim,
          std::vector<IntVec>& out) {
  if (dim == rs.rank) {
    if (rs.lattice_norm2(cur) <= 2 * e_max) out.push_back(cur);
    return;
  }
  for (long long v = -box[dim]; v <= box[dim]; ++v) {
    cur[dim] = v;
    scan(rs, e_max, box, cur, dim + 1, out);
  }
}

}  // namespace

std::vector<IntVec> lattice_ball(const RootSystem& rs, const Rat& e_max) {
  if (e_max < 0) fail("lattice_ball: negative energy cutoff");
  // |m_i|^2 <= 2 e_max (G^vee^{-1})_{ii} bounds the scan box
  // (Cauchy-Schwarz in the form's inner product).
  RatMat inv = rat_inverse(rs.coroot_gram);
  std::vector<long long> box(rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    box[i] = rat_isqrt_floor(2 * e_max * inv.at(i, i));
  std::vector<IntVec> out;
  IntVec cur(rs.rank, 0);
  scan(rs, e_max, box, cur, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

MomentPolytope polytope_vertices(const RootSystem& rs, const Rat& e_max) {
  MomentPolytope poly;
  poly.root_system = rs;
  poly.energy_cutoff = e_max;
  for (const IntVec& xi : lattice_ball(rs, e_max))
    poly.vertices.push_back(moment_of_homomorphism(rs, xi));
  std::sort(poly.vertices.begin(), poly.vertices.end(),
            [](const MomentPoint& a, const MomentPoint& b) {
              if (a.energy != b.energy) return a.energy < b.energy;
              return *a.coroot < *b.coroot;
            });
  return poly;
}

// Phase-1 simplex with Bland's rule, exact rational arithmetic.  Feasible
// iff the artificial objective reaches zero.
bool convex_combination_exists(const std::vector<RatVec>& points,
                               const RatVec& target) {
  int v = static_cast<int>(points.size());
  if (v == 0) return false;
  int m0 = static_cast<int>(target.size());
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != m0)
      fail("convex_combination_exists: dimension mismatch");
  int m = m0 + 1;  // + normalization row sum(l) = 1
  int cols = v + m + 1;
  std::vector<RatVec> t(m + 1, RatVec(cols, Rat(0)));
  for (int r = 0; r < m; ++r) {
    for (int j = 0; j < v; ++j)
      t[r][j] = (r < m0) ? points[j][r] : Rat(1);
    t[r][cols - 1] = (r < m0) ? target[r] : Rat(1);
    if (t[r][cols - 1] < 0)
      for (int j = 0; j < cols; ++j) t[r][j] = -t[r][j];
    t[r][v + r] = 1;  // artificial
  }
  // reduced-cost row for min(sum of artificials) with artificial basis
  for (int j = 0; j < cols; ++j) {
    Rat s(0);
    for (int r = 0; r < m; ++r) s += t[r][j];
    if (j < v || j == cols - 1) t[m][j] = -s;
  }
  std::vector<int> basis(m);
  for (int r = 0; r < m; ++r) basis[r] = v + r;

  for (;;) {
    int enter = -1;
    for (int j = 0; j < v + m; ++j)
      if (t[m][j] < 0) {
        enter = j;
        break;  // Bland: least index
      }
    if (enter < 0) break;
    int leave = -1;
    Rat best;
    for (int r = 0; r < m; ++r) {
      if (t[r][enter] <= 0) continue;
      Rat ratio = t[r][cols - 1] / t[r][enter];
      if (leave < 0 || ratio < best ||
          (ratio == best && basis[r] < basis[leave])) {
        best = ratio;
        leave = r;
      }
    }
    if (leave < 0) fail("simplex: unbounded phase-1 (cannot happen)");
    Rat piv = t[leave][enter];
    for (int j = 0; j < cols; ++j) t[leave][j] /= piv;
    for (int r = 0; r <= m; ++r) {
      if (r == leave || t[r][enter] == 0) continue;
      Rat f = t[r][enter];
      for (int j = 0; j < cols; ++j) t[r][j] -= f * t[leave][j];
    }
    basis[leave] = enter;
  }
  // objective value = -t[m][cols-1]
  return t[m][cols - 1] == 0;
}

namespace {

RatVec lift(const MomentPoint& p) {
  RatVec x = p.xi;
  x.push_back(p.energy);
  return x;
}

void check_query(const MomentPolytope& poly, const MomentPoint& point) {
  if (static_cast<int>(point.xi.size()) != poly.root_system.rank)
    fail("moment point dimension mismatch");
  if (point.energy > poly.energy_cutoff)
    fail("point outside truncation window: energy " +
         rat_to_string(point.energy) + " exceeds cutoff " +
         rat_to_string(poly.energy_cutoff));
}

}  // namespace

bool hull_contains(const MomentPolytope& poly, const MomentPoint& point) {
  check_query(poly, point);
  std::vector<RatVec> pts;
  pts.reserve(poly.vertices.size());
  for (const auto& vtx : poly.vertices) pts.push_back(lift(vtx));
  return convex_combination_exists(pts, lift(point));
}

bool is_extreme(const MomentPolytope& poly, const MomentPoint& point) {
  check_query(poly, point);
  std::vector<RatVec> pts;
  for (const auto& vtx : poly.vertices)
    if (!(vtx == point)) pts.push_back(lift(vtx));
  return !convex_combination_exists(pts, lift(point));
}

}  // namespace loopmoment::moment
