#pragma once

#include "loopmoment/cartan.hpp"

#include <optional>
#include <vector>

namespace loopmoment::moment {

using cartan::RootSystem;

// A point (xi, E) of t + R.  xi is stored in ambient coordinates; points
// that came from lattice homomorphisms also carry their integer coroot
// coordinates.
struct MomentPoint {
  RatVec xi;
  Rat energy;
  std::optional<IntVec> coroot;

  friend bool operator==(const MomentPoint& a, const MomentPoint& b) {
    return a.xi == b.xi && a.energy == b.energy;
  }
};

// Truncated vertex set of the Atiyah-Pressley polyhedron: all Phi(gamma_xi)
// = (xi, |xi|^2/2) with energy below the cutoff.  The full polyhedron is
// unbounded; every query carries the cutoff explicitly.
struct MomentPolytope {
  RootSystem root_system;
  Rat energy_cutoff;
  std::vector<MomentPoint> vertices;  // sorted by (energy, coroot coords)
};

// Phi(gamma_xi) = (xi, <xi,xi>/2), exact.
MomentPoint moment_of_homomorphism(const RootSystem& rs, const IntVec& xi);

// All lattice vectors xi with <xi,xi>/2 <= e_max (exhaustive, the quadratic
// form is positive definite), sorted deterministically.
std::vector<IntVec> lattice_ball(const RootSystem& rs, const Rat& e_max);

MomentPolytope polytope_vertices(const RootSystem& rs, const Rat& e_max);

// Exact membership in cvx(vertices): solves sum l_i v_i = p, sum l_i = 1,
// l_i >= 0 by exact rational pivoting (phase-1 simplex, Bland's rule).
// pre: point.energy <= cutoff, else the query is rejected (truncation says
// nothing about such points).
bool hull_contains(const MomentPolytope& poly, const MomentPoint& point);

// True iff the point is not a convex combination of the other vertices.
bool is_extreme(const MomentPolytope& poly, const MomentPoint& point);

// Exact feasibility core, exposed for reuse and direct testing: can the
// target be written as a convex combination of the given points?
bool convex_combination_exists(const std::vector<RatVec>& points,
                               const RatVec& target);

}  // namespace loopmoment::moment
