#pragma once

#include "loopmoment/linalg.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace loopmoment::lie {

// A matrix recipe for a group/algebra involution.  entrywise_conj selects
// between the anti-holomorphic form sigma(g) = M conj(g) M^{-1} and the
// inner form sigma(g) = M g M^{-1}.
struct SigmaRecipe {
  GaussMat conjugator;
  GaussMat conjugator_inv;
  bool entrywise_conj = true;
  std::string label;
};

SigmaRecipe make_recipe(GaussMat m, bool entrywise_conj, std::string label);

GaussMat apply_sigma(const SigmaRecipe& s, const GaussMat& x);

// Exact matrix model of a compact classical Lie algebra.  trace_scale fixes
// the invariant inner product <X,Y> = -trace_scale * tr(XY) so that long
// roots have squared length 2, matching the abstract normalization.
struct AlgebraRealization {
  std::string label;   // "su(3)", "so(5)", "sp(2)"
  std::string family;  // "su", "so", "sp"
  int n = 0;           // family parameter
  int matrix_dim = 0;
  Rat trace_scale;
  std::vector<GaussMat> basis;           // R-basis of the algebra
  std::vector<GaussMat> standard_torus;  // a maximal torus basis

  // su only; empty elsewhere.  coroot_basis[i] realizes alpha_{i+1}^vee,
  // the root vectors feed the loop-group root subgroups U_s.
  std::vector<GaussMat> coroot_basis;
  std::vector<GaussMat> simple_root_vectors;  // E_{alpha_j}, j = 1..n-1
  GaussMat lowest_root_vector;                // E_{-alpha_0}

  GaussMat realize_lattice(const IntVec& xi) const;  // sum xi_i coroot_i
};

AlgebraRealization make_su(int n);  // n >= 2
AlgebraRealization make_so(int m);  // m >= 3
AlgebraRealization make_sp(int n);  // n >= 1, realized as 2n x 2n matrices

// <X, Y> = -trace_scale tr(XY); fails if the trace is not real.
Rat form(const AlgebraRealization& r, const GaussMat& x, const GaussMat& y);

Eigen::MatrixXcd to_complex(const GaussMat& m);

}  // namespace loopmoment::lie
