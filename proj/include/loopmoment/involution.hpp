#pragma once

#include "loopmoment/moment.hpp"
#include "loopmoment/realization.hpp"

#include <optional>
#include <string>
#include <vector>

namespace loopmoment::lie {

// An involutive automorphism theta = d sigma_e of a realized algebra,
// together with a Cartan subalgebra on which theta splits into +-1 blocks.
struct LieInvolution {
  AlgebraRealization realization;
  SigmaRecipe theta;
  std::vector<GaussMat> adapted_torus;  // theta-eigenvector basis
  std::vector<int> torus_signs;         // declared eigenvalues, +-1
  std::string label;
};

// The maximal-rank rows: entrywise conjugation on su(n); conjugation by
// I_{p,q} on so(m); conjugation by J_n on sp(n).  theta = -id on the
// adapted torus in every case.
LieInvolution maximal_rank_involution(const std::string& family, int n);

// su(n) with sigma = conjugation by I_{1,n-1}; fixed set S(U(1) x U(n-1)),
// the CP^{n-1} configuration.  The adapted torus has a one-dimensional
// -1 block spanned by E_12 - E_21.
LieInvolution cp_involution(int n);

// Integral basis realizing the simple coroots of the algebra relative to
// the CP-adapted torus; used to derive the induced lattice involution.
std::vector<GaussMat> cp_coroot_torus_basis(int n);

struct InvolutionCheckReport {
  bool ok = true;
  std::vector<std::string> violations;
};

// Exact verification: theta^2 = id on the basis, bracket preservation on
// all basis pairs, declared signs on the adapted torus (in particular
// theta = -id on the -1 block).
InvolutionCheckReport check_lie_involution(const LieInvolution& inv);

// Integer involution of the lattice, in coroot coordinates of a root
// system.  minus_one_basis spans a = {x : iota(x) = -x} integrally.
struct LatticeInvolution {
  IntMat matrix;
  std::vector<IntVec> minus_one_basis;
  std::string provenance;
};

// theta restricted to the span of torus_basis, as an integer matrix in
// that basis.  Rejects when theta does not preserve the span, when the
// matrix is not integral (naming the offending column), or when it is not
// an involutive isometry of the basis Gram form.
LatticeInvolution induced_lattice_involution(
    const LieInvolution& inv, const cartan::RootSystem& rs,
    const std::vector<GaussMat>& torus_basis);

// Validates and wraps a raw matrix as a lattice involution for rs
// (involutive, Gram isometry in coroot coordinates).
LatticeInvolution make_lattice_involution(const cartan::RootSystem& rs,
                                          IntMat iota,
                                          std::string provenance);

// Presets: "maximal_rank" (iota = -id, any type) and "su_n_cp" (type A;
// the CP^{n-1} adapted-torus involution, which in coroot coordinates is
// the simple reflection s_1).
LatticeInvolution lattice_involution_preset(const cartan::RootSystem& rs,
                                            const std::string& name);

// Sorted lattice vectors xi with iota(xi) = -xi and |xi|^2/2 <= e_max.
std::vector<IntVec> fixed_homomorphisms(const cartan::RootSystem& rs,
                                        const LatticeInvolution& iota,
                                        const Rat& e_max);

// Lattice-level image data for the Phi_A moment map (projection to the
// -1 eigenspace): reported for both the full vertex set and the tau-fixed
// one, with containment verdicts only.
struct PhiAImage {
  std::vector<std::pair<RatVec, Rat>> all_points;    // (pr_a xi, E), sorted
  std::vector<std::pair<RatVec, Rat>> fixed_points;
  bool fixed_subset_of_all = false;
  bool all_subset_of_fixed = false;
};

struct ConvexityReport {
  enum class Verdict { equal, strict };
  Verdict verdict = Verdict::equal;
  Rat cutoff;
  std::vector<moment::MomentPoint> all_vertices;
  std::vector<moment::MomentPoint> fixed_vertices;
  std::optional<IntVec> witness;  // smallest-energy unattained vertex
  bool witness_extreme = false;
  PhiAImage phi_a;
};

// Compares {Phi(gamma_xi) : iota(xi) = -xi} with the full truncated vertex
// set.  "equal" means the sets coincide below the cutoff; otherwise the
// verdict is "strict" and the smallest-energy witness is reported, checked
// extreme.  The reduction of polytope equality to vertex fixedness uses the
// convexity of the fixed image, which this report assumes, not proves.
ConvexityReport verify_convexity(const cartan::RootSystem& rs,
                                 const LatticeInvolution& iota,
                                 const Rat& e_max);

}  // namespace loopmoment::lie
