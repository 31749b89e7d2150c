#pragma once

#include "loopmoment/affine.hpp"
#include "loopmoment/realization.hpp"

#include <map>
#include <string>
#include <vector>

namespace loopmoment::laurent {

// Exact algebraic loop gamma(z) = sum_{p=-k}^{k} z^p A_p with Gaussian-
// rational coefficient matrices.  Only nonzero coefficients are stored.
struct LaurentLoop {
  int dim = 0;
  std::string group_tag;
  std::map<int, GaussMat> coeffs;

  int degree() const {
    int k = 0;
    for (const auto& [p, a] : coeffs)
      k = std::max(k, p < 0 ? -p : p);
    return k;
  }
  GaussMat coeff(int p) const {
    auto it = coeffs.find(p);
    return it == coeffs.end() ? GaussMat(dim, dim) : it->second;
  }
  void set_coeff(int p, GaussMat a) {
    if (a.is_zero())
      coeffs.erase(p);
    else
      coeffs[p] = std::move(a);
  }

  friend bool operator==(const LaurentLoop& x, const LaurentLoop& y) {
    return x.dim == y.dim && x.coeffs == y.coeffs;
  }
};

LaurentLoop identity_loop(int dim, std::string group_tag);

// Pointwise product; coefficients by exact convolution.
LaurentLoop multiply(const LaurentLoop& a, const LaurentLoop& b);

// Root-subgroup element.  For j in 1..rank: the constant loop
// exp(x E_{alpha_j}); for j = 0: z |-> exp(z^{-1} x E_{-alpha_0}).
// The exponentials are finite sums (the root vectors are nilpotent).
LaurentLoop root_subgroup_element(const lie::AlgebraRealization& r, int j,
                                  const GaussRat& x);

// The homomorphism loop gamma_xi(z) = diag(z^{d_1},...,z^{d_n}) for a
// lattice vector xi; requires the realized torus to be diagonal with
// integer exponents.
LaurentLoop gamma_lambda(const lie::AlgebraRealization& r, const IntVec& xi);

// tau(gamma)(z) = sigma(gamma(conj z)): on |z| = 1 this sends A_p to
// M conj(A_p) M^{-1} at the same index p.  Only anti-holomorphic recipes
// (entrywise conjugation composed with a fixed conjugation) are accepted.
LaurentLoop tau_alg(const lie::SigmaRecipe& sigma, const LaurentLoop& g);

// Exact check of tau(u_{i1}(x_1)...u_{ik}(x_k) gamma_xi) =
// u_{i1}(conj x_1)...u_{ik}(conj x_k) gamma_xi, the loop-level form of
// "tau acts on Bruhat cells by complex conjugation".
// pre: word is a reduced word over {0..rank}, |xs| = |word|.
bool conjugation_cell_check(const cartan::RootSystem& rs,
                            const lie::AlgebraRealization& r,
                            const lie::SigmaRecipe& sigma,
                            const std::vector<int>& word,
                            const std::vector<GaussRat>& xs, const IntVec& xi);

// Numeric evaluation at a point of the unit circle, for cross-checks.
Eigen::MatrixXcd eval(const LaurentLoop& g, std::complex<double> z);

// Exact determinant as a Laurent polynomial in z (permutation expansion;
// loops here are at most 4x4).
std::map<int, GaussRat> laurent_det(const LaurentLoop& g);

}  // namespace loopmoment::laurent
