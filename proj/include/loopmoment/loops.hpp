#pragma once

#include "loopmoment/realization.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace loopmoment::loops {

// Double-precision view of an exact realization: the coroot matrices, their
// Gram matrix, and the trace scale of the invariant form.
struct NumericRealization {
  std::string group_tag;
  int dim = 0;
  double trace_scale = 1.0;
  std::vector<Eigen::MatrixXcd> coroot_basis;
  Eigen::MatrixXd coroot_gram;
};

NumericRealization numeric_realization(const lie::AlgebraRealization& r);

struct NumericSigma {
  Eigen::MatrixXcd m, m_inv;
  bool entrywise_conj = true;

  Eigen::MatrixXcd apply(const Eigen::MatrixXcd& g) const {
    return entrywise_conj ? (m * g.conjugate() * m_inv).eval()
                          : (m * g * m_inv).eval();
  }
};

NumericSigma numeric_sigma(const lie::SigmaRecipe& s);

// A based loop sampled at theta_j = 2 pi j / N; N a power of two (spectral
// differentiation), samples[0] = identity.
struct DiscretizedLoop {
  std::string group_tag;
  std::vector<Eigen::MatrixXcd> samples;

  int grid_size() const { return static_cast<int>(samples.size()); }
  int dim() const { return samples.empty() ? 0 : static_cast<int>(samples[0].rows()); }
};

enum class DerivScheme { spectral, centered };

// gamma_xi(theta) = exp(theta Xi); rejects xi whose realized matrix has
// non-integer spectrum (the loop would not close) and N not a power of two
// or < 4.
DiscretizedLoop sample_homomorphism_loop(const NumericRealization& r,
                                         const IntVec& xi, int n_samples);

// (1/4pi) integral of |gamma^{-1} gamma'|^2 by the trapezoidal rule on the
// periodic grid; gamma' spectral by default.
double energy(const DiscretizedLoop& g, double trace_scale,
              DerivScheme scheme = DerivScheme::spectral);

// (1/2pi) integral of pr_t(gamma^{-1} gamma'), in coroot coordinates.
Eigen::VectorXd torus_projection(const DiscretizedLoop& g,
                                 const NumericRealization& r,
                                 DerivScheme scheme = DerivScheme::spectral);

// exp(sum_i angles_i H_i), a point of the realized torus.
Eigen::MatrixXcd torus_element(const NumericRealization& r,
                               const Eigen::VectorXd& angles);

// Pointwise conjugation by a torus element: (t.gamma)(theta) = t g(theta) t^-1.
DiscretizedLoop act_torus(const Eigen::MatrixXcd& t, const DiscretizedLoop& g);

// Rotation by the grid angle 2 pi shift / N:
// (z.gamma)(theta) = gamma(theta + phi) gamma(phi)^{-1}; exact index
// arithmetic on the samples.
DiscretizedLoop act_rotation(int shift, const DiscretizedLoop& g);

// tau(gamma)(theta_j) = sigma(gamma(theta_{N-j mod N})).
DiscretizedLoop apply_tau(const NumericSigma& sigma, const DiscretizedLoop& g);

// max_j || tau((t, shift).gamma)_j - ((t^{-1}, -shift).tau(gamma))_j ||_F.
double compatibility_residual(const NumericSigma& sigma,
                              const Eigen::MatrixXcd& t, int shift,
                              const DiscretizedLoop& g);

// max_j || sigma(gamma(theta_j)) - gamma(theta_{N-j mod N}) ||_F; zero (to
// rounding) iff the loop is tau-fixed on the grid.
double tau_fixed_residual(const NumericSigma& sigma, const DiscretizedLoop& g);

// Seeded smooth random loop: exp(X(theta)) exp(X(0))^{-1} with X a
// trigonometric polynomial valued in the algebra's skew-Hermitian matrices.
DiscretizedLoop random_smooth_loop(const NumericRealization& r, uint64_t seed,
                                   int n_samples, int max_freq = 3);

// Type-invariant probes: distance of sample 0 from the identity and the
// worst ||g^H g - I|| over the grid.
double based_defect(const DiscretizedLoop& g);
double unitarity_defect(const DiscretizedLoop& g);

struct ResidualRow {
  int loop_id = 0;
  int n_samples = 0;
  double energy = 0;
  Eigen::VectorXd projection;
  double residual_compat = 0;
  double residual_fixed = 0;
};

// Deterministic seeded sweep over random smooth loops; the compatibility
// residual is maximized over a grid of rotations and torus elements drawn
// from the loop's own RNG stream.  Runs loops in parallel (see threads.hpp).
std::vector<ResidualRow> residual_sweep(const NumericRealization& r,
                                        const NumericSigma& sigma, int count,
                                        int n_samples, uint64_t seed,
                                        int rotations, int torus_elements);

std::string residual_rows_to_csv(const std::vector<ResidualRow>& rows);

}  // namespace loopmoment::loops
