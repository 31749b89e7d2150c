#include "loopmoment/loops.hpp"

#include "loopmoment/threads.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <random>
#include <sstream>

namespace loopmoment::loops {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

// exp(X) for skew-Hermitian X, through the Hermitian eigenproblem of iX.
Eigen::MatrixXcd exp_skew(const Eigen::MatrixXcd& x) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      std::complex<double>(0, 1) * x);
  Eigen::VectorXcd phase(es.eigenvalues().size());
  for (int k = 0; k < phase.size(); ++k)
    phase(k) = std::exp(std::complex<double>(0, -es.eigenvalues()(k)));
  return es.eigenvectors() * phase.asDiagonal() *
         es.eigenvectors().adjoint();
}

// Derivative samples of a periodic matrix-valued grid function.
std::vector<Eigen::MatrixXcd> derivative(const DiscretizedLoop& g,
                                         DerivScheme scheme) {
  int n = g.grid_size(), d = g.dim();
  double dtheta = kTwoPi / n;
  std::vector<Eigen::MatrixXcd> out(n, Eigen::MatrixXcd::Zero(d, d));
  if (scheme == DerivScheme::centered) {
    for (int j = 0; j < n; ++j)
      out[j] = (g.samples[(j + 1) % n] - g.samples[(j + n - 1) % n]) /
               (2 * dtheta);
    return out;
  }
  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> in(n), freq(n), back(n);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) {
      for (int j = 0; j < n; ++j) in[j] = g.samples[j](a, b);
      fft.fwd(freq, in);
      for (int k = 0; k < n; ++k) {
        double kk = (k < n / 2) ? k : (k == n / 2 ? 0 : k - n);
        freq[k] *= std::complex<double>(0, kk);
      }
      fft.inv(back, freq);
      for (int j = 0; j < n; ++j) out[j](a, b) = back[j];
    }
  return out;
}

std::complex<double> trace_prod(const Eigen::MatrixXcd& a,
                                const Eigen::MatrixXcd& b) {
  return (a * b).trace();
}

}  // namespace

NumericRealization numeric_realization(const lie::AlgebraRealization& r) {
  if (r.coroot_basis.empty())
    fail("numeric_realization: " + r.label + " has no coroot basis");
  NumericRealization out;
  out.group_tag = r.label;
  out.dim = r.matrix_dim;
  out.trace_scale = rat_to_double(r.trace_scale);
  for (const GaussMat& h : r.coroot_basis)
    out.coroot_basis.push_back(lie::to_complex(h));
  int ell = static_cast<int>(r.coroot_basis.size());
  out.coroot_gram.resize(ell, ell);
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j)
      out.coroot_gram(i, j) =
          rat_to_double(form(r, r.coroot_basis[i], r.coroot_basis[j]));
  return out;
}

NumericSigma numeric_sigma(const lie::SigmaRecipe& s) {
  NumericSigma out;
  out.m = lie::to_complex(s.conjugator);
  out.m_inv = lie::to_complex(s.conjugator_inv);
  out.entrywise_conj = s.entrywise_conj;
  return out;
}

DiscretizedLoop sample_homomorphism_loop(const NumericRealization& r,
                                         const IntVec& xi, int n_samples) {
  if (n_samples < 4 || !power_of_two(n_samples))
    fail("sample count must be a power of two, >= 4");
  if (static_cast<int>(xi.size()) != static_cast<int>(r.coroot_basis.size()))
    fail("lattice vector has wrong rank for " + r.group_tag);
  Eigen::MatrixXcd big = Eigen::MatrixXcd::Zero(r.dim, r.dim);
  for (size_t i = 0; i < xi.size(); ++i)
    big += static_cast<double>(xi[i]) * r.coroot_basis[i];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(
      std::complex<double>(0, 1) * big);
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    double ev = es.eigenvalues()(k);
    if (std::abs(ev - std::round(ev)) > 1e-9)
      fail("lattice vector is not integral for the realization: the loop "
           "would not close");
  }
  DiscretizedLoop g;
  g.group_tag = r.group_tag;
  g.samples.resize(n_samples);
  for (int j = 0; j < n_samples; ++j) {
    double theta = kTwoPi * j / n_samples;
    Eigen::VectorXcd phase(es.eigenvalues().size());
    for (int k = 0; k < phase.size(); ++k)
      phase(k) = std::exp(std::complex<double>(0, -theta * es.eigenvalues()(k)));
    g.samples[j] = es.eigenvectors() * phase.asDiagonal() *
                   es.eigenvectors().adjoint();
  }
  return g;
}

double energy(const DiscretizedLoop& g, double trace_scale,
              DerivScheme scheme) {
  int n = g.grid_size();
  auto dg = derivative(g, scheme);
  double sum = 0;
  for (int j = 0; j < n; ++j) {
    Eigen::MatrixXcd x = g.samples[j].adjoint() * dg[j];
    sum += trace_scale * x.squaredNorm();
  }
  return sum / (2.0 * n);
}

Eigen::VectorXd torus_projection(const DiscretizedLoop& g,
                                 const NumericRealization& r,
                                 DerivScheme scheme) {
  int n = g.grid_size();
  auto dg = derivative(g, scheme);
  Eigen::MatrixXcd mean = Eigen::MatrixXcd::Zero(g.dim(), g.dim());
  for (int j = 0; j < n; ++j) mean += g.samples[j].adjoint() * dg[j];
  mean /= n;
  int ell = static_cast<int>(r.coroot_basis.size());
  Eigen::VectorXd b(ell);
  for (int i = 0; i < ell; ++i)
    b(i) = -r.trace_scale * trace_prod(r.coroot_basis[i], mean).real();
  return r.coroot_gram.ldlt().solve(b);
}

Eigen::MatrixXcd torus_element(const NumericRealization& r,
                               const Eigen::VectorXd& angles) {
  if (angles.size() != static_cast<Eigen::Index>(r.coroot_basis.size()))
    fail("torus_element: wrong number of angles");
  Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(r.dim, r.dim);
  for (int i = 0; i < angles.size(); ++i) x += angles(i) * r.coroot_basis[i];
  return exp_skew(x);
}

DiscretizedLoop act_torus(const Eigen::MatrixXcd& t, const DiscretizedLoop& g) {
  DiscretizedLoop out;
  out.group_tag = g.group_tag;
  out.samples.reserve(g.samples.size());
  Eigen::MatrixXcd tinv = t.adjoint();
  for (const auto& s : g.samples) out.samples.push_back(t * s * tinv);
  return out;
}

DiscretizedLoop act_rotation(int shift, const DiscretizedLoop& g) {
  int n = g.grid_size();
  int m = ((shift % n) + n) % n;
  DiscretizedLoop out;
  out.group_tag = g.group_tag;
  out.samples.resize(n);
  Eigen::MatrixXcd base_inv = g.samples[m].adjoint();
  for (int j = 0; j < n; ++j)
    out.samples[j] = g.samples[(j + m) % n] * base_inv;
  return out;
}

DiscretizedLoop apply_tau(const NumericSigma& sigma, const DiscretizedLoop& g) {
  int n = g.grid_size();
  DiscretizedLoop out;
  out.group_tag = g.group_tag;
  out.samples.resize(n);
  for (int j = 0; j < n; ++j)
    out.samples[j] = sigma.apply(g.samples[(n - j) % n]);
  return out;
}

double compatibility_residual(const NumericSigma& sigma,
                              const Eigen::MatrixXcd& t, int shift,
                              const DiscretizedLoop& g) {
  DiscretizedLoop lhs = apply_tau(sigma, act_rotation(shift, act_torus(t, g)));
  DiscretizedLoop rhs =
      act_rotation(-shift, act_torus(t.adjoint(), apply_tau(sigma, g)));
  double res = 0;
  for (int j = 0; j < g.grid_size(); ++j)
    res = std::max(res, (lhs.samples[j] - rhs.samples[j]).norm());
  return res;
}

double tau_fixed_residual(const NumericSigma& sigma,
                          const DiscretizedLoop& g) {
  int n = g.grid_size();
  double res = 0;
  for (int j = 0; j < n; ++j)
    res = std::max(
        res, (sigma.apply(g.samples[j]) - g.samples[(n - j) % n]).norm());
  return res;
}

DiscretizedLoop random_smooth_loop(const NumericRealization& r, uint64_t seed,
                                   int n_samples, int max_freq) {
  if (n_samples < 4 || !power_of_two(n_samples))
    fail("sample count must be a power of two, >= 4");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coeff(-0.7, 0.7);
  int d = r.dim;
  auto random_skew = [&]() {
    Eigen::MatrixXcd m(d, d);
    for (int a = 0; a < d; ++a)
      for (int b = 0; b < d; ++b)
        m(a, b) = std::complex<double>(coeff(rng), coeff(rng));
    return ((m - m.adjoint()) / 2).eval();
  };
  std::vector<Eigen::MatrixXcd> cos_part, sin_part;
  for (int k = 1; k <= max_freq; ++k) {
    cos_part.push_back(random_skew());
    sin_part.push_back(random_skew());
  }
  auto field = [&](double theta) {
    Eigen::MatrixXcd x = Eigen::MatrixXcd::Zero(d, d);
    for (int k = 1; k <= max_freq; ++k)
      x += std::cos(k * theta) * cos_part[k - 1] +
           std::sin(k * theta) * sin_part[k - 1];
    return x;
  };
  Eigen::MatrixXcd base_inv = exp_skew(field(0)).adjoint();
  DiscretizedLoop g;
  g.group_tag = r.group_tag;
  g.samples.resize(n_samples);
  for (int j = 0; j < n_samples; ++j)
    g.samples[j] = exp_skew(field(kTwoPi * j / n_samples)) * base_inv;
  return g;
}

double based_defect(const DiscretizedLoop& g) {
  return (g.samples.at(0) - Eigen::MatrixXcd::Identity(g.dim(), g.dim()))
      .norm();
}

double unitarity_defect(const DiscretizedLoop& g) {
  double worst = 0;
  Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(g.dim(), g.dim());
  for (const auto& s : g.samples)
    worst = std::max(worst, (s.adjoint() * s - id).norm());
  return worst;
}

std::vector<ResidualRow> residual_sweep(const NumericRealization& r,
                                        const NumericSigma& sigma, int count,
                                        int n_samples, uint64_t seed,
                                        int rotations, int torus_elements) {
  std::vector<ResidualRow> rows(count);
  parallel_for(count, [&](int id) {
    DiscretizedLoop g = random_smooth_loop(r, seed + id, n_samples);
    ResidualRow row;
    row.loop_id = id;
    row.n_samples = n_samples;
    row.energy = energy(g, r.trace_scale);
    row.projection = torus_projection(g, r);
    // rotation/torus grid from the loop's own stream, so the sweep is
    // deterministic under any parallel schedule
    std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL + id));
    std::uniform_int_distribution<int> pick_shift(0, n_samples - 1);
    std::uniform_real_distribution<double> angle(-3.0, 3.0);
    int ell = static_cast<int>(r.coroot_basis.size());
    double worst = 0;
    for (int a = 0; a < rotations; ++a) {
      int shift = pick_shift(rng);
      for (int b = 0; b < torus_elements; ++b) {
        Eigen::VectorXd phi(ell);
        for (int i = 0; i < ell; ++i) phi(i) = angle(rng);
        worst = std::max(
            worst,
            compatibility_residual(sigma, torus_element(r, phi), shift, g));
      }
    }
    row.residual_compat = worst;
    row.residual_fixed = tau_fixed_residual(sigma, g);
    rows[id] = std::move(row);
  });
  return rows;
}

std::string residual_rows_to_csv(const std::vector<ResidualRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  int ell = rows.empty() ? 0 : static_cast<int>(rows[0].projection.size());
  out << "loop_id,N,energy";
  for (int i = 1; i <= ell; ++i) out << ",proj_" << i;
  out << ",residual_compat,residual_fixed\n";
  for (const auto& row : rows) {
    out << row.loop_id << "," << row.n_samples << "," << row.energy;
    for (int i = 0; i < ell; ++i) out << "," << row.projection(i);
    out << "," << row.residual_compat << "," << row.residual_fixed << "\n";
  }
  return out.str();
}

}  // namespace loopmoment::loops
