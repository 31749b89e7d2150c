#include "doctest.h"

#include "loopmoment/involution.hpp"
#include "loopmoment/loops.hpp"
#include "loopmoment/moment.hpp"

using namespace loopmoment;
using namespace loopmoment::cartan;
using namespace loopmoment::loops;

namespace {

NumericRealization su2() { return numeric_realization(lie::make_su(2)); }
NumericRealization su3() { return numeric_realization(lie::make_su(3)); }

NumericSigma sigma_max(int n) {
  return numeric_sigma(lie::maximal_rank_involution("su", n).theta);
}

}  // namespace

TEST_CASE("homomorphism loop samples") {
  NumericRealization r = su2();
  DiscretizedLoop zero = sample_homomorphism_loop(r, {0}, 16);
  for (const auto& s : zero.samples)
    CHECK((s - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-14);

  DiscretizedLoop g = sample_homomorphism_loop(r, {1}, 64);
  for (int j = 0; j < 64; ++j) {
    double theta = 2 * M_PI * j / 64;
    Eigen::MatrixXcd expect(2, 2);
    expect << std::polar(1.0, theta), 0, 0, std::polar(1.0, -theta);
    CHECK((g.samples[j] - expect).norm() < 1e-12);
  }
  // closure: a full turn of the one-parameter subgroup returns to identity
  Eigen::MatrixXcd full = torus_element(r, Eigen::VectorXd::Constant(1, 2 * M_PI));
  CHECK((full - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-12);

  CHECK_THROWS(sample_homomorphism_loop(r, {1}, 24));  // not a power of two
  CHECK_THROWS(sample_homomorphism_loop(r, {1}, 2));
  CHECK_THROWS(sample_homomorphism_loop(r, {1, 0}, 16));
}

TEST_CASE("energy quadrature matches |xi|^2/2") {
  NumericRealization r = su2();
  CHECK(energy(sample_homomorphism_loop(r, {0}, 256), r.trace_scale) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK(std::abs(energy(sample_homomorphism_loop(r, {1}, 1024), r.trace_scale) -
                 1.0) < 1e-9);
  CHECK(std::abs(energy(sample_homomorphism_loop(r, {2}, 1024), r.trace_scale) -
                 4.0) < 1e-9);
  // centered differences are the documented fallback: O(dtheta^2) accurate
  double centered = energy(sample_homomorphism_loop(r, {1}, 1024),
                           r.trace_scale, DerivScheme::centered);
  CHECK(std::abs(centered - 1.0) < 1e-4);
  CHECK(std::abs(centered - 1.0) > 1e-9);
}

TEST_CASE("torus projection recovers the lattice vector") {
  NumericRealization r3 = su3();
  RootSystem a2 = build_root_system(LieType::A, 2);
  for (const IntVec& xi : moment::lattice_ball(a2, 4)) {
    DiscretizedLoop g = sample_homomorphism_loop(r3, xi, 512);
    Eigen::VectorXd p = torus_projection(g, r3);
    CHECK(std::abs(p(0) - xi[0]) < 1e-9);
    CHECK(std::abs(p(1) - xi[1]) < 1e-9);
    double e = energy(g, r3.trace_scale);
    CHECK(std::abs(e - rat_to_double(a2.lattice_norm2(xi)) / 2) < 1e-9);
  }
  // conjugation by a torus element fixes gamma_xi pointwise
  DiscretizedLoop g = sample_homomorphism_loop(r3, {1, -1}, 256);
  Eigen::VectorXd phi(2);
  phi << 0.3, -1.2;
  DiscretizedLoop conj = act_torus(torus_element(r3, phi), g);
  Eigen::VectorXd p = torus_projection(conj, r3);
  CHECK(std::abs(p(0) - 1) < 1e-9);
  CHECK(std::abs(p(1) + 1) < 1e-9);
}

TEST_CASE("energy positivity and action invariance") {
  NumericRealization r = su2();
  DiscretizedLoop g = random_smooth_loop(r, 17, 256);
  double e = energy(g, r.trace_scale);
  CHECK(e > 0);
  Eigen::VectorXd phi = Eigen::VectorXd::Constant(1, 0.77);
  CHECK(std::abs(energy(act_torus(torus_element(r, phi), g), r.trace_scale) -
                 e) < 1e-12);
  CHECK(std::abs(energy(act_rotation(37, g), r.trace_scale) - e) < 1e-12);
}

TEST_CASE("rotation and conjugation actions") {
  NumericRealization r = su2();
  DiscretizedLoop g = random_smooth_loop(r, 5, 128);
  DiscretizedLoop same = act_rotation(0, g);
  DiscretizedLoop full = act_rotation(128, g);
  for (int j = 0; j < 128; ++j) {
    CHECK((same.samples[j] - g.samples[j]).norm() < 1e-14);
    CHECK((full.samples[j] - g.samples[j]).norm() < 1e-14);
  }
  // based after rotation
  DiscretizedLoop rot = act_rotation(41, g);
  CHECK((rot.samples[0] - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-13);
  // the two actions commute sample-by-sample
  Eigen::MatrixXcd t = torus_element(r, Eigen::VectorXd::Constant(1, 1.1));
  DiscretizedLoop ab = act_torus(t, act_rotation(41, g));
  DiscretizedLoop ba = act_rotation(41, act_torus(t, g));
  for (int j = 0; j < 128; ++j)
    CHECK((ab.samples[j] - ba.samples[j]).norm() < 1e-12);
  // identity loop is fixed by conjugation
  DiscretizedLoop id = sample_homomorphism_loop(r, {0}, 16);
  DiscretizedLoop tid = act_torus(t, id);
  for (const auto& s : tid.samples)
    CHECK((s - Eigen::MatrixXcd::Identity(2, 2)).norm() < 1e-13);
}

TEST_CASE("tau on discretized loops") {
  NumericRealization r = su2();
  NumericSigma sig = sigma_max(2);
  // gamma_xi is tau-fixed for the maximal-rank recipe
  for (long long m = -2; m <= 2; ++m) {
    DiscretizedLoop g = sample_homomorphism_loop(r, {m}, 128);
    DiscretizedLoop t = apply_tau(sig, g);
    for (int j = 0; j < 128; ++j)
      CHECK((t.samples[j] - g.samples[j]).norm() < 1e-12);
    CHECK(tau_fixed_residual(sig, g) < 1e-12);
  }
  // involutive on random loops
  DiscretizedLoop g = random_smooth_loop(r, 23, 128);
  DiscretizedLoop tt = apply_tau(sig, apply_tau(sig, g));
  for (int j = 0; j < 128; ++j)
    CHECK((tt.samples[j] - g.samples[j]).norm() < 1e-12);
  CHECK((apply_tau(sig, g).samples[0] - Eigen::MatrixXcd::Identity(2, 2))
            .norm() < 1e-13);
  // generic random loops are far from tau-fixed
  CHECK(tau_fixed_residual(sig, g) > 1e-3);

  // sigma = Ad(diag(-1,1)) fixes the diagonal torus instead of inverting
  // it, so gamma_{alpha^vee} is no longer tau-fixed
  NumericSigma inner = numeric_sigma(lie::cp_involution(2).theta);
  DiscretizedLoop ga = sample_homomorphism_loop(r, {1}, 128);
  CHECK(tau_fixed_residual(inner, ga) > 1.0);
  // and what tau produces is the reversed loop
  DiscretizedLoop tga = apply_tau(inner, ga);
  for (int j = 0; j < 128; ++j)
    CHECK((tga.samples[j] - ga.samples[(128 - j) % 128]).norm() < 1e-12);
}

TEST_CASE("compatibility identity at machine precision") {
  NumericRealization r = su2();
  NumericSigma sig = sigma_max(2);
  DiscretizedLoop gxi = sample_homomorphism_loop(r, {1}, 64);
  Eigen::MatrixXcd t = torus_element(r, Eigen::VectorXd::Constant(1, 0.9));
  CHECK(compatibility_residual(sig, t, 5, gxi) < 1e-12);
  // t = e, shift = 0 reduces to a syntactic identity
  DiscretizedLoop g = random_smooth_loop(r, 71, 64);
  CHECK(compatibility_residual(sig, Eigen::MatrixXcd::Identity(2, 2), 0, g) ==
        0.0);
  for (int trial = 0; trial < 10; ++trial) {
    DiscretizedLoop h = random_smooth_loop(r, 100 + trial, 64);
    Eigen::MatrixXcd tt =
        torus_element(r, Eigen::VectorXd::Constant(1, 0.3 * trial - 1.0));
    CHECK(compatibility_residual(sig, tt, 3 * trial + 1, h) < 1e-12);
  }
}

TEST_CASE("quadrature error does not grow when the grid is refined") {
  NumericRealization r = su2();
  for (long long m = 1; m <= 2; ++m) {
    double exact = static_cast<double>(m * m);
    double prev = -1;
    for (int n : {256, 512, 1024}) {
      double err = std::abs(
          energy(sample_homomorphism_loop(r, {m}, n), r.trace_scale) - exact);
      if (prev >= 0) CHECK(err <= prev + 1e-12);
      prev = err;
    }
  }
}

TEST_CASE("generated loops satisfy the type invariants") {
  NumericRealization r2 = su2(), r3 = su3();
  for (const DiscretizedLoop& g :
       {sample_homomorphism_loop(r2, {2}, 128),
        sample_homomorphism_loop(r3, {1, -1}, 128),
        random_smooth_loop(r2, 31, 128), random_smooth_loop(r3, 32, 128),
        act_rotation(17, random_smooth_loop(r2, 33, 128))}) {
    CHECK(based_defect(g) < 1e-10);
    CHECK(unitarity_defect(g) < 1e-10);
  }
}

TEST_CASE("residual sweep is deterministic and tiny") {
  NumericRealization r = su2();
  NumericSigma sig = sigma_max(2);
  auto rows = residual_sweep(r, sig, 6, 64, 2024, 4, 4);
  auto rows2 = residual_sweep(r, sig, 6, 64, 2024, 4, 4);
  REQUIRE(rows.size() == 6);
  for (size_t i = 0; i < rows.size(); ++i) {
    CHECK(rows[i].residual_compat < 1e-12);
    CHECK(rows[i].residual_compat == rows2[i].residual_compat);
    CHECK(rows[i].energy == rows2[i].energy);
  }
  std::string csv = residual_rows_to_csv(rows);
  CHECK(csv.find("loop_id,N,energy,proj_1,residual_compat,residual_fixed") ==
        0);
}
