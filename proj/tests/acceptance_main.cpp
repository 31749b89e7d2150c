// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures.  Tolerances and thresholds are pinned here, in code.

#include "loopmoment/betti.hpp"
#include "loopmoment/involution.hpp"
#include "loopmoment/laurent.hpp"
#include "loopmoment/loops.hpp"
#include "loopmoment/moment.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>

using namespace loopmoment;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& what) {
  std::printf("%s  criterion %2d: %s\n", pass ? "PASS" : "FAIL", criterion,
              what.c_str());
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// 1. cell counts against the closed product formula, n = 2..5, degree 20
void criterion_1() {
  auto t0 = Clock::now();
  bool ok = true;
  for (int n = 2; n <= 5; ++n) {
    auto rs = cartan::build_root_system(cartan::LieType::A, n - 1);
    auto cmp = betti::compare(betti::omega_g_series(rs, 20),
                              betti::su_closed_form(n, 20), 20);
    ok = ok && cmp.equal;
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 10.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "omega_g_series(A_{n-1},20) == su_closed_form(n,20), n=2..5 "
                "(%.2fs, limit 10s)",
                dt);
  report(1, ok, buf);
}

// 2. coefficient of degree 4 for A2 is exactly 2
void criterion_2() {
  auto rs = cartan::build_root_system(cartan::LieType::A, 2);
  long long b4 = betti::omega_g_series(rs, 4).at(4);
  report(2, b4 == 2,
         "dim H^4(Omega SU(3)) = " + std::to_string(b4) + ", expected 2");
}

// 3. halving fails without maximal rank: discrepancy at degree 2, 2 vs 0
void criterion_3() {
  auto rs = cartan::build_root_system(cartan::LieType::A, 2);
  auto cmp = betti::compare(betti::halve(betti::omega_g_series(rs, 40)),
                            betti::cp_loop_series(3, 20), 20);
  bool ok = !cmp.equal && cmp.first_discrepancy_degree == 2 &&
            cmp.a_value == 2 && cmp.b_value == 0;
  report(3, ok,
         "halve(omega A2) vs cp(3): first discrepancy at degree 2, 2 vs 0");
}

// 4. maximal-rank instance: halved A1 equals cp(2) to degree 20
void criterion_4() {
  auto rs = cartan::build_root_system(cartan::LieType::A, 1);
  auto cmp = betti::compare(betti::halve(betti::omega_g_series(rs, 40)),
                            betti::cp_loop_series(2, 20), 20);
  report(4, cmp.equal, "halve(omega A1) == cp(2) to degree 20");
}

// 5. lattice-vertex convexity check at maximal rank, E_max = 8
void criterion_5() {
  auto t0 = Clock::now();
  bool ok = true;
  for (auto [t, r] : std::vector<std::pair<cartan::LieType, int>>{
           {cartan::LieType::A, 1},
           {cartan::LieType::A, 2},
           {cartan::LieType::B, 2},
           {cartan::LieType::G, 2}}) {
    auto rs = cartan::build_root_system(t, r);
    auto rep = lie::verify_convexity(
        rs, lie::lattice_involution_preset(rs, "maximal_rank"), 8);
    ok = ok && rep.verdict == lie::ConvexityReport::Verdict::equal &&
         rep.all_vertices.size() == rep.fixed_vertices.size();
  }
  double dt = seconds_since(t0);
  ok = ok && dt < 30.0;
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "verify_convexity(iota=-id) equal for A1,A2,B2,G2 at emax=8 "
                "(%.2fs, limit 30s)",
                dt);
  report(5, ok, buf);
}

// 6. strict containment for the CP^2 configuration at E_max = 4
void criterion_6() {
  auto rs = cartan::build_root_system(cartan::LieType::A, 2);
  auto iota = lie::lattice_involution_preset(rs, "su_n_cp");
  auto rep = lie::verify_convexity(rs, iota, 4);
  bool ok = rep.verdict == lie::ConvexityReport::Verdict::strict &&
            rep.witness.has_value() && rep.witness_extreme;
  if (ok) {
    IntVec img = iota.matrix.apply(*rep.witness);
    bool anti = true;
    for (int i = 0; i < rs.rank; ++i)
      if (img[i] != -(*rep.witness)[i]) anti = false;
    ok = !anti;
  }
  report(6, ok,
         "verify_convexity(A2, su_n_cp, emax=4) strict with extreme witness, "
         "iota(xi0) != -xi0");
}

// 7. moment-map quadrature at N = 1024 over the emax = 8 lattice ball
void criterion_7() {
  bool ok = true;
  double worst = 0;
  for (int n : {2, 3}) {
    auto rs = cartan::build_root_system(cartan::LieType::A, n - 1);
    auto realization = loops::numeric_realization(lie::make_su(n));
    for (const IntVec& xi : moment::lattice_ball(rs, 8)) {
      auto g = loops::sample_homomorphism_loop(realization, xi, 1024);
      double e = loops::energy(g, realization.trace_scale);
      double target = rat_to_double(rs.lattice_norm2(xi)) / 2;
      Eigen::VectorXd p = loops::torus_projection(g, realization);
      double err = std::abs(e - target);
      for (int i = 0; i < rs.rank; ++i)
        err = std::max(err, std::abs(p(i) - xi[i]));
      worst = std::max(worst, err);
      ok = ok && err <= 1e-9;
    }
  }
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "SU(2)/SU(3) energy+projection of gamma_xi within 1e-9 at "
                "N=1024 (worst %.2e)",
                worst);
  report(7, ok, buf);
}

// 8. compatibility identity on 100 seeded random smooth SU(2) loops
void criterion_8() {
  auto realization = loops::numeric_realization(lie::make_su(2));
  auto sigma =
      loops::numeric_sigma(lie::maximal_rank_involution("su", 2).theta);
  auto rows = loops::residual_sweep(realization, sigma, 100, 256,
                                    20240601ULL, 8, 8);
  double worst = 0;
  for (const auto& row : rows) worst = std::max(worst, row.residual_compat);
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "compatibility residual <= 1e-12 on 100 loops x 8 rotations "
                "x 8 torus elements (worst %.2e)",
                worst);
  report(8, worst <= 1e-12, buf);
}

// 9. exact conjugation identity on all reduced words of length <= 4
void criterion_9() {
  bool ok = true;
  long long checks = 0;
  std::vector<GaussRat> grid{GaussRat(1), GaussRat(Rat(0), Rat(1)),
                             GaussRat(Rat(1, 2), Rat(-1)),
                             GaussRat(Rat(-2, 3), Rat(1, 5))};
  for (int rank : {1, 2}) {
    auto rs = cartan::build_root_system(cartan::LieType::A, rank);
    auto realization = lie::make_su(rank + 1);
    auto sigma = lie::maximal_rank_involution("su", rank + 1).theta;
    std::mt19937_64 rng(777 + rank);
    std::uniform_int_distribution<long long> num(-5, 5);
    std::uniform_int_distribution<long long> den(1, 3);
    for (const auto& word : affine::all_reduced_words(rs, 4)) {
      IntVec lambda =
          affine::apply_affine_word_lattice(rs, word, IntVec(rank, 0));
      for (const auto& x : grid) {
        std::vector<GaussRat> xs(word.size(), x);
        ok = ok && laurent::conjugation_cell_check(rs, realization, sigma,
                                                   word, xs, lambda);
        ++checks;
      }
      for (int t = 0; t < 50; ++t) {
        std::vector<GaussRat> xs;
        for (size_t k = 0; k < word.size(); ++k)
          xs.emplace_back(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
        ok = ok && laurent::conjugation_cell_check(rs, realization, sigma,
                                                   word, xs, lambda);
        ++checks;
      }
    }
  }
  report(9, ok,
         "conjugation_cell_check exact on all reduced words of length <= 4, "
         "affine A1+A2 (" +
             std::to_string(checks) + " checks)");
}

// 10. the involution table rows verify exactly
void criterion_10() {
  bool ok = true;
  for (int n = 2; n <= 4; ++n)
    ok = ok && lie::check_lie_involution(
                   lie::maximal_rank_involution("su", n)).ok;
  for (int m = 3; m <= 7; ++m)
    ok = ok && lie::check_lie_involution(
                   lie::maximal_rank_involution("so", m)).ok;
  for (int n = 1; n <= 3; ++n)
    ok = ok && lie::check_lie_involution(
                   lie::maximal_rank_involution("sp", n)).ok;
  report(10, ok,
         "theta^2 = id, bracket preservation, theta = -id on adapted torus: "
         "su(n<=4), so(m<=7), sp(n<=3)");
}

// 11. refining the grid never increases the quadrature error
void criterion_11() {
  auto realization = loops::numeric_realization(lie::make_su(2));
  bool ok = true;
  for (long long m = 1; m <= 2; ++m) {
    double exact = static_cast<double>(m * m);
    double prev = -1;
    for (int n : {256, 512, 1024}) {
      auto g = loops::sample_homomorphism_loop(realization, {m}, n);
      double err =
          std::abs(loops::energy(g, realization.trace_scale) - exact);
      if (prev >= 0 && err > prev + 1e-12) ok = false;
      prev = err;
    }
  }
  report(11, ok,
         "energy error monotone-or-equal (1e-12 slack) for N=256,512,1024");
}

}  // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures == 0)
    std::printf("all acceptance criteria passed\n");
  else
    std::printf("%d acceptance criteria FAILED\n", failures);
  return failures;
}
