#include "doctest.h"

#include "loopmoment/involution.hpp"

#include <set>

using namespace loopmoment;
using namespace loopmoment::cartan;
using namespace loopmoment::lie;

TEST_CASE("su(2) table row: theta inverts the torus") {
  LieInvolution inv = maximal_rank_involution("su", 2);
  GaussMat h = inv.realization.standard_torus[0];  // i(E11 - E22)
  CHECK(apply_sigma(inv.theta, h) == h.scaled(GaussRat(-1)));
  GaussMat zero(2, 2);
  CHECK(apply_sigma(inv.theta, zero) == zero);
  CHECK(check_lie_involution(inv).ok);
}

TEST_CASE("sp(1) bracket tables survive conjugation by J") {
  LieInvolution inv = maximal_rank_involution("sp", 1);
  CHECK(inv.realization.basis.size() == 3);
  auto rep = check_lie_involution(inv);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());
}

TEST_CASE("involution table rows verify exactly") {
  for (int n = 2; n <= 4; ++n)
    CHECK(check_lie_involution(maximal_rank_involution("su", n)).ok);
  for (int m = 3; m <= 7; ++m)
    CHECK(check_lie_involution(maximal_rank_involution("so", m)).ok);
  for (int n = 1; n <= 3; ++n)
    CHECK(check_lie_involution(maximal_rank_involution("sp", n)).ok);
}

TEST_CASE("a broken involution is reported with witnesses") {
  LieInvolution inv = maximal_rank_involution("su", 2);
  // declare a wrong sign on the adapted torus
  inv.torus_signs[0] = +1;
  auto rep = check_lie_involution(inv);
  CHECK(!rep.ok);
  CHECK(!rep.violations.empty());
}

TEST_CASE("algebra dimensions and trace normalization") {
  CHECK(make_su(3).basis.size() == 8);
  CHECK(make_so(5).basis.size() == 10);
  CHECK(make_sp(2).basis.size() == 10);
  // coroots have squared length 2 in every family realization
  AlgebraRealization su3 = make_su(3);
  CHECK(form(su3, su3.coroot_basis[0], su3.coroot_basis[0]) == Rat(2));
  CHECK(form(su3, su3.coroot_basis[0], su3.coroot_basis[1]) == Rat(-1));
  AlgebraRealization so5 = make_so(5);
  GaussMat lng = so5.standard_torus[0] - so5.standard_torus[1];
  CHECK(form(so5, lng, lng) == Rat(2));  // coroot of a long root e1 - e2
  AlgebraRealization sp2 = make_sp(2);
  CHECK(form(sp2, sp2.standard_torus[0], sp2.standard_torus[0]) == Rat(2));
}

TEST_CASE("realized su brackets close in the algebra") {
  AlgebraRealization r = make_su(3);
  for (size_t a = 0; a < r.basis.size(); ++a)
    for (size_t b = a + 1; b < r.basis.size(); ++b)
      CHECK(coords_in_span(r.basis, bracket(r.basis[a], r.basis[b]))
                .has_value());
}

TEST_CASE("induced lattice involution: su(2) with sigma = Ad(diag(-1,1))") {
  RootSystem a1 = build_root_system(LieType::A, 1);
  LieInvolution inv = cp_involution(2);
  auto iota = induced_lattice_involution(inv, a1, cp_coroot_torus_basis(2));
  CHECK(iota.matrix.at(0, 0) == -1);
  REQUIRE(iota.minus_one_basis.size() == 1);
}

TEST_CASE("induced lattice involution: the CP^2 configuration") {
  RootSystem a2 = build_root_system(LieType::A, 2);
  LieInvolution inv = cp_involution(3);
  CHECK(check_lie_involution(inv).ok);

  // relative to the adapted eigenbasis {E12-E21, i diag(1,1,-2)} theta is
  // diag(-1, +1)
  auto in_adapted = induced_lattice_involution(inv, a2, inv.adapted_torus);
  CHECK(in_adapted.matrix.at(0, 0) == -1);
  CHECK(in_adapted.matrix.at(1, 1) == 1);
  CHECK(in_adapted.matrix.at(0, 1) == 0);
  CHECK(in_adapted.matrix.at(1, 0) == 0);

  // relative to the realized coroot basis it is the simple reflection s_1
  auto in_coroot =
      induced_lattice_involution(inv, a2, cp_coroot_torus_basis(3));
  LatticeInvolution preset = lattice_involution_preset(a2, "su_n_cp");
  CHECK(in_coroot.matrix == preset.matrix);
  // the -1 sublattice is Z alpha_1^vee (the direction E12 - E21)
  REQUIRE(preset.minus_one_basis.size() == 1);
  IntVec gen = preset.minus_one_basis[0];
  CHECK((gen == IntVec{1, 0} || gen == IntVec{-1, 0}));
}

TEST_CASE("coroot basis of the adapted torus realizes the A2 Gram matrix") {
  AlgebraRealization su3 = make_su(3);
  RootSystem a2 = build_root_system(LieType::A, 2);
  auto basis = cp_coroot_torus_basis(3);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      CHECK(form(su3, basis[i], basis[j]) == a2.coroot_gram.at(i, j));
}

TEST_CASE("induced involution rejects a non-preserved span") {
  RootSystem a1 = build_root_system(LieType::A, 1);
  LieInvolution inv = cp_involution(3);  // su(3) involution
  // a torus direction not preserved by theta: i(E11 - E22) maps to itself,
  // but E13 - E31 maps to -(E13 - E31) + nothing in the span of E23 - E32
  std::vector<GaussMat> bad{GaussMat::unit(3, 2, 3) - GaussMat::unit(3, 3, 2) +
                            GaussMat::unit(3, 1, 2) - GaussMat::unit(3, 2, 1)};
  CHECK_THROWS(induced_lattice_involution(inv, a1, bad));
}

TEST_CASE("lattice involution invariants") {
  for (auto [t, r] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 2}, {LieType::B, 2}, {LieType::G, 2}}) {
    RootSystem rs = build_root_system(t, r);
    LatticeInvolution m = lattice_involution_preset(rs, "maximal_rank");
    CHECK(m.matrix * m.matrix == IntMat::identity(rs.rank));
    CHECK(static_cast<int>(m.minus_one_basis.size()) == rs.rank);
  }
  RootSystem a2 = build_root_system(LieType::A, 2);
  LatticeInvolution cp = lattice_involution_preset(a2, "su_n_cp");
  CHECK(cp.matrix * cp.matrix == IntMat::identity(2));
  CHECK_THROWS(lattice_involution_preset(a2, "unknown"));
  CHECK_THROWS(lattice_involution_preset(
      build_root_system(LieType::B, 2), "su_n_cp"));
  // a matrix that is involutive but not an isometry is rejected
  IntMat bad = IntMat::identity(2);
  bad.at(0, 0) = -1;  // diag(-1, 1) in coroot coordinates
  CHECK_THROWS(make_lattice_involution(a2, bad, "bad"));
}

TEST_CASE("fixed homomorphisms") {
  RootSystem a2 = build_root_system(LieType::A, 2);
  LatticeInvolution all = lattice_involution_preset(a2, "maximal_rank");
  auto ball = moment::lattice_ball(a2, 4);
  CHECK(fixed_homomorphisms(a2, all, 4) == ball);

  LatticeInvolution cp = lattice_involution_preset(a2, "su_n_cp");
  auto fixed = fixed_homomorphisms(a2, cp, 4);
  // I cap a = Z alpha_1^vee with energy m^2 <= 4: m in {-2..2}
  std::vector<IntVec> expect{{-2, 0}, {-1, 0}, {0, 0}, {1, 0}, {2, 0}};
  CHECK(fixed == expect);
  // closed under xi -> -xi, and 0 is always present
  for (const IntVec& xi : fixed) {
    IntVec neg{-xi[0], -xi[1]};
    CHECK(std::find(fixed.begin(), fixed.end(), neg) != fixed.end());
  }
}

TEST_CASE("convexity verdicts") {
  // maximal rank: every vertex is attained, any type
  for (auto [t, r] : std::vector<std::pair<LieType, int>>{
           {LieType::A, 1}, {LieType::A, 2}, {LieType::B, 2},
           {LieType::G, 2}}) {
    RootSystem rs = build_root_system(t, r);
    auto rep = verify_convexity(rs, lattice_involution_preset(rs, "maximal_rank"), 8);
    CHECK(rep.verdict == ConvexityReport::Verdict::equal);
    CHECK(!rep.witness.has_value());
    CHECK(rep.all_vertices.size() == rep.fixed_vertices.size());
    CHECK(rep.phi_a.fixed_subset_of_all);
    CHECK(rep.phi_a.all_subset_of_fixed);
  }

  // the CP^2 counterexample configuration: strict at cutoff 4
  RootSystem a2 = build_root_system(LieType::A, 2);
  LatticeInvolution cp = lattice_involution_preset(a2, "su_n_cp");
  auto rep = verify_convexity(a2, cp, 4);
  CHECK(rep.verdict == ConvexityReport::Verdict::strict);
  REQUIRE(rep.witness.has_value());
  CHECK(rep.witness_extreme);
  // the witness is not anti-fixed
  IntVec img = cp.matrix.apply(*rep.witness);
  bool anti = img[0] == -(*rep.witness)[0] && img[1] == -(*rep.witness)[1];
  CHECK(!anti);
  // smallest-energy witness has energy 1 here
  RootSystem& rs = a2;
  CHECK(rs.lattice_norm2(*rep.witness) == Rat(2));

  // trivial cutoff
  auto rep0 = verify_convexity(a2, cp, 0);
  CHECK(rep0.verdict == ConvexityReport::Verdict::equal);
  CHECK(rep0.all_vertices.size() == 1);
}
