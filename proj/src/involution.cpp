#include "loopmoment/involution.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <set>

namespace loopmoment::lie {

namespace {

GaussMat ipq(int plus, int minus_first) {
  // diag(-1 x minus_first, +1 x (plus)) packed as a single matrix
  GaussMat m(plus + minus_first, plus + minus_first);
  for (int i = 0; i < minus_first; ++i) m.at(i, i) = GaussRat(-1);
  for (int i = minus_first; i < plus + minus_first; ++i)
    m.at(i, i) = GaussRat(1);
  return m;
}

}  // namespace

LieInvolution maximal_rank_involution(const std::string& family, int n) {
  LieInvolution inv;
  if (family == "su") {
    inv.realization = make_su(n);
    inv.theta = make_recipe(GaussMat::identity(n), true,
                            "entrywise conjugation");
    inv.adapted_torus = inv.realization.standard_torus;
  } else if (family == "so") {
    inv.realization = make_so(n);
    int half = n / 2;          // I_{n/2,n/2} or I_{(n+1)/2,n/2}
    int minus = n - half;      // first block gets the extra -1 when n is odd
    inv.theta = make_recipe(ipq(half, minus), true,
                            "conjugation by I_{p,q}");
    for (int j = 1; j <= half; ++j)
      inv.adapted_torus.push_back(GaussMat::unit(n, j, minus + j) -
                                  GaussMat::unit(n, minus + j, j));
  } else if (family == "sp") {
    inv.realization = make_sp(n);
    GaussMat j(2 * n, 2 * n);
    for (int k = 1; k <= n; ++k) {
      j.at(k - 1, n + k - 1) = GaussRat(1);
      j.at(n + k - 1, k - 1) = GaussRat(-1);
    }
    inv.theta = make_recipe(j, false, "conjugation by J_n");
    inv.adapted_torus = inv.realization.standard_torus;
  } else {
    fail("maximal_rank_involution: unknown family '" + family + "'");
  }
  inv.torus_signs.assign(inv.adapted_torus.size(), -1);
  inv.label = "maximal_rank " + inv.realization.label;
  return inv;
}

LieInvolution cp_involution(int n) {
  if (n < 2) fail("cp_involution: n must be >= 2");
  LieInvolution inv;
  inv.realization = make_su(n);
  inv.theta = make_recipe(ipq(n - 1, 1), false, "conjugation by I_{1,n-1}");
  // -1 block: E_12 - E_21.  +1 block: theta-fixed diagonal directions that
  // commute with it (first two diagonal entries equal).
  inv.adapted_torus.push_back(GaussMat::unit(n, 1, 2) -
                              GaussMat::unit(n, 2, 1));
  inv.torus_signs.push_back(-1);
  GaussRat i = gauss_i();
  if (n >= 3) {
    GaussMat d(n, n);
    d.at(0, 0) = i;
    d.at(1, 1) = i;
    d.at(2, 2) = i * GaussRat(-2);
    inv.adapted_torus.push_back(d);
    inv.torus_signs.push_back(1);
  }
  for (int j = 3; j <= n - 1; ++j) {
    inv.adapted_torus.push_back(
        (GaussMat::unit(n, j, j) - GaussMat::unit(n, j + 1, j + 1)).scaled(i));
    inv.torus_signs.push_back(1);
  }
  inv.label = "su_n_cp su(" + std::to_string(n) + ")";
  return inv;
}

std::vector<GaussMat> cp_coroot_torus_basis(int n) {
  if (n < 2) fail("cp_coroot_torus_basis: n must be >= 2");
  std::vector<GaussMat> basis;
  GaussRat i = gauss_i();
  GaussMat x1 = GaussMat::unit(n, 1, 2) - GaussMat::unit(n, 2, 1);
  basis.push_back(x1);
  if (n >= 3) {
    // i*diag(1/2, 1/2, -1, 0, ...) - x1/2: the second simple coroot in the
    // eigenbasis diagonalizing the adapted torus
    GaussMat h2(n, n);
    h2.at(0, 0) = i * GaussRat(Rat(1, 2));
    h2.at(1, 1) = i * GaussRat(Rat(1, 2));
    h2.at(2, 2) = -i;
    h2 = h2 - x1.scaled(GaussRat(Rat(1, 2)));
    basis.push_back(h2);
  }
  for (int j = 3; j <= n - 1; ++j)
    basis.push_back(
        (GaussMat::unit(n, j, j) - GaussMat::unit(n, j + 1, j + 1)).scaled(i));
  return basis;
}

InvolutionCheckReport check_lie_involution(const LieInvolution& inv) {
  InvolutionCheckReport rep;
  auto violate = [&](const std::string& what) {
    rep.ok = false;
    rep.violations.push_back(what);
  };
  const auto& basis = inv.realization.basis;
  std::vector<GaussMat> theta_basis;
  theta_basis.reserve(basis.size());
  for (const GaussMat& x : basis) theta_basis.push_back(apply_sigma(inv.theta, x));

  for (size_t a = 0; a < basis.size(); ++a) {
    if (!(apply_sigma(inv.theta, theta_basis[a]) == basis[a]))
      violate("theta^2 != id on basis element " + std::to_string(a));
    // theta must stay inside the algebra
    if (!coords_in_span(basis, theta_basis[a]))
      violate("theta leaves the algebra on basis element " +
              std::to_string(a));
  }
  for (size_t a = 0; a < basis.size(); ++a)
    for (size_t b = a + 1; b < basis.size(); ++b) {
      GaussMat lhs = apply_sigma(inv.theta, bracket(basis[a], basis[b]));
      GaussMat rhs = bracket(theta_basis[a], theta_basis[b]);
      if (!(lhs == rhs))
        violate("theta[X,Y] != [theta X, theta Y] at basis pair (" +
                std::to_string(a) + "," + std::to_string(b) + ")");
    }
  for (size_t t = 0; t < inv.adapted_torus.size(); ++t) {
    GaussMat expect = inv.adapted_torus[t].scaled(GaussRat(inv.torus_signs[t]));
    if (!(apply_sigma(inv.theta, inv.adapted_torus[t]) == expect))
      violate("theta != declared sign on adapted torus element " +
              std::to_string(t));
    for (size_t u = t + 1; u < inv.adapted_torus.size(); ++u)
      if (!bracket(inv.adapted_torus[t], inv.adapted_torus[u]).is_zero())
        violate("adapted torus elements " + std::to_string(t) + "," +
                std::to_string(u) + " do not commute");
  }
  return rep;
}

namespace {

void check_periodicity(const GaussMat& b, int column) {
  // exp(2 pi B) = id iff all eigenvalues lie in iZ; a numerical check is
  // enough for this precondition.
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(to_complex(b));
  for (int k = 0; k < es.eigenvalues().size(); ++k) {
    std::complex<double> ev = es.eigenvalues()(k);
    if (std::abs(ev.real()) > 1e-9 ||
        std::abs(ev.imag() - std::round(ev.imag())) > 1e-9)
      fail("torus basis column " + std::to_string(column) +
           " is not 2pi-periodic");
  }
}

}  // namespace

LatticeInvolution induced_lattice_involution(
    const LieInvolution& inv, const cartan::RootSystem& rs,
    const std::vector<GaussMat>& torus_basis) {
  int ell = static_cast<int>(torus_basis.size());
  if (ell != rs.rank)
    fail("torus basis size " + std::to_string(ell) +
         " does not match rank of " + rs.label());
  for (int j = 0; j < ell; ++j) check_periodicity(torus_basis[j], j);

  IntMat iota(ell, ell);
  for (int j = 0; j < ell; ++j) {
    GaussMat image = apply_sigma(inv.theta, torus_basis[j]);
    auto coords = coords_in_span(torus_basis, image);
    if (!coords)
      fail("theta does not preserve the span of the torus basis (column " +
           std::to_string(j) + ")");
    for (int i = 0; i < ell; ++i) {
      const GaussRat& c = (*coords)[i];
      if (c.im != 0 || denominator(c.re) != 1)
        fail("induced lattice map is not integral at column " +
             std::to_string(j) + ": coefficient " + gauss_to_string(c));
      iota.at(i, j) = numerator(c.re).convert_to<long long>();
    }
  }
  if (!(iota * iota == IntMat::identity(ell)))
    fail("induced lattice map is not an involution");

  // isometry of the Gram form of the provided basis
  RatMat gram(ell, ell);
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < ell; ++j)
      gram.at(i, j) = form(inv.realization, torus_basis[i], torus_basis[j]);
  RatMat gi = RatMat::from_int(iota);
  if (!(gi.transposed() * gram * gi == gram))
    fail("induced lattice map is not a Gram isometry");

  LatticeInvolution out;
  out.matrix = iota;
  IntMat shifted = iota;
  for (int i = 0; i < ell; ++i) shifted.at(i, i) += 1;
  out.minus_one_basis = integer_kernel_basis(shifted);
  out.provenance = "induced from " + inv.label;
  return out;
}

LatticeInvolution make_lattice_involution(const cartan::RootSystem& rs,
                                          IntMat iota,
                                          std::string provenance) {
  int ell = rs.rank;
  if (iota.rows != ell || iota.cols != ell)
    fail("lattice involution matrix has wrong size for " + rs.label());
  if (!(iota * iota == IntMat::identity(ell)))
    fail("lattice involution: matrix is not an involution");
  RatMat gi = RatMat::from_int(iota);
  if (!(gi.transposed() * rs.coroot_gram * gi == rs.coroot_gram))
    fail("lattice involution: not an isometry of the coroot Gram form");
  LatticeInvolution out;
  out.matrix = iota;
  IntMat shifted = iota;
  for (int i = 0; i < ell; ++i) shifted.at(i, i) += 1;
  out.minus_one_basis = integer_kernel_basis(shifted);
  out.provenance = std::move(provenance);
  return out;
}

LatticeInvolution lattice_involution_preset(const cartan::RootSystem& rs,
                                            const std::string& name) {
  int ell = rs.rank;
  if (name == "maximal_rank") {
    IntMat m(ell, ell);
    for (int i = 0; i < ell; ++i) m.at(i, i) = -1;
    return make_lattice_involution(rs, m, "maximal_rank");
  }
  if (name == "su_n_cp") {
    if (rs.type != cartan::LieType::A)
      fail("su_n_cp preset requires type A, got " + rs.label());
    // theta swaps the first two diagonal entries of the standard torus in
    // the eigenbasis adapted to E_12 - E_21, i.e. acts as the simple
    // reflection s_1 on the coroot lattice.
    IntMat m = IntMat::identity(ell);
    for (int j = 0; j < ell; ++j) m.at(0, j) -= rs.cartan[0][j];
    return make_lattice_involution(rs, m, "su_n_cp");
  }
  fail("unknown involution preset '" + name +
       "' (available: maximal_rank, su_n_cp)");
}

std::vector<IntVec> fixed_homomorphisms(const cartan::RootSystem& rs,
                                        const LatticeInvolution& iota,
                                        const Rat& e_max) {
  std::vector<IntVec> out;
  for (const IntVec& xi : moment::lattice_ball(rs, e_max)) {
    IntVec img = iota.matrix.apply(xi);
    bool anti = true;
    for (int i = 0; i < rs.rank; ++i)
      if (img[i] != -xi[i]) {
        anti = false;
        break;
      }
    if (anti) out.push_back(xi);
  }
  return out;  // lattice_ball is already sorted
}

namespace {

// Coordinates of the orthogonal projection onto span(minus_one_basis) in
// that basis, relative to the coroot Gram form.
RatVec project_to_a(const cartan::RootSystem& rs,
                    const std::vector<IntVec>& a_basis, const IntVec& xi) {
  int k = static_cast<int>(a_basis.size());
  if (k == 0) return {};
  RatMat gram_a(k, k);
  RatVec rhs(k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j)
      gram_a.at(i, j) = bilinear_int(rs.coroot_gram, a_basis[i], a_basis[j]);
    rhs[i] = bilinear_int(rs.coroot_gram, a_basis[i], xi);
  }
  auto c = rat_solve(gram_a, rhs);
  if (!c) fail("projection basis is degenerate");
  return *c;
}

}  // namespace

ConvexityReport verify_convexity(const cartan::RootSystem& rs,
                                 const LatticeInvolution& iota,
                                 const Rat& e_max) {
  ConvexityReport rep;
  rep.cutoff = e_max;
  moment::MomentPolytope poly = moment::polytope_vertices(rs, e_max);
  rep.all_vertices = poly.vertices;
  std::vector<IntVec> fixed = fixed_homomorphisms(rs, iota, e_max);
  std::set<IntVec> fixed_set(fixed.begin(), fixed.end());
  for (const IntVec& xi : fixed)
    rep.fixed_vertices.push_back(moment::moment_of_homomorphism(rs, xi));

  // both inclusions, exhaustively; fixed vertices are vertices by
  // construction, so the sets differ iff some vertex is unattained
  std::vector<const moment::MomentPoint*> unattained;
  for (const auto& v : rep.all_vertices)
    if (!fixed_set.count(*v.coroot)) unattained.push_back(&v);

  if (unattained.empty()) {
    rep.verdict = ConvexityReport::Verdict::equal;
  } else {
    rep.verdict = ConvexityReport::Verdict::strict;
    // all_vertices is sorted by (energy, lex), so the first unattained
    // vertex is the canonical witness
    rep.witness = *unattained.front()->coroot;
    rep.witness_extreme = moment::is_extreme(poly, *unattained.front());
  }

  // Phi_A lattice-level images: projections to the -1 eigenspace
  for (const auto& v : rep.all_vertices)
    rep.phi_a.all_points.push_back(
        {project_to_a(rs, iota.minus_one_basis, *v.coroot), v.energy});
  for (const auto& v : rep.fixed_vertices)
    rep.phi_a.fixed_points.push_back(
        {project_to_a(rs, iota.minus_one_basis, *v.coroot), v.energy});
  auto sort_dedup = [](std::vector<std::pair<RatVec, Rat>>& pts) {
    std::sort(pts.begin(), pts.end(),
              [](const auto& x, const auto& y) {
                if (x.second != y.second) return x.second < y.second;
                return x.first < y.first;
              });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  };
  sort_dedup(rep.phi_a.all_points);
  sort_dedup(rep.phi_a.fixed_points);
  auto subset = [](const std::vector<std::pair<RatVec, Rat>>& small,
                   const std::vector<std::pair<RatVec, Rat>>& big) {
    for (const auto& p : small)
      if (std::find(big.begin(), big.end(), p) == big.end()) return false;
    return true;
  };
  rep.phi_a.fixed_subset_of_all =
      subset(rep.phi_a.fixed_points, rep.phi_a.all_points);
  rep.phi_a.all_subset_of_fixed =
      subset(rep.phi_a.all_points, rep.phi_a.fixed_points);
  return rep;
}

}  // namespace loopmoment::lie
