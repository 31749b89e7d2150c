#include "loopmoment/realization.hpp"

namespace loopmoment::lie {

SigmaRecipe make_recipe(GaussMat m, bool entrywise_conj, std::string label) {
  SigmaRecipe s;
  s.conjugator_inv = gauss_inverse(m);
  s.conjugator = std::move(m);
  s.entrywise_conj = entrywise_conj;
  s.label = std::move(label);
  return s;
}

GaussMat apply_sigma(const SigmaRecipe& s, const GaussMat& x) {
  const GaussMat& arg = s.entrywise_conj ? x.conj_entrywise() : x;
  return s.conjugator * arg * s.conjugator_inv;
}

GaussMat AlgebraRealization::realize_lattice(const IntVec& xi) const {
  if (coroot_basis.empty())
    fail("realization " + label + " has no coroot basis");
  if (xi.size() != coroot_basis.size())
    fail("lattice vector has wrong rank for " + label);
  GaussMat x(matrix_dim, matrix_dim);
  for (size_t i = 0; i < xi.size(); ++i)
    if (xi[i] != 0) x = x + coroot_basis[i].scaled(GaussRat(xi[i]));
  return x;
}

AlgebraRealization make_su(int n) {
  if (n < 2) fail("make_su: n must be >= 2");
  AlgebraRealization r;
  r.label = "su(" + std::to_string(n) + ")";
  r.family = "su";
  r.n = n;
  r.matrix_dim = n;
  r.trace_scale = 1;
  GaussRat i = gauss_i();
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      r.basis.push_back(GaussMat::unit(n, j, k) - GaussMat::unit(n, k, j));
      r.basis.push_back(
          (GaussMat::unit(n, j, k) + GaussMat::unit(n, k, j)).scaled(i));
    }
  for (int j = 1; j <= n - 1; ++j) {
    GaussMat h =
        (GaussMat::unit(n, j, j) - GaussMat::unit(n, j + 1, j + 1)).scaled(i);
    r.basis.push_back(h);
    r.standard_torus.push_back(h);
    r.coroot_basis.push_back(h);
    r.simple_root_vectors.push_back(GaussMat::unit(n, j, j + 1));
  }
  r.lowest_root_vector = GaussMat::unit(n, n, 1);
  return r;
}

AlgebraRealization make_so(int m) {
  if (m < 3) fail("make_so: m must be >= 3");
  AlgebraRealization r;
  r.label = "so(" + std::to_string(m) + ")";
  r.family = "so";
  r.n = m;
  r.matrix_dim = m;
  r.trace_scale = Rat(1, 2);
  for (int j = 1; j <= m; ++j)
    for (int k = j + 1; k <= m; ++k)
      r.basis.push_back(GaussMat::unit(m, j, k) - GaussMat::unit(m, k, j));
  for (int t = 1; 2 * t <= m; ++t)
    r.standard_torus.push_back(GaussMat::unit(m, 2 * t - 1, 2 * t) -
                               GaussMat::unit(m, 2 * t, 2 * t - 1));
  return r;
}

AlgebraRealization make_sp(int n) {
  if (n < 1) fail("make_sp: n must be >= 1");
  AlgebraRealization r;
  r.label = "sp(" + std::to_string(n) + ")";
  r.family = "sp";
  r.n = n;
  int d = 2 * n;
  r.matrix_dim = d;
  r.trace_scale = 1;
  GaussRat i = gauss_i();
  auto blockdiag = [&](const GaussMat& a, const GaussMat& b) {
    GaussMat x(d, d);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        x.at(p, q) = a.at(p, q);
        x.at(n + p, n + q) = b.at(p, q);
      }
    return x;
  };
  auto offdiag = [&](const GaussMat& b) {
    // [[0, B], [-conj(B), 0]] with B symmetric
    GaussMat x(d, d);
    for (int p = 0; p < n; ++p)
      for (int q = 0; q < n; ++q) {
        x.at(p, n + q) = b.at(p, q);
        x.at(n + p, q) = -b.at(p, q).conj();
      }
    return x;
  };
  // A-block: A skew-Hermitian, lower block conj(A)
  for (int j = 1; j <= n; ++j)
    for (int k = j + 1; k <= n; ++k) {
      GaussMat re = GaussMat::unit(n, j, k) - GaussMat::unit(n, k, j);
      GaussMat im =
          (GaussMat::unit(n, j, k) + GaussMat::unit(n, k, j)).scaled(i);
      r.basis.push_back(blockdiag(re, re.conj_entrywise()));
      r.basis.push_back(blockdiag(im, im.conj_entrywise()));
    }
  for (int j = 1; j <= n; ++j) {
    GaussMat h = GaussMat::unit(n, j, j).scaled(i);
    GaussMat torus = blockdiag(h, h.conj_entrywise());
    r.basis.push_back(torus);
    r.standard_torus.push_back(torus);
  }
  // B-block: B symmetric
  for (int j = 1; j <= n; ++j) {
    r.basis.push_back(offdiag(GaussMat::unit(n, j, j)));
    r.basis.push_back(offdiag(GaussMat::unit(n, j, j).scaled(i)));
    for (int k = j + 1; k <= n; ++k) {
      GaussMat sym = GaussMat::unit(n, j, k) + GaussMat::unit(n, k, j);
      r.basis.push_back(offdiag(sym));
      r.basis.push_back(offdiag(sym.scaled(i)));
    }
  }
  return r;
}

Rat form(const AlgebraRealization& r, const GaussMat& x, const GaussMat& y) {
  GaussRat t = (x * y).trace();
  if (t.im != 0) fail("form: trace is not real");
  return -r.trace_scale * t.re;
}

Eigen::MatrixXcd to_complex(const GaussMat& m) {
  Eigen::MatrixXcd out(m.rows, m.cols);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) out(i, j) = m.at(i, j).to_complex();
  return out;
}

}  // namespace loopmoment::lie
