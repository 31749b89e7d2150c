#include "loopmoment/laurent.hpp"

#include <algorithm>
#include <numeric>

namespace loopmoment::laurent {

LaurentLoop identity_loop(int dim, std::string group_tag) {
  LaurentLoop g;
  g.dim = dim;
  g.group_tag = std::move(group_tag);
  g.set_coeff(0, GaussMat::identity(dim));
  return g;
}

LaurentLoop multiply(const LaurentLoop& a, const LaurentLoop& b) {
  if (a.dim != b.dim) fail("laurent multiply: size mismatch");
  if (a.group_tag != b.group_tag)
    fail("laurent multiply: group tag mismatch (" + a.group_tag + " vs " +
         b.group_tag + ")");
  LaurentLoop c;
  c.dim = a.dim;
  c.group_tag = a.group_tag;
  for (const auto& [p, ap] : a.coeffs)
    for (const auto& [q, bq] : b.coeffs) {
      GaussMat prod = ap * bq;
      auto it = c.coeffs.find(p + q);
      if (it == c.coeffs.end())
        c.coeffs.emplace(p + q, std::move(prod));
      else
        it->second = it->second + prod;
    }
  // drop cancelled coefficients
  for (auto it = c.coeffs.begin(); it != c.coeffs.end();)
    it = it->second.is_zero() ? c.coeffs.erase(it) : std::next(it);
  return c;
}

namespace {

// exp of a nilpotent matrix, exact finite series.
GaussMat exp_nilpotent(const GaussMat& x) {
  int n = x.rows;
  GaussMat sum = GaussMat::identity(n);
  GaussMat power = x;
  Rat factorial(1);
  for (int k = 1; k <= n; ++k) {
    factorial *= k;
    sum = sum + power.scaled(GaussRat(Rat(1) / factorial));
    power = power * x;
    if (power.is_zero()) return sum;
  }
  fail("exp_nilpotent: matrix is not nilpotent");
}

}  // namespace

LaurentLoop root_subgroup_element(const lie::AlgebraRealization& r, int j,
                                  const GaussRat& x) {
  int rank = static_cast<int>(r.simple_root_vectors.size());
  if (rank == 0)
    fail("realization " + r.label + " provides no root vectors");
  if (j < 0 || j > rank) fail("root subgroup index out of range");
  LaurentLoop g;
  g.dim = r.matrix_dim;
  g.group_tag = r.label;
  if (j >= 1) {
    g.set_coeff(0, exp_nilpotent(r.simple_root_vectors[j - 1].scaled(x)));
    return g;
  }
  // z |-> exp(z^{-1} x E_{-alpha_0}); E_{-alpha_0}^2 = 0 in the classical
  // realizations used here, so the series has two terms.
  GaussMat e = r.lowest_root_vector.scaled(x);
  if (!(e * e).is_zero()) fail("lowest root vector is not 2-step nilpotent");
  g.set_coeff(0, GaussMat::identity(r.matrix_dim));
  g.set_coeff(-1, e);
  return g;
}

LaurentLoop gamma_lambda(const lie::AlgebraRealization& r, const IntVec& xi) {
  GaussMat m = r.realize_lattice(xi);
  // require an exactly diagonal realization with entries in iZ
  LaurentLoop g;
  g.dim = r.matrix_dim;
  g.group_tag = r.label;
  std::vector<long long> exponents(r.matrix_dim);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) {
      const GaussRat& v = m.at(i, j);
      if (i != j) {
        if (!v.is_zero()) fail("gamma_lambda: torus realization not diagonal");
        continue;
      }
      if (v.re != 0 || denominator(v.im) != 1)
        fail("gamma_lambda: non-integral weight at diagonal entry " +
             std::to_string(i));
      exponents[i] = numerator(v.im).convert_to<long long>();
    }
  for (int i = 0; i < r.matrix_dim; ++i) {
    int p = static_cast<int>(exponents[i]);
    GaussMat c = g.coeff(p);
    c.at(i, i) = GaussRat(1);
    g.set_coeff(p, std::move(c));
  }
  return g;
}

LaurentLoop tau_alg(const lie::SigmaRecipe& sigma, const LaurentLoop& g) {
  if (!sigma.entrywise_conj)
    fail("tau_alg: recipe '" + sigma.label +
         "' is not of the anti-holomorphic matrix form");
  LaurentLoop out;
  out.dim = g.dim;
  out.group_tag = g.group_tag;
  for (const auto& [p, a] : g.coeffs)
    out.set_coeff(p,
                  sigma.conjugator * a.conj_entrywise() * sigma.conjugator_inv);
  return out;
}

bool conjugation_cell_check(const cartan::RootSystem& rs,
                            const lie::AlgebraRealization& r,
                            const lie::SigmaRecipe& sigma,
                            const std::vector<int>& word,
                            const std::vector<GaussRat>& xs,
                            const IntVec& xi) {
  if (word.size() != xs.size())
    fail("conjugation_cell_check: word/coordinate length mismatch");
  affine::AffineElement e = affine::element_from_word(rs, word);
  if (e.length != static_cast<int>(word.size()))
    fail("conjugation_cell_check: word is not reduced");
  LaurentLoop lambda = gamma_lambda(r, xi);
  LaurentLoop lhs = identity_loop(r.matrix_dim, r.label);
  LaurentLoop rhs = lhs;
  for (size_t t = 0; t < word.size(); ++t) {
    lhs = multiply(lhs, root_subgroup_element(r, word[t], xs[t]));
    rhs = multiply(rhs, root_subgroup_element(r, word[t], xs[t].conj()));
  }
  lhs = multiply(lhs, lambda);
  rhs = multiply(rhs, lambda);
  return tau_alg(sigma, lhs) == rhs;
}

Eigen::MatrixXcd eval(const LaurentLoop& g, std::complex<double> z) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(g.dim, g.dim);
  for (const auto& [p, a] : g.coeffs)
    out += std::pow(z, p) * lie::to_complex(a);
  return out;
}

std::map<int, GaussRat> laurent_det(const LaurentLoop& g) {
  int n = g.dim;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::map<int, GaussRat> det;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    GaussRat sign((inversions % 2 == 0) ? 1 : -1);
    // product over rows of the Laurent-polynomial entries (i, perm[i])
    std::map<int, GaussRat> term{{0, sign}};
    for (int i = 0; i < n; ++i) {
      std::map<int, GaussRat> entry;
      for (const auto& [p, a] : g.coeffs)
        if (!a.at(i, perm[i]).is_zero()) entry[p] = a.at(i, perm[i]);
      std::map<int, GaussRat> next;
      for (const auto& [p, c] : term)
        for (const auto& [q, d] : entry) {
          GaussRat v = c * d;
          auto it = next.find(p + q);
          if (it == next.end())
            next.emplace(p + q, v);
          else
            it->second += v;
        }
      term = std::move(next);
      if (term.empty()) break;
    }
    for (const auto& [p, c] : term) {
      auto it = det.find(p);
      if (it == det.end())
        det.emplace(p, c);
      else
        it->second += c;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  for (auto it = det.begin(); it != det.end();)
    it = it->second.is_zero() ? det.erase(it) : std::next(it);
  return det;
}

}  // namespace loopmoment::laurent
