#include "loopmoment/affine.hpp"

#include <algorithm>
#include <map>

namespace loopmoment::affine {

namespace {

long long rat_floor(const Rat& r) {
  BigInt p = numerator(r), q = denominator(r);  // q > 0 canonically
  BigInt f = p / q;
  if (p < 0 && f * q != p) f -= 1;
  return f.convert_to<long long>();
}

// <beta, x> for a root beta (ambient integer coords) and a rational point x
// in coroot coordinates: (beta^T C) x.
Rat pair_root_rat(const RootSystem& rs, const IntVec& beta, const RatVec& x) {
  Rat s(0);
  for (int i = 0; i < rs.rank; ++i) {
    if (beta[i] == 0) continue;
    Rat row(0);
    for (int j = 0; j < rs.rank; ++j) row += Rat(rs.cartan[i][j]) * x[j];
    s += Rat(beta[i]) * row;
  }
  return s;
}

// An exact interior point of the fundamental alcove, in coroot coordinates:
// v with <alpha_i, v> = 1 scaled below the affine wall.
RatVec alcove_interior_point(const RootSystem& rs) {
  RatMat c(rs.rank, rs.rank);
  for (int i = 0; i < rs.rank; ++i)
    for (int j = 0; j < rs.rank; ++j) c.at(i, j) = rs.cartan[i][j];
  RatVec ones(rs.rank, Rat(1));
  auto v = rat_solve(c, ones);
  if (!v) fail("alcove_interior_point: Cartan matrix singular");
  Rat c0 = pair_root_rat(rs, rs.highest_root, *v);
  RatVec p = *v;
  for (auto& e : p) e /= (c0 + 1);
  return p;
}

}  // namespace

RatVec apply_affine_generator(const RootSystem& rs, int i, const RatVec& x) {
  if (i < 0 || i > rs.rank) fail("affine generator index out of range");
  if (i >= 1) return cartan::reflect(rs, i, x);
  if (static_cast<int>(x.size()) != rs.rank) fail("bad vector size");
  // s_0(x) = x - (<alpha_0, x> - 1) alpha_0^vee; alpha_0 is long, so
  // alpha_0^vee = alpha_0 in ambient coordinates.
  RatVec a0(rs.highest_root.begin(), rs.highest_root.end());
  Rat p = bilinear(rs.gram, a0, x) - 1;
  RatVec out = x;
  for (int j = 0; j < rs.rank; ++j) out[j] -= p * a0[j];
  return out;
}

IntVec apply_affine_generator_lattice(const RootSystem& rs, int i,
                                      const IntVec& m) {
  if (i < 0 || i > rs.rank) fail("affine generator index out of range");
  if (i >= 1) return rs.reflect_lattice(i, m);
  long long p = rs.pair_highest(m) - 1;
  IntVec out = m;
  for (int j = 0; j < rs.rank; ++j) out[j] -= p * rs.highest_root_coroot[j];
  return out;
}

int element_length_by_hyperplanes(const RootSystem& rs, const IntMat& lin,
                                  const IntVec& tr) {
  RatVec p0 = alcove_interior_point(rs);
  RatVec q0(rs.rank);
  for (int i = 0; i < rs.rank; ++i) {
    Rat s(tr[i]);
    for (int j = 0; j < rs.rank; ++j) s += Rat(lin.at(i, j)) * p0[j];
    q0[i] = s;
  }
  int count = 0;
  for (const IntVec& beta : rs.positive_roots) {
    long long fu = rat_floor(pair_root_rat(rs, beta, p0));
    long long fw = rat_floor(pair_root_rat(rs, beta, q0));
    count += static_cast<int>(fu < fw ? fw - fu : fu - fw);
  }
  return count;
}

AffineElement element_from_word(const RootSystem& rs,
                                const std::vector<int>& word) {
  int n = rs.rank;
  // generator data: linear part and translation on coroot coordinates
  std::vector<IntMat> lin(n + 1);
  std::vector<IntVec> tr(n + 1, IntVec(n, 0));
  for (int i = 1; i <= n; ++i) {
    IntMat s = IntMat::identity(n);
    for (int j = 0; j < n; ++j) s.at(i - 1, j) -= rs.cartan[i - 1][j];
    lin[i] = s;
  }
  {
    IntMat s0 = IntMat::identity(n);
    for (int j = 0; j < n; ++j) {
      long long q = 0;
      for (int i = 0; i < n; ++i)
        q += rs.highest_root[i] * rs.cartan[i][j];
      for (int k = 0; k < n; ++k)
        s0.at(k, j) -= rs.highest_root_coroot[k] * q;
    }
    lin[0] = s0;
    tr[0] = rs.highest_root_coroot;
  }
  AffineElement e;
  e.word = word;
  e.finite_part = IntMat::identity(n);
  e.translation_part.assign(n, 0);
  for (int l : word) {
    if (l < 0 || l > n) fail("word letter out of range");
    // compose on the right: (A,b) o s_l
    IntVec atl = e.finite_part.apply(tr[l]);
    for (int k = 0; k < n; ++k) e.translation_part[k] += atl[k];
    e.finite_part = e.finite_part * lin[l];
  }
  e.length = element_length_by_hyperplanes(rs, e.finite_part,
                                           e.translation_part);
  return e;
}

IntVec apply_affine_word_lattice(const RootSystem& rs,
                                 const std::vector<int>& word,
                                 const IntVec& m) {
  IntVec x = m;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = apply_affine_generator_lattice(rs, *it, x);
  return x;
}

int coset_length_by_hyperplanes(const RootSystem& rs, const IntVec& xi) {
  int count = 0;
  for (const IntVec& beta : rs.positive_roots) {
    long long v = rs.pair_root(beta, xi);
    if (v >= 1)
      count += static_cast<int>(v - 1);
    else
      count += static_cast<int>(-v);
  }
  return count;
}

namespace {

// BFS from the origin in the orbit graph of lattice points under the
// affine generators.  Distances equal minimal coset lengths.  Expands shell
// by shell until the stop condition fires.
std::map<IntVec, int> bfs_distances(const RootSystem& rs, int max_depth,
                                    const IntVec* stop_at) {
  std::map<IntVec, int> dist;
  IntVec zero(rs.rank, 0);
  dist[zero] = 0;
  if (stop_at && *stop_at == zero) return dist;
  std::vector<IntVec> frontier{zero};
  for (int depth = 1; max_depth < 0 || depth <= max_depth; ++depth) {
    std::vector<IntVec> next;
    for (const IntVec& m : frontier)
      for (int i = 0; i <= rs.rank; ++i) {
        IntVec q = apply_affine_generator_lattice(rs, i, m);
        if (dist.emplace(q, depth).second) {
          next.push_back(q);
          if (stop_at && q == *stop_at) return dist;
        }
      }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

int minimal_coset_length(const RootSystem& rs, const IntVec& xi) {
  if (static_cast<int>(xi.size()) != rs.rank) fail("lattice vector: bad size");
  auto dist = bfs_distances(rs, -1, &xi);
  auto it = dist.find(xi);
  if (it == dist.end()) fail("BFS did not reach lattice point");
  return it->second;
}

std::vector<int> reduced_word(const RootSystem& rs, const IntVec& xi) {
  if (static_cast<int>(xi.size()) != rs.rank) fail("lattice vector: bad size");
  auto dist = bfs_distances(rs, -1, &xi);
  auto it = dist.find(xi);
  if (it == dist.end()) fail("BFS did not reach lattice point");
  int k = it->second;
  std::vector<int> word;
  IntVec cur = xi;
  for (int step = k; step > 0; --step) {
    bool advanced = false;
    for (int i = 0; i <= rs.rank && !advanced; ++i) {
      IntVec q = apply_affine_generator_lattice(rs, i, cur);
      auto jt = dist.find(q);
      if (jt != dist.end() && jt->second == step - 1) {
        word.push_back(i);
        cur = std::move(q);
        advanced = true;
      }
    }
    if (!advanced) fail("reduced_word: descent not found");
  }
  return word;
}

CellTable enumerate_cells(const RootSystem& rs, int max_length) {
  if (max_length < 0) fail("enumerate_cells: negative max_length");
  CellTable table;
  table.max_length = max_length;
  table.by_length.assign(max_length + 1, {});
  auto dist = bfs_distances(rs, max_length, nullptr);
  for (const auto& [m, d] : dist) table.by_length[d].push_back(m);
  // std::map iteration is already sorted, but keep the contract explicit.
  for (auto& shell : table.by_length) std::sort(shell.begin(), shell.end());
  return table;
}

std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs,
                                                int max_length) {
  std::vector<std::vector<int>> out;
  std::vector<std::vector<int>> frontier{{}};
  out.push_back({});
  for (int len = 1; len <= max_length; ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : frontier)
      for (int l = 0; l <= rs.rank; ++l) {
        std::vector<int> w2 = w;
        w2.push_back(l);
        AffineElement e = element_from_word(rs, w2);
        if (e.length == static_cast<int>(w2.size())) next.push_back(w2);
      }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

}  // namespace loopmoment::affine
