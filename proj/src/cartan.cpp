#include "loopmoment/cartan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace loopmoment::cartan {

LieType lie_type_from_char(char c) {
  switch (c) {
    case 'A': return LieType::A;
    case 'B': return LieType::B;
    case 'C': return LieType::C;
    case 'D': return LieType::D;
    case 'E': return LieType::E;
    case 'F': return LieType::F;
    case 'G': return LieType::G;
    default: fail(std::string("unknown Lie type '") + c + "'");
  }
}

std::string RootSystem::label() const {
  return std::string(1, static_cast<char>(type)) + std::to_string(rank);
}

RatVec RootSystem::lattice_to_ambient(const IntVec& xi) const {
  if (static_cast<int>(xi.size()) != rank) fail("lattice vector: bad size");
  RatVec x(rank);
  for (int j = 0; j < rank; ++j) x[j] = Rat(xi[j]) / d(j);
  return x;
}

long long RootSystem::pair_simple(int i, const IntVec& xi) const {
  if (i < 1 || i > rank) fail("pair_simple: index out of range");
  if (static_cast<int>(xi.size()) != rank) fail("lattice vector: bad size");
  long long s = 0;
  for (int j = 0; j < rank; ++j) s += cartan[i - 1][j] * xi[j];
  return s;
}

long long RootSystem::pair_highest(const IntVec& xi) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    if (highest_root[i] != 0) s += highest_root[i] * pair_simple(i + 1, xi);
  return s;
}

long long RootSystem::pair_root(const IntVec& beta, const IntVec& xi) const {
  long long s = 0;
  for (int i = 0; i < rank; ++i)
    if (beta[i] != 0) s += beta[i] * pair_simple(i + 1, xi);
  return s;
}

Rat RootSystem::lattice_norm2(const IntVec& xi) const {
  return bilinear_int(coroot_gram, xi, xi);
}

IntVec RootSystem::reflect_lattice(int i, const IntVec& xi) const {
  long long p = pair_simple(i, xi);
  IntVec out = xi;
  out[i - 1] -= p;
  return out;
}

bool RootSystem::is_dominant(const IntVec& xi) const {
  for (int i = 1; i <= rank; ++i)
    if (pair_simple(i, xi) < 0) return false;
  return true;
}

namespace {

void require_rank(LieType t, int rank, int lo, int hi = 1 << 20) {
  if (rank >= lo && rank <= hi) return;
  fail("invalid rank " + std::to_string(rank) + " for type " +
       std::string(1, static_cast<char>(t)) +
       " (valid: A>=1, B>=2, C>=3, D>=4, E in {6,7,8}, F=4, G=2)");
}

// Cartan matrix plus the squared-length profile d_i = <alpha_i,alpha_i>/2.
struct TypeData {
  std::vector<std::vector<long long>> cartan;
  RatVec d;
};

TypeData simply_laced_chain(int rank,
                            const std::vector<std::pair<int, int>>& bonds) {
  TypeData td;
  td.cartan.assign(rank, std::vector<long long>(rank, 0));
  for (int i = 0; i < rank; ++i) td.cartan[i][i] = 2;
  for (auto [i, j] : bonds) {
    td.cartan[i][j] = -1;
    td.cartan[j][i] = -1;
  }
  td.d.assign(rank, Rat(1));
  return td;
}

TypeData type_data(LieType type, int rank) {
  std::vector<std::pair<int, int>> bonds;
  switch (type) {
    case LieType::A: {
      require_rank(type, rank, 1);
      for (int i = 0; i + 1 < rank; ++i) bonds.push_back({i, i + 1});
      return simply_laced_chain(rank, bonds);
    }
    case LieType::B: {
      require_rank(type, rank, 2);
      for (int i = 0; i + 1 < rank; ++i) bonds.push_back({i, i + 1});
      TypeData td = simply_laced_chain(rank, bonds);
      td.cartan[rank - 2][rank - 1] = -2;  // alpha_rank is short
      td.d[rank - 1] = Rat(1, 2);
      return td;
    }
    case LieType::C: {
      require_rank(type, rank, 3);
      for (int i = 0; i + 1 < rank; ++i) bonds.push_back({i, i + 1});
      TypeData td = simply_laced_chain(rank, bonds);
      td.cartan[rank - 1][rank - 2] = -2;  // alpha_rank is the long root
      for (int i = 0; i + 1 < rank; ++i) td.d[i] = Rat(1, 2);
      return td;
    }
    case LieType::D: {
      require_rank(type, rank, 4);
      for (int i = 0; i + 1 < rank - 1; ++i) bonds.push_back({i, i + 1});
      bonds.push_back({rank - 3, rank - 1});
      return simply_laced_chain(rank, bonds);
    }
    case LieType::E: {
      require_rank(type, rank, 6, 8);
      // Bourbaki numbering: chain 1-3-4-5-...-rank, branch node 2 on 4.
      bonds = {{0, 2}, {1, 3}};
      for (int i = 2; i + 1 < rank; ++i) bonds.push_back({i, i + 1});
      return simply_laced_chain(rank, bonds);
    }
    case LieType::F: {
      require_rank(type, rank, 4, 4);
      TypeData td = simply_laced_chain(4, {{0, 1}, {1, 2}, {2, 3}});
      td.cartan[1][2] = -2;  // alpha_3, alpha_4 short
      td.d[2] = td.d[3] = Rat(1, 2);
      return td;
    }
    case LieType::G: {
      require_rank(type, rank, 2, 2);
      TypeData td;
      td.cartan = {{2, -1}, {-3, 2}};
      td.d = {Rat(1, 3), Rat(1)};
      return td;
    }
  }
  fail("unreachable");
}

// Closure of the simple roots under the simple reflections, in ambient
// (simple-root) integer coordinates.
std::set<IntVec> root_orbit(const std::vector<std::vector<long long>>& cartan,
                            int rank) {
  std::set<IntVec> roots;
  std::vector<IntVec> frontier;
  for (int i = 0; i < rank; ++i) {
    IntVec e(rank, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<IntVec> next;
    for (const IntVec& c : frontier) {
      for (int i = 0; i < rank; ++i) {
        // <c, alpha_i^vee> = sum_j c_j cartan[j][i]
        long long p = 0;
        for (int j = 0; j < rank; ++j) p += c[j] * cartan[j][i];
        IntVec r = c;
        r[i] -= p;
        if (roots.insert(r).second) next.push_back(r);
      }
    }
    frontier = std::move(next);
  }
  return roots;
}

}  // namespace

RootSystem build_root_system(LieType type, int rank) {
  TypeData td = type_data(type, rank);
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = td.cartan;
  rs.simple_len2.resize(rank);
  for (int i = 0; i < rank; ++i) rs.simple_len2[i] = 2 * td.d[i];

  rs.gram = RatMat(rank, rank);
  rs.coroot_gram = RatMat(rank, rank);
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      rs.gram.at(i, j) = Rat(td.cartan[i][j]) * td.d[j];
      rs.coroot_gram.at(i, j) = Rat(td.cartan[i][j]) / td.d[i];
    }
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      if (rs.gram.at(i, j) != rs.gram.at(j, i))
        fail("gram matrix not symmetric for " + rs.label());
      if (denominator(rs.coroot_gram.at(i, j)) != 1)
        fail("coroot gram not integral for " + rs.label());
    }

  std::set<IntVec> all = root_orbit(td.cartan, rank);
  for (const IntVec& c : all) {
    bool nonneg = std::all_of(c.begin(), c.end(),
                              [](long long v) { return v >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(),
                              [](long long v) { return v <= 0; });
    if (!nonneg && !nonpos)
      fail("mixed-sign root encountered for " + rs.label());
    if (nonneg) rs.positive_roots.push_back(c);
  }
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end());
  if (2 * rs.positive_roots.size() != all.size())
    fail("root count mismatch for " + rs.label());

  // Highest root: the unique positive root beta with beta + alpha_i never a
  // root.
  int found = 0;
  for (const IntVec& beta : rs.positive_roots) {
    bool top = true;
    for (int i = 0; i < rank && top; ++i) {
      IntVec up = beta;
      up[i] += 1;
      if (all.count(up)) top = false;
    }
    if (top) {
      rs.highest_root = beta;
      ++found;
    }
  }
  if (found != 1) fail("highest root not unique for " + rs.label());

  // alpha_0 is long, so alpha_0^vee = alpha_0; its coroot coordinates are
  // c_j d_j.
  rs.highest_root_coroot.resize(rank);
  for (int j = 0; j < rank; ++j) {
    Rat v = Rat(rs.highest_root[j]) * td.d[j];
    if (denominator(v) != 1)
      fail("highest coroot not integral for " + rs.label());
    rs.highest_root_coroot[j] = numerator(v).convert_to<long long>();
  }
  return rs;
}

Rat inner(const RootSystem& rs, const RatVec& x, const RatVec& y) {
  if (static_cast<int>(x.size()) != rs.rank ||
      static_cast<int>(y.size()) != rs.rank)
    fail("inner: dimension mismatch");
  return bilinear(rs.gram, x, y);
}

RatVec reflect(const RootSystem& rs, int i, const RatVec& x) {
  if (i < 1 || i > rs.rank) fail("reflect: index out of range");
  if (static_cast<int>(x.size()) != rs.rank) fail("reflect: bad vector size");
  // <x, alpha_i^vee> = sum_j x_j cartan[j][i]
  Rat p(0);
  for (int j = 0; j < rs.rank; ++j) p += x[j] * rs.cartan[j][i - 1];
  RatVec out = x;
  out[i - 1] -= p;
  return out;
}

IntVec apply_word_lattice(const RootSystem& rs, const std::vector<int>& word,
                          const IntVec& xi) {
  IntVec x = xi;
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    x = rs.reflect_lattice(*it, x);
  return x;
}

std::pair<IntVec, std::vector<int>> dominant_representative(
    const RootSystem& rs, const IntVec& xi) {
  IntVec x = xi;
  std::vector<int> applied;  // in application order (innermost first)
  for (;;) {
    int desc = 0;
    for (int i = 1; i <= rs.rank; ++i)
      if (rs.pair_simple(i, x) < 0) {
        desc = i;
        break;
      }
    if (desc == 0) break;
    x = rs.reflect_lattice(desc, x);
    applied.push_back(desc);
  }
  std::vector<int> word(applied.rbegin(), applied.rend());
  return {x, word};
}

long long weyl_order(const RootSystem& rs) {
  int n = rs.rank;
  std::vector<IntMat> gens;
  for (int i = 1; i <= n; ++i) {
    IntMat s = IntMat::identity(n);
    for (int j = 0; j < n; ++j) s.at(i - 1, j) -= rs.cartan[i - 1][j];
    gens.push_back(s);
  }
  std::set<IntMat> seen{IntMat::identity(n)};
  std::vector<IntMat> frontier{IntMat::identity(n)};
  while (!frontier.empty()) {
    std::vector<IntMat> next;
    for (const IntMat& w : frontier)
      for (const IntMat& s : gens) {
        IntMat ws = s * w;
        if (seen.insert(ws).second) next.push_back(ws);
      }
    frontier = std::move(next);
  }
  return static_cast<long long>(seen.size());
}

}  // namespace loopmoment::cartan
