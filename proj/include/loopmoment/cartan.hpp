#pragma once

#include "loopmoment/linalg.hpp"
#include "loopmoment/rational.hpp"

#include <string>
#include <utility>
#include <vector>

namespace loopmoment::cartan {

enum class LieType : char {
  A = 'A',
  B = 'B',
  C = 'C',
  D = 'D',
  E = 'E',
  F = 'F',
  G = 'G'
};

LieType lie_type_from_char(char c);

// Root-system kernel.  Coordinate conventions, used consistently everywhere:
//  * "ambient" coordinates are taken in the simple-root basis, so the i-th
//    simple root is the i-th standard basis vector and all roots have
//    integer ambient coordinates;
//  * lattice vectors (integral lattice = coroot lattice, G simply
//    connected) are stored as integer coordinates in the simple-coroot
//    basis alpha_1^vee .. alpha_ell^vee.
// The invariant inner product is normalized so long roots have squared
// length 2; gram is its matrix in ambient coordinates.
struct RootSystem {
  LieType type;
  int rank = 0;
  std::vector<std::vector<long long>> cartan;  // cartan[i][j] = <a_i, a_j^vee>
  RatVec simple_len2;                          // <alpha_i, alpha_i>
  RatMat gram;                                 // <alpha_i, alpha_j>
  RatMat coroot_gram;        // <alpha_i^vee, alpha_j^vee>, integer entries
  std::vector<IntVec> positive_roots;  // ambient (simple-root) coordinates
  IntVec highest_root;                 // ambient coordinates
  IntVec highest_root_coroot;          // alpha_0^vee in coroot coordinates

  std::string label() const;  // e.g. "A2"

  // alpha_i^vee = alpha_i / d_i with d_i = <alpha_i,alpha_i>/2.
  Rat d(int i) const { return simple_len2[i] / 2; }

  RatVec lattice_to_ambient(const IntVec& xi) const;

  // <alpha_i, xi> for lattice xi; always an integer.  i is 1-based.
  long long pair_simple(int i, const IntVec& xi) const;
  // <alpha_0, xi> for lattice xi.
  long long pair_highest(const IntVec& xi) const;
  // <beta, xi> for a root beta in ambient integer coordinates.
  long long pair_root(const IntVec& beta, const IntVec& xi) const;

  Rat lattice_norm2(const IntVec& xi) const;  // <xi, xi>

  // s_i acting on lattice (coroot) coordinates; i is 1-based.
  IntVec reflect_lattice(int i, const IntVec& xi) const;

  bool is_dominant(const IntVec& xi) const;
};

// pre: valid (type, rank) pair: A >= 1, B >= 2, C >= 3, D >= 4,
// E in {6,7,8}, F = 4, G = 2.
RootSystem build_root_system(LieType type, int rank);

// <x, y> = x^T G y in ambient coordinates; exact.
Rat inner(const RootSystem& rs, const RatVec& x, const RatVec& y);

// s_i(x) = x - <x, alpha_i^vee> alpha_i in ambient coordinates; 1 <= i <= rank.
RatVec reflect(const RootSystem& rs, int i, const RatVec& x);

// The unique dominant W-orbit representative of a lattice vector, plus a word
// [i_1,...,i_m] over {1..rank} with s_{i_1}(s_{i_2}(...s_{i_m}(xi)...)) dominant.
std::pair<IntVec, std::vector<int>> dominant_representative(
    const RootSystem& rs, const IntVec& xi);

// Applies a word (outermost letter first) to a lattice vector.
IntVec apply_word_lattice(const RootSystem& rs, const std::vector<int>& word,
                          const IntVec& xi);

// Order of the finite Weyl group, by closure of the generator matrices.
long long weyl_order(const RootSystem& rs);

}  // namespace loopmoment::cartan
