#pragma once

#include "loopmoment/cartan.hpp"

#include <vector>

namespace loopmoment::affine {

using cartan::RootSystem;

// Element of the affine Weyl group W~ = W |x I, acting on t by
// x |-> finite_part(x) + translation_part (coroot coordinates).
// length is the number of affine hyperplanes {<alpha,x> = k} separating the
// fundamental alcove from its image, which equals the Coxeter length.
struct AffineElement {
  std::vector<int> word;  // letters over {0,1,...,rank}; 0 is s_0
  IntMat finite_part;
  IntVec translation_part;
  int length = 0;
};

// Generator action on ambient rational coordinates.  For i >= 1 this is
// reflect(rs, i, x); s_0 reflects about {x : <alpha_0, x> = 1}.
RatVec apply_affine_generator(const RootSystem& rs, int i, const RatVec& x);

// Same action restricted to the lattice (coroot coordinates).
IntVec apply_affine_generator_lattice(const RootSystem& rs, int i,
                                      const IntVec& m);

// Composes the word's generators into an affine map; length comes from the
// hyperplane count, so it is meaningful for non-reduced words too.
AffineElement element_from_word(const RootSystem& rs,
                                const std::vector<int>& word);

// Coxeter length by counting affine mirrors strictly separating the
// fundamental alcove from its image under the element.
int element_length_by_hyperplanes(const RootSystem& rs, const IntMat& lin,
                                  const IntVec& tr);

// Length of the unique minimal representative of the coset t_xi * W;
// equals the complex dimension of the Bruhat cell through xi.  BFS over
// lattice points is the production path.
int minimal_coset_length(const RootSystem& rs, const IntVec& xi);

// Independent closed-form oracle for the same quantity: the number of
// affine hyperplanes strictly separating the fundamental alcove from the
// point xi.
int coset_length_by_hyperplanes(const RootSystem& rs, const IntVec& xi);

// Lexicographically least reduced word of the minimal coset representative.
std::vector<int> reduced_word(const RootSystem& rs, const IntVec& xi);

// Applies a word [i_1,...,i_k] to a lattice point, outermost letter first:
// s_{i_1}(s_{i_2}(... s_{i_k}(m) ...)).
IntVec apply_affine_word_lattice(const RootSystem& rs,
                                 const std::vector<int>& word,
                                 const IntVec& m);

// Index set of Bruhat cells up to a dimension bound: by_length[k] is the
// sorted list of lattice vectors whose minimal coset representative has
// length k.
struct CellTable {
  int max_length = 0;
  std::vector<std::vector<IntVec>> by_length;

  long long total_cells() const {
    long long n = 0;
    for (const auto& shell : by_length) n += static_cast<long long>(shell.size());
    return n;
  }
};

CellTable enumerate_cells(const RootSystem& rs, int max_length);

// All reduced words of length <= max_length over {0..rank} (words w with
// length(element(w)) == |w|), in lexicographic order.
std::vector<std::vector<int>> all_reduced_words(const RootSystem& rs,
                                                int max_length);

}  // namespace loopmoment::affine
