#pragma once

#include "loopmoment/cartan.hpp"

#include <string>
#include <vector>

namespace loopmoment::betti {

// Truncated Z_2 Poincare series with exact integer coefficients.
struct BettiSeries {
  int max_degree = 0;
  std::vector<long long> coeffs;  // coeffs[q] = dim H^q, q <= max_degree
  std::string label;

  long long at(int q) const {
    return (q >= 0 && q <= max_degree) ? coeffs[q] : 0;
  }
};

// Series of Omega(G) from the Bruhat cell counts: a cell of complex
// dimension k contributes t^{2k}; odd coefficients vanish.
BettiSeries omega_g_series(const cartan::RootSystem& rs, int max_degree);

// [(1-t^2)(1-t^4)...(1-t^{2n-2})]^{-1}, the Omega(SU(n)) closed form.
BettiSeries su_closed_form(int n, int max_degree);

// (1+t)(1-t^{2n-2})^{-1}, the Omega(SU(n))^tau = Omega(CP^{n-1}) closed form.
BettiSeries cp_loop_series(int n, int max_degree);

// Degree-halving: output q-th coefficient = input 2q-th coefficient.
// pre: all odd coefficients vanish, else the series is not halvable.
BettiSeries halve(const BettiSeries& s);

struct CompareReport {
  bool equal = false;
  int compared_to_degree = 0;
  // valid when !equal:
  int first_discrepancy_degree = -1;
  long long a_value = 0, b_value = 0;
};

// pre: both series reach max_degree.
CompareReport compare(const BettiSeries& a, const BettiSeries& b,
                      int max_degree);

}  // namespace loopmoment::betti
