#include "loopmoment/betti.hpp"

#include "loopmoment/affine.hpp"

namespace loopmoment::betti {

namespace {

// Multiplies the truncated series by (1 - t^period)^{-1} in place.
void divide_by_one_minus(std::vector<long long>& c, int period) {
  for (size_t q = period; q < c.size(); ++q) c[q] += c[q - period];
}

}  // namespace

BettiSeries omega_g_series(const cartan::RootSystem& rs, int max_degree) {
  if (max_degree < 0) fail("omega_g_series: negative degree");
  BettiSeries s;
  s.max_degree = max_degree;
  s.label = "omega_g " + rs.label();
  s.coeffs.assign(max_degree + 1, 0);
  affine::CellTable cells = affine::enumerate_cells(rs, max_degree / 2);
  for (int k = 0; 2 * k <= max_degree; ++k)
    s.coeffs[2 * k] = static_cast<long long>(cells.by_length[k].size());
  return s;
}

BettiSeries su_closed_form(int n, int max_degree) {
  if (n < 2) fail("su_closed_form: n must be >= 2");
  if (max_degree < 0) fail("su_closed_form: negative degree");
  BettiSeries s;
  s.max_degree = max_degree;
  s.label = "su_closed_form n=" + std::to_string(n);
  s.coeffs.assign(max_degree + 1, 0);
  s.coeffs[0] = 1;
  for (int k = 1; k <= n - 1; ++k) divide_by_one_minus(s.coeffs, 2 * k);
  return s;
}

BettiSeries cp_loop_series(int n, int max_degree) {
  if (n < 2) fail("cp_loop_series: n must be >= 2");
  if (max_degree < 0) fail("cp_loop_series: negative degree");
  BettiSeries s;
  s.max_degree = max_degree;
  s.label = "cp_loop_series n=" + std::to_string(n);
  s.coeffs.assign(max_degree + 1, 0);
  s.coeffs[0] = 1;
  if (max_degree >= 1) s.coeffs[1] = 1;  // the (1+t) factor
  divide_by_one_minus(s.coeffs, 2 * n - 2);
  return s;
}

BettiSeries halve(const BettiSeries& s) {
  for (int q = 1; q <= s.max_degree; q += 2)
    if (s.coeffs[q] != 0)
      fail("halve: nonzero odd coefficient at degree " + std::to_string(q) +
           "; series is not halvable");
  BettiSeries h;
  h.max_degree = s.max_degree / 2;
  h.label = "halved(" + s.label + ")";
  h.coeffs.assign(h.max_degree + 1, 0);
  for (int q = 0; q <= h.max_degree; ++q) h.coeffs[q] = s.coeffs[2 * q];
  return h;
}

CompareReport compare(const BettiSeries& a, const BettiSeries& b,
                      int max_degree) {
  if (a.max_degree < max_degree || b.max_degree < max_degree)
    fail("compare: series do not reach the requested degree");
  CompareReport r;
  r.compared_to_degree = max_degree;
  for (int q = 0; q <= max_degree; ++q)
    if (a.coeffs[q] != b.coeffs[q]) {
      r.equal = false;
      r.first_discrepancy_degree = q;
      r.a_value = a.coeffs[q];
      r.b_value = b.coeffs[q];
      return r;
    }
  r.equal = true;
  return r;
}

}  // namespace loopmoment::betti
