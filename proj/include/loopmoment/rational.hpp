#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <complex>
#include <stdexcept>
#include <string>

namespace loopmoment {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

[[noreturn]] inline void fail(const std::string& msg) {
  throw std::runtime_error(msg);
}

// Canonical "p/q" form, q > 0, used by all JSON emitters ("2/1" for 2).
inline std::string rat_to_string(const Rat& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

// Accepts "p/q" or a bare integer "p".
inline Rat rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(s));
    BigInt p(s.substr(0, slash));
    BigInt q(s.substr(slash + 1));
    if (q == 0) fail("rational with zero denominator: " + s);
    return Rat(p, q);
  } catch (const std::runtime_error&) {
    throw;
  } catch (const std::exception&) {
    fail("malformed rational: '" + s + "'");
  }
}

inline double rat_to_double(const Rat& r) { return r.convert_to<double>(); }

// Largest integer m >= 0 with m*m <= r; r must be >= 0.
inline long long rat_isqrt_floor(const Rat& r) {
  if (r < 0) fail("rat_isqrt_floor: negative argument");
  long long m = 0;
  while (Rat((m + 1)) * (m + 1) <= r) ++m;
  return m;
}

// Exact complex scalar of the symbolic loop layer: re + im*i with
// rational re, im.
struct GaussRat {
  Rat re{0};
  Rat im{0};

  GaussRat() = default;
  GaussRat(Rat r) : re(std::move(r)) {}
  GaussRat(Rat r, Rat i) : re(std::move(r)), im(std::move(i)) {}
  GaussRat(long long r) : re(r) {}

  bool is_zero() const { return re == 0 && im == 0; }
  bool is_real() const { return im == 0; }

  GaussRat conj() const { return {re, -im}; }

  friend GaussRat operator+(const GaussRat& a, const GaussRat& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend GaussRat operator-(const GaussRat& a, const GaussRat& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend GaussRat operator-(const GaussRat& a) { return {-a.re, -a.im}; }
  friend GaussRat operator*(const GaussRat& a, const GaussRat& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend GaussRat operator/(const GaussRat& a, const GaussRat& b) {
    Rat n = b.re * b.re + b.im * b.im;
    if (n == 0) fail("GaussRat division by zero");
    return {(a.re * b.re + a.im * b.im) / n, (a.im * b.re - a.re * b.im) / n};
  }
  GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
  GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
  GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
  friend bool operator==(const GaussRat& a, const GaussRat& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRat& a, const GaussRat& b) {
    return !(a == b);
  }

  std::complex<double> to_complex() const {
    return {rat_to_double(re), rat_to_double(im)};
  }
};

inline GaussRat gauss_i() { return GaussRat(Rat(0), Rat(1)); }

// "a/b+c/d i" (or "a/b-c/d i"); the imaginary part is always printed.
inline std::string gauss_to_string(const GaussRat& g) {
  std::string s = rat_to_string(g.re);
  if (g.im < 0) {
    s += "-" + rat_to_string(-g.im) + " i";
  } else {
    s += "+" + rat_to_string(g.im) + " i";
  }
  return s;
}

}  // namespace loopmoment
