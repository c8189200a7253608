#pragma once

// Exact rationals backed by GMP, plus the small set of ring helpers that the
// generic polynomial and matrix code relies on.

#include <gmpxx.h>

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace abelzero {

using Rational = mpq_class;
using Integer = mpz_class;
using Complex = std::complex<double>;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Exact decimal integer or "p/q".
std::string to_string(const Rational& r);

/// Accepts "12", "-3/4", "0.125" (finite decimals are converted exactly).
Rational parse_rational(std::string_view text);

inline double to_double(const Rational& r) { return r.get_d(); }

// Scalar ring interface used by the templates in polynomial.hpp / matrix.hpp.
inline bool is_zero(const Rational& r) { return sgn(r) == 0; }
inline bool is_zero(const Complex& c) { return c == Complex{}; }
inline bool is_zero(double v) { return v == 0.0; }

inline Rational exact_div(const Rational& a, const Rational& b) {
  if (is_zero(b)) throw std::domain_error("division by zero");
  return Rational(a / b);
}
inline Complex exact_div(const Complex& a, const Complex& b) { return a / b; }
inline double exact_div(double a, double b) { return a / b; }

template <typename T>
struct ring_traits;

template <>
struct ring_traits<Rational> {
  static Rational one() { return Rational(1); }
};
template <>
struct ring_traits<Complex> {
  static Complex one() { return Complex(1.0, 0.0); }
};
template <>
struct ring_traits<double> {
  static double one() { return 1.0; }
};

}  // namespace abelzero
