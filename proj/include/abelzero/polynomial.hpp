#pragma once

// Dense univariate polynomials over an arbitrary commutative coefficient ring.
//
// Polynomial<Rational> is the workhorse; Polynomial<Polynomial<Rational>>
// carries a second variable (the fibre parameter t or z, or the y of a plane
// curve), and Polynomial<Complex> is used by the numeric modules. All
// algorithms are free functions that only need +, -, *, is_zero and
// exact_div on the coefficients.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "abelzero/rational.hpp"

namespace abelzero {

template <typename Scalar>
class Polynomial;

template <typename T>
bool is_zero(const Polynomial<T>& p);
template <typename T>
Polynomial<T> exact_div(const Polynomial<T>& a, const Polynomial<T>& b);

namespace detail {
template <typename S>
bool coeff_is_zero(const S& s) {
  return is_zero(s);
}
}  // namespace detail

template <typename Scalar>
class Polynomial {
 public:
  using scalar_type = Scalar;

  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Scalar> coeffs) : coeffs_(coeffs) { trim(); }

  static Polynomial constant(Scalar c) { return Polynomial(std::vector<Scalar>{std::move(c)}); }
  static Polynomial monomial(Scalar c, std::size_t k) {
    std::vector<Scalar> v(k + 1);
    v[k] = std::move(c);
    return Polynomial(std::move(v));
  }
  static Polynomial variable() { return monomial(ring_traits<Scalar>::one(), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::size_t size() const { return coeffs_.size(); }

  Scalar coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar{}; }
  const Scalar& operator[](std::size_t k) const { return coeffs_[k]; }
  const Scalar& leading() const {
    if (coeffs_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return coeffs_.back();
  }
  std::span<const Scalar> coefficients() const { return coeffs_; }

  void set_coeff(std::size_t k, Scalar c) {
    if (k >= coeffs_.size()) coeffs_.resize(k + 1);
    coeffs_[k] = std::move(c);
    trim();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] + o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] = coeffs_[i] - o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Polynomial& o) {
    *this = *this * o;
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    std::vector<Scalar> v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = -a.coeffs_[i];
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Scalar> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (detail::coeff_is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] = v[i + j] + a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }
  friend Polynomial operator*(const Scalar& s, const Polynomial& a) {
    std::vector<Scalar> v(a.coeffs_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = s * a.coeffs_[i];
    return Polynomial(std::move(v));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void trim() {
    while (!coeffs_.empty() && detail::coeff_is_zero(coeffs_.back())) coeffs_.pop_back();
  }
  std::vector<Scalar> coeffs_;
};

using UniPoly = Polynomial<Rational>;
/// Polynomial in an outer variable whose coefficients are polynomials in an inner one.
using BiPoly = Polynomial<UniPoly>;
using ComplexPoly = Polynomial<Complex>;

template <typename T>
bool is_zero(const Polynomial<T>& p) {
  return p.is_zero();
}

template <typename T>
struct ring_traits<Polynomial<T>> {
  static Polynomial<T> one() { return Polynomial<T>::constant(ring_traits<T>::one()); }
};

template <typename T>
Polynomial<T> scale(const Polynomial<T>& p, const T& s) {
  return s * p;
}

/// Division with remainder; every step divides by lc(b) with exact_div, so over a
/// non-field the divisor needs a unit (or exactly dividing) leading coefficient.
template <typename T>
std::pair<Polynomial<T>, Polynomial<T>> divmod(const Polynomial<T>& a, const Polynomial<T>& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Polynomial<T>{}, a};
  std::vector<T> rem(a.coefficients().begin(), a.coefficients().end());
  std::vector<T> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const int db = b.degree();
  const T& lb = b.leading();
  for (int k = a.degree(); k >= db; --k) {
    const T& top = rem[static_cast<std::size_t>(k)];
    if (is_zero(top)) continue;
    T c = exact_div(top, lb);
    const std::size_t shift = static_cast<std::size_t>(k - db);
    for (int j = 0; j <= db; ++j) {
      rem[shift + j] = rem[shift + j] - c * b[static_cast<std::size_t>(j)];
    }
    quo[shift] = std::move(c);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial<T>(std::move(quo)), Polynomial<T>(std::move(rem))};
}

template <typename T>
Polynomial<T> operator%(const Polynomial<T>& a, const Polynomial<T>& b) {
  return divmod(a, b).second;
}

/// Quotient of an exact division; throws std::domain_error on a nonzero remainder.
template <typename T>
Polynomial<T> exact_div(const Polynomial<T>& a, const Polynomial<T>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact polynomial division");
  return q;
}

template <typename T>
Polynomial<T> derivative(const Polynomial<T>& p) {
  if (p.degree() <= 0) return {};
  std::vector<T> v(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.size(); ++i) {
    T k = ring_traits<T>::one();
    T acc{};
    for (std::size_t j = 0; j < i; ++j) acc = acc + k;
    v[i - 1] = acc * p[i];
  }
  return Polynomial<T>(std::move(v));
}

template <>
inline UniPoly derivative(const UniPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<Rational> v(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = p[i] * static_cast<long>(i);
  return UniPoly(std::move(v));
}

/// Horner evaluation at a value of any type that mixes with the coefficients.
template <typename T, typename V>
V evaluate(const Polynomial<T>& p, const V& x) {
  V acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + V(p[i]);
  return acc;
}

inline Complex evaluate(const UniPoly& p, const Complex& x) {
  Complex acc{};
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + to_double(p[i]);
  return acc;
}

/// p(q).
template <typename T>
Polynomial<T> compose(const Polynomial<T>& p, const Polynomial<T>& q) {
  Polynomial<T> acc;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * q + Polynomial<T>::constant(p[i]);
  return acc;
}

template <typename T>
Polynomial<T> pow(const Polynomial<T>& p, unsigned k) {
  Polynomial<T> acc = ring_traits<Polynomial<T>>::one();
  Polynomial<T> base = p;
  while (k != 0) {
    if (k & 1U) acc = acc * base;
    k >>= 1U;
    if (k != 0) base = base * base;
  }
  return acc;
}

/// Lift a polynomial to one over a larger coefficient ring (e.g. Q[x] into Q[t][x]).
template <typename T>
Polynomial<Polynomial<T>> lift_coefficients(const Polynomial<T>& p) {
  std::vector<Polynomial<T>> v;
  v.reserve(p.size());
  for (const T& c : p.coefficients()) v.push_back(Polynomial<T>::constant(c));
  return Polynomial<Polynomial<T>>(std::move(v));
}

inline ComplexPoly to_complex(const UniPoly& p) {
  std::vector<Complex> v;
  v.reserve(p.size());
  for (const Rational& c : p.coefficients()) v.emplace_back(to_double(c), 0.0);
  return ComplexPoly(std::move(v));
}

/// Monic associate over Q; zero stays zero.
inline UniPoly monic(const UniPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading();
  return inv * p;
}

}  // namespace abelzero
