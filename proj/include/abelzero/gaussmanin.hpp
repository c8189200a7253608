#pragma once

// Bezout certificates p*f_x + q*f = Delta and the Gauss-Manin connection of a
// one-parameter family f(x, z) on the basis x, ..., x^{d-1} of the Brieskorn
// module. The ring-generic kernels below also serve multi-parameter families
// (coefficients in Q[u][v]) for flatness checks.

#include <stdexcept>
#include <utility>
#include <vector>

#include "abelzero/algebra.hpp"
#include "abelzero/matrix.hpp"

namespace abelzero {

struct BezoutCertificate {
  ParamPoly p;
  ParamPoly q;
  UniPoly delta;     // p*f_x + q*f == delta
  Rational constant; // delta == constant * discriminant(f)
};

/// Requires a constant leading x-coefficient and a discriminant that is not identically zero.
BezoutCertificate bezout_identity(const ParamPoly& f);

/// I'(z) = M(z) I(z) with M = A / denom in lowest terms and denom monic.
struct PicardFuchsSystem {
  ParamPoly family;
  DenseMatrix<UniPoly> A;     // row m-1 holds the derivative of x^m
  UniPoly denom;
  UniPoly family_discriminant;

  std::size_t size() const { return A.rows(); }
};

PicardFuchsSystem gm_connection(const ParamPoly& f);

/// The system for the periods divided by disc^{1/4}: M - disc'/(4 disc) I.
PicardFuchsSystem eta_normalized_system(const PicardFuchsSystem& sys);

/// Same rational-function matrix, compared by cross-multiplication.
bool same_system(const DenseMatrix<UniPoly>& a1, const UniPoly& d1, const DenseMatrix<UniPoly>& a2, const UniPoly& d2);

/// Divide A and denom by their joint gcd and make denom monic.
void reduce_lowest_terms(DenseMatrix<UniPoly>& a, UniPoly& denom);

/// Evaluate M at a complex parameter value (row-major, size x size).
std::vector<Complex> evaluate_system(const PicardFuchsSystem& sys, Complex z);

namespace gm {

/// Solves p*f_x + q*f = det with deg p < d, deg q < d-1 by Cramer's rule on the
/// Sylvester system; det is the determinant of that system (a resultant up to sign).
template <typename Ring>
std::pair<Polynomial<Ring>, Polynomial<Ring>> bezout_cramer(const Polynomial<Ring>& f, Ring& det) {
  const int d = f.degree();
  if (d < 1) throw std::domain_error("Bezout identity needs positive x-degree");
  const Polynomial<Ring> fx = derivative(f);
  const std::size_t n = static_cast<std::size_t>(2 * d - 1);
  // Columns: x^j f_x for j < d (unknowns p_j), then x^i f for i < d-1 (unknowns q_i).
  DenseMatrix<Ring> m(n, n);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k <= fx.degree(); ++k) m(static_cast<std::size_t>(j + k), static_cast<std::size_t>(j)) = fx[static_cast<std::size_t>(k)];
  for (int i = 0; i < d - 1; ++i)
    for (int k = 0; k <= d; ++k)
      m(static_cast<std::size_t>(i + k), static_cast<std::size_t>(d + i)) = f[static_cast<std::size_t>(k)];
  det = determinant(m);
  if (is_zero(det)) throw std::domain_error("family is degenerate: discriminant vanishes identically");
  std::vector<Ring> pc(static_cast<std::size_t>(d)), qc(static_cast<std::size_t>(d - 1));
  for (std::size_t col = 0; col < n; ++col) {
    DenseMatrix<Ring> mk = m;
    for (std::size_t r = 0; r < n; ++r) mk(r, col) = r == 0 ? ring_traits<Ring>::one() : Ring{};
    Ring v = determinant(mk);
    if (col < static_cast<std::size_t>(d))
      pc[col] = std::move(v);
    else
      qc[col - static_cast<std::size_t>(d)] = std::move(v);
  }
  return {Polynomial<Ring>(std::move(pc)), Polynomial<Ring>(std::move(qc))};
}

/// Row m-1, column i-1: coefficient of x^i in -m x^{m-1} f_param p reduced modulo f.
template <typename Ring>
DenseMatrix<Ring> connection_numerators(const Polynomial<Ring>& f, const Polynomial<Ring>& f_param,
                                        const Polynomial<Ring>& p) {
  const int d = f.degree();
  const std::size_t n = static_cast<std::size_t>(d - 1);
  DenseMatrix<Ring> a(n, n);
  const Polynomial<Ring> base = (f_param * p) % f;
  Polynomial<Ring> power = ring_traits<Polynomial<Ring>>::one();  // x^{m-1}
  const Polynomial<Ring> x = Polynomial<Ring>::variable();
  for (int m = 1; m < d; ++m) {
    Ring scale{};
    for (int k = 0; k < m; ++k) scale = scale - ring_traits<Ring>::one();
    Polynomial<Ring> r = (Polynomial<Ring>::constant(scale) * power * base) % f;
    for (int i = 1; i < d; ++i)
      a(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(i - 1)) = r.coeff(static_cast<std::size_t>(i));
    power = (power * x) % f;
  }
  return a;
}

}  // namespace gm

}  // namespace abelzero
