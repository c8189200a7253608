#include "abelzero/gaussmanin.hpp"

namespace abelzero {

BezoutCertificate bezout_identity(const ParamPoly& f) {
  if (f.degree_x() < 1) throw std::domain_error("Bezout identity needs positive x-degree");
  if (f.coeffs.leading().degree() != 0)
    throw std::domain_error("leading x-coefficient must be a nonzero constant");
  UniPoly det;
  auto [p, q] = gm::bezout_cramer(f.coeffs, det);
  const UniPoly disc = discriminant(f);
  // det is a constant multiple of the discriminant; rescale so that delta == disc.
  const Rational ratio = disc.leading() / det.leading();
  if (ratio * det != disc) throw std::logic_error("Sylvester determinant is not proportional to the discriminant");
  const UniPoly s = UniPoly::constant(ratio);
  return BezoutCertificate{ParamPoly{s * p, f.parameter}, ParamPoly{s * q, f.parameter}, disc, Rational(1)};
}

void reduce_lowest_terms(DenseMatrix<UniPoly>& a, UniPoly& denom) {
  if (denom.is_zero()) throw std::domain_error("zero denominator");
  UniPoly g = denom;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) g = poly_gcd(g, a(i, j));
  g = monic(g);
  const Rational lc = 1 / exact_div(denom, g).leading();
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) = lc * exact_div(a(i, j), g);
  denom = lc * exact_div(denom, g);
}

PicardFuchsSystem gm_connection(const ParamPoly& f) {
  BezoutCertificate cert = bezout_identity(f);
  const BiPoly f_param = derivative_inner(f.coeffs);
  PicardFuchsSystem sys{f, gm::connection_numerators(f.coeffs, f_param, cert.p.coeffs), cert.delta, cert.delta};
  reduce_lowest_terms(sys.A, sys.denom);
  return sys;
}

PicardFuchsSystem eta_normalized_system(const PicardFuchsSystem& sys) {
  PicardFuchsSystem out = sys;
  const UniPoly& disc = sys.family_discriminant;
  const UniPoly ddisc = derivative(disc);
  // A/denom - disc'/(4 disc) = (4 disc A - denom disc') / (4 disc denom)
  const UniPoly four_disc = Rational(4) * disc;
  for (std::size_t i = 0; i < out.A.rows(); ++i)
    for (std::size_t j = 0; j < out.A.cols(); ++j) {
      out.A(i, j) = four_disc * sys.A(i, j);
      if (i == j) out.A(i, j) -= sys.denom * ddisc;
    }
  out.denom = four_disc * sys.denom;
  reduce_lowest_terms(out.A, out.denom);
  return out;
}

bool same_system(const DenseMatrix<UniPoly>& a1, const UniPoly& d1, const DenseMatrix<UniPoly>& a2, const UniPoly& d2) {
  if (a1.rows() != a2.rows() || a1.cols() != a2.cols()) return false;
  for (std::size_t i = 0; i < a1.rows(); ++i)
    for (std::size_t j = 0; j < a1.cols(); ++j)
      if (a1(i, j) * d2 != a2(i, j) * d1) return false;
  return true;
}

std::vector<Complex> evaluate_system(const PicardFuchsSystem& sys, Complex z) {
  const Complex den = evaluate(sys.denom, z);
  std::vector<Complex> out;
  out.reserve(sys.A.rows() * sys.A.cols());
  for (std::size_t i = 0; i < sys.A.rows(); ++i)
    for (std::size_t j = 0; j < sys.A.cols(); ++j) out.push_back(evaluate(sys.A(i, j), z) / den);
  return out;
}

}  // namespace abelzero
