#pragma once

// Exact algebra over Q: gcd, resultants and discriminants (also over Q[t]),
// squarefree decomposition, factorization into irreducibles, g-adic
// expansion and the reduction of x^m in the versal family.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abelzero/matrix.hpp"
#include "abelzero/polynomial.hpp"

namespace abelzero {

enum class Parameter { t, z };

char parameter_name(Parameter p);

/// Polynomial in x whose coefficients are polynomials in a named parameter.
struct ParamPoly {
  BiPoly coeffs;
  Parameter parameter = Parameter::t;

  int degree_x() const { return coeffs.degree(); }
  friend bool operator==(const ParamPoly&, const ParamPoly&) = default;
};

/// f(x) - t for a univariate f.
ParamPoly fibre_family(const UniPoly& f, Parameter parameter = Parameter::t);

/// Specialize the parameter to a rational value.
UniPoly specialize(const ParamPoly& p, const Rational& value);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly poly_gcd(UniPoly a, UniPoly b);

/// Resultant with respect to x, a polynomial in the parameter.
UniPoly resultant_x(const ParamPoly& a, const ParamPoly& b);

/// Standard discriminant (-1)^{d(d-1)/2} Res_x(a, a_x) / lc(a). Requires a
/// constant leading x-coefficient. Note that the product over ordered root
/// pairs prod_{i != j}(x_i - x_j) equals lc^{2d-2} (-1)^{d(d-1)/2} times this.
UniPoly discriminant(const ParamPoly& a);
Rational discriminant(const UniPoly& a);

struct Factor {
  UniPoly poly;
  int multiplicity = 1;
  friend bool operator==(const Factor&, const Factor&) = default;
};

/// Yun's algorithm: monic, pairwise coprime, squarefree factors; the product of
/// factor^multiplicity equals a up to its leading coefficient. Sorted by multiplicity.
std::vector<Factor> squarefree_decomposition(const UniPoly& a);

/// Monic squarefree part.
UniPoly squarefree_part(const UniPoly& a);

struct Factorization {
  Rational unit;                 // a = unit * prod factors^multiplicity
  std::vector<Factor> factors;   // monic irreducible over Q
};

/// Complete factorization over Q (modular factorization + Hensel lifting + recombination).
Factorization factor_rationals(const UniPoly& a);

bool is_irreducible(const UniPoly& a);

/// Expand by repeated division so that poly = sum_j q_j g^j with deg q_j < deg g.
std::vector<UniPoly> gadic_expand(const UniPoly& poly, const UniPoly& g);

/// Polynomial in the versal parameters a_1..a_d (weight(a_i) = i), sparse.
class VersalPoly {
 public:
  using Exponents = std::vector<int>;  // exponent of a_1 ... a_d

  explicit VersalPoly(int d = 0) : d_(d) {}
  static VersalPoly variable(int d, int i);  // a_i, 1-based
  static VersalPoly constant(int d, const Rational& c);

  int degree_d() const { return d_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add_term(const Exponents& e, const Rational& c);

  /// True when every monomial has weighted degree w.
  bool is_weighted_homogeneous(int w) const;
  Rational evaluate(const std::vector<Rational>& a) const;
  std::string to_string() const;

  friend VersalPoly operator+(const VersalPoly& a, const VersalPoly& b);
  friend VersalPoly operator*(const VersalPoly& a, const VersalPoly& b);
  friend bool operator==(const VersalPoly&, const VersalPoly&) = default;

 private:
  int d_;
  std::map<Exponents, Rational> terms_;
};

/// Coefficients p_1..p_{d-1} (index i-1) with x^m = sum p_i(a) x^i modulo
/// f = x^d - a_1 x^{d-1} - ... - a_d and modulo constants.
std::vector<VersalPoly> versal_reduce(int m, int d);

// Primitive-PRS helpers over Q[t][x].
UniPoly content(const BiPoly& p);
BiPoly primitive_part(const BiPoly& p);
/// gcd over Q(t)[x], returned primitive with a monic content-free normalization.
BiPoly bivariate_gcd(const BiPoly& a, const BiPoly& b);
BiPoly derivative_outer(const BiPoly& p);
BiPoly derivative_inner(const BiPoly& p);

}  // namespace abelzero
