#pragma once

// The star product omega*f = prod (x - omega(x_i)) over the roots of f, its
// prime-power structure, contraction polynomials, the identical-vanishing
// decision for families of simple cycles and the square of R_omega.

#include <optional>
#include <string>
#include <vector>

#include "abelzero/algebra.hpp"

namespace abelzero {

/// Characteristic polynomial of multiplication by omega on Q[x]/(f); f monic.
UniPoly star(const UniPoly& omega, const UniPoly& f);

/// omega * (f - t), monic in x with coefficients in Q[t].
ParamPoly star_family(const UniPoly& omega, const UniPoly& f);

struct IdentityReport {
  bool ok = true;
  std::string failure;  // first violated identity, empty when ok
};

/// omega1*(omega2*f1) = (omega1 o omega2)*f1, omega1*(f1 f2) = (omega1*f1)(omega1*f2),
/// and f1 | (omega1*f1) o omega1.
IdentityReport star_identity_check(const UniPoly& omega1, const UniPoly& omega2, const UniPoly& f1, const UniPoly& f2);

struct PrimePower {
  UniPoly g;  // monic irreducible
  int k = 1;  // omega*f == g^k
};

/// f must be monic and irreducible over Q.
PrimePower prime_power_structure(const UniPoly& f, const UniPoly& omega);

struct StarComponent {
  UniPoly f;        // irreducible factor of the input
  int alpha = 1;    // its multiplicity
  PrimePower star;  // omega * f_i = g_i^{k_i}
};

struct StarStructure {
  UniPoly f;
  UniPoly omega;
  std::vector<StarComponent> components;

  /// Some simple cycle integrates omega to zero: some k_i >= 2 or two components share g_i.
  bool has_vanishing_cycle() const;
};

StarStructure star_structure(const UniPoly& f, const UniPoly& omega);

/// Contraction polynomial g with deg g < deg f and f | g o omega, or nullopt
/// when no simple cycle of {f = 0} integrates omega to zero.
std::optional<UniPoly> contraction(const UniPoly& f, const UniPoly& omega);

struct VanishCertificate {
  ParamPoly g;                // squarefree part of omega*(f - t), monic in x
  int degree_x = 0;
  int degree_f = 0;
  std::optional<UniPoly> p;   // omega == p(f) when degree_x == 1
};

/// nullopt means the integral over every continuous family of simple cycles is not identically zero.
std::optional<VanishCertificate> vanish_identically(const UniPoly& f, const UniPoly& omega);

/// Substitute x -> omega(x), t -> f(x).
UniPoly substitute(const ParamPoly& g, const UniPoly& omega, const UniPoly& f);

struct ROmegaSquared {
  bool identically_zero = false;
  UniPoly r_squared;   // disc(omega*(f-t)) / disc(f-t)
  UniPoly r;           // r_squared == constant * r^2
  Rational constant{1};
};

ROmegaSquared r_omega_squared(const UniPoly& f, const UniPoly& omega);

/// Exact square root in Q[t] when one exists.
std::optional<UniPoly> polynomial_sqrt(const UniPoly& p);

}  // namespace abelzero
