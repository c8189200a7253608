#include "abelzero/starfield.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "abelzero/matrix.hpp"

namespace abelzero {
namespace {

template <typename Ring>
Polynomial<Ring> multiplication_charpoly(const Polynomial<Ring>& omega, const Polynomial<Ring>& f) {
  const std::size_t d = static_cast<std::size_t>(f.degree());
  DenseMatrix<Ring> m(d, d);
  Polynomial<Ring> col = omega % f;
  const Polynomial<Ring> x = Polynomial<Ring>::variable();
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m(i, j) = col.coeff(i);
    col = (col * x) % f;
  }
  return charpoly(m);
}

void require_monic(const UniPoly& f) {
  if (f.degree() < 1) throw std::domain_error("star product needs deg f >= 1");
  if (f.leading() != 1) throw std::domain_error("star product needs a monic f");
}

std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  Rational c = q;
  c.canonicalize();
  if (!mpz_perfect_square_p(c.get_num_mpz_t()) || !mpz_perfect_square_p(c.get_den_mpz_t())) return std::nullopt;
  Integer n = sqrt(Integer(c.get_num())), d = sqrt(Integer(c.get_den()));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

}  // namespace

UniPoly star(const UniPoly& omega, const UniPoly& f) {
  require_monic(f);
  return multiplication_charpoly(omega, f);
}

ParamPoly star_family(const UniPoly& omega, const UniPoly& f) {
  require_monic(f);
  const ParamPoly fam = fibre_family(f);
  return ParamPoly{multiplication_charpoly(lift_coefficients(omega), fam.coeffs), Parameter::t};
}

IdentityReport star_identity_check(const UniPoly& omega1, const UniPoly& omega2, const UniPoly& f1, const UniPoly& f2) {
  IdentityReport r;
  if (star(omega1, star(omega2, f1)) != star(compose(omega1, omega2), f1)) {
    r.ok = false;
    r.failure = "composition identity";
    return r;
  }
  if (star(omega1, f1 * f2) != star(omega1, f1) * star(omega1, f2)) {
    r.ok = false;
    r.failure = "product identity";
    return r;
  }
  if (!(compose(star(omega1, f1), omega1) % f1).is_zero()) {
    r.ok = false;
    r.failure = "divisibility f | (omega*f) o omega";
  }
  return r;
}

PrimePower prime_power_structure(const UniPoly& f, const UniPoly& omega) {
  require_monic(f);
  if (!is_irreducible(f)) throw std::domain_error("prime power structure needs an irreducible f");
  const std::vector<Factor> parts = squarefree_decomposition(star(omega, f));
  if (parts.size() != 1) throw std::logic_error("star of an irreducible polynomial is not a prime power");
  PrimePower out{parts[0].poly, parts[0].multiplicity};
  if (!is_irreducible(out.g)) throw std::logic_error("star of an irreducible polynomial has a reducible base");
  if (out.k * out.g.degree() != f.degree()) throw std::logic_error("prime power degree mismatch");
  return out;
}

bool StarStructure::has_vanishing_cycle() const {
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (components[i].star.k >= 2) return true;
    for (std::size_t j = i + 1; j < components.size(); ++j)
      if (components[i].star.g == components[j].star.g) return true;
  }
  return false;
}

StarStructure star_structure(const UniPoly& f, const UniPoly& omega) {
  require_monic(f);
  StarStructure s{f, omega, {}};
  for (const Factor& fac : factor_rationals(f).factors)
    s.components.push_back({fac.poly, fac.multiplicity, prime_power_structure(fac.poly, omega)});
  return s;
}

std::optional<UniPoly> contraction(const UniPoly& f, const UniPoly& omega) {
  const StarStructure s = star_structure(f, omega);
  if (!s.has_vanishing_cycle()) return std::nullopt;
  // Each distinct g_i once, raised to the largest multiplicity among the factors mapping to it.
  std::vector<std::pair<UniPoly, int>> distinct;
  for (const StarComponent& c : s.components) {
    auto it = std::find_if(distinct.begin(), distinct.end(), [&](const auto& e) { return e.first == c.star.g; });
    if (it == distinct.end())
      distinct.emplace_back(c.star.g, c.alpha);
    else
      it->second = std::max(it->second, c.alpha);
  }
  UniPoly g = UniPoly::constant(Rational(1));
  for (const auto& [gi, a] : distinct) g = g * pow(gi, static_cast<unsigned>(a));
  if (g.degree() >= f.degree()) throw std::logic_error("contraction did not lower the degree");
  if (!(compose(g, omega) % f).is_zero()) throw std::logic_error("contraction fails f | g o omega");
  for (const auto& [gi, a] : distinct) {
    const bool divides = std::any_of(s.components.begin(), s.components.end(),
                                     [&](const StarComponent& c) { return c.f.degree() % gi.degree() == 0; });
    if (!divides) throw std::logic_error("contraction component degree divides no factor degree");
  }
  return g;
}

UniPoly substitute(const ParamPoly& g, const UniPoly& omega, const UniPoly& f) {
  UniPoly acc;
  for (std::size_t i = g.coeffs.size(); i-- > 0;) acc = acc * omega + compose(g.coeffs[i], f);
  return acc;
}

std::optional<VanishCertificate> vanish_identically(const UniPoly& f, const UniPoly& omega) {
  if (f.degree() < 2) throw std::domain_error("vanishing test needs deg f >= 2");
  if (omega.degree() < 1) throw std::domain_error("vanishing test needs a nonconstant omega");
  const ParamPoly w = star_family(omega, f);
  const BiPoly common = bivariate_gcd(w.coeffs, derivative_outer(w.coeffs));
  if (common.degree() < 1) return std::nullopt;
  BiPoly g = exact_div(w.coeffs, common);
  const Rational lc = g.leading().leading();
  g = UniPoly::constant(Rational(1 / lc)) * g;
  VanishCertificate cert{ParamPoly{g, Parameter::t}, g.degree(), f.degree(), std::nullopt};
  if (f.degree() % cert.degree_x != 0 || cert.degree_x >= f.degree())
    throw std::logic_error("vanishing certificate violates the degree conditions");
  if (!substitute(cert.g, omega, f).is_zero()) throw std::logic_error("vanishing certificate: g(omega, f) != 0");
  if (cert.degree_x == 1) cert.p = -g.coeff(0);
  return cert;
}

std::optional<UniPoly> polynomial_sqrt(const UniPoly& p) {
  if (p.is_zero()) return UniPoly{};
  if (p.degree() % 2 != 0) return std::nullopt;
  const std::optional<Rational> top = rational_sqrt(p.leading());
  if (!top) return std::nullopt;
  const int k = p.degree() / 2;
  std::vector<Rational> s(static_cast<std::size_t>(k + 1));
  s[static_cast<std::size_t>(k)] = *top;
  for (int m = 1; m <= k; ++m) {
    Rational acc = p.coeff(static_cast<std::size_t>(2 * k - m));
    for (int i = k - m + 1; i <= k - 1; ++i) {
      const int j = 2 * k - m - i;
      if (j > k - m && j < k) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(j)];
    }
    s[static_cast<std::size_t>(k - m)] = acc / (2 * *top);
  }
  UniPoly r(std::move(s));
  if (r * r != p) return std::nullopt;
  return r;
}

ROmegaSquared r_omega_squared(const UniPoly& f, const UniPoly& omega) {
  if (f.degree() < 2) throw std::domain_error("R_omega needs deg f >= 2");
  require_monic(f);
  const UniPoly disc_f = discriminant(fibre_family(f));
  if (disc_f.is_zero()) throw std::domain_error("degenerate f: disc(f - t) vanishes identically");
  const UniPoly disc_w = discriminant(star_family(omega, f));
  ROmegaSquared out;
  if (disc_w.is_zero()) {
    out.identically_zero = true;
    return out;
  }
  auto [q, r] = divmod(disc_w, disc_f);
  if (!r.is_zero()) throw std::logic_error("discriminant ratio is not a polynomial");
  out.r_squared = q;
  const int n = std::max(omega.degree(), 1);
  if (q.degree() > (n - 1) * (f.degree() - 1)) throw std::logic_error("R_omega^2 exceeds the degree bound");
  if (auto root = polynomial_sqrt(q)) {
    out.r = *root;
    if (sgn(out.r.leading()) < 0) out.r = -out.r;
    return out;
  }
  out.constant = q.leading();
  if (auto root = polynomial_sqrt(monic(q))) {
    out.r = *root;
    return out;
  }
  throw std::logic_error("R_omega^2 is not a square up to a constant");
}

}  // namespace abelzero
