#include <random>

#include "abelzero/starfield.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace abelzero;
using oracle::P;
using oracle::PP;
using oracle::T;

namespace {

// Numeric oracle: coefficients of prod (x - omega(x_i)) from companion roots of f.
std::vector<Complex> star_numeric(const UniPoly& omega, const UniPoly& f) {
  std::vector<Complex> c{1.0};
  for (const Complex& r : oracle::companion_roots(f)) {
    const Complex w = oracle::eval(omega, r);
    std::vector<Complex> next(c.size() + 1, 0.0);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j + 1] += c[j];
      next[j] -= c[j] * w;
    }
    c = next;
  }
  return c;
}

UniPoly random_irreducible(std::mt19937_64& rng, int degree, int height) {
  for (;;) {
    UniPoly f = oracle::random_poly(rng, degree, height, true);
    if (!oracle::has_integer_factor(f)) return f;
  }
}

// Some pair of distinct roots of f has omega(x_i) == omega(x_j) numerically.
bool numeric_vanishing_simple_cycle(const UniPoly& f, const UniPoly& omega) {
  const std::vector<Complex> r = oracle::companion_roots(f);
  for (std::size_t i = 0; i < r.size(); ++i)
    for (std::size_t j = i + 1; j < r.size(); ++j)
      if (std::abs(r[i] - r[j]) > 1e-6 && std::abs(oracle::eval(omega, r[i]) - oracle::eval(omega, r[j])) < 1e-7)
        return true;
  return false;
}

}  // namespace

TEST_CASE("star examples") {
  const UniPoly f = P("x^3 - 2*x + 5");
  CHECK(star(P("x"), f) == f);
  CHECK(star(P("x^2"), P("x^2 - 1")) == P("(x - 1)^2"));
  CHECK(star(P("x^2"), P("x^3 - 2")) == P("x^3 - 4"));
  CHECK(star(f, f) == P("x^3"));
  CHECK_THROWS_AS(star(P("x"), P("2*x^2 + 1")), std::domain_error);
  CHECK_THROWS_AS(star(P("x"), P("3")), std::domain_error);
}

TEST_CASE("star family examples") {
  CHECK(star_family(P("x^2"), P("x^4 - x^2")).coeffs == PP("(x^2 - x - t)^2").coeffs);
  const UniPoly f = P("x^3 - 2*x + 5");
  CHECK(star_family(P("x"), f).coeffs == PP("x^3 - 2*x + 5 - t").coeffs);
  CHECK(star_family(P("x^3"), P("x^2")).coeffs == PP("x^2 - t^3").coeffs);
  // Specialization at rational t agrees with star of the shifted polynomial.
  std::mt19937_64 rng(5);
  for (int k = 0; k < 20; ++k) {
    UniPoly g = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 4), 4, true);
    UniPoly w = oracle::random_rational_poly(rng, 1 + static_cast<int>(rng() % 3), 3);
    const ParamPoly fam = star_family(w, g);
    const Rational r = make_rational(static_cast<long>(rng() % 9) - 4, static_cast<long>(rng() % 3) + 1);
    CHECK(specialize(fam, r) == star(w, g - UniPoly::constant(r)));
  }
}

TEST_CASE("star multiset property") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    const int d = 1 + static_cast<int>(rng() % 8);
    UniPoly f = oracle::random_poly(rng, d, 3, true);
    UniPoly w = oracle::random_poly(rng, static_cast<int>(rng() % 4), 2, false);
    const UniPoly s = star(w, f);
    REQUIRE(s.degree() == d);
    CHECK(s.leading() == 1);
    // Roots of star(w, f) match {w(x_i)}.
    std::vector<Complex> images;
    for (const Complex& r : oracle::companion_roots(f)) images.push_back(oracle::eval(w, r));
    double scale = 1.0;
    for (const Complex& v : images) scale = std::max(scale, std::abs(v));
    // Compare coefficients, which is well conditioned even with repeated roots.
    const std::vector<Complex> c = star_numeric(w, f);
    for (std::size_t i = 0; i < c.size(); ++i)
      CHECK(std::abs(c[i] - s[i].get_d()) < 1e-9 * std::pow(scale, static_cast<double>(d - i)) * 1e3);
    if (sgn(discriminant(s)) != 0) {
      CHECK(oracle::same_multiset(oracle::companion_roots(s), images, 1e-9 * scale * 1e2));
    }
  }
}

TEST_CASE("star identities") {
  CHECK(star_identity_check(P("x^2 + 1"), P("x"), P("x^3 - x + 1"), P("x^2 + 2")).ok);
  CHECK((compose(star(P("x^2"), P("x^2 - 1")), P("x^2")) == P("(x^2 - 1)^2")));
  std::mt19937_64 rng(17);
  int checked = 0;
  for (int k = 0; k < 200; ++k) {
    UniPoly w1 = oracle::random_rational_poly(rng, static_cast<int>(rng() % 4), 3);
    UniPoly w2 = oracle::random_rational_poly(rng, static_cast<int>(rng() % 4), 3);
    UniPoly f1 = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 4, true);
    UniPoly f2 = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 4, true);
    const IdentityReport r = star_identity_check(w1, w2, f1, f2);
    CHECK_MESSAGE(r.ok, r.failure);
    ++checked;
  }
  CHECK(checked == 200);
}

TEST_CASE("prime power structure examples") {
  PrimePower p = prime_power_structure(P("x^2 + 1"), P("x^2"));
  CHECK(p.g == P("x + 1"));
  CHECK(p.k == 2);
  p = prime_power_structure(P("x^3 - 2"), P("x^2"));
  CHECK(p.g == P("x^3 - 4"));
  CHECK(p.k == 1);
  p = prime_power_structure(P("x^2 - 2"), P("x + 5"));
  CHECK(p.g == P("x^2 - 10*x + 23"));
  CHECK(p.k == 1);
  CHECK_THROWS_AS(prime_power_structure(P("x^2 - 1"), P("x")), std::domain_error);
}

TEST_CASE("prime power structure on irreducible f") {
  std::mt19937_64 rng(29);
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + static_cast<int>(rng() % 5);
    UniPoly f = random_irreducible(rng, d, 5);
    // Even omegas on even-symmetric f produce k >= 2 regularly.
    UniPoly w = (k % 3 == 0) ? P("x^2") : oracle::random_poly(rng, 1 + static_cast<int>(rng() % 3), 3, false);
    if (k % 3 == 0 && d % 2 == 0) {
      std::vector<Rational> c(static_cast<std::size_t>(d + 1));
      for (int i = 0; i <= d; i += 2) c[static_cast<std::size_t>(i)] = f[static_cast<std::size_t>(i)];
      c[static_cast<std::size_t>(d)] = 1;
      UniPoly even(std::move(c));
      if (!oracle::has_integer_factor(even)) f = even;
    }
    const PrimePower pp = prime_power_structure(f, w);
    CHECK(pp.k * pp.g.degree() == d);
    CHECK(pow(pp.g, static_cast<unsigned>(pp.k)) == star(w, f));
    CHECK(pp.g.leading() == 1);
    if (pp.g.leading() == 1 && pp.g.degree() >= 1) {
      // monic integer-coefficient check only applies when g has integer coefficients
      bool integral = true;
      for (const Rational& c : pp.g.coefficients()) integral = integral && c.get_den() == 1;
      if (integral) CHECK(!oracle::has_integer_factor(pp.g));
    }
    CHECK((pp.k >= 2) == numeric_vanishing_simple_cycle(f, w));
  }
}

TEST_CASE("prime degree never vanishes") {
  std::mt19937_64 rng(31);
  int count = 0;
  for (int m : {3, 5, 7})
    for (int k = 0; k < 10; ++k) {
      UniPoly f = random_irreducible(rng, m, 4);
      UniPoly w = oracle::random_poly(rng, 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1)), 4, false);
      const UniPoly s = star(w, f);
      CHECK(poly_gcd(s, derivative(s)).degree() == 0);
      CHECK(!star_structure(f, w).has_vanishing_cycle());
      CHECK(!contraction(f, w).has_value());
      ++count;
    }
  CHECK(count == 30);
}

TEST_CASE("contraction examples") {
  auto g = contraction(P("(x^2 + 1)*(x^2 + 4)"), P("x^2"));
  REQUIRE(g.has_value());
  CHECK(*g == P("(x + 1)*(x + 4)"));
  CHECK(!contraction(P("x^2 - 2"), P("x")).has_value());
  g = contraction(P("x^4 - x^2"), P("x^2"));
  REQUIRE(g.has_value());
  CHECK(*g == P("x^2*(x - 1)"));
  CHECK((compose(*g, P("x^2")) % P("x^4 - x^2")).is_zero());
}

TEST_CASE("contraction on products with shared images") {
  std::mt19937_64 rng(37);
  for (int k = 0; k < 20; ++k) {
    // f = h(x) * h(-x) with omega = x^2: the two factors share an image.
    UniPoly h = random_irreducible(rng, 1 + static_cast<int>(rng() % 3), 4);
    UniPoly hm = compose(h, P("-x"));
    if (h.degree() % 2 == 1) hm = -hm;
    if (hm == h) continue;
    const UniPoly f = h * hm;
    auto g = contraction(f, P("x^2"));
    REQUIRE(g.has_value());
    CHECK(g->degree() < f.degree());
    CHECK((compose(*g, P("x^2")) % f).is_zero());
    CHECK(numeric_vanishing_simple_cycle(f, P("x^2")));
  }
}

TEST_CASE("vanish identically examples") {
  auto c = vanish_identically(P("x^4 - x^2"), P("x^2"));
  REQUIRE(c.has_value());
  CHECK(c->g.coeffs == PP("x^2 - x - t").coeffs);
  CHECK(c->degree_x == 2);
  CHECK(substitute(c->g, P("x^2"), P("x^4 - x^2")).is_zero());
  CHECK(!c->p.has_value());

  CHECK(!vanish_identically(P("x^3 - x"), P("x")).has_value());

  const UniPoly f = P("x^3 + x + 1");
  c = vanish_identically(f, compose(P("x^3 - 2*x"), f));
  REQUIRE(c.has_value());
  CHECK(c->degree_x == 1);
  CHECK(c->g.coeffs == PP("x - t^3 + 2*t").coeffs);
  REQUIRE(c->p.has_value());
  CHECK(*c->p == T("t^3 - 2*t"));

  CHECK_THROWS_AS(vanish_identically(P("x^3"), P("5")), std::domain_error);
  CHECK_THROWS_AS(vanish_identically(P("x"), P("x^2")), std::domain_error);
}

TEST_CASE("vanish identically recovers p(f)") {
  std::mt19937_64 rng(41);
  for (int k = 0; k < 15; ++k) {
    UniPoly f = oracle::random_poly(rng, 2 + static_cast<int>(rng() % 3), 3, true);
    UniPoly p = oracle::random_rational_poly(rng, 1 + static_cast<int>(rng() % 2), 3);
    auto c = vanish_identically(f, compose(p, f));
    REQUIRE(c.has_value());
    CHECK(c->degree_x == 1);
    REQUIRE(c->p.has_value());
    CHECK(*c->p == p);
  }
}

TEST_CASE("vanish identically non-vanishing instances") {
  std::mt19937_64 rng(43);
  int count = 0;
  while (count < 50) {
    const int d = 2 + static_cast<int>(rng() % 4);
    UniPoly f = oracle::random_poly(rng, d, 4, true);
    UniPoly w = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 4), 4, false);
    // Numeric oracle at a generic t: no two fibre points share a value of omega.
    const Complex t0(0.37, 0.61);
    const std::vector<Complex> r = oracle::fibre_roots(f, t0);
    bool shared = false;
    for (std::size_t i = 0; i < r.size(); ++i)
      for (std::size_t j = i + 1; j < r.size(); ++j)
        if (std::abs(oracle::eval(w, r[i]) - oracle::eval(w, r[j])) < 1e-7) shared = true;
    auto c = vanish_identically(f, w);
    CHECK(c.has_value() == shared);
    if (!shared) ++count;
    if (c) {
      CHECK(substitute(c->g, w, f).is_zero());
      CHECK(d % c->degree_x == 0);
    }
  }
}

TEST_CASE("polynomial square root") {
  CHECK(polynomial_sqrt(T("t^2 + 2*t + 1")) == std::optional<UniPoly>(T("t + 1")));
  CHECK(polynomial_sqrt(T("4*t^4 - 4*t^2 + 1")) == std::optional<UniPoly>(T("2*t^2 - 1")));
  CHECK(polynomial_sqrt(T("1/9")) == std::optional<UniPoly>(T("1/3")));
  CHECK(!polynomial_sqrt(T("t^2 + 1")).has_value());
  CHECK(!polynomial_sqrt(T("t^3")).has_value());
  CHECK(!polynomial_sqrt(T("2")).has_value());
  CHECK(!polynomial_sqrt(T("-t^2")).has_value());
  std::mt19937_64 rng(47);
  for (int k = 0; k < 30; ++k) {
    UniPoly s = oracle::random_rational_poly(rng, static_cast<int>(rng() % 6), 7);
    auto r = polynomial_sqrt(s * s);
    REQUIRE(r.has_value());
    CHECK((*r == s || *r == -s));
  }
}

TEST_CASE("R_omega squared examples") {
  ROmegaSquared r = r_omega_squared(P("x^2"), P("x^3"));
  CHECK(!r.identically_zero);
  CHECK(r.r_squared == T("t^2"));
  CHECK(r.r == T("t"));
  CHECK(r.constant == 1);

  const UniPoly f = P("x^4 - 3*x^2 + x");
  r = r_omega_squared(f, P("x"));
  CHECK(r.r_squared == T("1"));
  CHECK(r.r == T("1"));

  CHECK(r_omega_squared(P("x^4 - x^2"), P("x^2")).identically_zero);
  CHECK_THROWS_AS(r_omega_squared(P("x"), P("x^2")), std::domain_error);
}

TEST_CASE("R_omega squared is a square with the degree bound") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 50; ++k) {
    const int d = 2 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 4);
    UniPoly f = oracle::random_poly(rng, d, 3, true);
    UniPoly w = oracle::random_poly(rng, n, 3, false);
    if (discriminant(fibre_family(f)).is_zero()) continue;
    ROmegaSquared r = r_omega_squared(f, w);
    if (r.identically_zero) continue;
    CHECK(r.r_squared == r.constant * r.r * r.r);
    CHECK(2 * r.r.degree() <= (n - 1) * (d - 1));
    // Numeric oracle: R_omega^2 = prod_{i<j} ((w(x_i) - w(x_j)) / (x_i - x_j))^2 at a sample t.
    const Complex t0(0.41, -0.23);
    const std::vector<Complex> x = oracle::fibre_roots(f, t0);
    Complex prod = 1;
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = i + 1; j < x.size(); ++j) {
        const Complex q = (oracle::eval(w, x[i]) - oracle::eval(w, x[j])) / (x[i] - x[j]);
        prod *= q * q;
      }
    const Complex exact = oracle::eval(r.r_squared, t0);
    CHECK(std::abs(prod - exact) < 1e-6 * std::max(1.0, std::abs(exact)));
  }
}
