// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>

#include "abelzero/brieskorn.hpp"
#include "abelzero/gaussmanin.hpp"
#include "abelzero/io.hpp"
#include "abelzero/starfield.hpp"
#include "abelzero/zeroloci.hpp"
#include "oracles.hpp"

using namespace abelzero;
using oracle::P;
using oracle::PP;
using oracle::T;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Checker {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok && out_.pass) out_.detail = "first failure: " + what;
    if (!ok) out_.pass = false;
  }
  void note(const std::string& s) {
    if (out_.pass) out_.detail += (out_.detail.empty() ? "" : "; ") + s;
  }
  Outcome result() const { return out_; }

 private:
  Outcome out_;
};

DenseMatrix<UniPoly> matrix2(const UniPoly& a, const UniPoly& b, const UniPoly& c, const UniPoly& d) {
  DenseMatrix<UniPoly> m(2, 2);
  m(0, 0) = a;
  m(0, 1) = b;
  m(1, 0) = c;
  m(1, 1) = d;
  return m;
}

// 1. Weierstrass Picard-Fuchs matrices, exact.
Outcome criterion1() {
  Checker c;
  const std::vector<std::pair<std::string, std::string>> pairs{
      {"z", "1"}, {"1", "z"}, {"z", "z^2"}, {"z^2 + 1", "z"}, {"2*z - 1", "z^3 + z"}};
  double worst = 0;
  for (const auto& [g2s, g3s] : pairs) {
    const auto t0 = std::chrono::steady_clock::now();
    const UniPoly g2 = T(g2s), g3 = T(g3s);
    const UniPoly delta = g2 * g2 * g2 - Rational(27) * g3 * g3;
    const UniPoly dd = derivative(delta);
    const UniPoly sd = Rational(3) * g3 * derivative(g2) - Rational(2) * g2 * derivative(g3);
    const PicardFuchsSystem s = gm_connection(PP("4*x^3 - (" + g2s + ")*x - (" + g3s + ")", Parameter::z));
    const PicardFuchsSystem e = eta_normalized_system(s);
    c.require(same_system(s.A, s.denom,
                          matrix2(make_rational(1, 6) * dd, Rational(-3) * sd, make_rational(-1, 2) * g2 * sd,
                                  make_rational(1, 3) * dd),
                          delta),
              "connection for (" + g2s + ", " + g3s + ")");
    c.require(same_system(e.A, e.denom,
                          matrix2(make_rational(-1, 12) * dd, Rational(-3) * sd, make_rational(-1, 2) * g2 * sd,
                                  make_rational(1, 12) * dd),
                          delta),
              "eta system for (" + g2s + ", " + g3s + ")");
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    worst = std::max(worst, secs);
    c.require(secs < 5, "runtime for (" + g2s + ", " + g3s + ")");
  }
  std::ostringstream os;
  os << "5 pairs exact, slowest " << worst << " s";
  c.note(os.str());
  return c.result();
}

// 2. I' = M I by central differences on roots found by Aberth and Newton.
Outcome criterion2() {
  Checker c;
  std::mt19937_64 rng(2002);
  int families = 0, points = 0;
  double worst = 0;
  while (families < 20) {
    const int d = 2 + static_cast<int>(rng() % 4);
    BiPoly fam = lift_coefficients(oracle::random_poly(rng, d, 3, true));
    for (int i = 0; i < d; ++i)
      fam += BiPoly::monomial(oracle::random_poly(rng, static_cast<int>(rng() % 3), 2, false), static_cast<std::size_t>(i));
    const ParamPoly pf{fam, Parameter::z};
    if (discriminant(pf).degree() < 1) continue;
    const PicardFuchsSystem sys = gm_connection(pf);
    ++families;
    const std::size_t n = sys.size();
    auto roots_at = [&](Complex z) {
      CVec cf;
      for (const UniPoly& q : fam.coefficients()) cf.push_back(evaluate(q, z));
      CVec r = aberth_roots(cf);
      for (Complex& x : r)
        for (int it = 0; it < 3; ++it) {
          auto [v, dv] = horner2(cf, x);
          x -= v / dv;
        }
      return r;
    };
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    int taken = 0;
    while (taken < 10) {
      const Complex z0(u(rng), u(rng));
      if (std::abs(evaluate(sys.family_discriminant, z0)) < 1e-2) continue;
      ++taken;
      ++points;
      const CVec r0 = roots_at(z0);
      auto matched = [&](Complex z) {
        const CVec r = roots_at(z);
        CVec out;
        for (const Complex& x : r0)
          out.push_back(*std::min_element(r.begin(), r.end(),
                                          [&](Complex a, Complex b) { return std::abs(a - x) < std::abs(b - x); }));
        return out;
      };
      const double h = 1e-5;
      const CVec rp = matched(z0 + h), rm = matched(z0 - h), rp2 = matched(z0 + 2 * h), rm2 = matched(z0 - 2 * h);
      std::vector<Complex> I(n), dI(n);
      for (std::size_t m = 1; m <= n; ++m) {
        auto cyc = [&](const CVec& r) { return std::pow(r[0], static_cast<int>(m)) - std::pow(r[1], static_cast<int>(m)); };
        I[m - 1] = cyc(r0);
        dI[m - 1] = (-cyc(rp2) + 8.0 * cyc(rp) - 8.0 * cyc(rm) + cyc(rm2)) / (12 * h);
      }
      const std::vector<Complex> M = evaluate_system(sys, z0);
      double err = 0, norm = 0;
      for (std::size_t i = 0; i < n; ++i) {
        Complex mi = 0;
        for (std::size_t j = 0; j < n; ++j) mi += M[i * n + j] * I[j];
        err += std::norm(dI[i] - mi);
        norm += std::norm(I[i]);
      }
      const double rel = std::sqrt(err) / std::sqrt(norm);
      worst = std::max(worst, rel);
      c.require(rel < 1e-8, "family " + format_poly(pf));
    }
  }
  std::ostringstream os;
  os << families << " families, " << points << " points, worst relative residual " << worst;
  c.note(os.str());
  return c.result();
}

// Exact rank over Q by Gaussian elimination.
int rank_q(std::vector<std::vector<Rational>> rows) {
  int rank = 0;
  const std::size_t cols = rows.empty() ? 0 : rows[0].size();
  for (std::size_t col = 0; col < cols && rank < static_cast<int>(rows.size()); ++col) {
    std::size_t piv = static_cast<std::size_t>(rank);
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[static_cast<std::size_t>(rank)]);
    const auto& pr = rows[static_cast<std::size_t>(rank)];
    for (std::size_t r = static_cast<std::size_t>(rank) + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational q = rows[r][col] / pr[col];
      for (std::size_t k = col; k < cols; ++k) rows[r][k] -= q * pr[k];
    }
    ++rank;
  }
  return rank;
}

// 3. Bezout ceiling and winding agreement over a corpus, plus dim V_n.
Outcome criterion3() {
  Checker c;
  HarnessSpec spec;
  spec.m_lo = 2;
  spec.m_hi = 6;
  spec.n_lo = 1;
  spec.n_hi = 6;
  spec.height = 5;
  spec.instances = 100;
  spec.seed = 3003;
  spec.discs_per_instance = 3;
  const HarnessResult r = bound_harness(spec);
  c.require(r.quarantined.empty(), "quarantined instance: " + (r.quarantined.empty() ? "" : r.quarantined[0]));
  std::set<int> instances;
  for (const HarnessRow& row : r.rows) {
    instances.insert(row.instance);
    if (row.note == "identically zero") continue;
    c.require(Rational(row.matched) <= row.bezout_bound, "Bezout bound for " + row.f + ", " + row.omega);
    c.require(row.winding == row.matched, "winding for " + row.f + ", " + row.omega + " on " + row.domain);
  }
  c.require(instances.size() == 100, "instances covered");

  // dim V_n from the rank of the classes of 1, x, ..., x^n modulo Q[f].
  std::mt19937_64 rng(33);
  int checked = 0;
  for (int m = 2; m <= 8; ++m) {
    const UniPoly f = oracle::random_poly(rng, m, 3, true);
    for (int n = 1; n <= 20; ++n) {
      std::vector<std::vector<Rational>> rows;
      const std::size_t width = static_cast<std::size_t>((m - 1) * (n / m + 2));
      for (int k = 0; k <= n; ++k) {
        const BrieskornClass bc = normal_form(UniPoly::monomial(Rational(1), static_cast<std::size_t>(k)), f);
        std::vector<Rational> row(width);
        for (std::size_t i = 0; i < bc.c.size(); ++i)
          for (std::size_t j = 0; j < bc.c[i].size(); ++j) {
            const std::size_t idx = i * (width / static_cast<std::size_t>(m - 1)) + j;
            if (idx >= width) throw std::logic_error("coordinate width");
            row[idx] = bc.c[i][j];
          }
        rows.push_back(row);
      }
      const int expect = n - n / m;
      c.require(rank_q(rows) == expect, "rank for m=" + std::to_string(m) + " n=" + std::to_string(n));
      c.require(vn_dimension(m, n) == expect, "vn_dimension(" + std::to_string(m) + "," + std::to_string(n) + ")");
      ++checked;
    }
  }
  std::ostringstream os;
  os << r.rows.size() << " rows over 100 instances, max matched " << r.max_matched << "; dim V_n on " << checked
     << " (m, n)";
  c.note(os.str());
  return c.result();
}

// 4. Cubics with quadratic forms: at most one zero, and one is attained.
Outcome criterion4() {
  Checker c;
  HarnessSpec spec;
  spec.m_lo = spec.m_hi = 3;
  spec.n_lo = spec.n_hi = 2;
  spec.instances = 50;
  spec.seed = 4004;
  spec.discs_per_instance = 3;
  const HarnessResult r = bound_harness(spec);
  c.require(r.quarantined.empty(), "quarantined instance");
  c.require(r.failures == 0, "failing rows");
  int attained = 0;
  for (const HarnessRow& row : r.rows) {
    c.require(row.matched <= 1, "count above one for " + row.f);
    if (row.matched == 1) ++attained;
  }
  c.require(attained > 0, "no instance attains one zero");
  c.note(std::to_string(attained) + " rows attain the bound of 1 over 50 cubics");
  return c.result();
}

// Roots s < B of x^4 - x^2 = t on (-1/4, 0).
double small_root(double t) { return std::sqrt((1 - std::sqrt(1 + 4 * t)) / 2); }
double big_root(double t) { return std::sqrt((1 + std::sqrt(1 + 4 * t)) / 2); }

std::size_t nearest(const CVec& roots, Complex z) {
  std::size_t best = 0;
  for (std::size_t k = 1; k < roots.size(); ++k)
    if (std::abs(roots[k] - z) < std::abs(roots[best] - z)) best = k;
  return best;
}

UniPoly random_odd(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> coef(-8, 8);
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n; k += 2) v[static_cast<std::size_t>(k)] = make_rational(coef(rng), 4);
  if (v[static_cast<std::size_t>(n)] == 0) v[static_cast<std::size_t>(n)] = 1;
  return UniPoly(std::move(v));
}

// 5. The x^4 - x^2 suite.
Outcome criterion5() {
  Checker c;
  const UniPoly f = P("x^4 - x^2");
  const MonodromyRep rep = monodromy_rep(f);
  const Domain dom = Domain::interval(-0.25, 0);
  const DomainLabels labels(rep, dom);
  const double s0 = small_root(-0.125), b0 = big_root(-0.125);
  const CVec& ref = labels.anchor_roots();
  const std::size_t S = nearest(ref, s0), MS = nearest(ref, -s0), B = nearest(ref, b0), MB = nearest(ref, -b0);
  c.require(std::set<std::size_t>{S, MS, B, MB}.size() == 4, "labels at t = -1/8");
  const SimpleCycle vanishing{static_cast<int>(S), static_cast<int>(MS)};
  const SimpleCycle oval_same{static_cast<int>(S), static_cast<int>(B)};
  const SimpleCycle oval_opposite{static_cast<int>(S), static_cast<int>(MB)};

  // (a) even forms on the vanishing family, at complex sample points.
  double worst_a = 0;
  for (int k = 1; k <= 4; ++k) {
    const CVec w = to_cvec(UniPoly::monomial(Rational(1), static_cast<std::size_t>(2 * k)));
    for (int j = 0; j < 20; ++j) {
      const Complex t = -0.125 + 0.1 * std::polar(1.0, 0.3 + 2 * std::numbers::pi * j / 20);
      const double v = std::abs(cycle_integral(w, labels.roots_at(t), vanishing));
      worst_a = std::max(worst_a, v);
    }
  }
  c.require(worst_a < 1e-10, "(a) even forms");

  // (b) odd forms of degree n <= 7.
  std::mt19937_64 rng(5005);
  int forms = 0;
  for (int n = 1; n <= 7; n += 2)
    for (int trial = 0; trial < 6; ++trial) {
      const UniPoly w = random_odd(rng, n);
      const ZeroContext ctx = zero_context(f, w, rep, false);
      const int v = zeros_in_domain(f, w, vanishing, dom, rep, &ctx).zero_count_with_multiplicity();
      c.require(v <= (n + 1) / 2 - 1, "(b) vanishing family for " + format_poly(w));
      for (const SimpleCycle& cyc : {oval_same, oval_opposite}) {
        const int o = zeros_in_domain(f, w, cyc, dom, rep, &ctx).zero_count_with_multiplicity();
        c.require(o <= n - 1, "(b) oval family for " + format_poly(w));
      }
      ++forms;
    }

  // (c) x^3 - 3/4 x: on x^2 + y^2 = 1 with xy = -1/4, x^2 = (1 + sqrt(3)/2)/2 and t = -(xy)^2.
  const UniPoly w3 = P("x^3 - 3/4*x");
  const double x2 = (1 + std::sqrt(3.0) / 2) / 2, y2 = 1 - x2;
  const double t_oracle = x2 * x2 - x2;
  c.require(std::abs(t_oracle + std::sqrt(x2 * y2) * std::sqrt(x2 * y2)) < 1e-15, "(c) oracle consistency");
  const ZeroReport zc = zeros_in_domain(f, w3, oval_opposite, dom, rep);
  c.require(zc.zeros.size() == 1 && zc.zero_count_with_multiplicity() == 1, "(c) exactly one zero");
  if (zc.zeros.size() == 1) c.require(std::abs(zc.zeros[0].t - t_oracle) < 1e-10, "(c) zero at -1/16");
  c.require(zc.sign_changes == 1, "(c) one sign change on the interval");

  // (d) W^2 for the vanishing cycle and the cycle picked up around -1/4.
  const CVec base_ref = roots_at(rep, -0.125);
  const std::size_t bs = nearest(base_ref, s0), bms = nearest(base_ref, -s0), bb = nearest(base_ref, b0),
                    bmb = nearest(base_ref, -b0);
  std::vector<int> gamma(4, 0), delta(4, 0);
  gamma[bs] = 1;
  gamma[bms] = -1;
  delta[bb] += 1;
  delta[bs] -= 1;
  delta[bmb] -= 1;
  delta[bms] += 1;
  int nonzero_w = 0;
  for (int n = 1; n <= 7; ++n) {
    const UniPoly w = oracle::random_poly(rng, n, 4, true);
    const CVec w2 = w_squared(rep, w, gamma, delta, 12);
    double scale = 0;
    for (const Complex& z : w2) scale = std::max(scale, std::abs(z));
    if (scale < 1e-9) continue;  // omega = a x + even part gives W = 0
    ++nonzero_w;
    c.require(numeric_degree(w2, 1e-9) <= (n + 1) / 2, "(d) degree of W^2 for " + format_poly(w));
    auto at = [&](Complex t) {
      Complex acc{};
      for (std::size_t i = w2.size(); i-- > 0;) acc = acc * t + w2[i];
      return acc;
    };
    c.require(std::abs(at(0.0)) < 1e-8 * scale, "(d) W^2(0)");
    c.require(std::abs(at(-0.25)) < 1e-8 * scale, "(d) W^2(-1/4)");
  }
  c.require(nonzero_w >= 4, "(d) too few nonzero W");
  std::ostringstream os;
  os << "(a) max " << worst_a << "; (b) " << forms << " odd forms; (c) zero at " << (zc.zeros.empty() ? 0.0 : zc.zeros[0].t.real())
     << "; (d) " << nonzero_w << " W^2 checked";
  c.note(os.str());
  return c.result();
}

bool squarefree(const UniPoly& p) { return poly_gcd(p, derivative(p)).degree() == 0; }

UniPoly random_irreducible(std::mt19937_64& rng, int degree) {
  for (;;) {
    const UniPoly f = oracle::random_poly(rng, degree, 6, true);
    if (!oracle::has_integer_factor(f)) return f;
  }
}

// 6. Star identities, prime-power structure, prime degree.
Outcome criterion6() {
  Checker c;
  std::mt19937_64 rng(6006);
  for (int k = 0; k < 200; ++k) {
    const UniPoly w1 = oracle::random_poly(rng, 1 + k % 3, 4, false);
    const UniPoly w2 = oracle::random_poly(rng, 1 + (k / 3) % 3, 4, false);
    const UniPoly f1 = oracle::random_poly(rng, 1 + k % 4, 4, true);
    const UniPoly f2 = oracle::random_poly(rng, 1 + (k / 4) % 3, 4, true);
    const IdentityReport r = star_identity_check(w1, w2, f1, f2);
    c.require(r.ok, "identity " + r.failure);
  }
  for (int k = 0; k < 50; ++k) {
    const UniPoly f = random_irreducible(rng, 2 + k % 5);
    const UniPoly w = oracle::random_poly(rng, 1 + k % 4, 3, false);
    const PrimePower pp = prime_power_structure(f, w);
    UniPoly power = P("1");
    for (int i = 0; i < pp.k; ++i) power = power * pp.g;
    c.require(power == star(w, f), "g^k for " + format_poly(f));
    c.require(!oracle::has_integer_factor(pp.g), "g irreducible for " + format_poly(f));
  }
  int prime_cases = 0;
  for (int k = 0; k < 30; ++k) {
    const int m = std::vector<int>{3, 5, 7}[static_cast<std::size_t>(k % 3)];
    const UniPoly f = random_irreducible(rng, m);
    const UniPoly w = oracle::random_poly(rng, 1 + static_cast<int>(rng() % static_cast<unsigned>(m - 1)), 4, false);
    c.require(squarefree(star(w, f)), "prime degree " + format_poly(f) + ", " + format_poly(w));
    ++prime_cases;
  }
  c.note("200 identity instances, 50 prime-power structures, " + std::to_string(prime_cases) + " prime-degree cases");
  return c.result();
}

// Numeric probe: some cycle keeps |I| below 1e-10 on 20 sample points.
bool numeric_vanishing(const UniPoly& f, const UniPoly& w) {
  const MonodromyRep rep = monodromy_rep(f, MonodromyOptions{.base = std::nullopt, .closure_cap = 1000000,
                                                             .closure = false, .traces = nullptr});
  double far = 1;
  for (const Complex& s : rep.critical.values) far = std::max(far, std::abs(s));
  std::vector<CVec> fibres;
  for (int k = 0; k < 20; ++k) fibres.push_back(roots_at(rep, (1.5 * far + 1) * std::polar(1.0, 0.2 + 0.31 * k)));
  const CVec wc = to_cvec(w);
  const std::size_t d = rep.degree();
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      double worst = 0;
      for (const CVec& r : fibres) {
        const Complex a = horner(wc, r[i]), b = horner(wc, r[j]);
        worst = std::max(worst, std::abs(a - b) / std::max(1.0, std::abs(a) + std::abs(b)));
      }
      if (worst < 1e-10) return true;
    }
  return false;
}

// 7. Identical vanishing decision.
Outcome criterion7() {
  Checker c;
  const auto cert = vanish_identically(P("x^4 - x^2"), P("x^2"));
  c.require(cert.has_value(), "x^4 - x^2 with x^2");
  if (cert) {
    c.require(format_poly(cert->g) == "x^2 - x - t", "g = x^2 - x - t");
    c.require(substitute(cert->g, P("x^2"), P("x^4 - x^2")).is_zero(), "g(omega, f) = 0");
  }
  const UniPoly f = P("x^3 - 2*x + 1"), p = P("2*x^2 - x");
  const auto cp = vanish_identically(f, compose(p, f));
  c.require(cp && cp->degree_x == 1 && cp->p && *cp->p == p, "recovery of p from p(f)");

  std::mt19937_64 rng(7007);
  int nonvanishing = 0, agree = 0, total = 0;
  std::vector<std::pair<UniPoly, UniPoly>> cases{{P("x^4 - x^2"), P("x^2")}, {f, compose(p, f)},
                                                 {P("x^6 + x^2"), P("x^4")}};
  while (nonvanishing < 50) {
    const UniPoly g = oracle::random_poly(rng, 3 + static_cast<int>(rng() % 4), 4, true);
    const UniPoly w = oracle::random_poly(rng, 1 + static_cast<int>(rng() % 5), 4, false);
    if (w.degree() < 1) continue;
    const bool v = vanish_identically(g, w).has_value();
    if (!v) ++nonvanishing;
    cases.emplace_back(g, w);
  }
  for (const auto& [g, w] : cases) {
    ++total;
    const bool exact = vanish_identically(g, w).has_value();
    const bool probe = numeric_vanishing(g, w);
    if (exact == probe) ++agree;
    c.require(exact == probe, "probe disagreement for " + format_poly(g) + ", " + format_poly(w));
  }
  c.note(std::to_string(nonvanishing) + " non-vanishing instances; probe agrees on " + std::to_string(agree) + "/" +
         std::to_string(total));
  return c.result();
}

// 8. R_omega squared and the orbit products.
Outcome criterion8() {
  Checker c;
  std::mt19937_64 rng(8008);
  int done = 0, by_samples = 0;
  while (done < 50) {
    const int d = 2 + static_cast<int>(rng() % 4), n = 2 + static_cast<int>(rng() % 4);
    const UniPoly f = oracle::random_poly(rng, d, 4, true);
    const UniPoly w = oracle::random_poly(rng, n, 4, true);
    const ROmegaSquared r = r_omega_squared(f, w);
    if (r.identically_zero) continue;
    ++done;
    const std::string tag = format_poly(f) + ", " + format_poly(w);
    // Divisibility, checked against the discriminants directly.
    const UniPoly num = discriminant(star_family(w, f));
    const UniPoly den = discriminant(fibre_family(f));
    c.require(r.r_squared * den == num, "ratio for " + tag);
    c.require(r.constant * r.r * r.r == r.r_squared, "square for " + tag);
    c.require(2 * r.r.degree() <= (n - 1) * (d - 1), "degree bound for " + tag);
    const MonodromyRep rep = monodromy_rep(f);
    const OrbitPolynomials op = orbit_r_polys(f, w, rep, cycle_orbits(rep));
    c.require(op.product_certified, "orbit product for " + tag);
    if (op.product_certificate == "samples") ++by_samples;
    c.require(op.degree_sum == r.r.degree(), "orbit degree sum for " + tag);
  }
  c.note("50 instances certified, " + std::to_string(50 - by_samples) + " by exact rounding and " +
         std::to_string(by_samples) + " by sampled squares");
  return c.result();
}

bool is_full_cycle(const Permutation& p) {
  std::size_t len = 0, i = 0;
  do {
    i = static_cast<std::size_t>(p[i]);
    ++len;
  } while (i != 0);
  return len == p.size();
}

// 9. Monodromy groups, Dynkin graph, loop at infinity.
Outcome criterion9() {
  Checker c;
  const auto t0 = std::chrono::steady_clock::now();
  for (int d = 2; d <= 7; ++d) {
    const MonodromyRep rep = monodromy_rep(UniPoly::monomial(Rational(1), static_cast<std::size_t>(d)));
    c.require(rep.group_order == static_cast<std::size_t>(d), "order for x^" + std::to_string(d));
    c.require(rep.loops.size() == 1 && is_full_cycle(rep.loops[0].perm), "cyclic generator for x^" + std::to_string(d));
    c.require(is_full_cycle(generator_product(rep)), "loop at infinity for x^" + std::to_string(d));
  }
  std::size_t fact = 1;
  for (int d = 2; d <= 6; ++d) {
    fact *= static_cast<std::size_t>(d);
    UniPoly f = P("1");
    for (int i = 1; i <= d; ++i) f = f * (P("x") - UniPoly::constant(Rational(i)));
    f = f + P("x/100");
    const MonodromyRep rep = monodromy_rep(f);
    const std::string tag = "perturbed product of degree " + std::to_string(d);
    c.require(rep.group_order == fact, "symmetric group for " + tag);
    const DynkinGraph g = dynkin_graph(rep);
    c.require(g.connected && g.is_path, "path graph for " + tag);
    c.require(is_full_cycle(generator_product(rep)), "product of generators for " + tag);
    c.require(generator_product(rep) == loop_at_infinity(rep), "loop at infinity for " + tag);
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  c.require(secs < 120, "runtime");
  std::ostringstream os;
  os << "x^d for d <= 7 and perturbed products for d <= 6 in " << secs << " s";
  c.note(os.str());
  return c.result();
}

// 10. f = (x-1)(x-2)(x-3)(x-4), omega = (x-1)(x-2)(x-3).
Outcome criterion10() {
  Checker c;
  UniPoly f = P("1"), w = P("1");
  for (int i = 1; i <= 4; ++i) f = f * (P("x") - UniPoly::constant(Rational(i)));
  for (int i = 1; i <= 3; ++i) w = w * (P("x") - UniPoly::constant(Rational(i)));
  const MonodromyRep rep = monodromy_rep(f);
  const Domain dom = Domain::disc(0.0, 0.2);
  const DomainLabels labels(rep, dom);
  std::vector<std::size_t> lab;
  for (int i = 1; i <= 4; ++i) lab.push_back(nearest(labels.anchor_roots(), double(i)));
  const ZeroContext ctx = zero_context(f, w, rep);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const ZeroReport r = zeros_in_domain(f, w, SimpleCycle{static_cast<int>(lab[i]), static_cast<int>(lab[j])}, dom,
                                           rep, &ctx);
      bool at_zero = false;
      for (const Zero& z : r.zeros) at_zero = at_zero || std::abs(z.t) < 1e-10;
      const std::string tag = "cycle " + std::to_string(i + 1) + "-" + std::to_string(j + 1);
      if (j < 3)
        c.require(at_zero, "zero at 0 for " + tag);
      else
        c.require(r.zeros.empty(), "no zero for " + tag);
      c.require(r.winding == r.zero_count_with_multiplicity(), "winding for " + tag);
    }
  c.note("zero at t = 0 for the three cycles among roots 1..3, none for cycles with root 4");
  return c.result();
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{criterion1, criterion2, criterion3, criterion4, criterion5,
                                                       criterion6, criterion7, criterion8, criterion9, criterion10};
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k]();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (!o.pass) ++failed;
    std::cout << "criterion " << k + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " (" << secs << " s) " << o.detail
              << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
