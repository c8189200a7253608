// Factorization over Q: squarefree split, then for each squarefree part a
// distinct-degree / equal-degree factorization modulo a small good prime,
// Hensel lifting past the Mignotte bound and exhaustive recombination.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>

#include "abelzero/algebra.hpp"

namespace abelzero {
namespace {

// ---- arithmetic in F_p[x], p < 2^31, ascending coefficient vectors ----------

using ModPoly = std::vector<std::int64_t>;

void trim(ModPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const ModPoly& a) { return static_cast<int>(a.size()) - 1; }

std::int64_t powmod(std::int64_t b, std::int64_t e, std::int64_t p) {
  std::int64_t r = 1;
  b %= p;
  if (b < 0) b += p;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) { return powmod(a, p - 2, p); }

ModPoly sub(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  ModPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] - b[i] + p) % p;
  trim(r);
  return r;
}

ModPoly mul(const ModPoly& a, const ModPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  ModPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

std::pair<ModPoly, ModPoly> divmod(ModPoly a, const ModPoly& b, std::int64_t p) {
  if (b.empty()) throw std::domain_error("modular division by zero");
  if (deg(a) < deg(b)) return {{}, a};
  ModPoly q(static_cast<std::size_t>(deg(a) - deg(b) + 1), 0);
  const std::int64_t inv = inverse(b.back(), p);
  for (int k = deg(a); k >= deg(b); --k) {
    std::int64_t c = a[static_cast<std::size_t>(k)] * inv % p;
    if (c == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(k - deg(b));
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = ((a[shift + j] - c * b[j]) % p + p) % p;
  }
  a.resize(static_cast<std::size_t>(deg(b)));
  trim(a);
  trim(q);
  return {q, a};
}

ModPoly make_monic(ModPoly a, std::int64_t p) {
  if (a.empty()) return a;
  const std::int64_t inv = inverse(a.back(), p);
  for (auto& c : a) c = c * inv % p;
  return a;
}

ModPoly gcd(ModPoly a, ModPoly b, std::int64_t p) {
  while (!b.empty()) {
    ModPoly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a, p);
}

/// s a + t b = gcd (monic).
void ext_gcd(const ModPoly& a, const ModPoly& b, std::int64_t p, ModPoly& s, ModPoly& t) {
  ModPoly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    ModPoly s2 = sub(s0, mul(q, s1, p), p);
    ModPoly t2 = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  const std::int64_t inv = inverse(r0.back(), p);
  for (auto& c : s0) c = c * inv % p;
  for (auto& c : t0) c = c * inv % p;
  s = s0;
  t = t0;
}

ModPoly derivative(const ModPoly& a, std::int64_t p) {
  if (a.size() <= 1) return {};
  ModPoly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * static_cast<std::int64_t>(i) % p;
  trim(r);
  return r;
}

ModPoly powmod(ModPoly base, const Integer& e, const ModPoly& f, std::int64_t p) {
  ModPoly r{1};
  base = divmod(base, f, p).second;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = divmod(mul(r, r, p), f, p).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = divmod(mul(r, base, p), f, p).second;
  }
  return r;
}

struct DegreeBlock {
  ModPoly poly;
  int degree;
};

std::vector<DegreeBlock> distinct_degree(ModPoly f, std::int64_t p) {
  std::vector<DegreeBlock> out;
  ModPoly x{0, 1};
  ModPoly h = x;
  for (int i = 1; 2 * i <= deg(f); ++i) {
    h = powmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    ModPoly g = gcd(sub(h, x, p), f, p);
    if (deg(g) > 0) {
      out.push_back({g, i});
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (deg(f) > 0) out.push_back({make_monic(f, p), deg(f)});
  return out;
}

void equal_degree(const ModPoly& g, int d, std::int64_t p, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer q = 1;
  for (int i = 0; i < d; ++i) q *= static_cast<unsigned long>(p);
  Integer e = (q - 1) / 2;
  std::uniform_int_distribution<std::int64_t> dist(0, p - 1);
  for (;;) {
    ModPoly a(static_cast<std::size_t>(deg(g)));
    for (auto& c : a) c = dist(rng);
    trim(a);
    if (deg(a) < 1) continue;
    ModPoly b = sub(powmod(a, e, g, p), ModPoly{1}, p);
    ModPoly h = gcd(b, g, p);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      equal_degree(h, d, p, rng, out);
      equal_degree(make_monic(divmod(g, h, p).first, p), d, p, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const ModPoly& f, std::int64_t p) {
  std::mt19937_64 rng(0x5eed5eedULL + static_cast<unsigned long>(p));
  std::vector<ModPoly> out;
  for (const DegreeBlock& block : distinct_degree(make_monic(f, p), p)) equal_degree(block.poly, block.degree, p, rng, out);
  return out;
}

// ---- Z/mZ[x] with big modulus, used for Hensel lifting --------------------

using ZPoly = std::vector<Integer>;

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Integer reduce(const Integer& c, const Integer& m) {
  Integer r = c % m;
  if (r < 0) r += m;
  return r;
}

ZPoly reduce(ZPoly a, const Integer& m) {
  for (auto& c : a) c = reduce(c, m);
  trim(a);
  return a;
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return reduce(r, m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Integer& m) {
  ZPoly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return reduce(r, m);
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Integer& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return reduce(r, m);
}

/// Division by a monic polynomial modulo m.
std::pair<ZPoly, ZPoly> zdivmod_monic(ZPoly a, const ZPoly& h, const Integer& m) {
  const int dh = static_cast<int>(h.size()) - 1;
  const int da = static_cast<int>(a.size()) - 1;
  if (da < dh) return {{}, a};
  ZPoly q(static_cast<std::size_t>(da - dh + 1), 0);
  for (int k = da; k >= dh; --k) {
    Integer c = reduce(a[static_cast<std::size_t>(k)], m);
    if (c == 0) continue;
    const std::size_t shift = static_cast<std::size_t>(k - dh);
    q[shift] = c;
    for (std::size_t j = 0; j < h.size(); ++j) a[shift + j] = reduce(a[shift + j] - c * h[j], m);
  }
  a.resize(static_cast<std::size_t>(dh));
  return {reduce(q, m), reduce(a, m)};
}

ZPoly to_z(const ModPoly& a) { return ZPoly(a.begin(), a.end()); }

/// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic -> mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, Integer& m) {
  const Integer m2 = m * m;
  ZPoly e = zsub(f, zmul(g, h, m2), m2);
  auto [q, r] = zdivmod_monic(zmul(s, e, m2), h, m2);
  ZPoly g2 = zadd(g, zadd(zmul(t, e, m2), zmul(q, g, m2), m2), m2);
  ZPoly h2 = zadd(h, r, m2);
  ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{1}, m2);
  auto [c, d] = zdivmod_monic(zmul(s, b, m2), h2, m2);
  s = zsub(s, d, m2);
  t = zsub(t, zadd(zmul(t, b, m2), zmul(c, g2, m2), m2), m2);
  g = std::move(g2);
  h = std::move(h2);
  m = m2;
}

// ---- integer polynomials -----------------------------------------------------

ZPoly primitive_integer(const UniPoly& a) {
  Integer l = 1;
  for (const Rational& c : a.coefficients()) l = lcm(l, c.get_den());
  ZPoly out;
  for (const Rational& c : a.coefficients()) out.push_back(Integer(c.get_num() * (l / c.get_den())));
  Integer g = 0;
  for (const auto& c : out) g = gcd(g, c);
  for (auto& c : out) c /= g;
  if (out.back() < 0)
    for (auto& c : out) c = -c;
  return out;
}

UniPoly to_rational(const ZPoly& a) {
  std::vector<Rational> v(a.begin(), a.end());
  return UniPoly(std::move(v));
}

std::vector<std::int64_t> small_primes() {
  std::vector<std::int64_t> out;
  const int limit = 4000;
  std::vector<bool> composite(limit + 1, false);
  for (int i = 2; i <= limit; ++i) {
    if (composite[static_cast<std::size_t>(i)]) continue;
    if (i > 2) out.push_back(i);
    for (int j = 2 * i; j <= limit; j += i) composite[static_cast<std::size_t>(j)] = true;
  }
  return out;
}

ModPoly reduce_mod(const ZPoly& a, std::int64_t p) {
  ModPoly r;
  for (const auto& c : a) r.push_back(reduce(c, Integer(static_cast<long>(p))).get_si());
  trim(r);
  return r;
}

// Factors a squarefree primitive integer polynomial; returns monic factors over Q.
std::vector<UniPoly> zassenhaus(const ZPoly& f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {monic(to_rational(f))};
  const Integer lead = f.back();

  // Choose among the first few good primes the one giving the fewest modular factors.
  std::int64_t best_p = 0;
  std::vector<ModPoly> best;
  int good = 0;
  for (std::int64_t p : small_primes()) {
    if (reduce(lead, Integer(static_cast<long>(p))) == 0) continue;
    ModPoly fp = reduce_mod(f, p);
    if (deg(gcd(fp, derivative(fp, p), p)) > 0) continue;
    std::vector<ModPoly> facs = factor_mod_p(fp, p);
    if (best_p == 0 || facs.size() < best.size()) {
      best_p = p;
      best = std::move(facs);
    }
    if (best.size() == 1 || ++good == 5) break;
  }
  if (best_p == 0) throw std::runtime_error("no prime of good reduction found");
  if (best.size() == 1) return {monic(to_rational(f))};

  // Coefficient bound for lead * (monic factor): 2^n ||f||_2 |lead|.
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer norm = sqrt(norm2) + 1;
  Integer bound = 2 * norm * abs(lead);
  for (int i = 0; i < n; ++i) bound *= 2;

  // Sequential two-factor lifting: peel one monic modular factor at a time.
  const std::int64_t p = best_p;
  const Integer pz(static_cast<long>(p));
  Integer modulus = pz;
  while (modulus <= bound) modulus *= modulus;

  std::vector<ZPoly> lifted;
  ZPoly target = f;
  for (std::size_t k = 0; k + 1 < best.size(); ++k) {
    ZPoly h = to_z(best[k]);
    ModPoly rest{reduce(lead, pz).get_si()};
    for (std::size_t j = k + 1; j < best.size(); ++j) rest = mul(rest, best[j], p);
    ZPoly g = to_z(rest);
    ModPoly s_mod, t_mod;
    ext_gcd(rest, best[k], p, s_mod, t_mod);
    // Keep deg s < deg h, deg t < deg g.
    auto [qq, rr] = divmod(s_mod, best[k], p);
    s_mod = rr;
    t_mod = sub(t_mod, sub(ModPoly{}, mul(qq, rest, p), p), p);
    ZPoly s = to_z(s_mod), t = to_z(t_mod);
    Integer m = pz;
    while (m < modulus) hensel_step(reduce(target, m * m), g, h, s, t, m);
    lifted.push_back(h);
    target = g;
  }
  {
    // Last factor: target / lead made monic modulo the final modulus.
    Integer inv;
    mpz_invert(inv.get_mpz_t(), lead.get_mpz_t(), modulus.get_mpz_t());
    ZPoly last = target;
    for (auto& c : last) c = reduce(c * inv, modulus);
    lifted.push_back(reduce(last, modulus));
  }

  // Recombination.
  std::vector<UniPoly> factors;
  std::vector<std::size_t> remaining(lifted.size());
  std::iota(remaining.begin(), remaining.end(), std::size_t{0});
  UniPoly rest = to_rational(f);
  Integer rest_lead = lead;
  const Integer half = modulus / 2;
  std::size_t subset = 1;
  while (2 * subset <= remaining.size()) {
    bool found = false;
    std::vector<bool> pick(remaining.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<long>(subset), true);
    do {
      ZPoly cand{rest_lead};
      cand = reduce(cand, modulus);
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (pick[i]) cand = zmul(cand, lifted[remaining[i]], modulus);
      for (auto& c : cand)
        if (c > half) c -= modulus;
      trim(cand);
      Integer g = 0;
      for (const auto& c : cand) g = gcd(g, c);
      if (g == 0) continue;
      for (auto& c : cand) c /= g;
      UniPoly candidate = to_rational(cand);
      auto [q, r] = divmod(rest, candidate);
      if (!r.is_zero()) continue;
      // Quotient must stay integral.
      bool integral = true;
      for (const Rational& c : q.coefficients())
        if (c.get_den() != 1) integral = false;
      if (!integral) continue;
      factors.push_back(monic(candidate));
      rest = q;
      rest_lead = abs(rest.leading().get_num());
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (!pick[i]) keep.push_back(remaining[i]);
      remaining = std::move(keep);
      found = true;
      break;
    } while (std::prev_permutation(pick.begin(), pick.end()));
    if (!found) ++subset;
  }
  if (rest.degree() > 0) factors.push_back(monic(rest));
  return factors;
}

bool poly_less(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

}  // namespace

Factorization factor_rationals(const UniPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("factorization of zero");
  Factorization out;
  out.unit = a.leading();
  for (const Factor& sq : squarefree_decomposition(a)) {
    for (UniPoly& irr : zassenhaus(primitive_integer(sq.poly))) out.factors.push_back({std::move(irr), sq.multiplicity});
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const Factor& x, const Factor& y) {
    if (poly_less(x.poly, y.poly)) return true;
    if (poly_less(y.poly, x.poly)) return false;
    return x.multiplicity < y.multiplicity;
  });
  return out;
}

}  // namespace abelzero
