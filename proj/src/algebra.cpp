#include "abelzero/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace abelzero {

char parameter_name(Parameter p) { return p == Parameter::t ? 't' : 'z'; }

ParamPoly fibre_family(const UniPoly& f, Parameter parameter) {
  BiPoly lifted = lift_coefficients(f);
  lifted -= BiPoly::constant(UniPoly::variable());
  return ParamPoly{std::move(lifted), parameter};
}

UniPoly specialize(const ParamPoly& p, const Rational& value) {
  std::vector<Rational> v;
  v.reserve(p.coeffs.size());
  for (const UniPoly& c : p.coeffs.coefficients()) v.push_back(evaluate(c, value));
  return UniPoly(std::move(v));
}

UniPoly poly_gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

UniPoly resultant_x(const ParamPoly& a, const ParamPoly& b) { return resultant(a.coeffs, b.coeffs); }

namespace {

bool half_degree_sign_negative(int d) { return (static_cast<long>(d) * (d - 1) / 2) % 2 != 0; }

}  // namespace

UniPoly discriminant(const ParamPoly& a) {
  const int d = a.degree_x();
  if (d < 1) throw std::invalid_argument("discriminant needs positive x-degree");
  const UniPoly& lc = a.coeffs.leading();
  if (lc.degree() != 0) throw std::invalid_argument("leading x-coefficient must be a nonzero constant");
  UniPoly res = resultant(a.coeffs, derivative_outer(a.coeffs));
  Rational factor = 1 / lc[0];
  if (half_degree_sign_negative(d)) factor = -factor;
  return factor * res;
}

Rational discriminant(const UniPoly& a) {
  const int d = a.degree();
  if (d < 1) throw std::invalid_argument("discriminant needs positive degree");
  Rational res = resultant(a, derivative(a));
  Rational out = res / a.leading();
  if (half_degree_sign_negative(d)) out = -out;
  return out;
}

std::vector<Factor> squarefree_decomposition(const UniPoly& a) {
  if (a.is_zero()) throw std::invalid_argument("squarefree decomposition of zero");
  std::vector<Factor> out;
  if (a.degree() == 0) return out;
  UniPoly f = monic(a);
  UniPoly fp = derivative(f);
  UniPoly c = poly_gcd(f, fp);
  UniPoly w = exact_div(f, c);
  UniPoly y = exact_div(fp, c);
  UniPoly z = y - derivative(w);
  int i = 1;
  while (w.degree() > 0) {
    UniPoly g = poly_gcd(w, z);
    if (g.degree() > 0) out.push_back({g, i});
    w = exact_div(w, g);
    y = exact_div(z, g);
    z = y - derivative(w);
    ++i;
  }
  return out;
}

UniPoly squarefree_part(const UniPoly& a) {
  UniPoly out = UniPoly::constant(Rational(1));
  for (const Factor& f : squarefree_decomposition(a)) out = out * f.poly;
  return out;
}

bool is_irreducible(const UniPoly& a) {
  if (a.degree() < 1) return false;
  Factorization fac = factor_rationals(a);
  return fac.factors.size() == 1 && fac.factors[0].multiplicity == 1;
}

std::vector<UniPoly> gadic_expand(const UniPoly& poly, const UniPoly& g) {
  if (g.degree() < 1) throw std::invalid_argument("g-adic expansion needs a nonconstant g");
  std::vector<UniPoly> out;
  UniPoly rest = poly;
  while (!rest.is_zero()) {
    auto [q, r] = divmod(rest, g);
    out.push_back(std::move(r));
    rest = std::move(q);
  }
  return out;
}

// ---------------------------------------------------------------------------
// VersalPoly

VersalPoly VersalPoly::variable(int d, int i) {
  VersalPoly p(d);
  Exponents e(static_cast<std::size_t>(d), 0);
  e.at(static_cast<std::size_t>(i - 1)) = 1;
  p.add_term(e, Rational(1));
  return p;
}

VersalPoly VersalPoly::constant(int d, const Rational& c) {
  VersalPoly p(d);
  p.add_term(Exponents(static_cast<std::size_t>(d), 0), c);
  return p;
}

void VersalPoly::add_term(const Exponents& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

bool VersalPoly::is_weighted_homogeneous(int w) const {
  for (const auto& [e, c] : terms_) {
    int weight = 0;
    for (std::size_t i = 0; i < e.size(); ++i) weight += static_cast<int>(i + 1) * e[i];
    if (weight != w) return false;
  }
  return true;
}

Rational VersalPoly::evaluate(const std::vector<Rational>& a) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= a.at(i);
    sum += term;
  }
  return sum;
}

std::string VersalPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = abs(c);
    os << (sgn(c) < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
    bool constant = std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
    bool wrote = false;
    if (mag != 1 || constant) {
      os << abelzero::to_string(mag);
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      os << (wrote ? "*" : "") << 'a' << (i + 1);
      if (e[i] > 1) os << '^' << e[i];
      wrote = true;
    }
    first = false;
  }
  return os.str();
}

VersalPoly operator+(const VersalPoly& a, const VersalPoly& b) {
  VersalPoly out = a;
  for (const auto& [e, c] : b.terms_) out.add_term(e, c);
  return out;
}

VersalPoly operator*(const VersalPoly& a, const VersalPoly& b) {
  VersalPoly out(std::max(a.d_, b.d_));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      VersalPoly::Exponents e(std::max(ea.size(), eb.size()), 0);
      for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
      for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
      out.add_term(e, Rational(ca * cb));
    }
  return out;
}

std::vector<VersalPoly> versal_reduce(int m, int d) {
  if (d < 2) throw std::invalid_argument("versal_reduce needs d >= 2");
  if (m < 0) throw std::invalid_argument("versal_reduce needs m >= 0");
  std::vector<VersalPoly> coef(static_cast<std::size_t>(std::max(m, d - 1) + 1), VersalPoly(d));
  coef[static_cast<std::size_t>(m)] = VersalPoly::constant(d, Rational(1));
  // x^k = x^{k-d} x^d == x^{k-d} (a_1 x^{d-1} + ... + a_d)
  for (int k = m; k >= d; --k) {
    VersalPoly c = coef[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    coef[static_cast<std::size_t>(k)] = VersalPoly(d);
    for (int i = 1; i <= d; ++i) {
      auto& slot = coef[static_cast<std::size_t>(k - i)];
      slot = slot + c * VersalPoly::variable(d, i);
    }
  }
  return {coef.begin() + 1, coef.begin() + d};
}

// ---------------------------------------------------------------------------
// Q[t][x] helpers

UniPoly content(const BiPoly& p) {
  UniPoly g;
  for (const UniPoly& c : p.coefficients()) g = poly_gcd(g, c);
  return g;
}

BiPoly primitive_part(const BiPoly& p) {
  if (p.is_zero()) return p;
  UniPoly g = content(p);
  std::vector<UniPoly> v;
  v.reserve(p.size());
  for (const UniPoly& c : p.coefficients()) v.push_back(exact_div(c, g));
  // Normalize so the leading coefficient's leading coefficient is 1.
  Rational s = 1 / v.back().leading();
  for (UniPoly& c : v) c = s * c;
  return BiPoly(std::move(v));
}

namespace {

BiPoly pseudo_remainder(BiPoly a, const BiPoly& b) {
  const UniPoly& lb = b.leading();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    BiPoly shifted = BiPoly::monomial(a.leading(), static_cast<std::size_t>(a.degree() - b.degree()));
    a = BiPoly::constant(lb) * a - shifted * b;
  }
  return a;
}

}  // namespace

BiPoly bivariate_gcd(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero()) return primitive_part(b);
  if (b.is_zero()) return primitive_part(a);
  BiPoly x = primitive_part(a), y = primitive_part(b);
  if (x.degree() < y.degree()) std::swap(x, y);
  while (!y.is_zero()) {
    BiPoly r = pseudo_remainder(x, y);
    x = std::move(y);
    y = primitive_part(r);
  }
  if (x.degree() == 0) return ring_traits<BiPoly>::one();
  return primitive_part(x);
}

BiPoly derivative_outer(const BiPoly& p) {
  if (p.degree() <= 0) return {};
  std::vector<UniPoly> v(static_cast<std::size_t>(p.degree()));
  for (std::size_t i = 1; i < p.size(); ++i) v[i - 1] = Rational(static_cast<long>(i)) * p[i];
  return BiPoly(std::move(v));
}

BiPoly derivative_inner(const BiPoly& p) {
  std::vector<UniPoly> v;
  v.reserve(p.size());
  for (const UniPoly& c : p.coefficients()) v.push_back(derivative(c));
  return BiPoly(std::move(v));
}

}  // namespace abelzero
