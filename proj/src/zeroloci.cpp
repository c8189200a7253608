#include "abelzero/zeroloci.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "abelzero/algebra.hpp"
#include "abelzero/brieskorn.hpp"
#include "abelzero/io.hpp"
#include "abelzero/starfield.hpp"

namespace abelzero {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kZeroTol = 1e-8;      // matched zero
constexpr double kAmbiguousTol = 1e-6; // upper edge of the ambiguous band

bool is_constant(const BiPoly& p) { return p.degree() <= 0 && (p.is_zero() || p.coeff(0).degree() <= 0); }

// Coefficients of p(., y0) in the outer variable.
CVec specialize_inner(const BiPoly& p, Complex y0) {
  CVec out;
  for (const UniPoly& c : p.coefficients()) out.push_back(evaluate(c, y0));
  return out;
}

Complex eval_bi(const BiPoly& p, Complex outer, Complex inner) { return horner(specialize_inner(p, inner), outer); }

double coefficient_scale(const BiPoly& p, Complex outer, Complex inner) {
  double s = 0, po = 1;
  for (const UniPoly& c : p.coefficients()) {
    double pi = 1;
    double acc = 0;
    for (const Rational& q : c.coefficients()) {
      acc += std::abs(q.get_d()) * pi;
      pi *= std::abs(inner);
    }
    s += acc * po;
    po *= std::abs(outer);
  }
  return s > 0 ? s : 1.0;
}

// Newton on (g1, g2)(outer, inner) = 0.
void polish(const BiPoly& g1, const BiPoly& g2, Complex& outer, Complex& inner) {
  const BiPoly g1o = derivative_outer(g1), g1i = derivative_inner(g1);
  const BiPoly g2o = derivative_outer(g2), g2i = derivative_inner(g2);
  for (int it = 0; it < 30; ++it) {
    const Complex a = eval_bi(g1, outer, inner), b = eval_bi(g2, outer, inner);
    const Complex j11 = eval_bi(g1o, outer, inner), j12 = eval_bi(g1i, outer, inner);
    const Complex j21 = eval_bi(g2o, outer, inner), j22 = eval_bi(g2i, outer, inner);
    const Complex det = j11 * j22 - j12 * j21;
    if (std::abs(det) == 0) return;
    const Complex d_outer = (a * j22 - b * j12) / det, d_inner = (j11 * b - j21 * a) / det;
    const Complex no = outer - d_outer, ni = inner - d_inner;
    const double before = std::abs(a) + std::abs(b);
    const double after = std::abs(eval_bi(g1, no, ni)) + std::abs(eval_bi(g2, no, ni));
    if (!(after < before)) return;
    outer = no;
    inner = ni;
    if (std::abs(d_outer) + std::abs(d_inner) < 1e-15 * (1 + std::abs(outer) + std::abs(inner))) return;
  }
}

double value_scale(const CVec& omega, const CVec& roots, const SimpleCycle& c) {
  return std::max(1.0, std::abs(horner(omega, roots[static_cast<std::size_t>(c.i)])) +
                           std::abs(horner(omega, roots[static_cast<std::size_t>(c.j)])));
}

double relative_integral(const CVec& omega, const CVec& roots, const SimpleCycle& c) {
  return std::abs(cycle_integral(omega, roots, c)) / value_scale(omega, roots, c);
}

// Circle about the origin for interpolation. It encloses every critical value
// so that coefficients of polynomials whose roots lie in that range are
// recovered with comparable relative accuracy.
double sampling_radius(const CVec& sigma) {
  double far = 0;
  for (const Complex& s : sigma) far = std::max(far, std::abs(s));
  return std::max(1.0, 1.5 * far);
}

int winding_from_samples(const std::vector<Complex>& values) {
  double total = 0;
  for (std::size_t k = 1; k < values.size(); ++k) total += std::arg(values[k] / values[k - 1]);
  const double turns = total / (2 * kPi);
  const double rounded = std::round(turns);
  if (std::abs(turns - rounded) > 0.1) throw std::runtime_error("winding increment is not an integer");
  return static_cast<int>(rounded);
}

}  // namespace

BiPoly difference_quotient(const UniPoly& p) {
  const int d = p.degree();
  if (d < 1) return BiPoly{};
  std::vector<UniPoly> rows;
  for (int i = 0; i + 1 <= d; ++i) {
    std::vector<Rational> inner;
    for (int j = 0; i + j + 1 <= d; ++j) inner.push_back(p.coeff(static_cast<std::size_t>(i + j + 1)));
    rows.emplace_back(std::move(inner));
  }
  return BiPoly(std::move(rows));
}

CurvePair curve_pair(const UniPoly& f, const UniPoly& omega) {
  return CurvePair{difference_quotient(f), difference_quotient(omega)};
}

Intersections intersections(const CurvePair& pair) {
  Intersections out;
  BiPoly gf = pair.gamma_f;
  BiPoly gw = pair.gamma_omega;
  out.common = ring_traits<BiPoly>::one();
  if (gw.is_zero()) {
    out.common_component = true;
    out.common = gf;
    return out;
  }
  if (is_constant(gw)) return out;
  const BiPoly g = bivariate_gcd(gf, gw);
  if (!is_constant(g)) {
    out.common_component = true;
    out.common = g;
    gf = exact_div(gf, g);
    gw = exact_div(gw, g);
    if (is_constant(gf) || is_constant(gw)) return out;
  }
  out.eliminant = resultant_x(ParamPoly{gf, Parameter::t}, ParamPoly{gw, Parameter::t});
  if (out.eliminant.is_zero()) throw std::logic_error("eliminant vanishes after removing the common component");
  out.count_with_multiplicity = std::max(0, out.eliminant.degree());
  for (const RootWithMultiplicity& r : exact_roots(out.eliminant)) {
    // Outer coordinate: common roots of gf(., x0) and gw(., x0).
    const CVec cf = specialize_inner(gf, r.z);
    CVec outer_roots = aberth_roots(cf);
    std::vector<std::pair<double, Complex>> ranked;
    for (const Complex& y : outer_roots)
      ranked.emplace_back(std::abs(eval_bi(gw, y, r.z)) / coefficient_scale(gw, y, r.z), y);
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<IntersectionPoint> found;
    for (std::size_t k = 0; k < ranked.size(); ++k) {
      if (k > 0 && ranked[k].first > 1e-6) break;
      Complex y = ranked[k].second, x = r.z;
      polish(gf, gw, y, x);
      const double res = std::max(std::abs(eval_bi(gf, y, x)) / coefficient_scale(gf, y, x),
                                  std::abs(eval_bi(gw, y, x)) / coefficient_scale(gw, y, x));
      bool duplicate = false;
      for (const IntersectionPoint& p : found)
        if (std::abs(p.x - x) + std::abs(p.y - y) < 1e-9 * (1 + std::abs(x) + std::abs(y))) duplicate = true;
      if (!duplicate) found.push_back({x, y, 1, res});
    }
    for (IntersectionPoint& p : found) p.multiplicity = found.size() == 1 ? r.multiplicity : 1;
    out.points.insert(out.points.end(), found.begin(), found.end());
  }
  return out;
}

Domain Domain::disc(Complex c, double r) {
  if (!(r > 0)) throw std::invalid_argument("disc radius must be positive");
  Domain d;
  d.kind = Kind::Disc;
  d.center = c;
  d.radius = r;
  return d;
}

Domain Domain::rectangle(Complex lo, Complex hi) {
  if (!(lo.real() < hi.real() && lo.imag() < hi.imag())) throw std::invalid_argument("rectangle corners out of order");
  Domain d;
  d.kind = Kind::Rectangle;
  d.lo = lo;
  d.hi = hi;
  d.center = 0.5 * (lo + hi);
  return d;
}

Domain Domain::interval(double a, double b) {
  if (!(a < b)) throw std::invalid_argument("interval endpoints out of order");
  Domain d;
  d.kind = Kind::Interval;
  d.lo = a;
  d.hi = b;
  d.center = 0.5 * (a + b);
  return d;
}

bool Domain::contains(Complex t) const {
  switch (kind) {
    case Kind::Disc:
      return std::abs(t - center) < radius;
    case Kind::Rectangle:
      return t.real() > lo.real() && t.real() < hi.real() && t.imag() > lo.imag() && t.imag() < hi.imag();
    case Kind::Interval:
      return std::abs(t.imag()) <= 1e-9 * std::max(1.0, std::abs(t)) && t.real() > lo.real() && t.real() < hi.real();
  }
  return false;
}

Complex Domain::anchor() const { return center; }

Path Domain::boundary() const {
  Path p;
  if (kind == Kind::Disc) {
    p.pieces.push_back(PathPiece::arc(center, radius, 0.0, 2 * kPi));
  } else if (kind == Kind::Rectangle) {
    const Complex a = lo, b(hi.real(), lo.imag()), c = hi, d(lo.real(), hi.imag());
    p.pieces = {PathPiece::line(a, b), PathPiece::line(b, c), PathPiece::line(c, d), PathPiece::line(d, a)};
  } else {
    throw std::invalid_argument("an interval has no contour");
  }
  return p;
}

double Domain::depth(Complex t) const {
  switch (kind) {
    case Kind::Disc:
      return radius - std::abs(t - center);
    case Kind::Rectangle:
      return std::min({t.real() - lo.real(), hi.real() - t.real(), t.imag() - lo.imag(), hi.imag() - t.imag()});
    case Kind::Interval:
      return std::min(t.real() - lo.real(), hi.real() - t.real());
  }
  return 0;
}

std::string Domain::to_string() const {
  std::ostringstream os;
  os.precision(17);
  switch (kind) {
    case Kind::Disc:
      os << "disc:" << center.real() << ',' << center.imag() << ',' << radius;
      break;
    case Kind::Rectangle:
      os << "rect:" << lo.real() << ',' << lo.imag() << ',' << hi.real() << ',' << hi.imag();
      break;
    case Kind::Interval:
      os << "interval:" << lo.real() << ',' << hi.real();
      break;
  }
  return os.str();
}

Domain parse_domain(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("domain must look like kind:values");
  const std::string kind = text.substr(0, colon);
  std::vector<double> v;
  std::stringstream ss(text.substr(colon + 1));
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad number in domain: " + item);
    }
    if (used != item.size()) throw std::invalid_argument("bad number in domain: " + item);
    v.push_back(x);
  }
  if (kind == "disc" && v.size() == 3) return Domain::disc(Complex(v[0], v[1]), v[2]);
  if (kind == "rect" && v.size() == 4) return Domain::rectangle(Complex(v[0], v[1]), Complex(v[2], v[3]));
  if (kind == "interval" && v.size() == 2) return Domain::interval(v[0], v[1]);
  throw std::invalid_argument("unknown domain: " + text);
}

DomainLabels::DomainLabels(const MonodromyRep& rep, const Domain& domain) : rep_(rep), domain_(domain) {
  anchor_roots_ = abelzero::roots_at(rep, domain.anchor());
}

CVec DomainLabels::roots_at(Complex t, std::vector<TrackSample>* trace) const {
  if (t == domain_.anchor()) return anchor_roots_;
  Path p;
  p.pieces.push_back(PathPiece::line(domain_.anchor(), t));
  TrackOptions opt;
  opt.sigma = rep_.critical.values;
  opt.margin = 0;
  return track(rep_.fc, p, anchor_roots_, opt, trace);
}

Complex cycle_integral(const CVec& omega, const CVec& roots, const std::vector<int>& coeffs) {
  Complex s{};
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    if (coeffs[k] != 0) s += static_cast<double>(coeffs[k]) * horner(omega, roots[k]);
  return s;
}

Complex cycle_integral(const CVec& omega, const CVec& roots, const SimpleCycle& c) {
  return horner(omega, roots[static_cast<std::size_t>(c.i)]) - horner(omega, roots[static_cast<std::size_t>(c.j)]);
}

std::vector<int> cycle_vector(const SimpleCycle& c, std::size_t d) {
  std::vector<int> v(d, 0);
  v[static_cast<std::size_t>(c.i)] += 1;
  v[static_cast<std::size_t>(c.j)] -= 1;
  return v;
}

int ZeroReport::zero_count_with_multiplicity() const {
  int s = 0;
  for (const Zero& z : zeros) s += z.multiplicity;
  return s;
}

Candidates zero_candidates(const UniPoly& f, const UniPoly& omega) {
  Candidates c;
  if (omega.degree() < 1) {
    c.common_component = true;
    return c;
  }
  if (omega.degree() == 1) return c;
  const Intersections in = intersections(curve_pair(f, omega));
  c.common_component = in.common_component;
  const CVec fc = to_cvec(f);
  for (const IntersectionPoint& p : in.points) {
    if (std::abs(p.x - p.y) <= 1e-8 * (1 + std::abs(p.x))) continue;
    const Complex t = horner(fc, p.x);
    bool dup = false;
    for (const Complex& s : c.t)
      if (std::abs(s - t) <= 1e-9 * std::max(1.0, std::abs(t))) dup = true;
    if (!dup) c.t.push_back(t);
  }
  std::sort(c.t.begin(), c.t.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  return c;
}

namespace {

// Values of I for the requested pairs along a tracked contour, refined until
// each step turns the argument by less than pi/4.
std::vector<int> windings(const DomainLabels& labels, const CVec& omega, const Path& contour,
                          const std::vector<SimpleCycle>& cycles, const WindingOptions& opt,
                          bool allow_identically_zero = false) {
  const MonodromyRep& rep = labels.rep();
  const CVec start = labels.roots_at(contour.start());
  double step = opt.max_step;
  for (int attempt = 0; attempt <= opt.refinements; ++attempt, step *= 0.5) {
    std::vector<TrackSample> trace;
    TrackOptions topt;
    topt.sigma = rep.critical.values;
    topt.margin = 0;
    topt.max_step = step;
    const CVec end = track(rep.fc, contour, start, topt, &trace);
    if (match_permutation(start, end) != identity_permutation(start.size()))
      throw std::domain_error("contour encloses a critical value");
    bool fine = true;
    std::vector<int> out;
    for (const SimpleCycle& c : cycles) {
      std::vector<Complex> values;
      values.reserve(trace.size());
      std::size_t vanishing = 0;
      for (const TrackSample& s : trace) {
        const Complex v = cycle_integral(omega, s.roots, c);
        if (std::abs(v) < 1e-10 * value_scale(omega, s.roots, c)) ++vanishing;
        values.push_back(v);
      }
      // Zero at every sample: the integral vanishes identically.
      if (allow_identically_zero && vanishing == values.size()) {
        out.push_back(0);
        continue;
      }
      if (vanishing > 0) throw std::runtime_error("integral vanishes on the contour");
      for (std::size_t k = 1; k < values.size() && fine; ++k)
        if (std::abs(std::arg(values[k] / values[k - 1])) >= kPi / 4) fine = false;
      if (!fine) break;
      out.push_back(winding_from_samples(values));
    }
    if (fine) return out;
  }
  throw std::runtime_error("winding refinement budget exhausted");
}

}  // namespace

int winding_count(const DomainLabels& labels, const CVec& omega, const SimpleCycle& cycle, const Path& contour,
                  const WindingOptions& opt) {
  return windings(labels, omega, contour, {cycle}, opt).front();
}

std::vector<int> winding_counts_all(const DomainLabels& labels, const CVec& omega, const Path& contour,
                                    const WindingOptions& opt) {
  const std::size_t d = labels.rep().degree();
  std::vector<SimpleCycle> cycles;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) cycles.push_back({static_cast<int>(i), static_cast<int>(j)});
  const std::vector<int> w = windings(labels, omega, contour, cycles, opt, true);
  std::vector<int> out(d * d, 0);
  for (std::size_t k = 0; k < cycles.size(); ++k)
    out[static_cast<std::size_t>(cycles[k].i) * d + static_cast<std::size_t>(cycles[k].j)] = w[k];
  return out;
}

namespace {

// Radius of a circle about t0 that stays in the domain, away from sigma and
// from the other candidates.
double isolation_radius(const Domain& domain, const CVec& sigma, const std::vector<Complex>& candidates, Complex t0) {
  double r = std::numeric_limits<double>::infinity();
  for (const Complex& s : sigma) r = std::min(r, std::abs(s - t0));
  for (const Complex& c : candidates)
    if (c != t0) r = std::min(r, std::abs(c - t0));
  if (domain.kind != Domain::Kind::Interval) r = std::min(r, domain.depth(t0));
  if (!std::isfinite(r)) r = 1.0;
  return 0.4 * r;
}

void require_domain_avoids_sigma(const Domain& domain, const CVec& sigma) {
  for (const Complex& s : sigma) {
    bool bad = false;
    if (domain.kind == Domain::Kind::Interval)
      bad = std::abs(s.imag()) < 1e-12 && s.real() > domain.lo.real() && s.real() < domain.hi.real();
    else
      bad = domain.depth(s) > -1e-9;
    if (bad) {
      std::ostringstream os;
      os << "domain contains the critical value " << s;
      throw std::domain_error(os.str());
    }
  }
}

}  // namespace

ZeroContext zero_context(const UniPoly& f, const UniPoly& omega, const MonodromyRep& rep, bool with_orbits) {
  ZeroContext ctx;
  ctx.candidates = zero_candidates(f, omega);
  if (with_orbits && f.leading() == 1 && omega.degree() >= 1) {
    ctx.orbits = cycle_orbits(rep);
    ctx.polys = std::make_shared<const OrbitPolynomials>(orbit_r_polys(f, omega, rep, *ctx.orbits));
  }
  return ctx;
}

ZeroReport zeros_in_domain(const UniPoly& f, const UniPoly& omega, const SimpleCycle& cycle, const Domain& domain,
                           const MonodromyRep& rep, const ZeroContext* ctx) {
  const std::size_t d = rep.degree();
  if (cycle.i == cycle.j || cycle.i < 0 || cycle.j < 0 || static_cast<std::size_t>(cycle.i) >= d ||
      static_cast<std::size_t>(cycle.j) >= d)
    throw std::invalid_argument("cycle labels out of range");
  require_domain_avoids_sigma(domain, rep.critical.values);
  ZeroContext own;
  if (!ctx) {
    own = zero_context(f, omega, rep);
    ctx = &own;
  }
  ZeroReport rp;
  rp.cycle = cycle;
  rp.domain = domain;
  const int n = std::max(omega.degree(), 0);
  rp.bezout_bound = make_rational((f.degree() - 1) * std::max(n - 1, 0), 2);
  const CVec w = to_cvec(omega);
  const DomainLabels labels(rep, domain);

  // Identically zero: the cycle integrates omega to zero at several points.
  {
    std::vector<Complex> probes{domain.anchor()};
    const double reach = domain.kind == Domain::Kind::Disc ? 0.5 * domain.radius
                                                           : 0.25 * std::abs(domain.hi - domain.lo);
    for (int k = 0; k < 3; ++k) {
      Complex p = domain.anchor() + reach * (domain.kind == Domain::Kind::Interval
                                                 ? Complex(k == 0 ? -1.0 : (k == 1 ? 1.0 : 0.5), 0.0)
                                                 : std::polar(1.0, 2 * kPi * k / 3.0 + 0.3));
      probes.push_back(p);
    }
    bool all_zero = true;
    for (const Complex& p : probes)
      if (relative_integral(w, labels.roots_at(p), cycle) >= 1e-10) all_zero = false;
    if (all_zero) {
      rp.identically_zero = true;
      return rp;
    }
  }

  const std::vector<Complex>& cand = ctx->candidates.t;
  for (const Complex& t0 : cand) {
    if (!domain.contains(t0)) continue;
    ++rp.candidates;
    const CVec roots = labels.roots_at(t0);
    const double rel = relative_integral(w, roots, cycle);
    if (rel < kZeroTol) {
      Zero z{t0, rel, 1};
      const double rho = isolation_radius(domain, rep.critical.values, cand, t0);
      Path circle;
      circle.pieces.push_back(PathPiece::arc(t0, rho, 0.0, 2 * kPi));
      z.multiplicity = winding_count(labels, w, cycle, circle);
      if (z.multiplicity < 1) throw std::logic_error("matched zero has no positive winding");
      rp.zeros.push_back(z);
    } else if (rel < kAmbiguousTol) {
      rp.ambiguous.push_back(t0);
    }
  }
  if (domain.kind == Domain::Kind::Interval) {
    const RealZeroCount rz = real_zero_count(labels, w, cycle);
    if (rz.real_valued) rp.sign_changes = rz.sign_changes;
  } else {
    rp.winding = winding_count(labels, w, cycle, domain.boundary());
  }
  if (ctx->polys) {
    const OrbitPartition& op = *ctx->orbits;
    std::size_t o = op.orbit_of(cycle);
    if (std::find(op.reduced.begin(), op.reduced.end(), o) == op.reduced.end()) o = op.negation[o];
    for (const OrbitPolynomial& p : ctx->polys->polys)
      if (p.orbit == o && !p.numerator_zero) rp.orbit_bound = p.degree;
  }
  return rp;
}

RealZeroCount real_zero_count(const DomainLabels& labels, const CVec& omega, const SimpleCycle& cycle) {
  const Domain& dom = labels.domain();
  if (dom.kind != Domain::Kind::Interval) throw std::invalid_argument("real counting needs an interval");
  const MonodromyRep& rep = labels.rep();
  // Stay clear of critical values sitting at the endpoints.
  const double inset = 1e-6 * (dom.hi.real() - dom.lo.real());
  const double a = dom.lo.real() + inset, b = dom.hi.real() - inset;
  const CVec start = labels.roots_at(Complex(a, 0));
  Path seg;
  seg.pieces.push_back(PathPiece::line(Complex(a, 0), Complex(b, 0)));
  TrackOptions topt;
  topt.sigma = rep.critical.values;
  topt.margin = 0;
  topt.max_step = 0.005;
  std::vector<TrackSample> trace;
  track(rep.fc, seg, start, topt, &trace);
  RealZeroCount out;
  std::vector<Complex> vals;
  double max_re = 0, max_im = 0;
  for (const TrackSample& s : trace) {
    vals.push_back(cycle_integral(omega, s.roots, cycle));
    const double scale = value_scale(omega, s.roots, cycle);
    max_re = std::max(max_re, std::abs(vals.back().real()) / scale);
    max_im = std::max(max_im, std::abs(vals.back().imag()) / scale);
  }
  bool use_real;
  if (max_im <= 1e-9) use_real = true;
  else if (max_re <= 1e-9) use_real = false;
  else return out;
  out.real_valued = true;
  auto component = [use_real](Complex v) { return use_real ? v.real() : v.imag(); };
  for (std::size_t k = 1; k < trace.size(); ++k) {
    const double v0 = component(vals[k - 1]), v1 = component(vals[k]);
    if (v0 == 0 || (v0 < 0) == (v1 < 0)) continue;
    ++out.sign_changes;
    double lo = trace[k - 1].t.real(), hi = trace[k].t.real(), flo = v0;
    CVec roots_lo = trace[k - 1].roots;
    for (int it = 0; it < 60 && hi - lo > 1e-15 * std::max(1.0, std::abs(lo)); ++it) {
      const double mid = 0.5 * (lo + hi);
      Path p;
      p.pieces.push_back(PathPiece::line(Complex(lo, 0), Complex(mid, 0)));
      const CVec roots_mid = track(rep.fc, p, roots_lo, topt);
      const double fm = component(cycle_integral(omega, roots_mid, cycle));
      if ((fm < 0) == (flo < 0)) {
        lo = mid;
        flo = fm;
        roots_lo = roots_mid;
      } else {
        hi = mid;
      }
    }
    out.located.push_back(0.5 * (lo + hi));
  }
  return out;
}

CVec interpolate_on_circle(const std::function<Complex(Complex)>& fn, Complex center, double radius, int n) {
  std::vector<Complex> values(static_cast<std::size_t>(n));
  const double offset = 0.1;
  parallel_for(static_cast<std::size_t>(n), [&](std::size_t k) {
    values[k] = fn(center + std::polar(radius, offset + 2 * kPi * static_cast<double>(k) / n));
  });
  // Coefficients in s = (t - center) / radius by the inverse DFT.
  CVec s(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) {
    Complex acc{};
    for (int k = 0; k < n; ++k)
      acc += values[static_cast<std::size_t>(k)] * std::polar(1.0, -(offset + 2 * kPi * k / n) * j);
    s[static_cast<std::size_t>(j)] = acc / static_cast<double>(n);
  }
  // Expand sum s_j ((t - c)/r)^j in powers of t.
  CVec out(static_cast<std::size_t>(n), Complex{});
  CVec basis{Complex(1.0)};
  for (int j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < basis.size(); ++i) out[i] += s[static_cast<std::size_t>(j)] * basis[i];
    CVec next(basis.size() + 1, Complex{});
    for (std::size_t i = 0; i < basis.size(); ++i) {
      next[i + 1] += basis[i] / radius;
      next[i] -= basis[i] * center / radius;
    }
    basis = next;
  }
  return out;
}

std::optional<Rational> rational_round(double v, long max_den, double tol) {
  if (!std::isfinite(v)) return std::nullopt;
  // Convergents h/k of the continued fraction of v.
  long long h0 = 1, h1 = static_cast<long long>(std::floor(v)), k0 = 0, k1 = 1;
  double frac = v - std::floor(v);
  std::optional<Rational> best;
  auto consider = [&](long long h, long long k) {
    if (std::abs(v - static_cast<double>(h) / static_cast<double>(k)) <= tol && !best)
      best = make_rational(h, k);
  };
  // Nearest integer first: with a wide tolerance the floor convergent could be accepted.
  const double nearest = std::round(v);
  if (std::abs(v - nearest) <= tol && std::abs(nearest) < 9e15) return Rational(Integer(nearest));
  for (int it = 0; it < 64 && !best && frac > 1e-300; ++it) {
    const double inv = 1.0 / frac;
    const long long a = static_cast<long long>(std::floor(inv));
    frac = inv - std::floor(inv);
    const long long h2 = a * h1 + h0, k2 = a * k1 + k0;
    if (k2 > max_den || k2 <= 0) break;
    h0 = h1;
    h1 = h2;
    k0 = k1;
    k1 = k2;
    consider(h1, k1);
  }
  return best;
}

std::optional<UniPoly> round_polynomial(const CVec& c, long max_den, double tol) {
  std::vector<Rational> out;
  for (const Complex& z : c) {
    const double t = tol * std::max(1.0, std::abs(z));
    if (std::abs(z.imag()) > t) return std::nullopt;
    auto q = rational_round(z.real(), max_den, t);
    if (!q) return std::nullopt;
    out.push_back(*q);
  }
  return UniPoly(std::move(out));
}

int numeric_degree(const CVec& c, double tol, double radius) {
  std::vector<double> w(c.size());
  double m = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    w[k] = std::abs(c[k]) * std::pow(radius, static_cast<double>(k));
    m = std::max(m, w[k]);
  }
  if (m == 0) return -1;
  for (std::size_t k = c.size(); k-- > 0;)
    if (w[k] > tol * m) return static_cast<int>(k);
  return -1;
}

OrbitPolynomials orbit_r_polys(const UniPoly& f, const UniPoly& omega, const MonodromyRep& rep,
                               const OrbitPartition& orbits) {
  OrbitPolynomials out;
  const int d = f.degree();
  const int n = std::max(omega.degree(), 1);
  const int bound = (n - 1) * (d - 1) / 2;
  const int samples = std::max(bound, d - 1) + 5;
  const CVec w = to_cvec(omega);
  const double radius = sampling_radius(rep.critical.values);

  // Roots at the sample points, labels transported from the base.
  std::vector<Complex> ts(static_cast<std::size_t>(samples));
  std::vector<CVec> roots(static_cast<std::size_t>(samples));
  for (int k = 0; k < samples; ++k) ts[static_cast<std::size_t>(k)] = std::polar(radius, 0.1 + 2 * kPi * k / samples);
  parallel_for(ts.size(), [&](std::size_t k) { roots[k] = roots_at(rep, ts[k]); });
  auto lookup = [&](Complex t) -> const CVec& {
    for (std::size_t k = 0; k < ts.size(); ++k)
      if (ts[k] == t) return roots[k];
    throw std::logic_error("sample point not precomputed");
  };

  auto representatives = [&](std::size_t o) {
    std::vector<SimpleCycle> reps;
    for (const SimpleCycle& c : orbits.orbits[o])
      if (orbits.negation[o] != o || c.i < c.j) reps.push_back(c);
    return reps;
  };

  std::vector<Complex> product_values(static_cast<std::size_t>(samples), Complex(1.0));
  for (std::size_t o : orbits.reduced) {
    OrbitPolynomial op;
    op.orbit = o;
    const std::vector<SimpleCycle> reps = representatives(o);
    for (const SimpleCycle& c : reps) {
      bool vanish = true;
      for (std::size_t k = 0; k < 3 && k < roots.size(); ++k)
        if (relative_integral(w, roots[k], c) >= 1e-10) vanish = false;
      if (vanish) op.numerator_zero = true;
    }
    auto r_value = [&](Complex t) {
      const CVec& x = lookup(t);
      Complex p(1.0);
      for (const SimpleCycle& c : reps) {
        const std::size_t i = static_cast<std::size_t>(c.i), j = static_cast<std::size_t>(c.j);
        p *= (horner(w, x[i]) - horner(w, x[j])) / (x[i] - x[j]);
      }
      return p;
    };
    auto delta_value = [&](Complex t) {
      const CVec& x = lookup(t);
      Complex p(1.0);
      for (const SimpleCycle& c : orbits.orbits[o])
        p *= x[static_cast<std::size_t>(c.i)] - x[static_cast<std::size_t>(c.j)];
      return p;
    };
    if (!op.numerator_zero) {
      op.r = interpolate_on_circle(r_value, Complex{}, radius, samples);
      op.r_exact = round_polynomial(op.r);
      op.degree = op.r_exact ? op.r_exact->degree() : numeric_degree(op.r, 1e-8, radius);
      out.degree_sum += op.degree;
      for (std::size_t k = 0; k < ts.size(); ++k) product_values[k] *= r_value(ts[k]);
    }
    op.delta = interpolate_on_circle(delta_value, Complex{}, radius, samples);
    op.delta_degree = numeric_degree(op.delta, 1e-8, radius);
    out.polys.push_back(std::move(op));
  }

  // Delta over every orbit against the exact discriminant.
  {
    auto full_delta = [&](Complex t) {
      const CVec& x = lookup(t);
      Complex p(1.0);
      for (std::size_t i = 0; i < x.size(); ++i)
        for (std::size_t j = 0; j < x.size(); ++j)
          if (i != j) p *= x[i] - x[j];
      return p;
    };
    const CVec delta = interpolate_on_circle(full_delta, Complex{}, radius, samples);
    const UniPoly disc = discriminant(fibre_family(f));
    const Rational sign = ((d * (d - 1) / 2) % 2 == 0) ? Rational(1) : Rational(-1);
    const auto rounded = round_polynomial(delta);
    out.delta_certified = rounded && f.leading() == 1 && *rounded == sign * disc;
  }

  const bool any_zero = std::any_of(out.polys.begin(), out.polys.end(), [](const OrbitPolynomial& p) { return p.numerator_zero; });
  if (!any_zero && f.leading() == 1) {
    std::vector<Complex> vals = product_values;
    std::size_t k = 0;
    const CVec product = interpolate_on_circle([&](Complex) { return vals[k++]; }, Complex{}, radius, samples);
    out.product_exact = round_polynomial(product);
    const ROmegaSquared exact = r_omega_squared(f, omega);
    if (!exact.identically_zero) {
      UniPoly target = exact.r;
      if (out.product_exact && !out.product_exact->is_zero() && sgn(out.product_exact->leading()) != sgn(target.leading()))
        target = -target;
      for (std::size_t i = 0; i < product.size(); ++i) {
        const double e = i < target.size() ? target[i].get_d() : 0.0;
        out.max_deviation = std::max(out.max_deviation, std::abs(product[i] - e));
      }
      if (out.product_exact &&
          (*out.product_exact) * (*out.product_exact) == exact.constant * exact.r * exact.r) {
        out.product_certified = true;
        out.product_certificate = "exact";
      } else {
        // Coefficients past double precision: compare squares at the samples.
        const CVec rc = to_cvec(exact.r);
        const double cst = exact.constant.get_d();
        double worst = 0, scale = 0;
        for (std::size_t i = 0; i < ts.size(); ++i) {
          const Complex lhs = product_values[i] * product_values[i];
          const Complex rv = horner(rc, ts[i]);
          worst = std::max(worst, std::abs(lhs - cst * rv * rv));
          scale = std::max(scale, std::abs(lhs));
        }
        out.sample_deviation = scale > 0 ? worst / scale : 0;
        if (scale > 0 && out.sample_deviation < 1e-9) {
          out.product_certified = true;
          out.product_certificate = "samples";
        }
      }
    }
  }
  return out;
}

CVec w_squared(const MonodromyRep& rep, const UniPoly& omega, const std::vector<int>& gamma,
               const std::vector<int>& delta, int samples) {
  const CVec w = to_cvec(omega);
  const CVec x = to_cvec(UniPoly::variable());
  const double radius = sampling_radius(rep.critical.values);
  return interpolate_on_circle(
      [&](Complex t) {
        const CVec r = roots_at(rep, t);
        const Complex det = cycle_integral(w, r, gamma) * cycle_integral(x, r, delta) -
                            cycle_integral(w, r, delta) * cycle_integral(x, r, gamma);
        return det * det;
      },
      Complex{}, radius, samples);
}

namespace {

UniPoly random_monic(std::mt19937_64& rng, int degree, int height, bool constant_term) {
  std::uniform_int_distribution<int> coef(-height, height);
  std::vector<Rational> c(static_cast<std::size_t>(degree + 1));
  for (int k = constant_term ? 0 : 1; k < degree; ++k) c[static_cast<std::size_t>(k)] = coef(rng);
  c[static_cast<std::size_t>(degree)] = 1;
  return UniPoly(std::move(c));
}

UniPoly random_omega(std::mt19937_64& rng, int n, int height, const std::vector<int>& monomials) {
  std::uniform_int_distribution<int> coef(-height, height);
  std::vector<Rational> c(static_cast<std::size_t>(n + 1));
  if (monomials.empty()) {
    for (int k = 1; k < n; ++k) c[static_cast<std::size_t>(k)] = coef(rng);
    c[static_cast<std::size_t>(n)] = 1;
  } else {
    for (int k : monomials)
      if (k >= 1 && k <= n) c[static_cast<std::size_t>(k)] = coef(rng);
    c[static_cast<std::size_t>(n)] = 1;
  }
  return UniPoly(std::move(c));
}

CVec poly_mul(const CVec& a, const CVec& b) {
  CVec out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

}  // namespace

WitnessRecord lower_bound_witness(const MonodromyRep& rep, const UniPoly& f, int n, const Domain& disc) {
  if (disc.kind != Domain::Kind::Disc) throw std::invalid_argument("witness needs a disc");
  const int m = f.degree();
  WitnessRecord w;
  w.domain = disc.to_string();
  w.target = vn_dimension(m, n) - 1;
  if (w.target < 1 || rep.degree() < 2) {
    w.zeros = 0;
    return w;
  }
  // Basis x^i f^j with i >= 1, i + jm <= n; on the fibre its cycle integral is t^j (x_a^i - x_b^i).
  std::vector<std::pair<int, int>> basis;
  for (int j = 0; j * m < n; ++j)
    for (int i = 1; i + j * m <= n; ++i) basis.emplace_back(i, j);
  const DomainLabels labels(rep, disc);
  const auto k = static_cast<Eigen::Index>(w.target);
  Eigen::MatrixXcd a(k, static_cast<Eigen::Index>(basis.size()));
  for (Eigen::Index l = 0; l < k; ++l) {
    const Complex t = disc.center + 0.5 * disc.radius * std::polar(1.0, 0.2 + 2 * kPi * static_cast<double>(l) / static_cast<double>(k));
    const CVec x = labels.roots_at(t);
    for (std::size_t b = 0; b < basis.size(); ++b)
      a(l, static_cast<Eigen::Index>(b)) =
          std::pow(t, basis[b].second) * (std::pow(x[0], basis[b].first) - std::pow(x[1], basis[b].first));
  }
  const Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a, Eigen::ComputeFullV);
  const Eigen::VectorXcd c = svd.matrixV().col(svd.matrixV().cols() - 1);
  const CVec fc = to_cvec(f);
  CVec omega(1, Complex{});
  CVec fpow{Complex(1.0)};
  for (int j = 0; j * m < n; ++j) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (basis[b].second != j) continue;
      CVec xi(static_cast<std::size_t>(basis[b].first) + 1);
      xi.back() = c(static_cast<Eigen::Index>(b));
      const CVec term = poly_mul(xi, fpow);
      if (term.size() > omega.size()) omega.resize(term.size());
      for (std::size_t q = 0; q < term.size(); ++q) omega[q] += term[q];
    }
    fpow = poly_mul(fpow, fc);
  }
  try {
    w.zeros = winding_count(labels, omega, SimpleCycle{0, 1}, disc.boundary());
  } catch (const std::exception&) {
    w.zeros.reset();
  }
  return w;
}

namespace {

struct InstanceOutcome {
  std::vector<HarnessRow> rows;
  std::optional<WitnessRecord> witness;
  std::optional<std::string> quarantine;
};

InstanceOutcome run_instance(const HarnessSpec& spec, int inst) {
  InstanceOutcome out;
  std::seed_seq seq{static_cast<unsigned long long>(spec.seed & 0xffffffffULL),
                    static_cast<unsigned long long>(spec.seed >> 32), static_cast<unsigned long long>(inst)};
  std::mt19937_64 rng(seq);
  const int m = std::uniform_int_distribution<int>(spec.m_lo, spec.m_hi)(rng);
  const int n = std::uniform_int_distribution<int>(spec.n_lo, spec.n_hi)(rng);
  const UniPoly f = random_monic(rng, m, spec.height, true);
  const UniPoly omega = random_omega(rng, n, spec.height, spec.omega_monomials);
  const std::string fs = format_poly(f), ws = format_poly(omega);
  try {
    const MonodromyRep rep = monodromy_rep(f, MonodromyOptions{.base = std::nullopt, .closure_cap = 1000000,
                                                               .closure = false, .traces = nullptr});
    const ZeroContext ctx = zero_context(f, omega, rep, spec.check_orbit);
    const Candidates& cand = ctx.candidates;
    const CVec& sigma = rep.critical.values;
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    double span = 1.0;
    for (const Complex& s : sigma) span = std::max(span, std::abs(s));
    for (int k = 0; k < spec.discs_per_instance; ++k) {
      Complex c;
      if (k % 2 == 0 && !cand.t.empty()) {
        const Complex t0 = cand.t[static_cast<std::size_t>(rng() % cand.t.size())];
        c = t0 + span * 0.05 * Complex(unit(rng) - 0.5, unit(rng) - 0.5);
      } else {
        c = span * Complex(2 * unit(rng) - 1, 2 * unit(rng) - 1);
      }
      double dist = std::numeric_limits<double>::infinity();
      for (const Complex& s : sigma) dist = std::min(dist, std::abs(s - c));
      double r = (0.3 + 0.6 * unit(rng)) * dist;
      // Keep every candidate well inside or well outside the circle.
      for (int shrink = 0; shrink < 40; ++shrink) {
        bool ok = true;
        for (const Complex& t0 : cand.t)
          if (std::abs(std::abs(t0 - c) - r) < 0.05 * r) ok = false;
        if (ok) break;
        r *= 0.9;
      }
      const Domain dom = Domain::disc(c, r);
      if (k == 0 && spec.witness) {
        out.witness = lower_bound_witness(rep, f, n, dom);
        out.witness->instance = inst;
      }
      const DomainLabels labels(rep, dom);
      const CVec w = to_cvec(omega);
      std::vector<int> wind;
      if (spec.check_winding) wind = winding_counts_all(labels, w, dom.boundary());
      const std::size_t d = rep.degree();
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
          HarnessRow row;
          row.instance = inst;
          row.m = m;
          row.n = n;
          row.f = fs;
          row.omega = ws;
          row.domain = dom.to_string();
          row.cycle = {static_cast<int>(i), static_cast<int>(j)};
          row.bezout_bound = make_rational((m - 1) * (n - 1), 2);
          const ZeroReport zr = zeros_in_domain(f, omega, row.cycle, dom, rep, &ctx);
          if (zr.identically_zero) {
            row.note = "identically zero";
            out.rows.push_back(row);
            continue;
          }
          row.matched = zr.zero_count_with_multiplicity();
          row.winding = spec.check_winding ? wind[i * d + j] : row.matched;
          if (zr.orbit_bound) row.orbit_bound = *zr.orbit_bound;
          std::vector<std::string> notes;
          if (spec.check_bezout && Rational(row.matched) > row.bezout_bound) notes.push_back("bezout");
          if (spec.check_winding && row.winding != row.matched) notes.push_back("winding");
          if (spec.check_orbit && zr.orbit_bound && row.matched > row.orbit_bound) notes.push_back("orbit");
          if (!zr.ambiguous.empty()) notes.push_back("ambiguous candidate");
          row.pass = notes.empty() || (notes.size() == 1 && notes[0] == "ambiguous candidate");
          for (std::size_t q = 0; q < notes.size(); ++q) row.note += (q ? ";" : "") + notes[q];
          out.rows.push_back(row);
        }
    }
    if (spec.check_star) {
      const IdentityReport idr = star_identity_check(omega, UniPoly::variable(), f, f);
      if (!idr.ok) {
        HarnessRow row;
        row.instance = inst;
        row.m = m;
        row.n = n;
        row.f = fs;
        row.omega = ws;
        row.pass = false;
        row.note = "star identity: " + idr.failure;
        out.rows.push_back(row);
      }
    }
  } catch (const std::exception& e) {
    out.rows.clear();
    out.witness.reset();
    out.quarantine = "instance " + std::to_string(inst) + " f=" + fs + " omega=" + ws + ": " + e.what();
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

}  // namespace

HarnessResult bound_harness(const HarnessSpec& spec) {
  if (spec.m_lo < 2 || spec.m_hi < spec.m_lo) throw std::invalid_argument("m range must satisfy 2 <= lo <= hi");
  if (spec.m_hi > 16) throw std::invalid_argument("m above 16 is not supported");
  if (spec.n_lo < 1 || spec.n_hi < spec.n_lo) throw std::invalid_argument("n range must satisfy 1 <= lo <= hi");
  if (spec.height < 1) throw std::invalid_argument("height must be positive");
  if (spec.instances < 1) throw std::invalid_argument("instances must be positive");
  if (spec.discs_per_instance < 1) throw std::invalid_argument("discs_per_instance must be positive");
  std::vector<InstanceOutcome> outcomes(static_cast<std::size_t>(spec.instances));
  parallel_for(outcomes.size(), [&](std::size_t k) { outcomes[k] = run_instance(spec, static_cast<int>(k)); });
  HarnessResult r;
  for (InstanceOutcome& o : outcomes) {
    if (o.quarantine) r.quarantined.push_back(*o.quarantine);
    if (o.witness) r.witnesses.push_back(*o.witness);
    for (HarnessRow& row : o.rows) {
      if (!row.pass) ++r.failures;
      r.max_matched = std::max(r.max_matched, row.matched);
      r.rows.push_back(std::move(row));
    }
  }
  return r;
}

std::string harness_csv(const HarnessResult& r) {
  std::ostringstream os;
  os << "instance,m,n,f,omega,domain,i,j,matched,winding,bezout_bound,orbit_bound,pass,note\n";
  for (const HarnessRow& row : r.rows)
    os << row.instance << ',' << row.m << ',' << row.n << ',' << csv_field(row.f) << ',' << csv_field(row.omega)
       << ',' << csv_field(row.domain) << ',' << row.cycle.i + 1 << ',' << row.cycle.j + 1 << ',' << row.matched
       << ',' << row.winding << ',' << row.bezout_bound.get_str() << ',' << row.orbit_bound << ','
       << (row.pass ? "true" : "false") << ',' << csv_field(row.note) << '\n';
  return os.str();
}

}  // namespace abelzero
