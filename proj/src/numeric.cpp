#include "abelzero/numeric.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <numbers>
#include <thread>

#include "abelzero/algebra.hpp"

namespace abelzero {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

CVec trimmed(const CVec& c) {
  CVec out = c;
  while (!out.empty() && out.back() == Complex{}) out.pop_back();
  return out;
}

double backward_error(const CVec& c, Complex z) {
  double scale = 0, az = std::abs(z), pw = 1;
  for (const Complex& a : c) {
    scale += std::abs(a) * pw;
    pw *= az;
  }
  return std::abs(horner(c, z)) / (scale > 0 ? scale : 1.0);
}

double wrap_positive(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

}  // namespace

CVec to_cvec(const UniPoly& p) {
  CVec out;
  out.reserve(p.size());
  for (const Rational& q : p.coefficients()) out.emplace_back(q.get_d(), 0.0);
  return out;
}

Complex horner(const CVec& c, Complex x) {
  Complex acc{};
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

std::pair<Complex, Complex> horner2(const CVec& c, Complex x) {
  Complex p{}, dp{};
  for (std::size_t i = c.size(); i-- > 0;) {
    dp = dp * x + p;
    p = p * x + c[i];
  }
  return {p, dp};
}

CVec aberth_roots(const CVec& coeffs, const RootOptions& opt) {
  CVec c = trimmed(coeffs);
  if (c.size() <= 1) return {};
  const std::size_t d = c.size() - 1;
  const Complex lc = c.back();
  for (Complex& a : c) a /= lc;
  if (d == 1) return {-c[0]};

  const Complex center = -c[d - 1] / static_cast<double>(d);
  double radius = 0;
  for (std::size_t k = 1; k <= d; ++k)
    radius = std::max(radius, std::pow(std::abs(c[d - k]), 1.0 / static_cast<double>(k)));
  if (radius == 0) return CVec(d, Complex{});
  CVec z(d);
  for (std::size_t k = 0; k < d; ++k)
    z[k] = center + radius * std::polar(1.0, kTwoPi * static_cast<double>(k) / static_cast<double>(d) + 0.7);

  bool converged = false;
  for (int it = 0; it < opt.max_iter && !converged; ++it) {
    converged = true;
    for (std::size_t k = 0; k < d; ++k) {
      auto [p, dp] = horner2(c, z[k]);
      if (p == Complex{}) continue;
      const Complex ratio = p / dp;
      Complex s{};
      for (std::size_t j = 0; j < d; ++j)
        if (j != k) s += 1.0 / (z[k] - z[j]);
      const Complex w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      if (std::abs(w) > opt.tol * std::max(1.0, std::abs(z[k]))) converged = false;
    }
  }
  // Newton polish; keeps a step only when it lowers the residual.
  for (Complex& r : z)
    for (int it = 0; it < 3; ++it) {
      auto [p, dp] = horner2(c, r);
      if (dp == Complex{}) break;
      const Complex next = r - p / dp;
      if (std::abs(horner(c, next)) < std::abs(p)) r = next;
      else break;
    }
  if (!converged)
    for (const Complex& r : z)
      if (backward_error(c, r) > 1e-9) throw std::runtime_error("Aberth iteration did not converge");
  return z;
}

std::vector<RootWithMultiplicity> exact_roots(const UniPoly& p, const RootOptions& opt) {
  std::vector<RootWithMultiplicity> out;
  if (p.degree() < 1) return out;
  for (const Factor& f : squarefree_decomposition(p))
    for (const Complex& z : aberth_roots(to_cvec(f.poly), opt)) out.push_back({z, f.multiplicity});
  return out;
}

void sort_roots(CVec& roots) {
  double scale = 1;
  for (const Complex& z : roots) scale = std::max(scale, std::abs(z));
  const double eps = 1e-9 * scale;
  std::sort(roots.begin(), roots.end(), [eps](const Complex& a, const Complex& b) {
    const double ra = std::round(a.real() / eps), rb = std::round(b.real() / eps);
    if (ra != rb) return ra < rb;
    return a.imag() < b.imag();
  });
}

CVec fibre_roots(const CVec& f, Complex t, const RootOptions& opt) {
  CVec c = f;
  c[0] -= t;
  CVec r = aberth_roots(c, opt);
  sort_roots(r);
  return r;
}

double min_separation(const CVec& z) {
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < z.size(); ++i)
    for (std::size_t j = i + 1; j < z.size(); ++j) m = std::min(m, std::abs(z[i] - z[j]));
  return m;
}

PathPiece PathPiece::line(Complex from, Complex to) {
  PathPiece p;
  p.kind = Kind::Line;
  p.a = from;
  p.b = to;
  return p;
}

PathPiece PathPiece::arc(Complex center, double radius, double theta0, double sweep) {
  PathPiece p;
  p.kind = Kind::Arc;
  p.center = center;
  p.radius = radius;
  p.theta0 = theta0;
  p.sweep = sweep;
  return p;
}

Complex PathPiece::at(double s) const {
  if (kind == Kind::Line) return a + s * (b - a);
  return center + std::polar(radius, theta0 + s * sweep);
}

double PathPiece::length() const {
  return kind == Kind::Line ? std::abs(b - a) : radius * std::abs(sweep);
}

PathPiece PathPiece::reversed() const {
  if (kind == Kind::Line) return line(b, a);
  return arc(center, radius, theta0 + sweep, -sweep);
}

double PathPiece::distance_to(Complex z) const {
  if (kind == Kind::Line) {
    const Complex dir = b - a;
    const double len2 = std::norm(dir);
    double s = len2 > 0 ? (std::conj(dir) * (z - a)).real() / len2 : 0.0;
    s = std::clamp(s, 0.0, 1.0);
    return std::abs(z - at(s));
  }
  const double off = std::abs(std::abs(z - center) - radius);
  if (std::abs(sweep) >= kTwoPi) return off;
  const double phi = std::arg(z - center);
  const double rel = sweep > 0 ? wrap_positive(phi - theta0) : wrap_positive(theta0 - phi);
  if (rel <= std::abs(sweep)) return off;
  return std::min(std::abs(z - start()), std::abs(z - end()));
}

double Path::length() const {
  double l = 0;
  for (const PathPiece& p : pieces) l += p.length();
  return l;
}

double Path::distance_to(Complex z) const {
  double m = std::numeric_limits<double>::infinity();
  for (const PathPiece& p : pieces) m = std::min(m, p.distance_to(z));
  return m;
}

Path Path::reversed() const {
  Path r;
  for (std::size_t i = pieces.size(); i-- > 0;) r.pieces.push_back(pieces[i].reversed());
  return r;
}

void Path::append(const Path& other) { pieces.insert(pieces.end(), other.pieces.begin(), other.pieces.end()); }

TrackingError::TrackingError(TrackFailure k, Complex w, const std::string& what)
    : std::runtime_error(what), kind(k), where(w) {}

CVec track(const CVec& f, const Path& path, CVec x, const TrackOptions& opt, std::vector<TrackSample>* trace) {
  for (const Complex& s : opt.sigma)
    if (path.distance_to(s) < opt.margin)
      throw TrackingError(TrackFailure::PathTooClose, s, "path passes too close to a critical value");
  if (trace) trace->push_back({0, 0.0, path.pieces.empty() ? Complex{} : path.start(), x});
  const std::size_t n = x.size();
  CVec y(n);
  for (std::size_t k = 0; k < path.pieces.size(); ++k) {
    const PathPiece& piece = path.pieces[k];
    double s = 0, h = opt.max_step;
    Complex t = piece.at(0.0);
    while (s < 1.0) {
      const double sn = std::min(1.0, s + h);
      const Complex tn = piece.at(sn);
      const double limit = min_separation(x) / 3.0;
      bool ok = true;
      int worst_iterations = 0;
      for (std::size_t i = 0; i < n && ok; ++i) {
        const Complex pred = x[i] + (tn - t) / horner2(f, x[i]).second;
        Complex z = pred;
        bool converged = false;
        int it = 0;
        for (; it < 10; ++it) {
          auto [v, dv] = horner2(f, z);
          const Complex dz = (v - tn) / dv;
          z -= dz;
          if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) break;
          if (std::abs(dz) <= 1e-14 * (1.0 + std::abs(z))) {
            converged = true;
            break;
          }
          if (it == 9 && std::abs(dz) <= 1e-11 * (1.0 + std::abs(z))) converged = true;
        }
        worst_iterations = std::max(worst_iterations, it);
        ok = converged && std::abs(z - pred) < limit && std::abs(z - x[i]) < limit;
        y[i] = z;
      }
      if (ok) {
        x = y;
        s = sn;
        t = tn;
        if (trace) trace->push_back({k, s, t, x});
        if (worst_iterations <= 3) h = std::min(2.0 * h, opt.max_step);
      } else {
        h *= 0.5;
        if (h < opt.min_step) throw TrackingError(TrackFailure::StepUnderflow, tn, "step size underflow while tracking");
      }
    }
  }
  return x;
}

std::vector<int> match_permutation(const CVec& start, const CVec& end) {
  const std::size_t n = start.size();
  std::vector<int> perm(n, -1);
  std::vector<bool> used(n, false);
  const double tol = std::max(1e-9, 1e-6 * min_separation(start));
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    double bd = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      const double dist = std::abs(end[i] - start[j]);
      if (dist < bd) {
        bd = dist;
        best = j;
      }
    }
    if (bd > tol * std::max(1.0, std::abs(start[best])) || used[best])
      throw std::runtime_error("tracked roots do not return to the fibre start");
    used[best] = true;
    perm[i] = static_cast<int>(best);
  }
  return perm;
}

unsigned worker_count() {
  if (const char* env = std::getenv("ABELZERO_THREADS")) {
    char* endp = nullptr;
    const long v = std::strtol(env, &endp, 10);
    if (endp != env && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  std::vector<std::exception_ptr> errors(n);
  const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            fn(i);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        }
      });
    for (std::thread& th : pool) th.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace abelzero
