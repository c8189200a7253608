#pragma once

// Zeros of I(t) = omega(x_i(t)) - omega(x_j(t)): candidates from the curves
// (f(x) - f(y))/(x - y) = 0 and (omega(x) - omega(y))/(x - y) = 0, argument
// principle counts, orbit polynomials and the corpus bound harness.

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abelzero/monodromy.hpp"

namespace abelzero {

/// Outer and inner variables are x and y; the difference quotient is symmetric
/// so either may be eliminated.
struct CurvePair {
  BiPoly gamma_f;
  BiPoly gamma_omega;
};

/// (p(x) - p(y)) / (x - y), exact.
BiPoly difference_quotient(const UniPoly& p);
CurvePair curve_pair(const UniPoly& f, const UniPoly& omega);

struct IntersectionPoint {
  Complex x, y;
  int multiplicity = 1;   // multiplicity of x as a root of the eliminant
  double residual = 0;    // max of |gamma_f|, |gamma_omega| after polishing
};

struct Intersections {
  bool common_component = false;
  BiPoly common;                      // gcd of the two curves, 1 when none
  UniPoly eliminant;                  // Res_y of the reduced curves, in x
  std::vector<IntersectionPoint> points;
  int count_with_multiplicity = 0;
};

/// When the curves share a component it is reported and divided out of
/// gamma_f, so the remaining points are the isolated ones.
Intersections intersections(const CurvePair& pair);

struct Domain {
  enum class Kind { Disc, Rectangle, Interval } kind = Kind::Disc;
  Complex center;
  double radius = 0;
  Complex lo, hi;   // rectangle corners or interval endpoints (real parts)

  static Domain disc(Complex center, double radius);
  static Domain rectangle(Complex lo, Complex hi);
  static Domain interval(double a, double b);

  bool contains(Complex t) const;
  /// Reference point from which labels are continued inside the domain.
  Complex anchor() const;
  /// Positively oriented boundary (disc and rectangle only).
  Path boundary() const;
  /// Distance from t to the complement, for discs and rectangles.
  double depth(Complex t) const;
  std::string to_string() const;
};

/// Parses "disc:cx,cy,r", "rect:x0,y0,x1,y1" or "interval:a,b".
Domain parse_domain(const std::string& text);

/// Roots labelled by continuation from the base to the domain anchor, then
/// along a straight segment inside the convex domain.
class DomainLabels {
 public:
  DomainLabels(const MonodromyRep& rep, const Domain& domain);
  CVec roots_at(Complex t, std::vector<TrackSample>* trace = nullptr) const;
  const CVec& anchor_roots() const { return anchor_roots_; }
  const MonodromyRep& rep() const { return rep_; }
  const Domain& domain() const { return domain_; }

 private:
  const MonodromyRep& rep_;
  Domain domain_;
  CVec anchor_roots_;
};

/// Integral of omega over sum_k n_k x_k.
Complex cycle_integral(const CVec& omega, const CVec& roots, const std::vector<int>& coeffs);
Complex cycle_integral(const CVec& omega, const CVec& roots, const SimpleCycle& c);
std::vector<int> cycle_vector(const SimpleCycle& c, std::size_t d);

struct Zero {
  Complex t;
  double residual = 0;
  int multiplicity = 1;
};

struct ZeroReport {
  SimpleCycle cycle;
  Domain domain;
  bool identically_zero = false;
  std::vector<Zero> zeros;
  std::size_t candidates = 0;          // candidate values inside the domain
  std::vector<Complex> ambiguous;      // residual inside the 1e-8..1e-6 band
  std::optional<int> winding;          // discs and rectangles
  std::optional<int> sign_changes;     // intervals with a real or imaginary integral
  Rational bezout_bound;               // (m-1)(n-1)/2
  std::optional<int> orbit_bound;      // deg R_{omega,i} for the cycle's orbit
  int zero_count_with_multiplicity() const;
};

struct Candidates {
  bool common_component = false;
  std::vector<Complex> t;  // distinct values f(x) at isolated intersection points off the critical values
};

Candidates zero_candidates(const UniPoly& f, const UniPoly& omega);

struct WindingOptions {
  double max_step = 0.05;
  int refinements = 12;
};

/// Number of zeros of I inside a closed contour, counted by the increase of
/// arg I with every step below pi/4. Throws std::runtime_error when I comes
/// within 1e-10 of zero on the contour.
int winding_count(const DomainLabels& labels, const CVec& omega, const SimpleCycle& cycle, const Path& contour,
                  const WindingOptions& opt = {});

/// Winding numbers of all cycles i < j around one contour, indexed i*d + j.
/// A cycle whose integral vanishes at every contour sample gets 0.
std::vector<int> winding_counts_all(const DomainLabels& labels, const CVec& omega, const Path& contour,
                                    const WindingOptions& opt = {});

struct OrbitPolynomials;

/// Data shared by every cycle and domain for one pair (f, omega).
struct ZeroContext {
  Candidates candidates;
  std::optional<OrbitPartition> orbits;
  std::shared_ptr<const OrbitPolynomials> polys;  // set for monic f when orbit data is requested
};

ZeroContext zero_context(const UniPoly& f, const UniPoly& omega, const MonodromyRep& rep, bool with_orbits = true);

/// Intervals are open: critical values at the endpoints are allowed.
ZeroReport zeros_in_domain(const UniPoly& f, const UniPoly& omega, const SimpleCycle& cycle, const Domain& domain,
                           const MonodromyRep& rep, const ZeroContext* ctx = nullptr);

struct OrbitPolynomial {
  std::size_t orbit = 0;
  bool numerator_zero = false;
  CVec r;                        // R_{omega,i} coefficients in t
  std::optional<UniPoly> r_exact;
  int degree = 0;
  CVec delta;                    // Delta_i coefficients in t
  int delta_degree = 0;
};

struct OrbitPolynomials {
  std::vector<OrbitPolynomial> polys;   // one per reduced orbit
  bool product_certified = false;       // prod R_i squared equals the exact R_omega^2
  bool delta_certified = false;         // prod Delta_i equals (-1)^{d(d-1)/2} disc(f - t)
  std::optional<UniPoly> product_exact; // rounded product of the R_i
  int degree_sum = 0;
  double max_deviation = 0;
  // "exact" when the rounded product squares to the exact R_omega^2, "samples"
  // when only the sampled squares agree (relative 1e-9), "" otherwise.
  std::string product_certificate;
  double sample_deviation = 0;
};

OrbitPolynomials orbit_r_polys(const UniPoly& f, const UniPoly& omega, const MonodromyRep& rep,
                               const OrbitPartition& orbits);

/// Interpolates a polynomial of degree < n from samples on a circle, returning
/// coefficients in t.
CVec interpolate_on_circle(const std::function<Complex(Complex)>& fn, Complex center, double radius, int n);

/// Continued-fraction reconstruction with denominator at most max_den and
/// absolute error at most tol.
std::optional<Rational> rational_round(double v, long max_den = 1000000, double tol = 1e-8);
/// Rounds real parts of all coefficients; fails when an imaginary part exceeds tol.
std::optional<UniPoly> round_polynomial(const CVec& c, long max_den = 1000000, double tol = 1e-8);

/// Numeric degree: highest k with |c_k| radius^k above tol times the largest such term.
int numeric_degree(const CVec& c, double tol = 1e-8, double radius = 1.0);

/// W = det [[I_gamma(omega), I_gamma(x)], [I_delta(omega), I_delta(x)]] squared,
/// interpolated as a polynomial in t from samples on a circle about the origin enclosing the critical values.
CVec w_squared(const MonodromyRep& rep, const UniPoly& omega, const std::vector<int>& gamma,
               const std::vector<int>& delta, int samples);

struct RealZeroCount {
  int sign_changes = 0;
  std::vector<double> located;   // bisected sign-change locations
  bool real_valued = false;      // integral real (or purely imaginary) along the interval
};

/// Sample-and-bisect along [a, b] for an integral that is real or purely
/// imaginary on the interval.
RealZeroCount real_zero_count(const DomainLabels& labels, const CVec& omega, const SimpleCycle& cycle);

struct HarnessSpec {
  int m_lo = 3, m_hi = 3;
  int n_lo = 2, n_hi = 2;
  int height = 5;
  int instances = 10;
  unsigned long long seed = 1;
  int discs_per_instance = 3;
  bool check_bezout = true;
  bool check_winding = true;
  bool check_orbit = true;
  bool check_star = false;
  /// Look for a lower-bound witness in the first disc of each instance.
  bool witness = true;
  /// Restrict omega to span{x, ..., x^n} without constant term (always true) and
  /// to this explicit monomial list when nonempty.
  std::vector<int> omega_monomials;
};

struct HarnessRow {
  int instance = 0;
  int m = 0, n = 0;
  std::string f, omega;
  std::string domain;
  SimpleCycle cycle;
  int matched = 0;       // with multiplicity
  int winding = 0;
  Rational bezout_bound;
  int orbit_bound = 0;
  bool pass = true;
  std::string note;
};

/// Lower-bound witness: omega in V_n whose integral over the cycle (1,2) is
/// forced to vanish at target = dim V_n - 1 points of a disc; zeros is its
/// winding count around the disc. Reported, never asserted.
struct WitnessRecord {
  int instance = 0;
  int target = 0;
  std::optional<int> zeros;  // empty when the winding count failed
  std::string domain;
};

/// Witness search for f of degree m and V_n, cycle (0,1) inside a disc domain.
WitnessRecord lower_bound_witness(const MonodromyRep& rep, const UniPoly& f, int n, const Domain& disc);

struct HarnessResult {
  std::vector<HarnessRow> rows;
  std::vector<WitnessRecord> witnesses;
  std::vector<std::string> quarantined;   // instance failures that stopped the instance
  int failures = 0;                       // rows with pass == false
  int max_matched = 0;
};

HarnessResult bound_harness(const HarnessSpec& spec);
std::string harness_csv(const HarnessResult& r);

}  // namespace abelzero
