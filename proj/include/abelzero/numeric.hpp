#pragma once

// Floating-point kernels: simultaneous root finding, Newton polishing,
// piecewise paths in the t-plane and predictor-corrector root tracking.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "abelzero/polynomial.hpp"

namespace abelzero {

/// Coefficients in increasing degree.
using CVec = std::vector<Complex>;

CVec to_cvec(const UniPoly& p);
Complex horner(const CVec& c, Complex x);
/// Value and first derivative.
std::pair<Complex, Complex> horner2(const CVec& c, Complex x);

struct RootOptions {
  double tol = 1e-12;
  int max_iter = 200;
};

/// All roots of a polynomial with complex coefficients by Aberth iteration.
/// Throws std::runtime_error when the iteration does not converge.
CVec aberth_roots(const CVec& coeffs, const RootOptions& opt = {});

struct RootWithMultiplicity {
  Complex z;
  int multiplicity = 1;
};

/// Roots of an exact polynomial: squarefree decomposition first, then Aberth
/// on each squarefree factor.
std::vector<RootWithMultiplicity> exact_roots(const UniPoly& p, const RootOptions& opt = {});

/// Roots of f(x) - t, sorted by (real, imag) for reproducible labels.
CVec fibre_roots(const CVec& f, Complex t, const RootOptions& opt = {});

/// Lexicographic (real, imag) order with a tolerance on the real part.
void sort_roots(CVec& roots);

/// Smallest pairwise distance; infinity for fewer than two points.
double min_separation(const CVec& z);

struct PathPiece {
  enum class Kind { Line, Arc } kind = Kind::Line;
  Complex a, b;           // line endpoints
  Complex center;         // arc centre
  double radius = 0;
  double theta0 = 0;      // start angle
  double sweep = 0;       // signed angle, positive counterclockwise

  static PathPiece line(Complex from, Complex to);
  static PathPiece arc(Complex center, double radius, double theta0, double sweep);

  Complex at(double s) const;
  Complex start() const { return at(0.0); }
  Complex end() const { return at(1.0); }
  double length() const;
  PathPiece reversed() const;
  double distance_to(Complex z) const;
};

struct Path {
  std::vector<PathPiece> pieces;

  Complex start() const { return pieces.front().start(); }
  Complex end() const { return pieces.back().end(); }
  double length() const;
  double distance_to(Complex z) const;
  Path reversed() const;
  void append(const Path& other);
};

enum class TrackFailure { PathTooClose, StepUnderflow, NewtonFailure };

class TrackingError : public std::runtime_error {
 public:
  TrackingError(TrackFailure kind, Complex where, const std::string& what);
  TrackFailure kind;
  Complex where;
};

struct TrackOptions {
  CVec sigma;                 // critical values the path must avoid
  double margin = 1e-9;       // minimal allowed distance to sigma
  double max_step = 0.05;     // in units of the piece parameter
  double min_step = 1e-12;
};

struct TrackSample {
  std::size_t piece = 0;
  double s = 0;
  Complex t;
  CVec roots;
};

/// Continue the roots of f(x) = t along the path. A step is accepted only when
/// the corrector converges and each root moves less than a third of the minimum
/// pairwise root separation, so labels never swap.
CVec track(const CVec& f, const Path& path, CVec start, const TrackOptions& opt = {},
           std::vector<TrackSample>* trace = nullptr);

/// Permutation induced on labels: perm[i] = j when root i ends at start root j.
std::vector<int> match_permutation(const CVec& start, const CVec& end);

/// Number of worker threads: ABELZERO_THREADS when set and positive, else 1 per
/// hardware thread.
unsigned worker_count();

/// Runs fn(i) for i in [0, n) on worker_count() threads. Exceptions are rethrown
/// in index order after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace abelzero
