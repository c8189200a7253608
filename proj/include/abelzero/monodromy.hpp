#pragma once

// Monodromy of the roots of f(x) = t: critical values, distinguished loops,
// permutation generators, group closure, orbits of simple cycles and the
// intersection graph of vanishing cycles.

#include <cstdint>
#include <optional>
#include <vector>

#include "abelzero/numeric.hpp"

namespace abelzero {

using Permutation = std::vector<int>;

struct CriticalPoint {
  Complex x;
  int multiplicity = 1;  // as a root of f'
  std::size_t value_index = 0;
};

struct CriticalData {
  std::vector<CriticalPoint> points;
  CVec values;                           // distinct critical values
  std::vector<int> value_multiplicity;   // multiplicity as a root of disc(f - t)
  double min_distance = 0;               // infinity with fewer than two values
};

/// f must have degree >= 2. Values are the roots of the squarefree part of
/// disc(f - t), so coincident values are merged exactly.
CriticalData critical_values(const UniPoly& f);

/// max Re(sigma) + diam(sigma) + 1 on the real axis.
Complex default_base(const CVec& sigma);

/// A disc the route must go around, and the side to pass it on
/// (+1: left of the direction of travel, -1: right).
struct Obstacle {
  Complex center;
  double radius = 0;
  int side = -1;
};

/// Straight segment from -> to, detouring along circular arcs around every
/// obstacle disc it enters. When `to` lies inside a disc the route ends with a
/// radial segment.
Path route(Complex from, Complex to, const std::vector<Obstacle>& obstacles);

struct Loop {
  Complex value;       // critical value encircled
  double radius = 0;   // radius of the small circle
  Path path;           // based at the base point, counterclockwise
  Permutation perm;    // perm[i] = j: root i ends at root j
};

struct MonodromyOptions {
  std::optional<Complex> base;
  std::size_t closure_cap = 1000000;
  bool closure = true;
  std::vector<std::vector<TrackSample>>* traces = nullptr;  // one trace per loop
};

struct MonodromyRep {
  UniPoly f;
  CVec fc;
  CriticalData critical;
  Complex base;
  CVec base_roots;               // label i is base_roots[i]
  std::vector<Loop> loops;       // ordered by argument as seen from the base
  std::vector<double> obstacle_radius;  // per critical value, used for routing
  std::size_t group_order = 0;
  bool cap_exceeded = false;
  bool transitive = false;

  std::size_t degree() const { return base_roots.size(); }
  std::vector<Permutation> generators() const;
};

MonodromyRep monodromy_rep(const UniPoly& f, const MonodromyOptions& opt = {});

/// First p, then q.
Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
Permutation identity_permutation(std::size_t n);
bool is_transitive(const std::vector<Permutation>& gens, std::size_t n);
/// Permutations as cycles in one-line notation with 1-based labels, e.g. "(1 2)(3 4)".
std::string cycle_notation(const Permutation& p);

struct Closure {
  std::vector<Permutation> elements;  // empty when cap is exceeded
  std::size_t order = 0;
  bool cap_exceeded = false;
};

/// Breadth-first closure under the generators; degree at most 16.
Closure group_closure(const std::vector<Permutation>& gens, std::size_t n, std::size_t cap = 1000000);

/// Permutation of the big counterclockwise loop enclosing every critical value.
Permutation loop_at_infinity(const MonodromyRep& rep);

/// Product of the distinguished generators in loop order.
Permutation generator_product(const MonodromyRep& rep);

struct SimpleCycle {
  int i = 0, j = 1;  // 0-based root labels
  bool operator==(const SimpleCycle&) const = default;
};

struct OrbitPartition {
  std::size_t d = 0;
  std::vector<std::vector<SimpleCycle>> orbits;
  std::vector<std::size_t> negation;  // orbit of -gamma for each orbit
  std::vector<std::size_t> reduced;   // one orbit from each {S, -S} pair
  std::size_t orbit_of(const SimpleCycle& c) const;
  std::vector<std::size_t> index;     // pair i*d + j -> orbit
};

OrbitPartition cycle_orbits(const std::vector<Permutation>& gens, std::size_t d);
OrbitPartition cycle_orbits(const MonodromyRep& rep);

/// Rank of the lattice spanned by the cycles e_i - e_j of an orbit.
int orbit_rank(const std::vector<SimpleCycle>& orbit, std::size_t d);

struct Irreducibility {
  bool single_orbit = false;
  bool spans_h0 = false;
  std::vector<int> orbit_ranks;  // one per orbit
};

/// single_orbit: one class after identifying S with -S. spans_h0: some orbit
/// spans the rank d-1 lattice of simple cycles.
Irreducibility cycle_action_irreducibility(const OrbitPartition& orbits);

struct DynkinGraph {
  std::vector<SimpleCycle> nodes;  // vanishing cycle per critical value, loop order
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool connected = false;
  bool is_path = false;
};

/// Requires every critical value to be a single Morse point; throws
/// std::domain_error naming the first offending value otherwise.
DynkinGraph dynkin_graph(const MonodromyRep& rep);

/// Roots of f(x) = t, labels transported from the base along route() passing
/// every obstacle on the right.
CVec roots_at(const MonodromyRep& rep, Complex t, std::vector<TrackSample>* trace = nullptr);
/// Route used by roots_at.
Path route_from_base(const MonodromyRep& rep, Complex t);

/// omega(x_i(t)) - omega(x_j(t)).
Complex integral_eval(const MonodromyRep& rep, const UniPoly& omega, const SimpleCycle& cycle, Complex t);

}  // namespace abelzero
