#include "abelzero/monodromy.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>
#include <unordered_set>

#include "abelzero/algebra.hpp"

namespace abelzero {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrap_positive(double a) {
  a = std::fmod(a, kTwoPi);
  return a < 0 ? a + kTwoPi : a;
}

struct UnionFind {
  std::vector<std::size_t> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

// Arc around c from p (on the circle) to q (on the circle) whose initial
// direction lies on the requested side of u.
PathPiece detour_arc(Complex c, double r, Complex p, Complex q, Complex u, int side) {
  const double th_p = std::arg(p - c), th_q = std::arg(q - c);
  const double ccw = wrap_positive(th_p - th_q) == 0 ? kTwoPi : wrap_positive(th_q - th_p);
  const Complex tangent_ccw = Complex(0, 1) * (p - c);
  const double normal = (std::conj(u) * tangent_ccw).imag();
  const bool want_ccw = (normal > 0) == (side > 0);
  return PathPiece::arc(c, r, th_p, want_ccw ? ccw : ccw - kTwoPi);
}

std::uint64_t encode(const Permutation& p) {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < p.size(); ++i) code |= static_cast<std::uint64_t>(p[i]) << (4 * i);
  return code;
}

Permutation decode(std::uint64_t code, std::size_t n) {
  Permutation p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>((code >> (4 * i)) & 0xF);
  return p;
}

}  // namespace

CriticalData critical_values(const UniPoly& f) {
  if (f.degree() < 2) throw std::domain_error("critical values need deg f >= 2");
  CriticalData cd;
  const UniPoly disc = discriminant(fibre_family(f));
  for (const RootWithMultiplicity& r : exact_roots(disc)) {
    cd.values.push_back(r.z);
    cd.value_multiplicity.push_back(r.multiplicity);
  }
  // Sort values together with their multiplicities.
  std::vector<std::size_t> order(cd.values.size());
  std::iota(order.begin(), order.end(), 0);
  CVec sorted = cd.values;
  sort_roots(sorted);
  std::vector<int> mult;
  for (const Complex& v : sorted) {
    auto it = std::min_element(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return std::abs(cd.values[a] - v) < std::abs(cd.values[b] - v);
    });
    mult.push_back(cd.value_multiplicity[*it]);
    order.erase(it);
  }
  cd.values = sorted;
  cd.value_multiplicity = mult;

  const CVec fc = to_cvec(f);
  for (const RootWithMultiplicity& r : exact_roots(derivative(f))) {
    const Complex v = horner(fc, r.z);
    std::size_t best = 0;
    for (std::size_t k = 1; k < cd.values.size(); ++k)
      if (std::abs(cd.values[k] - v) < std::abs(cd.values[best] - v)) best = k;
    cd.points.push_back({r.z, r.multiplicity, best});
  }
  std::sort(cd.points.begin(), cd.points.end(), [](const CriticalPoint& a, const CriticalPoint& b) {
    if (a.x.real() != b.x.real()) return a.x.real() < b.x.real();
    return a.x.imag() < b.x.imag();
  });
  cd.min_distance = min_separation(cd.values);
  return cd;
}

Complex default_base(const CVec& sigma) {
  if (sigma.empty()) return Complex(1, 0);
  double max_re = -std::numeric_limits<double>::infinity(), diam = 0;
  for (const Complex& s : sigma) max_re = std::max(max_re, s.real());
  for (const Complex& a : sigma)
    for (const Complex& b : sigma) diam = std::max(diam, std::abs(a - b));
  return Complex(max_re + diam + 1.0, 0.0);
}

Path route(Complex from, Complex to, const std::vector<Obstacle>& obstacles) {
  Path out;
  const double len = std::abs(to - from);
  if (len == 0) return out;
  const Complex u = (to - from) / len;
  struct Hit {
    double along, half;
    const Obstacle* ob;
  };
  std::vector<Hit> hits;
  for (const Obstacle& ob : obstacles) {
    const Complex rel = std::conj(u) * (ob.center - from);
    const double h = rel.imag(), a = rel.real();
    if (std::abs(h) >= ob.radius || std::abs(from - ob.center) <= ob.radius) continue;
    const double half = std::sqrt(ob.radius * ob.radius - h * h);
    if (a + half <= 0 || a - half >= len) {
      if (std::abs(to - ob.center) >= ob.radius) continue;
    }
    hits.push_back({a, half, &ob});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& x, const Hit& y) { return x.along < y.along; });
  Complex cur = from;
  for (const Hit& hit : hits) {
    const Obstacle& ob = *hit.ob;
    const Complex entry = from + (hit.along - hit.half) * u;
    if (std::abs(entry - cur) > 0) out.pieces.push_back(PathPiece::line(cur, entry));
    if (std::abs(to - ob.center) < ob.radius) {
      const Complex dir = to - ob.center;
      const Complex p = std::abs(dir) > 0 ? ob.center + ob.radius * dir / std::abs(dir) : ob.center + ob.radius * u;
      out.pieces.push_back(detour_arc(ob.center, ob.radius, entry, p, u, ob.side));
      out.pieces.push_back(PathPiece::line(p, to));
      return out;
    }
    const Complex exit = from + (hit.along + hit.half) * u;
    out.pieces.push_back(detour_arc(ob.center, ob.radius, entry, exit, u, ob.side));
    cur = exit;
  }
  if (std::abs(to - cur) > 0) out.pieces.push_back(PathPiece::line(cur, to));
  return out;
}

std::vector<Permutation> MonodromyRep::generators() const {
  std::vector<Permutation> g;
  for (const Loop& l : loops) g.push_back(l.perm);
  return g;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[i] = q[static_cast<std::size_t>(p[i])];
  return r;
}

Permutation inverse(const Permutation& p) {
  Permutation r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[static_cast<std::size_t>(p[i])] = static_cast<int>(i);
  return r;
}

Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool is_transitive(const std::vector<Permutation>& gens, std::size_t n) {
  UnionFind uf(n);
  for (const Permutation& g : gens)
    for (std::size_t i = 0; i < n; ++i) uf.unite(i, static_cast<std::size_t>(g[i]));
  for (std::size_t i = 0; i < n; ++i)
    if (uf.find(i) != 0) return false;
  return true;
}

std::string cycle_notation(const Permutation& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || static_cast<std::size_t>(p[i]) == i) continue;
    os << '(';
    std::size_t j = i;
    bool first = true;
    while (!seen[j]) {
      seen[j] = true;
      os << (first ? "" : " ") << j + 1;
      first = false;
      j = static_cast<std::size_t>(p[j]);
    }
    os << ')';
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Closure group_closure(const std::vector<Permutation>& gens, std::size_t n, std::size_t cap) {
  if (n > 16) throw std::invalid_argument("group closure supports degree at most 16");
  Closure c;
  std::unordered_set<std::uint64_t> seen;
  std::deque<std::uint64_t> queue;
  const std::uint64_t id = encode(identity_permutation(n));
  seen.insert(id);
  queue.push_back(id);
  std::vector<std::uint64_t> order{id};
  while (!queue.empty()) {
    const Permutation cur = decode(queue.front(), n);
    queue.pop_front();
    for (const Permutation& g : gens) {
      const std::uint64_t code = encode(compose(cur, g));
      if (seen.insert(code).second) {
        if (seen.size() > cap) {
          c.cap_exceeded = true;
          c.order = seen.size();
          return c;
        }
        queue.push_back(code);
        order.push_back(code);
      }
    }
  }
  c.order = order.size();
  for (std::uint64_t code : order) c.elements.push_back(decode(code, n));
  return c;
}

MonodromyRep monodromy_rep(const UniPoly& f, const MonodromyOptions& opt) {
  if (f.degree() < 2) throw std::domain_error("monodromy needs deg f >= 2");
  MonodromyRep rep;
  rep.f = f;
  rep.fc = to_cvec(f);
  rep.critical = critical_values(f);
  const CVec& sigma = rep.critical.values;
  rep.base = opt.base.value_or(default_base(sigma));
  for (const Complex& s : sigma)
    if (std::abs(s - rep.base) < 1e-8 * std::max(1.0, std::abs(s)))
      throw std::domain_error("base point is a critical value");
  rep.base_roots = fibre_roots(rep.fc, rep.base);

  const std::size_t m = sigma.size();
  std::vector<double> small(m), key(m), dist(m);
  for (std::size_t k = 0; k < m; ++k) {
    double nearest = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) nearest = std::min(nearest, std::abs(sigma[j] - sigma[k]));
    dist[k] = std::abs(sigma[k] - rep.base);
    small[k] = std::min(nearest / 3.0, dist[k] / 4.0);
    key[k] = wrap_positive(std::arg(sigma[k] - rep.base));
  }
  rep.obstacle_radius.resize(m);
  for (std::size_t k = 0; k < m; ++k) rep.obstacle_radius[k] = 1.4 * small[k];

  // Loop order: by argument from the base; on a tie the nearer value counts as larger.
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), 0);
  auto before = [&](std::size_t a, std::size_t b) {
    if (std::abs(key[a] - key[b]) > 1e-12) return key[a] < key[b];
    return dist[a] > dist[b];
  };
  std::sort(order.begin(), order.end(), before);

  rep.loops.resize(m);
  for (std::size_t pos = 0; pos < m; ++pos) {
    const std::size_t k = order[pos];
    std::vector<Obstacle> obs;
    for (std::size_t j = 0; j < m; ++j)
      if (j != k) obs.push_back({sigma[j], rep.obstacle_radius[j], before(j, k) ? +1 : -1});
    const Complex stop = sigma[k] + small[k] * (rep.base - sigma[k]) / dist[k];
    Path out = route(rep.base, stop, obs);
    Path loop = out;
    loop.pieces.push_back(PathPiece::arc(sigma[k], small[k], std::arg(stop - sigma[k]), kTwoPi));
    loop.append(out.reversed());
    rep.loops[pos] = Loop{sigma[k], small[k], loop, {}};
  }
  if (opt.traces) opt.traces->assign(m, {});
  TrackOptions topt;
  topt.sigma = sigma;
  topt.margin = 1e-9;
  parallel_for(m, [&](std::size_t pos) {
    std::vector<TrackSample>* trace = opt.traces ? &(*opt.traces)[pos] : nullptr;
    const CVec end = track(rep.fc, rep.loops[pos].path, rep.base_roots, topt, trace);
    rep.loops[pos].perm = match_permutation(rep.base_roots, end);
  });
  const std::vector<Permutation> gens = rep.generators();
  rep.transitive = is_transitive(gens, rep.degree());
  if (opt.closure && rep.degree() <= 16) {
    const Closure c = group_closure(gens, rep.degree(), opt.closure_cap);
    rep.group_order = c.order;
    rep.cap_exceeded = c.cap_exceeded;
  } else if (opt.closure) {
    rep.cap_exceeded = true;
  }
  return rep;
}

Permutation loop_at_infinity(const MonodromyRep& rep) {
  const CVec& sigma = rep.critical.values;
  double reach = 0;
  for (const Complex& s : sigma) reach = std::max(reach, std::abs(s - rep.base));
  const double radius = reach + 1.0;
  std::vector<Obstacle> obs;
  for (std::size_t k = 0; k < sigma.size(); ++k) obs.push_back({sigma[k], rep.obstacle_radius[k], -1});
  Path out = route(rep.base, rep.base + radius, obs);
  Path loop = out;
  loop.pieces.push_back(PathPiece::arc(rep.base, radius, 0.0, kTwoPi));
  loop.append(out.reversed());
  TrackOptions topt;
  topt.sigma = sigma;
  const CVec end = track(rep.fc, loop, rep.base_roots, topt);
  return match_permutation(rep.base_roots, end);
}

Permutation generator_product(const MonodromyRep& rep) {
  Permutation p = identity_permutation(rep.degree());
  for (const Loop& l : rep.loops) p = compose(p, l.perm);
  return p;
}

std::size_t OrbitPartition::orbit_of(const SimpleCycle& c) const {
  return index[static_cast<std::size_t>(c.i) * d + static_cast<std::size_t>(c.j)];
}

OrbitPartition cycle_orbits(const std::vector<Permutation>& gens, std::size_t d) {
  UnionFind uf(d * d);
  for (const Permutation& g : gens)
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        if (i != j) uf.unite(i * d + j, static_cast<std::size_t>(g[i]) * d + static_cast<std::size_t>(g[j]));
  OrbitPartition op;
  op.d = d;
  op.index.assign(d * d, std::numeric_limits<std::size_t>::max());
  std::vector<std::size_t> root_to_orbit(d * d, std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j) continue;
      const std::size_t r = uf.find(i * d + j);
      if (root_to_orbit[r] == std::numeric_limits<std::size_t>::max()) {
        root_to_orbit[r] = op.orbits.size();
        op.orbits.emplace_back();
      }
      op.orbits[root_to_orbit[r]].push_back({static_cast<int>(i), static_cast<int>(j)});
      op.index[i * d + j] = root_to_orbit[r];
    }
  for (std::size_t o = 0; o < op.orbits.size(); ++o) {
    const SimpleCycle c = op.orbits[o].front();
    op.negation.push_back(op.orbit_of({c.j, c.i}));
  }
  for (std::size_t o = 0; o < op.orbits.size(); ++o)
    if (o <= op.negation[o]) op.reduced.push_back(o);
  return op;
}

OrbitPartition cycle_orbits(const MonodromyRep& rep) { return cycle_orbits(rep.generators(), rep.degree()); }

int orbit_rank(const std::vector<SimpleCycle>& orbit, std::size_t d) {
  UnionFind uf(d);
  for (const SimpleCycle& c : orbit) uf.unite(static_cast<std::size_t>(c.i), static_cast<std::size_t>(c.j));
  int components = 0;
  for (std::size_t i = 0; i < d; ++i)
    if (uf.find(i) == i) ++components;
  return static_cast<int>(d) - components;
}

Irreducibility cycle_action_irreducibility(const OrbitPartition& op) {
  Irreducibility r;
  r.single_orbit = op.reduced.size() == 1;
  for (const auto& orbit : op.orbits) {
    r.orbit_ranks.push_back(orbit_rank(orbit, op.d));
    if (r.orbit_ranks.back() == static_cast<int>(op.d) - 1) r.spans_h0 = true;
  }
  return r;
}

DynkinGraph dynkin_graph(const MonodromyRep& rep) {
  const CriticalData& cd = rep.critical;
  std::vector<int> points_over(cd.values.size(), 0);
  for (const CriticalPoint& p : cd.points) {
    if (p.multiplicity != 1) {
      std::ostringstream os;
      os << "critical value " << cd.values[p.value_index] << " is not a Morse point";
      throw std::domain_error(os.str());
    }
    ++points_over[p.value_index];
  }
  for (std::size_t k = 0; k < cd.values.size(); ++k)
    if (points_over[k] != 1) {
      std::ostringstream os;
      os << "critical value " << cd.values[k] << " has " << points_over[k] << " critical points";
      throw std::domain_error(os.str());
    }
  DynkinGraph g;
  for (const Loop& l : rep.loops) {
    std::vector<int> moved;
    for (std::size_t i = 0; i < l.perm.size(); ++i)
      if (static_cast<std::size_t>(l.perm[i]) != i) moved.push_back(static_cast<int>(i));
    if (moved.size() != 2) throw std::logic_error("Morse loop permutation is not a transposition");
    g.nodes.push_back({moved[0], moved[1]});
  }
  const std::size_t n = g.nodes.size();
  UnionFind uf(n);
  std::vector<int> degree(n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      const SimpleCycle &x = g.nodes[a], &y = g.nodes[b];
      if (x.i == y.i || x.i == y.j || x.j == y.i || x.j == y.j) {
        g.edges.emplace_back(a, b);
        uf.unite(a, b);
        ++degree[a];
        ++degree[b];
      }
    }
  g.connected = true;
  for (std::size_t a = 0; a < n; ++a)
    if (uf.find(a) != 0) g.connected = false;
  g.is_path = g.connected && g.edges.size() + 1 == n && std::all_of(degree.begin(), degree.end(), [](int v) { return v <= 2; });
  return g;
}

Path route_from_base(const MonodromyRep& rep, Complex t) {
  std::vector<Obstacle> obs;
  for (std::size_t k = 0; k < rep.critical.values.size(); ++k)
    obs.push_back({rep.critical.values[k], rep.obstacle_radius[k], -1});
  return route(rep.base, t, obs);
}

CVec roots_at(const MonodromyRep& rep, Complex t, std::vector<TrackSample>* trace) {
  TrackOptions topt;
  topt.sigma = rep.critical.values;
  const Path p = route_from_base(rep, t);
  if (p.pieces.empty()) return rep.base_roots;
  return track(rep.fc, p, rep.base_roots, topt, trace);
}

Complex integral_eval(const MonodromyRep& rep, const UniPoly& omega, const SimpleCycle& cycle, Complex t) {
  const CVec x = roots_at(rep, t);
  const CVec w = to_cvec(omega);
  return horner(w, x[static_cast<std::size_t>(cycle.i)]) - horner(w, x[static_cast<std::size_t>(cycle.j)]);
}

}  // namespace abelzero
