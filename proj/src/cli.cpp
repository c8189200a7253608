#include "abelzero/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "abelzero/brieskorn.hpp"
#include "abelzero/gaussmanin.hpp"
#include "abelzero/io.hpp"
#include "abelzero/starfield.hpp"

namespace abelzero {

namespace {

using Json = nlohmann::ordered_json;

// Bad command-line values: reported with exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string num(double v) {
  if (v == 0) v = 0;  // drop the sign of zero
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Json cplx(Complex z) { return Json{{"re", num(z.real())}, {"im", num(z.imag())}}; }

Json cvec(const CVec& v) {
  Json a = Json::array();
  for (const Complex& z : v) a.push_back(cplx(z));
  return a;
}

Json perm_json(const Permutation& p) {
  Json a = Json::array();
  for (int v : p) a.push_back(v + 1);
  return a;
}

Json cycle_json(const SimpleCycle& c) { return Json::array({c.i + 1, c.j + 1}); }

UniPoly parse_f(const std::string& text) {
  try {
    return parse_univariate(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--f: ") + e.what());
  }
}

UniPoly parse_omega(const std::string& text) {
  try {
    return parse_univariate(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--omega: ") + e.what());
  }
}

void require_degree(const UniPoly& f, int d, const char* what) {
  if (f.degree() < d) throw std::domain_error(std::string(what) + " needs deg f >= " + std::to_string(d));
}

void require_monic(const UniPoly& f, const char* what) {
  if (f.is_zero() || f.leading() != 1) throw std::domain_error(std::string(what) + " needs a monic f");
}

std::optional<Complex> parse_base(const std::vector<double>& base) {
  if (base.empty()) return std::nullopt;
  if (base.size() != 2) throw UsageError("--base takes two numbers: re im");
  return Complex(base[0], base[1]);
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot open " + path + " for writing");
  os << content;
  if (!os) throw std::runtime_error("write to " + path + " failed");
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

Json envelope(const std::string& command, Json input, Json result, double seconds) {
  return Json{{"schema", schema_tag(command)},
              {"tool", "abelzero"},
              {"version", kToolVersion},
              {"input", std::move(input)},
              {"timing", {{"seconds", seconds}}},
              {"result", std::move(result)}};
}

struct Options {
  std::string f, omega, cycle, domain, corpus, out, emit_paths;
  std::vector<double> base;
  std::optional<unsigned long long> seed;
  bool eta = false;
};

Json cmd_reduce(const Options& o) {
  const UniPoly f = parse_f(o.f), w = parse_omega(o.omega);
  require_degree(f, 2, "reduce");
  require_monic(f, "reduce");
  const BrieskornClass c = normal_form(w, f);
  Json coords = Json::array();
  for (const UniPoly& p : c.c) coords.push_back(format_poly(p, 't'));
  return Json{{"d", c.d}, {"basis", "x^1..x^(d-1)"}, {"c", coords}, {"zero_class", c.is_zero()}};
}

Json cmd_pf(const Options& o) {
  ParamPoly family;
  try {
    family = parse_param_poly(o.f, Parameter::z);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--f: ") + e.what());
  }
  if (family.degree_x() < 2) throw std::domain_error("pf needs x-degree >= 2");
  PicardFuchsSystem sys = gm_connection(family);
  if (o.eta) sys = eta_normalized_system(sys);
  const char var = parameter_name(family.parameter);
  Json a = Json::array();
  std::vector<std::string> pretty;
  const std::string delta = format_poly(sys.denom, var);
  for (std::size_t r = 0; r < sys.A.rows(); ++r) {
    Json row = Json::array();
    std::string line = "(" + delta + ") d/d" + std::string(1, var) + " I[x^" + std::to_string(r + 1) + "] =";
    for (std::size_t c = 0; c < sys.A.cols(); ++c) {
      const std::string entry = format_poly(sys.A(r, c), var);
      row.push_back(entry);
      if (!sys.A(r, c).is_zero()) line += " + (" + entry + ") I[x^" + std::to_string(c + 1) + "]";
    }
    a.push_back(row);
    pretty.push_back(line);
  }
  return Json{{"parameter", std::string(1, var)},
              {"eta", o.eta},
              {"delta", delta},
              {"A", a},
              {"family_discriminant", format_poly(sys.family_discriminant, var)},
              {"pretty", pretty}};
}

Json cmd_star(const Options& o) {
  const UniPoly f = parse_f(o.f), w = parse_omega(o.omega);
  require_degree(f, 1, "star");
  require_monic(f, "star");
  Json comps = Json::array();
  const StarStructure st = star_structure(f, w);
  for (const StarComponent& c : st.components)
    comps.push_back(Json{{"factor", format_poly(c.f)},
                         {"alpha", c.alpha},
                         {"g", format_poly(c.star.g)},
                         {"k", c.star.k}});
  const std::optional<UniPoly> g = contraction(f, w);
  return Json{{"star", format_poly(star(w, f))},
              {"star_family", format_poly(star_family(w, f))},
              {"components", comps},
              {"has_vanishing_cycle", st.has_vanishing_cycle()},
              {"contraction", g ? Json(format_poly(*g)) : Json(nullptr)}};
}

Json cmd_vanish(const Options& o) {
  const UniPoly f = parse_f(o.f), w = parse_omega(o.omega);
  require_degree(f, 2, "vanish");
  require_monic(f, "vanish");
  const std::optional<VanishCertificate> cert = vanish_identically(f, w);
  if (!cert) return Json{{"identically_zero", false}};
  return Json{{"identically_zero", true},
              {"g", format_poly(cert->g)},
              {"degree_x", cert->degree_x},
              {"degree_f", cert->degree_f},
              {"p", cert->p ? Json(format_poly(*cert->p, 't')) : Json(nullptr)}};
}

Json cmd_rpoly(const Options& o) {
  const UniPoly f = parse_f(o.f), w = parse_omega(o.omega);
  require_degree(f, 2, "rpoly");
  const ROmegaSquared r = r_omega_squared(f, w);
  Json res{{"identically_zero", r.identically_zero},
           {"r_squared", format_poly(r.r_squared, 't')},
           {"r", format_poly(r.r, 't')},
           {"constant", r.constant.get_str()},
           {"degree_bound", make_rational((w.degree() - 1) * (f.degree() - 1), 2).get_str()}};
  if (f.leading() == 1 && w.degree() >= 1 && f.degree() <= 16) {
    MonodromyOptions mo;
    mo.base = parse_base(o.base);
    const MonodromyRep rep = monodromy_rep(f, mo);
    const OrbitPartition orbits = cycle_orbits(rep);
    const OrbitPolynomials op = orbit_r_polys(f, w, rep, orbits);
    Json list = Json::array();
    for (const OrbitPolynomial& p : op.polys) {
      Json e{{"orbit", p.orbit + 1}, {"size", orbits.orbits[p.orbit].size()}, {"numerator_zero", p.numerator_zero}};
      if (!p.numerator_zero) {
        e["degree"] = p.degree;
        if (p.r_exact) {
          e["r"] = format_poly(*p.r_exact, 't');
          e["exact"] = true;
        } else {
          e["r_coefficients"] = cvec(p.r);
          e["exact"] = false;
        }
      }
      e["delta_degree"] = p.delta_degree;
      list.push_back(e);
    }
    res["orbits"] = Json{{"polys", list},
                         {"degree_sum", op.degree_sum},
                         {"product_certified", op.product_certified},
                         {"product_certificate", op.product_certificate},
                         {"delta_certified", op.delta_certified},
                         {"product", op.product_exact ? Json(format_poly(*op.product_exact, 't')) : Json(nullptr)}};
  }
  return res;
}

std::string trace_csv_header() { return "loop,piece,s,t_re,t_im,label,x_re,x_im\n"; }

void append_trace(std::ostringstream& os, std::size_t loop, const std::vector<TrackSample>& trace) {
  for (const TrackSample& s : trace)
    for (std::size_t i = 0; i < s.roots.size(); ++i)
      os << loop + 1 << ',' << s.piece << ',' << num(s.s) << ',' << num(s.t.real()) << ',' << num(s.t.imag()) << ','
         << i + 1 << ',' << num(s.roots[i].real()) << ',' << num(s.roots[i].imag()) << '\n';
}

Json cmd_monodromy(const Options& o) {
  const UniPoly f = parse_f(o.f);
  require_degree(f, 2, "monodromy");
  MonodromyOptions mo;
  mo.base = parse_base(o.base);
  mo.closure = f.degree() <= 16;
  std::vector<std::vector<TrackSample>> traces;
  if (!o.emit_paths.empty()) mo.traces = &traces;
  const MonodromyRep rep = monodromy_rep(f, mo);

  Json crit = Json::array();
  for (std::size_t k = 0; k < rep.critical.values.size(); ++k)
    crit.push_back(Json{{"value", cplx(rep.critical.values[k])},
                        {"multiplicity", rep.critical.value_multiplicity[k]}});
  Json points = Json::array();
  for (const CriticalPoint& p : rep.critical.points)
    points.push_back(Json{{"x", cplx(p.x)}, {"multiplicity", p.multiplicity}, {"value", p.value_index + 1}});
  Json loops = Json::array();
  for (const Loop& l : rep.loops)
    loops.push_back(Json{{"value", cplx(l.value)},
                         {"radius", num(l.radius)},
                         {"cycles", cycle_notation(l.perm)},
                         {"one_line", perm_json(l.perm)}});
  const OrbitPartition op = cycle_orbits(rep);
  const Irreducibility irr = cycle_action_irreducibility(op);
  Json orbit_list = Json::array();
  for (std::size_t k = 0; k < op.orbits.size(); ++k) {
    Json pairs = Json::array();
    for (const SimpleCycle& c : op.orbits[k]) pairs.push_back(cycle_json(c));
    orbit_list.push_back(Json{{"cycles", pairs}, {"negation", op.negation[k] + 1}, {"rank", irr.orbit_ranks[k]}});
  }
  Json reduced = Json::array();
  for (std::size_t k : op.reduced) reduced.push_back(k + 1);
  Json dynkin;
  try {
    const DynkinGraph g = dynkin_graph(rep);
    Json nodes = Json::array(), edges = Json::array();
    for (const SimpleCycle& c : g.nodes) nodes.push_back(cycle_json(c));
    for (const auto& [a, b] : g.edges) edges.push_back(Json::array({a + 1, b + 1}));
    dynkin = Json{{"nodes", nodes}, {"edges", edges}, {"connected", g.connected}, {"is_path", g.is_path}};
  } catch (const std::domain_error& e) {
    dynkin = Json{{"error", e.what()}};
  }
  Json group = !mo.closure || rep.cap_exceeded ? Json("cap_exceeded") : Json(rep.group_order);

  if (!o.emit_paths.empty()) {
    std::ostringstream os;
    os << trace_csv_header();
    for (std::size_t k = 0; k < traces.size(); ++k) append_trace(os, k, traces[k]);
    write_file(o.emit_paths, os.str());
  }
  return Json{{"degree", rep.degree()},
              {"base", cplx(rep.base)},
              {"base_roots", cvec(rep.base_roots)},
              {"critical_values", crit},
              {"critical_points", points},
              {"loops", loops},
              {"group_order", group},
              {"transitive", rep.transitive},
              {"loop_at_infinity", cycle_notation(generator_product(rep))},
              {"orbits", Json{{"count", op.orbits.size()}, {"reduced", reduced}, {"orbits", orbit_list}}},
              {"irreducibility", Json{{"single_orbit", irr.single_orbit}, {"spans_h0", irr.spans_h0}}},
              {"dynkin", dynkin}};
}

Json cmd_zeros(const Options& o) {
  const UniPoly f = parse_f(o.f), w = parse_omega(o.omega);
  require_degree(f, 2, "zeros");
  if (w.degree() < 1) throw std::domain_error("zeros needs a nonconstant omega");
  const SimpleCycle cycle = parse_cycle(o.cycle);
  Domain dom;
  try {
    dom = parse_domain(o.domain);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--domain: ") + e.what());
  }
  MonodromyOptions mo;
  mo.base = parse_base(o.base);
  mo.closure = false;
  const MonodromyRep rep = monodromy_rep(f, mo);
  if (static_cast<std::size_t>(std::max(cycle.i, cycle.j)) >= rep.degree())
    throw UsageError("--cycle labels exceed deg f");
  const ZeroContext ctx = zero_context(f, w, rep);
  const ZeroReport r = zeros_in_domain(f, w, cycle, dom, rep, &ctx);

  Json zeros = Json::array();
  for (const Zero& z : r.zeros)
    zeros.push_back(Json{{"t", cplx(z.t)}, {"residual", num(z.residual)}, {"multiplicity", z.multiplicity}});
  Json res{{"cycle", cycle_json(cycle)},
           {"domain", dom.to_string()},
           {"base", cplx(rep.base)},
           {"base_roots", cvec(rep.base_roots)},
           {"identically_zero", r.identically_zero},
           {"zeros", zeros},
           {"distinct_zeros", r.zeros.size()},
           {"zeros_with_multiplicity", r.zero_count_with_multiplicity()},
           {"candidates_in_domain", r.candidates},
           {"ambiguous", cvec(r.ambiguous)},
           {"winding", r.winding ? Json(*r.winding) : Json(nullptr)},
           {"sign_changes", r.sign_changes ? Json(*r.sign_changes) : Json(nullptr)},
           {"bezout_bound", r.bezout_bound.get_str()},
           {"orbit_bound", r.orbit_bound ? Json(*r.orbit_bound) : Json(nullptr)}};

  if (!o.emit_paths.empty()) {
    std::ostringstream os;
    os << "kind,index,t_re,t_im,value_re,value_im\n";
    for (std::size_t k = 0; k < rep.critical.values.size(); ++k)
      os << "sigma," << k + 1 << ',' << num(rep.critical.values[k].real()) << ','
         << num(rep.critical.values[k].imag()) << ",,\n";
    for (std::size_t k = 0; k < ctx.candidates.t.size(); ++k)
      os << "candidate," << k + 1 << ',' << num(ctx.candidates.t[k].real()) << ','
         << num(ctx.candidates.t[k].imag()) << ",,\n";
    for (std::size_t k = 0; k < r.zeros.size(); ++k)
      os << "zero," << k + 1 << ',' << num(r.zeros[k].t.real()) << ',' << num(r.zeros[k].t.imag()) << ",,\n";
    if (!r.identically_zero) {
      const DomainLabels labels(rep, dom);
      Path contour;
      if (dom.kind == Domain::Kind::Interval)
        contour.pieces.push_back(PathPiece::line(dom.lo + 1e-6 * (dom.hi - dom.lo), dom.hi - 1e-6 * (dom.hi - dom.lo)));
      else
        contour = dom.boundary();
      TrackOptions topt;
      topt.sigma = rep.critical.values;
      topt.margin = 0;
      std::vector<TrackSample> trace;
      track(rep.fc, contour, labels.roots_at(contour.start()), topt, &trace);
      const CVec wc = to_cvec(w);
      for (std::size_t k = 0; k < trace.size(); ++k) {
        const Complex v = cycle_integral(wc, trace[k].roots, cycle);
        os << "contour," << k + 1 << ',' << num(trace[k].t.real()) << ',' << num(trace[k].t.imag()) << ','
           << num(v.real()) << ',' << num(v.imag()) << '\n';
      }
    }
    write_file(o.emit_paths, os.str());
  }
  return res;
}

Json harness_summary(const HarnessSpec& spec, const HarnessResult& r, const std::string& out_path) {
  Json q = Json::array();
  for (const std::string& s : r.quarantined) q.push_back(s);
  int rows_with_zero = 0, identically_zero = 0;
  for (const HarnessRow& row : r.rows) {
    if (row.matched > 0) ++rows_with_zero;
    if (row.note == "identically zero") ++identically_zero;
  }
  Json witnesses = Json::array();
  int achieved = 0;
  for (const WitnessRecord& w : r.witnesses) {
    if (w.zeros && *w.zeros == w.target) ++achieved;
    witnesses.push_back(Json{{"instance", w.instance},
                             {"domain", w.domain},
                             {"target", w.target},
                             {"zeros", w.zeros ? Json(*w.zeros) : Json(nullptr)}});
  }
  return Json{{"seed", spec.seed},
              {"instances", spec.instances},
              {"rows", r.rows.size()},
              {"failures", r.failures},
              {"quarantined", q},
              {"max_matched", r.max_matched},
              {"rows_with_zeros", rows_with_zero},
              {"identically_zero_rows", identically_zero},
              {"lower_bound_witness", {{"attempted", r.witnesses.size()}, {"achieved", achieved}, {"records", witnesses}}},
              {"csv", out_path}};
}

Json spec_json(const HarnessSpec& s) {
  return Json{{"m", {s.m_lo, s.m_hi}},
              {"n", {s.n_lo, s.n_hi}},
              {"height", s.height},
              {"instances", s.instances},
              {"seed", s.seed},
              {"discs_per_instance", s.discs_per_instance},
              {"checks", {{"bezout", s.check_bezout}, {"winding", s.check_winding}, {"orbit", s.check_orbit},
                          {"star", s.check_star}}},
              {"omega_monomials", s.omega_monomials}};
}

std::pair<Json, int> cmd_harness(const Options& o, bool star_by_default) {
  if (o.corpus.empty()) throw UsageError("--corpus is required");
  if (o.out.empty()) throw UsageError("--out is required");
  const std::string text = read_file(o.corpus);
  HarnessSpec spec;
  if (star_by_default) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw UsageError(std::string("corpus: ") + e.what());
    }
    spec = parse_corpus_spec(text, o.seed ? &*o.seed : nullptr);
    if (!(j.contains("checks") && j["checks"].contains("star"))) spec.check_star = true;
  } else {
    spec = parse_corpus_spec(text, o.seed ? &*o.seed : nullptr);
  }
  const HarnessResult r = bound_harness(spec);
  write_file(o.out, harness_csv(r));
  Json res = harness_summary(spec, r, o.out);
  res["spec"] = spec_json(spec);
  return {res, r.failures > 0 ? kExitFailures : kExitOk};
}

}  // namespace

std::string schema_tag(const std::string& command) { return "abelzero." + command + "/1"; }

SimpleCycle parse_cycle(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--cycle must look like i,j");
  int i = 0, j = 0;
  try {
    std::size_t u1 = 0, u2 = 0;
    const std::string a = text.substr(0, comma), b = text.substr(comma + 1);
    i = std::stoi(a, &u1);
    j = std::stoi(b, &u2);
    if (u1 != a.size() || u2 != b.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw UsageError("--cycle must look like i,j with integer labels");
  }
  if (i < 1 || j < 1 || i == j) throw UsageError("--cycle labels must be distinct and at least 1");
  return SimpleCycle{i - 1, j - 1};
}

HarnessSpec parse_corpus_spec(const std::string& json_text, const unsigned long long* seed_override) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::exception& e) {
    throw UsageError(std::string("corpus: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("corpus: expected a JSON object");
  static const std::vector<std::string> known{"m", "n", "height", "instances", "seed", "discs_per_instance", "checks",
                                              "omega_monomials"};
  for (const auto& [key, value] : j.items())
    if (std::find(known.begin(), known.end(), key) == known.end()) throw UsageError("corpus: unknown key " + key);
  HarnessSpec s;
  auto range = [&](const char* key, int& lo, int& hi) {
    if (!j.contains(key)) throw UsageError(std::string("corpus: missing ") + key);
    const Json& r = j[key];
    if (!r.is_array() || r.size() != 2 || !r[0].is_number_integer() || !r[1].is_number_integer())
      throw UsageError(std::string("corpus: ") + key + " must be [lo, hi]");
    lo = r[0].get<int>();
    hi = r[1].get<int>();
    if (lo > hi) throw UsageError(std::string("corpus: empty range for ") + key);
  };
  auto integer = [&](const char* key, int& v) {
    if (!j.contains(key)) return;
    if (!j[key].is_number_integer()) throw UsageError(std::string("corpus: ") + key + " must be an integer");
    v = j[key].get<int>();
  };
  range("m", s.m_lo, s.m_hi);
  range("n", s.n_lo, s.n_hi);
  integer("height", s.height);
  integer("instances", s.instances);
  integer("discs_per_instance", s.discs_per_instance);
  if (seed_override) {
    s.seed = *seed_override;
  } else if (j.contains("seed")) {
    if (!j["seed"].is_number_unsigned()) throw UsageError("corpus: seed must be a nonnegative integer");
    s.seed = j["seed"].get<unsigned long long>();
  } else {
    throw UsageError("corpus: a seed is required (in the file or via --seed)");
  }
  if (j.contains("checks")) {
    const Json& c = j["checks"];
    if (!c.is_object()) throw UsageError("corpus: checks must be an object");
    for (const auto& [key, value] : c.items()) {
      if (!value.is_boolean()) throw UsageError("corpus: check " + key + " must be a boolean");
      const bool b = value.get<bool>();
      if (key == "bezout") s.check_bezout = b;
      else if (key == "winding") s.check_winding = b;
      else if (key == "orbit") s.check_orbit = b;
      else if (key == "star") s.check_star = b;
      else throw UsageError("corpus: unknown check " + key);
    }
  }
  if (j.contains("omega_monomials")) {
    const Json& m = j["omega_monomials"];
    if (!m.is_array()) throw UsageError("corpus: omega_monomials must be an array");
    for (const Json& e : m) {
      if (!e.is_number_integer() || e.get<int>() < 1) throw UsageError("corpus: omega_monomials must be positive");
      s.omega_monomials.push_back(e.get<int>());
    }
  }
  if (s.m_lo < 2) throw UsageError("corpus: m must be at least 2");
  if (s.m_hi > 8) throw UsageError("corpus: m above 8 is not supported");
  if (s.n_lo < 1) throw UsageError("corpus: n must be at least 1");
  if (s.n_hi > 12) throw UsageError("corpus: n above 12 is not supported");
  if (s.height < 1) throw UsageError("corpus: height must be positive");
  if (s.instances < 1) throw UsageError("corpus: instances must be positive");
  if (s.discs_per_instance < 1) throw UsageError("corpus: discs_per_instance must be positive");
  return s;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Zero-dimensional Abelian integrals: reduction, Picard-Fuchs systems, star products, "
               "monodromy and zero counts",
               "abelzero"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto add_f = [&](CLI::App* c, const char* help) { c->add_option("--f", o.f, help)->required(); };
  auto add_omega = [&](CLI::App* c) { c->add_option("--omega", o.omega, "form omega in x")->required(); };
  auto add_base = [&](CLI::App* c) { c->add_option("--base", o.base, "base point: re im")->expected(2); };

  CLI::App* reduce = app.add_subcommand("reduce", "normal form of omega in Q[x]/Q[f]");
  add_f(reduce, "monic polynomial in x");
  add_omega(reduce);
  CLI::App* pf = app.add_subcommand("pf", "Picard-Fuchs system of a family f(x, z)");
  add_f(pf, "polynomial in x and z");
  pf->add_flag("--eta", o.eta, "normalize the periods by disc^(1/4)");
  CLI::App* star_cmd = app.add_subcommand("star", "star product omega*f and its structure");
  add_f(star_cmd, "monic polynomial in x");
  add_omega(star_cmd);
  CLI::App* vanish = app.add_subcommand("vanish", "decide whether some cycle integrates omega to zero identically");
  add_f(vanish, "monic polynomial in x");
  add_omega(vanish);
  CLI::App* rpoly = app.add_subcommand("rpoly", "R_omega^2 and the orbit polynomials");
  add_f(rpoly, "polynomial in x");
  add_omega(rpoly);
  add_base(rpoly);
  CLI::App* mono = app.add_subcommand("monodromy", "monodromy of the roots of f(x) = t");
  add_f(mono, "polynomial in x");
  add_base(mono);
  mono->add_option("--emit-paths", o.emit_paths, "CSV file for tracked root trajectories");
  CLI::App* zeros = app.add_subcommand("zeros", "zeros of a cycle integral in a domain");
  add_f(zeros, "polynomial in x");
  add_omega(zeros);
  zeros->add_option("--cycle", o.cycle, "root labels i,j (1-based, base-point order)")->required();
  zeros->add_option("--domain", o.domain, "disc:cx,cy,r | rect:x0,y0,x1,y1 | interval:a,b")->required();
  add_base(zeros);
  zeros->add_option("--emit-paths", o.emit_paths, "CSV file for critical values, candidates and the contour");
  CLI::App* bounds = app.add_subcommand("bounds", "zero-count bound harness over a seeded corpus");
  CLI::App* corpus = app.add_subcommand("corpus", "bound harness plus star-product identities over a corpus");
  for (CLI::App* c : {bounds, corpus}) {
    c->add_option("--corpus", o.corpus, "corpus description (JSON file)")->required();
    c->add_option("--seed", o.seed, "seed, overrides the corpus file");
    c->add_option("--out", o.out, "CSV table")->required();
  }

  std::vector<std::string> argv_store{"abelzero"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const std::string& s : argv_store) argv.push_back(s.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (app.exit(e, out, err) == 0) return kExitOk;
    CLI::App* sub = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
    err << sub->help();
    return kExitUsage;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  Json input{{"command", name}};
  for (const CLI::Option* opt : sub->get_options())
    if (opt->count() > 0 && opt->get_name() != "--help") {
      const std::vector<std::string> v = opt->results();
      input[opt->get_name().substr(2)] = v.size() == 1 ? Json(v[0]) : Json(v);
    }
  try {
    const auto start = std::chrono::steady_clock::now();
    Json result;
    int code = kExitOk;
    if (name == "reduce") result = cmd_reduce(o);
    else if (name == "pf") result = cmd_pf(o);
    else if (name == "star") result = cmd_star(o);
    else if (name == "vanish") result = cmd_vanish(o);
    else if (name == "rpoly") result = cmd_rpoly(o);
    else if (name == "monodromy") result = cmd_monodromy(o);
    else if (name == "zeros") result = cmd_zeros(o);
    else std::tie(result, code) = cmd_harness(o, name == "corpus");
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    out << envelope(name, input, result, seconds).dump(2) << "\n";
    return code;
  } catch (const UsageError& e) {
    err << "abelzero " << name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "abelzero " << name << ": " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "abelzero " << name << ": error: " << e.what() << "\n";
    return kExitDomain;
  }
}

}  // namespace abelzero
