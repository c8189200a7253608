#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <random>
#include <sstream>

#include "abelzero/cli.hpp"
#include "abelzero/io.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace abelzero;
using Json = nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("abelzero_test_" + name);
}

void write(const std::filesystem::path& p, const std::string& s) { std::ofstream(p) << s; }

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("schema tags and envelopes") {
  for (const std::string cmd : {"reduce", "pf", "star", "vanish", "rpoly", "monodromy", "zeros", "bounds", "corpus"})
    CHECK(schema_tag(cmd) == "abelzero." + cmd + "/1");
  const Run r = run({"reduce", "--f", "x^3", "--omega", "x^4 + x^2"});
  REQUIRE(r.code == 0);
  const Json j = r.json();
  CHECK(j["schema"] == "abelzero.reduce/1");
  CHECK(j["version"] == kToolVersion);
  CHECK(j["timing"]["seconds"].is_number());
  CHECK(j["input"]["f"] == "x^3");
  CHECK(j["result"]["d"] == 3);
  // x^4 = t x, so x^4 + x^2 has coordinates (t, 1).
  CHECK(j["result"]["c"] == Json::array({"t", "1"}));
}

TEST_CASE("pf and vanish examples") {
  const Run pf = run({"pf", "--f", "4*x^3 - z*x - 1"});
  REQUIRE(pf.code == 0);
  const Json j = pf.json();
  CHECK(j["result"]["parameter"] == "z");
  CHECK(j["result"]["A"].size() == 2);
  CHECK(j["result"]["delta"].is_string());
  CHECK(run({"pf", "--f", "4*x^3 - z*x - 1", "--eta"}).json()["result"]["eta"] == true);

  const Run v = run({"vanish", "--f", "x^4-x^2", "--omega", "x^2"});
  REQUIRE(v.code == 0);
  CHECK(v.json()["result"]["identically_zero"] == true);
  CHECK(v.json()["result"]["g"] == "x^2 - x - t");
  const Run p = run({"vanish", "--f", "x^3-x", "--omega", "x^6 - 2*x^4 + x^2 + 3*x^3 - 3*x"});
  REQUIRE(p.code == 0);
  CHECK(p.json()["result"]["degree_x"] == 1);
  CHECK(p.json()["result"]["p"] == "t^2 + 3*t");
  CHECK(run({"vanish", "--f", "x^3+x+1", "--omega", "x^2"}).json()["result"]["identically_zero"] == false);
}

TEST_CASE("star and rpoly") {
  const Run s = run({"star", "--f", "x^2 - 2", "--omega", "x"});
  REQUIRE(s.code == 0);
  CHECK(s.json()["result"]["star"] == "x^2 - 2");
  const Run r = run({"rpoly", "--f", "x^2", "--omega", "x^3"});
  REQUIRE(r.code == 0);
  const Json j = r.json()["result"];
  CHECK(j["r_squared"] == "t^2");
  CHECK(j["orbits"]["product_certified"] == true);
  CHECK(j["orbits"]["polys"][0]["r"] == "t");
}

TEST_CASE("monodromy command and path output") {
  const auto csv = temp_path("paths.csv");
  const Run r = run({"monodromy", "--f", "x^3 - 3*x", "--emit-paths", csv.string()});
  REQUIRE(r.code == 0);
  const Json j = r.json()["result"];
  CHECK(j["group_order"] == 6);
  CHECK(j["transitive"] == true);
  CHECK(j["critical_values"].size() == 2);
  CHECK(j["dynkin"]["connected"] == true);
  CHECK(j["orbits"]["reduced"].size() == 1);
  const std::string paths = slurp(csv);
  CHECK(paths.rfind("loop,piece,s,t_re,t_im,label,x_re,x_im\n", 0) == 0);
  CHECK(std::count(paths.begin(), paths.end(), '\n') > 10);
  std::filesystem::remove(csv);

  const Run b = run({"monodromy", "--f", "x^4", "--base", "2", "0.5"});
  REQUIRE(b.code == 0);
  CHECK(b.json()["result"]["group_order"] == 4);
  CHECK(b.json()["result"]["base"]["re"] == "2");
  CHECK(b.json()["result"]["dynkin"].contains("error"));
}

TEST_CASE("zeros command") {
  const Run r = run({"zeros", "--f", "x^4-x^2", "--omega", "x^3 - 3/4*x", "--cycle", "1,2", "--domain",
                     "disc:-0.0625,0,0.05"});
  REQUIRE(r.code == 0);
  const Json j = r.json()["result"];
  CHECK(j["winding"] == j["zeros_with_multiplicity"]);
  CHECK(j["bezout_bound"] == "3");
  const Run x = run({"zeros", "--f", "x^3+x", "--omega", "x", "--cycle", "1,3", "--domain", "rect:2,2,3,3"});
  REQUIRE(x.code == 0);
  CHECK(x.json()["result"]["zeros"].empty());
  CHECK(x.json()["result"]["winding"] == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({"pf", "--bogus"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"frobnicate"}).code == kExitUsage);
  CHECK(run({"reduce", "--f", "x^3"}).code == kExitUsage);
  CHECK(run({"reduce", "--f", "x^^3", "--omega", "x"}).code == kExitUsage);
  CHECK(run({"reduce", "--f", "2*x^3", "--omega", "x"}).code == kExitDomain);
  CHECK(run({"monodromy", "--f", "x"}).code == kExitDomain);
  CHECK(run({"zeros", "--f", "x^2", "--omega", "x^3", "--cycle", "1,2", "--domain", "disc:0,0,1"}).code ==
        kExitDomain);
  CHECK(run({"zeros", "--f", "x^2", "--omega", "x^3", "--cycle", "1,5", "--domain", "disc:3,0,1"}).code ==
        kExitUsage);
  CHECK(run({"zeros", "--f", "x^2", "--omega", "x^3", "--cycle", "12", "--domain", "disc:3,0,1"}).code ==
        kExitUsage);
  CHECK(run({"zeros", "--f", "x^2", "--omega", "x^3", "--cycle", "1,2", "--domain", "disk:3,0,1"}).code ==
        kExitUsage);
  CHECK(run({"monodromy", "--f", "x^3", "--base", "1"}).code == kExitUsage);
  const Run help = run({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("monodromy") != std::string::npos);
}

TEST_CASE("corpus file parsing") {
  const std::string ok = R"({"m":[3,3],"n":[2,2],"height":5,"instances":4,"seed":9,"discs_per_instance":2,
                             "checks":{"bezout":true,"winding":true,"orbit":false,"star":true}})";
  const HarnessSpec s = parse_corpus_spec(ok, nullptr);
  CHECK(s.m_lo == 3);
  CHECK(s.instances == 4);
  CHECK(s.seed == 9);
  CHECK_FALSE(s.check_orbit);
  CHECK(s.check_star);
  const unsigned long long over = 42;
  CHECK(parse_corpus_spec(ok, &over).seed == 42);
  CHECK_THROWS_AS(parse_corpus_spec(R"({"m":[4,3],"n":[2,2],"seed":1})", nullptr), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_spec(R"({"m":[3,3],"n":[2,2]})", nullptr), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_spec(R"({"m":[3,3],"n":[2,2],"seed":1,"colour":1})", nullptr), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_spec(R"({"m":[3],"n":[2,2],"seed":1})", nullptr), std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_spec(R"({"m":[3,3],"n":[2,2],"seed":1,"instances":0})", nullptr),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_corpus_spec("not json", nullptr), std::invalid_argument);
}

TEST_CASE("bounds and corpus runs are deterministic") {
  const auto spec = temp_path("spec.json"), out1 = temp_path("t1.csv"), out2 = temp_path("t2.csv");
  write(spec, R"({"m":[3,3],"n":[2,2],"height":5,"instances":10,"discs_per_instance":3})");
  const Run a = run({"bounds", "--corpus", spec.string(), "--seed", "1", "--out", out1.string()});
  const Run b = run({"bounds", "--corpus", spec.string(), "--seed", "1", "--out", out2.string()});
  REQUIRE(a.code == 0);
  REQUIRE(b.code == 0);
  CHECK(slurp(out1) == slurp(out2));
  Json ja = a.json()["result"], jb = b.json()["result"];
  ja.erase("csv");
  jb.erase("csv");
  CHECK(ja == jb);
  const Json j = a.json()["result"];
  CHECK(j["failures"] == 0);
  CHECK(j["max_matched"].get<int>() <= 1);
  CHECK(j["lower_bound_witness"]["attempted"] == 10);
  CHECK(j["lower_bound_witness"]["records"][0]["target"] == 1);

  const Run c = run({"corpus", "--corpus", spec.string(), "--seed", "1", "--out", out2.string()});
  REQUIRE(c.code == 0);
  CHECK(c.json()["result"]["spec"]["checks"]["star"] == true);
  CHECK(run({"bounds", "--corpus", spec.string(), "--out", out2.string()}).code == kExitUsage);

  write(spec, R"({"m":[3,2],"n":[2,2],"seed":1})");
  const Run bad = run({"corpus", "--corpus", spec.string(), "--out", out2.string()});
  CHECK(bad.code == kExitUsage);
  CHECK(bad.err.find("empty range") != std::string::npos);
  for (const auto& p : {spec, out1, out2}) std::filesystem::remove(p);
}

TEST_CASE("thread cap does not change results") {
  const auto spec = temp_path("spec2.json"), out1 = temp_path("u1.csv"), out2 = temp_path("u2.csv");
  write(spec, R"({"m":[3,4],"n":[2,3],"height":4,"instances":6,"seed":3,"discs_per_instance":2})");
  setenv("ABELZERO_THREADS", "1", 1);
  REQUIRE(run({"bounds", "--corpus", spec.string(), "--out", out1.string()}).code == 0);
  setenv("ABELZERO_THREADS", "4", 1);
  REQUIRE(run({"bounds", "--corpus", spec.string(), "--out", out2.string()}).code == 0);
  unsetenv("ABELZERO_THREADS");
  CHECK(slurp(out1) == slurp(out2));
  for (const auto& p : {spec, out1, out2}) std::filesystem::remove(p);
}

TEST_CASE("polynomial text round trip") {
  std::mt19937_64 rng(17);
  for (int k = 0; k < 100; ++k) {
    const UniPoly p = oracle::random_rational_poly(rng, k % 9, 9);
    CHECK(parse_univariate(format_poly(p)) == p);
  }
}
