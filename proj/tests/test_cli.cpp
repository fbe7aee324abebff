#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "bv/cli.hpp"
#include "bv/json_io.hpp"
#include "test_util.hpp"

using namespace bv;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  RunResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string golden(const std::string& name) {
  return slurp(std::string(TESTS_DIR) + "/golden/" + name);
}

std::string write_temp(const std::string& name, const std::string& body) {
  std::string path = "/tmp/" + name;
  std::ofstream out(path, std::ios::binary);
  REQUIRE(out.good());
  out << body;
  return path;
}

const char* kBnExample = R"({
  "group": {"family": "Bn", "rank": 3},
  "summands": [
    {"a": "0", "b": "0", "dim": 4},
    {"a": "1/2", "b": "-1/2", "dim": 1},
    {"a": "-1/2", "b": "1/2", "dim": 1}
  ]
})";

}  // namespace

TEST_CASE("golden text output") {
  RunResult p = run({"packet", "--case", "Cn", "--partition", "7,3,3"});
  CHECK(p.code == 0);
  CHECK(p.out == golden("packet_cn_733.txt"));

  RunResult s = run({"symbol", "--case", "Mpn", "--partition", "12,8,4,4,4,2"});
  CHECK(s.code == 0);
  CHECK(s.out == golden("symbol_mpn_1284442.txt"));

  RunResult d = run({"orbit", "dual", "--case", "Mpn", "--partition", "3,3"});
  CHECK(d.code == 0);
  CHECK(d.out == golden("dual_mpn_33.txt"));
}

TEST_CASE("golden json output") {
  RunResult p = run({"--json", "packet", "--case", "Cn", "--partition", "7,3,3"});
  CHECK(p.code == 0);
  CHECK(p.out == golden("packet_cn_733.json"));

  RunResult s = run({"--json", "symbol", "--case", "Mpn", "--partition",
                     "12,8,4,4,4,2"});
  CHECK(s.code == 0);
  CHECK(s.out == golden("symbol_mpn_1284442.json"));

  RunResult d = run({"--json", "orbit", "dual", "--case", "Mpn", "--partition",
                     "3,3"});
  CHECK(d.code == 0);
  CHECK(d.out == golden("dual_mpn_33.json"));
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"bogus"}).code == 1);
  CHECK(run({"packet", "--case", "Xx", "--partition", "3"}).code == 1);
  CHECK(run({"orbit", "dual", "--case", "Cn", "--partition", "1,3"}).code == 1);
  RunResult r = run({"orbit", "dual", "--case", "Cn"});
  CHECK(r.code == 1);
  CHECK(!r.err.empty());
}

TEST_CASE("domain errors exit 2") {
  RunResult r = run({"packet", "--case", "Cn", "--partition", "2,2"});
  CHECK(r.code == 2);
  CHECK(!r.err.empty());
}

TEST_CASE("help exits 0") {
  RunResult r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("bvtool") != std::string::npos);
}

TEST_CASE("quiet suppresses stdout") {
  RunResult r = run({"--quiet", "orbit", "dual", "--case", "Mpn",
                     "--partition", "3,3"});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
}

TEST_CASE("orbit enumerate lists orbits") {
  RunResult r = run({"orbit", "enumerate", "--family", "Sp", "--ambient", "6"});
  CHECK(r.code == 0);
  int lines = 0;
  for (char c : r.out)
    if (c == '\n') ++lines;
  CHECK(lines == 8);
}

TEST_CASE("psi subcommands") {
  std::string f = write_temp("bvtest_bn.json", kBnExample);

  RunResult v = run({"psi", "validate", "--file", f});
  CHECK(v.code == 0);
  CHECK(v.out == "ok\n");

  RunResult ic = run({"psi", "infchar", "--file", f});
  CHECK(ic.code == 0);
  CHECK(ic.out == "lambda: (1/2,3/2,1/2)\nmu: (-1/2,3/2,1/2)\n");

  RunResult w = run({"psi", "wavefront", "--file", f});
  CHECK(w.code == 0);
  CHECK(w.out == "[3,1,1,1,1]\n");

  std::string g = write_temp("bvtest_bn_sp.json", R"({
    "group": {"family": "Bn", "rank": 3},
    "summands": [
      {"a": "0", "b": "0", "dim": 4},
      {"a": "0", "b": "0", "dim": 2}
    ]
  })");
  RunResult eq = run({"psi", "intersect", "--file", f, "--file2", g});
  CHECK(eq.code == 0);
  CHECK(eq.out == "true\n");

  std::string bad = write_temp("bvtest_bad.json", R"({
    "group": {"family": "Cn", "rank": 3},
    "summands": [
      {"a": "0", "b": "0", "dim": 3},
      {"a": "0", "b": "0", "dim": 3}
    ]
  })");
  RunResult bv = run({"psi", "validate", "--file", bad});
  CHECK(bv.code == 2);
  CHECK(bv.out.find("total_dim") != std::string::npos);

  RunResult missing = run({"psi", "validate", "--file", "/tmp/bvtest_nope.json"});
  CHECK(missing.code == 2);
}

TEST_CASE("parameter json round trip") {
  ArthurParameter psi = bvtest::psi_of(
      GroupCase::Bn, 3,
      {bvtest::triv(4), bvtest::chi(Rational(1, 2), Rational(-1, 2), 1),
       bvtest::chi(Rational(-1, 2), Rational(1, 2), 1)});
  CHECK(parameter_from_json(to_json(psi)) == psi);
  CHECK(load_parameter(write_temp("bvtest_rt.json", to_json(psi).dump())) ==
        psi);
}
