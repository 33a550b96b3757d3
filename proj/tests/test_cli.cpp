#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "logdiv/cli.hpp"
#include "logdiv/logder.hpp"
#include "logdiv/vfilt.hpp"
#include "support/printers.hpp"

using namespace logdiv;
using Json = nlohmann::ordered_json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.insert(args.begin(), "--json");
  const auto r = run(args);
  REQUIRE(r.code == cli::kExitOk);
  return Json::parse(r.out);
}

}  // namespace

TEST_CASE("logder output reparses to the same module") {
  for (const char* s : {"x*y*(x+y)", "x^2-y^3", "x*y*z*(x+y+z)", "x^2+y^2+z^2"}) {
    const auto j = run_json({"logder", s});
    CHECK(j["schema"] == "logdiv/1");
    const auto f = parse_polynomial(j["f"].get<std::string>());
    CHECK(f == parse_polynomial(s));
    std::vector<FreeModuleVector> gens;
    for (const auto& g : j["generators"]) gens.push_back(field_coefficients(parse_operator(g.get<std::string>(), f.ring_dim())));
    CHECK(same_module(gens, log_derivations(f).generators));
    for (const auto& g : gens) CHECK(log_cofactor(f, g).has_value());
  }
}

TEST_CASE("operators in JSON reparse and stay in V0") {
  const auto j = run_json({"v0-basis", "-f", "x*y*(x+y)", "-d", "2", "-w", "1"});
  const auto f = parse_polynomial("x*y*(x+y)");
  CHECK(j["dimension"].get<std::size_t>() == j["basis"].size());
  CHECK(j["basis"].size() > 0);
  for (const auto& b : j["basis"]) CHECK(v_membership(f, parse_operator(b.get<std::string>(), 2), 0));

  const auto q = run_json({"arrangement", "quintic"});
  const auto qf = parse_polynomial(q["f"].get<std::string>());
  CHECK(v_membership(qf, parse_operator(q["q_corrected"].get<std::string>(), 3), 0));
  CHECK(v_membership(qf, parse_operator(q["gap_witness"].get<std::string>(), 3), 0));
  CHECK(q["v0_dimension"] == 51);
  CHECK(q["generated_dimension"] == 50);
}

TEST_CASE("criterion output") {
  const auto d3 = run_json({"criterion", "x1*x2*x3*(x1+x2+x3)"});
  CHECK(d3["verdict"] == "certified");
  CHECK(d3["basis"] == "grade-criterion");
  CHECK(d3["grade"] == 3);
  CHECK(d3["required"] == 3);
  CHECK(d3["torsion_witnesses"].empty());

  const auto d4 = run_json({"criterion", "--no-depth", "x1*x2*x3*x4*(x1+x2+x3+x4)"});
  CHECK(d4["verdict"] == "refuted-with-witness");
  REQUIRE(!d4["torsion_witnesses"].empty());
  std::vector<std::string> names{"x", "y", "z", "w"};
  for (int i = 1; i <= 6; ++i) names.push_back("T" + std::to_string(i));
  for (const auto& w : d4["torsion_witnesses"]) {
    const auto p = parse_polynomial(w["element"].get<std::string>(), names);
    CHECK(!p.is_zero());
    CHECK(p.degree() == 2);
  }
}

TEST_CASE("repeated runs are byte-identical") {
  const std::vector<std::vector<std::string>> cmds{
      {"criterion", "x*y*z*(x+y+z)"},
      {"--json", "symalg", "x1^2+x2^2+x3^2+x4^2"},
      {"--json", "arrangement", "dn", "--n", "4", "--check", "standard-basis"},
      {"v0-basis", "x*y", "-d", "1", "--compare"},
  };
  for (const auto& c : cmds) {
    const auto a = run(c), b = run(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("timing appears only on request") {
  CHECK(run({"euler", "x^2+y^3"}).out.find("timing") == std::string::npos);
  CHECK(run({"euler", "x^2+y^3", "--timing"}).out.find("timing_seconds") != std::string::npos);
}

TEST_CASE("exit codes") {
  const auto parse = run({"logder", "x*(y"});
  CHECK(parse.code == cli::kExitUsage);
  CHECK(parse.err.find("line 1, column") != std::string::npos);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"logder"}).code == cli::kExitUsage);
  CHECK(run({"logder", "x", "-f", "y"}).code == cli::kExitUsage);
  CHECK(run({"v0-member", "x*y", "-P", "dx", "--mode", "nowhere"}).code == cli::kExitUsage);
  CHECK(run({"arrangement", "dn", "--n", "3", "--check", "nothing"}).code == cli::kExitUsage);
  CHECK(run({"logder", "x*y", "-n", "1"}).code == cli::kExitUnsupported);
  CHECK(run({"v0-basis", "x+y^2+y^3", "-w", "0"}).code == cli::kExitUnsupported);
  CHECK(run({"arrangement", "dn", "--n", "9"}).code == cli::kExitUnsupported);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("options from a config file") {
  const auto path = std::filesystem::temp_directory_path() / "logdiv_cli_test.toml";
  {
    std::ofstream os(path);
    os << "json=true\n[criterion]\ndimZ=1\nmax-k=1\n";
  }
  const auto r = run({"--config", path.string(), "criterion", "x*y*z*(x+y+z)"});
  std::filesystem::remove(path);
  REQUIRE(r.code == 0);
  const auto j = Json::parse(r.out);
  CHECK(j["dimZ"] == 1);
  CHECK(j["required"] == 4);
  CHECK(j["verdict"] == "inconclusive");
}

TEST_CASE("selftest and fault injection") {
  const auto ok = run({"--json", "selftest"});
  CHECK(ok.code == cli::kExitOk);
  CHECK(Json::parse(ok.out)["failed"] == 0);

  const auto bad = run({"--json", "selftest", "--inject", "eta-sign"});
  CHECK(bad.code == cli::kExitSelftestFailed);
  const auto j = Json::parse(bad.out);
  std::vector<std::string> failed;
  for (const auto& c : j["cases"])
    if (!c["passed"].get<bool>()) failed.push_back(c["name"]);
  REQUIRE(!failed.empty());
  for (const auto& name : failed) CHECK(name.rfind("eta-standard-basis", 0) == 0);
}

TEST_CASE("human output mirrors the JSON") {
  const auto r = run({"v0-member", "x*y", "-P", "x*dx", "-k", "0"});
  CHECK(r.out.find("member: true") != std::string::npos);
  CHECK(r.out.find("schema: logdiv/1") != std::string::npos);
}
