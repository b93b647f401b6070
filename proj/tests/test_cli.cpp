#include <doctest.h>

#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "asmorph/cli.hpp"
#include "asmorph/report.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "asmorph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = asmorph::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data_file(const std::string& name) {
  const char* dir = std::getenv("ASMORPH_TEST_DATA");
  REQUIRE(dir != nullptr);
  return std::string(dir) + "/" + name;
}

}  // namespace

TEST_CASE("genus") {
  const Run r = run({"genus", "--p", "3", "--k", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "9\n");
}

TEST_CASE("json envelope") {
  const Run r = run({"--output", "json", "galois", "decide", "--p", "3", "--k", "6", "--l", "3"});
  REQUIRE(r.code == 0);
  const auto j = asmorph::Json::parse(r.out);
  CHECK(j.at("tool_version") == asmorph::kToolVersion);
  CHECK(j.at("command") == "galois decide");
  CHECK(j.at("params").at("k") == 6);
  CHECK(j.at("result").at("outcome") == "NoGaloisMorphism");
  CHECK(j.at("result").at("reasons") == asmorph::Json::array({"Cor7.3"}));
  CHECK(run({"--output", "json", "galois", "decide", "--p", "3", "--k", "6", "--l", "3"}).out == r.out);
}

TEST_CASE("large integers are decimal strings") {
  const Run r = run({"--output", "json", "lpoly", "--p", "3", "--k", "1", "--c", "-1"});
  REQUIRE(r.code == 0);
  const auto coeffs = asmorph::Json::parse(r.out).at("result").at("coeffs");
  REQUIRE(coeffs.size() == 7);
  CHECK(coeffs[6] == "27");
  CHECK(coeffs[2] == "-3");
}

TEST_CASE("scan csv") {
  const Run r = run({"galois", "scan", "--p", "3", "--kmax", "4", "--csv"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header == "p,k,l,verdict,rule,n_solutions,n_ruled_out");
  CHECK(first.rfind("3,2,1,NoGaloisMorphism,Cor7.1,", 0) == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == asmorph::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == asmorph::cli::kExitUsage);
  CHECK(run({"genus", "--p", "3"}).code == asmorph::cli::kExitUsage);
  CHECK(run({"genus", "--p", "4", "--k", "1"}).code == asmorph::cli::kExitUsage);
  CHECK(run({"--output", "csv", "genus", "--p", "3", "--k", "1"}).code == asmorph::cli::kExitUsage);
  const Run guard = run({"--max-field-log2", "10", "count", "--p", "3", "--k", "5", "--n", "9"});
  CHECK(guard.code == asmorph::cli::kExitGuard);
  CHECK(guard.err.find("GuardExceeded") != std::string::npos);
  const Run nodiv = run({"morphism", "check", "--p", "3", "--k", "2", "--l", "1"});
  CHECK(nodiv.code == 0);
  CHECK(nodiv.out.find("\"divides\":false") != std::string::npos);
}

TEST_CASE("other subcommands run") {
  CHECK(run({"count", "--p", "3", "--k", "1", "--c", "1", "--n", "2"}).out == "count: 28\n");
  CHECK(run({"gaps", "--p", "3", "--k", "1"}).code == 0);
  CHECK(run({"rr", "--p", "3", "--k", "1", "--n", "4"}).code == 0);
  CHECK(run({"points", "--p", "3", "--k", "1", "--n", "1"}).code == 0);
  CHECK(run({"lpoly-divides", "--p", "3", "--k", "2", "--l", "1"}).code == 0);
  CHECK(run({"morphism", "check", "--p", "3", "--k", "3", "--l", "1"}).code == 0);
  CHECK(run({"morphism", "verify", "--p", "3", "--k", "3", "--l", "1", "--n", "2"}).code == 0);
  CHECK(run({"aut", "enumerate", "--p", "3", "--k", "1"}).code == 0);
  CHECK(run({"aut", "verify", "--p", "3", "--k", "1"}).code == 0);
  CHECK(run({"quotient-genus", "--p", "3", "--k", "3", "--m", "7", "--t", "1", "--r", "0"}).code == 0);
  CHECK(run({"orbits", "--p", "3", "--k", "1", "--s", "2"}).code == 0);
}

TEST_CASE("selftest negative control names the criterion") {
  const Run r = run({"selftest", "--golden", data_file("corrupt_golden.json")});
  CHECK(r.code == asmorph::cli::kExitUsage);
  CHECK(r.out.find("[FAIL] 6. automorphisms") != std::string::npos);
  CHECK(r.out.find("[PASS] 5.") != std::string::npos);
  CHECK(run({"selftest", "--golden", data_file("malformed_golden.json")}).code == asmorph::cli::kExitUsage);
}

TEST_CASE("selftest under a tight guard skips instead of failing") {
  const Run r = run({"--max-field-log2", "10", "selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[SKIP] 4.") != std::string::npos);
  CHECK(r.out.find("[SKIP] 6.") != std::string::npos);
  CHECK(r.out.find("[FAIL]") == std::string::npos);
}
