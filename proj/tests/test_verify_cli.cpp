#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <set>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

#include "qshift/generators.hpp"
#include "qshift/quasi_derivation.hpp"
#include "qshift/tensor.hpp"
#include "qshift/text.hpp"
#include "qshift/verify.hpp"

using namespace qshift;

namespace {

UElement el(const AlgebraPtr& alg, const char* s) { return parse_element(alg, s); }

struct RunResult {
  int status;
  std::string out;
};

// Runs the CLI with the given arguments; stderr is discarded.
RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QSHIFT_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string write_temp(const std::string& name, const std::string& content) {
  const std::string path = std::string(TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << content;
  return path;
}

UElement tr_mu_power_e2(const ShiftMatrix& mu, int k) {
  const AlgebraPtr& alg = mu.algebra();
  UMatrix M = UMatrix::identity(alg);
  for (int i = 0; i < k; ++i) M = M * UMatrix::constant(alg, mu.entries());
  const UMatrix E = UMatrix::generators(alg);
  return (M * E * E).trace();
}

}  // namespace

TEST_CASE("report json") {
  CheckReport r;
  r.check = "x";
  r.pass = true;
  r.ms = 3;
  const auto j = nlohmann::json::parse(r.to_json());
  CHECK(j["check"] == "x");
  CHECK(j["status"] == "pass");
  CHECK(j["witness"].is_null());
  CHECK(j["ms"] == 3);
  CHECK_FALSE(j.contains("evidence"));
  r.pass = false;
  r.witness = "E[1,2]";
  CHECK(nlohmann::json::parse(r.to_json())["witness"] == "E[1,2]");
}

TEST_CASE("is_central") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  CHECK(is_central(UElement::one(gl2)).pass);
  CHECK(is_central(trace_power(gl2, 2)).pass);
  const CheckReport r = is_central(el(gl2, "E[1,2]"));
  CHECK_FALSE(r.pass);
  CHECK(r.witness.has_value());
}

TEST_CASE("membership criterion") {
  const auto gl3 = LieAlgebra::build(Family::gl, 3);
  const ShiftMatrix mu = ShiftMatrix::generic(gl3);
  CHECK(amu_membership_criterion(mu, trace_power(gl3, 3)).pass);
  CHECK(amu_membership_criterion(mu, tr_mu_power_e2(mu, 1)).pass);
  const CheckReport bad = amu_membership_criterion(mu, tr_mu_power_e2(mu, 2));
  CHECK_FALSE(bad.pass);
  CHECK(bad.witness.has_value());
  CHECK_THROWS_AS(amu_membership_criterion(ShiftMatrix::diagonal(gl3, {1, 1, 2}), trace_power(gl3, 2)), Error);
}

TEST_CASE("D_mu(tr mu E tr E^3) = -3 tr mu^2 E^2 modulo the commutant in gl_3") {
  const auto gl3 = LieAlgebra::build(Family::gl, 3);
  const ShiftMatrix mu = ShiftMatrix::generic(gl3);
  const UElement tr_mu_e = (UMatrix::constant(gl3, mu.entries()) * UMatrix::generators(gl3)).trace();
  const UElement x = d_mu(mu, tr_mu_e * trace_power(gl3, 3));
  const UElement y = tr_mu_power_e2(mu, 2);
  CHECK(amu_membership_criterion(mu, x + Scalar(3) * y).pass);
  CHECK_FALSE(amu_membership_criterion(mu, x - Scalar(3) * y).pass);
  CHECK_FALSE(amu_membership_criterion(mu, x).pass);
}

TEST_CASE("theorem instances") {
  const auto gl3 = LieAlgebra::build(Family::gl, 3);
  const ShiftMatrix mu = ShiftMatrix::generic(gl3);
  CHECK(check_theorem_A(mu, trace_power(gl3, 3), 0).pass);
  CHECK(check_theorem_A(mu, trace_power(gl3, 3), 3).pass);
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  CHECK(check_theorem_A(ShiftMatrix::generic(gl2), psi(ShiftMatrix::generic(gl2), 2, 0), 1).pass);
  const auto o5 = LieAlgebra::build(Family::orthogonal_split, 5);
  CHECK(check_bcd_single_step(ShiftMatrix::generic(o5), trace_power(o5, 2)).pass);
  const auto sp4 = LieAlgebra::build(Family::symplectic_split, 4);
  CHECK(check_bcd_single_step(ShiftMatrix::generic(sp4), phi(ShiftMatrix::generic(sp4), 2, 0)).pass);
  const auto o4 = LieAlgebra::build(Family::orthogonal_split, 4);
  CHECK(check_bcd_single_step(ShiftMatrix::generic(o4), pfaffian(o4)).pass);
}

TEST_CASE("pairwise commuting") {
  const auto gl2 = LieAlgebra::build(Family::gl, 2);
  GeneratorFamily single{gl2, {{{"phi", 1, 0}, trace_power(gl2, 1)}}};
  CHECK(pairwise_commuting(single).pass);
  GeneratorFamily bad{gl2, {{{"x", 1, 0}, el(gl2, "E[1,2]")}, {{"y", 1, 0}, el(gl2, "E[2,1]")}}};
  CHECK_FALSE(pairwise_commuting(bad).pass);
}

TEST_CASE("counterexamples") {
  const CheckReport a = counterexample_shift_not_preserved(3);
  CHECK(a.pass);
  REQUIRE(a.evidence.has_value());
  CHECK(a.evidence->find("-3 tr mu^2 E^2") != std::string::npos);
  const CheckReport b = counterexample_cubed_quadratic_casimir(5);
  CHECK(b.pass);
  REQUIRE(b.evidence.has_value());
  CHECK(b.evidence->find("1536") != std::string::npos);
}

TEST_CASE("check registry") {
  SuiteOptions all;
  const auto entries = select_checks(all);
  std::set<std::string> ids;
  for (const auto& e : entries) ids.insert(e.id);
  CHECK(ids.size() == entries.size());
  SuiteOptions only_o;
  only_o.family = Family::orthogonal_split;
  only_o.max_n = 5;
  for (const auto& e : select_checks(only_o)) {
    CHECK(e.family == Family::orthogonal_split);
    CHECK(e.N <= 5);
  }
  CHECK_THROWS_AS(parse_suite("bogus"), Error);
}

TEST_CASE("randomized checks are reproducible") {
  SuiteOptions o;
  o.suite = Suite::identities;
  o.family = Family::gl;
  o.max_n = 2;
  o.trials = 20;
  const auto r1 = run_checks(o), r2 = run_checks(o);
  REQUIRE(r1.size() == r2.size());
  for (std::size_t k = 0; k < r1.size(); ++k) {
    CHECK(r1[k].check == r2[k].check);
    CHECK(r1[k].pass == r2[k].pass);
    CHECK(r1[k].witness == r2[k].witness);
    CHECK(r1[k].pass);
  }
}

TEST_CASE("cli: commute") {
  const RunResult r = run_cli("commute --a 'E[1,2]' --b 'E[2,1]'");
  CHECK(r.status == 1);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["status"] == "fail");
  CHECK(j["witness"] == "E[1,1] - E[2,2]");
  const RunResult ok = run_cli("commute --a 'E[1,1] + E[2,2]' --b 'E[1,2]'");
  CHECK(ok.status == 0);
  CHECK(nlohmann::json::parse(ok.out)["status"] == "pass");
  CHECK(run_cli("commute --a 'F[1,2]' --b 'F[2,1]' --family o5 --n 5").status == 1);
}

TEST_CASE("cli: apply-dmu") {
  const std::string mu = write_temp("mu_gl2.json", R"({"family":"gl2","N":2,"entries":[["1","0"],["0","2"]]})");
  const RunResult echo = run_cli("apply-dmu --mu " + mu + " --element 'E[2,1]E[1,2]' --power 0");
  CHECK(echo.status == 0);
  CHECK(echo.out == "E[1,2]E[2,1] - E[1,1] + E[2,2]\n");
  const RunResult one = run_cli("apply-dmu --mu " + mu + " --element 'E[1,1] + E[2,2]'");
  CHECK(one.status == 0);
  CHECK(one.out == "3\n");
}

TEST_CASE("cli: malformed input is rejected") {
  const std::string mu = write_temp("mu_gl2b.json", R"({"family":"gl2","N":2,"entries":[["1","0"],["0","2"]]})");
  const std::string bad_mu = write_temp("mu_bad.json", R"({"family":"gl2","N":2,"entries":[["1","0"]]})");
  CHECK(run_cli("apply-dmu --mu " + mu + " --element 'E[1,'").status != 0);
  CHECK(run_cli("apply-dmu --mu " + bad_mu + " --element 'E[1,1]'").status != 0);
  CHECK(run_cli("apply-dmu --mu /nonexistent.json --element 'E[1,1]'").status != 0);
  CHECK(run_cli("commute --a 'E[1,2' --b 'E[2,1]'").status != 0);
  CHECK(run_cli("check --suite nonsense").status != 0);
  CHECK(run_cli("generate --family sp3 --n 3").status != 0);
  CHECK(run_cli("").status != 0);
}

TEST_CASE("cli: generate") {
  const RunResult r = run_cli("generate --family gl2 --n 2");
  CHECK(r.status == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j.is_array());
  CHECK(j.size() == 3);
  CHECK(j[0].contains("label"));
  CHECK(j[0].contains("element"));
  const std::string out = std::string(TEST_TMP_DIR) + "/family.json";
  CHECK(run_cli("generate --family o2n-canonical --n 4 --out " + out).status == 0);
  std::ifstream in(out);
  CHECK(nlohmann::json::parse(in).size() > 0);
}

TEST_CASE("cli: check streams json lines") {
  const RunResult r = run_cli("check --suite counterexamples --family oN --max-n 5");
  CHECK(r.status == 0);
  int lines = 0;
  std::size_t pos = 0;
  while (pos < r.out.size()) {
    const std::size_t nl = r.out.find('\n', pos);
    const auto j = nlohmann::json::parse(r.out.substr(pos, nl - pos));
    CHECK(j["status"] == "pass");
    ++lines;
    pos = nl + 1;
  }
  CHECK(lines > 0);
  const RunResult list = run_cli("check --list --suite theorems --family gl2");
  CHECK(list.status == 0);
  CHECK(list.out.find("dmu-iterates-trE2:gl_2") != std::string::npos);
}
