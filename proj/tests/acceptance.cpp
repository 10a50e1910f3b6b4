// One pass/fail line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "qshift/generators.hpp"
#include "qshift/tensor.hpp"
#include "qshift/verify.hpp"

using namespace qshift;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> ids;
  std::function<bool(const CheckEntry&)> select;
  std::function<std::optional<std::string>()> extra;  // failure message, if any
};

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

// F Pi = -Pf F . 1 in U(o_4), canonical presentation.
std::optional<std::string> literal_pfaffian_matrix_relation() {
  const AlgebraPtr alg = LieAlgebra::build(Family::orthogonal_canonical, 4);
  const UMatrix F = UMatrix::generators(alg), Pi = pfaffian_derivative_matrix(alg);
  const UElement pf = pfaffian(alg);
  const UMatrix FPi = F * Pi;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const UElement expected = i == j ? Scalar(-1) * pf : UElement::zero(alg);
      if (FPi(i, j) != expected)
        return "F Pi = -Pf F . 1 fails at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "): entry is " +
               FPi(i, j).to_string() + ", expected " + expected.to_string();
    }
  return std::nullopt;
}

}  // namespace

int main() {
  SuiteOptions options;
  std::map<std::string, CheckEntry> entries;
  std::vector<std::string> order;
  for (auto& e : select_checks(options)) {
    order.push_back(e.id);
    entries.emplace(e.id, std::move(e));
  }

  const std::vector<Criterion> criteria = {
      {1, "quantum Leibniz rule consistent on 1000 random pairs (gl_2, gl_3, o_4, o_5, sp_4)",
       {"leibniz-consistency:gl_2", "leibniz-consistency:gl_3", "leibniz-consistency:o_4", "leibniz-consistency:o_5",
        "leibniz-consistency:sp_4"},
       {}, {}},
      {2, "D_mu^p z in the commutant of E_ii and T_i for gl_3, p <= 3",
       {"dmu-iterates-trE2:gl_3", "dmu-iterates-trE3:gl_3", "dmu-iterates-phi0:gl_3"}, {}, {}},
      {3, "D_mu z passes the membership criterion for o_4, o_5, sp_4",
       {"bcd-single-step-trF2:o_4", "bcd-single-step-phi0_2:o_4", "bcd-single-step-trF2:o_5",
        "bcd-single-step-phi0_2:o_5", "bcd-single-step-trF2:sp_4", "bcd-single-step-phi0_2:sp_4",
        "bcd-single-step-pfaffian:o_4"},
       {}, {}},
      {4, "recurrence coefficients (gl_3 m <= 3; o_5, sp_4 leading coefficient 2(m-k))",
       {"recurrence-bcd_m2k0:o_5", "recurrence-bcd_m2k1:o_5", "recurrence-bcd_m2k0:sp_4", "recurrence-bcd_m2k1:sp_4"},
       [](const CheckEntry& e) { return starts_with(e.id, "recurrence-p") && e.N == 3 && e.family == Family::gl; },
       {}},
      {5, "counterexamples: tr mu^2 E^2 outside the subalgebra (gl_3), cubed Casimir (o_5)",
       {"counterexample-not-preserved:gl_3", "counterexample-cubed-casimir:o_5"}, {}, {}},
      {6, "identity suite",
       {},
       [](const CheckEntry& e) { return e.suite == Suite::identities; },
       {}},
      {7, "Pfaffian: central (o_4, o_6), F Pi = -Pf F . 1 (o_4), D_mu^p pi^(0) proportional to pi^(p) (o_4)",
       {"pfaffian-central:o_4(canonical)", "pfaffian-central:o_6(canonical)",
        "pfaffian-shift-proportional:o_4(canonical)"},
       {}, literal_pfaffian_matrix_relation},
      {8, "generated families pairwise commuting (gl_2, gl_3, o_4, o_5, sp_4)",
       {"family-commuting:gl_2", "family-commuting:gl_3", "family-commuting:o_4", "family-commuting:o_5",
        "family-commuting:sp_4"},
       {}, {}},
      {9, "classical oracle: Poisson commutativity and symbols of the quantum generators",
       {"poisson-shift-commuting:gl_3", "symbol-matches-classical-shift:gl_3", "symbol-matches-classical-shift:o_5",
        "symbol-matches-classical-shift:sp_4"},
       {}, {}},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::vector<std::string> ids = c.ids;
    if (c.select)
      for (const auto& id : order)
        if (c.select(entries.at(id))) ids.push_back(id);
    bool pass = !ids.empty();
    std::string detail;
    for (const auto& id : ids) {
      const auto it = entries.find(id);
      if (it == entries.end()) {
        pass = false;
        detail += " missing check " + id + ";";
        continue;
      }
      const CheckReport r = it->second.run();
      if (!r.pass) {
        pass = false;
        detail += " " + id + " failed: " + r.witness.value_or("") + ";";
      }
    }
    if (c.extra)
      if (auto msg = c.extra()) {
        pass = false;
        detail += " " + *msg + ";";
      }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %d: %s  %s  [%zu checks, %.1fs]%s\n", c.number, pass ? "PASS" : "FAIL", c.title.c_str(),
                ids.size(), seconds, detail.c_str());
    all = all && pass;
  }
  return all ? 0 : 1;
}
