#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qshift/generators.hpp"
#include "qshift/quasi_derivation.hpp"
#include "qshift/text.hpp"
#include "qshift/verify.hpp"

using namespace qshift;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// N from --n and the family name; both given must agree.
int sized(const std::string& family, int n) {
  const int named = family_size(family);
  if (named != 0 && n > 0 && named != n)
    throw Error("--family " + family + " does not match --n " + std::to_string(n));
  if (named == 0 && n <= 0) throw Error("--n is required for family '" + family + "'");
  return named != 0 ? named : n;
}

// Algebra for free-standing expressions: explicit flags win, otherwise E[..]
// means gl_N with N the largest index.
AlgebraPtr expression_algebra(const std::string& family, int n, const std::vector<std::string>& exprs) {
  if (!family.empty()) {
    return LieAlgebra::build(parse_family(family), sized(family, n));
  }
  int max_index = 0;
  for (const auto& e : exprs) {
    const ExpressionShape shape = scan_expression(e);
    if (shape.letter == 'F') throw Error("F[i,j] expressions need --family and --n");
    max_index = std::max(max_index, shape.max_index);
  }
  if (n > 0) max_index = n;
  if (max_index == 0) max_index = 1;
  return LieAlgebra::build(Family::gl, max_index);
}

int run_check(const SuiteOptions& options) {
  bool all_pass = true;
  run_checks(options, [&](const CheckReport& r) {
    all_pass = all_pass && r.pass;
    std::cout << r.to_json() << std::endl;
  });
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quasi-derivations and quantum shift-of-argument generators over exact rationals"};
  app.require_subcommand(1);
  bool override_caps = false;
  app.add_flag("--override-caps", override_caps, "Lift the desk-scale limits on N, tensor slots and degree");

  SuiteOptions options;
  std::string suite = "all", check_family;
  auto* check = app.add_subcommand("check", "Run verification checks and stream JSON-line reports");
  check->add_option("--suite", suite, "all | identities | theorems | counterexamples")->capture_default_str();
  check->add_option("--family", check_family, "glN | oN | spN | o2n-canonical, optionally sized (gl3, o5)");
  check->add_option("--max-n", options.max_n, "Largest N to include")->capture_default_str();
  check->add_option("--seed", options.seed, "Seed for randomized checks")->capture_default_str();
  check->add_option("--trials", options.trials, "Random pairs per consistency check")->capture_default_str();
  bool list_only = false;
  check->add_flag("--list", list_only, "Print the selected check ids without running them");

  std::string gen_family, mu_file, out_file;
  int gen_n = 0;
  bool use_psi = false, phi_table = false;
  auto* generate = app.add_subcommand("generate", "Emit the generator family of the shift subalgebra as JSON");
  generate->add_option("--family", gen_family, "glN | oN | spN | o2n-canonical")->required();
  generate->add_option("--n", gen_n, "Matrix size N (optional when the family names it)");
  generate->add_option("--mu", mu_file, "Shift matrix JSON file (default: generic diagonal)");
  generate->add_option("--out", out_file, "Write to this file instead of stdout");
  generate->add_flag("--phi-table", phi_table, "Emit all phi^(k)_m instead of the generating family");
  generate->add_flag("--psi", use_psi, "With --phi-table: the symmetrizer family psi (gl_N)");

  std::string element, apply_mu;
  int power = 1;
  bool hat = false;
  auto* apply = app.add_subcommand("apply-dmu", "Apply D_mu^p to an element");
  apply->add_option("--mu", apply_mu, "Shift matrix JSON file")->required();
  apply->add_option("--element", element, "Element expression")->required();
  apply->add_option("--power", power, "p >= 0")->capture_default_str();
  apply->add_flag("--hat", hat, "Use the hat quasi-derivations (gl_N)");

  std::string expr_a, expr_b, comm_family;
  int comm_n = 0;
  auto* commute = app.add_subcommand("commute", "Report whether two elements commute");
  commute->add_option("--a", expr_a, "First element")->required();
  commute->add_option("--b", expr_b, "Second element")->required();
  commute->add_option("--family", comm_family, "Algebra family (default: gl_N inferred from E[i,j])");
  commute->add_option("--n", comm_n, "Matrix size N");

  CLI11_PARSE(app, argc, argv);

  try {
    if (override_caps) set_desk_caps({1 << 20, 1 << 20, 1 << 20});

    if (*check) {
      options.suite = parse_suite(suite);
      if (!check_family.empty()) {
        options.family = parse_family(check_family);
        options.only_n = family_size(check_family);
      }
      if (options.trials < 0) throw Error("--trials must be nonnegative");
      if (list_only) {
        for (const auto& e : select_checks(options)) std::cout << e.id << "\n";
        return 0;
      }
      return run_check(options);
    }

    if (*generate) {
      const AlgebraPtr alg = LieAlgebra::build(parse_family(gen_family), sized(gen_family, gen_n));
      const ShiftMatrix mu = mu_file.empty() ? ShiftMatrix::generic(alg) : parse_shift_matrix_json(read_file(mu_file));
      if (mu.algebra() != alg) throw Error("the mu file describes " + mu.algebra()->name() + ", not " + alg->name());
      const GeneratorFamily fam = phi_table ? phi_family(mu, alg->N(), use_psi) : amu_generating_family(mu);
      const std::string text = family_to_json(fam) + "\n";
      if (out_file.empty()) {
        std::cout << text;
      } else {
        std::ofstream out(out_file);
        if (!out) throw Error("cannot write '" + out_file + "'");
        out << text;
      }
      return 0;
    }

    if (*apply) {
      const ShiftMatrix mu = parse_shift_matrix_json(read_file(apply_mu));
      UElement x = parse_element(mu.algebra(), element);
      if (power < 0) throw Error("--power must be nonnegative");
      for (int p = 0; p < power; ++p) x = hat ? d_mu_hat(mu, x) : d_mu(mu, x);
      std::cout << x.to_string() << "\n";
      return 0;
    }

    if (*commute) {
      const AlgebraPtr alg = expression_algebra(comm_family, comm_n, {expr_a, expr_b});
      const UElement a = parse_element(alg, expr_a), b = parse_element(alg, expr_b);
      CheckReport r;
      r.check = "commute:" + alg->name();
      const UElement c = commutator(a, b);
      r.pass = c.is_zero();
      if (!r.pass) r.witness = c.to_string();
      std::cout << r.to_json() << std::endl;
      return r.pass ? 0 : 1;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
