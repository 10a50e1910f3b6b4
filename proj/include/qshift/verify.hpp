#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qshift/generators.hpp"
#include "qshift/shift_matrix.hpp"

namespace qshift {

/// Outcome of one verification. A failed check always carries a witness
/// (the offending residual or commutator); a passed one never does.
/// Counterexample checks put the nonzero element they exhibit in `evidence`.
struct CheckReport {
  std::string check;
  bool pass = false;
  std::optional<std::string> witness;
  std::optional<std::string> evidence;
  long long ms = 0;

  /// {"check", "status", "witness", "ms"} plus "evidence" when present.
  std::string to_json() const;
};

/// Pass iff [g, f] = 0 for every canonical generator g.
CheckReport is_central(const UElement& f, const std::string& id = "is-central");

/// Pass iff f commutes with F_ii and T_i over the index range of the type.
/// Only characterizes the quantum shift subalgebra for generic diagonal mu;
/// non-generic mu is rejected with Error.
CheckReport amu_membership_criterion(const ShiftMatrix& mu, const UElement& f,
                                     const std::string& id = "amu-membership");

CheckReport pairwise_commuting(const GeneratorFamily& family, const std::string& id = "pairwise-commuting");

/// D_mu^p z passes the membership criterion for all p <= p_max (gl_N).
CheckReport check_theorem_A(const ShiftMatrix& mu, const UElement& z, int p_max,
                            const std::string& id = "dmu-iterates", bool hat = false);

/// D_mu z passes the membership criterion (orthogonal and symplectic types).
CheckReport check_bcd_single_step(const ShiftMatrix& mu, const UElement& z,
                                  const std::string& id = "bcd-single-step");

/// In o_5 with generic mu: the stated mu_2-coefficient of [T_1, tr mu^2 F^2]
/// is nonzero and [T_1, D_mu^2 (tr F^2)^3] != 0. Pass iff both are nonzero.
CheckReport counterexample_cubed_quadratic_casimir(int N = 5);

/// In gl_N with generic mu: D_mu(tr mu E tr E^3) is congruent to
/// c tr mu^2 E^2 modulo the membership criterion, and tr mu^2 E^2 fails it.
/// Pass iff tr mu^2 E^2 fails the criterion, the congruence holds with c != 0,
/// and the Leibniz correction term reduces to 3 tr mu^2 E^2 (so c = -3).
/// The evidence records c.
CheckReport counterexample_shift_not_preserved(int N = 3);

enum class Suite { all, identities, theorems, counterexamples };
Suite parse_suite(const std::string& name);

struct SuiteOptions {
  Suite suite = Suite::all;
  std::optional<Family> family;
  int max_n = 6;
  /// When nonzero, only checks on algebras of this N.
  int only_n = 0;
  std::uint64_t seed = 20240611;
  int trials = 1000;
};

/// A registered check: a description of the algebra it runs on plus a thunk.
struct CheckEntry {
  std::string id;
  Suite suite;
  Family family;
  int N;
  std::function<CheckReport()> run;
};

/// All checks selected by the options, in a fixed order.
std::vector<CheckEntry> select_checks(const SuiteOptions& options);
/// Runs the selected checks; reports are streamed through `sink` as they
/// finish and also returned.
std::vector<CheckReport> run_checks(const SuiteOptions& options,
                                    const std::function<void(const CheckReport&)>& sink = {});

}  // namespace qshift
