#pragma once

#include <vector>

#include <cstdint>
#include <functional>
#include <string>

#include "check_util.hpp"
#include "qshift/random.hpp"
#include "qshift/verify.hpp"

namespace qshift::detail {

/// Registers a check named "<name>:<algebra>".
inline void add(std::vector<CheckEntry>& out, Suite suite, Family family, int N, const std::string& name,
                std::function<Outcome()> body) {
  const std::string id = name + ":" + LieAlgebra::build(family, N)->name();
  out.push_back({id, suite, family, N, [id, body = std::move(body)]() { return timed(id, body); }});
}

/// A generator seeded from the run seed and the check id (FNV-1a), so every
/// randomized check is reproducible on its own.
inline Rng check_rng(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : id) h = (h ^ c) * 1099511628211ULL;
  return Rng(seed ^ h);
}

void add_identity_checks(std::vector<CheckEntry>& out, const SuiteOptions& options);
/// Tensor-level identities; called from add_identity_checks.
void add_tensor_identity_checks(std::vector<CheckEntry>& out, const SuiteOptions& options);
void add_theorem_checks(std::vector<CheckEntry>& out, const SuiteOptions& options);
void add_counterexample_checks(std::vector<CheckEntry>& out, const SuiteOptions& options);

}  // namespace qshift::detail
