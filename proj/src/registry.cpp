#include "checks.hpp"

namespace qshift {

std::vector<CheckEntry> select_checks(const SuiteOptions& options) {
  std::vector<CheckEntry> all;
  if (options.suite == Suite::all || options.suite == Suite::identities) detail::add_identity_checks(all, options);
  if (options.suite == Suite::all || options.suite == Suite::theorems) detail::add_theorem_checks(all, options);
  if (options.suite == Suite::all || options.suite == Suite::counterexamples)
    detail::add_counterexample_checks(all, options);
  std::vector<CheckEntry> out;
  for (auto& e : all) {
    if (options.family && *options.family != e.family) continue;
    if (e.N > options.max_n) continue;
    if (options.only_n != 0 && e.N != options.only_n) continue;
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace qshift
