#pragma once

#include <string>
#include <vector>

namespace mtkit {

/// Result of one theorem check over the enumerated spaces: instances is the
/// number of cases examined, and violations carries one serialized
/// counterexample per failure (space document plus witness) so a failure can
/// be replayed through the CLI. Empty violations on a correct build.
struct TheoremReport {
  std::string id;
  long instances = 0;
  std::vector<std::string> violations;
  double seconds = 0.0;
};

struct TheoremInfo {
  std::string id;
  std::string statement;
};

/// The id -> statement table backing the docs.
const std::vector<TheoremInfo>& theorem_catalog();

/// Runs every catalogued check on every labeled topology with at most n
/// points (individual checks cap expensive quantifiers at their documented
/// bounds). Violations are data, not errors.
std::vector<TheoremReport> run_theorem_suite(int n);

}  // namespace mtkit
