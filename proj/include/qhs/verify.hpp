#ifndef QHS_VERIFY_HPP
#define QHS_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "qhs/qcore.hpp"
#include "qhs/qhermite.hpp"

namespace qhs {

/// Outcome of one identity at one index. A failure carries the canonical
/// form of the nonzero residual.
struct CheckResult {
  std::string identity;
  int n = 0;
  bool passed = true;
  std::string witness;
};

struct VerifyOptions {
  int n_max = 8;
  /// Identity names to run; empty means all of them.
  std::vector<std::string> checks;
  /// Replaces the base family used by the classical checks.
  std::optional<HermiteFamily> base_override;
};

/// Every identity name understood by run_checks, sorted.
const std::vector<std::string>& available_checks();

/// Runs the selected residual suites over n <= n_max for an ExactMass
/// context. Results are sorted by identity name, then n. Throws
/// std::invalid_argument for an unknown check name.
std::vector<CheckResult> run_checks(const QContext& ctx, const VerifyOptions& options);

inline bool all_passed(const std::vector<CheckResult>& results) {
  for (const auto& r : results) {
    if (!r.passed) return false;
  }
  return true;
}

}  // namespace qhs

#endif  // QHS_VERIFY_HPP
