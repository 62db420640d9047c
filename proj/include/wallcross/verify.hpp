#pragma once

// Self-checks run by `wallcross verify`: brute-force oracle comparisons and
// polynomial identities across all modules.

#include <optional>

#include "wallcross/config.hpp"
#include "wallcross/report.hpp"

namespace wallcross {

struct VerifyOptions {
  /// 1 = quick (oracle checks up to d = 3), 2 = full.
  int level = 2;
  std::uint64_t seed = 1;
  /// Optional problem whose surface and walls join the built-in cases.
  std::optional<ProblemConfig> config;
  /// Negative control: perturbs the constant term of Q_2 seen by the
  /// P->Q substitution suite, which must then fail.
  bool mutate_q2 = false;
};

VerifyReport run_verify(const VerifyOptions& options);

}  // namespace wallcross
