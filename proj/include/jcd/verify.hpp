#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jcd/driver.hpp"

namespace jcd {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::string detail;  ///< empty on success
};

struct VerifyReport {
  JcdResult result;
  std::vector<CheckOutcome> checks;

  bool all_passed() const;
  /// First failing check, if any.
  const CheckOutcome* first_failure() const;
};

struct ExpectedOutput {
  Mat s_prime;
  Mat n_prime;
};

/// Runs jc_d on (S, N) and checks every structural guarantee of the result:
/// conservation, commutation, semisimple/nilpotent parts, strict gamma decrease
/// with its band bookkeeping, both bounds, closure membership, oracle agreement,
/// commutation with the doubled representation, and independence from the pick
/// strategy and the step path. Throws PreconditionError on invalid input.
VerifyReport verify_instance(const Mat& s, const Mat& n, const std::optional<ExpectedOutput>& expected = {});

/// The band identity for one absorption step, from S, N and the chosen component:
/// with k0 the lowest band of the component, c_k(S, N - N0) equals c_k(S, N) for
/// k < k0 and drops by one at k0, and c_k(S + N0, N - N0) = c_k(S, N - N0) for k <= k0.
/// Returns an empty string when it holds, else a description.
std::string check_band_bookkeeping(const Mat& s, const Mat& n, const Mat& chosen);

}  // namespace jcd
