#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

#include "jcd/matrix.hpp"

namespace jcd {

struct GenConfig {
  std::size_t n = 3;
  std::uint64_t seed = 0;
  /// Spectrum values are drawn from [-diag_range, diag_range].
  long diag_range = 2;
  /// Allow repeated diagonal values. When false the range widens as needed to fit n distinct values.
  bool multiplicity = true;
  /// Off-diagonal entries are drawn from [-entry_range, entry_range].
  long entry_range = 2;
};

/// Identifier of the pseudo-random source, recorded in instance metadata.
inline constexpr std::string_view generator_id = "mt19937_64/v1";

struct Instance {
  Mat s;
  Mat n;
};

/// Throws StructuralError for n == 0 or non-positive ranges.
void validate(const GenConfig& cfg);

/// S = U D U^-1 with D diagonal and U unit upper triangular; N strictly upper triangular.
/// Deterministic in cfg.
Instance gen_instance(const GenConfig& cfg);

/// Like gen_instance(), but N = U C U^-1 with C strictly upper triangular in the
/// centralizer of D, so [S, N] = 0.
Instance gen_commuting_instance(const GenConfig& cfg);

}  // namespace jcd
