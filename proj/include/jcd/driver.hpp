#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "jcd/eigen.hpp"

namespace jcd {

/// Per-band counts (c_1, ..., c_{n-1}) of nonzero-eigenvalue eigenmatrix
/// components whose k-th band is nonzero. Ordered lexicographically.
struct GammaVector {
  std::vector<std::size_t> counts;

  bool all_zero() const;
  friend bool operator==(const GammaVector&, const GammaVector&) = default;
  friend auto operator<=>(const GammaVector& a, const GammaVector& b) { return a.counts <=> b.counts; }
};

/// Counts from an existing decomposition of N under ad(S); n is the matrix dimension.
GammaVector gamma_of(const EigSeq& decomposition, std::size_t n);
/// Termination measure of the pair (S, N). Same preconditions as decomp().
GammaVector gamma(const Mat& s, const Mat& n);

/// Chooses the index of a nonzero-eigenvalue pair to absorb into S.
using PickStrategy = std::function<std::size_t(const EigSeq&)>;

/// First nonzero-eigenvalue pair in sequence order.
std::size_t pick_first(const EigSeq& seq);
/// Pair with the lowest nonzero band, ties broken by ascending eigenvalue. Default.
std::size_t pick_lowest_band(const EigSeq& seq);

enum class PickRule { first, lowest_band };
PickStrategy strategy(PickRule rule);

/// How the decomposition is refreshed after each absorption.
enum class StepPath {
  neweigm,  ///< shift the remaining pairs with new_eig_m
  decomp,   ///< recompute decomp(S', N') from scratch
};

struct JcdStep {
  Mat s;
  Mat n;
  GammaVector gamma;
  EigSeq decomposition;
  std::optional<Rational> chosen_eigenvalue;
  std::optional<Mat> chosen_matrix;
};

struct JcdResult {
  Mat s_prime;
  Mat n_prime;
  /// One entry per visited state; the last one has no choice. loops() == steps - 1.
  std::vector<JcdStep> trace;

  std::size_t loops() const { return trace.empty() ? 0 : trace.size() - 1; }
};

/// Jordan-Chevalley decomposition of S + N for upper-triangular S (diagonalizable)
/// and N (nilpotent), which need not commute.
///
/// Repeatedly moves a nonzero-eigenvalue component N_i of N (under ad(S)) from N
/// into S. Each move strictly lowers gamma lexicographically; the loop stops once
/// every remaining component has eigenvalue zero, i.e. [S', N'] = 0. Both outputs
/// stay inside the Lie algebra generated by S and N.
///
/// Throws PreconditionError on invalid input and InvariantViolation if gamma fails
/// to decrease or the strategy picks a zero-eigenvalue pair.
JcdResult jc_d(const Mat& s, const Mat& n, const PickStrategy& pick = pick_lowest_band,
               StepPath via = StepPath::neweigm);

/// Throws PreconditionError naming the first violated jc_d() precondition.
void check_jcd_preconditions(const Mat& s, const Mat& n);

/// n(n-1)^2 / 2.
std::size_t loop_bound(std::size_t n);
/// n(n-1) / 2.
std::size_t gamma_entry_bound(std::size_t n);

std::string to_string(const GammaVector& g);

}  // namespace jcd
