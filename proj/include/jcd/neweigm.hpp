#pragma once

#include <cstddef>
#include <vector>

#include "jcd/eigen.hpp"

namespace jcd {

/// Snapshot of the eigenmatrix-shifting loop after one pass.
struct NewEigMState {
  EigSeq eigm_s;      ///< pending eigenmatrices of ad(S)
  EigSeq eigm_s_m_x;  ///< accumulated eigenmatrices of ad(S - X)
  std::size_t loop_count = 0;
};

struct NewEigMResult {
  EigSeq output;
  std::vector<NewEigMState> trace;
};

/// Converts a decomposition of N under ad(S) into its decomposition under ad(S - X).
///
/// `seq` must have pairwise distinct eigenvalues, each pair an eigenmatrix of
/// ad(S) in upper-triangular form. X is either zero, in which case the result is
/// collect(seq), or strictly upper triangular with [S, X] = mu X and mu != 0.
/// Each pass moves exp(mu^-1 ad(X)) N_i into the output and re-queues the
/// residuals -(mu^-j / j!) ad(X)^j N_i with eigenvalues lambda_i + j mu.
/// Residuals sit in strictly higher bands than their source, so the loop runs at
/// most n times.
EigSeq new_eig_m(const EigSeq& seq, const Mat& x, const Rational& mu, const Mat& s);

/// new_eig_m() that also records the state after every pass.
NewEigMResult new_eig_m_traced(const EigSeq& seq, const Mat& x, const Rational& mu, const Mat& s);

}  // namespace jcd
