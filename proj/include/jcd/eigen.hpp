#pragma once

#include <cstddef>
#include <vector>

#include "jcd/matrix.hpp"
#include "jcd/rational.hpp"

namespace jcd {

/// A matrix together with its eigenvalue under some ambient ad(S).
struct EigPair {
  Mat matrix;
  Rational eigenvalue;

  friend bool operator==(const EigPair&, const EigPair&) = default;
};

/// Ordered finite sequence of eigenpairs. May repeat eigenvalues unless produced by collect().
using EigSeq = std::vector<EigPair>;

/// ad(S)(Y) = [S, Y].
Mat ad_apply(const Mat& s, const Mat& y);

/// [S, pair.matrix] == pair.eigenvalue * pair.matrix.
bool is_eigenpair(const Mat& s, const EigPair& pair);

/// Sum of the matrices; the zero matrix of dimension n for an empty sequence.
Mat sum_matrices(const EigSeq& seq, std::size_t n);

std::vector<Mat> matrices(const EigSeq& seq);
std::vector<Rational> eigenvalues(const EigSeq& seq);

/// Candidate spectrum of ad(S) on upper-triangular matrices: the differences
/// d_i - d_j (i <= j) of diagonal entries of S, ascending and without repeats.
std::vector<Rational> triangular_ad_spectrum(const Mat& s);

/// Splits N into eigenmatrices of ad(S) with pairwise distinct eigenvalues.
///
/// Uses Lagrange spectral projectors over triangular_ad_spectrum(S), evaluated on
/// the Krylov sequence N, ad(S)N, ad(S)^2 N, ... so every returned matrix is a
/// rational combination of those iterates. Output is ascending by eigenvalue and
/// contains no zero matrices.
///
/// Requires S and N upper triangular, S diagonalizable and N nilpotent; throws
/// PreconditionError otherwise.
EigSeq decomp(const Mat& s, const Mat& n);

/// decomp() without precondition checks. S must be upper triangular and
/// diagonalizable and N upper triangular.
EigSeq decomp_unchecked(const Mat& s, const Mat& n);

/// exp(mu^-1 ad(X)) applied to pair.matrix, truncated after ad(X)^(n-1).
///
/// When [S, X] = mu X with mu != 0 and pair is an eigenpair of ad(S), the result
/// is an eigenmatrix of ad(S - X) with the same eigenvalue. Preconditions are
/// checked: mu != 0, X strictly upper triangular, both bracket identities.
EigPair exp_shift(const Mat& x, const Rational& mu, const EigPair& pair, const Mat& s);

/// Groups by eigenvalue, sums each group, drops zero sums. Ascending by eigenvalue.
EigSeq collect(const EigSeq& seq);

/// Concatenation a followed by b.
EigSeq juxtapose(const EigSeq& a, const EigSeq& b);

namespace detail {

/// ad(X)^j(M) for j = 0, 1, ... until the first zero or j = n - 1.
std::vector<Mat> ad_powers(const Mat& x, const Mat& m);

}  // namespace detail

}  // namespace jcd
