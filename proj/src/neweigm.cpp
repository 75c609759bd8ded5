#include "jcd/neweigm.hpp"

#include <set>

#include "jcd/errors.hpp"

namespace jcd {

namespace {

void check_preconditions(const EigSeq& seq, const Mat& x, const Rational& mu, const Mat& s) {
  const std::size_t n = s.dim();
  if (x.dim() != n) throw StructuralError("new_eig_m: X dimension mismatch");
  if (!is_upper_triangular(s))
    throw PreconditionError("is_upper_triangular(S)", "new_eig_m: S is not upper triangular");

  std::set<Rational> seen;
  for (const auto& p : seq) {
    if (p.matrix.dim() != n) throw StructuralError("new_eig_m: pair dimension mismatch");
    if (!seen.insert(p.eigenvalue).second)
      throw PreconditionError("distinct eigenvalues", "new_eig_m: repeated eigenvalue " + p.eigenvalue.str());
    if (!is_upper_triangular(p.matrix))
      throw PreconditionError("is_upper_triangular(N_i)", "new_eig_m: input matrix is not upper triangular");
    if (!is_eigenpair(s, p))
      throw PreconditionError("[S,N_i] = lambda_i N_i",
                              "new_eig_m: input pair is not an eigenmatrix of ad(S) for eigenvalue " +
                                  p.eigenvalue.str());
  }

  if (x.is_zero()) return;
  if (mu.is_zero()) throw PreconditionError("mu != 0", "new_eig_m: mu must be nonzero when X != 0");
  if (!is_strictly_upper(x))
    throw PreconditionError("is_strictly_upper(X)", "new_eig_m: X is not strictly upper triangular");
  if (ad_apply(s, x) != scale(mu, x))
    throw PreconditionError("[S,X] = mu X", "new_eig_m: X is not a mu-eigenmatrix of ad(S)");
}

}  // namespace

NewEigMResult new_eig_m_traced(const EigSeq& seq, const Mat& x, const Rational& mu, const Mat& s) {
  check_preconditions(seq, x, mu, s);
  NewEigMResult result;

  if (x.is_zero()) {
    result.output = collect(seq);
    result.trace.push_back({{}, result.output, 0});
    return result;
  }

  const std::size_t n = s.dim();
  const Rational mu_inv = mu.inverse();
  EigSeq pending = seq;
  EigSeq shifted;

  for (std::size_t loop = 1;; ++loop) {
    if (loop > n + 1) throw InvariantViolation("new_eig_m: residual queue failed to drain");

    EigSeq residuals;
    for (const auto& [m, lambda] : pending) {
      const std::vector<Mat> powers = detail::ad_powers(x, m);
      Mat moved = powers[0];
      Rational coeff = 1;
      for (std::size_t j = 1; j < powers.size(); ++j) {
        coeff *= mu_inv / Rational(static_cast<long>(j));
        Mat term = scale(coeff, powers[j]);
        moved += term;
        residuals.push_back({-term, lambda + Rational(static_cast<long>(j)) * mu});
      }
      shifted.push_back({std::move(moved), lambda});
    }

    shifted = collect(shifted);
    pending = collect(residuals);
    result.trace.push_back({pending, shifted, loop});
    if (pending.empty()) break;
  }

  result.output = std::move(shifted);
  return result;
}

EigSeq new_eig_m(const EigSeq& seq, const Mat& x, const Rational& mu, const Mat& s) {
  return new_eig_m_traced(seq, x, mu, s).output;
}

}  // namespace jcd
