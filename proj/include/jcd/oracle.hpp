#pragma once

#include "jcd/matrix.hpp"
#include "jcd/poly.hpp"

namespace jcd {

struct ClassicalJcd {
  Mat s_prime;
  Mat n_prime;
  /// S' = polynomial(A).
  RatPoly polynomial;
};

/// Classical Jordan-Chevalley decomposition of an arbitrary square rational matrix.
///
/// With m the minimal polynomial of A and p its square-free part, runs Newton's
/// iteration t -> t - p(t) / p'(t) in Q[t]/(m) starting from t until p(t) = 0
/// there, then evaluates the result at A. Independent of the eigenmatrix machinery.
ClassicalJcd chevalley_jcd(const Mat& a);

}  // namespace jcd
