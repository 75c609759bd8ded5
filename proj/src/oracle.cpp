#include "jcd/oracle.hpp"

#include "jcd/errors.hpp"

namespace jcd {

namespace {

/// p(t) reduced modulo m, where t is itself a residue.
RatPoly compose_mod(const RatPoly& p, const RatPoly& t, const RatPoly& m) {
  RatPoly acc;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) acc = (acc * t + RatPoly{p.coeffs()[k]}) % m;
  return acc;
}

}  // namespace

ClassicalJcd chevalley_jcd(const Mat& a) {
  const RatPoly m = minimal_polynomial(a);
  const RatPoly p = squarefree_part(m);
  const RatPoly dp = p.derivative();

  RatPoly t = RatPoly::monomial(1, 1) % m;
  // Newton doubles the vanishing order each pass; deg(m) passes always suffice.
  for (long pass = 0;; ++pass) {
    const RatPoly pt = compose_mod(p, t, m);
    if (pt.is_zero()) break;
    if (pass > m.degree()) throw InvariantViolation("chevalley_jcd: Newton iteration did not converge");
    const auto inv = inverse_mod(compose_mod(dp, t, m), m);
    if (!inv) throw InvariantViolation("chevalley_jcd: p'(t) not invertible modulo the minimal polynomial");
    t = (t - pt * *inv) % m;
  }

  ClassicalJcd out{evaluate(t, a), Mat(a.dim()), t};
  out.n_prime = a - out.s_prime;
  return out;
}

}  // namespace jcd
