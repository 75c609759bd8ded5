#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <utility>
#include <vector>

#include "jcd/rational.hpp"

namespace jcd {

/// Univariate polynomial over the rationals, coefficients stored lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);
  RatPoly(std::initializer_list<Rational> coeffs);

  /// c * x^k.
  static RatPoly monomial(const Rational& c, std::size_t k);
  /// x - r.
  static RatPoly linear(const Rational& root);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Rational operator()(const Rational& x) const;

  RatPoly derivative() const;
  RatPoly monic() const;

  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const Rational& c, const RatPoly& a);
  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.c_ == b.c_; }

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder. Throws PreconditionError on division by zero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);
RatPoly operator%(const RatPoly& a, const RatPoly& b);
RatPoly operator/(const RatPoly& a, const RatPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
RatPoly gcd(const RatPoly& a, const RatPoly& b);

/// Inverse of a modulo m, or nullopt when gcd(a, m) is not constant.
std::optional<RatPoly> inverse_mod(const RatPoly& a, const RatPoly& m);

/// m / gcd(m, m'), monic. Throws PreconditionError on the zero polynomial.
RatPoly squarefree_part(const RatPoly& m);

/// Rational roots, ascending, without multiplicity.
std::vector<Rational> rational_roots(const RatPoly& p);

std::ostream& operator<<(std::ostream& os, const RatPoly& p);

}  // namespace jcd
