#include "jcd/poly.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "jcd/errors.hpp"

namespace jcd {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear(const Rational& root) { return RatPoly{-root, 1}; }

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Rational RatPoly::operator()(const Rational& x) const {
  Rational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> d(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = Rational(static_cast<long>(k)) * c_[k];
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return leading().inverse() * *this;
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) + b.coeff(k);
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = a.coeff(k) - b.coeff(k);
  return RatPoly(std::move(v));
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(v));
}

RatPoly operator*(const Rational& c, const RatPoly& a) {
  std::vector<Rational> v = a.c_;
  for (auto& x : v) x *= c;
  return RatPoly(std::move(v));
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw PreconditionError("divisor != 0", "polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<Rational> rem = a.coeffs();
  std::vector<Rational> quot(rem.size() - b.coeffs().size() + 1);
  const Rational inv_lead = b.leading().inverse();
  const std::size_t db = b.coeffs().size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    Rational c = rem[k + db] * inv_lead;
    if (c.is_zero()) continue;
    quot[k] = c;
    for (std::size_t i = 0; i <= db; ++i) rem[k + i] -= c * b.coeffs()[i];
  }
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly operator%(const RatPoly& a, const RatPoly& b) { return divmod(a, b).second; }
RatPoly operator/(const RatPoly& a, const RatPoly& b) { return divmod(a, b).first; }

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a, y = b;
  while (!y.is_zero()) {
    RatPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::optional<RatPoly> inverse_mod(const RatPoly& a, const RatPoly& m) {
  // Extended Euclid tracking only the coefficient of a.
  RatPoly r0 = m, r1 = a % m;
  RatPoly s0, s1 = RatPoly{1};
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    RatPoly s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) return std::nullopt;
  return (r0.leading().inverse() * s0) % m;
}

RatPoly squarefree_part(const RatPoly& m) {
  if (m.is_zero()) throw PreconditionError("m != 0", "square-free part of the zero polynomial");
  return (m / gcd(m, m.derivative())).monic();
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v) {
  v = abs(v);
  std::vector<mpz_class> small, large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d != 0) continue;
    small.push_back(d);
    if (d * d != v) large.push_back(v / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace

std::vector<Rational> rational_roots(const RatPoly& p) {
  if (p.is_zero()) throw PreconditionError("p != 0", "roots of the zero polynomial");
  std::set<Rational> roots;

  // Strip the factor x^k, then clear denominators.
  std::size_t low = 0;
  while (p.coeffs()[low].is_zero()) ++low;
  if (low > 0) roots.insert(Rational(0));
  std::vector<Rational> c(p.coeffs().begin() + static_cast<long>(low), p.coeffs().end());
  mpz_class lcm_den = 1;
  for (const auto& x : c) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), x.denominator().get_mpz_t());
  std::vector<mpz_class> z;
  for (const auto& x : c) z.push_back(x.numerator() * (lcm_den / x.denominator()));

  if (z.size() > 1) {
    const RatPoly reduced(c);
    for (const auto& num : positive_divisors(z.front()))
      for (const auto& den : positive_divisors(z.back()))
        for (int s : {1, -1}) {
          Rational r(mpq_class(s * num, den));
          if (reduced(r).is_zero()) roots.insert(r);
        }
  }
  return {roots.begin(), roots.end()};
}

std::ostream& operator<<(std::ostream& os, const RatPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c;
    if (k >= 1) os << "*x";
    if (k >= 2) os << "^" << k;
  }
  return os;
}

}  // namespace jcd
