#include "jcd/rational.hpp"

#include <cctype>
#include <ostream>

#include "jcd/errors.hpp"

namespace jcd {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational::Rational(long num, long den) {
  if (den == 0) throw StructuralError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::string_view num = text, den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  if (!all_digits(num) || !all_digits(den))
    throw ParseError("malformed rational \"" + original + "\"");

  mpz_class p(std::string(num), 10), q(std::string(den), 10);
  if (q == 0) throw ParseError("zero denominator in rational \"" + original + "\"");
  if (negative) p = -p;
  mpq_class r(p, q);
  r.canonicalize();
  return Rational(std::move(r));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_str();
}

Rational Rational::inverse() const {
  if (is_zero()) throw StructuralError("inverse of zero");
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw StructuralError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned j) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), j);
  return Rational(mpq_class(f));
}

}  // namespace jcd
