#include "jcd/eigen.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "jcd/errors.hpp"
#include "jcd/poly.hpp"

namespace jcd {

Mat ad_apply(const Mat& s, const Mat& y) { return bracket(s, y); }

bool is_eigenpair(const Mat& s, const EigPair& pair) {
  return ad_apply(s, pair.matrix) == scale(pair.eigenvalue, pair.matrix);
}

Mat sum_matrices(const EigSeq& seq, std::size_t n) {
  Mat total(n);
  for (const auto& p : seq) total += p.matrix;
  return total;
}

std::vector<Mat> matrices(const EigSeq& seq) {
  std::vector<Mat> out;
  out.reserve(seq.size());
  for (const auto& p : seq) out.push_back(p.matrix);
  return out;
}

std::vector<Rational> eigenvalues(const EigSeq& seq) {
  std::vector<Rational> out;
  out.reserve(seq.size());
  for (const auto& p : seq) out.push_back(p.eigenvalue);
  return out;
}

std::vector<Rational> triangular_ad_spectrum(const Mat& s) {
  std::set<Rational> values;
  for (std::size_t i = 0; i < s.dim(); ++i)
    for (std::size_t j = i; j < s.dim(); ++j) values.insert(s(i, i) - s(j, j));
  return {values.begin(), values.end()};
}

EigSeq decomp_unchecked(const Mat& s, const Mat& n) {
  if (n.is_zero()) return {};
  const std::vector<Rational> spectrum = triangular_ad_spectrum(s);
  const std::size_t count = spectrum.size();

  // Krylov iterates ad(S)^k N, k < count.
  std::vector<Mat> krylov{n};
  while (krylov.size() < count) krylov.push_back(ad_apply(s, krylov.back()));

  // w(x) = prod (x - spectrum[b]); the Lagrange basis polynomial for spectrum[a] is
  // (w(x) / (x - spectrum[a])) / w'(spectrum[a]), obtained by synthetic division.
  RatPoly w{1};
  for (const auto& mu : spectrum) w = w * RatPoly::linear(mu);

  EigSeq out;
  std::vector<Rational> quot(count);
  for (std::size_t a = 0; a < count; ++a) {
    Rational carry = 0;
    for (std::size_t k = count; k-- > 0;) {
      carry = w.coeffs()[k + 1] + carry * spectrum[a];
      quot[k] = carry;
    }
    Rational denom = 1;
    for (std::size_t b = 0; b < count; ++b)
      if (b != a) denom *= spectrum[a] - spectrum[b];
    const Rational inv = denom.inverse();

    Mat part(n.dim());
    for (std::size_t k = 0; k < count; ++k) part.add_scaled(quot[k] * inv, krylov[k]);
    if (!part.is_zero()) out.push_back({std::move(part), spectrum[a]});
  }
  return out;
}

EigSeq decomp(const Mat& s, const Mat& n) {
  if (s.dim() != n.dim()) throw StructuralError("decomp: dimension mismatch");
  if (!is_upper_triangular(s))
    throw PreconditionError("is_upper_triangular(S)", "decomp: S is not upper triangular");
  if (!is_upper_triangular(n))
    throw PreconditionError("is_upper_triangular(N)", "decomp: N is not upper triangular");
  if (!is_diagonalizable(s))
    throw PreconditionError("is_diagonalizable(S)", "decomp: S is not diagonalizable");
  if (!is_nilpotent(n)) throw PreconditionError("is_nilpotent(N)", "decomp: N is not nilpotent");
  return decomp_unchecked(s, n);
}

namespace detail {

std::vector<Mat> ad_powers(const Mat& x, const Mat& m) {
  std::vector<Mat> powers{m};
  const std::size_t n = m.dim();
  while (powers.size() < std::max<std::size_t>(n, 1)) {
    Mat next = ad_apply(x, powers.back());
    if (next.is_zero()) break;
    powers.push_back(std::move(next));
  }
  return powers;
}

}  // namespace detail

EigPair exp_shift(const Mat& x, const Rational& mu, const EigPair& pair, const Mat& s) {
  if (mu.is_zero()) throw PreconditionError("mu != 0", "exp_shift: mu must be nonzero");
  if (!is_strictly_upper(x))
    throw PreconditionError("is_strictly_upper(X)", "exp_shift: X is not strictly upper triangular");
  if (!is_upper_triangular(pair.matrix))
    throw PreconditionError("is_upper_triangular(M)", "exp_shift: M is not upper triangular");
  if (x.is_zero() || ad_apply(s, x) != scale(mu, x))
    throw PreconditionError("[S,X] = mu X", "exp_shift: X is not a mu-eigenmatrix of ad(S)");
  if (!is_eigenpair(s, pair))
    throw PreconditionError("[S,M] = lambda M", "exp_shift: M is not an eigenmatrix of ad(S)");

  const std::vector<Mat> powers = detail::ad_powers(x, pair.matrix);
  const Rational mu_inv = mu.inverse();
  Mat out = powers[0];
  Rational coeff = 1;
  for (std::size_t j = 1; j < powers.size(); ++j) {
    coeff *= mu_inv / Rational(static_cast<long>(j));
    out.add_scaled(coeff, powers[j]);
  }
  return {std::move(out), pair.eigenvalue};
}

EigSeq collect(const EigSeq& seq) {
  if (seq.empty()) return {};
  std::map<Rational, Mat> groups;
  for (const auto& p : seq) {
    auto [it, inserted] = groups.try_emplace(p.eigenvalue, p.matrix);
    if (!inserted) it->second += p.matrix;
  }
  EigSeq out;
  for (auto& [lambda, m] : groups)
    if (!m.is_zero()) out.push_back({std::move(m), lambda});
  return out;
}

EigSeq juxtapose(const EigSeq& a, const EigSeq& b) {
  EigSeq out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace jcd
