#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "jcd/rational.hpp"

namespace jcd {

class RatPoly;

/// Dense square matrix over the rationals. The dimension is fixed at construction.
class Mat {
 public:
  Mat() = default;
  explicit Mat(std::size_t n);
  /// Row-major literal, e.g. Mat{{0, 1}, {0, 1}}.
  Mat(std::initializer_list<std::initializer_list<Rational>> rows);

  static Mat zero(std::size_t n) { return Mat(n); }
  static Mat identity(std::size_t n);
  /// Elementary matrix with a single one at (i, j), zero-based.
  static Mat unit(std::size_t n, std::size_t i, std::size_t j);
  static Mat diag(std::span<const Rational> d);
  static Mat diag(std::initializer_list<Rational> d);

  std::size_t dim() const { return n_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  /// Row-major view of the entries.
  std::span<const Rational> entries() const { return a_; }

  bool is_zero() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rational& c);
  /// *this += c * o without a temporary.
  Mat& add_scaled(const Rational& c, const Mat& o);

  friend bool operator==(const Mat& a, const Mat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  std::size_t n_ = 0;
  std::vector<Rational> a_;
};

Mat add(const Mat& a, const Mat& b);
Mat sub(const Mat& a, const Mat& b);
Mat mul(const Mat& a, const Mat& b);
Mat scale(const Rational& c, const Mat& a);
/// [a, b] = ab - ba.
Mat bracket(const Mat& a, const Mat& b);

inline Mat operator+(const Mat& a, const Mat& b) { return add(a, b); }
inline Mat operator-(const Mat& a, const Mat& b) { return sub(a, b); }
inline Mat operator*(const Mat& a, const Mat& b) { return mul(a, b); }
inline Mat operator*(const Rational& c, const Mat& a) { return scale(c, a); }
Mat operator-(const Mat& a);

/// Gauss-Jordan inverse. Throws PreconditionError when singular.
Mat inverse(const Mat& a);

/// The k-th diagonal band of a matrix: entries with column - row == k.
struct DiagonalBand {
  std::size_t k = 0;
  Mat band;
};

/// Throws StructuralError unless k < dim.
DiagonalBand diagonal_band(const Mat& a, std::size_t k);
/// True when the k-th band has a nonzero entry; cheaper than building the band.
bool band_nonzero(const Mat& a, std::size_t k);
/// Smallest k with a nonzero k-th band, or nullopt for the zero matrix.
std::optional<std::size_t> lowest_band(const Mat& a);

bool is_upper_triangular(const Mat& a);
bool is_strictly_upper(const Mat& a);
/// a^n == 0.
bool is_nilpotent(const Mat& a);

/// Monic polynomial of least degree annihilating a.
RatPoly minimal_polynomial(const Mat& a);
/// Minimal polynomial square-free; over characteristic zero this is semisimplicity.
bool is_diagonalizable(const Mat& a);

/// p(a) by Horner's rule.
Mat evaluate(const RatPoly& p, const Mat& a);

std::ostream& operator<<(std::ostream& os, const Mat& m);

}  // namespace jcd
