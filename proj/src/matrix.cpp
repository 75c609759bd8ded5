#include "jcd/matrix.hpp"

#include <ostream>

#include "jcd/errors.hpp"
#include "jcd/poly.hpp"

namespace jcd {

namespace {

void require_same_dim(const Mat& a, const Mat& b, const char* op) {
  if (a.dim() != b.dim())
    throw StructuralError(std::string(op) + ": dimension mismatch (" + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

Mat::Mat(std::size_t n) : n_(n), a_(n * n) {}

Mat::Mat(std::initializer_list<std::initializer_list<Rational>> rows) : Mat(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != n_) throw StructuralError("matrix literal is not square");
    std::size_t j = 0;
    for (const auto& x : row) (*this)(i, j++) = x;
    ++i;
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::unit(std::size_t n, std::size_t i, std::size_t j) {
  if (i >= n || j >= n) throw StructuralError("elementary matrix index out of range");
  Mat m(n);
  m(i, j) = 1;
  return m;
}

Mat Mat::diag(std::span<const Rational> d) {
  Mat m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::diag(std::initializer_list<Rational> d) {
  return diag(std::span<const Rational>(d.begin(), d.size()));
}

bool Mat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

Mat& Mat::operator+=(const Mat& o) {
  require_same_dim(*this, o, "add");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] += o.a_[k];
  return *this;
}

Mat& Mat::operator-=(const Mat& o) {
  require_same_dim(*this, o, "sub");
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] -= o.a_[k];
  return *this;
}

Mat& Mat::operator*=(const Rational& c) {
  for (auto& x : a_)
    if (!x.is_zero()) x *= c;
  return *this;
}

Mat& Mat::add_scaled(const Rational& c, const Mat& o) {
  require_same_dim(*this, o, "add_scaled");
  if (c.is_zero()) return *this;
  for (std::size_t k = 0; k < a_.size(); ++k)
    if (!o.a_[k].is_zero()) a_[k] += c * o.a_[k];
  return *this;
}

Mat add(const Mat& a, const Mat& b) {
  Mat r = a;
  return r += b;
}

Mat sub(const Mat& a, const Mat& b) {
  Mat r = a;
  return r -= b;
}

Mat mul(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "mul");
  const std::size_t n = a.dim();
  Mat r(n);
  // Skipping zero entries makes products of triangular matrices cheap.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        const Rational& bkj = b(k, j);
        if (!bkj.is_zero()) r(i, j) += aik * bkj;
      }
    }
  return r;
}

Mat scale(const Rational& c, const Mat& a) {
  if (c.is_zero()) return Mat(a.dim());
  Mat r = a;
  return r *= c;
}

Mat bracket(const Mat& a, const Mat& b) {
  require_same_dim(a, b, "bracket");
  return mul(a, b) - mul(b, a);
}

Mat operator-(const Mat& a) { return scale(Rational(-1), a); }

Mat inverse(const Mat& a) {
  const std::size_t n = a.dim();
  Mat m = a, inv = Mat::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m(piv, col).is_zero()) ++piv;
    if (piv == n) throw PreconditionError("invertible", "matrix is singular");
    if (piv != col)
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    const Rational p = m(col, col).inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m(col, j) *= p;
      inv(col, j) *= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m(i, col).is_zero()) continue;
      const Rational f = m(i, col);
      for (std::size_t j = 0; j < n; ++j) {
        m(i, j) -= f * m(col, j);
        inv(i, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

DiagonalBand diagonal_band(const Mat& a, std::size_t k) {
  if (k >= a.dim())
    throw StructuralError("band index " + std::to_string(k) + " out of range for n = " +
                          std::to_string(a.dim()));
  DiagonalBand b{k, Mat(a.dim())};
  for (std::size_t i = 0; i + k < a.dim(); ++i) b.band(i, i + k) = a(i, i + k);
  return b;
}

bool band_nonzero(const Mat& a, std::size_t k) {
  for (std::size_t i = 0; i + k < a.dim(); ++i)
    if (!a(i, i + k).is_zero()) return true;
  return false;
}

std::optional<std::size_t> lowest_band(const Mat& a) {
  for (std::size_t k = 0; k < a.dim(); ++k)
    if (band_nonzero(a, k)) return k;
  return std::nullopt;
}

bool is_upper_triangular(const Mat& a) {
  for (std::size_t i = 1; i < a.dim(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!a(i, j).is_zero()) return false;
  return true;
}

bool is_strictly_upper(const Mat& a) {
  if (!is_upper_triangular(a)) return false;
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (!a(i, i).is_zero()) return false;
  return true;
}

bool is_nilpotent(const Mat& a) {
  if (a.dim() == 0) return true;
  Mat p = a;
  for (std::size_t k = 1; k < a.dim() && !p.is_zero(); ++k) p = mul(p, a);
  return p.is_zero();
}

RatPoly minimal_polynomial(const Mat& a) {
  const std::size_t n = a.dim();
  if (n == 0) return RatPoly{1};

  // Echelon rows of flattened powers, each paired with its expression in powers of a.
  struct Row {
    std::vector<Rational> v;
    std::size_t pivot;
    std::vector<Rational> combo;
  };
  std::vector<Row> rows;
  Mat power = Mat::identity(n);

  for (std::size_t deg = 0;; ++deg) {
    std::vector<Rational> v(power.entries().begin(), power.entries().end());
    std::vector<Rational> combo(deg + 1);
    combo[deg] = 1;
    for (const auto& row : rows) {
      if (v[row.pivot].is_zero()) continue;
      const Rational f = v[row.pivot];
      for (std::size_t j = row.pivot; j < v.size(); ++j)
        if (!row.v[j].is_zero()) v[j] -= f * row.v[j];
      for (std::size_t j = 0; j < row.combo.size(); ++j) combo[j] -= f * row.combo[j];
    }
    std::size_t pivot = 0;
    while (pivot < v.size() && v[pivot].is_zero()) ++pivot;
    if (pivot == v.size()) return RatPoly(std::move(combo)).monic();

    const Rational inv = v[pivot].inverse();
    for (auto& x : v) x *= inv;
    for (auto& x : combo) x *= inv;
    rows.push_back({std::move(v), pivot, std::move(combo)});
    power = mul(power, a);
  }
}

bool is_diagonalizable(const Mat& a) {
  const RatPoly m = minimal_polynomial(a);
  return gcd(m, m.derivative()).degree() == 0;
}

Mat evaluate(const RatPoly& p, const Mat& a) {
  Mat acc(a.dim());
  const Mat id = Mat::identity(a.dim());
  for (std::size_t k = p.coeffs().size(); k-- > 0;) {
    acc = mul(acc, a);
    acc += scale(p.coeffs()[k], id);
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Mat& m) {
  os << '[';
  for (std::size_t i = 0; i < m.dim(); ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < m.dim(); ++j) os << (j ? ", " : "") << m(i, j);
    os << ']';
  }
  return os << ']';
}

}  // namespace jcd
