#include "jcd/liealg.hpp"

#include <algorithm>

#include "jcd/errors.hpp"
#include "jcd/poly.hpp"

namespace jcd {

namespace {

using Vec = std::vector<Rational>;

Vec flatten(const Mat& m) { return {m.entries().begin(), m.entries().end()}; }

Mat unflatten(const Vec& v, std::size_t n) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = v[i * n + j];
  return m;
}

std::size_t first_nonzero(const Vec& v) {
  std::size_t k = 0;
  while (k < v.size() && v[k].is_zero()) ++k;
  return k;
}

}  // namespace

Vec MatSubspace::reduce(Vec v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Rational f = v[pivots_[r]];
    if (f.is_zero()) continue;
    const Vec& row = rows_[r];
    for (std::size_t j = pivots_[r]; j < v.size(); ++j)
      if (!row[j].is_zero()) v[j] -= f * row[j];
  }
  return v;
}

bool MatSubspace::insert(const Mat& m) {
  if (m.dim() != n_) throw StructuralError("MatSubspace::insert: dimension mismatch");
  Vec v = reduce(flatten(m));
  const std::size_t piv = first_nonzero(v);
  if (piv == v.size()) return false;

  const Rational inv = v[piv].inverse();
  for (auto& x : v)
    if (!x.is_zero()) x *= inv;
  // Clear the new pivot column from the existing rows to stay fully reduced.
  for (auto& row : rows_) {
    const Rational f = row[piv];
    if (f.is_zero()) continue;
    for (std::size_t j = piv; j < row.size(); ++j)
      if (!v[j].is_zero()) row[j] -= f * v[j];
  }
  auto at = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
  const auto idx = at - pivots_.begin();
  pivots_.insert(at, piv);
  rows_.insert(rows_.begin() + idx, std::move(v));
  return true;
}

bool MatSubspace::contains(const Mat& m) const {
  if (m.dim() != n_) throw StructuralError("MatSubspace::contains: dimension mismatch");
  const Vec v = reduce(flatten(m));
  return first_nonzero(v) == v.size();
}

std::vector<Mat> MatSubspace::basis() const {
  std::vector<Mat> out;
  out.reserve(rows_.size());
  for (const auto& row : rows_) out.push_back(unflatten(row, n_));
  return out;
}

MatSubspace span(std::span<const Mat> mats, std::size_t n) {
  MatSubspace v(n);
  for (const auto& m : mats) v.insert(m);
  return v;
}

MatSubspace span(std::span<const Mat> mats) {
  if (mats.empty()) throw StructuralError("span: empty list needs an explicit dimension");
  return span(mats, mats.front().dim());
}

bool contains(const MatSubspace& v, const Mat& m) { return v.contains(m); }

MatSubspace lie_closure(std::span<const Mat> gens, std::size_t n) {
  MatSubspace v(n);
  std::vector<Mat> elems;  // independent elements spanning v
  for (const auto& g : gens)
    if (v.insert(g)) elems.push_back(g);

  // Bracket each element with everything before it; new elements join the queue.
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) {
      Mat b = bracket(elems[i], elems[j]);
      if (v.insert(b)) elems.push_back(std::move(b));
    }
  return v;
}

MatSubspace lie_closure(std::span<const Mat> gens) {
  if (gens.empty()) throw StructuralError("lie_closure: empty list needs an explicit dimension");
  return lie_closure(gens, gens.front().dim());
}

bool is_bracket_closed(const MatSubspace& v) {
  const auto b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (!v.contains(bracket(b[i], b[j]))) return false;
  return true;
}

MatSubspace derived_algebra(const MatSubspace& v) {
  MatSubspace d(v.ambient_dim());
  const auto b = v.basis();
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = 0; j < i; ++j) d.insert(bracket(b[i], b[j]));
  return d;
}

std::vector<MatSubspace> derived_series(const MatSubspace& v) {
  if (!is_bracket_closed(v))
    throw PreconditionError("bracket-closed", "derived_series: subspace is not a Lie algebra");
  std::vector<MatSubspace> series{v};
  while (!series.back().is_zero()) {
    MatSubspace next = derived_algebra(series.back());
    if (next == series.back()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const MatSubspace& v) { return derived_series(v).back().is_zero(); }

Mat direct_sum_rep(const Mat& m, std::size_t copies) {
  if (copies == 0) throw StructuralError("direct_sum_rep: copies must be positive");
  const std::size_t n = m.dim();
  Mat out(n * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(c * n + i, c * n + j) = m(i, j);
  return out;
}

MatSubspace upper_triangular_algebra(std::size_t n) {
  MatSubspace v(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) v.insert(Mat::unit(n, i, j));
  return v;
}

// ---------------------------------------------------------------------------
// Triangularization

namespace {

/// Column-major basis of a subspace of Q^m: each entry is one basis vector.
using Basis = std::vector<Vec>;

Vec apply(const Mat& g, const Vec& v) {
  const std::size_t m = g.dim();
  Vec out(m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (!g(i, j).is_zero() && !v[j].is_zero()) out[i] += g(i, j) * v[j];
  return out;
}

/// Coordinates of w in the basis (w must lie in the span).
Vec coordinates(const Basis& basis, const Vec& w) {
  const std::size_t k = basis.size(), m = w.size();
  // Augmented system [basis | w], eliminated row by row.
  std::vector<Vec> a(m, Vec(k + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t c = 0; c < k; ++c) a[i][c] = basis[c][i];
    a[i][k] = w[i];
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_row(k);
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t r = row;
    while (r < m && a[r][c].is_zero()) ++r;
    if (r == m) throw InvariantViolation("triangularize: basis is not independent");
    std::swap(a[r], a[row]);
    const Rational inv = a[row][c].inverse();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = c; j <= k; ++j) a[i][j] -= f * a[row][j];
    }
    pivot_row[c] = row++;
  }
  for (std::size_t i = row; i < m; ++i)
    if (!a[i][k].is_zero()) throw InvariantViolation("triangularize: subspace is not invariant");
  Vec x(k);
  for (std::size_t c = 0; c < k; ++c) x[c] = a[pivot_row[c]][k];
  return x;
}

/// Matrix of g restricted to the invariant subspace spanned by basis.
Mat restrict_to(const Mat& g, const Basis& basis) {
  Mat c(basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    const Vec col = coordinates(basis, apply(g, basis[j]));
    for (std::size_t i = 0; i < basis.size(); ++i) c(i, j) = col[i];
  }
  return c;
}

/// Basis of ker(c), as coordinate vectors.
Basis kernel(const Mat& c) {
  const std::size_t k = c.dim();
  std::vector<Vec> a(k, Vec(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) a[i][j] = c(i, j);
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < k && row < k; ++col) {
    std::size_t r = row;
    while (r < k && a[r][col].is_zero()) ++r;
    if (r == k) continue;
    std::swap(a[r], a[row]);
    const Rational inv = a[row][col].inverse();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < k; ++i) {
      if (i == row || a[i][col].is_zero()) continue;
      const Rational f = a[i][col];
      for (std::size_t j = col; j < k; ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  Basis out;
  for (std::size_t free = 0; free < k; ++free) {
    if (std::find(pivots.begin(), pivots.end(), free) != pivots.end()) continue;
    Vec v(k);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
    out.push_back(std::move(v));
  }
  return out;
}

/// A common eigenvector of a solvable family acting on Q^m.
///
/// Walks the derived series from the deepest nonzero term outwards. Each term
/// acts commutatively on the current weight space of the next deeper term, and
/// that weight space is invariant under the whole algebra, so refining it by
/// eigenspaces of each basis element keeps it nonempty and invariant.
Vec common_eigenvector(const std::vector<MatSubspace>& series, std::size_t m) {
  Basis w;
  for (std::size_t i = 0; i < m; ++i) {
    Vec e(m);
    e[i] = 1;
    w.push_back(std::move(e));
  }
  for (auto level = series.rbegin(); level != series.rend(); ++level) {
    for (const Mat& g : level->basis()) {
      const Mat c = restrict_to(g, w);
      const auto roots = rational_roots(minimal_polynomial(c));
      if (roots.empty())
        throw UnsupportedField("triangularize: common eigenvalue is not rational");
      Mat shifted = c;
      for (std::size_t i = 0; i < c.dim(); ++i) shifted(i, i) -= roots.front();
      Basis refined;
      for (const Vec& coords : kernel(shifted)) {
        Vec v(m);
        for (std::size_t j = 0; j < coords.size(); ++j)
          if (!coords[j].is_zero())
            for (std::size_t i = 0; i < m; ++i) v[i] += coords[j] * w[j][i];
        refined.push_back(std::move(v));
      }
      w = std::move(refined);
    }
  }
  return w.front();
}

/// Recursive step on a list of m x m matrices spanning (with brackets) a solvable algebra.
Mat triangularizing_basis(const std::vector<Mat>& gens, std::size_t m) {
  if (m <= 1) return Mat::identity(m);

  const auto series = derived_series(lie_closure(gens, m));
  const Vec v = common_eigenvector(series, m);

  // Q = [v | e_i for i != p], with v_p != 0.
  const std::size_t p = first_nonzero(v);
  Mat q(m);
  for (std::size_t i = 0; i < m; ++i) q(i, 0) = v[i];
  for (std::size_t i = 0, col = 1; i < m; ++i)
    if (i != p) q(i, col++) = 1;
  const Mat q_inv = inverse(q);

  std::vector<Mat> quotient;
  for (const Mat& g : gens) {
    const Mat h = q_inv * g * q;
    Mat sub(m - 1);
    for (std::size_t i = 1; i < m; ++i)
      for (std::size_t j = 1; j < m; ++j) sub(i - 1, j - 1) = h(i, j);
    quotient.push_back(std::move(sub));
  }
  const Mat inner = triangularizing_basis(quotient, m - 1);
  Mat lift = Mat::identity(m);
  for (std::size_t i = 1; i < m; ++i)
    for (std::size_t j = 1; j < m; ++j) lift(i, j) = inner(i - 1, j - 1);
  return q * lift;
}

}  // namespace

Triangularization triangularize(std::span<const Mat> gens) {
  if (gens.empty()) throw StructuralError("triangularize: no generators");
  const std::size_t m = gens.front().dim();
  std::vector<Mat> g(gens.begin(), gens.end());
  for (const auto& x : g)
    if (x.dim() != m) throw StructuralError("triangularize: dimension mismatch");
  if (!is_solvable(lie_closure(g, m)))
    throw PreconditionError("is_solvable", "triangularize: generated Lie algebra is not solvable");

  Triangularization out{triangularizing_basis(g, m), {}};
  const Mat p_inv = inverse(out.p);
  for (const auto& x : g) {
    Mat c = p_inv * x * out.p;
    if (!is_upper_triangular(c)) throw InvariantViolation("triangularize: result is not upper triangular");
    out.conjugated.push_back(std::move(c));
  }
  return out;
}

}  // namespace jcd
