#pragma once

// Test-only helpers: seeded random inputs and brute-force oracles that share no
// code path with the routines they check.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "jcd/eigen.hpp"
#include "jcd/gen.hpp"
#include "jcd/matrix.hpp"

namespace jcd::test {

using Vec = std::vector<Rational>;

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : e_(seed) {}
  long between(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(e_); }
  Rational rational(long range) {
    long den = between(1, range);
    return Rational(between(-range, range), den);
  }
  bool coin() { return between(0, 1) == 1; }

 private:
  std::mt19937_64 e_;
};

inline Mat random_upper(Rng& rng, std::size_t n, long range, bool strict = false) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = strict ? i + 1 : i; j < n; ++j) m(i, j) = rng.between(-range, range);
  return m;
}

inline Mat random_matrix(Rng& rng, std::size_t n, long range) {
  Mat m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = rng.between(-range, range);
  return m;
}

/// Generated instance with a seed-dependent spectrum style.
inline Instance mixed_instance(std::size_t n, std::uint64_t seed) {
  GenConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  cfg.multiplicity = seed % 2 == 0;
  cfg.diag_range = cfg.multiplicity ? 2 : static_cast<long>(n);
  return gen_instance(cfg);
}

// ---------------------------------------------------------------------------
// Dense Gaussian elimination on row lists.

/// Reduced row echelon form in place; returns pivot columns.
inline std::vector<std::size_t> rref(std::vector<Vec>& a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
    std::size_t r = row;
    while (r < a.size() && a[r][c].is_zero()) ++r;
    if (r == a.size()) continue;
    std::swap(a[r], a[row]);
    const Rational inv = a[row][c].inverse();
    for (auto& x : a[row]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == row || a[i][c].is_zero()) continue;
      const Rational f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j) a[i][j] -= f * a[row][j];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

inline Vec flat(const Mat& m) { return {m.entries().begin(), m.entries().end()}; }

inline std::size_t rank_of(const std::vector<Mat>& mats) {
  if (mats.empty()) return 0;
  std::vector<Vec> rows;
  for (const auto& m : mats) rows.push_back(flat(m));
  return rref(rows, rows.front().size()).size();
}

/// Naive fixed point: keep adding brackets of all pairs until the rank stops growing.
inline std::vector<Mat> brute_force_closure(std::vector<Mat> gens) {
  std::vector<Mat> basis;
  for (const auto& g : gens) {
    basis.push_back(g);
    if (rank_of(basis) < basis.size()) basis.pop_back();
  }
  for (bool grew = true; grew;) {
    grew = false;
    const std::size_t size = basis.size();
    for (std::size_t i = 0; i < size; ++i)
      for (std::size_t j = 0; j < size; ++j) {
        basis.push_back(bracket(basis[i], basis[j]));
        if (rank_of(basis) < basis.size())
          basis.pop_back();
        else
          grew = true;
      }
  }
  return basis;
}

inline bool in_span(const std::vector<Mat>& basis, const Mat& m) {
  std::vector<Mat> with = basis;
  with.push_back(m);
  return rank_of(with) == rank_of(basis);
}

/// Kernel basis of the linear map given by its rows.
inline std::vector<Vec> kernel(std::vector<Vec> rows, std::size_t cols) {
  const auto pivots = rref(rows, cols);
  std::vector<Vec> out;
  for (std::size_t f = 0; f < cols; ++f) {
    if (std::find(pivots.begin(), pivots.end(), f) != pivots.end()) continue;
    Vec v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][f];
    out.push_back(std::move(v));
  }
  return out;
}

/// Decomposition of N into ad(S)-eigenmatrices by explicit eigenspaces of ad(S)
/// on the upper-triangular matrices, then solving for N's coordinates.
inline std::map<Rational, Mat> brute_force_decomp(const Mat& s, const Mat& n) {
  const std::size_t dim = s.dim();
  std::vector<std::pair<std::size_t, std::size_t>> coords;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i; j < dim; ++j) coords.emplace_back(i, j);
  const std::size_t t = coords.size();

  // Matrix of ad(S) on the coordinates (column c = image of the c-th unit matrix).
  std::vector<Vec> ad(t, Vec(t));
  for (std::size_t c = 0; c < t; ++c) {
    const Mat img = bracket(s, Mat::unit(dim, coords[c].first, coords[c].second));
    for (std::size_t r = 0; r < t; ++r) ad[r][c] = img(coords[r].first, coords[r].second);
  }

  std::set<Rational> candidates;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) candidates.insert(s(i, i) - s(j, j));

  std::vector<Vec> eigvecs;
  std::vector<Rational> labels;
  for (const auto& lambda : candidates) {
    std::vector<Vec> shifted = ad;
    for (std::size_t k = 0; k < t; ++k) shifted[k][k] -= lambda;
    for (auto& v : kernel(shifted, t)) {
      eigvecs.push_back(std::move(v));
      labels.push_back(lambda);
    }
  }
  if (eigvecs.size() != t) throw std::runtime_error("brute_force_decomp: ad(S) not diagonalizable on t");

  // Solve sum_c x_c eigvec_c = N.
  std::vector<Vec> aug(t, Vec(t + 1));
  for (std::size_t r = 0; r < t; ++r) {
    for (std::size_t c = 0; c < t; ++c) aug[r][c] = eigvecs[c][r];
    aug[r][t] = n(coords[r].first, coords[r].second);
  }
  rref(aug, t);
  std::map<Rational, Mat> parts;
  for (std::size_t c = 0; c < t; ++c) {
    const Rational x = aug[c][t];
    if (x.is_zero()) continue;
    Mat& m = parts.try_emplace(labels[c], Mat(dim)).first->second;
    for (std::size_t r = 0; r < t; ++r) m(coords[r].first, coords[r].second) += x * eigvecs[c][r];
  }
  for (auto it = parts.begin(); it != parts.end();) it = it->second.is_zero() ? parts.erase(it) : std::next(it);
  return parts;
}

inline std::map<Rational, Mat> as_map(const EigSeq& seq) {
  std::map<Rational, Mat> out;
  for (const auto& p : seq) out.emplace(p.eigenvalue, p.matrix);
  return out;
}

/// Semisimple part of an upper-triangular matrix from its generalized eigenspaces.
inline Mat generalized_eigenspace_semisimple(const Mat& a) {
  const std::size_t n = a.dim();
  std::set<Rational> values;
  for (std::size_t i = 0; i < n; ++i) values.insert(a(i, i));
  std::vector<Vec> columns;
  std::vector<Rational> labels;
  for (const auto& lambda : values) {
    Mat shifted = a;
    for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;
    Mat power = Mat::identity(n);
    for (std::size_t k = 0; k < n; ++k) power = power * shifted;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i) rows.emplace_back(power.entries().begin() + i * n, power.entries().begin() + (i + 1) * n);
    for (auto& v : kernel(rows, n)) {
      columns.push_back(std::move(v));
      labels.push_back(lambda);
    }
  }
  Mat b(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < n; ++r) b(r, c) = columns[c][r];
  std::vector<Rational> d(labels.begin(), labels.end());
  return b * Mat::diag(d) * inverse(b);
}

/// Random valid (S, X, mu, (M, lambda)) for exp_shift, built from a generated instance:
/// X and M are ad(S)-components of random strictly upper / upper matrices.
struct ShiftCase {
  Mat s;
  Mat x;
  Rational mu;
  EigPair pair;
};

inline std::optional<ShiftCase> random_shift_case(test::Rng& rng, std::uint64_t seed) {
  const std::size_t n = static_cast<std::size_t>(rng.between(2, 6));
  const Instance inst = mixed_instance(n, seed);
  EigSeq xs;
  for (const auto& p : decomp(inst.s, inst.n))
    if (!p.eigenvalue.is_zero()) xs.push_back(p);
  if (xs.empty()) return std::nullopt;
  const EigPair& x = xs[static_cast<std::size_t>(rng.between(0, static_cast<long>(xs.size()) - 1))];

  // Even seeds draw a strictly upper M, as in the algorithm; odd seeds allow a diagonal band.
  const Mat y = random_upper(rng, n, 3, seed % 2 == 0);
  const EigSeq ys = decomp_unchecked(inst.s, y);
  if (ys.empty()) return std::nullopt;
  const EigPair& m = ys[static_cast<std::size_t>(rng.between(0, static_cast<long>(ys.size()) - 1))];
  return ShiftCase{inst.s, x.matrix, x.eigenvalue, m};
}


}  // namespace jcd::test
