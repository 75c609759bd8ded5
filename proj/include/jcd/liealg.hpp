#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "jcd/matrix.hpp"

namespace jcd {

/// Linear span of n x n matrices, stored as the reduced row echelon form of
/// their flattened (row-major) coordinate vectors. The basis is canonical, so
/// equal subspaces compare equal.
class MatSubspace {
 public:
  explicit MatSubspace(std::size_t n) : n_(n) {}

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }

  /// Adds m to the span. Returns true when the dimension grew.
  bool insert(const Mat& m);
  bool contains(const Mat& m) const;
  /// Basis matrices in echelon order.
  std::vector<Mat> basis() const;

  friend bool operator==(const MatSubspace& a, const MatSubspace& b) {
    return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  std::vector<Rational> reduce(std::vector<Rational> v) const;

  std::size_t n_;
  std::vector<std::vector<Rational>> rows_;  // sorted by pivot
  std::vector<std::size_t> pivots_;
};

MatSubspace span(std::span<const Mat> mats, std::size_t n);
MatSubspace span(std::span<const Mat> mats);

/// contains() with a dimension check (StructuralError on mismatch).
bool contains(const MatSubspace& v, const Mat& m);

/// Smallest bracket-closed subspace containing gens.
MatSubspace lie_closure(std::span<const Mat> gens, std::size_t n);
MatSubspace lie_closure(std::span<const Mat> gens);

bool is_bracket_closed(const MatSubspace& v);

/// [V, V] as a subspace.
MatSubspace derived_algebra(const MatSubspace& v);

/// V, [V,V], ... until it reaches zero or stops shrinking. V must be
/// bracket-closed (PreconditionError otherwise).
std::vector<MatSubspace> derived_series(const MatSubspace& v);
bool is_solvable(const MatSubspace& v);

/// Block-diagonal m (+) m (+) ... with `copies` blocks.
Mat direct_sum_rep(const Mat& m, std::size_t copies);

/// Upper triangular n x n matrices as a subspace.
MatSubspace upper_triangular_algebra(std::size_t n);

struct Triangularization {
  Mat p;                       ///< invertible change of basis
  std::vector<Mat> conjugated; ///< p^-1 g p for each generator, upper triangular
};

/// Simultaneous triangularization of a solvable algebra (Lie's theorem),
/// restricted to spectra that split over the rationals.
///
/// Throws PreconditionError if lie_closure(gens) is not solvable and
/// UnsupportedField when a needed common eigenvalue is irrational.
Triangularization triangularize(std::span<const Mat> gens);

}  // namespace jcd
