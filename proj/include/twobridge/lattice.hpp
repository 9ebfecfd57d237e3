#pragma once

// Small exact linear algebra over the rationals for integer vectors.

#include <span>
#include <vector>

#include "twobridge/checked.hpp"
#include "twobridge/fraction.hpp"

namespace twobridge {

using IntVector = std::vector<Int>;

/// Rank over Q of a list of equal-length integer vectors.
int rank(std::vector<IntVector> rows);

/// Determinant of a square integer matrix (fraction-free Bareiss).
Int determinant(std::vector<IntVector> matrix);

/// A linear subspace of Q^d spanned by integer generators, kept in reduced
/// row echelon form so that every coset x + W has a unique normal form.
class RationalSubspace {
 public:
  RationalSubspace(std::size_t ambient_dimension, std::span<const IntVector> generators);

  std::size_t ambient_dimension() const { return ambient_dimension_; }
  int dimension() const { return static_cast<int>(basis_.size()); }

  /// x minus its component along the pivot columns: equal for x and y iff
  /// x - y lies in the subspace.
  std::vector<Fraction> normal_form(std::span<const Int> x) const;

  bool contains(std::span<const Int> x) const;

 private:
  std::size_t ambient_dimension_;
  std::vector<std::vector<Fraction>> basis_;  // RREF rows
  std::vector<std::size_t> pivots_;
};

}  // namespace twobridge
