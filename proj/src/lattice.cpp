#include "twobridge/lattice.hpp"

#include <algorithm>
#include <utility>

namespace twobridge {

namespace {

void divide_by_content(IntVector& row) {
  Int g = 0;
  for (Int x : row) g = gcd(g, x);
  if (g > 1)
    for (Int& x : row) x /= g;
}

}  // namespace

int rank(std::vector<IntVector> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    check_invariant(r.size() == cols, "rank: ragged matrix");
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    auto it = std::find_if(rows.begin() + static_cast<std::ptrdiff_t>(pivot_row), rows.end(),
                           [col](const IntVector& r) { return r[col] != 0; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + static_cast<std::ptrdiff_t>(pivot_row), it);
    const IntVector& pivot = rows[pivot_row];
    for (std::size_t r = pivot_row + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Int factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c)
        rows[r][c] = checked_sub(checked_mul(rows[r][c], pivot[col]),
                                 checked_mul(pivot[c], factor));
      divide_by_content(rows[r]);
    }
    ++pivot_row;
  }
  return static_cast<int>(pivot_row);
}

Int determinant(std::vector<IntVector> m) {
  const std::size_t size = m.size();
  for (const auto& r : m)
    check_invariant(r.size() == size, "determinant: matrix is not square");
  if (size == 0) return 1;
  Int sign = 1;
  Int previous = 1;
  for (std::size_t k = 0; k + 1 < size; ++k) {
    if (m[k][k] == 0) {
      std::size_t swap = k + 1;
      while (swap < size && m[swap][k] == 0) ++swap;
      if (swap == size) return 0;
      std::swap(m[k], m[swap]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < size; ++i) {
      for (std::size_t j = k + 1; j < size; ++j) {
        // Bareiss step; the division is exact.
        m[i][j] = checked_sub(checked_mul(m[i][j], m[k][k]), checked_mul(m[i][k], m[k][j])) /
                  previous;
      }
    }
    previous = m[k][k];
  }
  return checked_mul(sign, m[size - 1][size - 1]);
}

RationalSubspace::RationalSubspace(std::size_t ambient_dimension,
                                   std::span<const IntVector> generators)
    : ambient_dimension_(ambient_dimension) {
  std::vector<std::vector<Fraction>> rows;
  for (const auto& g : generators) {
    check_invariant(g.size() == ambient_dimension, "subspace generator has wrong length");
    rows.emplace_back(g.begin(), g.end());
  }
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < ambient_dimension && pivot_row < rows.size(); ++col) {
    std::size_t found = pivot_row;
    while (found < rows.size() && rows[found][col].is_zero()) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    const Fraction scale = rows[pivot_row][col];
    for (auto& x : rows[pivot_row]) x = x / scale;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || rows[r][col].is_zero()) continue;
      const Fraction factor = rows[r][col];
      for (std::size_t c = 0; c < ambient_dimension; ++c)
        rows[r][c] = rows[r][c] - factor * rows[pivot_row][c];
    }
    pivots_.push_back(col);
    ++pivot_row;
  }
  rows.resize(pivot_row);
  basis_ = std::move(rows);
}

std::vector<Fraction> RationalSubspace::normal_form(std::span<const Int> x) const {
  check_invariant(x.size() == ambient_dimension_, "normal_form: vector has wrong length");
  std::vector<Fraction> out(x.begin(), x.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) {
    const Fraction factor = out[pivots_[k]];
    if (factor.is_zero()) continue;
    for (std::size_t c = 0; c < ambient_dimension_; ++c)
      out[c] = out[c] - factor * basis_[k][c];
  }
  return out;
}

bool RationalSubspace::contains(std::span<const Int> x) const {
  const auto nf = normal_form(x);
  return std::all_of(nf.begin(), nf.end(), [](const Fraction& f) { return f.is_zero(); });
}

}  // namespace twobridge
