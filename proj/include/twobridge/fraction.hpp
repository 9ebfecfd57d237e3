#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "twobridge/checked.hpp"

namespace twobridge {

/// Exact rational number, always stored reduced with a positive denominator.
class Fraction {
 public:
  constexpr Fraction() = default;
  Fraction(Int value) : num_(value), den_(1) {}  // NOLINT(google-explicit-constructor)
  Fraction(Int num, Int den);

  Int num() const { return num_; }
  Int den() const { return den_; }
  bool is_zero() const { return num_ == 0; }

  Fraction operator-() const { return Fraction(checked_neg(num_), den_); }
  friend Fraction operator+(const Fraction& x, const Fraction& y);
  friend Fraction operator-(const Fraction& x, const Fraction& y);
  friend Fraction operator*(const Fraction& x, const Fraction& y);
  /// Throws kDivisionByZero when y is zero.
  friend Fraction operator/(const Fraction& x, const Fraction& y);

  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend std::strong_ordering operator<=>(const Fraction& x, const Fraction& y);

  /// "num/den", or just "num" when the denominator is 1.
  std::string to_string() const;

 private:
  Int num_ = 0;
  Int den_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, const Fraction& f) {
  return os << f.to_string();
}

}  // namespace twobridge
