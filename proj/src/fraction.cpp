#include "twobridge/fraction.hpp"

namespace twobridge {

Fraction::Fraction(Int num, Int den) {
  if (den == 0) fail(ErrorCode::kDivisionByZero, "fraction with zero denominator");
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  Int g = gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction operator+(const Fraction& x, const Fraction& y) {
  Int g = gcd(x.den_, y.den_);
  Int yd = y.den_ / g;
  return Fraction(checked_add(checked_mul(x.num_, yd), checked_mul(y.num_, x.den_ / g)),
                  checked_mul(x.den_, yd));
}

Fraction operator-(const Fraction& x, const Fraction& y) { return x + (-y); }

Fraction operator*(const Fraction& x, const Fraction& y) {
  // Cross-cancel first to keep intermediates small.
  Int g1 = gcd(x.num_, y.den_);
  Int g2 = gcd(y.num_, x.den_);
  if (g1 == 0) g1 = 1;
  if (g2 == 0) g2 = 1;
  return Fraction(checked_mul(x.num_ / g1, y.num_ / g2),
                  checked_mul(x.den_ / g2, y.den_ / g1));
}

Fraction operator/(const Fraction& x, const Fraction& y) {
  if (y.is_zero()) fail(ErrorCode::kDivisionByZero, "division by zero");
  return x * Fraction(y.den_, y.num_);
}

std::strong_ordering operator<=>(const Fraction& x, const Fraction& y) {
  return checked_mul(x.num_, y.den_) <=> checked_mul(y.num_, x.den_);
}

std::string Fraction::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

}  // namespace twobridge
