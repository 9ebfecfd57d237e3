#pragma once

// Exact arithmetic on 2-bridge knot slopes q/p.
//
// A slope is kept in canonical form: p odd and >= 3, q even, 0 < |q| < p,
// gcd(p, q) = 1. Every such slope has a unique continued fraction
//
//   q/p = 1/(c_1 - 1/(c_2 - ... - 1/c_{2n}))
//
// with all c_j nonzero and even and an even number of terms. The knot
// K(q/p) has Seifert genus n. Writing c_{2i-1} = 2 a_i and c_{2i} = 2 b_i
// gives the a/b half-entries used by the genus formulas.

#include <compare>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/checked.hpp"
#include "twobridge/fraction.hpp"

namespace twobridge {

class Slope {
 public:
  /// Reduces q modulo p to the even representative in (-p, p).
  /// Validation failures: kEvenDenominator, kDenominatorTooSmall,
  /// kZeroResidue, kNotCoprime.
  static Slope canonical(Int p, Int q);

  /// Canonical slope of a reduced fraction q/p (denominator must be odd).
  static Slope from_fraction(const Fraction& value);

  Int p() const { return p_; }
  Int q() const { return q_; }
  Fraction value() const { return Fraction(q_, p_); }

  /// The mirror slope -q/p.
  Slope mirror() const { return Slope(p_, -q_); }

  /// "q/p", e.g. "-4/9".
  std::string to_string() const;

  friend bool operator==(const Slope&, const Slope&) = default;
  friend auto operator<=>(const Slope&, const Slope&) = default;

 private:
  Slope(Int p, Int q) : p_(p), q_(q) {}

  Int p_;
  Int q_;
};

inline std::ostream& operator<<(std::ostream& os, const Slope& s) {
  return os << s.to_string();
}

inline Slope canonicalize_slope(Int p, Int q) { return Slope::canonical(p, q); }

/// The all-even, even-length continued fraction of a slope.
class EvenCF {
 public:
  /// Validates shape: non-empty, even length, every entry nonzero and even.
  static EvenCF from_entries(std::vector<Int> entries);

  std::span<const Int> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  Int operator[](std::size_t j) const { return entries_[j]; }

  /// Half-length n, which equals the Seifert genus.
  int genus() const { return static_cast<int>(entries_.size() / 2); }

  /// a_1..a_n = c_1/2, c_3/2, ...
  std::vector<Int> a_values() const;
  /// b_1..b_n = c_2/2, c_4/2, ...
  std::vector<Int> b_values() const;

  EvenCF reversed() const;
  EvenCF negated() const;

  /// Bracketed comma list, e.g. "[2,-4,-2,-2,-2,-2]".
  std::string to_string() const;

  friend bool operator==(const EvenCF&, const EvenCF&) = default;

 private:
  explicit EvenCF(std::vector<Int> entries) : entries_(std::move(entries)) {}

  std::vector<Int> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const EvenCF& cf) {
  return os << cf.to_string();
}

/// Nearest-even-integer expansion. Throws kInvariantViolation if the
/// result is not a valid even expansion of s (never expected).
EvenCF expand_even_cf(const Slope& s);

/// Exact value of 1/(c_1 - 1/(c_2 - ... - 1/c_k)). Entries must be nonzero
/// even integers (kZeroEntry / kOddEntry); a vanishing intermediate
/// denominator raises kDivisionByZero.
Fraction evaluate_cf(std::span<const Int> entries);

/// The dual slope q'/p with q q' == 1 (mod p), q' even.
Slope inverse_slope(const Slope& s);

struct SlopePredicates {
  bool is_torus = false;
  bool is_palindromic = false;
  bool is_fibered = false;

  friend bool operator==(const SlopePredicates&, const SlopePredicates&) = default;
};

SlopePredicates slope_predicates(const Slope& s);

/// Parses "q/p" with an optional leading minus on q and canonicalizes it.
/// Odd numerators are normalized by subtracting p.
Slope parse_fraction(std::string_view text);

/// Parses "[c1,c2,...]" (whitespace tolerated) into an EvenCF.
EvenCF parse_cf(std::string_view text);

/// Every canonical slope with odd denominator 3 <= p <= p_max, ordered by
/// (p, q).
std::vector<Slope> all_slopes(Int p_max);

}  // namespace twobridge
