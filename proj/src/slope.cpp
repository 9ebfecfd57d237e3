#include "twobridge/slope.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace twobridge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Parses an optionally signed decimal integer that spans the whole view.
bool parse_int(std::string_view s, Int& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  if (ec == std::errc::result_out_of_range && ptr == s.data() + s.size())
    fail(ErrorCode::kOverflow, "integer " + std::string(s) + " does not fit in 64 bits");
  return ec == std::errc() && ptr == s.data() + s.size();
}

// The even integer nearest to num/den. Callers guarantee num and den have
// opposite parity, so num/den is never an odd integer and the nearest even
// integer is unique.
Int nearest_even(Int num, Int den) {
  if (den < 0) {
    num = checked_neg(num);
    den = checked_neg(den);
  }
  const Int twice_den = checked_mul(2, den);
  const Int t = floor_div(num, twice_den);
  const Int lower = checked_mul(2, t);
  // Distances scaled by den: num - lower*den and (lower+2)*den - num.
  const Int below = checked_sub(num, checked_mul(lower, den));
  const Int above = checked_sub(twice_den, below);
  return below < above ? lower : checked_add(lower, 2);
}

}  // namespace

Slope Slope::canonical(Int p, Int q) {
  if (p % 2 == 0)
    fail(ErrorCode::kEvenDenominator, "denominator " + std::to_string(p) + " is even");
  if (p < 3)
    fail(ErrorCode::kDenominatorTooSmall,
         "denominator " + std::to_string(p) + " is smaller than 3");
  const Int r = mod_positive(q, p);
  if (r == 0)
    fail(ErrorCode::kZeroResidue,
         "numerator " + std::to_string(q) + " is divisible by " + std::to_string(p));
  if (gcd(r, p) != 1)
    fail(ErrorCode::kNotCoprime,
         std::to_string(q) + " and " + std::to_string(p) + " are not coprime");
  return Slope(p, r % 2 == 0 ? r : r - p);
}

Slope Slope::from_fraction(const Fraction& value) {
  return canonical(value.den(), value.num());
}

std::string Slope::to_string() const {
  return std::to_string(q_) + "/" + std::to_string(p_);
}

EvenCF EvenCF::from_entries(std::vector<Int> entries) {
  if (entries.empty()) fail(ErrorCode::kOddLength, "empty continued fraction");
  for (Int c : entries) {
    if (c == 0) fail(ErrorCode::kZeroEntry, "continued fraction entry is zero");
    if (c % 2 != 0)
      fail(ErrorCode::kOddEntry, "continued fraction entry " + std::to_string(c) + " is odd");
  }
  if (entries.size() % 2 != 0)
    fail(ErrorCode::kOddLength, "continued fraction has odd length " +
                                    std::to_string(entries.size()));
  return EvenCF(std::move(entries));
}

std::vector<Int> EvenCF::a_values() const {
  std::vector<Int> out;
  for (std::size_t j = 0; j < entries_.size(); j += 2) out.push_back(entries_[j] / 2);
  return out;
}

std::vector<Int> EvenCF::b_values() const {
  std::vector<Int> out;
  for (std::size_t j = 1; j < entries_.size(); j += 2) out.push_back(entries_[j] / 2);
  return out;
}

EvenCF EvenCF::reversed() const {
  return EvenCF(std::vector<Int>(entries_.rbegin(), entries_.rend()));
}

EvenCF EvenCF::negated() const {
  std::vector<Int> out(entries_);
  for (Int& c : out) c = checked_neg(c);
  return EvenCF(std::move(out));
}

std::string EvenCF::to_string() const {
  std::string out = "[";
  for (std::size_t j = 0; j < entries_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(entries_[j]);
  }
  return out + "]";
}

EvenCF expand_even_cf(const Slope& s) {
  // Step: with q_k/p_k of opposite parity and |q_k| < |p_k|, pick the even c
  // nearest to p_k/q_k, then q_{k+1} = c q_k - p_k and p_{k+1} = q_k.
  // |q_{k+1}| < |q_k| strictly, so the loop terminates.
  Int num = s.q();
  Int den = s.p();
  std::vector<Int> entries;
  while (num != 0) {
    const Int c = nearest_even(den, num);
    const Int next = checked_sub(checked_mul(c, num), den);
    check_invariant(checked_abs(next) < checked_abs(num),
                    "expansion of " + s.to_string() + " failed to shrink");
    entries.push_back(c);
    den = num;
    num = next;
  }
  check_invariant(entries.size() % 2 == 0 && !entries.empty(),
                  "expansion of " + s.to_string() + " has odd length");
  EvenCF cf = EvenCF::from_entries(std::move(entries));
  check_invariant(evaluate_cf(cf.entries()) == s.value(),
                  "expansion of " + s.to_string() + " does not evaluate back");
  return cf;
}

Fraction evaluate_cf(std::span<const Int> entries) {
  if (entries.empty()) fail(ErrorCode::kOddLength, "empty continued fraction");
  for (Int c : entries) {
    if (c == 0) fail(ErrorCode::kZeroEntry, "continued fraction entry is zero");
    if (c % 2 != 0)
      fail(ErrorCode::kOddEntry, "continued fraction entry " + std::to_string(c) + " is odd");
  }
  // Evaluate the tail first: t = c_k - 1/t.
  Fraction tail(entries.back());
  for (auto it = entries.rbegin() + 1; it != entries.rend(); ++it) {
    if (tail.is_zero()) fail(ErrorCode::kDivisionByZero, "malformed expansion");
    tail = Fraction(*it) - Fraction(1) / tail;
  }
  if (tail.is_zero()) fail(ErrorCode::kDivisionByZero, "malformed expansion");
  return Fraction(1) / tail;
}

Slope inverse_slope(const Slope& s) {
  return Slope::canonical(s.p(), mod_inverse(s.q(), s.p()));
}

SlopePredicates slope_predicates(const Slope& s) {
  SlopePredicates out;
  out.is_torus = checked_abs(s.q()) == s.p() - 1;
  out.is_palindromic = mod_positive(checked_mul(s.q(), s.q()), s.p()) == 1;
  const EvenCF cf = expand_even_cf(s);
  out.is_fibered = std::all_of(cf.entries().begin(), cf.entries().end(),
                               [](Int c) { return c == 2 || c == -2; });
  return out;
}

Slope parse_fraction(std::string_view text) {
  const std::string_view body = trim(text);
  const auto slash = body.find('/');
  Int q = 0, p = 0;
  if (slash == std::string_view::npos || !parse_int(body.substr(0, slash), q) ||
      !parse_int(body.substr(slash + 1), p) || body.substr(slash + 1).find_first_of("+-") !=
                                                   std::string_view::npos)
    fail(ErrorCode::kMalformedText, "malformed fraction '" + std::string(text) + "'");
  return Slope::canonical(p, q);
}

EvenCF parse_cf(std::string_view text) {
  std::string_view body = trim(text);
  if (body.size() < 2 || body.front() != '[' || body.back() != ']')
    fail(ErrorCode::kMalformedText, "malformed expansion '" + std::string(text) + "'");
  body = body.substr(1, body.size() - 2);
  std::vector<Int> entries;
  while (true) {
    const auto comma = body.find(',');
    Int value = 0;
    if (!parse_int(body.substr(0, comma), value))
      fail(ErrorCode::kMalformedText, "malformed expansion '" + std::string(text) + "'");
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    body.remove_prefix(comma + 1);
  }
  return EvenCF::from_entries(std::move(entries));
}

std::vector<Slope> all_slopes(Int p_max) {
  std::vector<Slope> out;
  for (Int p = 3; p <= p_max; p += 2) {
    std::vector<Slope> row;
    for (Int r = 1; r < p; ++r)
      if (gcd(r, p) == 1) row.push_back(Slope::canonical(p, r));
    std::sort(row.begin(), row.end());
    out.insert(out.end(), row.begin(), row.end());
  }
  return out;
}

}  // namespace twobridge
