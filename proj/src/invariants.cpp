#include "twobridge/invariants.hpp"

#include <algorithm>

namespace twobridge {

namespace {

Int sum_abs(const std::vector<Int>& xs) {
  Int total = 0;
  for (Int x : xs) total = checked_add(total, checked_abs(x));
  return total;
}

Int count_above_one(const std::vector<Int>& xs) {
  return std::count_if(xs.begin(), xs.end(), [](Int x) { return x > 1 || x < -1; });
}

// Genus formulas evaluated on an expansion, for any marked class that uses
// them. Torus slopes reach here too; the formulas all collapse to n there.
Int formula_value(const EvenCF& cf, const MarkedClass& c) {
  const Int n = cf.genus();
  const auto a = cf.a_values();
  const auto b = cf.b_values();
  switch (c.inversion) {
    case Inversion::kQ:
      return c.arc == Arc::kShort ? sum_abs(a) : checked_add(n, count_above_one(b));
    case Inversion::kQPrime:
      return c.arc == Arc::kShort ? sum_abs(b) : checked_add(n, count_above_one(a));
    case Inversion::kPrime:
      return n;
  }
  return n;
}

EvenCF gap_expansion(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> entries;
  for (std::size_t i = 0; i < a.size(); ++i) {
    entries.push_back(checked_mul(2, a[i]));
    entries.push_back(checked_mul(2, b[i]));
  }
  return EvenCF::from_entries(std::move(entries));
}

}  // namespace

std::string to_string(Inversion inversion) {
  switch (inversion) {
    case Inversion::kQ: return "h_{q/p}";
    case Inversion::kQPrime: return "h_{q'/p}";
    case Inversion::kPrime: return "h'_{q/p}";
  }
  return "?";
}

std::string to_string(Arc arc) { return arc == Arc::kShort ? "short" : "long"; }

std::string to_string(const MarkedClass& c) {
  return "(" + to_string(c.inversion) + "," + to_string(c.arc) + ")";
}

std::string to_string(SymmetryType type) {
  switch (type) {
    case SymmetryType::kTorus: return "torus";
    case SymmetryType::kGeneric: return "generic";
    case SymmetryType::kPalindromic: return "palindromic";
  }
  return "?";
}

Classification classify_marked_classes(const Slope& s) {
  const SlopePredicates pred = slope_predicates(s);
  Classification out;
  out.classes = {{Inversion::kQ, Arc::kShort}, {Inversion::kQ, Arc::kLong}};
  if (pred.is_torus) {
    out.symmetry = SymmetryType::kTorus;
    return out;
  }
  const Inversion second = pred.is_palindromic ? Inversion::kPrime : Inversion::kQPrime;
  out.symmetry = pred.is_palindromic ? SymmetryType::kPalindromic : SymmetryType::kGeneric;
  out.classes.push_back({second, Arc::kShort});
  out.classes.push_back({second, Arc::kLong});
  return out;
}

int seifert_genus(const Slope& s) { return expand_even_cf(s).genus(); }

Int equivariant_genus(const Slope& s, const MarkedClass& c) {
  const Classification cls = classify_marked_classes(s);
  if (std::find(cls.classes.begin(), cls.classes.end(), c) == cls.classes.end())
    fail(ErrorCode::kInvalidClass, to_string(c) + " is not a marked class of " +
                                       s.to_string() + " (" + to_string(cls.symmetry) + ")");
  return formula_value(expand_even_cf(s), c);
}

std::vector<std::string> attribute_words(const Attributes& attributes) {
  std::vector<std::string> out;
  if (attributes.torus) out.emplace_back("torus");
  if (attributes.fib) out.emplace_back("fib");
  if (attributes.sym) out.emplace_back("sym");
  return out;
}

std::optional<Int> GenusProfile::at(const MarkedClass& c) const {
  for (const auto& e : entries)
    if (e.marked == c) return e.genus;
  return std::nullopt;
}

std::vector<Int> GenusProfile::values() const {
  std::vector<Int> out;
  for (const auto& e : entries) out.push_back(e.genus);
  return out;
}

GenusProfile genus_profile(const Slope& s) {
  const SlopePredicates pred = slope_predicates(s);
  const Classification cls = classify_marked_classes(s);
  GenusProfile out{.slope = s, .dual = inverse_slope(s), .cf = expand_even_cf(s), .attributes = {}, .entries = {}};
  out.genus = out.cf.genus();
  out.symmetry = cls.symmetry;
  out.inversion_count = cls.symmetry == SymmetryType::kTorus ? 1 : 2;
  out.strong_equivalence_class_count =
      cls.symmetry == SymmetryType::kPalindromic ? 4 : out.inversion_count;
  out.attributes = {.torus = pred.is_torus,
                    .fib = pred.is_fibered && !pred.is_torus,
                    .sym = pred.is_palindromic && !pred.is_torus};
  for (const auto& c : cls.classes) out.entries.push_back({c, formula_value(out.cf, c)});
  return out;
}

GapExample find_gap_example(int g, Int g_hat) {
  if (g < 1 || g_hat < g)
    fail(ErrorCode::kInvalidOrdering, "need 1 <= g <= g_hat, got g=" + std::to_string(g) +
                                          " g_hat=" + std::to_string(g_hat));
  std::vector<Int> a(static_cast<std::size_t>(g), 1);
  std::vector<Int> b(static_cast<std::size_t>(g), 1);
  a[0] = checked_add(checked_sub(g_hat, g), 1);
  EvenCF cf = gap_expansion(a, b);
  const Slope slope = Slope::from_fraction(evaluate_cf(cf.entries()));
  const MarkedClass marked{Inversion::kQ, Arc::kShort};

  GapExample out{.slope = slope, .cf = cf, .marked = marked};
  out.genus = seifert_genus(slope);
  out.equivariant = equivariant_genus(slope, marked);
  check_invariant(expand_even_cf(slope) == cf, "gap example does not re-expand to " +
                                                   cf.to_string());
  check_invariant(out.genus == g && out.equivariant == g_hat,
                  "gap example " + slope.to_string() + " does not realize the requested pair");
  return out;
}

ArcGapExample find_arc_gap_example(Int d) {
  std::vector<Int> a, b;
  if (d > 0) {
    a = {checked_add(d, 1)};
    b = {-1};
  } else if (d == 0) {
    a = {1};
    b = {1};
  } else {
    const Int n = checked_neg(d);
    a.assign(static_cast<std::size_t>(n), 1);
    b.assign(static_cast<std::size_t>(n), 2);
  }
  EvenCF cf = gap_expansion(a, b);
  const Slope slope = Slope::from_fraction(evaluate_cf(cf.entries()));
  const MarkedClass short_arc{Inversion::kQ, Arc::kShort};
  const MarkedClass long_arc{Inversion::kQ, Arc::kLong};

  ArcGapExample out{.slope = slope, .cf = cf, .arcs = {short_arc, long_arc}};
  out.short_genus = equivariant_genus(slope, short_arc);
  out.long_genus = equivariant_genus(slope, long_arc);
  check_invariant(expand_even_cf(slope) == cf, "arc gap example does not re-expand to " +
                                                   cf.to_string());
  check_invariant(checked_sub(out.short_genus, out.long_genus) == d,
                  "arc gap example " + slope.to_string() + " does not realize d=" +
                      std::to_string(d));
  return out;
}

}  // namespace twobridge
