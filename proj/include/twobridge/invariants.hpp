#pragma once

// Marked strongly invertible knots of a 2-bridge knot and their equivariant
// genera.
//
// For K = K(q/p) with expansion [2a_1, 2b_1, ..., 2a_n, 2b_n]:
//   torus (|q| = p-1):     two marked classes (h, short) and (h, long),
//                          both of genus n.
//   generic (q^2 != 1):    (h, short)   = sum |a_i|
//                          (h, long)    = n + #{i : |b_i| > 1}
//                          (h', short)  = sum |b_i|        h' = h_{q'/p}
//                          (h', long)   = n + #{i : |a_i| > 1}
//   palindromic (q^2 == 1): the two h entries as above, and both arcs of the
//                          exceptional inversion have genus n.

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/slope.hpp"

namespace twobridge {

enum class Inversion {
  kQ,       // h_{q/p}
  kQPrime,  // h_{q'/p}
  kPrime,   // exceptional h'_{q/p}, palindromic slopes only
};

/// Short arc (tau, rho) or long arc (tau^c, rho^c) of the fixed circle.
enum class Arc { kShort, kLong };

struct MarkedClass {
  Inversion inversion = Inversion::kQ;
  Arc arc = Arc::kShort;

  friend bool operator==(const MarkedClass&, const MarkedClass&) = default;
  friend auto operator<=>(const MarkedClass&, const MarkedClass&) = default;
};

enum class SymmetryType { kTorus, kGeneric, kPalindromic };

std::string to_string(Inversion inversion);  // "h_{q/p}", "h_{q'/p}", "h'_{q/p}"
std::string to_string(Arc arc);              // "short", "long"
std::string to_string(const MarkedClass& c); // "(h_{q/p},short)"
std::string to_string(SymmetryType type);    // "torus", "generic", "palindromic"

struct Classification {
  SymmetryType symmetry = SymmetryType::kGeneric;
  /// Marked classes in display order: (h,short), (h,long), then the second
  /// inversion's short and long arcs.
  std::vector<MarkedClass> classes;
};

Classification classify_marked_classes(const Slope& s);

int seifert_genus(const Slope& s);

/// Throws kInvalidClass when c is not one of the slope's marked classes.
Int equivariant_genus(const Slope& s, const MarkedClass& c);

struct GenusEntry {
  MarkedClass marked;
  Int genus = 0;

  friend bool operator==(const GenusEntry&, const GenusEntry&) = default;
};

struct Attributes {
  bool torus = false;
  bool fib = false;  // fibered and not torus
  bool sym = false;  // palindromic and not torus

  friend bool operator==(const Attributes&, const Attributes&) = default;
};

/// Attribute words in table order ("torus", "fib", "sym"), omitting unset ones.
std::vector<std::string> attribute_words(const Attributes& attributes);

struct GenusProfile {
  Slope slope;
  Slope dual;
  EvenCF cf;
  int genus = 0;
  SymmetryType symmetry = SymmetryType::kGeneric;
  /// Strong inversions up to equivalence: 1 (torus) or 2.
  int inversion_count = 0;
  /// Strong inversions up to strong equivalence: 4 for palindromic slopes,
  /// otherwise equal to inversion_count.
  int strong_equivalence_class_count = 0;
  Attributes attributes;
  std::vector<GenusEntry> entries;

  /// Equivariant genus for a marked class, or nullopt if the class does not
  /// occur for this slope.
  std::optional<Int> at(const MarkedClass& c) const;

  /// Entry values in display order.
  std::vector<Int> values() const;
};

GenusProfile genus_profile(const Slope& s);

struct GapExample {
  Slope slope;
  EvenCF cf;
  MarkedClass marked;
  int genus = 0;
  Int equivariant = 0;
};

/// A knot and marked class with (genus, equivariant genus) = (g, g_hat):
/// a_1 = g_hat - g + 1, every other a_i and every b_i equal to 1, n = g, class
/// (h_{q/p}, short). Requires 1 <= g <= g_hat (kInvalidOrdering otherwise).
GapExample find_gap_example(int g, Int g_hat);

struct ArcGapExample {
  Slope slope;
  EvenCF cf;
  std::pair<MarkedClass, MarkedClass> arcs;  // (short, long) of h_{q/p}
  Int short_genus = 0;
  Int long_genus = 0;
};

/// A knot whose inversion h_{q/p} has short-arc genus minus long-arc genus
/// equal to d.
///   d > 0: [2(d+1), -2]
///   d = 0: the trefoil [2, 2]
///   d < 0: [2, 4] repeated |d| times
ArcGapExample find_arc_gap_example(Int d);

}  // namespace twobridge
