#pragma once

// Kakimizu complexes of 2-bridge knots.
//
// Let T be the path with tree vertices 1..2n. An orientation of T is stored
// as a sign vector eps in {-1,+1}^{2n-1}: coordinate j (edge between tree
// vertices j and j+1) is +1 iff the edge agrees with rho_+, the alternating
// orientation in which odd tree vertices are sinks. A sink move at tree
// vertex i reverses the edges at i; the coordinate change it causes is the
// move vector v_i, and sum_i v_i = 0.
//
// K(n) is the triangulation of the cube [-1,1]^{2n-1} whose top simplices
// are the vertex sets of cycles of 2n sink moves using every tree vertex
// once. For a slope with expansion c_1..c_{2n}, the Hopf set is
// H = {i : |c_i| = 2} and the Kakimizu complex is the quotient K(n;H) of
// K(n) by W = span{v_i : i in H}.
//
// Two constructions of the quotient are provided:
//   build_quotient_complex  enumerates K(n) and groups corners into cosets
//                           of W by exact rational reduction (n bounded);
//   build_reduced_complex   works directly in coordinates of R^{2n-1}/W and
//                           builds the induced periodic triangulation there
//                           (bounded by the number of non-Hopf entries).
// Both produce the same QuotientComplex value, so they can be compared.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "twobridge/lattice.hpp"
#include "twobridge/slope.hpp"

namespace twobridge::kakimizu {

/// Default bound on n for enumerating K(n) (2^{2n-1} corners, (2n-1)! cycles).
inline constexpr int kDefaultMaxN = 5;
/// Default bound on the number of non-Hopf entries for the reduced route.
inline constexpr int kDefaultMaxNonHopf = 8;
/// The vector-criterion route of the oracle check is (2n)! * 2^{2n-1}.
inline constexpr int kDefaultOracleMaxN = 4;

class SignVector {
 public:
  explicit SignVector(std::vector<int> coords);

  static SignVector constant(int dimension, int sign);
  static SignVector rho_plus(int n) { return constant(2 * n - 1, +1); }
  static SignVector rho_minus(int n) { return constant(2 * n - 1, -1); }

  /// Corner number in lexicographic order (-1 < +1), for dimension <= 30.
  static SignVector from_index(int dimension, std::uint32_t index);
  std::uint32_t index() const;

  int dimension() const { return static_cast<int>(coords_.size()); }
  int tree_vertex_count() const { return dimension() + 1; }
  int operator[](std::size_t j) const { return coords_[j]; }
  std::span<const int> coords() const { return coords_; }

  SignVector negated() const;
  SignVector reversed() const;
  IntVector to_vector() const;

  /// "(+,-,-)"
  std::string to_string() const;

  friend bool operator==(const SignVector&, const SignVector&) = default;
  friend auto operator<=>(const SignVector&, const SignVector&) = default;

 private:
  std::vector<int> coords_;
};

/// Tree vertices (1-based) that are sinks of the orientation.
std::vector<int> sinks(const SignVector& rho);

/// Reverses the edges at tree vertex i. Throws kNotSink unless i is a sink.
SignVector apply_sink_move(const SignVector& rho, int i);

/// Move vector v_i, derived from apply_sink_move at an orientation where i is
/// a sink.
IntVector move_vector(int n, int i);
std::vector<IntVector> move_vectors(int n);

struct HopfSublattice {
  int n = 0;
  std::vector<int> indices;         // H, 1-based, increasing
  std::vector<IntVector> generators; // v_i for i in H

  bool is_full() const { return static_cast<int>(indices.size()) == 2 * n; }
  bool contains(int i) const;
  /// i in H iff 2n+1-i in H.
  bool is_symmetric() const;
  /// H contains every odd index or every even index.
  bool covers_a_parity_class() const;
  /// Rank of W over Q.
  int rank() const;
  RationalSubspace span() const;
};

HopfSublattice hopf_set(const EvenCF& cf);

/// Cycles of sink moves, stored compactly: cycle k visits the corners
/// states[k*2n .. k*2n+2n) and performs moves[k*2n ..) (tree vertices) in
/// order, returning to its first state. Each cycle is listed once, rotated to
/// start at its smallest corner index.
struct CycleTable {
  int n = 0;
  std::vector<std::uint32_t> states;
  std::vector<std::uint8_t> moves;

  std::size_t size() const { return n == 0 ? 0 : states.size() / (2 * n); }
  std::span<const std::uint32_t> cycle_states(std::size_t k) const {
    return {states.data() + k * 2 * n, static_cast<std::size_t>(2 * n)};
  }
  std::span<const std::uint8_t> cycle_moves(std::size_t k) const {
    return {moves.data() + k * 2 * n, static_cast<std::size_t>(2 * n)};
  }
};

/// Throws kBoundExceeded when n > max_n. Results are cached per n.
std::shared_ptr<const CycleTable> enumerate_cycles(int n, int max_n = kDefaultMaxN);

using Simplex = std::vector<int>;  // sorted vertex indices

class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  /// Keeps the maximal members of the generating simplices as facets.
  SimplicialComplex(int vertex_count, std::vector<Simplex> generators);

  int vertex_count() const { return vertex_count_; }
  const std::vector<Simplex>& facets() const { return facets_; }
  bool is_facet(const Simplex& s) const;
  /// True when s is a face of some facet.
  bool contains(const Simplex& s) const;
  int dimension() const;

  /// Number of faces of each dimension 0..dim.
  std::vector<std::size_t> f_vector() const;
  Int euler_characteristic() const;

  /// Vertex pairs spanning an edge, sorted.
  std::vector<std::pair<int, int>> edges() const;

 private:
  int vertex_count_ = 0;
  std::vector<Simplex> facets_;  // sorted
};

/// K(n): vertices are all corners in lexicographic order.
struct FullComplex {
  int n = 0;
  SimplicialComplex complex;
};

FullComplex build_full_complex(int n, int max_n = kDefaultMaxN);

/// sum over top simplices of |det(eps_k - eps_0)|, i.e. (2n-1)! times the
/// total volume. Equals 2^{2n-1} (2n-1)! for a triangulation of the cube.
Int scaled_volume(const FullComplex& full);

struct QuotientComplex {
  int n = 0;
  HopfSublattice hopf;
  /// Lexicographically smallest sign vector of each coset, sorted.
  std::vector<SignVector> vertices;
  SimplicialComplex complex;
  /// Vertex index of the coset containing a sign vector.
  std::function<int(const SignVector&)> locate;

  int dimension() const { return complex.dimension(); }
  Int euler_characteristic() const { return complex.euler_characteristic(); }
};

/// Direct route. Throws kBoundExceeded when the genus exceeds max_n.
QuotientComplex build_quotient_complex(const Slope& s, int max_n = kDefaultMaxN);

/// Reduced route. Throws kBoundExceeded when more than max_non_hopf
/// expansion entries have |c_i| > 2.
QuotientComplex build_reduced_complex(const Slope& s, int max_non_hopf = kDefaultMaxNonHopf);

/// Dimension predicted by the Hopf set: 2n-1-#H, or 0 when H is everything.
int expected_dimension(const HopfSublattice& hopf);

struct HInvolutionReport {
  std::vector<int> vertex_action;
  int plus_vertex = 0;   // coset of rho_+
  int minus_vertex = 0;  // coset of rho_-
  std::optional<int> fixed_vertex;
  std::optional<std::pair<int, int>> inverted_edge;
  bool hopf_covers_parity_class = false;
  std::size_t invariant_simplex_count = 0;
};

/// Action eps -> -eps. Asserts (kInvariantViolation) that it is a simplicial
/// involution with exactly one invariant simplex, which is the fixed vertex
/// [rho_+] = [rho_-] exactly when H covers a parity class, and otherwise the
/// edge {[rho_+], [rho_-]}.
HInvolutionReport involution_h_report(const QuotientComplex& qc);

struct HPrimeInvolutionReport {
  std::vector<int> vertex_action;
  std::vector<int> fixed_vertices;
  int expected_dimension = 0;       // n - #H/2
  int rank_dimension = 0;           // dim (W + Fix)/W, by exact rank
  int combinatorial_dimension = 0;  // max (#orbits - 1) over invariant simplices
  bool commutes_with_h = false;
};

/// Action by coordinate reversal. Requires a palindromic slope
/// (kNotPalindromic) and asserts the dimension identities.
HPrimeInvolutionReport involution_hprime_report(const Slope& s, const QuotientComplex& qc);

struct OracleReport {
  int n = 0;
  bool match = false;
  std::size_t cycle_simplices = 0;
  std::size_t vector_simplices = 0;
  std::optional<Simplex> first_difference;
};

/// Builds K(n) from sink-move cycles and again from the cyclic move-vector
/// criterion and compares the simplex sets.
OracleReport oracle_cross_check(int n, int max_n = kDefaultOracleMaxN);

/// JSON export: vertices (canonical sign vectors), facets, dim, chi, and the
/// involution reports (h' only when given).
std::string export_json(const Slope& s, const QuotientComplex& qc, const HInvolutionReport& h,
                        const std::optional<HPrimeInvolutionReport>& hprime);

/// Graphviz description of the 1-skeleton.
std::string export_graph(const Slope& s, const QuotientComplex& qc);

}  // namespace twobridge::kakimizu
