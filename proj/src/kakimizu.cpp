#include "twobridge/kakimizu.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>
#include <numeric>
#include <unordered_set>

namespace twobridge::kakimizu {

namespace {

// Sign that both coordinates at tree vertex i carry when i is a sink.
int sink_sign(int i) { return i % 2 == 1 ? +1 : -1; }

void require_dimension(int dimension) {
  if (dimension < 1 || dimension > 30)
    fail(ErrorCode::kBoundExceeded,
         "sign vector dimension " + std::to_string(dimension) + " outside 1..30");
}

// All nonempty unions of orbits of an involution restricted to a set that
// the involution preserves.
void add_invariant_subsets(const Simplex& closed_set, const std::vector<int>& action,
                           std::set<Simplex>& out) {
  std::vector<std::vector<int>> orbits;
  std::vector<bool> seen(closed_set.size(), false);
  for (std::size_t k = 0; k < closed_set.size(); ++k) {
    if (seen[k]) continue;
    const int v = closed_set[k];
    const int w = action[static_cast<std::size_t>(v)];
    seen[k] = true;
    std::vector<int> orbit{v};
    if (w != v) {
      orbit.push_back(w);
      const auto pos = std::lower_bound(closed_set.begin(), closed_set.end(), w);
      seen[static_cast<std::size_t>(pos - closed_set.begin())] = true;
    }
    orbits.push_back(std::move(orbit));
  }
  check_invariant(orbits.size() <= 16, "too many orbits in an invariant simplex");
  for (std::uint32_t mask = 1; mask < (1u << orbits.size()); ++mask) {
    Simplex s;
    for (std::size_t o = 0; o < orbits.size(); ++o)
      if (mask & (1u << o)) s.insert(s.end(), orbits[o].begin(), orbits[o].end());
    std::sort(s.begin(), s.end());
    out.insert(std::move(s));
  }
}

Simplex image_of(const Simplex& s, const std::vector<int>& action) {
  Simplex out;
  out.reserve(s.size());
  for (int v : s) out.push_back(action[static_cast<std::size_t>(v)]);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Simplex intersect(const Simplex& x, const Simplex& y) {
  Simplex out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

void check_simplicial_involution(const QuotientComplex& qc, const std::vector<int>& action,
                                 const std::string& name) {
  for (std::size_t v = 0; v < action.size(); ++v)
    check_invariant(action[static_cast<std::size_t>(action[v])] == static_cast<int>(v),
                    name + " is not an involution on vertices");
  for (const auto& f : qc.complex.facets())
    check_invariant(qc.complex.is_facet(image_of(f, action)),
                    name + " does not map facets to facets");
}

std::vector<int> vertex_action(const QuotientComplex& qc,
                               SignVector (SignVector::*map)() const) {
  std::vector<int> action;
  action.reserve(qc.vertices.size());
  for (const auto& v : qc.vertices) action.push_back(qc.locate((v.*map)()));
  return action;
}

IntVector apply_rows(const std::vector<IntVector>& rows, std::span<const Int> x) {
  IntVector out(rows.size(), 0);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < x.size(); ++c)
      if (rows[r][c] != 0) out[r] = checked_add(out[r], checked_mul(rows[r][c], x[c]));
  return out;
}

IntVector add(IntVector x, const IntVector& y) {
  for (std::size_t k = 0; k < x.size(); ++k) x[k] = checked_add(x[k], y[k]);
  return x;
}

IntVector scaled(const IntVector& x, Int s) {
  IntVector out(x);
  for (Int& v : out) v = checked_mul(v, s);
  return out;
}

// Linear functionals whose common kernel is W. The coordinates split into
// blocks: each maximal run s..t of Hopf indices touches coordinates s-1..t.
// A run at either end of 1..2n is killed completely; an interior run leaves
// the alternating sum of its coordinates; coordinates outside every run stay.
std::vector<IntVector> quotient_functionals(const HopfSublattice& hopf) {
  const int n = hopf.n;
  const int d = 2 * n - 1;
  std::vector<bool> covered(static_cast<std::size_t>(d + 1), false);
  std::vector<IntVector> rows;
  for (int i = 1; i <= 2 * n;) {
    if (!hopf.contains(i)) {
      ++i;
      continue;
    }
    int j = i;
    while (j + 1 <= 2 * n && hopf.contains(j + 1)) ++j;
    IntVector row(static_cast<std::size_t>(d), 0);
    for (int c = std::max(i - 1, 1); c <= std::min(j, d); ++c) {
      covered[static_cast<std::size_t>(c)] = true;
      row[static_cast<std::size_t>(c - 1)] = c % 2 == 0 ? 1 : -1;
    }
    if (i > 1 && j < 2 * n) rows.push_back(std::move(row));
    i = j + 1;
  }
  for (int c = 1; c <= d; ++c) {
    if (covered[static_cast<std::size_t>(c)]) continue;
    IntVector row(static_cast<std::size_t>(d), 0);
    row[static_cast<std::size_t>(c - 1)] = 1;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::shared_ptr<const FullComplex> cached_full_complex(int n, int max_n) {
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const FullComplex>> cache;
  const auto cycles = enumerate_cycles(n, max_n);
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = cache[n];
  if (!slot) {
    std::vector<Simplex> tops;
    tops.reserve(cycles->size());
    for (std::size_t k = 0; k < cycles->size(); ++k) {
      const auto states = cycles->cycle_states(k);
      Simplex s(states.begin(), states.end());
      std::sort(s.begin(), s.end());
      tops.push_back(std::move(s));
    }
    auto full = std::make_shared<FullComplex>();
    full->n = n;
    full->complex = SimplicialComplex(1 << (2 * n - 1), std::move(tops));
    slot = std::move(full);
  }
  return slot;
}

}  // namespace

// ---------------------------------------------------------------------------
// SignVector

SignVector::SignVector(std::vector<int> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) fail(ErrorCode::kMalformedText, "empty sign vector");
  for (int c : coords_)
    if (c != 1 && c != -1)
      fail(ErrorCode::kMalformedText, "sign vector entry " + std::to_string(c) + " is not +-1");
}

SignVector SignVector::constant(int dimension, int sign) {
  return SignVector(std::vector<int>(static_cast<std::size_t>(dimension), sign));
}

SignVector SignVector::from_index(int dimension, std::uint32_t index) {
  require_dimension(dimension);
  std::vector<int> coords(static_cast<std::size_t>(dimension));
  for (int j = 0; j < dimension; ++j)
    coords[static_cast<std::size_t>(j)] = (index >> (dimension - 1 - j)) & 1u ? +1 : -1;
  return SignVector(std::move(coords));
}

std::uint32_t SignVector::index() const {
  require_dimension(dimension());
  std::uint32_t out = 0;
  for (int c : coords_) out = (out << 1) | (c > 0 ? 1u : 0u);
  return out;
}

SignVector SignVector::negated() const {
  std::vector<int> out(coords_);
  for (int& c : out) c = -c;
  return SignVector(std::move(out));
}

SignVector SignVector::reversed() const {
  return SignVector(std::vector<int>(coords_.rbegin(), coords_.rend()));
}

IntVector SignVector::to_vector() const { return IntVector(coords_.begin(), coords_.end()); }

std::string SignVector::to_string() const {
  std::string out = "(";
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (j) out += ',';
    out += coords_[j] > 0 ? '+' : '-';
  }
  return out + ")";
}

// ---------------------------------------------------------------------------
// Sink moves

std::vector<int> sinks(const SignVector& rho) {
  const int d = rho.dimension();
  std::vector<int> out;
  for (int i = 1; i <= d + 1; ++i) {
    const int want = sink_sign(i);
    const bool left_ok = i - 1 < 1 || rho[static_cast<std::size_t>(i - 2)] == want;
    const bool right_ok = i > d || rho[static_cast<std::size_t>(i - 1)] == want;
    if (left_ok && right_ok) out.push_back(i);
  }
  return out;
}

SignVector apply_sink_move(const SignVector& rho, int i) {
  const auto s = sinks(rho);
  if (std::find(s.begin(), s.end(), i) == s.end())
    fail(ErrorCode::kNotSink, "tree vertex " + std::to_string(i) + " is not a sink of " +
                                  rho.to_string());
  std::vector<int> coords(rho.coords().begin(), rho.coords().end());
  for (int c : {i - 1, i})
    if (c >= 1 && c <= rho.dimension()) coords[static_cast<std::size_t>(c - 1)] *= -1;
  return SignVector(std::move(coords));
}

IntVector move_vector(int n, int i) {
  if (n < 1 || i < 1 || i > 2 * n)
    fail(ErrorCode::kNotSink, "tree vertex " + std::to_string(i) + " out of range");
  const SignVector from = i % 2 == 1 ? SignVector::rho_plus(n) : SignVector::rho_minus(n);
  const SignVector to = apply_sink_move(from, i);
  IntVector out(static_cast<std::size_t>(2 * n - 1));
  for (std::size_t j = 0; j < out.size(); ++j) out[j] = to[j] - from[j];
  return out;
}

std::vector<IntVector> move_vectors(int n) {
  std::vector<IntVector> out;
  for (int i = 1; i <= 2 * n; ++i) out.push_back(move_vector(n, i));
  return out;
}

// ---------------------------------------------------------------------------
// Hopf set

bool HopfSublattice::contains(int i) const {
  return std::binary_search(indices.begin(), indices.end(), i);
}

bool HopfSublattice::is_symmetric() const {
  return std::all_of(indices.begin(), indices.end(),
                     [this](int i) { return contains(2 * n + 1 - i); });
}

bool HopfSublattice::covers_a_parity_class() const {
  bool all_odd = true, all_even = true;
  for (int i = 1; i <= 2 * n; ++i) {
    if (contains(i)) continue;
    (i % 2 == 1 ? all_odd : all_even) = false;
  }
  return all_odd || all_even;
}

int HopfSublattice::rank() const { return twobridge::rank(generators); }

RationalSubspace HopfSublattice::span() const {
  return RationalSubspace(static_cast<std::size_t>(2 * n - 1), generators);
}

HopfSublattice hopf_set(const EvenCF& cf) {
  HopfSublattice out;
  out.n = cf.genus();
  for (std::size_t j = 0; j < cf.size(); ++j) {
    if (cf[j] == 2 || cf[j] == -2) {
      const int i = static_cast<int>(j) + 1;
      out.indices.push_back(i);
      out.generators.push_back(move_vector(out.n, i));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cycles and K(n)

std::shared_ptr<const CycleTable> enumerate_cycles(int n, int max_n) {
  if (n < 1) fail(ErrorCode::kBoundExceeded, "n must be positive");
  if (n > max_n)
    fail(ErrorCode::kBoundExceeded, "n = " + std::to_string(n) +
                                        " exceeds the enumeration bound " +
                                        std::to_string(max_n));
  require_dimension(2 * n - 1);
  static std::mutex mutex;
  static std::map<int, std::shared_ptr<const CycleTable>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  const int tree = 2 * n;
  const int d = tree - 1;
  const std::uint32_t corners = 1u << d;
  // next[c * tree + (i-1)] is the corner after the sink move at i, or -1.
  std::vector<std::int64_t> next(static_cast<std::size_t>(corners) * tree, -1);
  for (std::uint32_t c = 0; c < corners; ++c) {
    const SignVector rho = SignVector::from_index(d, c);
    for (int i : sinks(rho))
      next[c * tree + static_cast<std::uint32_t>(i - 1)] = apply_sink_move(rho, i).index();
  }

  auto table = std::make_shared<CycleTable>();
  table->n = n;
  std::vector<std::uint32_t> path;
  std::vector<std::uint8_t> moves;
  std::vector<bool> on_path(corners, false);

  // Depth-first search for cycles whose smallest corner is `start`.
  std::function<void(std::uint32_t, std::uint32_t, std::uint32_t)> search =
      [&](std::uint32_t start, std::uint32_t current, std::uint32_t used) {
        for (int i = 1; i <= tree; ++i) {
          if (used & (1u << i)) continue;
          const std::int64_t to = next[current * tree + static_cast<std::uint32_t>(i - 1)];
          if (to < 0) continue;
          const auto target = static_cast<std::uint32_t>(to);
          moves.push_back(static_cast<std::uint8_t>(i));
          if (moves.size() == static_cast<std::size_t>(tree)) {
            if (target == start) {
              table->states.insert(table->states.end(), path.begin(), path.end());
              table->moves.insert(table->moves.end(), moves.begin(), moves.end());
            }
          } else if (target > start && !on_path[target]) {
            path.push_back(target);
            on_path[target] = true;
            search(start, target, used | (1u << i));
            on_path[target] = false;
            path.pop_back();
          }
          moves.pop_back();
        }
      };

  for (std::uint32_t start = 0; start < corners; ++start) {
    path.assign(1, start);
    on_path[start] = true;
    search(start, start, 0);
    on_path[start] = false;
  }
  cache[n] = table;
  return table;
}

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Simplex> generators)
    : vertex_count_(vertex_count) {
  for (auto& s : generators) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s)
      check_invariant(v >= 0 && v < vertex_count, "simplex vertex out of range");
  }
  std::sort(generators.begin(), generators.end(), [](const Simplex& x, const Simplex& y) {
    return x.size() != y.size() ? x.size() > y.size() : x < y;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Larger simplices come first, so a generator is maximal iff no kept
  // simplex through its rarest vertex contains it.
  std::vector<Simplex> kept;
  std::vector<std::vector<std::size_t>> through(static_cast<std::size_t>(vertex_count));
  for (auto& s : generators) {
    if (s.empty()) continue;
    const int rarest = *std::min_element(s.begin(), s.end(), [&through](int x, int y) {
      return through[static_cast<std::size_t>(x)].size() < through[static_cast<std::size_t>(y)].size();
    });
    const auto& candidates = through[static_cast<std::size_t>(rarest)];
    const bool covered = std::any_of(candidates.begin(), candidates.end(), [&](std::size_t k) {
      const Simplex& f = kept[k];
      return f.size() > s.size() && std::includes(f.begin(), f.end(), s.begin(), s.end());
    });
    if (covered) continue;
    for (int v : s) through[static_cast<std::size_t>(v)].push_back(kept.size());
    kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end());
  facets_ = std::move(kept);
}

bool SimplicialComplex::is_facet(const Simplex& s) const {
  return std::binary_search(facets_.begin(), facets_.end(), s);
}

bool SimplicialComplex::contains(const Simplex& s) const {
  if (s.empty() || is_facet(s)) return !s.empty();
  return std::any_of(facets_.begin(), facets_.end(), [&s](const Simplex& f) {
    return std::includes(f.begin(), f.end(), s.begin(), s.end());
  });
}

int SimplicialComplex::dimension() const {
  std::size_t top = 0;
  for (const auto& f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  const int dim = dimension();
  std::vector<std::size_t> out(static_cast<std::size_t>(std::max(dim + 1, 0)), 0);
  for (const auto& f : facets_)
    check_invariant(f.size() <= 20, "facet too large for face enumeration");
  if (vertex_count_ <= 64) {
    std::unordered_set<std::uint64_t> faces;
    for (const auto& f : facets_) {
      for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < f.size(); ++k)
          if (mask & (1u << k)) bits |= std::uint64_t{1} << f[k];
        faces.insert(bits);
      }
    }
    for (std::uint64_t bits : faces) ++out[static_cast<std::size_t>(std::popcount(bits) - 1)];
    return out;
  }
  std::set<Simplex> faces;
  for (const auto& f : facets_) {
    for (std::uint32_t mask = 1; mask < (1u << f.size()); ++mask) {
      Simplex s;
      for (std::size_t k = 0; k < f.size(); ++k)
        if (mask & (1u << k)) s.push_back(f[k]);
      faces.insert(std::move(s));
    }
  }
  for (const auto& s : faces) ++out[s.size() - 1];
  return out;
}

Int SimplicialComplex::euler_characteristic() const {
  Int chi = 0;
  const auto f = f_vector();
  for (std::size_t k = 0; k < f.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<Int>(f[k]);
  return chi;
}

std::vector<std::pair<int, int>> SimplicialComplex::edges() const {
  std::set<std::pair<int, int>> out;
  for (const auto& f : facets_)
    for (std::size_t x = 0; x < f.size(); ++x)
      for (std::size_t y = x + 1; y < f.size(); ++y) out.emplace(f[x], f[y]);
  return {out.begin(), out.end()};
}

FullComplex build_full_complex(int n, int max_n) { return *cached_full_complex(n, max_n); }

Int scaled_volume(const FullComplex& full) {
  const int d = 2 * full.n - 1;
  Int total = 0;
  for (const auto& f : full.complex.facets()) {
    const IntVector base = SignVector::from_index(d, static_cast<std::uint32_t>(f[0])).to_vector();
    std::vector<IntVector> rows;
    for (std::size_t k = 1; k < f.size(); ++k) {
      IntVector row = SignVector::from_index(d, static_cast<std::uint32_t>(f[k])).to_vector();
      for (std::size_t c = 0; c < row.size(); ++c) row[c] -= base[c];
      rows.push_back(std::move(row));
    }
    total = checked_add(total, checked_abs(determinant(std::move(rows))));
  }
  return total;
}

// ---------------------------------------------------------------------------
// Quotient complexes

int expected_dimension(const HopfSublattice& hopf) {
  if (hopf.is_full()) return 0;
  return 2 * hopf.n - 1 - static_cast<int>(hopf.indices.size());
}

QuotientComplex build_quotient_complex(const Slope& s, int max_n) {
  const EvenCF cf = expand_even_cf(s);
  const int n = cf.genus();
  const auto full = cached_full_complex(n, max_n);
  const int d = 2 * n - 1;

  QuotientComplex out;
  out.n = n;
  out.hopf = hopf_set(cf);
  const RationalSubspace w = out.hopf.span();

  // Corners are visited in lexicographic order, so the first corner seen in
  // a coset is its smallest representative.
  const std::uint32_t corners = 1u << d;
  auto coset_of = std::make_shared<std::vector<int>>(corners);
  std::map<std::vector<Fraction>, int> ids;
  for (std::uint32_t c = 0; c < corners; ++c) {
    const SignVector eps = SignVector::from_index(d, c);
    const IntVector x = eps.to_vector();
    auto [it, inserted] = ids.emplace(w.normal_form(x), static_cast<int>(out.vertices.size()));
    if (inserted) out.vertices.push_back(eps);
    (*coset_of)[c] = it->second;
  }

  std::set<Simplex> images;
  for (const auto& f : full->complex.facets()) {
    Simplex img;
    img.reserve(f.size());
    for (int v : f) img.push_back((*coset_of)[static_cast<std::size_t>(v)]);
    std::sort(img.begin(), img.end());
    img.erase(std::unique(img.begin(), img.end()), img.end());
    images.insert(std::move(img));
  }
  out.complex = SimplicialComplex(static_cast<int>(out.vertices.size()),
                                  std::vector<Simplex>(images.begin(), images.end()));
  out.locate = [coset_of, d](const SignVector& eps) {
    check_invariant(eps.dimension() == d, "sign vector has wrong dimension");
    return (*coset_of)[eps.index()];
  };
  return out;
}

QuotientComplex build_reduced_complex(const Slope& s, int max_non_hopf) {
  const EvenCF cf = expand_even_cf(s);
  const int n = cf.genus();
  const int d = 2 * n - 1;

  QuotientComplex out;
  out.n = n;
  out.hopf = hopf_set(cf);
  const int non_hopf = 2 * n - static_cast<int>(out.hopf.indices.size());
  if (non_hopf > max_non_hopf)
    fail(ErrorCode::kBoundExceeded, s.to_string() + " has " + std::to_string(non_hopf) +
                                        " non-Hopf entries; the bound is " +
                                        std::to_string(max_non_hopf));

  auto rows = std::make_shared<const std::vector<IntVector>>(quotient_functionals(out.hopf));
  const auto vs = move_vectors(n);
  // ker(rows) == W: rows vanish on W and the dimensions add up.
  for (int i : out.hopf.indices)
    for (Int x : apply_rows(*rows, vs[static_cast<std::size_t>(i - 1)]))
      check_invariant(x == 0, "quotient functional does not vanish on v_" + std::to_string(i));
  const int w_rank = out.hopf.rank();
  check_invariant(w_rank == (out.hopf.is_full() ? d : static_cast<int>(out.hopf.indices.size())),
                  "Hopf vectors have unexpected rank");
  check_invariant(twobridge::rank(*rows) == d - w_rank &&
                      static_cast<int>(rows->size()) == d - w_rank,
                  "quotient functionals have wrong rank");

  // reach[j]: images of the sign choices on coordinates j..d-1.
  const std::size_t k = rows->size();
  std::vector<IntVector> columns(static_cast<std::size_t>(d), IntVector(k, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < static_cast<std::size_t>(d); ++c) columns[c][r] = (*rows)[r][c];
  std::vector<std::set<IntVector>> reach(static_cast<std::size_t>(d + 1));
  reach[static_cast<std::size_t>(d)].insert(IntVector(k, 0));
  for (int j = d - 1; j >= 0; --j) {
    const auto& col = columns[static_cast<std::size_t>(j)];
    for (const auto& y : reach[static_cast<std::size_t>(j + 1)]) {
      reach[static_cast<std::size_t>(j)].insert(add(y, col));
      reach[static_cast<std::size_t>(j)].insert(add(y, scaled(col, -1)));
    }
  }

  // Smallest representative: choose -1 whenever the rest can still reach.
  std::vector<std::pair<SignVector, IntVector>> found;
  for (const auto& target : reach[0]) {
    std::vector<int> coords;
    IntVector remaining = target;
    for (int j = 0; j < d; ++j) {
      const auto& col = columns[static_cast<std::size_t>(j)];
      IntVector if_minus = add(remaining, col);  // remaining - (-1) * col
      if (reach[static_cast<std::size_t>(j + 1)].count(if_minus)) {
        coords.push_back(-1);
        remaining = std::move(if_minus);
      } else {
        coords.push_back(+1);
        remaining = add(remaining, scaled(col, -1));
      }
    }
    found.emplace_back(SignVector(std::move(coords)), target);
  }
  std::sort(found.begin(), found.end());
  auto index = std::make_shared<std::map<IntVector, int>>();
  for (const auto& [rep, image] : found) {
    index->emplace(image, static_cast<int>(out.vertices.size()));
    out.vertices.push_back(rep);
  }

  // Top simplices: x, x + w_{s1}, x + w_{s1} + w_{s2}, ... for every vertex x
  // and ordering s of the non-Hopf move images, kept when all points are
  // vertices.
  std::vector<IntVector> ws;
  for (int i = 1; i <= 2 * n; ++i)
    if (!out.hopf.contains(i)) ws.push_back(apply_rows(*rows, vs[static_cast<std::size_t>(i - 1)]));
  std::set<Simplex> tops;
  if (ws.empty()) {
    tops.insert(Simplex{0});
  } else {
    std::vector<std::size_t> order(ws.size());
    for (const auto& [image, base] : *index) {
      std::iota(order.begin(), order.end(), 0);
      do {
        Simplex simplex{base};
        IntVector point = image;
        bool inside = true;
        for (std::size_t t = 0; t + 1 < order.size() && inside; ++t) {
          point = add(point, ws[order[t]]);
          auto it = index->find(point);
          if (it == index->end()) {
            inside = false;
          } else {
            simplex.push_back(it->second);
          }
        }
        if (inside) {
          std::sort(simplex.begin(), simplex.end());
          tops.insert(std::move(simplex));
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  }
  out.complex = SimplicialComplex(static_cast<int>(out.vertices.size()),
                                  std::vector<Simplex>(tops.begin(), tops.end()));
  out.locate = [rows, index, d](const SignVector& eps) {
    check_invariant(eps.dimension() == d, "sign vector has wrong dimension");
    auto it = index->find(apply_rows(*rows, eps.to_vector()));
    check_invariant(it != index->end(), "sign vector maps outside the vertex set");
    return it->second;
  };
  return out;
}

// ---------------------------------------------------------------------------
// Involutions

HInvolutionReport involution_h_report(const QuotientComplex& qc) {
  HInvolutionReport out;
  out.vertex_action = vertex_action(qc, &SignVector::negated);
  check_simplicial_involution(qc, out.vertex_action, "h");
  out.plus_vertex = qc.locate(SignVector::rho_plus(qc.n));
  out.minus_vertex = qc.locate(SignVector::rho_minus(qc.n));
  out.hopf_covers_parity_class = qc.hopf.covers_a_parity_class();

  // Every invariant simplex is a union of orbits inside F ∩ h(F) for some
  // facet F.
  std::set<Simplex> invariant;
  for (const auto& f : qc.complex.facets()) {
    const Simplex closed = intersect(f, image_of(f, out.vertex_action));
    if (!closed.empty()) add_invariant_subsets(closed, out.vertex_action, invariant);
  }
  out.invariant_simplex_count = invariant.size();
  check_invariant(invariant.size() == 1,
                  "h has " + std::to_string(invariant.size()) + " invariant simplices");
  const Simplex& only = *invariant.begin();
  if (only.size() == 1) {
    out.fixed_vertex = only[0];
    check_invariant(out.plus_vertex == only[0] && out.minus_vertex == only[0],
                    "fixed vertex of h is not [rho_+] = [rho_-]");
  } else {
    check_invariant(only.size() == 2, "invariant simplex of h is not a vertex or an edge");
    out.inverted_edge = std::make_pair(only[0], only[1]);
    check_invariant(out.plus_vertex != out.minus_vertex &&
                        Simplex({std::min(out.plus_vertex, out.minus_vertex),
                                 std::max(out.plus_vertex, out.minus_vertex)}) == only,
                    "edge inverted by h is not {[rho_+], [rho_-]}");
  }
  check_invariant(out.fixed_vertex.has_value() == out.hopf_covers_parity_class,
                  "fixed vertex of h does not match the parity condition on H");
  return out;
}

HPrimeInvolutionReport involution_hprime_report(const Slope& s, const QuotientComplex& qc) {
  if (!slope_predicates(s).is_palindromic)
    fail(ErrorCode::kNotPalindromic, s.to_string() + " is not palindromic (q^2 != 1 mod p)");
  check_invariant(qc.hopf.is_symmetric(), "Hopf set of a palindromic slope is not symmetric");

  HPrimeInvolutionReport out;
  out.vertex_action = vertex_action(qc, &SignVector::reversed);
  check_simplicial_involution(qc, out.vertex_action, "h'");
  for (std::size_t v = 0; v < out.vertex_action.size(); ++v)
    if (out.vertex_action[v] == static_cast<int>(v)) out.fixed_vertices.push_back(static_cast<int>(v));

  const auto h = vertex_action(qc, &SignVector::negated);
  out.commutes_with_h = true;
  for (std::size_t v = 0; v < h.size(); ++v)
    if (h[static_cast<std::size_t>(out.vertex_action[v])] !=
        out.vertex_action[static_cast<std::size_t>(h[v])])
      out.commutes_with_h = false;
  check_invariant(out.commutes_with_h, "h and h' do not commute");

  const int n = qc.n;
  const int d = 2 * n - 1;
  out.expected_dimension = n - static_cast<int>(qc.hopf.indices.size()) / 2;

  // Fix of coordinate reversal has basis e_i + e_{2n-i}, i = 1..n.
  std::vector<IntVector> sum = qc.hopf.generators;
  for (int i = 1; i <= n; ++i) {
    IntVector e(static_cast<std::size_t>(d), 0);
    e[static_cast<std::size_t>(i - 1)] += 1;
    e[static_cast<std::size_t>(2 * n - i - 1)] += 1;
    sum.push_back(std::move(e));
  }
  out.rank_dimension = twobridge::rank(sum) - qc.hopf.rank();

  int best = -1;
  for (const auto& f : qc.complex.facets()) {
    const Simplex closed = intersect(f, image_of(f, out.vertex_action));
    int orbits = 0;
    for (int v : closed)
      if (out.vertex_action[static_cast<std::size_t>(v)] >= v) ++orbits;
    if (!closed.empty()) best = std::max(best, orbits - 1);
  }
  out.combinatorial_dimension = best;

  check_invariant(out.rank_dimension == out.expected_dimension,
                  "dim (W + Fix)/W = " + std::to_string(out.rank_dimension) + ", expected " +
                      std::to_string(out.expected_dimension));
  check_invariant(out.combinatorial_dimension == out.expected_dimension,
                  "fixed set of h' has dimension " + std::to_string(out.combinatorial_dimension) +
                      ", expected " + std::to_string(out.expected_dimension));
  return out;
}

// ---------------------------------------------------------------------------
// Oracle

OracleReport oracle_cross_check(int n, int max_n) {
  if (n > max_n)
    fail(ErrorCode::kBoundExceeded, "oracle check for n = " + std::to_string(n) +
                                        " exceeds the bound " + std::to_string(max_n));
  OracleReport out;
  out.n = n;
  const FullComplex full = build_full_complex(n, std::max(max_n, n));
  const std::set<Simplex> from_cycles(full.complex.facets().begin(), full.complex.facets().end());

  // Cyclic arrangements eps_0, ..., eps_{2n-1} whose successive differences
  // are v_1, ..., v_{2n} in some order; rotate so that v_1 comes first.
  const int d = 2 * n - 1;
  const auto vs = move_vectors(n);
  std::set<Simplex> from_vectors;
  std::vector<std::size_t> rest(vs.size() - 1);
  for (std::uint32_t start = 0; start < (1u << d); ++start) {
    const IntVector origin = SignVector::from_index(d, start).to_vector();
    std::iota(rest.begin(), rest.end(), 1);
    do {
      IntVector point = origin;
      Simplex simplex{static_cast<int>(start)};
      bool corner = true;
      for (std::size_t t = 0; t + 1 < vs.size() && corner; ++t) {
        point = add(point, vs[t == 0 ? 0 : rest[t - 1]]);
        corner = std::all_of(point.begin(), point.end(), [](Int x) { return x == 1 || x == -1; });
        if (corner) {
          std::vector<int> coords(point.begin(), point.end());
          simplex.push_back(static_cast<int>(SignVector(std::move(coords)).index()));
        }
      }
      if (!corner) continue;
      std::sort(simplex.begin(), simplex.end());
      if (std::adjacent_find(simplex.begin(), simplex.end()) != simplex.end()) continue;
      from_vectors.insert(std::move(simplex));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  out.cycle_simplices = from_cycles.size();
  out.vector_simplices = from_vectors.size();
  out.match = from_cycles == from_vectors;
  if (!out.match) {
    std::vector<Simplex> diff;
    std::set_symmetric_difference(from_cycles.begin(), from_cycles.end(), from_vectors.begin(),
                                  from_vectors.end(), std::back_inserter(diff));
    if (!diff.empty()) out.first_difference = diff.front();
  }
  return out;
}

}  // namespace twobridge::kakimizu
