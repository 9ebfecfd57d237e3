#include "twobridge/properties.hpp"

#include <algorithm>
#include <sstream>

#include "twobridge/catalog.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/kakimizu.hpp"
#include "twobridge/slope.hpp"

namespace twobridge {

namespace {

namespace kk = kakimizu;

// Records one case; the first failure's message becomes the detail.
class Tally {
 public:
  explicit Tally(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::string& what) {
    ++result_.checked;
    if (ok) return;
    if (result_.failures++ == 0) result_.detail = what;
  }

  template <typename F>
  void guard(const std::string& what, F&& body) {
    try {
      body();
    } catch (const Error& e) {
      expect(false, what + ": " + std::string(error_code_name(e.code())) + ": " + e.what());
    }
  }

  PropertyResult done(std::string summary) {
    if (result_.failures == 0) result_.detail = std::move(summary);
    return std::move(result_);
  }

 private:
  PropertyResult result_;
};

bool well_shaped(const EvenCF& cf) {
  if (cf.size() == 0 || cf.size() % 2 != 0) return false;
  return std::all_of(cf.entries().begin(), cf.entries().end(),
                     [](Int c) { return c != 0 && c % 2 == 0; });
}

bool all_unit(const std::vector<Int>& xs) {
  return std::all_of(xs.begin(), xs.end(), [](Int x) { return x == 1 || x == -1; });
}

}  // namespace

PropertyResult check_cf_roundtrip(Int p_max) {
  Tally t("cf-roundtrip");
  const auto slopes = all_slopes(p_max);
  for (const Slope& s : slopes) {
    t.guard(s.to_string(), [&] {
      const EvenCF cf = expand_even_cf(s);
      t.expect(well_shaped(cf) && evaluate_cf(cf.entries()) == s.value(),
               s.to_string() + " -> " + cf.to_string());
    });
  }
  return t.done(std::to_string(slopes.size()) + " slopes with p <= " + std::to_string(p_max));
}

PropertyResult check_reversal_duality(Int p_max) {
  Tally t("reversal-duality");
  const auto slopes = all_slopes(p_max);
  for (const Slope& s : slopes) {
    t.guard(s.to_string(), [&] {
      const Slope dual = inverse_slope(s);
      const EvenCF cf = expand_even_cf(s);
      const EvenCF dual_cf = expand_even_cf(dual);
      t.expect(dual_cf == cf.reversed(), s.to_string() + " " + cf.to_string() + " vs " +
                                             dual.to_string() + " " + dual_cf.to_string());
    });
  }
  return t.done(std::to_string(slopes.size()) + " slopes with p <= " + std::to_string(p_max));
}

PropertyResult check_appendix() {
  Tally t("appendix");
  AppendixReport report;
  t.guard("embedded table", [&] { report = verify_appendix(); });
  for (std::size_t k = 0; k < report.row_errors; ++k) t.expect(false, "embedded row failed to parse");
  for (const auto& row : report.rows) {
    t.expect(row.ok, row.name + " " + row.fraction + ": expected " + row.expected_cf + " " +
                         row.expected_genera + ", computed " + row.actual_cf + " " +
                         row.actual_genera);
  }
  return t.done(std::to_string(report.passed()) + "/" + std::to_string(report.rows.size()) +
                " rows match");
}

PropertyResult check_gap_examples(int g_max, Int d_max) {
  Tally t("gap-examples");
  for (int g = 1; g <= g_max; ++g) {
    for (Int gh = g; gh <= g_max; ++gh) {
      const std::string what = "gap " + std::to_string(g) + " " + std::to_string(gh);
      t.guard(what, [&] {
        const GapExample ex = find_gap_example(g, gh);
        t.expect(seifert_genus(ex.slope) == g && equivariant_genus(ex.slope, ex.marked) == gh &&
                     ex.genus == g && ex.equivariant == gh,
                 what + " -> " + ex.slope.to_string());
      });
    }
  }
  for (Int d = -d_max; d <= d_max; ++d) {
    const std::string what = "arc-gap " + std::to_string(d);
    t.guard(what, [&] {
      const ArcGapExample ex = find_arc_gap_example(d);
      const Int diff = equivariant_genus(ex.slope, ex.arcs.first) -
                       equivariant_genus(ex.slope, ex.arcs.second);
      t.expect(diff == d && ex.short_genus - ex.long_genus == d,
               what + " -> " + ex.slope.to_string());
    });
  }
  return t.done("all (g, g_hat) with g_hat <= " + std::to_string(g_max) + " and |d| <= " +
                std::to_string(d_max));
}

PropertyResult check_kakimizu_oracle(int n_max) {
  Tally t("kakimizu-oracle");
  for (int n = 1; n <= n_max; ++n) {
    const std::string what = "K(" + std::to_string(n) + ")";
    t.guard(what, [&] {
      const auto oracle = kk::oracle_cross_check(n, std::max(n, kk::kDefaultOracleMaxN));
      t.expect(oracle.match, what + ": cycle and vector constructions differ");
      const auto full = kk::build_full_complex(n, std::max(n, kk::kDefaultMaxN));
      Int factorial = 1;
      for (int k = 2; k <= 2 * n - 1; ++k) factorial *= k;
      const Int cube = Int{1} << (2 * n - 1);
      t.expect(kk::scaled_volume(full) == cube * factorial, what + ": volume is not the cube's");
      t.expect(full.complex.euler_characteristic() == 1, what + ": chi != 1");
    });
  }
  return t.done("n = 1.." + std::to_string(n_max));
}

PropertyResult check_quotient_structure(Int p_max) {
  Tally t("quotient-structure");
  const auto slopes = all_slopes(p_max);
  for (const Slope& s : slopes) {
    t.guard(s.to_string(), [&] {
      const auto qc = kk::build_reduced_complex(s);
      const EvenCF cf = expand_even_cf(s);
      const int n = cf.genus();
      const int hopf = static_cast<int>(qc.hopf.indices.size());
      const int dim = hopf == 2 * n ? 0 : 2 * n - 1 - hopf;
      t.expect(qc.dimension() == dim, s.to_string() + ": dim " + std::to_string(qc.dimension()) +
                                          ", expected " + std::to_string(dim));
      t.expect(qc.euler_characteristic() == 1, s.to_string() + ": chi != 1");
      const auto h = kk::involution_h_report(qc);
      const bool unit_side = all_unit(cf.a_values()) || all_unit(cf.b_values());
      const bool dichotomy = unit_side ? (h.fixed_vertex && !h.inverted_edge)
                                       : (!h.fixed_vertex && h.inverted_edge);
      t.expect(dichotomy && h.invariant_simplex_count == 1,
               s.to_string() + ": h action breaks the dichotomy");
    });
  }
  return t.done(std::to_string(slopes.size()) + " slopes with p <= " + std::to_string(p_max));
}

PropertyResult check_exceptional_involution(Int p_max, int n_max) {
  Tally t("exceptional-involution");
  std::size_t palindromic = 0;
  for (const Slope& s : all_slopes(p_max)) {
    if (!slope_predicates(s).is_palindromic) continue;
    t.guard(s.to_string(), [&] {
      const EvenCF cf = expand_even_cf(s);
      if (cf.genus() > n_max) return;
      ++palindromic;
      const auto qc = kk::build_quotient_complex(s, n_max);
      const auto hp = kk::involution_hprime_report(s, qc);
      const int expected = cf.genus() - static_cast<int>(qc.hopf.indices.size()) / 2;
      t.expect(hp.expected_dimension == expected && hp.rank_dimension == expected &&
                   hp.combinatorial_dimension == expected,
               s.to_string() + ": fixed dimension " + std::to_string(hp.rank_dimension) + "/" +
                   std::to_string(hp.combinatorial_dimension) + ", expected " +
                   std::to_string(expected));
    });
  }
  return t.done(std::to_string(palindromic) + " palindromic slopes with p <= " +
                std::to_string(p_max) + ", n <= " + std::to_string(n_max));
}

PropertyResult check_route_agreement(Int p_max, int n_max) {
  Tally t("route-agreement");
  for (const Slope& s : all_slopes(p_max)) {
    if (expand_even_cf(s).genus() > n_max) continue;
    t.guard(s.to_string(), [&] {
      const auto direct = kk::build_quotient_complex(s, n_max);
      const auto reduced = kk::build_reduced_complex(s);
      t.expect(direct.vertices == reduced.vertices &&
                   direct.complex.facets() == reduced.complex.facets(),
               s.to_string() + ": direct and reduced quotients differ");
    });
  }
  return t.done("slopes with p <= " + std::to_string(p_max) + ", n <= " + std::to_string(n_max));
}

PropertyResult check_table_roundtrip() {
  Tally t("table-roundtrip");
  t.guard("embedded table", [&] {
    std::vector<KnotRecord> records;
    for (const auto& e : load_embedded_catalog().entries)
      records.push_back(compute_record(e.name, e.slope));
    const std::string csv = render_table(records, TableFormat::kCsv);
    std::istringstream in(csv);
    const auto parsed = parse_records_csv(in);
    t.expect(parsed.size() == records.size(), "row count changed");
    for (std::size_t k = 0; k < std::min(parsed.size(), records.size()); ++k)
      t.expect(parsed[k].name == records[k].name &&
                   parsed[k].profile.slope == records[k].profile.slope,
               "row " + records[k].name + " changed");
    t.expect(render_table(parsed, TableFormat::kCsv) == csv, "re-rendered CSV differs");
  });
  return t.done("embedded table through csv");
}

std::vector<PropertyResult> run_property_suite(Int p_max) {
  return {
      check_cf_roundtrip(p_max),
      check_reversal_duality(p_max),
      check_appendix(),
      check_table_roundtrip(),
      check_gap_examples(6, 6),
      check_kakimizu_oracle(3),
      check_route_agreement(std::min<Int>(p_max, 120), 5),
      check_quotient_structure(std::min<Int>(p_max, 200)),
      check_exceptional_involution(std::min<Int>(p_max, 500), 5),
  };
}

}  // namespace twobridge
