#pragma once

// Knot tables: CSV ingestion, per-knot records, table rendering, and the
// golden comparison against the embedded equivariant-genus table of
// 2-bridge knots up to ten crossings.

#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "twobridge/invariants.hpp"
#include "twobridge/slope.hpp"

namespace twobridge {

struct CatalogEntry {
  std::string name;
  Slope slope;
  std::size_t line = 0;
  // Present only for catalogs that carry golden columns (cf, genera).
  std::optional<std::string> expected_cf;
  std::optional<std::string> expected_genera;
};

struct RowError {
  std::size_t line = 0;
  std::string text;
  std::string message;
};

struct Catalog {
  std::vector<CatalogEntry> entries;
  std::vector<RowError> errors;
};

/// Reads CSV whose header starts with `name,fraction`. Optional trailing
/// `cf,genera` columns are kept as golden values. Bad rows are collected in
/// `errors`; throws kEmptyCatalog when no row is valid.
Catalog load_catalog(std::istream& in);
Catalog load_catalog_file(const std::string& path);

/// The embedded table (95 knots, 3_1 through 10_45) with golden columns.
std::string_view embedded_appendix_csv();
Catalog load_embedded_catalog();

struct KnotRecord {
  std::string name;
  GenusProfile profile;
};

KnotRecord compute_record(std::string name, const Slope& slope);

enum class TableFormat { kCsv, kJson, kLatex };

/// "csv", "json" or "latex"; anything else is kUnknownFormat.
TableFormat parse_table_format(std::string_view text);

std::string render_table(std::span<const KnotRecord> records, TableFormat format);

/// Genera in the table's abbreviated form: "{1,torus}", "{2,fib,sym}",
/// "{1,sym,2,2}", "{1,2,1,1,2}".
std::string abbreviated_genera(const KnotRecord& record);

/// One LaTeX table row, e.g.
///   6_1 & \text{2/9} & \left\{4,\bar{2}\right\} & \{1,2,1,1,2\} \\  .
std::string latex_row(const KnotRecord& record);

/// Reads the CSV produced by render_table. Every row is recomputed from its
/// name and slope and must agree with the stored columns (kMalformedText
/// otherwise).
std::vector<KnotRecord> parse_records_csv(std::istream& in);

struct AppendixRowResult {
  std::string name;
  std::string fraction;
  std::string expected_cf;
  std::string actual_cf;
  std::string expected_genera;
  std::string actual_genera;
  std::vector<std::string> expected_attributes;
  std::vector<std::string> actual_attributes;
  bool ok = false;
};

struct AppendixReport {
  std::vector<AppendixRowResult> rows;
  std::size_t row_errors = 0;

  std::size_t passed() const;
  bool ok() const { return row_errors == 0 && passed() == rows.size() && !rows.empty(); }
};

/// Recomputes every embedded row from (name, q/p) alone and compares cf,
/// genera and attributes against the golden columns.
AppendixReport verify_appendix();

}  // namespace twobridge
