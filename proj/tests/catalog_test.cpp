#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "twobridge/catalog.hpp"

namespace twobridge {
namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::kInvariantViolation;
}

Catalog load_text(const std::string& text) {
  std::istringstream in(text);
  return load_catalog(in);
}

std::vector<KnotRecord> embedded_records() {
  std::vector<KnotRecord> out;
  for (const auto& e : load_embedded_catalog().entries) out.push_back(compute_record(e.name, e.slope));
  return out;
}

KnotRecord record(const std::string& name, std::string_view fraction) {
  return compute_record(name, parse_fraction(fraction));
}

TEST(LoadCatalog, Embedded) {
  const Catalog c = load_embedded_catalog();
  EXPECT_TRUE(c.errors.empty());
  ASSERT_EQ(c.entries.size(), 95u);
  EXPECT_EQ(c.entries.front().name, "3_1");
  EXPECT_EQ(c.entries.back().name, "10_45");
  EXPECT_EQ(c.entries.front().expected_genera, "{1,torus}");
}

TEST(LoadCatalog, RowErrorsAreCollected) {
  const Catalog c = load_text("name,fraction\n5_2,4/7\nx,abc\n\n6_1,2/9\n,2/3\n7_1,4/6\n");
  ASSERT_EQ(c.entries.size(), 2u);
  EXPECT_EQ(expand_even_cf(c.entries[0].slope), EvenCF::from_entries({2, 4}));
  EXPECT_EQ(c.entries[1].line, 5u);
  ASSERT_EQ(c.errors.size(), 3u);
  EXPECT_EQ(c.errors[0].line, 3u);
  EXPECT_EQ(c.errors[0].text, "x,abc");
  EXPECT_EQ(c.errors[2].line, 7u);
}

TEST(LoadCatalog, FatalCases) {
  EXPECT_EQ(code_of([] { load_text("name,fraction\nx,abc\n"); }), ErrorCode::kEmptyCatalog);
  EXPECT_EQ(code_of([] { load_text("knot,slope\n3_1,2/3\n"); }), ErrorCode::kMalformedText);
  EXPECT_EQ(code_of([] { load_catalog_file("/nonexistent/table.csv"); }), ErrorCode::kIo);
}

TEST(LoadCatalog, AcceptsEitherNormalization) {
  // 7/9 and 2/9 name the same slope: 7 is odd, 7 - 9 = -2, its mirror.
  const Catalog c = load_text("name,fraction\na,7/9\nb,-2/9\n");
  EXPECT_EQ(c.entries[0].slope, c.entries[1].slope);
  EXPECT_EQ(genus_profile(c.entries[0].slope).values(),
            genus_profile(parse_fraction("2/9")).values());
}

TEST(Genera, Abbreviations) {
  EXPECT_EQ(abbreviated_genera(record("6_1", "2/9")), "{1,2,1,1,2}");
  EXPECT_EQ(abbreviated_genera(record("6_2", "4/11")), "{2,fib}");
  EXPECT_EQ(abbreviated_genera(record("7_4", "4/15")), "{1,sym,2,2}");
  EXPECT_EQ(abbreviated_genera(record("9_18", "24/41")), "{2,2,4,4,2}");
  EXPECT_EQ(abbreviated_genera(record("10_17", "32/41")), "{4,fib}");
  EXPECT_EQ(abbreviated_genera(record("3_1", "2/3")), "{1,torus}");
  EXPECT_EQ(abbreviated_genera(record("7_7", "8/21")), "{2,fib,sym}");
}

TEST(Render, CsvRows) {
  const std::vector<KnotRecord> rs = {record("6_1", "2/9"), record("7_7", "8/21")};
  EXPECT_EQ(render_table(rs, TableFormat::kCsv),
            "name,p,q,qprime,cf,genus,genera,attributes\n"
            "6_1,9,2,-4,\"[4,-2]\",1,\"[2,1,1,2]\",[]\n"
            "7_7,21,8,8,\"[2,-2,-2,2]\",2,\"[2,2,2,2]\",\"[fib,sym]\"\n");
}

TEST(Render, Json) {
  const std::vector<KnotRecord> rs = {record("5_1", "4/5")};
  const auto j = nlohmann::json::parse(render_table(rs, TableFormat::kJson));
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["name"], "5_1");
  EXPECT_EQ(j[0]["cf"], nlohmann::json({2, 2, 2, 2}));
  EXPECT_EQ(j[0]["genera"], nlohmann::json({2, 2}));
  EXPECT_EQ(j[0]["attributes"], nlohmann::json({"torus"}));
}

TEST(Render, LatexMatchesGoldenRows) {
  std::ifstream in(TWOBRIDGE_GOLDEN_DIR "/appendix_rows.tex");
  ASSERT_TRUE(in) << "missing golden file";
  std::vector<std::string> golden;
  for (std::string line; std::getline(in, line);)
    if (!line.empty()) golden.push_back(line);
  const auto rs = embedded_records();
  ASSERT_EQ(golden.size(), rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) EXPECT_EQ(latex_row(rs[k]), golden[k]);
  const std::string table = render_table(rs, TableFormat::kLatex);
  EXPECT_NE(table.find(golden.front()), std::string::npos);
}

TEST(Render, UnknownFormat) {
  EXPECT_EQ(parse_table_format("latex"), TableFormat::kLatex);
  EXPECT_EQ(code_of([] { parse_table_format("xml"); }), ErrorCode::kUnknownFormat);
}

TEST(Records, CsvRoundTrip) {
  const auto rs = embedded_records();
  const std::string csv = render_table(rs, TableFormat::kCsv);
  std::istringstream in(csv);
  const auto back = parse_records_csv(in);
  ASSERT_EQ(back.size(), rs.size());
  for (std::size_t k = 0; k < rs.size(); ++k) {
    EXPECT_EQ(back[k].name, rs[k].name);
    EXPECT_EQ(back[k].profile.values(), rs[k].profile.values());
    EXPECT_EQ(back[k].profile.attributes, rs[k].profile.attributes);
  }
  EXPECT_EQ(render_table(back, TableFormat::kCsv), csv);
}

TEST(Records, TamperedColumnsAreRejected) {
  std::istringstream in(
      "name,p,q,qprime,cf,genus,genera,attributes\n"
      "6_1,9,2,-4,\"[4,-2]\",1,\"[2,1,1,3]\",[]\n");
  EXPECT_EQ(code_of([&] { parse_records_csv(in); }), ErrorCode::kMalformedText);
  // Attributes are recomputed, never taken from input.
  std::istringstream attrs(
      "name,p,q,qprime,cf,genus,genera,attributes\n"
      "6_1,9,2,-4,\"[4,-2]\",1,\"[2,1,1,2]\",[fib]\n");
  EXPECT_EQ(code_of([&] { parse_records_csv(attrs); }), ErrorCode::kMalformedText);
}

TEST(VerifyAppendix, AllRowsMatch) {
  const AppendixReport report = verify_appendix();
  EXPECT_EQ(report.rows.size(), 95u);
  EXPECT_EQ(report.passed(), 95u);
  EXPECT_TRUE(report.ok());
  for (const auto& row : report.rows)
    EXPECT_TRUE(row.ok) << row.name << ": " << row.expected_genera << " vs " << row.actual_genera;
}

}  // namespace
}  // namespace twobridge
