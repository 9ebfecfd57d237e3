#include "twobridge/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace twobridge {

namespace {

const std::vector<std::string> kRecordHeader = {"name",  "p",     "q",      "qprime",
                                                "cf",    "genus", "genera", "attributes"};

// Splits one CSV line, honouring double quotes and "" escapes.
std::vector<std::string> split_csv_line(std::string_view line, bool& ok) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  ok = true;
  for (std::size_t k = 0; k < line.size(); ++k) {
    const char c = line[k];
    if (quoted) {
      if (c == '"' && k + 1 < line.size() && line[k + 1] == '"') {
        field += '"';
        ++k;
      } else if (c == '"') {
        quoted = false;
      } else {
        field += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(field));
      field.clear();
    } else {
      field += c;
    }
  }
  if (quoted) ok = false;
  fields.push_back(std::move(field));
  return fields;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string strip(std::string s) {
  while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) s.pop_back();
  std::size_t k = 0;
  while (k < s.size() && (s[k] == ' ' || s[k] == '\t')) ++k;
  return s.substr(k);
}

template <typename T>
std::string bracketed(const std::vector<T>& xs) {
  std::string out = "[";
  for (std::size_t k = 0; k < xs.size(); ++k) {
    if (k) out += ',';
    if constexpr (std::is_same_v<T, std::string>) {
      out += xs[k];
    } else {
      out += std::to_string(xs[k]);
    }
  }
  return out + "]";
}

std::string latex_name(const std::string& name) {
  const auto underscore = name.find('_');
  if (underscore == std::string::npos) return name;
  const std::string index = name.substr(underscore + 1);
  if (index.size() <= 1) return name;
  return name.substr(0, underscore) + "_{" + index + "}";
}

std::vector<std::string> words_in(const std::string& genera) {
  std::vector<std::string> out;
  for (const char* w : {"torus", "fib", "sym"})
    if (genera.find(w) != std::string::npos) out.emplace_back(w);
  return out;
}

}  // namespace

Catalog load_catalog(std::istream& in) {
  Catalog out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  bool golden = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty()) continue;
    bool ok = true;
    auto fields = split_csv_line(line, ok);
    if (!header_seen) {
      header_seen = true;
      if (!ok || fields.size() < 2 || strip(fields[0]) != "name" || strip(fields[1]) != "fraction")
        fail(ErrorCode::kMalformedText, "catalog header must start with 'name,fraction'");
      golden = fields.size() >= 4 && strip(fields[2]) == "cf" && strip(fields[3]) == "genera";
      continue;
    }
    if (!ok || fields.size() < 2) {
      out.errors.push_back({line_no, line, "expected at least two columns"});
      continue;
    }
    const std::string name = strip(fields[0]);
    if (name.empty()) {
      out.errors.push_back({line_no, line, "empty knot name"});
      continue;
    }
    try {
      CatalogEntry entry{.name = name, .slope = parse_fraction(fields[1]), .line = line_no, .expected_cf = {}, .expected_genera = {}};
      if (golden && fields.size() >= 4) {
        entry.expected_cf = strip(fields[2]);
        entry.expected_genera = strip(fields[3]);
      }
      out.entries.push_back(std::move(entry));
    } catch (const Error& e) {
      out.errors.push_back({line_no, line, e.what()});
    }
  }
  if (out.entries.empty()) fail(ErrorCode::kEmptyCatalog, "catalog has no valid rows");
  return out;
}

Catalog load_catalog_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::kIo, "cannot open " + path);
  return load_catalog(in);
}

Catalog load_embedded_catalog() {
  std::istringstream in{std::string(embedded_appendix_csv())};
  return load_catalog(in);
}

KnotRecord compute_record(std::string name, const Slope& slope) {
  return KnotRecord{.name = std::move(name), .profile = genus_profile(slope)};
}

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::kCsv;
  if (text == "json") return TableFormat::kJson;
  if (text == "latex") return TableFormat::kLatex;
  fail(ErrorCode::kUnknownFormat, "unknown table format '" + std::string(text) + "'");
}

std::string abbreviated_genera(const KnotRecord& record) {
  const GenusProfile& pr = record.profile;
  const std::string g = std::to_string(pr.genus);
  if (pr.attributes.torus) return "{" + g + ",torus}";
  if (pr.attributes.fib) return "{" + g + ",fib" + (pr.attributes.sym ? ",sym}" : "}");
  const auto values = pr.values();
  if (pr.attributes.sym)
    return "{" + g + ",sym," + std::to_string(values[0]) + "," + std::to_string(values[1]) + "}";
  std::string out = "{" + g;
  for (Int v : values) out += "," + std::to_string(v);
  return out + "}";
}

std::string latex_row(const KnotRecord& record) {
  const GenusProfile& pr = record.profile;
  const auto entries = pr.cf.entries();
  const bool has_negative = std::any_of(entries.begin(), entries.end(), [](Int c) { return c < 0; });
  std::string cf = has_negative ? "\\left\\{" : "\\{";
  for (std::size_t k = 0; k < entries.size(); ++k) {
    if (k) cf += ',';
    cf += entries[k] < 0 ? "\\bar{" + std::to_string(-entries[k]) + "}" : std::to_string(entries[k]);
  }
  cf += has_negative ? "\\right\\}" : "\\}";

  // Abbreviation words are wrapped in \text{...}; numbers stay bare.
  const std::string plain = abbreviated_genera(record);
  std::string genera = "\\{";
  std::string token;
  auto flush = [&](bool last) {
    const bool word = !token.empty() && std::isalpha(static_cast<unsigned char>(token[0]));
    genera += word ? "\\text{" + token + "}" : token;
    if (!last) genera += ',';
    token.clear();
  };
  for (char c : plain.substr(1, plain.size() - 2)) {
    if (c == ',') {
      flush(false);
    } else {
      token += c;
    }
  }
  flush(true);
  genera += "\\}";

  return latex_name(record.name) + " & \\text{" + pr.slope.to_string() + "} & " + cf + " & " +
         genera + " \\\\";
}

std::string render_table(std::span<const KnotRecord> records, TableFormat format) {
  std::ostringstream os;
  switch (format) {
    case TableFormat::kCsv: {
      for (std::size_t k = 0; k < kRecordHeader.size(); ++k)
        os << (k ? "," : "") << kRecordHeader[k];
      os << "\n";
      for (const auto& r : records) {
        const GenusProfile& pr = r.profile;
        os << csv_field(r.name) << ',' << pr.slope.p() << ',' << pr.slope.q() << ','
           << pr.dual.q() << ',' << csv_field(pr.cf.to_string()) << ',' << pr.genus << ','
           << csv_field(bracketed(pr.values())) << ','
           << csv_field(bracketed(attribute_words(pr.attributes))) << "\n";
      }
      break;
    }
    case TableFormat::kJson: {
      nlohmann::json out = nlohmann::json::array();
      for (const auto& r : records) {
        const GenusProfile& pr = r.profile;
        out.push_back({{"name", r.name},
                       {"p", pr.slope.p()},
                       {"q", pr.slope.q()},
                       {"qprime", pr.dual.q()},
                       {"cf", std::vector<Int>(pr.cf.entries().begin(), pr.cf.entries().end())},
                       {"genus", pr.genus},
                       {"genera", pr.values()},
                       {"attributes", attribute_words(pr.attributes)}});
      }
      os << out.dump(2) << "\n";
      break;
    }
    case TableFormat::kLatex: {
      os << "\\begin{array}{|c|c|c|c|}\n\\hline\nK&q/p&cont.frac&genera\\\\ \\hline\n";
      for (const auto& r : records) os << latex_row(r) << "\n";
      os << "\\hline\n\\end{array}\n";
      break;
    }
  }
  return os.str();
}

std::vector<KnotRecord> parse_records_csv(std::istream& in) {
  std::vector<KnotRecord> out;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    line = strip(line);
    if (line.empty()) continue;
    bool ok = true;
    const auto fields = split_csv_line(line, ok);
    if (!header_seen) {
      header_seen = true;
      if (!ok || fields != kRecordHeader)
        fail(ErrorCode::kMalformedText, "record header must be name,p,q,qprime,cf,genus,genera,attributes");
      continue;
    }
    const std::string where = "record line " + std::to_string(line_no);
    if (!ok || fields.size() != kRecordHeader.size())
      fail(ErrorCode::kMalformedText, where + ": expected 8 columns");
    const Slope slope = parse_fraction(fields[2] + "/" + fields[1]);
    if (std::to_string(slope.q()) != fields[2])
      fail(ErrorCode::kMalformedText, where + ": slope is not canonical");
    KnotRecord record = compute_record(fields[0], slope);
    const GenusProfile& pr = record.profile;
    if (fields[3] != std::to_string(pr.dual.q()) || fields[4] != pr.cf.to_string() ||
        fields[5] != std::to_string(pr.genus) || fields[6] != bracketed(pr.values()) ||
        fields[7] != bracketed(attribute_words(pr.attributes)))
      fail(ErrorCode::kMalformedText, where + ": stored columns disagree with the recomputation");
    out.push_back(std::move(record));
  }
  return out;
}

std::size_t AppendixReport::passed() const {
  return static_cast<std::size_t>(
      std::count_if(rows.begin(), rows.end(), [](const AppendixRowResult& r) { return r.ok; }));
}

AppendixReport verify_appendix() {
  const Catalog catalog = load_embedded_catalog();
  AppendixReport report;
  report.row_errors = catalog.errors.size();
  for (const auto& entry : catalog.entries) {
    const KnotRecord record = compute_record(entry.name, entry.slope);
    AppendixRowResult row;
    row.name = entry.name;
    row.fraction = entry.slope.to_string();
    row.expected_cf = entry.expected_cf.value_or("");
    row.actual_cf = record.profile.cf.to_string();
    row.expected_genera = entry.expected_genera.value_or("");
    row.actual_genera = abbreviated_genera(record);
    row.expected_attributes = words_in(row.expected_genera);
    row.actual_attributes = attribute_words(record.profile.attributes);
    row.ok = row.expected_cf == row.actual_cf && row.expected_genera == row.actual_genera &&
             row.expected_attributes == row.actual_attributes;
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace twobridge
