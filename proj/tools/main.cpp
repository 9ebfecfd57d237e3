// twobridge: command-line front end.
//
// Exit status: 0 success, 1 validation error (bad input, bound exceeded),
// 2 property or internal-invariant failure. Failures print one line
// "error: <code>: <message>" on stderr.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "twobridge/catalog.hpp"
#include "twobridge/invariants.hpp"
#include "twobridge/kakimizu.hpp"
#include "twobridge/properties.hpp"
#include "twobridge/slope.hpp"

namespace {

using namespace twobridge;
namespace kk = twobridge::kakimizu;

constexpr int kExitValidation = 1;
constexpr int kExitProperty = 2;

std::string join(const std::vector<Int>& xs, const char* open, const char* close) {
  std::string out = open;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + std::to_string(xs[k]);
  return out + close;
}

std::string join_words(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t k = 0; k < xs.size(); ++k) out += (k ? "," : "") + xs[k];
  return out.empty() ? "none" : out;
}

void print_profile(const Slope& s, bool as_json) {
  const GenusProfile pr = genus_profile(s);
  if (as_json) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& e : pr.entries)
      entries.push_back({{"class", to_string(e.marked)}, {"genus", e.genus}});
    const nlohmann::json out = {
        {"slope", pr.slope.to_string()},
        {"dual", pr.dual.to_string()},
        {"cf", std::vector<Int>(pr.cf.entries().begin(), pr.cf.entries().end())},
        {"genus", pr.genus},
        {"symmetry", to_string(pr.symmetry)},
        {"inversions", pr.inversion_count},
        {"strong_classes", pr.strong_equivalence_class_count},
        {"genera", pr.values()},
        {"entries", entries},
        {"attributes", attribute_words(pr.attributes)}};
    std::cout << out.dump(2) << "\n";
    return;
  }
  std::cout << "slope " << pr.slope << "\n"
            << "dual " << pr.dual << "\n"
            << "cf " << pr.cf << "\n"
            << "genus " << pr.genus << "\n"
            << "symmetry " << to_string(pr.symmetry) << "\n"
            << "genera " << join(pr.values(), "(", ")") << "\n";
  for (const auto& e : pr.entries) std::cout << "  " << to_string(e.marked) << " " << e.genus << "\n";
  std::cout << "attributes " << join_words(attribute_words(pr.attributes)) << "\n";
}

void print_classification(const Slope& s) {
  const Classification cls = classify_marked_classes(s);
  const GenusProfile pr = genus_profile(s);
  std::cout << "slope " << s << "\n"
            << "symmetry " << to_string(cls.symmetry) << "\n"
            << "inversions " << pr.inversion_count << "\n"
            << "strong classes " << pr.strong_equivalence_class_count << "\n"
            << "marked classes " << cls.classes.size() << "\n";
  for (const auto& c : cls.classes) std::cout << "  " << to_string(c) << "\n";
}

void print_kakimizu(const Slope& s, const std::string& export_format, int max_n, bool reduced) {
  const kk::QuotientComplex qc =
      reduced ? kk::build_reduced_complex(s) : kk::build_quotient_complex(s, max_n);
  const kk::HInvolutionReport h = kk::involution_h_report(qc);
  std::optional<kk::HPrimeInvolutionReport> hp;
  if (slope_predicates(s).is_palindromic) hp = kk::involution_hprime_report(s, qc);

  if (export_format == "json") {
    std::cout << kk::export_json(s, qc, h, hp);
    return;
  }
  if (export_format == "graph") {
    std::cout << kk::export_graph(s, qc);
    return;
  }
  std::vector<Int> hopf(qc.hopf.indices.begin(), qc.hopf.indices.end());
  std::cout << "slope " << s << "\n"
            << "n " << qc.n << "\n"
            << "hopf " << join(hopf, "{", "}") << "\n"
            << "vertices " << qc.vertices.size() << "\n"
            << "facets " << qc.complex.facets().size() << "\n"
            << "dim " << qc.dimension() << "\n"
            << "chi " << qc.euler_characteristic() << "\n";
  if (h.fixed_vertex) {
    std::cout << "h fixed vertex " << qc.vertices[*h.fixed_vertex].to_string() << "\n";
  } else {
    std::cout << "h inverted edge " << qc.vertices[h.inverted_edge->first].to_string() << " "
              << qc.vertices[h.inverted_edge->second].to_string() << "\n";
  }
  if (hp) std::cout << "h' fixed dimension " << hp->rank_dimension << "\n";
}

int print_table(const std::string& input, const std::string& format_text) {
  const TableFormat format = parse_table_format(format_text);
  const Catalog catalog = input.empty() ? load_embedded_catalog() : load_catalog_file(input);
  for (const auto& e : catalog.errors)
    std::cerr << "warning: line " << e.line << ": " << e.message << "\n";
  std::vector<KnotRecord> records;
  records.reserve(catalog.entries.size());
  for (const auto& e : catalog.entries) records.push_back(compute_record(e.name, e.slope));
  std::cout << render_table(records, format);
  return 0;
}

int run_verify(Int p_max) {
  bool ok = true;
  for (const auto& r : run_property_suite(p_max)) {
    ok = ok && r.ok();
    std::cout << (r.ok() ? "PASS " : "FAIL ") << r.name << " (" << r.checked << " checks, "
              << r.failures << " failures): " << r.detail << "\n";
  }
  return ok ? 0 : kExitProperty;
}

void print_gap(int g, Int g_hat) {
  const GapExample ex = find_gap_example(g, g_hat);
  std::cout << "slope " << ex.slope << "\n"
            << "cf " << ex.cf << "\n"
            << "class " << to_string(ex.marked) << "\n"
            << "genus " << ex.genus << "\n"
            << "equivariant genus " << ex.equivariant << "\n";
}

void print_arc_gap(Int d) {
  const ArcGapExample ex = find_arc_gap_example(d);
  std::cout << "slope " << ex.slope << "\n"
            << "cf " << ex.cf << "\n"
            << to_string(ex.arcs.first) << " " << ex.short_genus << "\n"
            << to_string(ex.arcs.second) << " " << ex.long_genus << "\n"
            << "difference " << ex.short_genus - ex.long_genus << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariants of 2-bridge knots K(q/p)"};
  app.require_subcommand(1);

  std::string fraction;
  bool as_json = false;
  std::string export_format;
  int max_n = kk::kDefaultMaxN;
  bool reduced = false;
  std::string input;
  std::string format = "csv";
  Int p_max = 1001;
  int g = 0;
  Int g_hat = 0;
  Int d = 0;

  auto* cf = app.add_subcommand("cf", "Even continued fraction of q/p");
  cf->add_option("fraction", fraction, "Slope q/p")->required();

  auto* profile = app.add_subcommand("profile", "Seifert and equivariant genera");
  profile->add_option("fraction", fraction, "Slope q/p")->required();
  profile->add_flag("--json", as_json, "Emit JSON");

  auto* classify = app.add_subcommand("classify", "Marked strongly invertible classes");
  classify->add_option("fraction", fraction, "Slope q/p")->required();

  auto* kakimizu = app.add_subcommand("kakimizu", "Kakimizu complex and inversion actions");
  kakimizu->add_option("fraction", fraction, "Slope q/p")->required();
  kakimizu->add_option("--export", export_format, "Export format")
      ->check(CLI::IsMember({"json", "graph"}));
  kakimizu->add_option("--max-n", max_n, "Largest genus enumerated directly")
      ->check(CLI::PositiveNumber);
  kakimizu->add_flag("--reduced", reduced, "Build in the quotient lattice (no genus bound)");

  auto* table = app.add_subcommand("table", "Genera table for a knot catalog");
  table->add_option("--input", input, "CSV with header name,fraction (default: embedded table)");
  table->add_option("--format", format, "csv, json or latex");

  auto* verify = app.add_subcommand("verify", "Run the property suite");
  verify->add_option("--p-max", p_max, "Largest denominator swept")->check(CLI::Range(3, 100001));

  auto* gap = app.add_subcommand("gap", "Knot with genus g and equivariant genus ghat");
  gap->add_option("g", g)->required();
  gap->add_option("ghat", g_hat)->required();

  auto* arc_gap = app.add_subcommand("arc-gap", "Knot whose short and long arc genera differ by d");
  arc_gap->add_option("d", d)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: usage: " << e.what() << "\n";
    return kExitValidation;
  }

  try {
    if (*cf) {
      std::cout << expand_even_cf(parse_fraction(fraction)) << "\n";
    } else if (*profile) {
      print_profile(parse_fraction(fraction), as_json);
    } else if (*classify) {
      print_classification(parse_fraction(fraction));
    } else if (*kakimizu) {
      print_kakimizu(parse_fraction(fraction), export_format, max_n, reduced);
    } else if (*table) {
      return print_table(input, format);
    } else if (*verify) {
      return run_verify(p_max);
    } else if (*gap) {
      print_gap(g, g_hat);
    } else if (*arc_gap) {
      print_arc_gap(d);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << error_code_name(e.code()) << ": " << e.what() << "\n";
    return e.is_validation() ? kExitValidation : kExitProperty;
  }
  return 0;
}
