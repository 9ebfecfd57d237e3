// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <string>

#include "twobridge/properties.hpp"

namespace {

using twobridge::PropertyResult;

struct Criterion {
  int id;
  const char* title;
  std::optional<double> limit_seconds;
  std::function<PropertyResult()> run;
};

bool report(const Criterion& c) {
  const auto start = std::chrono::steady_clock::now();
  PropertyResult r;
  try {
    r = c.run();
  } catch (const std::exception& e) {
    r.failures = 1;
    r.detail = std::string("exception: ") + e.what();
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = !c.limit_seconds || seconds < *c.limit_seconds;
  const bool ok = r.ok() && in_time;
  std::string timing = std::to_string(seconds).substr(0, 6) + " s";
  if (c.limit_seconds) timing += ", limit " + std::to_string(static_cast<int>(*c.limit_seconds)) + " s";
  std::printf("[%s] criterion %d: %s: %zu checks, %zu failures; %s (%s)\n", ok ? "PASS" : "FAIL",
              c.id, c.title, r.checked, r.failures, r.detail.c_str(), timing.c_str());
  return ok;
}

}  // namespace

int main() {
  using namespace twobridge;
  const Criterion criteria[] = {
      {1, "appendix reproduction", 1.0, [] { return check_appendix(); }},
      {2, "cf roundtrip and shape, p <= 1001", 10.0, [] { return check_cf_roundtrip(1001); }},
      {3, "reversal duality, p <= 1001", std::nullopt, [] { return check_reversal_duality(1001); }},
      {4, "gap corollaries", std::nullopt, [] { return check_gap_examples(6, 6); }},
      {5, "K(n) oracle equivalence, n <= 3", std::nullopt, [] { return check_kakimizu_oracle(3); }},
      {6, "quotient structure, p <= 200", std::nullopt, [] { return check_quotient_structure(200); }},
      {7, "exceptional involution, p <= 500, n <= 5", std::nullopt,
       [] { return check_exceptional_involution(500, 5); }},
  };
  int failed = 0;
  for (const auto& c : criteria) failed += report(c) ? 0 : 1;
  std::printf("%d/7 criteria passed\n", 7 - failed);
  return failed == 0 ? 0 : 1;
}
