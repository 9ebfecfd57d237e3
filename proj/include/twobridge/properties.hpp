#pragma once

// Property suite shared by `verify` and the acceptance tests. Each check
// sweeps a family of inputs and reports how many cases failed, with the first
// failing case spelled out.

#include <string>
#include <vector>

#include "twobridge/checked.hpp"

namespace twobridge {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::string detail;  // first failure, or a short summary

  bool ok() const { return failures == 0 && checked > 0; }
};

/// evaluate(expand(s)) == s with even length and nonzero even entries.
PropertyResult check_cf_roundtrip(Int p_max);
/// expand(q'/p) == reverse(expand(q/p)).
PropertyResult check_reversal_duality(Int p_max);
PropertyResult check_appendix();
/// Gap examples for 1 <= g <= g_hat <= g_max and arc gaps for |d| <= d_max.
PropertyResult check_gap_examples(int g_max, Int d_max);
/// K(n) for n = 1..n_max: cycle and vector constructions agree, the top
/// simplices fill the cube exactly, and chi = 1.
PropertyResult check_kakimizu_oracle(int n_max);
/// Every slope with p <= p_max: dimension, chi = 1 and the h dichotomy of the
/// quotient complex.
PropertyResult check_quotient_structure(Int p_max);
/// Palindromic slopes with p <= p_max and genus <= n_max: the h' fixed set has
/// dimension n - #H/2.
PropertyResult check_exceptional_involution(Int p_max, int n_max);
/// Both quotient constructions agree for slopes with p <= p_max, genus <= n_max.
PropertyResult check_route_agreement(Int p_max, int n_max);
/// CSV rendering of the embedded table parses back to the same records.
PropertyResult check_table_roundtrip();

/// Everything above, with bounds derived from p_max.
std::vector<PropertyResult> run_property_suite(Int p_max);

}  // namespace twobridge
