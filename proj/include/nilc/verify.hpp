#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "nilc/root_system.hpp"

// Exhaustive cross-checks against the oracles; shared by the CLI and the
// acceptance test binary.
namespace nilc::verify {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

std::vector<CartanType> reference_types();   // A1-A8, B2-B8, C2-C8, D3-D8, E6-E8, F4, G2
std::vector<CartanType> types_up_to_rank(int max_rank);

// Closure-maximal orbit count expected for a type.
int expected_components(const CartanType& t);

CheckResult table_reproduction();      // catalogue against the reference rows
CheckResult dimension_formula();       // max B-orbit dimension in X is dim Ge
CheckResult bruhat_equivalence();      // lifting recursion against subwords
CheckResult length_equivalence();      // peeling against inversion counting
CheckResult closure_cross_validation(); // closure order against the resolution
CheckResult lemma_suite();             // injectivity, heights, lattice lemmas
CheckResult move_calculus();           // descents and F_alpha
CheckResult desk_counts();             // small frozen examples

struct Criterion {
  const char* key;
  std::function<CheckResult()> run;
};
std::vector<Criterion> all_criteria();
// Suite names: all, catalogue, bruhat, poset, lemmas.  Empty for unknown.
std::vector<Criterion> suite(std::string_view name);

}  // namespace nilc::verify
