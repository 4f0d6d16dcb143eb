#pragma once

#include <string>
#include <vector>

#include "nilc/root_system.hpp"

namespace nilc {

// Reference list of height-2 orbits, one row per orbit, with the classical
// partition or Bala-Carter label kept only as display text.
struct ReferenceRow {
  Vec diagram = zero_vec();
  int rank_r = 0;       // number of cascade roots
  std::string label;
};

std::vector<ReferenceRow> reference_rows(const CartanType& type);

}  // namespace nilc
