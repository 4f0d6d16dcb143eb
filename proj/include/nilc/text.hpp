#pragma once

#include <string>
#include <string_view>

#include "nilc/orth_set.hpp"

namespace nilc {

// Roots are written as comma separated simple-root coordinates, "1,-1,0".
std::string format_vec(const Vec& v, int rank, std::string_view sep = ",");
std::string format_root(const RootSystem& sys, RootId r);
RootId parse_root(const RootSystem& sys, std::string_view text);

// Sets are written as roots separated by ';'.  The empty string or "{}"
// denotes the empty set.
std::string format_set(const RootSystem& sys, const OrthSet& S);
OrthSet parse_set(const RootSystem& sys, std::string_view text);

// Weighted Dynkin diagram as a digit string, e.g. "0020".
std::string format_diagram(const Vec& labels, int rank);

// Parses "A", "B", ... into a CartanType (InvalidRank when unsupported).
CartanType parse_type(std::string_view letter, int rank);

}  // namespace nilc
