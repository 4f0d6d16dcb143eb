#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilc/orbit_poset.hpp"

namespace nilc {

struct ExportNode {
  std::string id;
  std::vector<std::vector<int>> roots;
  int dim = 0;
  std::string sigma_word;
  std::string g_orbit;
  // Only for pairs in the resolution.
  std::string w_word;
  bool admissible = false;

  friend bool operator==(const ExportNode&, const ExportNode&) = default;
};

struct PosetDocument {
  std::string type;
  int rank = 0;
  std::string kind;   // "N2", "X" or "Xtilde"
  std::string orbit;  // empty for N2
  std::vector<ExportNode> nodes;
  std::vector<std::pair<std::string, std::string>> covers;

  friend bool operator==(const PosetDocument&, const PosetDocument&) = default;
};

PosetDocument document_of(const Engine& E, const N2Poset& P, const std::string& kind = "N2",
                          const std::string& orbit = "");
PosetDocument document_of(const Engine& E, const TildePoset& P, const Height2Orbit& o);

std::string to_json(const PosetDocument& doc);
// ParseError on malformed input.
PosetDocument document_from_json(std::string_view text);
std::string to_dot(const PosetDocument& doc);

}  // namespace nilc
