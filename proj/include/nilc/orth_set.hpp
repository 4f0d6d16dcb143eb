#pragma once

#include <vector>

#include "nilc/root_system.hpp"

namespace nilc {

// A set of pairwise strongly orthogonal roots, kept sorted by RootId, which
// is the canonical root order.
struct OrthSet {
  std::vector<RootId> roots;

  bool empty() const { return roots.empty(); }
  std::size_t size() const { return roots.size(); }
  bool contains(RootId r) const;

  friend bool operator==(const OrthSet&, const OrthSet&) = default;
  friend auto operator<=>(const OrthSet& a, const OrthSet& b) {
    if (a.roots.size() != b.roots.size()) return a.roots.size() <=> b.roots.size();
    return a.roots <=> b.roots;
  }
};

struct OrthSetHash {
  std::size_t operator()(const OrthSet& s) const noexcept {
    std::size_t h = 0x9e3779b97f4a7c15ull;
    for (RootId r : s.roots) h = (h ^ static_cast<std::size_t>(r)) * 0x100000001b3ull;
    return h;
  }
};

// Sorts, checks pairwise strong orthogonality (NotStronglyOrthogonal).
OrthSet make_orth_set(const RootSystem& sys, std::vector<RootId> roots);
// Same but from coordinates (NotARoot on bad input).
OrthSet make_orth_set(const RootSystem& sys, const std::vector<Vec>& roots);

}  // namespace nilc
