#pragma once

#include <vector>

#include "nilc/orth_set.hpp"
#include "nilc/weyl.hpp"

namespace nilc {

// Element of the coroot lattice in simple coroot coordinates.
struct Coweight {
  Vec coords = zero_vec();
  friend bool operator==(const Coweight&, const Coweight&) = default;
};

// alpha_i(h) for every simple root.
Vec labels(const RootSystem& sys, const Coweight& h);
int evaluate(const RootSystem& sys, const Coweight& h, RootId beta);

// h_S = sum of the coroots of S.
Coweight characteristic(const RootSystem& sys, const std::vector<RootId>& roots);
inline Coweight characteristic(const RootSystem& sys, const OrthSet& S) { return characteristic(sys, S.roots); }

// max over all roots gamma of gamma(h_S).
int height(const RootSystem& sys, const OrthSet& S);

// Reflects at the lowest-index simple root with a negative label until
// every label is non-negative.
Coweight dominant_conjugate(const RootSystem& sys, const Coweight& h);
Vec weighted_dynkin(const RootSystem& sys, const OrthSet& S);

// Greedy choice of the unique maximal root orthogonal to everything chosen
// so far; throws NonUniqueMaximum on a tie.
std::vector<RootId> cascade(const RootSystem& sys, const std::vector<RootId>& psi);
// Same construction from the bottom, picking unique minimal roots.
std::vector<RootId> lower_cascade(const RootSystem& sys, const std::vector<RootId>& psi);

// 2 * #short + #long
int rank_G(const RootSystem& sys, const OrthSet& S);

// All strongly orthogonal subsets of psi (including the empty set).
std::vector<OrthSet> enumerate_ort(const RootSystem& sys, const std::vector<RootId>& psi);
// All strongly orthogonal subsets of the full root system whose height is at
// most max_height (max_height < 0 means no bound).
std::vector<OrthSet> enumerate_strongly_orthogonal(const RootSystem& sys, int max_height);
inline std::vector<OrthSet> enumerate_height2_sets(const RootSystem& sys) {
  return enumerate_strongly_orthogonal(sys, 2);
}

OrthSet apply(const WeylGroup& W, const WeylElement& w, const OrthSet& S);

}  // namespace nilc
