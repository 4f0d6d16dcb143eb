#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nilc/orthogonal.hpp"

namespace nilc {

// A nilpotent orbit of height 2, recorded through its dominant
// characteristic h and the abelian ideal psi = {alpha > 0 : alpha(h) = 2}.
struct Height2Orbit {
  std::string id;                  // "h2-" + diagram digits, "zero" for the zero orbit
  Vec diagram = zero_vec();        // weighted Dynkin diagram alpha_i(h)
  Coweight h;
  std::vector<RootId> psi;         // Phi(2, h), sorted
  std::vector<RootId> phi1;        // Phi(1, h), sorted
  std::vector<int> delta_L;        // simple indices with label 0
  std::vector<RootId> cascade;     // gamma_1 = theta, gamma_2, ...
  RootId psi_min = -1;             // unique minimal root of psi
  std::vector<RootId> delta_G0;    // simple roots of L plus psi_min
  // sub_psi[i] = Psi_i for i = 1..r (index 0 holds the empty ideal).
  std::vector<std::vector<RootId>> sub_psi;
  // delta_L_i and delta_star_i for i = 0..r, as simple indices.
  std::vector<std::vector<int>> delta_L_i;
  std::vector<std::vector<int>> delta_star;

  int rank() const { return static_cast<int>(cascade.size()); }
  int dim() const { return static_cast<int>(phi1.size() + 2 * psi.size()); }
};

// All non-zero orbits of height 2, sorted by dimension then diagram.
std::vector<Height2Orbit> build_catalogue(const RootSystem& sys);

// Builds the record for a dominant h that passes the cascade round trip.
// Returns false when the labels are not the diagram of a height-2 orbit.
bool make_orbit(const RootSystem& sys, const Vec& diagram, Height2Orbit& out);

// Recomputes both descriptions of the ideal chain; throws ChainMismatch.
std::vector<std::vector<RootId>> sub_ideal_chain(const RootSystem& sys, const Height2Orbit& o);

bool g_closure_leq(const Height2Orbit& a, const Height2Orbit& b);

// Closure-maximal entries.
std::vector<const Height2Orbit*> maximal_orbits(const std::vector<Height2Orbit>& cat);

// Entry whose diagram is weighted_dynkin(S); nullptr for the empty set.
// Throws NotInCatalogue when nothing matches.
const Height2Orbit* g_orbit_of_set(const RootSystem& sys, const std::vector<Height2Orbit>& cat,
                                   const OrthSet& S);
const Height2Orbit& find_orbit(const std::vector<Height2Orbit>& cat, std::string_view id);

}  // namespace nilc
