#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nilc/engine.hpp"

namespace nilc {

// B-orbit of e_S in the height-2 nilpotent variety.
struct BOrbit {
  OrthSet set;
  AffineInvolution sigma;  // sigma_{S hat}
  int length = 0;          // l(sigma)
  int dim = 0;             // (l(sigma) + |S|) / 2
  std::string g_orbit;     // catalogue id, "zero" for the empty set
};

// B-orbit of (w, S) in the resolution G x_P a.
struct TildePair {
  WeylElement w;
  OrthSet set;
  AffineInvolution sigma_S;  // sigma of S hat
  AffineInvolution sigma;    // sigma of w(S) hat
  int w_length = 0;
  int dim = 0;               // l(w) + L(sigma_S)
  bool admissible = false;
};

// Dense boolean relation, rows as bitsets.
class Relation {
 public:
  Relation() = default;
  explicit Relation(int n) : n_(n), words_((n + 63) / 64), bits_(static_cast<std::size_t>(n) * words_, 0) {}
  int size() const { return n_; }
  bool test(int i, int j) const { return (bits_[i * words_ + j / 64] >> (j % 64)) & 1u; }
  void set(int i, int j) { bits_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64); }
  const std::uint64_t* row(int i) const { return bits_.data() + static_cast<std::size_t>(i) * words_; }
  int words() const { return words_; }

 private:
  int n_ = 0;
  int words_ = 0;
  std::vector<std::uint64_t> bits_;
};

template <class Node>
struct Poset {
  std::vector<Node> nodes;
  Relation leq;                            // leq.test(i, j) iff node i <= node j
  std::vector<std::pair<int, int>> covers;  // (lower, upper)
};

using N2Poset = Poset<BOrbit>;
using TildePoset = Poset<TildePair>;

// Transitive reduction of a partial order.
std::vector<std::pair<int, int>> hasse(const Relation& leq);

BOrbit make_borbit(const Engine& E, const OrthSet& S);
N2Poset enumerate_n2(const Engine& E);
// The B-orbits contained in the closure X of the given G-orbit.
std::vector<OrthSet> ort_x_sets(const Engine& E, const Height2Orbit& o);
N2Poset enumerate_ort_x(const Engine& E, const Height2Orbit& o);
// Closure order on height <= 2 B-orbits; HeightOutOfRange otherwise.
bool closure_leq_n2(const Engine& E, const OrthSet& R, const OrthSet& S);

TildePair make_tilde_pair(const Engine& E, const WeylElement& w, const OrthSet& S);
bool tilde_leq(const Engine& E, const TildePair& p, const TildePair& q);
TildePoset enumerate_tilde(const Engine& E, const Height2Orbit& o);

// All (w, w^{-1} R) with w in W^P and w^{-1}(R) inside psi; the admissible
// one is flagged.  NotInOrtX when empty.
std::vector<TildePair> fiber(const Engine& E, const Height2Orbit& o, const OrthSet& R);
TildePair admissible_pair(const Engine& E, const Height2Orbit& o, const OrthSet& R);
// Compares the fiber with the minimal coset representatives of the Levi
// factor acting on it; true when the natural map is an order isomorphism.
bool fiber_iso_check(const Engine& E, const Height2Orbit& o, const OrthSet& R);

struct Descent {
  int alpha = 0;  // 0-based simple index
  bool external = false;
  DescentKind kind = DescentKind::None;  // for internal descents
};

std::vector<Descent> descents(const Engine& E, const Height2Orbit& o, const TildePair& p);
// NotADescent when alpha is not a descent of p.
TildePair f_alpha(const Engine& E, const Height2Orbit& o, const TildePair& p, int alpha);
// Move on height-2 sets along a descent of sigma_{S hat}.
OrthSet f_alpha_set(const Engine& E, const OrthSet& S, int alpha);

}  // namespace nilc
