#pragma once

#include <unordered_set>
#include <vector>

#include "nilc/orbit_poset.hpp"

// Slow, independent reimplementations used to cross-check the main code.
namespace nilc::oracle {

inline constexpr int kSubwordMaxLength = 12;

// u <= w iff u is a subword product of a reduced word of w.  TooLong when
// l(w) exceeds kSubwordMaxLength.
bool bruhat_leq_subword(const WeylGroup& W, const WeylElement& u, const WeylElement& w);
bool bruhat_leq_subword(const AffineWeylGroup& A, const AffineWeylElement& x, const AffineWeylElement& y);

// Every element below y, as the set of all subword products.
std::unordered_set<WeylElement, WeylElementHash> subword_ideal(const WeylGroup& W, const WeylElement& w);
std::unordered_set<AffineWeylElement, AffineWeylElementHash> subword_ideal(const AffineWeylGroup& A,
                                                                           const AffineWeylElement& y);

// Number of positive affine roots sent to negative ones, scanning the delta
// coefficients that can change sign.
int inversion_count_window(const AffineWeylGroup& A, const AffineWeylElement& x);

// All affine Weyl group elements of length at most max_len.
std::vector<AffineWeylElement> elements_up_to(const AffineWeylGroup& A, int max_len);

// Some (v, R') in the fiber over R has v <= w_adm(S) and sigma below sigma_adm(S).
bool closure_leq_via_resolution(const Engine& E, const Height2Orbit& o, const OrthSet& R, const OrthSet& S);

// Z S intersected with the roots is S together with -S.
bool lattice_roots_ok(const RootSystem& sys, const OrthSet& S);
// Every real affine root a with sigma(a) = -a has 2a = +-b +- b' for b, b' in S hat.
bool real_roots_ok(const AffineWeylGroup& A, const OrthSet& S);

}  // namespace nilc::oracle
