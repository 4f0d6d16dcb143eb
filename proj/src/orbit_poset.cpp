#include "nilc/orbit_poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "nilc/text.hpp"

namespace nilc {

std::vector<std::pair<int, int>> hasse(const Relation& leq) {
  const int n = leq.size();
  const int W = leq.words();
  std::vector<std::pair<int, int>> out;
  std::vector<std::uint64_t> strict(static_cast<std::size_t>(n) * W), reach(W);
  for (int i = 0; i < n; ++i) {
    std::copy(leq.row(i), leq.row(i) + W, strict.begin() + static_cast<std::size_t>(i) * W);
    strict[static_cast<std::size_t>(i) * W + i / 64] &= ~(std::uint64_t{1} << (i % 64));
  }
  for (int i = 0; i < n; ++i) {
    std::fill(reach.begin(), reach.end(), 0);
    const std::uint64_t* si = &strict[static_cast<std::size_t>(i) * W];
    for (int k = 0; k < n; ++k) {
      if (!((si[k / 64] >> (k % 64)) & 1u)) continue;
      const std::uint64_t* sk = &strict[static_cast<std::size_t>(k) * W];
      for (int w = 0; w < W; ++w) reach[w] |= sk[w];
    }
    for (int j = 0; j < n; ++j)
      if (((si[j / 64] >> (j % 64)) & 1u) && !((reach[j / 64] >> (j % 64)) & 1u)) out.emplace_back(i, j);
  }
  return out;
}

namespace {

template <class Node, class Leq>
void finish(Poset<Node>& P, Leq&& leq) {
  const int n = static_cast<int>(P.nodes.size());
  P.leq = Relation(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i == j || leq(P.nodes[i], P.nodes[j])) P.leq.set(i, j);
  P.covers = hasse(P.leq);
}

bool subset_of_sorted(const OrthSet& S, const std::vector<RootId>& sorted) {
  for (RootId r : S.roots)
    if (!std::binary_search(sorted.begin(), sorted.end(), r)) return false;
  return true;
}

// Pair (g1, g2) in S with g1 - g2 = 2 beta.
std::pair<RootId, RootId> real_pair(const RootSystem& sys, const OrthSet& S, RootId beta) {
  const Vec& b = sys.coords(beta);
  for (RootId g1 : S.roots)
    for (RootId g2 : S.roots) {
      if (g1 == g2) continue;
      bool ok = true;
      for (int i = 0; i < sys.rank(); ++i)
        if (sys.coords(g1)[i] - sys.coords(g2)[i] != 2 * b[i]) { ok = false; break; }
      if (ok) return {g1, g2};
    }
  throw std::logic_error("real descent without a matching pair in " + format_set(sys, S));
}

OrthSet real_move(const RootSystem& sys, const OrthSet& S, RootId beta) {
  auto [g1, g2] = real_pair(sys, S, beta);
  std::vector<RootId> out;
  for (RootId r : S.roots)
    if (r != g1 && r != g2) out.push_back(r);
  out.push_back(sys.add(beta, g2));
  return make_orth_set(sys, std::move(out));
}

}  // namespace

BOrbit make_borbit(const Engine& E, const OrthSet& S) {
  BOrbit b;
  b.set = S;
  b.sigma = E.affine().sigma_of_set(S);
  b.length = E.affine().length(b.sigma.element);
  b.dim = (b.length + b.sigma.moved_rank) / 2;
  const Height2Orbit* o = g_orbit_of_set(E.system(), E.catalogue(), S);
  b.g_orbit = o ? o->id : "zero";
  return b;
}

namespace {

N2Poset poset_of_sets(const Engine& E, const std::vector<OrthSet>& sets) {
  N2Poset P;
  for (const auto& S : sets) P.nodes.push_back(make_borbit(E, S));
  std::sort(P.nodes.begin(), P.nodes.end(), [](const BOrbit& a, const BOrbit& b) {
    return std::tie(a.dim, a.set) < std::tie(b.dim, b.set);
  });
  finish(P, [&](const BOrbit& a, const BOrbit& b) {
    return a.length <= b.length && E.affine().bruhat_leq(a.sigma.element, b.sigma.element);
  });
  return P;
}

}  // namespace

N2Poset enumerate_n2(const Engine& E) { return poset_of_sets(E, enumerate_height2_sets(E.system())); }

std::vector<OrthSet> ort_x_sets(const Engine& E, const Height2Orbit& o) {
  std::vector<OrthSet> out;
  auto reps = E.weyl().min_coset_reps(o.delta_L);
  for (const auto& S : enumerate_ort(E.system(), o.psi))
    for (const auto& w : reps) out.push_back(apply(E.weyl(), w, S));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

N2Poset enumerate_ort_x(const Engine& E, const Height2Orbit& o) { return poset_of_sets(E, ort_x_sets(E, o)); }

bool closure_leq_n2(const Engine& E, const OrthSet& R, const OrthSet& S) {
  for (const OrthSet* X : {&R, &S}) {
    int h = height(E.system(), *X);
    if (h > 2)
      throw Error(ErrorKind::HeightOutOfRange,
                  format_set(E.system(), *X) + " has height " + std::to_string(h));
  }
  const auto& A = E.affine();
  return A.bruhat_leq(A.sigma_of_set(R).element, A.sigma_of_set(S).element);
}

TildePair make_tilde_pair(const Engine& E, const WeylElement& w, const OrthSet& S) {
  TildePair p;
  p.w = w;
  p.set = S;
  p.sigma_S = E.affine().sigma_of_set(S);
  p.sigma = E.affine().sigma_of_set(apply(E.weyl(), w, S));
  p.w_length = E.weyl().length(w);
  p.dim = p.w_length + E.affine().involution_length(p.sigma_S);
  return p;
}

bool tilde_leq(const Engine& E, const TildePair& p, const TildePair& q) {
  return E.weyl().bruhat_leq(p.w, q.w) && E.affine().bruhat_leq(p.sigma.element, q.sigma.element);
}

TildePoset enumerate_tilde(const Engine& E, const Height2Orbit& o) {
  TildePoset P;
  auto reps = E.weyl().min_coset_reps(o.delta_L);
  for (const auto& S : enumerate_ort(E.system(), o.psi))
    for (const auto& w : reps) P.nodes.push_back(make_tilde_pair(E, w, S));
  // Admissible = shortest w among the pairs with the same image w(S).
  std::map<OrthSet, std::vector<int>> by_image;
  for (int k = 0; k < static_cast<int>(P.nodes.size()); ++k)
    by_image[apply(E.weyl(), P.nodes[k].w, P.nodes[k].set)].push_back(k);
  for (auto& [R, ks] : by_image) {
    int best = *std::min_element(ks.begin(), ks.end(), [&](int a, int b) {
      return P.nodes[a].w_length < P.nodes[b].w_length;
    });
    int count = 0;
    for (int k : ks) count += P.nodes[k].w_length == P.nodes[best].w_length;
    if (count != 1) throw std::logic_error("admissible pair not unique over " + format_set(E.system(), R));
    P.nodes[best].admissible = true;
  }
  std::vector<std::pair<std::vector<int>, int>> keys;
  for (int k = 0; k < static_cast<int>(P.nodes.size()); ++k) keys.emplace_back(E.weyl().reduced_word(P.nodes[k].w), k);
  std::vector<int> order(P.nodes.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const auto& x = P.nodes[a];
    const auto& y = P.nodes[b];
    return std::tie(x.dim, x.w_length, keys[a].first, x.set) < std::tie(y.dim, y.w_length, keys[b].first, y.set);
  });
  std::vector<TildePair> sorted;
  for (int k : order) sorted.push_back(std::move(P.nodes[k]));
  P.nodes = std::move(sorted);
  finish(P, [&](const TildePair& a, const TildePair& b) { return tilde_leq(E, a, b); });
  return P;
}

std::vector<TildePair> fiber(const Engine& E, const Height2Orbit& o, const OrthSet& R) {
  const auto& W = E.weyl();
  std::vector<TildePair> out;
  for (const auto& w : W.min_coset_reps(o.delta_L)) {
    OrthSet S = apply(W, W.inverse(w), R);
    if (subset_of_sorted(S, o.psi)) out.push_back(make_tilde_pair(E, w, S));
  }
  if (out.empty())
    throw Error(ErrorKind::NotInOrtX, format_set(E.system(), R) + " is not in the closure of " + o.id);
  std::sort(out.begin(), out.end(), [](const TildePair& a, const TildePair& b) { return a.w_length < b.w_length; });
  if (out.size() > 1 && out[0].w_length == out[1].w_length)
    throw std::logic_error("admissible pair not unique over " + format_set(E.system(), R));
  out[0].admissible = true;
  return out;
}

TildePair admissible_pair(const Engine& E, const Height2Orbit& o, const OrthSet& R) {
  return fiber(E, o, R).front();
}

bool fiber_iso_check(const Engine& E, const Height2Orbit& o, const OrthSet& R) {
  const auto& W = E.weyl();
  const auto& sys = E.system();
  auto F = fiber(E, o, R);
  const int i = rank_G(sys, F.front().set);
  for (const auto& p : F)
    if (rank_G(sys, p.set) != i) return false;
  if (i > o.rank()) return false;

  // The unique pair for the smaller orbit with characteristic h_i.
  std::vector<std::pair<WeylElement, OrthSet>> base;
  for (const auto& w : W.min_coset_reps(o.delta_L_i[i])) {
    OrthSet S = apply(W, W.inverse(w), R);
    if (subset_of_sorted(S, o.sub_psi[i])) base.emplace_back(w, S);
  }
  if (base.size() != 1) return false;
  const auto& [w0, S0] = base.front();

  std::vector<int> K;
  for (int k : o.delta_star[i])
    if (std::find(o.delta_L.begin(), o.delta_L.end(), k) != o.delta_L.end()) K.push_back(k);
  auto U = W.min_coset_reps(o.delta_star[i], K);
  if (U.size() != F.size()) return false;

  std::vector<int> image(U.size(), -1);
  std::vector<char> hit(F.size(), 0);
  for (std::size_t a = 0; a < U.size(); ++a) {
    auto [vP, vL] = W.coset_decompose(W.compose(w0, U[a]), o.delta_L);
    OrthSet S = apply(W, vL, S0);
    for (std::size_t b = 0; b < F.size(); ++b)
      if (F[b].w == vP && F[b].set == S) image[a] = static_cast<int>(b);
    if (image[a] < 0 || hit[image[a]]) return false;
    hit[image[a]] = 1;
  }
  for (std::size_t a = 0; a < U.size(); ++a)
    for (std::size_t b = 0; b < U.size(); ++b)
      if (W.bruhat_leq(U[a], U[b]) != tilde_leq(E, F[image[a]], F[image[b]])) return false;
  return true;
}

std::vector<Descent> descents(const Engine& E, const Height2Orbit& o, const TildePair& p) {
  const auto& W = E.weyl();
  const auto& sys = E.system();
  std::vector<Descent> out;
  WeylElement winv = W.inverse(p.w);
  for (int a = 0; a < sys.rank(); ++a) {
    if (W.is_right_descent(winv, a)) {
      out.push_back({a, true, DescentKind::None});
      continue;
    }
    DescentKind k = E.affine().descent_type(a + 1, p.sigma);
    if (k == DescentKind::None) continue;
    RootId beta = W.act(winv, sys.simple(a));
    bool in_levi = false;
    for (int j : o.delta_L) in_levi |= sys.simple(j) == beta;
    if (!in_levi) throw std::logic_error("internal descent outside the Levi factor");
    out.push_back({a, false, k});
  }
  return out;
}

TildePair f_alpha(const Engine& E, const Height2Orbit& o, const TildePair& p, int alpha) {
  const auto& W = E.weyl();
  const auto& sys = E.system();
  auto ds = descents(E, o, p);
  auto it = std::find_if(ds.begin(), ds.end(), [&](const Descent& d) { return d.alpha == alpha; });
  if (it == ds.end())
    throw Error(ErrorKind::NotADescent, "s" + std::to_string(alpha + 1) + " is not a descent");
  WeylElement w = p.w;
  OrthSet S = p.set;
  if (it->external) {
    w = W.compose(W.simple_reflection(alpha), w);
  } else {
    RootId beta = W.act(W.inverse(w), sys.simple(alpha));
    if (it->kind == DescentKind::Complex)
      S = apply(W, W.reflection(beta), S);
    else
      S = real_move(sys, S, beta);
  }
  TildePair q = make_tilde_pair(E, w, S);
  q.admissible = admissible_pair(E, o, apply(W, w, S)).w == w;
  return q;
}

OrthSet f_alpha_set(const Engine& E, const OrthSet& S, int alpha) {
  const auto& sys = E.system();
  DescentKind k = E.affine().descent_type(alpha + 1, E.affine().sigma_of_set(S));
  switch (k) {
    case DescentKind::None:
      throw Error(ErrorKind::NotADescent, "s" + std::to_string(alpha + 1) + " is not a descent of " + format_set(sys, S));
    case DescentKind::Complex:
      return apply(E.weyl(), E.weyl().simple_reflection(alpha), S);
    case DescentKind::Real:
      break;
  }
  return real_move(sys, S, sys.simple(alpha));
}

}  // namespace nilc
