#include "nilc/oracle.hpp"

#include <algorithm>
#include <cstdlib>

namespace nilc::oracle {

namespace {

template <class Group, class Elem, class Hash>
std::unordered_set<Elem, Hash> ideal(const Group& G, const std::vector<int>& word, const std::vector<Elem>& gens) {
  std::unordered_set<Elem, Hash> reach{G.identity()};
  for (int a : word) {
    std::vector<Elem> add;
    for (const auto& x : reach) add.push_back(G.compose(x, gens[a]));
    reach.insert(add.begin(), add.end());
  }
  return reach;
}

}  // namespace

std::unordered_set<WeylElement, WeylElementHash> subword_ideal(const WeylGroup& W, const WeylElement& w) {
  auto word = W.reduced_word(w);
  if (static_cast<int>(word.size()) > kSubwordMaxLength)
    throw Error(ErrorKind::TooLong, "length " + std::to_string(word.size()));
  std::vector<WeylElement> gens;
  for (int i = 0; i < W.rank(); ++i) gens.push_back(W.simple_reflection(i));
  return ideal<WeylGroup, WeylElement, WeylElementHash>(W, word, gens);
}

std::unordered_set<AffineWeylElement, AffineWeylElementHash> subword_ideal(const AffineWeylGroup& A,
                                                                           const AffineWeylElement& y) {
  auto word = A.reduced_word(y);
  if (static_cast<int>(word.size()) > kSubwordMaxLength)
    throw Error(ErrorKind::TooLong, "length " + std::to_string(word.size()));
  std::vector<AffineWeylElement> gens;
  for (int a = 0; a <= A.rank(); ++a) gens.push_back(A.simple_reflection(a));
  return ideal<AffineWeylGroup, AffineWeylElement, AffineWeylElementHash>(A, word, gens);
}

bool bruhat_leq_subword(const WeylGroup& W, const WeylElement& u, const WeylElement& w) {
  return subword_ideal(W, w).count(u) > 0;
}

bool bruhat_leq_subword(const AffineWeylGroup& A, const AffineWeylElement& x, const AffineWeylElement& y) {
  return subword_ideal(A, y).count(x) > 0;
}

int inversion_count_window(const AffineWeylGroup& A, const AffineWeylElement& x) {
  const auto& sys = A.system();
  int count = 0;
  for (RootId b = 0; b < sys.size(); ++b) {
    int k = 0;
    for (int i = 0; i < sys.rank(); ++i) k += sys.coords(b)[i] * x.eval()[i];
    // The image has delta coefficient n - k, positive once n > |k| + 1.
    for (int n = 0; n <= std::abs(k) + 1; ++n) {
      AffineRoot r{b, n};
      if (A.is_positive(r) && !A.is_positive(A.act(x, r))) ++count;
    }
  }
  return count;
}

std::vector<AffineWeylElement> elements_up_to(const AffineWeylGroup& A, int max_len) {
  std::vector<AffineWeylElement> layer{A.identity()}, out{A.identity()};
  std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen{A.identity()};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<AffineWeylElement> next;
    for (const auto& x : layer)
      for (int a = 0; a <= A.rank(); ++a) {
        if (A.is_right_descent(x, a)) continue;
        auto y = A.compose(x, A.simple_reflection(a));
        if (seen.insert(y).second) next.push_back(y);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

bool closure_leq_via_resolution(const Engine& E, const Height2Orbit& o, const OrthSet& R, const OrthSet& S) {
  auto F = fiber(E, o, R);
  TildePair adm = admissible_pair(E, o, S);
  for (const auto& p : F)
    if (E.weyl().bruhat_leq(p.w, adm.w) && E.affine().bruhat_leq(p.sigma.element, adm.sigma.element))
      return true;
  return false;
}

bool lattice_roots_ok(const RootSystem& sys, const OrthSet& S) {
  // A root in Z S has coefficients <gamma, beta^vee>/2, so |coefficient| <= 1;
  // the scan goes one step further.
  const int k = static_cast<int>(S.size());
  std::vector<int> c(k, -2);
  std::vector<char> expected(sys.size(), 0);
  for (RootId r : S.roots) expected[r] = expected[sys.negate(r)] = 1;
  if (k == 0) return true;
  while (true) {
    Vec v = zero_vec();
    bool nonzero = false;
    for (int j = 0; j < k; ++j) {
      if (c[j] == 0) continue;
      nonzero = true;
      for (int i = 0; i < sys.rank(); ++i) v[i] += c[j] * sys.coords(S.roots[j])[i];
    }
    if (nonzero) {
      RootId r = sys.find(v);
      if (r >= 0 && !expected[r]) return false;
    }
    int j = 0;
    while (j < k && c[j] == 2) c[j++] = -2;
    if (j == k) break;
    ++c[j];
  }
  return true;
}

bool real_roots_ok(const AffineWeylGroup& A, const OrthSet& S) {
  const auto& sys = A.system();
  auto sigma = A.sigma_of_set(S);
  // Candidates +-b +- b' for b, b' in S hat = {beta - delta}.
  std::vector<std::pair<Vec, int>> doubles;
  std::vector<std::pair<const Vec*, int>> signed_b;
  for (RootId r : S.roots) {
    signed_b.emplace_back(&sys.coords(r), 1);
    signed_b.emplace_back(&sys.coords(r), -1);
  }
  for (auto [b1, s1] : signed_b)
    for (auto [b2, s2] : signed_b) {
      Vec v = zero_vec();
      for (int i = 0; i < sys.rank(); ++i) v[i] = s1 * (*b1)[i] + s2 * (*b2)[i];
      doubles.emplace_back(v, -s1 - s2);
    }
  const int window = 2 * static_cast<int>(S.size()) + 2;
  for (RootId g = 0; g < sys.size(); ++g)
    for (int n = -window; n <= window; ++n) {
      AffineRoot a{g, n};
      AffineRoot img = A.act(sigma.element, a);
      if (img.finite != sys.negate(g) || img.n != -n) continue;
      Vec two = zero_vec();
      for (int i = 0; i < sys.rank(); ++i) two[i] = 2 * sys.coords(g)[i];
      bool found = std::any_of(doubles.begin(), doubles.end(),
                               [&](const auto& d) { return d.first == two && d.second == 2 * n; });
      if (!found) return false;
    }
  return true;
}

}  // namespace nilc::oracle
