#include "nilc/orthogonal.hpp"

#include <algorithm>
#include <functional>

#include "nilc/text.hpp"

namespace nilc {

Vec labels(const RootSystem& sys, const Coweight& h) {
  Vec out = zero_vec();
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = 0; j < sys.rank(); ++j) out[i] += h.coords[j] * sys.cartan(i, j);
  return out;
}

int evaluate(const RootSystem& sys, const Coweight& h, RootId beta) {
  Vec l = labels(sys, h);
  const Vec& b = sys.coords(beta);
  int s = 0;
  for (int i = 0; i < sys.rank(); ++i) s += b[i] * l[i];
  return s;
}

Coweight characteristic(const RootSystem& sys, const std::vector<RootId>& roots) {
  Coweight h;
  for (RootId r : roots) {
    Vec c = sys.coroot_coords(r);
    for (int i = 0; i < sys.rank(); ++i) h.coords[i] += c[i];
  }
  return h;
}

int height(const RootSystem& sys, const OrthSet& S) {
  int best = 0;
  for (RootId g = 0; g < sys.size(); ++g) {
    int v = 0;
    for (RootId a : S.roots) v += sys.pairing(g, a);
    best = std::max(best, v);
  }
  return best;
}

Coweight dominant_conjugate(const RootSystem& sys, const Coweight& h0) {
  Coweight h = h0;
  while (true) {
    Vec l = labels(sys, h);
    int i = 0;
    while (i < sys.rank() && l[i] >= 0) ++i;
    if (i == sys.rank()) return h;
    h.coords[i] -= l[i];
  }
}

Vec weighted_dynkin(const RootSystem& sys, const OrthSet& S) {
  return labels(sys, dominant_conjugate(sys, characteristic(sys, S)));
}

namespace {

std::vector<RootId> greedy(const RootSystem& sys, const std::vector<RootId>& psi, bool from_top) {
  std::vector<RootId> chosen;
  while (true) {
    std::vector<RootId> cand;
    for (RootId a : psi) {
      bool ok = true;
      for (RootId g : chosen)
        if (sys.pairing(a, g) != 0) { ok = false; break; }
      if (ok) cand.push_back(a);
    }
    std::vector<RootId> extreme;
    for (RootId a : cand) {
      bool is_extreme = true;
      for (RootId b : cand) {
        if (a == b) continue;
        if (from_top ? sys.dominance_leq(a, b) : sys.dominance_leq(b, a)) { is_extreme = false; break; }
      }
      if (is_extreme) extreme.push_back(a);
    }
    if (extreme.empty()) return chosen;
    if (extreme.size() > 1) {
      std::string txt;
      for (RootId r : extreme) txt += " " + format_root(sys, r);
      throw Error(ErrorKind::NonUniqueMaximum, std::string(from_top ? "maximal" : "minimal") + " roots:" + txt);
    }
    chosen.push_back(extreme.front());
  }
}

}  // namespace

std::vector<RootId> cascade(const RootSystem& sys, const std::vector<RootId>& psi) {
  return greedy(sys, psi, true);
}

std::vector<RootId> lower_cascade(const RootSystem& sys, const std::vector<RootId>& psi) {
  return greedy(sys, psi, false);
}

int rank_G(const RootSystem& sys, const OrthSet& S) {
  int r = 0;
  for (RootId a : S.roots) r += sys.is_long(a) ? 1 : 2;
  return r;
}

namespace {

void backtrack(const RootSystem& sys, const std::vector<RootId>& pool, std::size_t from,
               std::vector<RootId>& cur, const std::function<void(const std::vector<RootId>&)>& emit) {
  emit(cur);
  for (std::size_t k = from; k < pool.size(); ++k) {
    RootId r = pool[k];
    bool ok = true;
    for (RootId c : cur)
      if (!sys.strongly_orthogonal(c, r)) { ok = false; break; }
    if (!ok) continue;
    cur.push_back(r);
    backtrack(sys, pool, k + 1, cur, emit);
    cur.pop_back();
  }
}

}  // namespace

std::vector<OrthSet> enumerate_ort(const RootSystem& sys, const std::vector<RootId>& psi) {
  std::vector<RootId> pool = psi;
  std::sort(pool.begin(), pool.end());
  std::vector<OrthSet> out;
  std::vector<RootId> cur;
  backtrack(sys, pool, 0, cur, [&](const std::vector<RootId>& s) { out.push_back(OrthSet{s}); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OrthSet> enumerate_strongly_orthogonal(const RootSystem& sys, int max_height) {
  std::vector<RootId> pool(sys.size());
  for (int i = 0; i < sys.size(); ++i) pool[i] = i;
  std::vector<OrthSet> out;
  std::vector<RootId> cur;
  backtrack(sys, pool, 0, cur, [&](const std::vector<RootId>& s) {
    OrthSet S{s};
    if (max_height < 0 || height(sys, S) <= max_height) out.push_back(std::move(S));
  });
  std::sort(out.begin(), out.end());
  return out;
}

OrthSet apply(const WeylGroup& W, const WeylElement& w, const OrthSet& S) {
  OrthSet out;
  for (RootId r : S.roots) out.roots.push_back(W.act(w, r));
  std::sort(out.roots.begin(), out.roots.end());
  return out;
}

}  // namespace nilc
