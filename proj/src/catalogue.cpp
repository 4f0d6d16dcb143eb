#include "nilc/catalogue.hpp"

#include <algorithm>
#include <deque>

#include "nilc/text.hpp"

namespace nilc {

namespace {

int label_value(const RootSystem& sys, const Vec& l, RootId r) {
  int s = 0;
  for (int i = 0; i < sys.rank(); ++i) s += sys.coords(r)[i] * l[i];
  return s;
}

std::vector<int> zero_labels(const RootSystem& sys, const Vec& l) {
  std::vector<int> out;
  for (int i = 0; i < sys.rank(); ++i)
    if (l[i] == 0) out.push_back(i);
  return out;
}

}  // namespace

std::vector<std::vector<RootId>> sub_ideal_chain(const RootSystem& sys, const Height2Orbit& o) {
  const int r = o.rank();
  std::vector<std::vector<RootId>> chain(r + 1);
  for (int i = 1; i <= r; ++i) {
    std::vector<RootId> above, perp;
    for (RootId a : o.psi) {
      if (sys.dominance_leq(o.cascade[i - 1], a)) above.push_back(a);
      bool ok = true;
      for (int j = i + 1; j <= r; ++j)
        if (sys.pairing(a, o.cascade[j - 1]) != 0) { ok = false; break; }
      if (ok) perp.push_back(a);
    }
    if (above != perp)
      throw Error(ErrorKind::ChainMismatch, o.id + " at step " + std::to_string(i));
    chain[i] = std::move(above);
  }
  return chain;
}

bool make_orbit(const RootSystem& sys, const Vec& diagram, Height2Orbit& o) {
  const int n = sys.rank();
  o = Height2Orbit{};
  o.diagram = diagram;
  for (RootId r : sys.positive_roots()) {
    int v = label_value(sys, diagram, r);
    if (v == 2) o.psi.push_back(r);
    else if (v == 1) o.phi1.push_back(r);
    else if (v > 2 || v < 0) return false;
  }
  if (o.psi.empty()) return false;
  try {
    o.cascade = cascade(sys, o.psi);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonUniqueMaximum) return false;
    throw;
  }
  o.h = characteristic(sys, o.cascade);
  Vec got = labels(sys, o.h);
  for (int i = 0; i < n; ++i)
    if (got[i] != diagram[i]) return false;

  auto low = lower_cascade(sys, o.psi);
  auto a = o.cascade, b = low;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) throw Error(ErrorKind::ChainMismatch, "top and bottom cascades differ");

  o.id = "h2-" + format_diagram(diagram, n);
  o.delta_L = zero_labels(sys, diagram);
  std::vector<RootId> minimal;
  for (RootId x : o.psi) {
    bool is_min = true;
    for (RootId y : o.psi)
      if (y != x && sys.dominance_leq(y, x)) { is_min = false; break; }
    if (is_min) minimal.push_back(x);
  }
  if (minimal.size() != 1) throw Error(ErrorKind::NonUniqueMaximum, o.id + ": psi has several minimal roots");
  o.psi_min = minimal.front();
  for (int i : o.delta_L) o.delta_G0.push_back(sys.simple(i));
  o.delta_G0.push_back(o.psi_min);

  o.sub_psi = sub_ideal_chain(sys, o);

  const int r = o.rank();
  o.delta_L_i.resize(r + 1);
  o.delta_star.resize(r + 1);
  for (int i = 0; i < n; ++i) o.delta_L_i[0].push_back(i);
  o.delta_star[0] = o.delta_L_i[0];
  for (int i = 1; i <= r; ++i) {
    std::vector<RootId> prefix(o.cascade.begin(), o.cascade.begin() + i);
    Vec li = labels(sys, characteristic(sys, prefix));
    o.delta_L_i[i] = zero_labels(sys, li);
    // Component of gamma_i in the diagram of delta_L_i plus gamma_i.
    const RootId g = o.cascade[i - 1];
    std::vector<char> reached(n, 0);
    std::deque<RootId> queue{g};
    while (!queue.empty()) {
      RootId x = queue.front();
      queue.pop_front();
      for (int k : o.delta_L_i[i]) {
        RootId s = sys.simple(k);
        if (reached[k] || s == x || sys.pairing(s, x) == 0) continue;
        reached[k] = 1;
        queue.push_back(s);
      }
    }
    for (int k : o.delta_L_i[i])
      if (!reached[k]) o.delta_star[i].push_back(k);
  }
  return true;
}

std::vector<Height2Orbit> build_catalogue(const RootSystem& sys) {
  const int n = sys.rank();
  const Vec& theta = sys.coords(sys.highest());
  std::vector<Height2Orbit> out;
  Vec l = zero_vec();
  // Labels in {0,1,2} with theta(h) = 2.
  auto rec = [&](auto&& self, int i, int acc) -> void {
    if (acc > 2) return;
    if (i == n) {
      if (acc != 2) return;
      Height2Orbit o;
      if (make_orbit(sys, l, o)) out.push_back(std::move(o));
      return;
    }
    for (int v = 0; v <= 2; ++v) {
      l[i] = v;
      self(self, i + 1, acc + v * theta[i]);
    }
    l[i] = 0;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), [](const Height2Orbit& a, const Height2Orbit& b) {
    if (a.dim() != b.dim()) return a.dim() < b.dim();
    return a.diagram < b.diagram;
  });
  return out;
}

bool g_closure_leq(const Height2Orbit& a, const Height2Orbit& b) {
  return std::includes(b.psi.begin(), b.psi.end(), a.psi.begin(), a.psi.end());
}

std::vector<const Height2Orbit*> maximal_orbits(const std::vector<Height2Orbit>& cat) {
  std::vector<const Height2Orbit*> out;
  for (const auto& a : cat) {
    bool top = true;
    for (const auto& b : cat)
      if (&a != &b && g_closure_leq(a, b)) { top = false; break; }
    if (top) out.push_back(&a);
  }
  return out;
}

const Height2Orbit* g_orbit_of_set(const RootSystem& sys, const std::vector<Height2Orbit>& cat,
                                   const OrthSet& S) {
  if (S.empty()) return nullptr;
  Vec d = weighted_dynkin(sys, S);
  for (const auto& o : cat)
    if (o.diagram == d) return &o;
  throw Error(ErrorKind::NotInCatalogue, "no height-2 orbit with diagram " + format_diagram(d, sys.rank()));
}

const Height2Orbit& find_orbit(const std::vector<Height2Orbit>& cat, std::string_view id) {
  for (const auto& o : cat)
    if (o.id == id) return o;
  throw Error(ErrorKind::NotInCatalogue, "unknown orbit '" + std::string(id) + "'");
}

}  // namespace nilc
