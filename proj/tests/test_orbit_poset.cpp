#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "nilc/orbit_poset.hpp"

using namespace nilc;
using testing::error_of;
using testing::root;
using testing::set;

namespace {

bool is_partial_order(const Relation& leq) {
  const int n = leq.size();
  for (int i = 0; i < n; ++i) {
    if (!leq.test(i, i)) return false;
    for (int j = 0; j < n; ++j) {
      if (i != j && leq.test(i, j) && leq.test(j, i)) return false;
      for (int k = 0; k < n; ++k)
        if (leq.test(i, j) && leq.test(j, k) && !leq.test(i, k)) return false;
    }
  }
  return true;
}

template <class Node>
int find_node(const Poset<Node>& P, const OrthSet& S) {
  for (std::size_t k = 0; k < P.nodes.size(); ++k)
    if (P.nodes[k].set == S) return static_cast<int>(k);
  return -1;
}

}  // namespace

TEST_SUITE("orbit_poset") {

TEST_CASE("hasse diagrams") {
  Relation chain(3);
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) chain.set(i, j);
  CHECK(hasse(chain) == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  Relation anti(4);
  for (int i = 0; i < 4; ++i) anti.set(i, i);
  CHECK(hasse(anti).empty());
}

TEST_CASE("N2 of A1") {
  Engine E({'A', 1});
  auto P = enumerate_n2(E);
  REQUIRE(P.nodes.size() == 3);
  std::vector<int> dims;
  for (const auto& b : P.nodes) dims.push_back(b.dim);
  CHECK(dims == std::vector<int>{0, 1, 2});
  CHECK(P.covers == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  CHECK(P.nodes[0].g_orbit == "zero");
  CHECK(P.nodes[1].g_orbit == "h2-2");
}

TEST_CASE("N2 of A2") {
  Engine E({'A', 2});
  auto P = enumerate_n2(E);
  CHECK(P.nodes.size() == 7);
  int top = 0;
  for (const auto& b : P.nodes) top = std::max(top, b.dim);
  CHECK(top == 4);
  CHECK(top == E.orbit("h2-11").dim());
}

TEST_CASE("borbit invariants") {
  for (auto t : {CartanType{'B', 3}, CartanType{'C', 3}, CartanType{'G', 2}}) {
    Engine E(t);
    auto P = enumerate_n2(E);
    CHECK(is_partial_order(P.leq));
    for (const auto& b : P.nodes) {
      CHECK(2 * b.dim == b.length + static_cast<int>(b.set.size()));
      CHECK((b.set.empty() == (b.dim == 0)));
      CHECK((b.set.empty() == (b.g_orbit == "zero")));
    }
    for (int i = 0; i < P.leq.size(); ++i)
      for (int j = 0; j < P.leq.size(); ++j)
        if (i != j && P.leq.test(i, j)) CHECK(P.nodes[i].dim < P.nodes[j].dim);
  }
}

TEST_CASE("C2 node count equals admissible pairs") {
  Engine E({'C', 2});
  auto P = enumerate_n2(E);
  CHECK(P.nodes.size() == enumerate_height2_sets(E.system()).size());
  std::size_t admissible = 1;  // the zero orbit
  // each nonzero B-orbit counted once, in the resolution of its own G-orbit
  for (const auto& o : E.catalogue())
    for (const auto& p : enumerate_tilde(E, o).nodes) {
      if (!p.admissible || p.set.empty()) continue;
      if (g_orbit_of_set(E.system(), E.catalogue(), apply(E.weyl(), p.w, p.set)) == &o) ++admissible;
    }
  CHECK(admissible == P.nodes.size());
}

TEST_CASE("closure order examples") {
  Engine E1({'A', 1});
  const auto& s1 = E1.system();
  CHECK(closure_leq_n2(E1, set(s1, "1"), set(s1, "-1")));
  CHECK_FALSE(closure_leq_n2(E1, set(s1, "-1"), set(s1, "1")));
  for (const auto& S : enumerate_height2_sets(s1)) CHECK(closure_leq_n2(E1, OrthSet{}, S));

  Engine E2({'A', 2});
  const auto& s2 = E2.system();
  CHECK_FALSE(closure_leq_n2(E2, set(s2, "1,0"), set(s2, "0,1")));
  CHECK_FALSE(closure_leq_n2(E2, set(s2, "0,1"), set(s2, "1,0")));

  Engine E3({'B', 3});
  const auto& s3 = E3.system();
  CHECK(error_of([&] { closure_leq_n2(E3, set(s3, "1,1,1;0,1,0"), set(s3, "1,0,0")); }) ==
        ErrorKind::HeightOutOfRange);
}

TEST_CASE("resolution of the A2 minimal orbit") {
  Engine E({'A', 2});
  const auto& o = E.orbit("h2-11");
  auto P = enumerate_tilde(E, o);
  CHECK(P.nodes.size() == 12);
  CHECK(is_partial_order(P.leq));
  const auto& bottom = P.nodes.front();
  CHECK(bottom.w == E.weyl().identity());
  CHECK(bottom.set.empty());
  CHECK(bottom.dim == 0);
  int maximal = 0, top_dim = 0;
  for (int i = 0; i < P.leq.size(); ++i) {
    bool is_max = true;
    for (int j = 0; j < P.leq.size(); ++j)
      if (i != j && P.leq.test(i, j)) is_max = false;
    if (is_max) ++maximal, top_dim = P.nodes[i].dim;
  }
  CHECK(maximal == 1);
  CHECK(top_dim == static_cast<int>(o.phi1.size() + 2 * o.psi.size()));
  for (const auto& p : P.nodes) {
    CHECK(p.dim == p.w_length + E.affine().involution_length(p.sigma_S));
    if (p.admissible) CHECK(p.dim == E.affine().involution_length(p.sigma));
  }
}

TEST_CASE("admissible pairs") {
  Engine E({'A', 2});
  const auto& sys = E.system();
  const auto& o = E.orbit("h2-11");
  auto p = admissible_pair(E, o, set(sys, "1,1"));
  CHECK(p.w == E.weyl().identity());
  auto q = admissible_pair(E, o, set(sys, "1,0"));
  CHECK(q.w == E.weyl().simple_reflection(1));
  CHECK(q.set == set(sys, "1,1"));
  auto r = admissible_pair(E, o, set(sys, "-1,-1"));
  CHECK(r.w == E.weyl().reflection(sys.highest()));
  CHECK(r.w_length == 3);

  Engine C({'C', 2});
  const auto& cs = C.system();
  const auto& small = C.orbit("h2-10");
  CHECK(error_of([&] { admissible_pair(C, small, set(cs, "2,1;0,1")); }) == ErrorKind::NotInOrtX);
}

TEST_CASE("fibers") {
  Engine E({'A', 2});
  const auto& sys = E.system();
  const auto& o = E.orbit("h2-11");
  auto F0 = fiber(E, o, OrthSet{});
  CHECK(F0.size() == 6);
  CHECK(std::count_if(F0.begin(), F0.end(), [](const TildePair& p) { return p.admissible; }) == 1);
  CHECK(F0.front().admissible);
  CHECK(fiber(E, o, set(sys, "1,1")).size() == 1);
  CHECK(fiber_iso_check(E, o, OrthSet{}));
  CHECK(fiber_iso_check(E, o, set(sys, "1,0")));
  CHECK(fiber_iso_check(E, o, set(sys, "1,1")));

  // sets in the open orbit have singleton fibers
  Engine C({'C', 3});
  for (const auto& oc : C.catalogue())
    for (const auto& S : ort_x_sets(C, oc)) {
      auto F = fiber(C, oc, S);
      if (rank_G(C.system(), S) == rank_G(C.system(), make_orth_set(C.system(), oc.cascade))) CHECK(F.size() == 1);
      CHECK(fiber_iso_check(C, oc, S));
    }
}

TEST_CASE("descents and moves") {
  Engine E({'A', 2});
  const auto& sys = E.system();
  const auto& o = E.orbit("h2-11");
  auto bottom = make_tilde_pair(E, E.weyl().identity(), OrthSet{});
  CHECK(descents(E, o, bottom).empty());
  auto p = make_tilde_pair(E, E.weyl().simple_reflection(1), set(sys, "1,1"));
  auto ds = descents(E, o, p);
  REQUIRE(ds.size() >= 1);
  CHECK(std::any_of(ds.begin(), ds.end(), [](const Descent& d) { return d.alpha == 1 && d.external; }));
  auto q = f_alpha(E, o, p, 1);
  CHECK(q.w == E.weyl().identity());
  CHECK(q.set == set(sys, "1,1"));
  CHECK(error_of([&] { f_alpha(E, o, bottom, 0); }) == ErrorKind::NotADescent);

  Engine C({'C', 2});
  const auto& cs = C.system();
  const auto& oc = C.orbit("h2-02");
  auto pc = make_tilde_pair(C, C.weyl().identity(), set(cs, "2,1;0,1"));
  auto dc = descents(C, oc, pc);
  REQUIRE(!dc.empty());
  auto it = std::find_if(dc.begin(), dc.end(), [](const Descent& d) { return d.alpha == 0; });
  REQUIRE(it != dc.end());
  CHECK_FALSE(it->external);
  CHECK(it->kind == DescentKind::Real);
  CHECK(f_alpha(C, oc, pc, 0).set == set(cs, "1,1"));
  CHECK(f_alpha_set(C, set(cs, "2,1;0,1"), 0) == set(cs, "1,1"));

  Engine C3({'C', 3});
  const auto& s3 = C3.system();
  const auto& o3 = C3.orbit("h2-002");
  auto p3 = make_tilde_pair(C3, C3.weyl().identity(), set(s3, "0,2,1"));
  auto d3 = descents(C3, o3, p3);
  auto it3 = std::find_if(d3.begin(), d3.end(), [](const Descent& d) { return d.alpha == 0; });
  REQUIRE(it3 != d3.end());
  CHECK(it3->kind == DescentKind::Complex);
  auto q3 = f_alpha(C3, o3, p3, 0);
  CHECK(q3.set == set(s3, "2,2,1"));
  CHECK(q3.sigma.element == C3.affine().circ(1, p3.sigma).element);
}

TEST_CASE("a non-minimal pair with no descent") {
  // (e, {alpha}) lies above (e, {}) in the resolution of A1, but its orbit
  // closure is a fibre line of the cotangent bundle, not P_alpha-stable.
  Engine E({'A', 1});
  const auto& o = E.orbit("h2-2");
  auto P = enumerate_tilde(E, o);
  int i = -1;
  for (std::size_t k = 0; k < P.nodes.size(); ++k)
    if (P.nodes[k].w == E.weyl().identity() && P.nodes[k].set.size() == 1) i = static_cast<int>(k);
  REQUIRE(i >= 0);
  CHECK(P.leq.test(find_node(P, OrthSet{}), i));
  CHECK(descents(E, o, P.nodes[i]).empty());
}

TEST_CASE("projection to N2 is monotone") {
  Engine E({'B', 3});
  for (const auto& o : E.catalogue()) {
    auto P = enumerate_tilde(E, o);
    const int n = static_cast<int>(P.nodes.size());
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (!P.leq.test(i, j)) continue;
        auto R = apply(E.weyl(), P.nodes[i].w, P.nodes[i].set);
        auto S = apply(E.weyl(), P.nodes[j].w, P.nodes[j].set);
        CHECK(closure_leq_n2(E, R, S));
      }
  }
}

TEST_CASE("fiber members share the involution") {
  Engine E({'C', 3});
  for (const auto& o : E.catalogue())
    for (const auto& R : ort_x_sets(E, o)) {
      auto sigma = E.affine().sigma_of_set(R);
      auto F = fiber(E, o, R);
      REQUIRE(F.front().admissible);
      for (const auto& p : F) {
        CHECK(p.sigma == sigma);
        // the admissible pair is the minimum of the fiber
        CHECK(tilde_leq(E, F.front(), p));
      }
    }
}

}
