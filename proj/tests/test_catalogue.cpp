#include <doctest.h>

#include <algorithm>
#include <memory>

#include "helpers.hpp"
#include "nilc/engine.hpp"
#include "nilc/reference_rows.hpp"

using namespace nilc;
using testing::error_of;
using testing::root;
using testing::set;

namespace {
std::vector<std::string> ids(const std::vector<Height2Orbit>& cat) {
  std::vector<std::string> out;
  for (const auto& o : cat) out.push_back(o.id);
  std::sort(out.begin(), out.end());
  return out;
}
std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}
}  // namespace

TEST_SUITE("catalogue") {

TEST_CASE("small catalogues") {
  auto a2 = RootSystem::build({'A', 2});
  auto c = build_catalogue(a2);
  REQUIRE(c.size() == 1);
  CHECK(c[0].id == "h2-11");
  CHECK(c[0].rank() == 1);
  CHECK(c[0].dim() == 4);

  auto b3 = RootSystem::build({'B', 3});
  auto cb = build_catalogue(b3);
  CHECK(ids(cb) == sorted({"h2-200", "h2-010"}));
  for (const auto& o : cb) CHECK(o.rank() == (o.id == "h2-200" ? 2 : 1));

  auto e8 = RootSystem::build({'E', 8});
  auto ce = build_catalogue(e8);
  CHECK(ids(ce) == sorted({"h2-00000001", "h2-10000000"}));
  for (const auto& o : ce) CHECK(o.rank() == (o.id == "h2-00000001" ? 1 : 2));

  auto g2 = RootSystem::build({'G', 2});
  auto cg = build_catalogue(g2);
  REQUIRE(cg.size() == 1);
  CHECK(cg[0].id == "h2-01");
}

TEST_CASE("every catalogue matches the reference rows") {
  std::vector<CartanType> types;
  for (int n = 1; n <= 8; ++n) types.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) types.push_back({'B', n}), types.push_back({'C', n});
  for (int n = 3; n <= 8; ++n) types.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) types.push_back({'E', n});
  types.push_back({'F', 4});
  types.push_back({'G', 2});
  for (const auto& t : types) {
    auto sys = RootSystem::build(t);
    auto cat = build_catalogue(sys);
    auto rows = reference_rows(t);
    INFO(t.to_string());
    REQUIRE(cat.size() == rows.size());
    for (const auto& row : rows) {
      auto it = std::find_if(cat.begin(), cat.end(), [&](const Height2Orbit& o) { return o.diagram == row.diagram; });
      REQUIRE(it != cat.end());
      CHECK(it->rank() == row.rank_r);
    }
  }
}

TEST_CASE("orbit invariants") {
  for (auto t : {CartanType{'C', 4}, CartanType{'D', 5}, CartanType{'E', 7}, CartanType{'F', 4}}) {
    auto sys = std::make_shared<const RootSystem>(RootSystem::build(t));
    WeylGroup W(sys);
    for (const auto& o : build_catalogue(*sys)) {
      INFO(o.id);
      CHECK(evaluate(*sys, o.h, sys->highest()) == 2);
      CHECK(o.h == characteristic(*sys, o.cascade));
      for (RootId r : sys->positive_roots()) CHECK(evaluate(*sys, o.h, r) <= 2);
      // psi is an upper set in dominance order
      for (RootId a : o.psi)
        for (RootId b : sys->positive_roots())
          if (sys->dominance_leq(a, b)) CHECK(std::binary_search(o.psi.begin(), o.psi.end(), b));
      // the unique minimal root of psi is w_L(theta)
      WeylElement wL = W.longest_element(o.delta_L);
      CHECK(W.act(wL, sys->highest()) == o.psi_min);
      CHECK(sub_ideal_chain(*sys, o) == o.sub_psi);
      CHECK(o.sub_psi.back() == o.psi);
    }
  }
}

TEST_CASE("ideal chain") {
  auto c3 = RootSystem::build({'C', 3});
  const auto cat = build_catalogue(c3);
  const auto& o = find_orbit(cat, "h2-002");
  REQUIRE(o.rank() == 3);
  CHECK(o.sub_psi[1] == std::vector<RootId>{root(c3, "2,2,1")});
  auto psi2 = std::vector<RootId>{root(c3, "2,2,1"), root(c3, "1,2,1"), root(c3, "0,2,1")};
  std::sort(psi2.begin(), psi2.end());
  CHECK(o.sub_psi[2] == psi2);

  auto b3 = RootSystem::build({'B', 3});
  const auto cb = build_catalogue(b3);
  CHECK(find_orbit(cb, "h2-200").sub_psi[1] == std::vector<RootId>{root(b3, "1,2,2")});
}

TEST_CASE("orbit of a set") {
  auto a2 = RootSystem::build({'A', 2});
  auto ca = build_catalogue(a2);
  CHECK(g_orbit_of_set(a2, ca, set(a2, "1,0"))->id == "h2-11");
  CHECK(g_orbit_of_set(a2, ca, OrthSet{}) == nullptr);

  auto c2 = RootSystem::build({'C', 2});
  auto cc = build_catalogue(c2);
  CHECK(g_orbit_of_set(c2, cc, set(c2, "1,1")) == g_orbit_of_set(c2, cc, set(c2, "2,1;0,1")));

  for (auto t : {CartanType{'B', 4}, CartanType{'E', 6}, CartanType{'G', 2}}) {
    auto sys = RootSystem::build(t);
    auto cat = build_catalogue(sys);
    const auto* o = g_orbit_of_set(sys, cat, make_orth_set(sys, std::vector<RootId>{sys.highest()}));
    REQUIRE(o);
    CHECK(o->rank() == 1);
  }

  auto b3 = RootSystem::build({'B', 3});
  auto cb = build_catalogue(b3);
  // height 3: not in the catalogue
  CHECK(error_of([&] { g_orbit_of_set(b3, cb, set(b3, "1,1,1;0,1,0")); }) == ErrorKind::NotInCatalogue);
  CHECK(error_of([&] { find_orbit(cb, "h2-999"); }) == ErrorKind::NotInCatalogue);
}

TEST_CASE("closure order on G-orbits") {
  auto b3 = RootSystem::build({'B', 3});
  auto cb = build_catalogue(b3);
  for (const auto& o : cb) CHECK(g_closure_leq(o, o));
  const auto& a = find_orbit(cb, "h2-010");
  const auto& b = find_orbit(cb, "h2-200");
  CHECK(g_closure_leq(a, b) == std::includes(b.psi.begin(), b.psi.end(), a.psi.begin(), a.psi.end()));
}

TEST_CASE("closure-maximal counts") {
  auto count = [](CartanType t) {
    auto sys = RootSystem::build(t);
    auto cat = build_catalogue(sys);
    return maximal_orbits(cat).size();
  };
  CHECK(count({'A', 5}) == 1);
  CHECK(count({'C', 4}) == 1);
  CHECK(count({'E', 7}) == 1);
  CHECK(count({'B', 4}) == 2);
  CHECK(count({'B', 7}) == 2);
  CHECK(count({'D', 5}) == 2);
  CHECK(count({'D', 7}) == 2);
  CHECK(count({'D', 4}) == 3);
  CHECK(count({'D', 8}) == 3);
  // small ranks where the generic count does not apply
  CHECK(count({'B', 2}) == 1);
  CHECK(count({'B', 3}) == 1);
  CHECK(count({'D', 3}) == 1);
}

TEST_CASE("engine") {
  Engine E({'C', 2});
  CHECK(E.catalogue().size() == 2);
  CHECK(E.orbit("h2-02").rank() == 2);
  CHECK(E.weyl().rank() == 2);
}

}
