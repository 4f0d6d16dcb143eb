#include <doctest.h>

#include <memory>

#include "helpers.hpp"
#include "nilc/affine_weyl.hpp"
#include "nilc/oracle.hpp"

using namespace nilc;
using testing::error_of;
using testing::root;
using testing::set;

namespace {
std::shared_ptr<const RootSystem> make(char l, int n) {
  return std::make_shared<const RootSystem>(RootSystem::build({l, n}));
}
}  // namespace

TEST_SUITE("affine_weyl") {

TEST_CASE("affine reflections") {
  auto sys = make('A', 1);
  AffineWeylGroup A(sys);
  const RootId a = sys->simple(0);
  CHECK(A.reflect({a, 0}) == A.from_finite(A.weyl().simple_reflection(0)));
  auto s = A.reflect({a, -1});
  AffineRoot r{sys->negate(a), 1};  // delta - alpha
  CHECK(A.act(s, r) == AffineRoot{a, -1});
  CHECK(A.compose(s, s) == A.identity());
  // s_{alpha - delta} is the simple reflection s0
  CHECK(s == A.simple_reflection(0));
}

TEST_CASE("action and inverses") {
  auto sys = make('C', 2);
  AffineWeylGroup A(sys);
  auto x = A.parse_word("s0 s1 s2 s0 s1");
  for (RootId b = 0; b < sys->size(); ++b)
    for (int m = -2; m <= 2; ++m) {
      AffineRoot r{b, m};
      CHECK(A.act(A.identity(), r) == r);
      CHECK(A.act(A.inverse(x), A.act(x, r)) == r);
    }
  CHECK(A.compose(x, A.inverse(x)) == A.identity());
  // t_lambda(beta + m delta) = beta + (m - <beta, lambda>) delta
  Vec lam = zero_vec();
  lam[0] = 1;  // alpha_1 coroot
  auto t = A.translation(lam);
  for (RootId b = 0; b < sys->size(); ++b) {
    AffineRoot img = A.act(t, {b, 0});
    CHECK(img.finite == b);
    CHECK(img.n == -sys->pairing(b, sys->simple(0)));
  }
}

TEST_CASE("lengths") {
  auto sys = make('A', 1);
  AffineWeylGroup A(sys);
  const RootId a = sys->simple(0);
  for (int i = 0; i <= 1; ++i) CHECK(A.length(A.simple_reflection(i)) == 1);
  CHECK(A.length(A.reflect({a, -1})) == 1);
  auto s = A.reflect({a, 1});
  CHECK(A.length(s) == 3);
  CHECK(A.format_word(s) == "s1 s0 s1");
}

TEST_CASE("closed form length matches peeling and inversion counts") {
  for (auto [l, n] : {std::pair{'A', 2}, std::pair{'B', 2}, std::pair{'G', 2}, std::pair{'A', 3}}) {
    auto sys = make(l, n);
    AffineWeylGroup A(sys);
    for (const auto& x : oracle::elements_up_to(A, 6)) {
      CHECK(A.length(x) == A.length_by_peeling(x));
      CHECK(A.length(x) == oracle::inversion_count_window(A, x));
      CHECK(A.from_word(A.reduced_word(x)) == x);
    }
  }
}

TEST_CASE("bruhat examples") {
  auto sys = make('A', 1);
  AffineWeylGroup A(sys);
  const RootId a = sys->simple(0);
  auto s0 = A.simple_reflection(0), s1 = A.simple_reflection(1);
  auto big = A.reflect({a, 1});
  CHECK(A.bruhat_leq(A.identity(), big));
  CHECK(A.bruhat_leq(s0, big));
  CHECK_FALSE(A.bruhat_leq(s1, s0));
  CHECK_FALSE(A.bruhat_leq(big, s0));
}

TEST_CASE("sigma of sets") {
  auto sys = make('A', 1);
  AffineWeylGroup A(sys);
  auto e = A.sigma_of_set(set(*sys, "{}"));
  CHECK(e.element == A.identity());
  CHECK(A.involution_length(e) == 0);
  auto p = A.sigma_of_set(set(*sys, "1"));
  CHECK(A.length(p.element) == 1);
  CHECK(p.moved_rank == 1);
  CHECK(A.involution_length(p) == 1);
  auto m = A.sigma_of_set(set(*sys, "-1"));
  CHECK(A.length(m.element) == 3);
  CHECK(A.involution_length(m) == 2);
  CHECK(m.element == A.reflect({sys->simple(0), 1}));
}

TEST_CASE("involutions square to one and have integral L") {
  for (auto [l, n] : {std::pair{'B', 3}, std::pair{'C', 3}, std::pair{'G', 2}}) {
    auto sys = make(l, n);
    AffineWeylGroup A(sys);
    for (const auto& S : enumerate_strongly_orthogonal(*sys, -1)) {
      auto sg = A.sigma_of_set(S);
      CHECK(A.compose(sg.element, sg.element) == A.identity());
      CHECK((A.length(sg.element) + sg.moved_rank) % 2 == 0);
      CHECK(sg.moved_rank == static_cast<int>(S.size()));
      CHECK(A.fixed_codim(sg.element) == sg.moved_rank);
    }
  }
}

TEST_CASE("descent types") {
  auto a1 = make('A', 1);
  AffineWeylGroup A(a1);
  auto id = A.sigma_of_set(set(*a1, "{}"));
  CHECK(A.descent_type(0, id) == DescentKind::None);
  CHECK(A.descent_type(1, id) == DescentKind::None);
  CHECK(A.descent_type(0, A.sigma_of_set(set(*a1, "1"))) == DescentKind::Real);

  auto c2 = make('C', 2);
  AffineWeylGroup C(c2);
  // {2e1, 2e2}: alpha_1 = e1 - e2 is a real descent
  auto sg = C.sigma_of_set(set(*c2, "2,1;0,1"));
  CHECK(C.descent_type(1, sg) == DescentKind::Real);
  CHECK(std::string(descent_kind_name(DescentKind::Complex)) == "complex");
}

TEST_CASE("circle action") {
  auto a1 = make('A', 1);
  AffineWeylGroup A(a1);
  auto id = A.sigma_of_set(set(*a1, "{}"));
  auto c = A.circ(0, id);
  CHECK(c.element == A.simple_reflection(0));
  CHECK(c.moved_rank == 1);
  // s_{alpha + delta} = s1 s0 s1: s1 is a complex descent, s0 a complex ascent
  auto big = A.sigma_of_set(set(*a1, "-1"));
  auto down = A.circ(1, big);
  CHECK(down.element == A.simple_reflection(0));
  CHECK(A.length(down.element) == 1);
  auto up = A.circ(0, big);
  CHECK(A.length(up.element) == 5);

  auto c2 = make('C', 2);
  AffineWeylGroup C(c2);
  auto sg = C.sigma_of_set(set(*c2, "2,1;0,1"));
  CHECK(C.circ(1, sg) == C.sigma_of_set(set(*c2, "1,1")));
}

TEST_CASE("involution heights") {
  auto a2 = make('A', 2);
  AffineWeylGroup A(a2);
  CHECK(A.involution_height(A.sigma_of_set(set(*a2, "{}"))) == 0);
  CHECK(A.involution_height(A.sigma_of_set(set(*a2, "1,1"))) == 2);
  auto b3 = make('B', 3);
  AffineWeylGroup B(b3);
  CHECK(B.involution_height(B.sigma_of_set(set(*b3, "1,0,0;1,2,2;0,0,1"))) == 4);
  CHECK(B.involution_height(B.sigma_of_set(set(*b3, "1,1,1;0,1,0"))) == 3);
}

TEST_CASE("text forms") {
  auto sys = make('B', 2);
  AffineWeylGroup A(sys);
  AffineRoot r{sys->highest(), -1};
  CHECK(parse_affine_root(*sys, format_affine_root(*sys, r)) == r);
  CHECK(A.parse_word("e") == A.identity());
  CHECK(A.format_word(A.identity()) == "e");
  CHECK(error_of([&] { A.parse_word("s3"); }) == ErrorKind::ParseError);
  CHECK(error_of([&] { parse_affine_root(*sys, "1,1"); }) == ErrorKind::ParseError);
}

}
