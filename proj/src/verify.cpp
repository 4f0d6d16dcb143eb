#include "nilc/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <unordered_map>
#include <unordered_set>

#include "nilc/oracle.hpp"
#include "nilc/reference_rows.hpp"
#include "nilc/text.hpp"

namespace nilc::verify {

namespace {

class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  CheckResult finish(std::string name, std::chrono::steady_clock::time_point t0, double limit_s = 0) {
    CheckResult r;
    r.name = std::move(name);
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit_s > 0 && r.seconds > limit_s) {
      ++failures_;
      messages_.push_back("took " + std::to_string(r.seconds) + " s, limit " + std::to_string(limit_s) + " s");
    }
    r.passed = failures_ == 0;
    r.detail = std::to_string(checks_) + " checks, " + std::to_string(failures_) + " failures";
    for (const auto& m : messages_) r.detail += "; " + m;
    return r;
  }

 private:
  long checks_ = 0;
  long failures_ = 0;
  std::vector<std::string> messages_;
};

using Clock = std::chrono::steady_clock;

std::string where(const CartanType& t, const std::string& what) { return t.to_string() + ": " + what; }

}  // namespace

std::vector<CartanType> reference_types() {
  std::vector<CartanType> out;
  for (int n = 1; n <= 8; ++n) out.push_back({'A', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'B', n});
  for (int n = 2; n <= 8; ++n) out.push_back({'C', n});
  for (int n = 3; n <= 8; ++n) out.push_back({'D', n});
  for (int n = 6; n <= 8; ++n) out.push_back({'E', n});
  out.push_back({'F', 4});
  out.push_back({'G', 2});
  return out;
}

std::vector<CartanType> types_up_to_rank(int max_rank) {
  std::vector<CartanType> out;
  for (const auto& t : reference_types())
    if (t.rank <= max_rank) out.push_back(t);
  return out;
}

int expected_components(const CartanType& t) {
  // B2 = C2 and D3 = A3 have irreducible height-2 varieties; in B3 the
  // minimal orbit lies in the closure of the (3,1^4) orbit.
  if (t.letter == 'B' && t.rank >= 4) return 2;
  if (t.letter == 'D' && t.rank >= 4) return t.rank % 2 ? 2 : 3;
  return 1;
}

CheckResult table_reproduction() {
  auto t0 = Clock::now();
  Tally tally;
  for (const auto& t : reference_types()) {
    RootSystem sys = RootSystem::build(t);
    auto cat = build_catalogue(sys);
    auto rows = reference_rows(t);
    tally.check(cat.size() == rows.size(),
                where(t, std::to_string(cat.size()) + " orbits, expected " + std::to_string(rows.size())));
    for (const auto& row : rows) {
      bool found = std::any_of(cat.begin(), cat.end(), [&](const Height2Orbit& o) {
        return o.diagram == row.diagram && o.rank() == row.rank_r;
      });
      tally.check(found, where(t, "orbit " + format_diagram(row.diagram, t.rank) + " missing"));
    }
    for (const auto& o : cat) {
      bool found = std::any_of(rows.begin(), rows.end(), [&](const ReferenceRow& row) {
        return o.diagram == row.diagram && o.rank() == row.rank_r;
      });
      tally.check(found, where(t, "unexpected " + o.id));
    }
  }
  return tally.finish("table reproduction", t0, 60);
}

CheckResult dimension_formula() {
  auto t0 = Clock::now();
  Tally tally;
  for (const auto& t : types_up_to_rank(4)) {
    Engine E(t);
    for (const auto& o : E.catalogue()) {
      int best = 0;
      for (const auto& R : ort_x_sets(E, o)) {
        BOrbit b = make_borbit(E, R);
        best = std::max(best, b.dim);
        TildePair adm = admissible_pair(E, o, R);
        tally.check(adm.dim == b.dim, where(t, o.id + " admissible dimension at " + format_set(E.system(), R)));
      }
      tally.check(best == o.dim(),
                  where(t, o.id + " top dimension " + std::to_string(best) + " vs " + std::to_string(o.dim())));
    }
  }
  return tally.finish("dimension formula", t0, 300);
}

CheckResult bruhat_equivalence() {
  auto t0 = Clock::now();
  Tally tally;
  for (CartanType t : {CartanType{'A', 1}, CartanType{'A', 2}, CartanType{'C', 2}}) {
    auto sys = std::make_shared<const RootSystem>(RootSystem::build(t));
    AffineWeylGroup A(sys);
    auto els = oracle::elements_up_to(A, 8);
    for (const auto& y : els) {
      auto ideal = oracle::subword_ideal(A, y);
      for (const auto& x : els)
        tally.check(A.bruhat_leq(x, y) == (ideal.count(x) > 0),
                    where(t, "affine " + A.format_word(x) + " vs " + A.format_word(y)));
    }
  }
  for (const auto& t : types_up_to_rank(3)) {
    auto sys = std::make_shared<const RootSystem>(RootSystem::build(t));
    WeylGroup W(sys);
    auto els = W.elements();
    for (const auto& w : els) {
      auto ideal = oracle::subword_ideal(W, w);
      for (const auto& u : els)
        tally.check(W.bruhat_leq(u, w) == (ideal.count(u) > 0),
                    where(t, "finite " + W.format_word(u) + " vs " + W.format_word(w)));
    }
  }
  return tally.finish("bruhat equivalence", t0, 300);
}

CheckResult length_equivalence() {
  auto t0 = Clock::now();
  Tally tally;
  for (const auto& t : types_up_to_rank(2)) {
    auto sys = std::make_shared<const RootSystem>(RootSystem::build(t));
    AffineWeylGroup A(sys);
    std::vector<AffineWeylElement> layer{A.identity()};
    std::unordered_set<AffineWeylElement, AffineWeylElementHash> seen{A.identity()};
    for (int len = 0; len <= 10; ++len) {
      std::vector<AffineWeylElement> next;
      for (const auto& x : layer) {
        int peel = A.length_by_peeling(x);
        tally.check(peel == len && oracle::inversion_count_window(A, x) == len && A.length(x) == len,
                    where(t, "length of " + A.format_word(x)));
        for (int a = 0; a <= A.rank(); ++a) {
          auto y = A.compose(x, A.simple_reflection(a));
          if (!seen.insert(y).second) continue;
          if (A.length(y) == len + 1) next.push_back(y);
        }
      }
      layer = std::move(next);
    }
  }
  std::mt19937 rng(20240601);
  for (const auto& t : types_up_to_rank(4)) {
    auto sys = std::make_shared<const RootSystem>(RootSystem::build(t));
    AffineWeylGroup A(sys);
    std::uniform_int_distribution<int> letter(0, t.rank - 1), coord(-3, 3), wlen(0, 30);
    for (int k = 0; k < 1000; ++k) {
      std::vector<int> word(wlen(rng));
      for (int& a : word) a = letter(rng);
      Vec c = zero_vec();
      for (int i = 0; i < t.rank; ++i) c[i] = coord(rng);
      AffineWeylElement x = A.compose(A.from_finite(A.weyl().from_word(word)), A.translation(c));
      int peel = A.length_by_peeling(x);
      tally.check(peel == oracle::inversion_count_window(A, x) && peel == A.length(x),
                  where(t, "random element " + A.format_word(x)));
    }
  }
  return tally.finish("length equivalence", t0);
}

CheckResult closure_cross_validation() {
  auto t0 = Clock::now();
  Tally tally;
  for (const auto& t : types_up_to_rank(3)) {
    Engine E(t);
    for (const auto& o : E.catalogue()) {
      auto sets = ort_x_sets(E, o);
      for (const auto& R : sets)
        for (const auto& S : sets)
          tally.check(closure_leq_n2(E, R, S) == oracle::closure_leq_via_resolution(E, o, R, S),
                      where(t, o.id + " " + format_set(E.system(), R) + " vs " + format_set(E.system(), S)));
    }
  }
  return tally.finish("closure cross-validation", t0, 600);
}

CheckResult lemma_suite() {
  auto t0 = Clock::now();
  Tally tally;
  for (const auto& t : types_up_to_rank(4)) {
    Engine E(t);
    const auto& sys = E.system();
    const auto& A = E.affine();
    std::unordered_map<AffineWeylElement, OrthSet, AffineWeylElementHash> seen;
    for (const auto& S : enumerate_strongly_orthogonal(sys, -1)) {
      auto sigma = A.sigma_of_set(S);
      const int h = height(sys, S);
      tally.check(A.involution_height(sigma) == h, where(t, "height of " + format_set(sys, S)));
      tally.check(A.fixed_codim(sigma.element) == static_cast<int>(S.size()),
                  where(t, "moved rank of " + format_set(sys, S)));
      if (h > 3) continue;
      auto [it, fresh] = seen.emplace(sigma.element, S);
      tally.check(fresh, where(t, "sigma collision " + format_set(sys, S) + " / " + format_set(sys, it->second)));
      tally.check(oracle::lattice_roots_ok(sys, S), where(t, "lattice roots of " + format_set(sys, S)));
      tally.check(oracle::real_roots_ok(A, S), where(t, "real roots of " + format_set(sys, S)));
    }
  }
  for (const auto& t : types_up_to_rank(3)) {
    Engine E(t);
    const auto& sys = E.system();
    const auto& A = E.affine();
    // lambda_h: s_{delta - beta} below sigma forces beta into psi.
    for (const auto& o : E.catalogue())
      for (const auto& S : enumerate_ort(sys, o.psi)) {
        auto sigma = A.sigma_of_set(S);
        for (RootId b = 0; b < sys.size(); ++b) {
          if (!A.bruhat_leq(A.reflect({sys.negate(b), 1}), sigma.element)) continue;
          tally.check(std::binary_search(o.psi.begin(), o.psi.end(), b),
                      where(t, o.id + " reflection of " + format_root(sys, b) + " under " + format_set(sys, S)));
        }
      }
    // Descent types and the lifting lemma for involutions.
    auto P = enumerate_n2(E);
    const int n = static_cast<int>(P.nodes.size());
    for (int i = 0; i < n; ++i) {
      const auto& s = P.nodes[i].sigma;
      for (int a = 0; a <= sys.rank(); ++a) {
        DescentKind k = A.descent_type(a, s);
        auto c = A.circ(a, s);
        int drop = P.nodes[i].length - A.length(c.element);
        if (k == DescentKind::Complex) tally.check(drop == 2, where(t, "complex descent drop"));
        if (k == DescentKind::Real) tally.check(drop == 1, where(t, "real descent drop"));
        if (k == DescentKind::None) tally.check(drop < 0, where(t, "ascent"));
      }
    }
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j || !P.leq.test(i, j)) continue;
        const auto& s = P.nodes[i].sigma;
        const auto& u = P.nodes[j].sigma;
        for (int a = 0; a <= sys.rank(); ++a) {
          if (A.descent_type(a, s) != DescentKind::None || A.descent_type(a, u) == DescentKind::None) continue;
          auto sa = A.circ(a, s), ua = A.circ(a, u);
          tally.check(A.bruhat_leq(sa.element, u.element) && A.bruhat_leq(s.element, ua.element),
                      where(t, "lifting for involutions at s" + std::to_string(a)));
        }
      }
  }
  return tally.finish("injectivity and lemmas", t0);
}

CheckResult move_calculus() {
  auto t0 = Clock::now();
  Tally tally;
  for (const auto& t : types_up_to_rank(3)) {
    Engine E(t);
    const auto& sys = E.system();
    const auto& A = E.affine();
    for (const auto& o : E.catalogue()) {
      auto P = enumerate_tilde(E, o);
      const int n = static_cast<int>(P.nodes.size());
      for (int i = 0; i < n; ++i) {
        const auto& p = P.nodes[i];
        auto ds = descents(E, o, p);
        // An admissible pair with w != e has an external descent, and it is
        // also a descent of the involution.  Non-admissible pairs can sit
        // above others with no descent at all (A1: (e,{a}) over (e,{})).
        if (p.admissible && p.w_length > 0) {
          bool ext = false;
          for (const auto& d : ds)
            if (d.external) {
              ext = true;
              tally.check(A.descent_type(d.alpha + 1, p.sigma) != DescentKind::None,
                          where(t, o.id + " admissible external descent not in sigma"));
            }
          tally.check(ext, where(t, o.id + " admissible pair without external descent"));
        }
        for (const auto& d : ds) {
          TildePair q = f_alpha(E, o, p, d.alpha);
          tally.check(q.dim == p.dim - 1, where(t, o.id + " move does not drop dimension by one"));
          if (p.admissible) tally.check(q.admissible, where(t, o.id + " move changes admissibility"));
          tally.check(tilde_leq(E, q, p) && !(q.w == p.w && q.set == p.set), where(t, o.id + " move not below"));
          const int a = d.alpha + 1;
          if (!d.external) {
            tally.check(q.sigma.element == A.circ(a, p.sigma).element, where(t, o.id + " internal move sigma"));
          } else {
            auto s = A.simple_reflection(a);
            tally.check(q.sigma.element == A.compose(A.compose(s, p.sigma.element), s),
                        where(t, o.id + " external move sigma"));
          }
        }
      }
    }
    for (const auto& S : enumerate_height2_sets(sys)) {
      auto sigma = A.sigma_of_set(S);
      for (int i = 0; i < sys.rank(); ++i) {
        if (A.descent_type(i + 1, sigma) == DescentKind::None) continue;
        OrthSet S2 = f_alpha_set(E, S, i);
        tally.check(A.sigma_of_set(S2).element == A.circ(i + 1, sigma).element,
                    where(t, "F on " + format_set(sys, S)));
        tally.check(height(sys, S2) <= 2 && closure_leq_n2(E, S2, S), where(t, "F below " + format_set(sys, S)));
      }
    }
  }
  return tally.finish("move calculus", t0);
}

CheckResult desk_counts() {
  auto t0 = Clock::now();
  Tally tally;
  {
    Engine E({'A', 1});
    auto P = enumerate_n2(E);
    tally.check(P.nodes.size() == 3, "A1 has 3 B-orbits");
    std::vector<int> dims;
    for (const auto& b : P.nodes) dims.push_back(b.dim);
    tally.check(dims == std::vector<int>{0, 1, 2}, "A1 dimensions 0, 1, 2");
    tally.check(P.covers.size() == 2, "A1 is a chain");
  }
  {
    Engine E({'A', 2});
    auto P = enumerate_n2(E);
    tally.check(P.nodes.size() == 7, "A2 has 7 B-orbits");
    tally.check(!P.nodes.empty() && P.nodes.back().dim == 4, "A2 top dimension 4");
  }
  {
    Engine E({'C', 2});
    tally.check(enumerate_ort(E.system(), E.orbit("h2-02").psi).size() == 5, "C2 orthogonal subsets of psi");
  }
  {
    Engine E({'A', 3});
    tally.check(enumerate_ort(E.system(), E.orbit("h2-020").psi).size() == 7, "A3 (020) orthogonal subsets");
  }
  {
    Engine E({'E', 7});
    bool found = false;
    for (const auto& o : E.catalogue()) found |= o.id == "h2-0000002" && o.rank() == 3;
    tally.check(E.catalogue().size() == 3 && found, "E7 catalogue");
  }
  for (const auto& t : reference_types()) {
    RootSystem sys = RootSystem::build(t);
    auto cat = build_catalogue(sys);
    int got = static_cast<int>(maximal_orbits(cat).size());
    tally.check(got == expected_components(t), where(t, std::to_string(got) + " closure-maximal orbits"));
  }
  return tally.finish("desk counts", t0);
}

std::vector<Criterion> all_criteria() {
  return {
      {"table", table_reproduction},
      {"dimension", dimension_formula},
      {"bruhat", bruhat_equivalence},
      {"length", length_equivalence},
      {"closure", closure_cross_validation},
      {"lemmas", lemma_suite},
      {"moves", move_calculus},
      {"counts", desk_counts},
  };
}

std::vector<Criterion> suite(std::string_view name) {
  auto all = all_criteria();
  if (name == "all") return all;
  std::vector<std::string_view> keys;
  if (name == "catalogue") keys = {"table", "counts"};
  else if (name == "bruhat") keys = {"bruhat", "length"};
  else if (name == "poset") keys = {"dimension", "closure", "moves"};
  else if (name == "lemmas") keys = {"lemmas"};
  std::vector<Criterion> out;
  for (auto& c : all)
    if (std::find(keys.begin(), keys.end(), c.key) != keys.end()) out.push_back(c);
  return out;
}

}  // namespace nilc::verify
