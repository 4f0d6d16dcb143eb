#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "nilc/cli.hpp"
#include "nilc/export.hpp"

using namespace nilc;
using testing::error_of;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "nilc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("export") {

TEST_CASE("json round trip") {
  for (auto t : {CartanType{'A', 2}, CartanType{'C', 2}, CartanType{'G', 2}}) {
    Engine E(t);
    auto doc = document_of(E, enumerate_n2(E));
    CHECK(document_from_json(to_json(doc)) == doc);
    for (const auto& o : E.catalogue()) {
      auto dt = document_of(E, enumerate_tilde(E, o), o);
      CHECK(document_from_json(to_json(dt)) == dt);
      auto dx = document_of(E, enumerate_ort_x(E, o), "X", o.id);
      CHECK(document_from_json(to_json(dx)) == dx);
    }
  }
}

TEST_CASE("json contents") {
  Engine E({'A', 1});
  auto doc = document_of(E, enumerate_n2(E));
  REQUIRE(doc.nodes.size() == 3);
  CHECK(doc.nodes[1].sigma_word == "s0");
  CHECK(doc.nodes[2].sigma_word == "s1 s0 s1");
  CHECK(doc.nodes[2].roots == std::vector<std::vector<int>>{{-1}});
  CHECK(doc.covers == std::vector<std::pair<std::string, std::string>>{{"n0", "n1"}, {"n1", "n2"}});
  std::string js = to_json(doc);
  CHECK(has(js, "\"system\""));
  CHECK(has(js, "\"covers\""));
}

TEST_CASE("json errors") {
  CHECK(error_of([] { document_from_json("{"); }) == ErrorKind::ParseError);
  CHECK(error_of([] { document_from_json("{\"nodes\": []}"); }) == ErrorKind::ParseError);
}

TEST_CASE("dot output") {
  Engine E({'A', 1});
  std::string dot = to_dot(document_of(E, enumerate_n2(E)));
  CHECK(has(dot, "digraph"));
  CHECK(has(dot, "\"n2\" [label=\"n2\\n2\"]"));
  CHECK(has(dot, "\"n0\" -> \"n1\""));
  CHECK(has(dot, "rank=same"));
}

TEST_CASE("deterministic output") {
  Engine E1({'B', 3}), E2({'B', 3});
  for (std::size_t k = 0; k < E1.catalogue().size(); ++k) {
    const auto& o1 = E1.catalogue()[k];
    const auto& o2 = E2.catalogue()[k];
    CHECK(to_json(document_of(E1, enumerate_tilde(E1, o1), o1)) ==
          to_json(document_of(E2, enumerate_tilde(E2, o2), o2)));
  }
  CHECK(run({"enumerate", "--type", "C", "--rank", "3"}).out == run({"enumerate", "--type", "C", "--rank", "3"}).out);
}

}

TEST_SUITE("cli") {

TEST_CASE("compare") {
  auto r = run({"compare", "--type", "A", "--rank", "1", "--r", "1", "--s", "-1"});
  CHECK(r.code == 0);
  CHECK(r.out == "LEQ: true (sigma_R = s0, l=1, dim=1; sigma_S = s1 s0 s1, l=3, dim=2)\n");
  auto g = run({"compare", "--type", "A", "--rank", "1", "--r", "-1", "--s", "1"});
  CHECK(has(g.out, "GEQ: true"));
  auto e = run({"compare", "--type", "A", "--rank", "2", "--r", "1,0", "--s", "1,0"});
  CHECK(has(e.out, "EQ: true"));
  auto i = run({"compare", "--type", "A", "--rank", "2", "--r", "1,0", "--s", "0,1"});
  CHECK(has(i.out, "INCOMPARABLE: true"));
}

TEST_CASE("catalogue") {
  auto r = run({"catalogue", "--type", "G", "--rank", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "1 height-2 orbits"));
  CHECK(has(r.out, "(0,1)"));
  auto b = run({"catalogue", "--type", "B", "--rank", "5"});
  CHECK(has(b.out, "3 height-2 orbits"));
}

TEST_CASE("enumerate") {
  auto r = run({"enumerate", "--type", "A", "--rank", "2"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "7 B-orbits in N2"));
  CHECK(has(r.out, "extension: zero orbit"));
  auto t = run({"enumerate", "--type", "A", "--rank", "2", "--orbit", "h2-11", "--tilde"});
  CHECK(has(t.out, "12 B-orbits in Xtilde(h2-11)"));
  auto c = run({"enumerate", "--type", "C", "--rank", "2", "--orbit", "h2-02"});
  CHECK(has(c.out, "B-orbits in X(h2-02)"));
}

TEST_CASE("admissible and fiber") {
  auto a = run({"admissible", "--type", "A", "--rank", "2", "--set", "1,0"});
  CHECK(a.code == 0);
  CHECK(has(a.out, "w=s2  S={1,1}"));
  auto f = run({"fiber", "--type", "A", "--rank", "2", "--orbit", "h2-11", "--set", "{}"});
  CHECK(has(f.out, "6 pairs"));
  CHECK(has(f.out, "order isomorphism with coset representatives: true"));
  auto z = run({"admissible", "--type", "A", "--rank", "2", "--set", "{}"});
  CHECK(z.code == 3);
  CHECK(has(z.err, "EmptySet"));
}

TEST_CASE("hasse") {
  auto j = run({"hasse", "--type", "A", "--rank", "1", "--format", "json"});
  CHECK(j.code == 0);
  CHECK(document_from_json(j.out).nodes.size() == 3);
  auto d = run({"hasse", "--type", "A", "--rank", "1", "--format", "dot"});
  CHECK(has(d.out, "digraph"));
  const std::string path = "nilc_cli_test_hasse.json";
  auto w = run({"hasse", "--type", "C", "--rank", "2", "--orbit", "h2-02", "--tilde", "--out", path});
  CHECK(w.code == 0);
  std::ifstream in(path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(document_from_json(buf.str()).kind == "Xtilde");
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"catalogue", "--type", "A"}).code == 2);
  CHECK(run({"catalogue", "--type", "B", "--rank", "1"}).code == 2);
  CHECK(run({"compare", "--type", "A", "--rank", "2", "--r", "x", "--s", "1,0"}).code == 2);
  CHECK(run({"hasse", "--type", "A", "--rank", "2", "--format", "png"}).code == 2);
  CHECK(run({"verify", "--suite", "nope"}).code == 2);
  auto nr = run({"compare", "--type", "A", "--rank", "2", "--r", "1,1", "--s", "0,3"});
  CHECK(nr.code == 3);
  CHECK(has(nr.err, "NotARoot"));
  auto h = run({"compare", "--type", "B", "--rank", "3", "--r", "1,1,1;0,1,0", "--s", "1,0,0"});
  CHECK(h.code == 3);
  CHECK(has(h.err, "HeightOutOfRange"));
  auto x = run({"admissible", "--type", "C", "--rank", "2", "--orbit", "h2-10", "--set", "2,1;0,1"});
  CHECK(x.code == 3);
  CHECK(has(x.err, "NotInOrtX"));
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "catalogue"});
  CHECK(r.code == 0);
  CHECK(has(r.out, "PASS table reproduction"));
  CHECK(has(r.out, "2/2 criteria passed"));
}

}
