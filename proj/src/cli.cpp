#include "nilc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nilc/export.hpp"
#include "nilc/reference_rows.hpp"
#include "nilc/text.hpp"
#include "nilc/verify.hpp"

namespace nilc {

namespace {

struct Config {
  std::string type;
  int rank = 0;
  std::string orbit;
  bool tilde = false;
  std::string r_set, s_set, set;
  std::string format = "json";
  std::string out_path = "-";
  std::string suite = "all";
};

int rank_cap() {
  const char* env = std::getenv("NILC_RANK_CAP");
  if (!env || !*env) return kMaxRank;
  char* end = nullptr;
  long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v < 1) throw Error(ErrorKind::ParseError, std::string("NILC_RANK_CAP='") + env + "'");
  return static_cast<int>(std::min<long>(v, kMaxRank));
}

std::unique_ptr<Engine> make_engine(const Config& c) {
  CartanType t = parse_type(c.type, c.rank);
  const bool classical = t.letter >= 'A' && t.letter <= 'D';
  const int cap = rank_cap();
  if (classical && t.rank > cap)
    throw Error(ErrorKind::InvalidRank, t.to_string() + " exceeds the rank cap " + std::to_string(cap));
  return std::make_unique<Engine>(t);
}

std::string braces(const RootSystem& sys, const OrthSet& S) {
  return S.empty() ? "{}" : "{" + format_set(sys, S) + "}";
}

std::string sigma_summary(const Engine& E, const char* name, const BOrbit& b) {
  return std::string(name) + " = " + E.affine().format_word(b.sigma.element) + ", l=" + std::to_string(b.length) +
         ", dim=" + std::to_string(b.dim);
}

void zero_note(std::ostream& out) { out << "extension: zero orbit (S = {}, sigma = e) is the global minimum\n"; }

void print_n2(const Engine& E, const N2Poset& P, std::ostream& out) {
  const auto& sys = E.system();
  for (std::size_t k = 0; k < P.nodes.size(); ++k) {
    const auto& b = P.nodes[k];
    out << "n" << k << "  dim=" << b.dim << "  S=" << braces(sys, b.set)
        << "  sigma=" << E.affine().format_word(b.sigma.element) << "  orbit=" << b.g_orbit << "\n";
  }
  out << P.covers.size() << " cover relations\n";
}

int cmd_catalogue(const Config& c, std::ostream& out) {
  auto E = make_engine(c);
  const auto& sys = E->system();
  auto refs = reference_rows(sys.type());
  const auto& cat = E->catalogue();
  out << sys.type().to_string() << ": " << cat.size() << " height-2 orbits\n";
  out << std::left << std::setw(14) << "id" << std::setw(20) << "diagram" << std::setw(4) << "r" << std::setw(7)
      << "|psi|" << std::setw(6) << "dim" << "label\n";
  for (const auto& o : cat) {
    std::string label;
    for (const auto& row : refs)
      if (row.diagram == o.diagram) label = row.label;
    out << std::left << std::setw(14) << o.id << std::setw(20) << "(" + format_vec(o.diagram, sys.rank()) + ")"
        << std::setw(4) << o.rank() << std::setw(7) << o.psi.size() << std::setw(6) << o.dim() << label << "\n";
  }
  return 0;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
  auto E = make_engine(c);
  const auto& sys = E->system();
  if (c.orbit.empty()) {
    auto P = enumerate_n2(*E);
    out << P.nodes.size() << " B-orbits in N2\n";
    zero_note(out);
    print_n2(*E, P, out);
    return 0;
  }
  const auto& o = E->orbit(c.orbit);
  if (!c.tilde) {
    auto P = enumerate_ort_x(*E, o);
    out << P.nodes.size() << " B-orbits in X(" << o.id << ")\n";
    zero_note(out);
    print_n2(*E, P, out);
    return 0;
  }
  auto P = enumerate_tilde(*E, o);
  out << P.nodes.size() << " B-orbits in Xtilde(" << o.id << ")\n";
  for (std::size_t k = 0; k < P.nodes.size(); ++k) {
    const auto& p = P.nodes[k];
    out << "t" << k << "  w=" << E->weyl().format_word(p.w) << "  S=" << braces(sys, p.set) << "  dim=" << p.dim
        << "  sigma=" << E->affine().format_word(p.sigma.element) << (p.admissible ? "  admissible" : "") << "\n";
  }
  out << P.covers.size() << " cover relations\n";
  return 0;
}

int cmd_compare(const Config& c, std::ostream& out) {
  auto E = make_engine(c);
  OrthSet R = parse_set(E->system(), c.r_set);
  OrthSet S = parse_set(E->system(), c.s_set);
  const bool le = closure_leq_n2(*E, R, S);
  const bool ge = closure_leq_n2(*E, S, R);
  const char* rel = le && ge ? "EQ" : le ? "LEQ" : ge ? "GEQ" : "INCOMPARABLE";
  out << rel << ": true (" << sigma_summary(*E, "sigma_R", make_borbit(*E, R)) << "; "
      << sigma_summary(*E, "sigma_S", make_borbit(*E, S)) << ")\n";
  return 0;
}

// The orbit named by --orbit, or else the G-orbit of the set itself.
const Height2Orbit& orbit_for(const Engine& E, const Config& c, const OrthSet& R) {
  if (!c.orbit.empty()) return E.orbit(c.orbit);
  const Height2Orbit* o = g_orbit_of_set(E.system(), E.catalogue(), R);
  if (!o) throw Error(ErrorKind::EmptySet, "the empty set needs --orbit");
  return *o;
}

void print_pair(const Engine& E, const TildePair& p, std::ostream& out) {
  out << "w=" << E.weyl().format_word(p.w) << "  S=" << braces(E.system(), p.set) << "  l(w)=" << p.w_length
      << "  dim=" << p.dim << "  sigma=" << E.affine().format_word(p.sigma.element)
      << (p.admissible ? "  admissible" : "") << "\n";
}

int cmd_admissible(const Config& c, std::ostream& out) {
  auto E = make_engine(c);
  OrthSet R = parse_set(E->system(), c.set);
  const auto& o = orbit_for(*E, c, R);
  out << "admissible pair in Xtilde(" << o.id << "): ";
  print_pair(*E, admissible_pair(*E, o, R), out);
  return 0;
}

int cmd_fiber(const Config& c, std::ostream& out) {
  auto E = make_engine(c);
  OrthSet R = parse_set(E->system(), c.set);
  const auto& o = orbit_for(*E, c, R);
  auto F = fiber(*E, o, R);
  out << F.size() << " pairs over " << braces(E->system(), R) << " in Xtilde(" << o.id << ")\n";
  for (const auto& p : F) print_pair(*E, p, out);
  out << "order isomorphism with coset representatives: " << (fiber_iso_check(*E, o, R) ? "true" : "false") << "\n";
  return 0;
}

int cmd_hasse(const Config& c, std::ostream& out, std::ostream& err) {
  auto E = make_engine(c);
  PosetDocument doc;
  if (c.orbit.empty()) {
    doc = document_of(*E, enumerate_n2(*E));
  } else if (!c.tilde) {
    doc = document_of(*E, enumerate_ort_x(*E, E->orbit(c.orbit)), "X", c.orbit);
  } else {
    const auto& o = E->orbit(c.orbit);
    doc = document_of(*E, enumerate_tilde(*E, o), o);
  }
  std::string text = c.format == "dot" ? to_dot(doc) : to_json(doc) + "\n";
  if (c.out_path == "-") {
    out << text;
    return 0;
  }
  std::ofstream f(c.out_path, std::ios::binary);
  if (!f) {
    err << "error: cannot write " << c.out_path << "\n";
    return 2;
  }
  f << text;
  out << "wrote " << doc.nodes.size() << " nodes and " << doc.covers.size() << " covers to " << c.out_path << "\n";
  return 0;
}

int cmd_verify(const Config& c, std::ostream& out) {
  auto criteria = verify::suite(c.suite);
  int failed = 0;
  for (const auto& crit : criteria) {
    auto r = crit.run();
    if (!r.passed) ++failed;
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(2) << r.seconds;
    out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << secs.str() << " s): " << r.detail << "\n";
  }
  out << criteria.size() - failed << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}

void add_system(CLI::App* sub, Config& c) {
  sub->add_option("--type", c.type, "Cartan type letter A-G")->required();
  sub->add_option("--rank", c.rank, "rank")->required();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config c;
  CLI::App app{"Height-2 nilpotent B-orbits and their closure order"};
  app.require_subcommand(1);

  auto* catalogue = app.add_subcommand("catalogue", "list the height-2 orbits");
  add_system(catalogue, c);

  auto* enumerate = app.add_subcommand("enumerate", "list B-orbits in N2, in an orbit closure or its resolution");
  add_system(enumerate, c);
  enumerate->add_option("--orbit", c.orbit, "orbit id such as h2-02");
  enumerate->add_flag("--tilde", c.tilde, "pairs (w, S) in the resolution")->needs(enumerate->get_option("--orbit"));

  auto* compare = app.add_subcommand("compare", "closure order between two B-orbits");
  add_system(compare, c);
  compare->add_option("--r", c.r_set, "first set, roots as '1,0;0,1'")->required();
  compare->add_option("--s", c.s_set, "second set")->required();

  auto* admissible = app.add_subcommand("admissible", "admissible pair over a set");
  add_system(admissible, c);
  admissible->add_option("--set", c.set, "orthogonal set")->required();
  admissible->add_option("--orbit", c.orbit, "orbit id (default: the orbit of the set)");

  auto* fib = app.add_subcommand("fiber", "all pairs over a set");
  add_system(fib, c);
  fib->add_option("--set", c.set, "orthogonal set")->required();
  fib->add_option("--orbit", c.orbit, "orbit id (default: the orbit of the set)");

  auto* hasse_cmd = app.add_subcommand("hasse", "export a Hasse diagram");
  add_system(hasse_cmd, c);
  hasse_cmd->add_option("--orbit", c.orbit, "restrict to an orbit closure");
  hasse_cmd->add_flag("--tilde", c.tilde, "use the resolution")->needs(hasse_cmd->get_option("--orbit"));
  hasse_cmd->add_option("--format", c.format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  hasse_cmd->add_option("--out", c.out_path, "output file, '-' for stdout");

  auto* verify_cmd = app.add_subcommand("verify", "run the verification suites");
  verify_cmd->add_option("--suite", c.suite, "all, catalogue, bruhat, poset or lemmas")
      ->check(CLI::IsMember({"all", "catalogue", "bruhat", "poset", "lemmas"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*catalogue) return cmd_catalogue(c, out);
    if (*enumerate) return cmd_enumerate(c, out);
    if (*compare) return cmd_compare(c, out);
    if (*admissible) return cmd_admissible(c, out);
    if (*fib) return cmd_fiber(c, out);
    if (*hasse_cmd) return cmd_hasse(c, out, err);
    return cmd_verify(c, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ParseError || e.kind() == ErrorKind::InvalidRank ? 2 : 3;
  }
}

}  // namespace nilc
