#include "nilc/export.hpp"

#include <map>

#include <json.hpp>

namespace nilc {

using nlohmann::json;

namespace {

std::vector<std::vector<int>> root_lists(const RootSystem& sys, const OrthSet& S) {
  std::vector<std::vector<int>> out;
  for (RootId r : S.roots) out.emplace_back(sys.coords(r).begin(), sys.coords(r).begin() + sys.rank());
  return out;
}

template <class Node>
std::vector<std::pair<std::string, std::string>> cover_ids(const Poset<Node>& P, const std::vector<ExportNode>& nodes) {
  std::vector<std::pair<std::string, std::string>> out;
  for (auto [a, b] : P.covers) out.emplace_back(nodes[a].id, nodes[b].id);
  return out;
}

}  // namespace

PosetDocument document_of(const Engine& E, const N2Poset& P, const std::string& kind, const std::string& orbit) {
  PosetDocument d;
  d.type = std::string(1, E.system().type().letter);
  d.rank = E.system().rank();
  d.kind = kind;
  d.orbit = orbit;
  for (std::size_t k = 0; k < P.nodes.size(); ++k) {
    const auto& b = P.nodes[k];
    ExportNode n;
    n.id = "n" + std::to_string(k);
    n.roots = root_lists(E.system(), b.set);
    n.dim = b.dim;
    n.sigma_word = E.affine().format_word(b.sigma.element);
    n.g_orbit = b.g_orbit;
    d.nodes.push_back(std::move(n));
  }
  d.covers = cover_ids(P, d.nodes);
  return d;
}

PosetDocument document_of(const Engine& E, const TildePoset& P, const Height2Orbit& o) {
  PosetDocument d;
  d.type = std::string(1, E.system().type().letter);
  d.rank = E.system().rank();
  d.kind = "Xtilde";
  d.orbit = o.id;
  for (std::size_t k = 0; k < P.nodes.size(); ++k) {
    const auto& p = P.nodes[k];
    ExportNode n;
    n.id = "t" + std::to_string(k);
    n.roots = root_lists(E.system(), p.set);
    n.dim = p.dim;
    n.sigma_word = E.affine().format_word(p.sigma.element);
    const Height2Orbit* g = g_orbit_of_set(E.system(), E.catalogue(), apply(E.weyl(), p.w, p.set));
    n.g_orbit = g ? g->id : "zero";
    n.w_word = E.weyl().format_word(p.w);
    n.admissible = p.admissible;
    d.nodes.push_back(std::move(n));
  }
  d.covers = cover_ids(P, d.nodes);
  return d;
}

std::string to_json(const PosetDocument& doc) {
  json j;
  j["system"] = {{"type", doc.type}, {"rank", doc.rank}};
  j["kind"] = doc.kind;
  if (!doc.orbit.empty()) j["orbit"] = doc.orbit;
  j["nodes"] = json::array();
  for (const auto& n : doc.nodes) {
    json x = {{"id", n.id}, {"roots", n.roots}, {"dim", n.dim}, {"sigma_word", n.sigma_word}, {"g_orbit", n.g_orbit}};
    if (!n.w_word.empty()) {
      x["w_word"] = n.w_word;
      x["admissible"] = n.admissible;
    }
    j["nodes"].push_back(std::move(x));
  }
  j["covers"] = json::array();
  for (const auto& [a, b] : doc.covers) j["covers"].push_back({a, b});
  return j.dump(2);
}

PosetDocument document_from_json(std::string_view text) {
  try {
    json j = json::parse(text);
    PosetDocument d;
    d.type = j.at("system").at("type").get<std::string>();
    d.rank = j.at("system").at("rank").get<int>();
    d.kind = j.value("kind", std::string("N2"));
    d.orbit = j.value("orbit", std::string());
    for (const auto& x : j.at("nodes")) {
      ExportNode n;
      n.id = x.at("id").get<std::string>();
      n.roots = x.at("roots").get<std::vector<std::vector<int>>>();
      n.dim = x.at("dim").get<int>();
      n.sigma_word = x.at("sigma_word").get<std::string>();
      n.g_orbit = x.at("g_orbit").get<std::string>();
      n.w_word = x.value("w_word", std::string());
      n.admissible = x.value("admissible", false);
      d.nodes.push_back(std::move(n));
    }
    for (const auto& c : j.at("covers")) d.covers.emplace_back(c.at(0).get<std::string>(), c.at(1).get<std::string>());
    return d;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

std::string to_dot(const PosetDocument& doc) {
  std::string out = "digraph hasse {\n  rankdir=BT;\n  node [shape=box];\n";
  std::map<int, std::vector<std::string>> by_dim;
  for (const auto& n : doc.nodes) {
    out += "  \"" + n.id + "\" [label=\"" + n.id + "\\n" + std::to_string(n.dim) + "\"];\n";
    by_dim[n.dim].push_back(n.id);
  }
  for (const auto& [dim, ids] : by_dim) {
    out += "  { rank=same;";
    for (const auto& id : ids) out += " \"" + id + "\";";
    out += " }\n";
  }
  for (const auto& [a, b] : doc.covers) out += "  \"" + a + "\" -> \"" + b + "\";\n";
  out += "}\n";
  return out;
}

}  // namespace nilc
