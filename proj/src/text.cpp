#include "nilc/text.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace nilc {

namespace {
std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}
}  // namespace

std::string format_vec(const Vec& v, int rank, std::string_view sep) {
  std::string out;
  for (int i = 0; i < rank; ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string format_root(const RootSystem& sys, RootId r) { return format_vec(sys.coords(r), sys.rank()); }

RootId parse_root(const RootSystem& sys, std::string_view text) {
  text = trim(text);
  Vec v = zero_vec();
  int k = 0;
  while (true) {
    auto comma = text.find(',');
    std::string_view tok = trim(text.substr(0, comma));
    if (k >= sys.rank()) throw Error(ErrorKind::ParseError, "too many coordinates in '" + std::string(text) + "'");
    if (!tok.empty() && tok.front() == '+') tok.remove_prefix(1);
    int x = 0;
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), x);
    if (ec != std::errc() || p != tok.data() + tok.size() || tok.empty())
      throw Error(ErrorKind::ParseError, "bad coordinate '" + std::string(tok) + "'");
    v[k++] = x;
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
  }
  if (k != sys.rank())
    throw Error(ErrorKind::ParseError, "expected " + std::to_string(sys.rank()) + " coordinates");
  return sys.index_of(v);
}

std::string format_set(const RootSystem& sys, const OrthSet& S) {
  if (S.empty()) return "{}";
  std::string out;
  for (std::size_t i = 0; i < S.roots.size(); ++i) {
    if (i) out += ";";
    out += format_root(sys, S.roots[i]);
  }
  return out;
}

OrthSet parse_set(const RootSystem& sys, std::string_view text) {
  text = trim(text);
  std::vector<RootId> roots;
  if (!text.empty() && text != "{}") {
    while (true) {
      auto semi = text.find(';');
      roots.push_back(parse_root(sys, text.substr(0, semi)));
      if (semi == std::string_view::npos) break;
      text = text.substr(semi + 1);
    }
  }
  return make_orth_set(sys, std::move(roots));
}

std::string format_diagram(const Vec& labels, int rank) { return format_vec(labels, rank, ""); }

CartanType parse_type(std::string_view letter, int rank) {
  letter = trim(letter);
  if (letter.size() != 1) throw Error(ErrorKind::ParseError, "type must be a single letter");
  CartanType t{static_cast<char>(std::toupper(static_cast<unsigned char>(letter[0]))), rank};
  validate(t);
  return t;
}

bool OrthSet::contains(RootId r) const { return std::binary_search(roots.begin(), roots.end(), r); }

OrthSet make_orth_set(const RootSystem& sys, std::vector<RootId> roots) {
  std::sort(roots.begin(), roots.end());
  for (std::size_t i = 0; i < roots.size(); ++i)
    for (std::size_t j = i + 1; j < roots.size(); ++j)
      if (!sys.strongly_orthogonal(roots[i], roots[j]))
        throw Error(ErrorKind::NotStronglyOrthogonal,
                    format_root(sys, roots[i]) + " and " + format_root(sys, roots[j]));
  return OrthSet{std::move(roots)};
}

OrthSet make_orth_set(const RootSystem& sys, const std::vector<Vec>& roots) {
  std::vector<RootId> ids;
  for (const auto& v : roots) ids.push_back(sys.index_of(v));
  return make_orth_set(sys, std::move(ids));
}

}  // namespace nilc
