#include "nilc/weyl.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

namespace nilc {

std::string format_letters(const std::vector<int>& letters) {
  if (letters.empty()) return "e";
  std::string out;
  for (std::size_t k = 0; k < letters.size(); ++k) {
    if (k) out += ' ';
    out += 's' + std::to_string(letters[k]);
  }
  return out;
}

std::vector<int> parse_letters(std::string_view text, int max_letter) {
  std::vector<int> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "e") continue;
    if (tok.size() < 2 || tok[0] != 's') throw Error(ErrorKind::ParseError, "bad letter '" + tok + "'");
    int k = 0;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i] < '0' || tok[i] > '9') throw Error(ErrorKind::ParseError, "bad letter '" + tok + "'");
      k = k * 10 + (tok[i] - '0');
    }
    if (k > max_letter) throw Error(ErrorKind::ParseError, "letter out of range '" + tok + "'");
    out.push_back(k);
  }
  return out;
}

WeylGroup::WeylGroup(std::shared_ptr<const RootSystem> sys) : sys_(std::move(sys)) {
  for (int i = 0; i < rank(); ++i) simple_.push_back(reflection(sys_->simple(i)));
}

WeylElement WeylGroup::identity() const {
  WeylElement e;
  for (int i = 0; i < rank(); ++i) e.at(i, i) = 1;
  return e;
}

WeylElement WeylGroup::simple_reflection(int i) const { return simple_[i]; }

WeylElement WeylGroup::reflection(RootId alpha) const {
  WeylElement s = identity();
  const Vec& a = sys_->coords(alpha);
  for (int j = 0; j < rank(); ++j) {
    int p = sys_->pairing(sys_->simple(j), alpha);
    for (int i = 0; i < rank(); ++i) s.at(i, j) -= p * a[i];
  }
  return s;
}

WeylElement WeylGroup::compose(const WeylElement& a, const WeylElement& b) const {
  const int n = rank();
  WeylElement c;
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) {
      int bkj = b.at(k, j);
      if (bkj == 0) continue;
      for (int i = 0; i < n; ++i) c.at(i, j) += a.at(i, k) * bkj;
    }
  return c;
}

WeylElement WeylGroup::inverse(const WeylElement& w) const {
  // Orthogonality for the invariant form: M^{-1} = G^{-1} M^T G.
  const int n = rank();
  std::vector<long long> t(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int k = 0; k < n; ++k) s += static_cast<long long>(w.at(k, i)) * sys_->gram(k, j);
      t[i * n + j] = s;
    }
  const auto& gi = sys_->gram_inverse_num();
  const long long den = sys_->gram_inverse_den();
  WeylElement r;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long long s = 0;
      for (int k = 0; k < n; ++k) s += gi[i][k] * t[k * n + j];
      r.at(i, j) = static_cast<int>(s / den);
    }
  return r;
}

Vec WeylGroup::apply(const WeylElement& w, const Vec& v) const {
  Vec out = zero_vec();
  const int n = rank();
  for (int j = 0; j < n; ++j) {
    if (v[j] == 0) continue;
    for (int i = 0; i < n; ++i) out[i] += w.at(i, j) * v[j];
  }
  return out;
}

RootId WeylGroup::act(const WeylElement& w, RootId r) const {
  return sys_->find(apply(w, sys_->coords(r)));
}

bool WeylGroup::is_right_descent(const WeylElement& w, int i) const {
  int h = 0;
  for (int k = 0; k < rank(); ++k) h += w.at(k, i);
  return h < 0;
}

bool WeylGroup::is_left_descent(const WeylElement& w, int i) const {
  return is_right_descent(inverse(w), i);
}

int WeylGroup::length(const WeylElement& w) const {
  const int n = rank();
  Vec colsum = zero_vec();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) colsum[j] += w.at(i, j);
  int len = 0;
  for (RootId r : sys_->positive_roots()) {
    const Vec& b = sys_->coords(r);
    int h = 0;
    for (int j = 0; j < n; ++j) h += b[j] * colsum[j];
    if (h < 0) ++len;
  }
  return len;
}

bool WeylGroup::bruhat_leq(const WeylElement& u0, const WeylElement& w0) const {
  auto key = std::make_pair(u0, w0);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bruhat_cache_.find(key);
    if (it != bruhat_cache_.end()) return it->second;
  }
  WeylElement u = u0, w = w0;
  int lu = length(u), lw = length(w);
  bool result;
  while (true) {
    if (u == w) { result = true; break; }
    if (lu >= lw) { result = false; break; }
    int i = 0;
    while (!is_right_descent(w, i)) ++i;
    if (is_right_descent(u, i)) {
      u = compose(u, simple_[i]);
      --lu;
    }
    w = compose(w, simple_[i]);
    --lw;
  }
  std::lock_guard<std::mutex> lock(mu_);
  bruhat_cache_.emplace(std::move(key), result);
  return result;
}

std::vector<int> WeylGroup::reduced_word(const WeylElement& w0) const {
  std::vector<int> word;
  WeylElement w = w0;
  while (true) {
    int i = 0;
    while (i < rank() && !is_right_descent(w, i)) ++i;
    if (i == rank()) break;
    word.push_back(i);
    w = compose(w, simple_[i]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

WeylElement WeylGroup::from_word(const std::vector<int>& word) const {
  WeylElement w = identity();
  for (int i : word) w = compose(w, simple_[i]);
  return w;
}

std::string WeylGroup::format_word(const WeylElement& w) const {
  auto word = reduced_word(w);
  for (int& k : word) ++k;
  return format_letters(word);
}

WeylElement WeylGroup::parse_word(std::string_view text) const {
  auto letters = parse_letters(text, rank());
  for (int& k : letters) {
    if (k < 1) throw Error(ErrorKind::ParseError, "s0 is not a finite simple reflection");
    --k;
  }
  return from_word(letters);
}

std::vector<WeylElement> WeylGroup::subgroup_elements(const std::vector<int>& gens) const {
  std::vector<WeylElement> out{identity()};
  std::unordered_set<WeylElement, WeylElementHash> seen{identity()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i : gens) {
      WeylElement x = compose(out[k], simple_[i]);
      if (seen.insert(x).second) out.push_back(x);
    }
  }
  return out;
}

WeylElement WeylGroup::longest_element_of(const std::vector<RootId>& base) const {
  WeylElement w = identity();
  std::vector<WeylElement> refl;
  for (RootId b : base) refl.push_back(reflection(b));
  while (true) {
    std::size_t k = 0;
    while (k < base.size() && !sys_->is_positive(act(w, base[k]))) ++k;
    if (k == base.size()) return w;
    w = compose(w, refl[k]);
  }
}

WeylElement WeylGroup::longest_element(const std::vector<int>& subset) const {
  std::vector<RootId> base;
  for (int i : subset) base.push_back(sys_->simple(i));
  return longest_element_of(base);
}

bool WeylGroup::in_min_reps(const WeylElement& w, const std::vector<int>& delta_L) const {
  for (int i : delta_L)
    if (is_right_descent(w, i)) return false;
  return true;
}

std::vector<WeylElement> WeylGroup::min_coset_reps(const std::vector<int>& delta_L) const {
  std::vector<WeylElement> out{identity()};
  std::vector<int> lens{0};
  std::unordered_set<WeylElement, WeylElementHash> seen{identity()};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (int i = 0; i < rank(); ++i) {
      WeylElement x = compose(simple_[i], out[k]);
      if (seen.count(x)) continue;
      int lx = length(x);
      if (lx <= lens[k] || !in_min_reps(x, delta_L)) continue;
      seen.insert(x);
      out.push_back(x);
      lens.push_back(lx);
    }
  }
  return out;
}

std::vector<WeylElement> WeylGroup::min_coset_reps(const std::vector<int>& J,
                                                   const std::vector<int>& K) const {
  std::vector<WeylElement> out;
  for (const auto& u : subgroup_elements(J))
    if (in_min_reps(u, K)) out.push_back(u);
  return out;
}

ParabolicData WeylGroup::parabolic(const std::vector<int>& delta_L) const {
  ParabolicData p;
  p.delta_L = delta_L;
  p.W_L = subgroup_elements(delta_L);
  p.w_L = longest_element(delta_L);
  p.min_reps = min_coset_reps(delta_L);
  return p;
}

std::pair<WeylElement, WeylElement> WeylGroup::coset_decompose(const WeylElement& w,
                                                               const std::vector<int>& delta_L) const {
  WeylElement v = w;
  while (true) {
    auto it = std::find_if(delta_L.begin(), delta_L.end(), [&](int i) { return is_right_descent(v, i); });
    if (it == delta_L.end()) break;
    v = compose(v, simple_[*it]);
  }
  return {v, compose(inverse(v), w)};
}

std::vector<WeylElement> WeylGroup::elements() const {
  std::vector<int> all(rank());
  for (int i = 0; i < rank(); ++i) all[i] = i;
  return subgroup_elements(all);
}

}  // namespace nilc
