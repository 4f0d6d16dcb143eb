#include "nilc/affine_weyl.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>

#include "nilc/text.hpp"

namespace nilc {

const char* descent_kind_name(DescentKind k) {
  switch (k) {
    case DescentKind::None: return "none";
    case DescentKind::Real: return "real";
    case DescentKind::Complex: return "complex";
  }
  return "?";
}

AffineWeylGroup::AffineWeylGroup(std::shared_ptr<const RootSystem> sys)
    : sys_(std::move(sys)), weyl_(sys_) {
  for (int a = 0; a <= rank(); ++a) simple_.push_back(reflect(simple_root(a)));
}

AffineRoot AffineWeylGroup::simple_root(int a) const {
  if (a == 0) return {sys_->negate(sys_->highest()), 1};
  return {sys_->simple(a - 1), 0};
}

AffineWeylElement AffineWeylGroup::identity() const { return {weyl_.identity(), zero_vec()}; }

AffineWeylElement AffineWeylGroup::from_finite(const WeylElement& w) const { return {w, zero_vec()}; }

AffineWeylElement AffineWeylGroup::reflect(const AffineRoot& r) const {
  // s_{alpha + n delta} = s_alpha t_{n alpha^vee}
  Vec ev = zero_vec();
  for (int i = 0; i < rank(); ++i) ev[i] = r.n * sys_->pairing(sys_->simple(i), r.finite);
  return {weyl_.reflection(r.finite), ev};
}

AffineWeylElement AffineWeylGroup::translation(const Vec& c) const {
  Vec ev = zero_vec();
  for (int i = 0; i < rank(); ++i)
    for (int j = 0; j < rank(); ++j) ev[i] += c[j] * sys_->cartan(i, j);
  return {weyl_.identity(), ev};
}

Vec AffineWeylGroup::lambda_coroot_coords(const AffineWeylElement& x) const {
  const int n = rank();
  const auto& gi = sys_->gram_inverse_num();
  const long long den = sys_->gram_inverse_den();
  Vec c = zero_vec();
  for (int j = 0; j < n; ++j) {
    long long y = 0;
    for (int k = 0; k < n; ++k) y += gi[j][k] * x.eval()[k];
    c[j] = static_cast<int>(y * sys_->gram(j, j) / (2 * den));
  }
  return c;
}

namespace {
int dot(const Vec& a, const Vec& b, int n) {
  int s = 0;
  for (int i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}
}  // namespace

AffineRoot AffineWeylGroup::act(const AffineWeylElement& x, const AffineRoot& r) const {
  const Vec& b = sys_->coords(r.finite);
  return {weyl_.act(x.finite(), r.finite), r.n - dot(b, x.eval(), rank())};
}

bool AffineWeylGroup::is_positive(const AffineRoot& r) const {
  return r.n > 0 || (r.n == 0 && sys_->is_positive(r.finite));
}

AffineWeylElement AffineWeylGroup::compose(const AffineWeylElement& a, const AffineWeylElement& b) const {
  // (w1 t_l1)(w2 t_l2) = w1 w2 t_{w2^{-1} l1 + l2}
  const int n = rank();
  Vec ev = b.eval();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) ev[i] += b.finite().at(k, i) * a.eval()[k];
  return {weyl_.compose(a.finite(), b.finite()), ev};
}

AffineWeylElement AffineWeylGroup::inverse(const AffineWeylElement& x) const {
  const int n = rank();
  WeylElement wi = weyl_.inverse(x.finite());
  Vec ev = zero_vec();
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) ev[i] -= wi.at(k, i) * x.eval()[k];
  return {wi, ev};
}

bool AffineWeylGroup::is_right_descent(const AffineWeylElement& x, int a) const {
  const int n = rank();
  const WeylElement& w = x.finite();
  int h = 0, m;
  if (a == 0) {
    const Vec& t = sys_->coords(sys_->highest());
    for (int j = 0; j < n; ++j) {
      int col = 0;
      for (int i = 0; i < n; ++i) col += w.at(i, j);
      h -= t[j] * col;
    }
    m = 1 + dot(t, x.eval(), n);
  } else {
    for (int i = 0; i < n; ++i) h += w.at(i, a - 1);
    m = -x.eval()[a - 1];
  }
  return m < 0 || (m == 0 && h < 0);
}

bool AffineWeylGroup::is_left_descent(const AffineWeylElement& x, int a) const {
  return is_right_descent(inverse(x), a);
}

int AffineWeylGroup::length(const AffineWeylElement& x) const {
  const int n = rank();
  Vec colsum = zero_vec();
  for (int j = 0; j < n; ++j)
    for (int i = 0; i < n; ++i) colsum[j] += x.finite().at(i, j);
  int len = 0;
  for (RootId r : sys_->positive_roots()) {
    const Vec& b = sys_->coords(r);
    const int k = dot(b, x.eval(), n);
    const bool neg = dot(b, colsum, n) < 0;
    // beta + m delta with m >= 0, then -beta + m delta with m >= 1.
    len += std::max(k, 0) + (k >= 0 && neg ? 1 : 0);
    len += std::max(-k - 1, 0) + (k <= -1 && !neg ? 1 : 0);
  }
  return len;
}

int AffineWeylGroup::length_by_peeling(const AffineWeylElement& x) const {
  return static_cast<int>(reduced_word(x).size());
}

std::vector<int> AffineWeylGroup::reduced_word(const AffineWeylElement& x0) const {
  std::vector<int> word;
  AffineWeylElement x = x0;
  while (true) {
    int a = 0;
    while (a <= rank() && !is_right_descent(x, a)) ++a;
    if (a > rank()) break;
    word.push_back(a);
    x = compose(x, simple_[a]);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

AffineWeylElement AffineWeylGroup::from_word(const std::vector<int>& word) const {
  AffineWeylElement x = identity();
  for (int a : word) x = compose(x, simple_[a]);
  return x;
}

std::string AffineWeylGroup::format_word(const AffineWeylElement& x) const {
  return format_letters(reduced_word(x));
}

AffineWeylElement AffineWeylGroup::parse_word(std::string_view text) const {
  return from_word(parse_letters(text, rank()));
}

bool AffineWeylGroup::bruhat_leq(const AffineWeylElement& x0, const AffineWeylElement& y0) const {
  auto key = std::make_pair(x0, y0);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = bruhat_cache_.find(key);
    if (it != bruhat_cache_.end()) return it->second;
  }
  AffineWeylElement x = x0, y = y0;
  int lx = length(x), ly = length(y);
  bool result;
  // Lifting property on the right: if ys < y then x <= y iff
  // (xs < x ? xs <= ys : x <= ys).
  while (true) {
    if (x == y) { result = true; break; }
    if (lx >= ly) { result = false; break; }
    int a = 0;
    while (!is_right_descent(y, a)) ++a;
    if (is_right_descent(x, a)) {
      x = compose(x, simple_[a]);
      --lx;
    }
    y = compose(y, simple_[a]);
    --ly;
  }
  std::lock_guard<std::mutex> lock(mu_);
  bruhat_cache_.emplace(std::move(key), result);
  return result;
}

bool AffineWeylGroup::commute(const AffineWeylElement& a, const AffineWeylElement& b) const {
  return compose(a, b) == compose(b, a);
}

AffineInvolution AffineWeylGroup::sigma_of_set(const OrthSet& S) const {
  for (std::size_t i = 0; i < S.roots.size(); ++i)
    for (std::size_t j = i + 1; j < S.roots.size(); ++j)
      if (!sys_->strongly_orthogonal(S.roots[i], S.roots[j]))
        throw Error(ErrorKind::NotStronglyOrthogonal, format_set(*sys_, S));
  AffineWeylElement x = identity();
  for (RootId r : S.roots) x = compose(x, reflect({r, -1}));
  AffineInvolution s{x, static_cast<int>(S.size())};
  assert(fixed_codim(x) == s.moved_rank);
  return s;
}

DescentKind AffineWeylGroup::descent_type(int a, const AffineInvolution& sigma) const {
  AffineRoot r = simple_root(a);
  AffineRoot img = act(sigma.element, r);
  if (is_positive(img)) return DescentKind::None;
  if (img.finite == sys_->negate(r.finite) && img.n == -r.n) return DescentKind::Real;
  return DescentKind::Complex;
}

AffineInvolution AffineWeylGroup::circ(int a, const AffineInvolution& sigma) const {
  const AffineWeylElement& s = simple_[a];
  AffineInvolution out;
  if (commute(s, sigma.element)) {
    // sigma(a) = -a removes a from the (-1)-eigenspace, sigma(a) = a adds it.
    AffineRoot r = simple_root(a);
    AffineRoot img = act(sigma.element, r);
    out.element = compose(s, sigma.element);
    out.moved_rank = sigma.moved_rank + (img == r ? 1 : -1);
  } else {
    out.element = compose(compose(s, sigma.element), s);
    out.moved_rank = sigma.moved_rank;
  }
  assert(fixed_codim(out.element) == out.moved_rank);
  return out;
}

int AffineWeylGroup::involution_height(const AffineInvolution& sigma) const {
  int best = 0;
  for (RootId r = 0; r < sys_->size(); ++r)
    best = std::max(best, -dot(sys_->coords(r), sigma.element.eval(), rank()));
  return best;
}

int AffineWeylGroup::involution_length(const AffineInvolution& sigma) const {
  return (length(sigma.element) + sigma.moved_rank) / 2;
}

int AffineWeylGroup::fixed_codim(const AffineWeylElement& x) const {
  const int n = rank();
  const int d = n + 1;
  std::vector<std::vector<__int128>> m(d, std::vector<__int128>(d, 0));
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) m[i][j] = (i == j ? 1 : 0) - x.finite().at(i, j);
    m[n][j] = x.eval()[j];
  }
  // Column for delta is zero in id - x.
  int rank_found = 0;
  __int128 prev = 1;
  for (int c = 0; c < d && rank_found < d; ++c) {
    int piv = -1;
    for (int r = rank_found; r < d; ++r)
      if (m[r][c] != 0) { piv = r; break; }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank_found]);
    for (int r = rank_found + 1; r < d; ++r) {
      for (int k = c + 1; k < d; ++k) m[r][k] = (m[rank_found][c] * m[r][k] - m[r][c] * m[rank_found][k]) / prev;
      m[r][c] = 0;
    }
    prev = m[rank_found][c];
    ++rank_found;
  }
  return rank_found;
}

std::string format_affine_root(const RootSystem& sys, const AffineRoot& r) {
  return format_root(sys, r.finite) + " @ " + std::to_string(r.n);
}

AffineRoot parse_affine_root(const RootSystem& sys, std::string_view text) {
  auto at = text.find('@');
  if (at == std::string_view::npos) throw Error(ErrorKind::ParseError, "expected 'root @ n'");
  RootId r = parse_root(sys, text.substr(0, at));
  std::string tail(text.substr(at + 1));
  char* end = nullptr;
  long n = std::strtol(tail.c_str(), &end, 10);
  while (end && *end == ' ') ++end;
  if (end == tail.c_str() || (end && *end != '\0')) throw Error(ErrorKind::ParseError, "bad delta coefficient");
  return {r, static_cast<int>(n)};
}

}  // namespace nilc
