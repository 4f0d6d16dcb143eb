#include "nilc/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <utility>

namespace nilc {

const char* error_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidRank: return "InvalidRank";
    case ErrorKind::NotARoot: return "NotARoot";
    case ErrorKind::NotStronglyOrthogonal: return "NotStronglyOrthogonal";
    case ErrorKind::NonUniqueMaximum: return "NonUniqueMaximum";
    case ErrorKind::ChainMismatch: return "ChainMismatch";
    case ErrorKind::NotInCatalogue: return "NotInCatalogue";
    case ErrorKind::EmptySet: return "EmptySet";
    case ErrorKind::HeightOutOfRange: return "HeightOutOfRange";
    case ErrorKind::NotInOrtX: return "NotInOrtX";
    case ErrorKind::NotADescent: return "NotADescent";
    case ErrorKind::TooLong: return "TooLong";
    case ErrorKind::ParseError: return "ParseError";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(error_name(kind)) + ": " + what), kind_(kind) {}

std::string CartanType::to_string() const { return std::string(1, letter) + std::to_string(rank); }

void validate(const CartanType& t) {
  auto bad = [&] { throw Error(ErrorKind::InvalidRank, "unsupported type " + t.to_string()); };
  if (t.rank < 1 || t.rank > kMaxRank) bad();
  switch (t.letter) {
    case 'A': break;
    case 'B':
    case 'C':
      if (t.rank < 2) bad();
      break;
    case 'D':
      if (t.rank < 3) bad();
      break;
    case 'E':
      if (t.rank < 6 || t.rank > 8) bad();
      break;
    case 'F':
      if (t.rank != 4) bad();
      break;
    case 'G':
      if (t.rank != 2) bad();
      break;
    default: bad();
  }
}

namespace {

struct Diagram {
  std::vector<int> norm2;
  std::vector<std::pair<int, int>> edges;
};

// Bourbaki numbering, 0-based.  Shortest roots have squared length 2.
Diagram diagram_of(const CartanType& t) {
  const int n = t.rank;
  Diagram d;
  d.norm2.assign(n, 2);
  auto chain = [&](int upto) {
    for (int i = 0; i + 1 < upto; ++i) d.edges.emplace_back(i, i + 1);
  };
  switch (t.letter) {
    case 'A': chain(n); break;
    case 'B':
      chain(n);
      for (int i = 0; i + 1 < n; ++i) d.norm2[i] = 4;
      break;
    case 'C':
      chain(n);
      d.norm2[n - 1] = 4;
      break;
    case 'D':
      chain(n - 1);
      d.edges.emplace_back(n - 3, n - 1);
      break;
    case 'E':
      d.edges.emplace_back(0, 2);
      d.edges.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) d.edges.emplace_back(i, i + 1);
      break;
    case 'F':
      chain(4);
      d.norm2 = {4, 4, 2, 2};
      break;
    case 'G':
      d.edges.emplace_back(0, 1);
      d.norm2 = {2, 6};
      break;
  }
  return d;
}

struct Frac {
  long long p = 0, q = 1;
  void norm() {
    if (q < 0) { p = -p; q = -q; }
    long long g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) { p /= g; q /= g; }
  }
};

Frac operator-(Frac a, Frac b) { Frac r{a.p * b.q - b.p * a.q, a.q * b.q}; r.norm(); return r; }
Frac operator*(Frac a, Frac b) { Frac r{a.p * b.p, a.q * b.q}; r.norm(); return r; }
Frac operator/(Frac a, Frac b) { Frac r{a.p * b.q, a.q * b.p}; r.norm(); return r; }

}  // namespace

RootSystem RootSystem::build(const CartanType& type) {
  validate(type);
  RootSystem s;
  s.type_ = type;
  const int n = type.rank;
  s.rank_ = n;
  Diagram d = diagram_of(type);
  s.gram_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) s.gram_[i][i] = d.norm2[i];
  for (auto [i, j] : d.edges) {
    int v = -std::max(d.norm2[i], d.norm2[j]) / 2;
    s.gram_[i][j] = s.gram_[j][i] = v;
  }
  s.cartan_.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s.cartan_[i][j] = 2 * s.gram_[i][j] / s.gram_[j][j];
  s.max_norm2_ = *std::max_element(d.norm2.begin(), d.norm2.end());

  // Exact Gram inverse by Gauss-Jordan over the rationals.
  {
    std::vector<std::vector<Frac>> a(n, std::vector<Frac>(2 * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = Frac{s.gram_[i][j], 1};
      a[i][n + i] = Frac{1, 1};
    }
    for (int c = 0; c < n; ++c) {
      int piv = c;
      while (a[piv][c].p == 0) ++piv;
      std::swap(a[piv], a[c]);
      Frac inv = Frac{1, 1} / a[c][c];
      for (auto& x : a[c]) x = x * inv;
      for (int r = 0; r < n; ++r) {
        if (r == c || a[r][c].p == 0) continue;
        Frac f = a[r][c];
        for (int k = 0; k < 2 * n; ++k) a[r][k] = a[r][k] - f * a[c][k];
      }
    }
    long long den = 1;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) den = std::lcm(den, a[i][n + j].q);
    s.gram_inv_den_ = den;
    s.gram_inv_num_.assign(n, std::vector<long long>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s.gram_inv_num_[i][j] = a[i][n + j].p * (den / a[i][n + j].q);
  }

  // Close the simple roots under simple reflections.
  std::vector<Vec> found;
  std::unordered_map<Vec, int, VecHash> seen;
  std::deque<Vec> queue;
  for (int i = 0; i < n; ++i) {
    Vec v = zero_vec();
    v[i] = 1;
    seen.emplace(v, 0);
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vec b = queue.front();
    queue.pop_front();
    found.push_back(b);
    for (int i = 0; i < n; ++i) {
      int p = 0;
      for (int j = 0; j < n; ++j) p += b[j] * s.cartan_[j][i];
      if (p == 0) continue;
      Vec c = b;
      c[i] -= p;
      if (seen.emplace(c, 0).second) queue.push_back(c);
    }
  }
  auto height_of = [n](const Vec& v) {
    int h = 0;
    for (int i = 0; i < n; ++i) h += v[i];
    return h;
  };
  std::sort(found.begin(), found.end(), [&](const Vec& a, const Vec& b) {
    int ha = height_of(a), hb = height_of(b);
    if (ha != hb) return ha < hb;
    return a < b;
  });
  s.roots_ = std::move(found);
  const int N = s.size();
  for (int r = 0; r < N; ++r) s.index_.emplace(s.roots_[r], r);
  s.neg_.resize(N);
  s.height_.resize(N);
  s.norm2_.resize(N);
  s.positive_flag_.resize(N);
  for (int r = 0; r < N; ++r) {
    Vec m = s.roots_[r];
    for (int i = 0; i < n; ++i) m[i] = -m[i];
    s.neg_[r] = s.index_.at(m);
    s.height_[r] = height_of(s.roots_[r]);
    s.norm2_[r] = s.inner(s.roots_[r], s.roots_[r]);
    s.positive_flag_[r] = s.height_[r] > 0;
    if (s.positive_flag_[r]) s.positive_.push_back(r);
  }
  s.simple_.resize(n);
  for (int i = 0; i < n; ++i) {
    Vec v = zero_vec();
    v[i] = 1;
    s.simple_[i] = s.index_.at(v);
  }
  s.highest_ = N - 1;
  s.pair_.resize(static_cast<std::size_t>(N) * N);
  s.sum_.resize(static_cast<std::size_t>(N) * N);
  for (int a = 0; a < N; ++a) {
    for (int b = 0; b < N; ++b) {
      s.pair_[a * N + b] = 2 * s.inner(s.roots_[a], s.roots_[b]) / s.norm2_[b];
      Vec c = s.roots_[a];
      for (int i = 0; i < n; ++i) c[i] += s.roots_[b][i];
      s.sum_[a * N + b] = s.find(c);
    }
  }
  return s;
}

RootId RootSystem::find(const Vec& v) const {
  auto it = index_.find(v);
  return it == index_.end() ? -1 : it->second;
}

RootId RootSystem::index_of(const Vec& v) const {
  RootId r = find(v);
  if (r < 0) {
    std::string txt;
    for (int i = 0; i < rank_; ++i) txt += (i ? "," : "") + std::to_string(v[i]);
    throw Error(ErrorKind::NotARoot, txt + " is not a root of " + type_.to_string());
  }
  return r;
}

int RootSystem::inner(const Vec& a, const Vec& b) const {
  int s = 0;
  for (int i = 0; i < rank_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank_; ++j) s += a[i] * gram_[i][j] * b[j];
  }
  return s;
}

int RootSystem::pairing(const Vec& beta, RootId alpha) const {
  return 2 * inner(beta, roots_[alpha]) / norm2_[alpha];
}

bool RootSystem::strongly_orthogonal(RootId a, RootId b) const {
  if (a == b || a == neg_[b]) return false;
  return add(a, b) < 0 && add(a, neg_[b]) < 0;
}

bool RootSystem::dominance_leq(RootId a, RootId b) const {
  for (int i = 0; i < rank_; ++i)
    if (roots_[b][i] < roots_[a][i]) return false;
  return true;
}

Vec RootSystem::coroot_coords(RootId r) const {
  Vec c = zero_vec();
  for (int i = 0; i < rank_; ++i) c[i] = roots_[r][i] * gram_[i][i] / norm2_[r];
  return c;
}

int pairing(const RootSystem& sys, const Vec& beta, const Vec& alpha) {
  return sys.pairing(sys.index_of(beta), sys.index_of(alpha));
}

bool strongly_orthogonal(const RootSystem& sys, const Vec& a, const Vec& b) {
  return sys.strongly_orthogonal(sys.index_of(a), sys.index_of(b));
}

bool dominance_leq(const RootSystem& sys, const Vec& a, const Vec& b) {
  return sys.dominance_leq(sys.index_of(a), sys.index_of(b));
}

}  // namespace nilc
