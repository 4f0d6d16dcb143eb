#pragma once

#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nilc/orth_set.hpp"
#include "nilc/weyl.hpp"

namespace nilc {

// beta + n delta
struct AffineRoot {
  RootId finite = -1;
  int n = 0;
  friend bool operator==(const AffineRoot&, const AffineRoot&) = default;
};

// w t_lambda, acting by beta + m delta -> w(beta) + (m - <beta, lambda>) delta.
// lambda lies in the coroot lattice; it is stored through its values on the
// simple roots, eval[i] = <alpha_i, lambda>, which makes composition a
// transpose-multiply.
class AffineWeylElement {
 public:
  AffineWeylElement() { eval_.fill(0); }
  AffineWeylElement(const WeylElement& w, const Vec& eval) : w_(w), eval_(eval) {}

  const WeylElement& finite() const { return w_; }
  const Vec& eval() const { return eval_; }

  friend bool operator==(const AffineWeylElement& a, const AffineWeylElement& b) {
    return a.eval_ == b.eval_ && a.w_ == b.w_;
  }
  friend bool operator!=(const AffineWeylElement& a, const AffineWeylElement& b) { return !(a == b); }

 private:
  WeylElement w_;
  Vec eval_;
};

struct AffineWeylElementHash {
  std::size_t operator()(const AffineWeylElement& x) const noexcept {
    return WeylElementHash{}(x.finite()) * 1000003u ^ VecHash{}(x.eval());
  }
};

// An involution together with rk(id - sigma).
struct AffineInvolution {
  AffineWeylElement element;
  int moved_rank = 0;
  friend bool operator==(const AffineInvolution& a, const AffineInvolution& b) {
    return a.element == b.element && a.moved_rank == b.moved_rank;
  }
};

enum class DescentKind { None, Real, Complex };
const char* descent_kind_name(DescentKind k);

class AffineWeylGroup {
 public:
  explicit AffineWeylGroup(std::shared_ptr<const RootSystem> sys);

  const RootSystem& system() const { return *sys_; }
  const WeylGroup& weyl() const { return weyl_; }
  int rank() const { return sys_->rank(); }

  // Index 0 is delta - theta, index i >= 1 is alpha_i.
  AffineRoot simple_root(int a) const;
  AffineWeylElement simple_reflection(int a) const { return simple_[a]; }
  AffineWeylElement identity() const;
  AffineWeylElement reflect(const AffineRoot& r) const;
  AffineWeylElement from_finite(const WeylElement& w) const;
  AffineWeylElement translation(const Vec& coroot_coords) const;

  AffineRoot act(const AffineWeylElement& x, const AffineRoot& r) const;
  bool is_positive(const AffineRoot& r) const;
  AffineWeylElement compose(const AffineWeylElement& a, const AffineWeylElement& b) const;
  AffineWeylElement inverse(const AffineWeylElement& x) const;
  // lambda in simple coroot coordinates.
  Vec lambda_coroot_coords(const AffineWeylElement& x) const;

  // x(a) < 0 for the simple affine root a.
  bool is_right_descent(const AffineWeylElement& x, int a) const;
  bool is_left_descent(const AffineWeylElement& x, int a) const;

  // Closed-form count of positive affine roots sent negative.
  int length(const AffineWeylElement& x) const;
  // Strip right descents one at a time.
  int length_by_peeling(const AffineWeylElement& x) const;

  std::vector<int> reduced_word(const AffineWeylElement& x) const;
  AffineWeylElement from_word(const std::vector<int>& word) const;
  std::string format_word(const AffineWeylElement& x) const;
  AffineWeylElement parse_word(std::string_view text) const;

  bool bruhat_leq(const AffineWeylElement& x, const AffineWeylElement& y) const;

  bool commute(const AffineWeylElement& a, const AffineWeylElement& b) const;

  // prod_{alpha in S} s_{alpha - delta}
  AffineInvolution sigma_of_set(const OrthSet& S) const;
  DescentKind descent_type(int a, const AffineInvolution& sigma) const;
  AffineInvolution circ(int a, const AffineInvolution& sigma) const;
  // max over all roots of the delta coefficient of sigma(alpha).
  int involution_height(const AffineInvolution& sigma) const;
  int involution_length(const AffineInvolution& sigma) const;
  // rk(id - x) on the span of the simple roots and delta, by exact elimination.
  int fixed_codim(const AffineWeylElement& x) const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<AffineWeylElement, AffineWeylElement>& p) const noexcept {
      return AffineWeylElementHash{}(p.first) * 31 + AffineWeylElementHash{}(p.second);
    }
  };

  std::shared_ptr<const RootSystem> sys_;
  WeylGroup weyl_;
  std::vector<AffineWeylElement> simple_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::pair<AffineWeylElement, AffineWeylElement>, bool, PairHash> bruhat_cache_;
};

std::string format_affine_root(const RootSystem& sys, const AffineRoot& r);
AffineRoot parse_affine_root(const RootSystem& sys, std::string_view text);

}  // namespace nilc
