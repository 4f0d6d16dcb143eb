#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "nilc/root_system.hpp"

namespace nilc {

class WeylElement {
 public:
  WeylElement() { m_.fill(0); }
  explicit WeylElement(const Mat& m) : m_(m) {}

  const Mat& matrix() const { return m_; }
  int at(int row, int col) const { return m_[col * kMaxRank + row]; }
  int& at(int row, int col) { return m_[col * kMaxRank + row]; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.m_ == b.m_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

 private:
  Mat m_;
};

struct WeylElementHash {
  std::size_t operator()(const WeylElement& w) const noexcept {
    return ArrayHash<kMaxRank * kMaxRank>{}(w.matrix());
  }
};

struct ParabolicData {
  std::vector<int> delta_L;            // 0-based simple indices
  std::vector<WeylElement> W_L;        // all elements of the Levi Weyl group
  WeylElement w_L;                     // its longest element
  std::vector<WeylElement> min_reps;   // W^P, minimal left coset representatives
};

class WeylGroup {
 public:
  explicit WeylGroup(std::shared_ptr<const RootSystem> sys);

  const RootSystem& system() const { return *sys_; }
  int rank() const { return sys_->rank(); }

  WeylElement identity() const;
  WeylElement simple_reflection(int i) const;  // 0-based
  WeylElement reflection(RootId alpha) const;
  WeylElement compose(const WeylElement& a, const WeylElement& b) const;
  WeylElement inverse(const WeylElement& w) const;

  Vec apply(const WeylElement& w, const Vec& v) const;
  RootId act(const WeylElement& w, RootId r) const;

  // w(alpha_i) < 0, i.e. l(w s_i) < l(w)
  bool is_right_descent(const WeylElement& w, int i) const;
  // w^{-1}(alpha_i) < 0, i.e. l(s_i w) < l(w)
  bool is_left_descent(const WeylElement& w, int i) const;

  int length(const WeylElement& w) const;
  bool bruhat_leq(const WeylElement& u, const WeylElement& w) const;

  // 0-based letters; the word reads left to right as a product.
  std::vector<int> reduced_word(const WeylElement& w) const;
  WeylElement from_word(const std::vector<int>& word) const;
  std::string format_word(const WeylElement& w) const;
  WeylElement parse_word(std::string_view text) const;

  std::vector<WeylElement> subgroup_elements(const std::vector<int>& gens) const;
  // Longest element of the subgroup generated by reflections in `base`,
  // a base of a root subsystem whose positive roots lie in the positive
  // roots of the whole system.
  WeylElement longest_element_of(const std::vector<RootId>& base) const;
  WeylElement longest_element(const std::vector<int>& simple_subset) const;
  std::vector<WeylElement> min_coset_reps(const std::vector<int>& delta_L) const;
  // Relative version: minimal representatives of W_J modulo W_K, K inside J.
  std::vector<WeylElement> min_coset_reps(const std::vector<int>& J, const std::vector<int>& K) const;
  ParabolicData parabolic(const std::vector<int>& delta_L) const;
  // w = first * second with first in W^P and second in W_L.
  std::pair<WeylElement, WeylElement> coset_decompose(const WeylElement& w,
                                                      const std::vector<int>& delta_L) const;
  bool in_min_reps(const WeylElement& w, const std::vector<int>& delta_L) const;

  std::vector<WeylElement> elements() const;

 private:
  struct PairHash {
    std::size_t operator()(const std::pair<WeylElement, WeylElement>& p) const noexcept {
      return WeylElementHash{}(p.first) * 31 + WeylElementHash{}(p.second);
    }
  };

  std::shared_ptr<const RootSystem> sys_;
  std::vector<WeylElement> simple_;
  mutable std::mutex mu_;
  mutable std::unordered_map<std::pair<WeylElement, WeylElement>, bool, PairHash> bruhat_cache_;
};

// Shared word formatting: letters are printed as s<k>, identity as "e".
std::string format_letters(const std::vector<int>& letters);
std::vector<int> parse_letters(std::string_view text, int max_letter);

}  // namespace nilc
