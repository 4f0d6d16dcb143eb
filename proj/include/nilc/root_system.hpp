#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "nilc/types.hpp"

namespace nilc {

struct CartanType {
  char letter = 'A';
  int rank = 1;

  std::string to_string() const;
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

// Throws InvalidRank for unsupported (letter, rank) combinations.
void validate(const CartanType& type);

// Finite crystallographic root system with Bourbaki numbering of the simple
// roots.  Roots are stored once, in canonical order (height, then
// lexicographic on coordinates), and referred to by RootId.
class RootSystem {
 public:
  static RootSystem build(const CartanType& type);

  const CartanType& type() const { return type_; }
  int rank() const { return rank_; }
  int size() const { return static_cast<int>(roots_.size()); }
  int num_positive() const { return static_cast<int>(positive_.size()); }

  const Vec& coords(RootId r) const { return roots_[r]; }
  // -1 when the vector is not a root.
  RootId find(const Vec& v) const;
  // Throws NotARoot.
  RootId index_of(const Vec& v) const;

  RootId simple(int i) const { return simple_[i]; }
  RootId highest() const { return highest_; }
  RootId negate(RootId r) const { return neg_[r]; }
  bool is_positive(RootId r) const { return positive_flag_[r]; }
  int height(RootId r) const { return height_[r]; }
  int norm2(RootId r) const { return norm2_[r]; }
  bool is_long(RootId r) const { return norm2_[r] == max_norm2_; }
  const std::vector<RootId>& positive_roots() const { return positive_; }

  // <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha)
  int pairing(RootId beta, RootId alpha) const { return pair_[beta * size() + alpha]; }
  int pairing(const Vec& beta, RootId alpha) const;
  // (beta, alpha) with simple-root Gram matrix normalised so the shortest
  // root has squared length 2.
  int inner(const Vec& a, const Vec& b) const;

  // Index of beta + alpha, or -1.
  RootId add(RootId a, RootId b) const { return sum_[a * size() + b]; }
  bool strongly_orthogonal(RootId a, RootId b) const;
  bool dominance_leq(RootId a, RootId b) const;

  int cartan(int i, int j) const { return cartan_[i][j]; }
  int gram(int i, int j) const { return gram_[i][j]; }
  int symmetrizer(int i) const { return gram_[i][i] / 2; }

  // alpha^vee in simple coroot coordinates.
  Vec coroot_coords(RootId r) const;

  // Exact inverse of the Gram matrix as (numerators, common denominator).
  const std::vector<std::vector<long long>>& gram_inverse_num() const { return gram_inv_num_; }
  long long gram_inverse_den() const { return gram_inv_den_; }

 private:
  CartanType type_;
  int rank_ = 0;
  int max_norm2_ = 0;
  std::vector<std::vector<int>> cartan_;
  std::vector<std::vector<int>> gram_;
  std::vector<std::vector<long long>> gram_inv_num_;
  long long gram_inv_den_ = 1;
  std::vector<Vec> roots_;
  std::unordered_map<Vec, RootId, VecHash> index_;
  std::vector<RootId> simple_;
  std::vector<RootId> neg_;
  std::vector<RootId> positive_;
  std::vector<char> positive_flag_;
  std::vector<int> height_;
  std::vector<int> norm2_;
  std::vector<int> pair_;
  std::vector<RootId> sum_;
  RootId highest_ = -1;
};

// Checked helpers on raw coordinates; all throw NotARoot for non-roots.
int pairing(const RootSystem& sys, const Vec& beta, const Vec& alpha);
bool strongly_orthogonal(const RootSystem& sys, const Vec& a, const Vec& b);
bool dominance_leq(const RootSystem& sys, const Vec& a, const Vec& b);

}  // namespace nilc
