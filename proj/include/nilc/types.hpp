#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace nilc {

inline constexpr int kMaxRank = 8;

// Integer vector over the simple roots (or simple coroots), zero padded.
using Vec = std::array<int, kMaxRank>;

// Action matrix of a Weyl group element, column j = image of the j-th simple
// root.  Stored with a fixed stride of kMaxRank.
using Mat = std::array<int, kMaxRank * kMaxRank>;

using RootId = int;

enum class ErrorKind {
  InvalidRank,
  NotARoot,
  NotStronglyOrthogonal,
  NonUniqueMaximum,
  ChainMismatch,
  NotInCatalogue,
  EmptySet,
  HeightOutOfRange,
  NotInOrtX,
  NotADescent,
  TooLong,
  ParseError,
};

const char* error_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return error_name(kind_); }

 private:
  ErrorKind kind_;
};

template <std::size_t N>
struct ArrayHash {
  std::size_t operator()(const std::array<int, N>& a) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : a) {
      h ^= static_cast<std::uint32_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h ^ (h >> 29));
  }
};

using VecHash = ArrayHash<kMaxRank>;

inline Vec zero_vec() {
  Vec v{};
  v.fill(0);
  return v;
}

}  // namespace nilc
