#pragma once

#include <optional>
#include <string>

#include "nilc/text.hpp"
#include "nilc/types.hpp"

namespace testing {

// Kind of the nilc::Error thrown by f, or nothing.
template <class F>
std::optional<nilc::ErrorKind> error_of(F&& f) {
  try {
    f();
  } catch (const nilc::Error& e) {
    return e.kind();
  }
  return std::nullopt;
}

inline nilc::OrthSet set(const nilc::RootSystem& sys, const std::string& text) { return nilc::parse_set(sys, text); }
inline nilc::RootId root(const nilc::RootSystem& sys, const std::string& text) { return nilc::parse_root(sys, text); }

}  // namespace testing
