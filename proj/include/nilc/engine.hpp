#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "nilc/affine_weyl.hpp"
#include "nilc/catalogue.hpp"

namespace nilc {

// Everything attached to one root system: the finite and affine Weyl groups
// (each with its own Bruhat cache) and the height-2 catalogue.
class Engine {
 public:
  explicit Engine(const CartanType& type);

  const RootSystem& system() const { return *sys_; }
  std::shared_ptr<const RootSystem> system_ptr() const { return sys_; }
  const WeylGroup& weyl() const { return affine_.weyl(); }
  const AffineWeylGroup& affine() const { return affine_; }
  const std::vector<Height2Orbit>& catalogue() const { return catalogue_; }
  const Height2Orbit& orbit(std::string_view id) const { return find_orbit(catalogue_, id); }

 private:
  std::shared_ptr<const RootSystem> sys_;
  AffineWeylGroup affine_;
  std::vector<Height2Orbit> catalogue_;
};

}  // namespace nilc
