#include "nilc/engine.hpp"

namespace nilc {

Engine::Engine(const CartanType& type)
    : sys_(std::make_shared<const RootSystem>(RootSystem::build(type))),
      affine_(sys_),
      catalogue_(build_catalogue(*sys_)) {}

}  // namespace nilc
