#pragma once

#include <string>

#include "ybfox/gmodule.hpp"

namespace ybfox {

/// A named (group, module) model, e.g. "C3:Z7x2".
struct Preset {
  std::string name;
  FiniteGroup group;
  GModule module;
};

/// Builds a model from a `<group>:<module>` preset name.
///
/// Group part:  C<n>    cyclic of order n
///              S3      symmetric group on three points
///              D4      dihedral group of the square
/// Module part: Z<m>x<a>   Z/m, element i of C<n> acts by a^i (cyclic
///                         groups only; validation rejects a^n != 1)
///              Z<m>sign   Z/m, action by the sign character (S3 or D4)
///              Z<m>triv   Z/m with the trivial action (any group)
///
/// Throws ModelError on an unknown preset or an invalid combination.
Preset parse_preset(const std::string& text);

}  // namespace ybfox
