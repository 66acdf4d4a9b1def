#pragma once

#include "chowstab/polytope.hpp"

#include <string>
#include <vector>

namespace chowstab {

/// Named polytope datasets shipped with the library:
///   p1              projective line
///   p2              projective plane
///   p1xp1           product of two projective lines
///   p1cubed         product of three projective lines
///   nill-paffenholz the 7-dimensional non-symmetric Kaehler-Einstein
///                   toric Fano manifold (a P^1-bundle over (P^1)^3 x P^3)
FanoPolytope builtin_polytope(const std::string& name);

std::vector<std::string> builtin_names();

} // namespace chowstab
