#include "chowstab/builtins.hpp"

#include "chowstab/errors.hpp"

namespace chowstab {

namespace {

// Vertices are listed one per row (the classical presentation writes them
// as columns of a dim x n matrix).
FanoPolytope nill_paffenholz() {
  return load_polytope(7,
                       {
                           {1, 0, 0, 0, 0, 0, 0},    // v1
                           {0, 1, 0, 0, 0, 0, 0},    // v2
                           {0, 0, 1, 0, 0, 0, 0},    // v3
                           {0, 0, -1, 0, 0, 0, -1},  // v4
                           {0, -1, 0, 0, 0, 0, -1},  // v5
                           {-1, 0, 0, 0, 0, 0, -1},  // v6
                           {0, 0, 0, 1, 0, 0, 0},    // v7
                           {0, 0, 0, 0, 1, 0, 0},    // v8
                           {0, 0, 0, 0, 0, 1, 0},    // v9
                           {0, 0, 0, -1, -1, -1, 2}, // v10
                           {0, 0, 0, 0, 0, 0, 1},    // v11
                           {0, 0, 0, 0, 0, 0, -1},   // v12
                       },
                       "nill-paffenholz");
}

} // namespace

FanoPolytope builtin_polytope(const std::string& name) {
  if (name == "p1") return load_polytope(1, {{1}, {-1}}, "p1");
  if (name == "p2") return load_polytope(2, {{1, 0}, {0, 1}, {-1, -1}}, "p2");
  if (name == "p1xp1")
    return load_polytope(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, "p1xp1");
  if (name == "p1cubed")
    return load_polytope(
        3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, 0, 0}, {0, -1, 0}, {0, 0, -1}}, "p1cubed");
  if (name == "nill-paffenholz") return nill_paffenholz();
  throw ValidationError("unknown builtin polytope '" + name + "' (available: p1, p2, p1xp1, " +
                        "p1cubed, nill-paffenholz)");
}

std::vector<std::string> builtin_names() {
  return {"p1", "p2", "p1xp1", "p1cubed", "nill-paffenholz"};
}

} // namespace chowstab
