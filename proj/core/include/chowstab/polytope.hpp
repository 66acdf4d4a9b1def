#pragma once

#include "chowstab/lattice.hpp"
#include "chowstab/linalg.hpp"
#include "chowstab/rational.hpp"

#include <string>
#include <vector>

namespace chowstab {

/// Vertex set of a Fano polytope: primitive, pairwise distinct lattice
/// vectors whose convex hull contains the origin in its interior (the
/// interiority is established during fan construction).
struct FanoPolytope {
  int dim = 0;
  std::vector<LatticeVector> vertices;
  std::string name;
};

/// Sorted indices into FanoPolytope::vertices spanning a full-dimensional
/// simplicial cone over one facet.
struct MaximalCone {
  std::vector<int> generator_indices;
  bool operator==(const MaximalCone&) const = default;
};

struct Fan {
  FanoPolytope polytope;
  std::vector<MaximalCone> maximal_cones;
};

struct SmoothnessReport {
  bool smooth = false;
  std::vector<int> offending_cones; // indices into Fan::maximal_cones
  std::vector<Int> determinants;    // parallel to offending_cones
};

/// Facet-dual (Delzant) polytope. Vertices are sorted lexicographically;
/// vertex j corresponds to cone_of_vertex[j], neighbors[j] lists adjacent
/// vertex indices and edge_generators[j] the matching primitive edge
/// directions pointing away from vertex j.
struct DualPolytope {
  int dim = 0;
  std::vector<LatticeVector> vertices;
  std::vector<MaximalCone> cone_of_vertex;
  std::vector<std::vector<int>> neighbors;
  std::vector<std::vector<LatticeVector>> edge_generators;
  std::vector<LatticeVector> primal_vertices; // defining inequalities <v, w> >= -1
};

/// Homogenized cone data: rays (v_j, 1) and generators (w_j, 1).
struct ToricDiagram {
  std::vector<LatticeVector> rays;
  std::vector<LatticeVector> generators;
};

/// Validates dimension, primitivity and distinctness.
/// Throws ValidationError with a descriptive message otherwise.
FanoPolytope load_polytope(int dim, std::vector<LatticeVector> vertices, std::string name = {});

/// Exhaustive facet enumeration: every dim-subset of vertices with a
/// nonsingular generator matrix is tested for spanning a facet. Throws
/// GeometryError when a facet is not a simplex or the fan does not close
/// up around the origin.
Fan build_fan(const FanoPolytope& polytope);

/// True iff every maximal cone's generator matrix has determinant +-1.
SmoothnessReport smoothness_check(const Fan& fan);

/// One dual vertex per maximal cone, solving <v_i, w> = -1 on the cone's
/// generators. Requires integral solutions (reflexivity); throws
/// GeometryError otherwise.
DualPolytope polar_dual(const Fan& fan);

ToricDiagram toric_diagram(const FanoPolytope& polytope, const DualPolytope& dual);

/// True iff the unimodular matrix g permutes the vertex set.
bool verify_symmetry(const FanoPolytope& polytope, const IntMatrix& g);

} // namespace chowstab
