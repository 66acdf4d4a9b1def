#include "chowstab/polytope.hpp"

#include "chowstab/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace chowstab {

namespace {

IntMatrix generator_columns(const FanoPolytope& polytope, const MaximalCone& cone) {
  const std::size_t m = static_cast<std::size_t>(polytope.dim);
  IntMatrix mat(m, LatticeVector(m, Int(0)));
  for (std::size_t col = 0; col < cone.generator_indices.size(); ++col) {
    const LatticeVector& v = polytope.vertices[static_cast<std::size_t>(cone.generator_indices[col])];
    for (std::size_t row = 0; row < m; ++row) mat[row][col] = v[row];
  }
  return mat;
}

// Unique w with <v_i, w> = -1 for the cone's generators, if any.
std::optional<std::vector<Rational>> facet_solution(const FanoPolytope& polytope,
                                                    const std::vector<int>& subset) {
  const std::size_t m = static_cast<std::size_t>(polytope.dim);
  RationalMatrix lhs(m, std::vector<Rational>(m));
  std::vector<Rational> rhs(m, Rational(-1));
  for (std::size_t row = 0; row < m; ++row)
    for (std::size_t col = 0; col < m; ++col)
      lhs[row][col] = Rational(polytope.vertices[static_cast<std::size_t>(subset[row])][col]);
  return solve_exact(std::move(lhs), std::move(rhs));
}

} // namespace

FanoPolytope load_polytope(int dim, std::vector<LatticeVector> vertices, std::string name) {
  if (dim < 1) throw ValidationError("polytope dimension must be positive");
  if (vertices.size() < static_cast<std::size_t>(dim) + 1)
    throw ValidationError("a " + std::to_string(dim) + "-dimensional polytope needs at least " +
                          std::to_string(dim + 1) + " vertices");
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    if (vertices[j].size() != static_cast<std::size_t>(dim)) {
      std::ostringstream msg;
      msg << "vertex " << j + 1 << " has " << vertices[j].size() << " coordinates, expected "
          << dim;
      throw ValidationError(msg.str());
    }
    if (!is_primitive(vertices[j]))
      throw ValidationError("vertex " + to_string(vertices[j]) + " is not primitive");
  }
  std::set<LatticeVector> seen;
  for (const auto& v : vertices)
    if (!seen.insert(v).second)
      throw ValidationError("duplicate vertex " + to_string(v));
  return FanoPolytope{dim, std::move(vertices), std::move(name)};
}

Fan build_fan(const FanoPolytope& polytope) {
  const int n = static_cast<int>(polytope.vertices.size());
  const int m = polytope.dim;

  std::vector<MaximalCone> cones;
  std::vector<bool> on_some_facet(static_cast<std::size_t>(n), false);

  // Odometer over all m-subsets of vertex indices.
  std::vector<int> subset(static_cast<std::size_t>(m));
  std::iota(subset.begin(), subset.end(), 0);
  const auto advance = [&]() -> bool {
    int i = m - 1;
    while (i >= 0 && subset[static_cast<std::size_t>(i)] == n - m + i) --i;
    if (i < 0) return false;
    ++subset[static_cast<std::size_t>(i)];
    for (int k = i + 1; k < m; ++k)
      subset[static_cast<std::size_t>(k)] = subset[static_cast<std::size_t>(k - 1)] + 1;
    return true;
  };

  do {
    const auto w = facet_solution(polytope, subset);
    if (!w) continue;
    // The subset spans a facet iff its hyperplane supports the polytope
    // (no vertex below level -1). Extra vertices exactly at level -1 on a
    // supporting hyperplane mean the facet is not a simplex.
    bool supporting = true;
    int coplanar_vertex = -1;
    for (int j = 0; j < n && supporting; ++j) {
      if (std::binary_search(subset.begin(), subset.end(), j)) continue;
      const Rational pairing = dot(polytope.vertices[static_cast<std::size_t>(j)], *w);
      if (pairing < -1) supporting = false;
      else if (pairing == -1 && coplanar_vertex < 0) coplanar_vertex = j;
    }
    if (!supporting) continue;
    if (coplanar_vertex >= 0)
      throw GeometryError("polytope not simplicial: vertex " +
                          std::to_string(coplanar_vertex + 1) +
                          " lies on the facet spanned by another " + std::to_string(m) +
                          " vertices");
    cones.push_back(MaximalCone{subset});
    for (int idx : subset) on_some_facet[static_cast<std::size_t>(idx)] = true;
  } while (advance());

  if (cones.empty())
    throw GeometryError("no facets found: vertex set does not span a full-dimensional polytope");
  for (int j = 0; j < n; ++j)
    if (!on_some_facet[static_cast<std::size_t>(j)])
      throw GeometryError("vertex " + std::to_string(j + 1) +
                          " lies on no facet (not a vertex of the convex hull)");

  // Fan completeness: every wall ((m-1)-subset of a cone) must be shared by
  // exactly one other cone, otherwise the cones do not close up around the
  // origin and the origin cannot be interior.
  std::map<std::vector<int>, int> wall_count;
  for (const auto& cone : cones) {
    for (std::size_t drop = 0; drop < cone.generator_indices.size(); ++drop) {
      std::vector<int> wall;
      wall.reserve(cone.generator_indices.size() - 1);
      for (std::size_t k = 0; k < cone.generator_indices.size(); ++k)
        if (k != drop) wall.push_back(cone.generator_indices[k]);
      ++wall_count[wall];
    }
  }
  for (const auto& [wall, count] : wall_count) {
    if (count != 2)
      throw GeometryError(
          "fan does not close up around the origin (origin not interior to the polytope)");
  }

  return Fan{polytope, std::move(cones)};
}

SmoothnessReport smoothness_check(const Fan& fan) {
  SmoothnessReport report;
  report.smooth = true;
  for (std::size_t i = 0; i < fan.maximal_cones.size(); ++i) {
    const Int det = determinant(generator_columns(fan.polytope, fan.maximal_cones[i]));
    if (det != 1 && det != -1) {
      report.smooth = false;
      report.offending_cones.push_back(static_cast<int>(i));
      report.determinants.push_back(det);
    }
  }
  return report;
}

DualPolytope polar_dual(const Fan& fan) {
  const std::size_t m = static_cast<std::size_t>(fan.polytope.dim);

  struct Entry {
    LatticeVector vertex;
    MaximalCone cone;
  };
  std::vector<Entry> entries;
  entries.reserve(fan.maximal_cones.size());
  for (const auto& cone : fan.maximal_cones) {
    const auto w = facet_solution(fan.polytope, cone.generator_indices);
    if (!w) throw InternalError("cone generators became singular after fan construction");
    LatticeVector integral(m);
    for (std::size_t i = 0; i < m; ++i) {
      if (denominator((*w)[i]) != 1)
        throw GeometryError("polytope not reflexive: dual vertex " + std::to_string(entries.size() + 1) +
                            " has non-integral coordinate " + (*w)[i].str());
      integral[i] = numerator((*w)[i]);
    }
    entries.push_back(Entry{std::move(integral), cone});
  }

  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.vertex < b.vertex; });

  DualPolytope dual;
  dual.dim = fan.polytope.dim;
  dual.primal_vertices = fan.polytope.vertices;
  for (auto& e : entries) {
    dual.vertices.push_back(std::move(e.vertex));
    dual.cone_of_vertex.push_back(std::move(e.cone));
  }

  // Two dual vertices are adjacent iff their cones share m-1 generators.
  const std::size_t k = dual.vertices.size();
  dual.neighbors.assign(k, {});
  dual.edge_generators.assign(k, {});
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      std::vector<int> shared;
      std::set_intersection(dual.cone_of_vertex[a].generator_indices.begin(),
                            dual.cone_of_vertex[a].generator_indices.end(),
                            dual.cone_of_vertex[b].generator_indices.begin(),
                            dual.cone_of_vertex[b].generator_indices.end(),
                            std::back_inserter(shared));
      if (shared.size() != m - 1) continue;
      dual.neighbors[a].push_back(static_cast<int>(b));
      dual.neighbors[b].push_back(static_cast<int>(a));
    }
  }
  for (std::size_t a = 0; a < k; ++a) {
    for (int b : dual.neighbors[a]) {
      const LatticeVector delta =
          subtract(dual.vertices[static_cast<std::size_t>(b)], dual.vertices[a]);
      dual.edge_generators[a].push_back(primitive_part(delta));
    }
  }
  return dual;
}

ToricDiagram toric_diagram(const FanoPolytope& polytope, const DualPolytope& dual) {
  ToricDiagram diagram;
  diagram.rays.reserve(polytope.vertices.size());
  for (const auto& v : polytope.vertices) {
    LatticeVector ray = v;
    ray.push_back(Int(1));
    diagram.rays.push_back(std::move(ray));
  }
  diagram.generators.reserve(dual.vertices.size());
  for (const auto& w : dual.vertices) {
    LatticeVector gen = w;
    gen.push_back(Int(1));
    diagram.generators.push_back(std::move(gen));
  }
  return diagram;
}

bool verify_symmetry(const FanoPolytope& polytope, const IntMatrix& g) {
  const std::size_t m = static_cast<std::size_t>(polytope.dim);
  if (g.size() != m) throw ValidationError("symmetry matrix size does not match dimension");
  const Int det = determinant(g);
  if (det != 1 && det != -1) throw ValidationError("symmetry candidate is not unimodular");

  std::set<LatticeVector> vertex_set(polytope.vertices.begin(), polytope.vertices.end());
  for (const auto& v : polytope.vertices) {
    LatticeVector image(m, Int(0));
    for (std::size_t row = 0; row < m; ++row) {
      if (g[row].size() != m) throw ValidationError("ragged symmetry matrix");
      for (std::size_t col = 0; col < m; ++col) image[row] += g[row][col] * v[col];
    }
    if (!vertex_set.contains(image)) return false;
  }
  return true;
}

} // namespace chowstab
