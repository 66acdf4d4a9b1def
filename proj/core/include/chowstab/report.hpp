#pragma once

#include "chowstab/hilbert.hpp"
#include "chowstab/localization.hpp"
#include "chowstab/polytope.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chowstab {

/// Aggregated pipeline results. Sections are optional so that the same
/// carrier serves every CLI command; serialization only emits what is
/// present. The structured rendering is byte-stable for a fixed
/// configuration: it contains no timing and no machine-local data.
struct Report {
  std::string command;
  std::uint64_t seed = 0;

  struct PolytopeSection {
    std::string name;
    int dim = 0;
    int vertex_count = 0;
    int cone_count = 0;
    bool smooth = false;
    bool reflexive = false;
  };
  std::optional<PolytopeSection> polytope;

  struct DualSection {
    std::vector<LatticeVector> vertices;
    std::vector<std::vector<int>> neighbors;
  };
  std::optional<DualSection> dual;

  struct ObstructionSection {
    std::vector<ObstructionResult> rows;
    std::vector<std::string> labels;
    std::string verdict;
  };
  std::optional<ObstructionSection> obstructions;

  struct HilbertSection {
    std::vector<DerivativeProbe> probes;
    int grading = 0; // m+1, for the e^{-kt} rendering
    std::string verdict;
  };
  std::optional<HilbertSection> hilbert;

  struct LaurentSection {
    LaurentCoefficients coefficients;
  };
  std::optional<LaurentSection> laurent;

  std::string verdict;
};

std::string to_json(const Report& report);
std::string to_human(const Report& report);

/// Reads the polytope document format: {"dim": m, "vertices": [[..], ..],
/// "name": optional}. Vertices are rows (one list per vertex); the
/// classical column-matrix presentation is the transpose of this layout.
FanoPolytope parse_polytope_document(const std::string& text, const std::string& origin);

} // namespace chowstab
