#include "chowstab/report.hpp"

#include "chowstab/errors.hpp"

#include <json.hpp>

#include <sstream>

namespace chowstab {

namespace {

using Json = nlohmann::ordered_json;

Json json_vector(const LatticeVector& v) {
  Json arr = Json::array();
  for (const auto& e : v) arr.push_back(e.str());
  return arr;
}

Json json_rationals(const std::vector<Rational>& values) {
  Json arr = Json::array();
  for (const auto& r : values) arr.push_back(r.str());
  return arr;
}

Json json_poly(const Polynomial& poly) {
  Json arr = Json::array();
  for (const auto& c : poly.coefficients()) arr.push_back(c.str());
  return arr;
}

Json json_ratfun(const RationalFunction& value) {
  return Json{{"numerator", json_poly(value.numerator())},
              {"denominator", json_poly(value.denominator())},
              {"rendered", value.to_string()}};
}

} // namespace

std::string to_json(const Report& report) {
  Json root;
  root["tool"] = "chowstab";
  root["command"] = report.command;
  root["seed"] = report.seed;

  if (report.polytope) {
    const auto& p = *report.polytope;
    root["polytope"] = Json{{"name", p.name},         {"dim", p.dim},
                            {"vertices", p.vertex_count}, {"maximal_cones", p.cone_count},
                            {"smooth", p.smooth},     {"reflexive", p.reflexive}};
  }
  if (report.dual) {
    Json vertices = Json::array();
    for (const auto& w : report.dual->vertices) vertices.push_back(json_vector(w));
    Json neighbors = Json::array();
    for (const auto& row : report.dual->neighbors) neighbors.push_back(row);
    root["dual"] = Json{{"vertex_count", report.dual->vertices.size()},
                        {"vertices", vertices},
                        {"neighbors", neighbors}};
  }
  if (report.obstructions) {
    Json rows = Json::array();
    for (const auto& row : report.obstructions->rows) {
      Json entry;
      entry["p"] = row.p;
      entry["prefactor"] = row.prefactor.str();
      entry["coefficients"] = json_rationals(row.scaled_value.coefficients());
      entry["zero"] = row.scaled_value.is_zero();
      entry["rendered"] = row.scaled_value.to_string(report.obstructions->labels);
      Json samples = Json::array();
      for (const auto& [sample, residual] : row.verification_points)
        samples.push_back(Json{{"sample", json_rationals(sample)}, {"residual", residual.str()}});
      entry["verification"] = samples;
      rows.push_back(std::move(entry));
    }
    root["obstructions"] = Json{{"rows", rows}, {"verdict", report.obstructions->verdict}};
  }
  if (report.hilbert) {
    Json probes = Json::array();
    for (const auto& probe : report.hilbert->probes) {
      Json entry;
      entry["direction"] = json_vector(probe.requested);
      entry["used_direction"] = json_vector(probe.used);
      entry["perturbed"] = probe.perturbed;
      entry["series"] = json_ratfun(probe.series);
      entry["derivative"] = json_ratfun(probe.derivative.value);
      entry["derivative_zero"] = probe.derivative.is_zero;
      probes.push_back(std::move(entry));
    }
    root["hilbert"] = Json{{"grading", report.hilbert->grading},
                           {"probes", probes},
                           {"verdict", report.hilbert->verdict}};
  }
  if (report.laurent) {
    const auto& c = report.laurent->coefficients;
    root["laurent"] = Json{{"xi", json_rationals(c.xi)},
                           {"lowest_order", c.lowest_order},
                           {"values", json_rationals(c.values)}};
  }
  if (!report.verdict.empty()) root["verdict"] = report.verdict;
  return root.dump(2) + "\n";
}

std::string to_human(const Report& report) {
  std::ostringstream out;
  if (report.polytope) {
    const auto& p = *report.polytope;
    out << "polytope: " << (p.name.empty() ? "<unnamed>" : p.name) << " (dim " << p.dim << ", "
        << p.vertex_count << " vertices)\n";
    out << "fan: " << p.cone_count << " maximal cones; smooth: " << (p.smooth ? "yes" : "no")
        << "; reflexive: " << (p.reflexive ? "yes" : "no") << "\n";
  }
  if (report.dual) {
    out << "dual polytope: " << report.dual->vertices.size() << " vertices\n";
    for (std::size_t j = 0; j < report.dual->vertices.size(); ++j) {
      out << "  w" << j + 1 << " = " << to_string(report.dual->vertices[j]) << "  neighbors:";
      for (int nb : report.dual->neighbors[j]) out << " w" << nb + 1;
      out << "\n";
    }
  }
  if (report.obstructions) {
    out << "obstructions (seed " << report.seed << "):\n";
    for (const auto& row : report.obstructions->rows) {
      out << "  " << row.prefactor.str() << "*F_Td^" << row.p << " = "
          << row.scaled_value.to_string(report.obstructions->labels) << "\n";
    }
    out << "  " << report.obstructions->verdict << "\n";
  }
  if (report.hilbert) {
    for (const auto& probe : report.hilbert->probes) {
      out << "hilbert series, n = " << to_string(probe.used);
      if (probe.perturbed)
        out << " (perturbed from " << to_string(probe.requested) << ")";
      out << ":\n";
      out << "  C(1,...,1,s) = " << probe.series.to_string() << "\n";
      out << "  d/dx C(x^n, s)|_{x=1} = " << probe.derivative.value.to_string() << "\n";
      out << "  with s = e^(-" << report.hilbert->grading << "*t): "
          << to_exponential_string(probe.derivative.value, report.hilbert->grading) << "\n";
    }
    if (!report.hilbert->verdict.empty())
      out << "derivative test: " << report.hilbert->verdict << "\n";
  }
  if (report.laurent) {
    const auto& c = report.laurent->coefficients;
    out << "Laurent expansion at xi = (";
    for (std::size_t i = 0; i < c.xi.size(); ++i) out << (i ? "," : "") << c.xi[i].str();
    out << "; " << c.xi.size() + 1 << "):\n";
    for (std::size_t i = 0; i < c.values.size(); ++i) {
      out << "  C_{" << c.lowest_order + static_cast<long>(i) << "} = " << c.values[i].str()
          << "\n";
    }
  }
  if (!report.verdict.empty()) out << "verdict: " << report.verdict << "\n";
  return out.str();
}

FanoPolytope parse_polytope_document(const std::string& text, const std::string& origin) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const std::exception& err) {
    throw ValidationError(origin + ": not valid JSON: " + err.what());
  }
  if (!doc.is_object()) throw ValidationError(origin + ": expected a JSON object");
  if (!doc.contains("dim")) throw ValidationError(origin + ": missing field 'dim'");
  if (!doc["dim"].is_number_integer())
    throw ValidationError(origin + ": field 'dim' must be an integer");
  if (!doc.contains("vertices")) throw ValidationError(origin + ": missing field 'vertices'");
  if (!doc["vertices"].is_array())
    throw ValidationError(origin + ": field 'vertices' must be a list of integer lists");

  const int dim = doc["dim"].get<int>();
  std::vector<LatticeVector> rows;
  std::size_t index = 0;
  for (const auto& row : doc["vertices"]) {
    ++index;
    if (!row.is_array())
      throw ValidationError(origin + ": vertices[" + std::to_string(index) + "] is not a list");
    LatticeVector vertex;
    for (const auto& entry : row) {
      if (!entry.is_number_integer())
        throw ValidationError(origin + ": vertices[" + std::to_string(index) +
                              "] contains a non-integer entry");
      vertex.emplace_back(entry.get<long long>());
    }
    if (vertex.size() != static_cast<std::size_t>(dim))
      throw ValidationError(origin + ": vertices[" + std::to_string(index) + "] has " +
                            std::to_string(vertex.size()) + " coordinates, expected " +
                            std::to_string(dim));
    rows.push_back(std::move(vertex));
  }
  std::string name = doc.value("name", std::string{});
  return load_polytope(dim, std::move(rows), std::move(name));
}

} // namespace chowstab
