// Command-line front end: dataset ingestion, pipeline orchestration and
// machine-readable reports for toric Chow-semistability obstructions.

#include "chowstab/builtins.hpp"
#include "chowstab/errors.hpp"
#include "chowstab/hilbert.hpp"
#include "chowstab/localization.hpp"
#include "chowstab/polytope.hpp"
#include "chowstab/report.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace chowstab;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitUnsupportedGeometry = 3;
constexpr int kExitInternal = 4;

struct CommonOptions {
  std::string input_path;
  std::string builtin;
  std::string format = "human";
  std::string output;
  std::uint64_t seed = kDefaultSeed;
};

void add_common_options(CLI::App& cmd, CommonOptions& options) {
  auto* input = cmd.add_option("--input,-i", options.input_path,
                               "polytope document ({\"dim\":m,\"vertices\":[[..],..]})");
  auto* builtin = cmd.add_option("--builtin,-b", options.builtin,
                                 "named builtin dataset (p1, p2, p1xp1, p1cubed, "
                                 "nill-paffenholz)");
  input->excludes(builtin);
  cmd.add_option("--format,-f", options.format, "output format")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  cmd.add_option("--output,-o", options.output, "write the report to a file instead of stdout");
  cmd.add_option("--seed", options.seed, "seed of the deterministic sample stream")
      ->envname("CHOWSTAB_SEED")
      ->capture_default_str();
}

FanoPolytope load_input(const CommonOptions& options) {
  if (!options.builtin.empty()) return builtin_polytope(options.builtin);
  if (options.input_path.empty())
    throw ValidationError("no input given: pass --builtin NAME or --input FILE");
  std::ifstream file(options.input_path);
  if (!file) throw ValidationError("cannot open '" + options.input_path + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return parse_polytope_document(text.str(), options.input_path);
}

LatticeVector parse_direction(const std::string& text) {
  LatticeVector out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    try {
      out.emplace_back(Int(token));
    } catch (const std::exception&) {
      throw ValidationError("cannot parse integer '" + token + "' in direction '" + text + "'");
    }
  }
  if (out.empty()) throw ValidationError("empty direction vector");
  return out;
}

std::vector<Rational> parse_rational_vector(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) out.push_back(parse_rational(token));
  if (out.empty()) throw ValidationError("empty rational vector");
  return out;
}

void emit(const Report& report, const CommonOptions& options,
          std::chrono::steady_clock::time_point started) {
  std::string text;
  if (options.format == "structured") {
    text = to_json(report);
  } else {
    text = to_human(report);
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    text += "elapsed: " + std::to_string(elapsed.count()) + " ms\n";
  }
  if (options.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(options.output);
  if (!file) throw ValidationError("cannot write to '" + options.output + "'");
  file << text;
}

Report::PolytopeSection summarize(const FanoPolytope& polytope, const Fan& fan, bool smooth,
                                  bool reflexive) {
  Report::PolytopeSection section;
  section.name = polytope.name;
  section.dim = polytope.dim;
  section.vertex_count = static_cast<int>(polytope.vertices.size());
  section.cone_count = static_cast<int>(fan.maximal_cones.size());
  section.smooth = smooth;
  section.reflexive = reflexive;
  return section;
}

std::vector<LatticeVector> configured_directions(const std::vector<std::string>& raw, int m) {
  std::vector<LatticeVector> directions;
  for (const auto& text : raw) {
    auto n = parse_direction(text);
    if (n.size() != static_cast<std::size_t>(m))
      throw ValidationError("direction " + to_string(n) + " has wrong length for dimension " +
                            std::to_string(m));
    directions.push_back(std::move(n));
  }
  if (directions.empty()) {
    LatticeVector def(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) def[static_cast<std::size_t>(i)] = Int(i + 1);
    directions.push_back(std::move(def));
  }
  return directions;
}

int dispatch(const std::string& command, const CommonOptions& options,
             const std::vector<std::string>& raw_directions, int futaki_p,
             const std::string& xi_text, int window) {
  const auto started = std::chrono::steady_clock::now();
  Report report;
  report.command = command;
  report.seed = options.seed;

  const FanoPolytope polytope = load_input(options);
  const Fan fan = build_fan(polytope);
  const SmoothnessReport smooth = smoothness_check(fan);

  if (command == "validate" || command == "fan") {
    bool reflexive = true;
    try {
      polar_dual(fan);
    } catch (const GeometryError&) {
      reflexive = false;
    }
    report.polytope = summarize(polytope, fan, smooth.smooth, reflexive);
    if (command == "validate")
      report.verdict = smooth.smooth && reflexive
                           ? "valid smooth reflexive Fano polytope"
                           : "valid polytope, but not smooth/reflexive";
    emit(report, options, started);
    return kExitOk;
  }

  const DualPolytope dual = polar_dual(fan);
  report.polytope = summarize(polytope, fan, smooth.smooth, true);

  if (command == "dual") {
    report.dual = Report::DualSection{dual.vertices, dual.neighbors};
    emit(report, options, started);
    return kExitOk;
  }

  if (!smooth.smooth && command != "dual")
    throw GeometryError("fan is not smooth: " + std::to_string(smooth.offending_cones.size()) +
                        " singular cones");

  const TorusParameters params = TorusParameters::standard(polytope.dim);

  if (command == "futaki") {
    Report::ObstructionSection section;
    section.labels = params.labels;
    section.rows.push_back(f_td(fan, futaki_p, options.seed));
    section.verdict = section.rows.front().scaled_value.is_zero()
                          ? "obstruction vanishes"
                          : "obstruction does not vanish";
    report.verdict = section.verdict;
    report.obstructions = std::move(section);
    emit(report, options, started);
    return kExitOk;
  }

  if (command == "obstructions" || command == "report") {
    const ObstructionSurvey survey = obstruction_report(fan, options.seed);
    Report::ObstructionSection section;
    section.labels = params.labels;
    section.rows = survey.results;
    section.verdict = survey.verdict;
    report.verdict = survey.verdict;
    report.obstructions = std::move(section);
    if (command == "obstructions") {
      emit(report, options, started);
      return kExitOk;
    }
  }

  if (command == "hilbert-derivative" || command == "report") {
    const ToricDiagram diagram = toric_diagram(polytope, dual);
    const auto directions = configured_directions(raw_directions, polytope.dim);
    const DerivativeTestResult test = derivative_test(diagram, dual, directions);
    Report::HilbertSection section;
    section.probes = test.probes;
    section.grading = polytope.dim + 1;
    section.verdict = test.verdict;
    if (command == "hilbert-derivative") report.verdict = test.verdict;
    report.hilbert = std::move(section);
    emit(report, options, started);
    return kExitOk;
  }

  if (command == "laurent") {
    if (xi_text.empty()) throw ValidationError("laurent requires --xi b1,...,bm");
    const ToricDiagram diagram = toric_diagram(polytope, dual);
    const auto b = parse_rational_vector(xi_text);
    const int w = window > 0 ? window : polytope.dim + 2;
    report.laurent = Report::LaurentSection{laurent_at_xi(diagram, dual, b, w)};
    emit(report, options, started);
    return kExitOk;
  }

  throw ValidationError("unknown command '" + command + "'");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"chowstab: asymptotic Chow semistability obstructions of smooth toric Fano "
               "manifolds, by equivariant localization and Hilbert-series derivatives"};
  app.require_subcommand(1);

  struct SubcommandState {
    CommonOptions common;
    std::vector<std::string> directions;
    int p = 1;
    std::string xi;
    int window = 0;
  };
  std::map<std::string, SubcommandState> state;

  const auto add_subcommand = [&](const std::string& name, const std::string& description) {
    CLI::App* cmd = app.add_subcommand(name, description);
    add_common_options(*cmd, state[name].common);
    return cmd;
  };

  add_subcommand("validate", "load a polytope and check the smooth reflexive Fano conditions");
  add_subcommand("fan", "build the fan over the facets and summarize it");
  add_subcommand("dual", "compute the polar dual polytope with its adjacency data");
  add_subcommand("obstructions", "compute all obstructions F_Td^p, p = 1..m");
  auto* futaki = add_subcommand("futaki", "compute a single obstruction F_Td^p (default p = 1)");
  futaki->add_option("--p", state["futaki"].p, "Todd degree")->capture_default_str();
  auto* hilbert = add_subcommand(
      "hilbert-derivative", "specialized Hilbert series and its x-derivative along directions");
  hilbert->add_option("--n", state["hilbert-derivative"].directions,
                      "comma-separated integer direction (repeatable)");
  auto* laurent = add_subcommand("laurent", "Laurent coefficients of the series along e^{-t*xi}");
  laurent->add_option("--xi", state["laurent"].xi, "comma-separated rationals b1,...,bm")
      ->required();
  laurent->add_option("--window", state["laurent"].window,
                      "number of coefficients (default m+2)");
  auto* full = add_subcommand("report", "run the whole pipeline and emit the full report");
  full->add_option("--n", state["report"].directions,
                   "comma-separated integer direction (repeatable; default 1,2,...,m)");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  const SubcommandState& s = state[command];
  try {
    return dispatch(command, s.common, s.directions, s.p, s.xi, s.window);
  } catch (const ValidationError& err) {
    std::cerr << "input error: " << err.what() << "\n";
    return kExitInvalidInput;
  } catch (const GeometryError& err) {
    std::cerr << "geometry error: " << err.what() << "\n";
    return kExitUnsupportedGeometry;
  } catch (const InternalError& err) {
    std::cerr << "internal consistency failure: " << err.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
}
