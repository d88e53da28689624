#pragma once

#include <array>
#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "isingcc/causal.hpp"
#include "isingcc/dynamics.hpp"
#include "isingcc/parse.hpp"
#include "isingcc/solver.hpp"

namespace isingcc {

using Json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "1.0.0";

/// An operator literal after expansion to the surface, with the cone it is
/// localized in (the beta-preimage support shifted to its time label).
struct OperatorSpec {
  ParsedOperator op;
  DoubleCone localization;
};

struct GeometryQuery {
  DoubleCone a;
  DoubleCone b;
  PastMode mode = PastMode::kCommon;
  std::vector<DoubleCone> contains;
};

struct Scenario {
  std::string name;
  bool exact = true;
  DynamicsParams dynamics;
  OperatorSpec a;
  OperatorSpec b;
  std::array<ParsedScalar, 4> lambda;

  bool run_commuting = true;
  std::vector<int> k_sizes = {2};
  std::vector<int> extra_qubits = {0};

  bool run_noncommuting = true;
  std::vector<std::array<ParsedScalar, 3>> family;

  bool run_solver = false;
  SolverConfig solver;
  DoubleCone solver_window{0, HalfInt::integer(0), HalfInt::integer(1)};

  std::vector<GeometryQuery> queries;

  int sphere_grid = 0;
  int lambda_sweep = 0;
  std::string report_path;
  std::string csv_prefix;

  Json raw;
};

/// Validates and parses a scenario document. Throws kSchema for malformed or
/// unknown fields and for float literals in an exact-mode scenario.
Scenario load_scenario(const Json& doc);
Scenario load_scenario_file(const std::string& path);

/// Parses an operator literal: compact text, a list of
/// {"coeff", "sites", "phase"} terms, {"terms": [...]}, or
/// {"beta_of": literal, "t": steps}.
OperatorSpec parse_operator_spec(const Json& j, const DynamicsParams& dynamics);

/// {"t", "i", "j"} with half-integers as strings or doubled JSON integers.
DoubleCone parse_region_literal(const Json& j);

struct RunOptions {
  bool timings = false;
  std::optional<std::uint64_t> seed;
};

/// Executes every requested analysis and returns the report document;
/// writes CSV and gnuplot files when the scenario names a prefix.
Json run_scenario(const Scenario& sc, const RunOptions& opts = {});

/// The scenario's state in either mode; the exact one needs an exact scenario.
template <ScalarType S>
LambdaState<S> scenario_state(const Scenario& sc);

/// Individual report sections, shared by the subcommands.
Json commuting_report(const Scenario& sc);
Json solver_report(const Scenario& sc, std::uint64_t seed);

/// Both forms of a scalar for reports: {"exact": token, "float": value}.
Json scalar_json(const QPi& v);
Json scalar_json(double v);

Json ccs_cells_json(const CcsReport& r);
Json ccs_report_json(const CcsReport& r);
Json region_json(const Region& r);
Json cone_json(const DoubleCone& c);

}  // namespace isingcc
