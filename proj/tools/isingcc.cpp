// Command-line front end: scenario runner plus one subcommand per decider.
// Exit codes: 0 success, 2 schema, 3 budget, 4 precondition.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "isingcc/scenario.hpp"

using namespace isingcc;

namespace {

void emit(const Json& doc, const std::string& path) {
  const std::string text = doc.dump(2) + "\n";
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kDomain, "cannot write '" + path + "'");
  out << text;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

// "t,x" is the minimal cone at (t, x); "t:i:j" is the double cone O_{i,j} at time t.
DoubleCone cone_arg(const std::string& text) {
  if (text.find(':') != std::string::npos) {
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw Error(ErrorCode::kSchema, "cone '" + text + "' is not t:i:j");
    int t = 0;
    try {
      std::size_t used = 0;
      t = std::stoi(parts[0], &used);
      if (used != parts[0].size()) throw std::invalid_argument(parts[0]);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kSchema, "cone time '" + parts[0] + "' is not an integer");
    }
    return DoubleCone::make(t, HalfInt::parse(parts[1]), HalfInt::parse(parts[2]));
  }
  const auto parts = split(text, ',');
  if (parts.size() != 2) throw Error(ErrorCode::kSchema, "minimal cone '" + text + "' is not t,x");
  return DoubleCone::minimal(HalfInt::parse(parts[0]), HalfInt::parse(parts[1]));
}

std::array<QPi, 4> lambda_arg(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw Error(ErrorCode::kSchema, "lambda needs four comma-separated weights");
  std::array<QPi, 4> out;
  for (int p = 0; p < 4; ++p) {
    const ParsedScalar v = parse_real(parts[p]);
    if (!v.is_exact) throw Error(ErrorCode::kSchema, "enumeration weights must be exact literals");
    out[p] = v.exact.re;
  }
  return out;
}

std::array<long long, 4> sizes_arg(const std::string& text) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw Error(ErrorCode::kSchema, "sector sizes need four comma-separated integers");
  std::array<long long, 4> out{};
  for (int p = 0; p < 4; ++p) {
    try {
      std::size_t used = 0;
      out[p] = std::stoll(parts[p], &used);
      if (used != parts[p].size() || out[p] <= 0) throw std::invalid_argument(parts[p]);
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::kSchema, "sector size '" + parts[p] + "' is not a positive integer");
    }
  }
  return out;
}

Json report_header(const std::string& command) {
  Json j;
  j["tool"] = {{"name", "isingcc"}, {"version", kToolVersion}};
  j["command"] = command;
  return j;
}

template <ScalarType S>
Json check_partition(const Scenario& sc, const std::vector<std::string>& cells_text, bool noncommuting) {
  const LambdaState<S> s = scenario_state<S>(sc);
  std::vector<BasicOperator<S>> cells;
  for (const std::string& c : cells_text) {
    const ParsedOperator op = parse_operator(c);
    if constexpr (ScalarTraits<S>::kExact) {
      if (!op.is_exact) throw Error(ErrorCode::kSchema, "exact scenario needs exact partition cells");
      cells.push_back(op.exact);
    } else {
      cells.push_back(op.numeric);
    }
  }
  if (cells.size() == 1) cells.push_back(op_sub(BasicOperator<S>::identity(), cells.front()));
  const auto part = PartitionOfUnity<S>::make(cells);
  return ccs_report_json(noncommuting ? noncommuting_ccs_residuals(s, part) : commuting_ccs_residuals(s, part));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local quantum Ising nets: geometry, dynamics, correlating states and common cause deciders"};
  app.set_version_flag("--version", std::string(kToolVersion));
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("-o,--out", out_path, "Write the report here instead of stdout");

  // run
  auto* run = app.add_subcommand("run", "Execute a scenario file and emit its report");
  std::string scenario_path, csv_prefix;
  bool timings = false;
  std::uint64_t seed = 0;
  run->add_option("scenario", scenario_path, "Scenario JSON file")->required();
  run->add_option("--csv-prefix", csv_prefix, "Write plot data under this prefix");
  run->add_flag("--timings", timings, "Include wall-clock timings (reports are then not reproducible)");
  auto* seed_opt = run->add_option("--seed", seed, "Override the solver seed");

  // geom pasts
  auto* geom = app.add_subcommand("geom", "Spacetime geometry");
  geom->require_subcommand(1);
  auto* geom_pasts = geom->add_subcommand("pasts", "Weak, common or strong past of two regions");
  std::string mode = "common", cone_a, cone_b;
  std::vector<std::string> contains;
  geom_pasts->add_option("--mode", mode, "weak | common | strong");
  geom_pasts->add_option("--a", cone_a, "First region: \"t,x\" minimal cone or \"t:i:j\" double cone")->required();
  geom_pasts->add_option("--b", cone_b, "Second region")->required();
  geom_pasts->add_option("--contains", contains, "Regions to test for membership");

  // algebra trace
  auto* algebra = app.add_subcommand("algebra", "Quasilocal algebra");
  algebra->require_subcommand(1);
  auto* trace = algebra->add_subcommand("trace", "Normalized trace of an operator");
  std::string op_text;
  trace->add_option("--op", op_text, "Operator text, e.g. \"1/2 + 1/2*U-1/2*U0*U1/2\"")->required();

  // dynamics beta
  auto* dynamics = app.add_subcommand("dynamics", "Causal dynamics");
  dynamics->require_subcommand(1);
  auto* beta = dynamics->add_subcommand("beta", "Image of a generator or operator under beta^t");
  std::string theta1 = "0", theta2 = "0", site, beta_op;
  int eta1 = 1, eta2 = 1, steps = 1;
  beta->add_option("--theta1", theta1, "Angle in (-pi/2, pi/2]; \"0\" and \"pi/2\" are exact");
  beta->add_option("--theta2", theta2);
  beta->add_option("--eta1", eta1);
  beta->add_option("--eta2", eta2);
  beta->add_option("--t", steps, "Number of time steps");
  auto* site_opt = beta->add_option("--site", site, "Generator site");
  auto* op_opt = beta->add_option("--op", beta_op, "Operator text instead of a single generator");
  site_opt->excludes(op_opt);

  // ccp
  auto* ccp = app.add_subcommand("ccp", "Common cause principle deciders");
  ccp->require_subcommand(1);
  auto* check = ccp->add_subcommand("check-commuting", "Screening-off residuals of a given partition");
  std::string state_path;
  std::vector<std::string> cells_text;
  bool noncommuting = false;
  check->add_option("--scenario", state_path, "Scenario file providing A, B, lambda and dynamics")->required();
  check->add_option("--cell", cells_text, "Partition cell (one cell means {C, 1-C})")->required();
  check->add_flag("--noncommuting", noncommuting, "Use the conditional-expectation form instead");

  auto* enumerate = ccp->add_subcommand("enumerate", "Exhaustive rank-tuple decision for commuting partitions");
  std::string lambda_text, sizes_text, enum_scenario;
  std::vector<int> k_sizes;
  enumerate->add_option("--scenario", enum_scenario, "Scenario file (uses its lambda, sector sizes and K list)");
  enumerate->add_option("--lambda", lambda_text, "Weights \"AB,AperpBperp,ABperp,AperpB\"");
  enumerate->add_option("--m", sizes_text, "Sector ranks \"m1,m2,m3,m4\"");
  enumerate->add_option("--k", k_sizes, "Partition sizes");

  auto* solve = ccp->add_subcommand("solve-nc", "Search for noncommuting common causes");
  std::string solve_scenario, window_text;
  std::uint64_t solve_seed = 1;
  int restarts = 20;
  bool commuting_constraint = false;
  solve->add_option("--scenario", solve_scenario, "Scenario file")->required();
  auto* solve_seed_opt = solve->add_option("--seed", solve_seed);
  auto* restarts_opt = solve->add_option("--restarts", restarts);
  solve->add_option("--window", window_text, "Search window \"t:i:j\"");
  solve->add_flag("--commuting-constraint", commuting_constraint, "Restrict C to the commutant of A and B");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*run) {
      Scenario sc = load_scenario_file(scenario_path);
      if (!csv_prefix.empty()) sc.csv_prefix = csv_prefix;
      RunOptions opts;
      opts.timings = timings;
      if (*seed_opt) opts.seed = seed;
      const Json report = run_scenario(sc, opts);
      emit(report, out_path.empty() ? sc.report_path : out_path);
    } else if (*geom_pasts) {
      const DoubleCone a = cone_arg(cone_a);
      const DoubleCone b = cone_arg(cone_b);
      const PastMode m = parse_past_mode(mode);
      const Region r = pasts(a, b, m);
      Json j = report_header("geom pasts");
      j["a"] = cone_json(a);
      j["b"] = cone_json(b);
      j["mode"] = to_string(m);
      j["spacelike"] = spacelike_separated(a, b);
      j["region"] = region_json(r);
      Json members = Json::array();
      for (const std::string& c : contains) {
        const DoubleCone cone = cone_arg(c);
        members.push_back({{"cone", cone_json(cone)}, {"contained", r.contains(cone)}});
      }
      j["contains"] = members;
      emit(j, out_path);
    } else if (*trace) {
      const ParsedOperator op = parse_operator(op_text);
      Json j = report_header("algebra trace");
      j["op"] = op_text;
      if (op.is_exact) {
        const ExactComplex t = normalized_trace(op.exact);
        j["trace"] = t.to_string();
        j["float"] = normalized_trace(op.numeric).real();
      } else {
        const Complex t = normalized_trace(op.numeric);
        j["trace"] = double_to_string(t.real()) + (t.imag() != 0.0 ? "+" + double_to_string(t.imag()) + "*i" : "");
        j["float"] = t.real();
      }
      emit(j, out_path);
    } else if (*beta) {
      DynamicsParams p;
      p.theta1 = Angle::parse(theta1);
      p.theta2 = Angle::parse(theta2);
      p.eta1 = eta1;
      p.eta2 = eta2;
      p.validate();
      if (!*site_opt && !*op_opt) throw Error(ErrorCode::kSchema, "dynamics beta needs --site or --op");
      const ParsedOperator x = *site_opt ? ParsedOperator{ExactOperator::generator(HalfInt::parse(site)),
                                                          Operator::generator(HalfInt::parse(site)), true}
                                         : parse_operator(beta_op);
      Json j = report_header("dynamics beta");
      j["input"] = *site_opt ? "U" + site : beta_op;
      j["t"] = steps;
      if (x.is_exact && p.is_exact()) {
        const ExactOperator img = apply_beta(p, x.exact, steps);
        j["mode"] = "exact";
        j["image"] = to_string(img);
        const auto sup = support_interval(img);
        if (sup) j["support"] = cone_json(*sup);
      } else {
        const Operator img = apply_beta(p, x.numeric, steps);
        j["mode"] = "float";
        j["image"] = to_string(img);
        const auto sup = support_interval(img);
        if (sup) j["support"] = cone_json(*sup);
      }
      emit(j, out_path);
    } else if (*check) {
      const Scenario sc = load_scenario_file(state_path);
      Json j = report_header(std::string("ccp check-commuting") + (noncommuting ? " --noncommuting" : ""));
      j["scenario"] = sc.name;
      j["report"] = sc.exact ? check_partition<ExactComplex>(sc, cells_text, noncommuting)
                             : check_partition<Complex>(sc, cells_text, noncommuting);
      emit(j, out_path);
    } else if (*enumerate) {
      Json j = report_header("ccp enumerate");
      if (!enum_scenario.empty()) {
        Scenario sc = load_scenario_file(enum_scenario);
        if (!k_sizes.empty()) sc.k_sizes = k_sizes;
        j["scenario"] = sc.name;
        j["commuting"] = commuting_report(sc);
      } else {
        if (lambda_text.empty() || sizes_text.empty()) {
          throw Error(ErrorCode::kSchema, "ccp enumerate needs --scenario or both --lambda and --m");
        }
        const auto lambda = lambda_arg(lambda_text);
        const auto m = sizes_arg(sizes_text);
        if (k_sizes.empty()) k_sizes = {2};
        Json runs = Json::array();
        std::size_t nontrivial = 0;
        for (int k : k_sizes) {
          const EnumerationResult e = enumerate_commuting_tuples(lambda, m, k);
          runs.push_back({{"sector_sizes", m},
                          {"K", k},
                          {"bound", e.bound},
                          {"partitions_examined", e.partitions_examined},
                          {"satisfying", e.satisfying.size()},
                          {"nontrivial", e.nontrivial}});
          nontrivial += e.nontrivial;
        }
        j["commuting"] = {{"enumerations", runs},
                          {"verdict", nontrivial == 0 ? "no nontrivial solution" : "nontrivial solutions exist"}};
      }
      emit(j, out_path);
    } else if (*solve) {
      Scenario sc = load_scenario_file(solve_scenario);
      if (*restarts_opt) sc.solver.restarts = restarts;
      if (!window_text.empty()) sc.solver_window = cone_arg(window_text);
      if (commuting_constraint) sc.solver.commuting_constraint = true;
      Json j = report_header("ccp solve-nc");
      j["scenario"] = sc.name;
      j["solver"] = solver_report(sc, *solve_seed_opt ? solve_seed : sc.solver.seed);
      emit(j, out_path);
    }
  } catch (const Error& e) {
    std::cerr << "isingcc: " << to_string(e.code()) << " error: " << e.what() << "\n";
    return e.exit_code();
  }
  return 0;
}
