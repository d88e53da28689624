#include "isingcc/scenario.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <set>
#include <sstream>

namespace isingcc {

namespace {

[[noreturn]] void schema(const std::string& what) { throw Error(ErrorCode::kSchema, what); }

void check_keys(const Json& obj, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  for (const auto& [key, value] : obj.items()) {
    bool ok = false;
    for (const char* a : allowed) ok = ok || key == a;
    if (!ok) schema("unknown key '" + key + "' in " + where);
  }
}

HalfInt half_of(const Json& j, const std::string& where) {
  if (j.is_string()) return HalfInt::parse(j.get<std::string>());
  if (j.is_number_integer()) return HalfInt::from_twice(j.get<int>());
  schema(where + " must be a half-integer string or a doubled integer");
}

int int_of(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where + " must be an integer");
  return j.get<int>();
}

ParsedScalar real_of(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_real(j.get<std::string>());
  if (j.is_number_integer()) {
    ParsedScalar s;
    s.exact = ExactComplex(QPi(j.get<long long>()));
    s.numeric = Complex(static_cast<double>(j.get<long long>()));
    return s;
  }
  if (j.is_number()) {
    ParsedScalar s;
    s.numeric = Complex(j.get<double>());
    s.is_exact = false;
    return s;
  }
  schema(where + " must be a number or a numeric string");
}

Angle angle_of(const Json& j, const std::string& where) {
  if (j.is_string()) return Angle::parse(j.get<std::string>());
  if (j.is_number_integer() && j.get<long long>() == 0) return Angle::zero();
  if (j.is_number()) return Angle::radians(j.get<double>());
  schema(where + " must be an angle");
}

ParsedOperator term_list(const Json& terms) {
  ParsedOperator out;
  for (const Json& t : terms) {
    check_keys(t, {"coeff", "sites", "phase"}, "operator term");
    const ParsedScalar c = t.contains("coeff") ? (t["coeff"].is_string() ? parse_scalar(t["coeff"].get<std::string>())
                                                                         : real_of(t["coeff"], "coeff"))
                                               : ParsedScalar{ExactComplex(1), Complex(1.0), true};
    std::vector<HalfInt> ordered;
    if (t.contains("sites")) {
      if (!t["sites"].is_array()) schema("sites must be an array");
      for (const Json& s : t["sites"]) ordered.push_back(half_of(s, "site"));
    }
    GeneratorMonomial m = GeneratorMonomial::product_of(ordered);
    if (t.contains("phase")) {
      if (!t["phase"].is_string()) schema("phase must be one of \"+1\", \"-1\", \"+i\", \"-i\"");
      m.phase = m.phase * Phase::parse(t["phase"].get<std::string>());
    }
    out.exact = out.exact + ExactOperator::monomial(m, c.exact);
    out.numeric = out.numeric + Operator::monomial(m, c.numeric);
    out.is_exact = out.is_exact && c.is_exact;
  }
  return out;
}

ParsedOperator surface_operator(const Json& j) {
  if (j.is_string()) return parse_operator(j.get<std::string>());
  if (j.is_array()) return term_list(j);
  if (j.is_object() && j.contains("terms")) {
    check_keys(j, {"terms"}, "operator");
    if (!j["terms"].is_array()) schema("terms must be an array");
    return term_list(j["terms"]);
  }
  schema("operator literal must be text, a term list, or {\"beta_of\": ..., \"t\": ...}");
}

std::string echo_scalar(const ParsedScalar& s) {
  return s.is_exact ? (s.exact.im.is_zero() ? s.exact.re.to_string() : s.exact.to_string())
                    : double_to_string(s.numeric.real());
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

DoubleCone parse_region_literal(const Json& j) {
  check_keys(j, {"t", "i", "j"}, "region");
  if (!j.contains("i") || !j.contains("j")) schema("region needs i and j");
  const int t = j.contains("t") ? int_of(j["t"], "region t") : 0;
  return DoubleCone::make(t, half_of(j["i"], "region i"), half_of(j["j"], "region j"));
}

OperatorSpec parse_operator_spec(const Json& j, const DynamicsParams& dynamics) {
  if (j.is_object() && j.contains("beta_of")) {
    check_keys(j, {"beta_of", "t"}, "beta_of operator");
    const int t = j.contains("t") ? int_of(j["t"], "beta_of t") : 1;
    const ParsedOperator pre = surface_operator(j["beta_of"]);
    OperatorSpec out;
    out.op.is_exact = pre.is_exact && dynamics.is_exact();
    out.op.numeric = apply_beta(dynamics, pre.numeric, t);
    if (out.op.is_exact) out.op.exact = apply_beta(dynamics, pre.exact, t);
    const auto sup = pre.numeric.is_zero() ? std::nullopt : support_interval(pre.numeric);
    out.localization = sup ? DoubleCone{t, sup->i, sup->j} : DoubleCone{t, HalfInt(), HalfInt()};
    return out;
  }
  OperatorSpec out;
  out.op = surface_operator(j);
  const auto sup = out.op.numeric.is_zero() ? std::nullopt : support_interval(out.op.numeric);
  out.localization = sup.value_or(DoubleCone{0, HalfInt(), HalfInt()});
  return out;
}

Scenario load_scenario(const Json& doc) {
  check_keys(doc,
             {"name", "mode", "dynamics", "A", "B", "lambda", "analyses", "commuting", "noncommuting", "solver",
              "geometry", "plots", "output"},
             "scenario");
  Scenario sc;
  sc.raw = doc;
  sc.name = doc.value("name", std::string("scenario"));
  const std::string mode = doc.value("mode", std::string("auto"));
  if (mode != "auto" && mode != "exact" && mode != "float") schema("mode must be auto, exact or float");

  if (doc.contains("dynamics")) {
    const Json& d = doc["dynamics"];
    check_keys(d, {"theta1", "theta2", "eta1", "eta2"}, "dynamics");
    if (d.contains("theta1")) sc.dynamics.theta1 = angle_of(d["theta1"], "theta1");
    if (d.contains("theta2")) sc.dynamics.theta2 = angle_of(d["theta2"], "theta2");
    if (d.contains("eta1")) sc.dynamics.eta1 = int_of(d["eta1"], "eta1");
    if (d.contains("eta2")) sc.dynamics.eta2 = int_of(d["eta2"], "eta2");
    sc.dynamics.validate();
  }
  if (!doc.contains("A") || !doc.contains("B") || !doc.contains("lambda")) schema("scenario needs A, B and lambda");
  sc.a = parse_operator_spec(doc["A"], sc.dynamics);
  sc.b = parse_operator_spec(doc["B"], sc.dynamics);

  const Json& l = doc["lambda"];
  if (l.is_array()) {
    if (l.size() != 4) schema("lambda needs four weights");
    for (int p = 0; p < 4; ++p) sc.lambda[p] = real_of(l[p], "lambda");
  } else {
    check_keys(l, {"AB", "AperpBperp", "ABperp", "AperpB"}, "lambda");
    for (int p = 0; p < 4; ++p) {
      const char* key = to_string(kSectors[p]);
      if (!l.contains(key)) schema(std::string("lambda is missing ") + key);
      sc.lambda[p] = real_of(l[key], std::string("lambda ") + key);
    }
  }

  bool all_exact = sc.a.op.is_exact && sc.b.op.is_exact;
  for (const auto& w : sc.lambda) all_exact = all_exact && w.is_exact;
  if (mode == "exact" && !all_exact) schema("exact mode needs exact A, B, lambda and dynamics angles");
  sc.exact = mode == "exact" || (mode == "auto" && all_exact);

  if (doc.contains("analyses")) {
    if (!doc["analyses"].is_array()) schema("analyses must be an array");
    sc.run_commuting = sc.run_noncommuting = sc.run_solver = false;
    for (const Json& a : doc["analyses"]) {
      const std::string name = a.is_string() ? a.get<std::string>() : "";
      if (name == "commuting") {
        sc.run_commuting = true;
      } else if (name == "noncommuting") {
        sc.run_noncommuting = true;
      } else if (name == "solver") {
        sc.run_solver = true;
      } else {
        schema("unknown analysis '" + a.dump() + "'");
      }
    }
  }
  if (doc.contains("commuting")) {
    const Json& c = doc["commuting"];
    check_keys(c, {"k_sizes", "extra_qubits"}, "commuting");
    if (c.contains("k_sizes")) {
      sc.k_sizes.clear();
      for (const Json& k : c["k_sizes"]) sc.k_sizes.push_back(int_of(k, "k_sizes"));
    }
    if (c.contains("extra_qubits")) {
      sc.extra_qubits.clear();
      for (const Json& e : c["extra_qubits"]) {
        const int v = int_of(e, "extra_qubits");
        if (v < 0 || v > 8) schema("extra_qubits entries must lie in 0..8");
        sc.extra_qubits.push_back(v);
      }
    }
  }
  if (doc.contains("noncommuting")) {
    const Json& n = doc["noncommuting"];
    check_keys(n, {"family"}, "noncommuting");
    for (const Json& a : n.value("family", Json::array())) {
      if (!a.is_array() || a.size() != 3) schema("family entries are [a1, a2, a3]");
      sc.family.push_back({real_of(a[0], "a1"), real_of(a[1], "a2"), real_of(a[2], "a3")});
    }
  }
  if (sc.family.empty()) {
    const std::array<std::array<const char*, 3>, 4> defaults = {
        {{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "1"}, {"3/5", "4/5", "0"}}};
    for (const auto& row : defaults) sc.family.push_back({parse_real(row[0]), parse_real(row[1]), parse_real(row[2])});
  }
  if (doc.contains("solver")) {
    const Json& s = doc["solver"];
    check_keys(s,
               {"seed", "restarts", "max_iters", "tol", "rank", "commuting_constraint", "include_trivial", "window",
                "max_qubits"},
               "solver");
    if (s.contains("seed")) {
      if (!s["seed"].is_number_unsigned()) schema("seed must be a nonnegative integer");
      sc.solver.seed = s["seed"].get<std::uint64_t>();
    }
    if (s.contains("restarts")) sc.solver.restarts = int_of(s["restarts"], "restarts");
    if (s.contains("max_iters")) sc.solver.max_iters = int_of(s["max_iters"], "max_iters");
    if (s.contains("rank")) sc.solver.rank = int_of(s["rank"], "rank");
    if (s.contains("max_qubits")) sc.solver.max_qubits = int_of(s["max_qubits"], "max_qubits");
    if (s.contains("tol")) {
      if (!s["tol"].is_number()) schema("tol must be a number");
      sc.solver.tol = s["tol"].get<double>();
    }
    for (const char* flag : {"commuting_constraint", "include_trivial"}) {
      if (s.contains(flag) && !s[flag].is_boolean()) schema(std::string(flag) + " must be a boolean");
    }
    sc.solver.commuting_constraint = s.value("commuting_constraint", false);
    sc.solver.include_trivial = s.value("include_trivial", true);
    if (s.contains("window")) sc.solver_window = parse_region_literal(s["window"]);
  }
  if (doc.contains("geometry")) {
    const Json& g = doc["geometry"];
    check_keys(g, {"queries"}, "geometry");
    for (const Json& q : g.value("queries", Json::array())) {
      check_keys(q, {"a", "b", "mode", "contains"}, "geometry query");
      if (!q.contains("a") || !q.contains("b")) schema("geometry query needs a and b");
      GeometryQuery gq;
      gq.a = parse_region_literal(q["a"]);
      gq.b = parse_region_literal(q["b"]);
      gq.mode = parse_past_mode(q.value("mode", std::string("common")));
      for (const Json& c : q.value("contains", Json::array())) gq.contains.push_back(parse_region_literal(c));
      sc.queries.push_back(gq);
    }
  }
  if (doc.contains("plots")) {
    const Json& p = doc["plots"];
    check_keys(p, {"sphere_grid", "lambda_sweep"}, "plots");
    if (p.contains("sphere_grid")) sc.sphere_grid = int_of(p["sphere_grid"], "sphere_grid");
    if (p.contains("lambda_sweep")) sc.lambda_sweep = int_of(p["lambda_sweep"], "lambda_sweep");
    if (sc.sphere_grid < 0 || sc.sphere_grid > 200 || sc.lambda_sweep < 0 || sc.lambda_sweep > 10000) {
      schema("plot sizes out of range");
    }
  }
  if (doc.contains("output")) {
    const Json& o = doc["output"];
    check_keys(o, {"report", "csv_prefix"}, "output");
    sc.report_path = o.value("report", std::string());
    sc.csv_prefix = o.value("csv_prefix", std::string());
  }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) schema("cannot read scenario file '" + path + "'");
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    schema("scenario '" + path + "' is not valid JSON: " + e.what());
  }
  return load_scenario(doc);
}

template <ScalarType S>
LambdaState<S> scenario_state(const Scenario& sc) {
  if constexpr (ScalarTraits<S>::kExact) {
    if (!sc.exact) throw Error(ErrorCode::kModeMismatch, "scenario is not exact");
    SectorWeights<S> w;
    for (int p = 0; p < 4; ++p) w[p] = sc.lambda[p].exact.re;
    return build_lambda_state(sc.a.op.exact, sc.b.op.exact, w);
  } else {
    SectorWeights<S> w;
    for (int p = 0; p < 4; ++p) w[p] = sc.lambda[p].numeric.real();
    return build_lambda_state(sc.a.op.numeric, sc.b.op.numeric, w);
  }
}

template LambdaState<Complex> scenario_state<Complex>(const Scenario&);
template LambdaState<ExactComplex> scenario_state<ExactComplex>(const Scenario&);

Json ccs_cells_json(const CcsReport& r) {
  Json cells = Json::array();
  for (const CellResult& c : r.cells) {
    Json cell;
    if (!c.residual_exact.empty()) cell["exact"] = c.residual_exact;
    cell["float"] = c.residual;
    if (c.vacuous) cell["vacuous"] = true;
    cell["below"] = c.below;
    cells.push_back(cell);
  }
  return cells;
}

Json ccs_report_json(const CcsReport& r) {
  Json j;
  j["mode"] = r.mode;
  j["cells"] = ccs_cells_json(r);
  j["satisfies"] = r.satisfies;
  j["trivial"] = r.trivial;
  j["correlation"] = r.correlation;
  if (r.relevance_a) j["relevance_A"] = *r.relevance_a;
  if (r.relevance_b) j["relevance_B"] = *r.relevance_b;
  if (!r.certificate.empty()) j["certificate"] = r.certificate;
  return j;
}

Json scalar_json(const QPi& v) {
  Json j;
  j["exact"] = v.to_string();
  j["float"] = v.to_double();
  return j;
}

Json scalar_json(double v) {
  Json j;
  j["float"] = v;
  return j;
}

Json cone_json(const DoubleCone& c) {
  Json j;
  j["t"] = c.t;
  j["i"] = c.i.to_string();
  j["j"] = c.j.to_string();
  return j;
}

Json region_json(const Region& r) {
  auto points = [](const std::vector<LatticePoint>& v) {
    Json a = Json::array();
    for (const LatticePoint& p : v) a.push_back(Json::array({p.a, p.b}));
    return a;
  };
  Json j;
  j["description"] = r.to_string();
  j["cones"] = points(r.points());
  j["past_apexes"] = points(r.past_apexes());
  j["future_apexes"] = points(r.future_apexes());
  return j;
}

namespace {

Json geometry_section(const Scenario& sc) {
  Json g;
  g["A"] = {{"localization", cone_json(sc.a.localization)}, {"localization_text", sc.a.localization.to_string()}};
  g["B"] = {{"localization", cone_json(sc.b.localization)}, {"localization_text", sc.b.localization.to_string()}};
  g["spacelike"] = spacelike_separated(sc.a.localization, sc.b.localization);
  Json p;
  for (PastMode m : {PastMode::kWeak, PastMode::kCommon, PastMode::kStrong}) {
    p[to_string(m)] = region_json(pasts(sc.a.localization, sc.b.localization, m));
  }
  g["pasts"] = p;
  Json queries = Json::array();
  for (const GeometryQuery& q : sc.queries) {
    const Region r = pasts(q.a, q.b, q.mode);
    Json jq;
    jq["a"] = cone_json(q.a);
    jq["b"] = cone_json(q.b);
    jq["mode"] = to_string(q.mode);
    jq["region"] = region_json(r);
    Json members = Json::array();
    for (const DoubleCone& c : q.contains) members.push_back({{"cone", cone_json(c)}, {"contained", r.contains(c)}});
    jq["contains"] = members;
    queries.push_back(jq);
  }
  g["queries"] = queries;
  return g;
}

Json commuting_section(const Scenario& sc, const LambdaState<ExactComplex>* exact_state) {
  Json c;
  if (exact_state == nullptr) {
    c["verdict"] = "not decided";
    c["note"] = "the exact decision needs exact weights";
    return c;
  }
  std::array<QPi, 4> lambda;
  for (int p = 0; p < 4; ++p) lambda[p] = exact_state->weights()[p];
  const auto rs = redei_summers_weight(lambda[0], lambda[1], lambda[2], lambda[3]);
  c["redei_summers_weight"] = scalar_json(rs.value);
  c["redei_summers_certifies_correlation"] = rs.certifies_correlation;

  Json runs = Json::array();
  std::size_t nontrivial = 0;
  for (int extra : sc.extra_qubits) {
    std::array<long long, 4> m = exact_state->sector_sizes();
    for (long long& v : m) v <<= extra;
    for (int k : sc.k_sizes) {
      const EnumerationResult e = enumerate_commuting_tuples(lambda, m, k);
      Json run;
      run["sector_sizes"] = m;
      run["K"] = k;
      run["bound"] = e.bound;
      run["partitions_examined"] = e.partitions_examined;
      run["satisfying"] = e.satisfying.size();
      run["nontrivial"] = e.nontrivial;
      Json profiles = Json::array();
      for (const RankProfile& prof : e.satisfying) {
        Json cells = Json::array();
        for (const RankTuple& r : prof.cells) cells.push_back(r);
        profiles.push_back({{"ranks", cells}, {"trivial", prof.trivial}});
      }
      run["profiles"] = profiles;
      runs.push_back(run);
      nontrivial += e.nontrivial;
    }
  }
  c["enumerations"] = runs;
  c["verdict"] = nontrivial == 0 ? "no nontrivial solution" : "nontrivial solutions exist";
  return c;
}

template <ScalarType S>
Json family_entry(const LambdaState<S>& s, const std::array<RealOf<S>, 3>& a, const Scenario& sc) {
  const BasicOperator<S> c = family_projection<S>(a[0], a[1], a[2]);
  const auto part = PartitionOfUnity<S>::binary(c);
  const CcsReport r = noncommuting_ccs_residuals(s, part);
  Json e;
  e["residuals"] = ccs_cells_json(r);
  e["satisfies"] = r.satisfies;
  const auto sup = support_interval(c);
  e["support"] = sup ? cone_json(*sup) : Json();
  if (sup) {
    const Region where = Region::of(*sup);
    for (PastMode m : {PastMode::kWeak, PastMode::kCommon, PastMode::kStrong}) {
      e[std::string("in_") + to_string(m) + "_past"] =
          where.is_subset_of(pasts(sc.a.localization, sc.b.localization, m));
    }
  }
  return e;
}

Json noncommuting_section(const Scenario& sc, const LambdaState<Complex>& sf, const LambdaState<ExactComplex>* se) {
  Json out;
  Json entries = Json::array();
  bool all = true;
  double worst = 0.0;
  for (const auto& a : sc.family) {
    Json e;
    const bool exact = se != nullptr && a[0].is_exact && a[1].is_exact && a[2].is_exact;
    Json echo = Json::array({echo_scalar(a[0]), echo_scalar(a[1]), echo_scalar(a[2])});
    if (exact) {
      e = family_entry<ExactComplex>(*se, {a[0].exact.re, a[1].exact.re, a[2].exact.re}, sc);
    } else {
      e = family_entry<Complex>(sf, {a[0].numeric.real(), a[1].numeric.real(), a[2].numeric.real()}, sc);
    }
    Json row;
    row["a"] = echo;
    row["mode"] = exact ? "exact" : "float";
    for (auto& [k, v] : e.items()) row[k] = v;
    all = all && row["satisfies"].get<bool>();
    for (const Json& cell : row["residuals"]) worst = std::max(worst, std::abs(cell["float"].get<double>()));
    entries.push_back(row);
  }
  out["family"] = entries;
  out["max_abs_residual"] = worst;
  out["verdict"] = all ? "every family member is a noncommuting common cause" : "some family members fail";
  return out;
}

Json solver_section(const Scenario& sc, const LambdaState<Complex>& sf, std::uint64_t seed) {
  SolverConfig cfg = sc.solver;
  cfg.seed = seed;
  const SolverResult r = solve_noncommuting_cc(sf, sc.solver_window, cfg, sc.a.localization, sc.b.localization);
  Json out;
  out["config"] = {{"seed", cfg.seed},
                   {"restarts", cfg.restarts},
                   {"max_iters", cfg.max_iters},
                   {"tol", cfg.tol},
                   {"rank", r.rank},
                   {"commuting_constraint", cfg.commuting_constraint},
                   {"include_trivial", cfg.include_trivial},
                   {"window", cone_json(sc.solver_window)}};
  out["basis_size"] = r.basis_size;
  out["restart_residuals"] = r.restart_residuals;
  Json cands = Json::array();
  for (const Candidate& c : r.candidates) {
    Json j;
    j["restart"] = c.restart;
    j["operator"] = to_string(c.c);
    j["residuals"] = c.residuals;
    j["residual"] = c.residual;
    j["support"] = c.support ? cone_json(*c.support) : Json();
    j["below_C"] = c.below_c;
    j["below_Cperp"] = c.below_c_perp;
    j["trivial"] = c.trivial;
    j["commutes_with_AB"] = c.commutes_with_ab;
    j["in_weak_past"] = c.in_weak_past;
    j["in_common_past"] = c.in_common_past;
    j["in_strong_past"] = c.in_strong_past;
    cands.push_back(j);
  }
  out["candidates"] = cands;
  std::size_t nontrivial = 0;
  for (const Candidate& c : r.candidates) nontrivial += c.trivial ? 0 : 1;
  out["nontrivial_candidates"] = nontrivial;
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kDomain, "cannot write '" + path + "'");
  out << text;
}

Json write_plots(const Scenario& sc, const LambdaState<Complex>& sf) {
  Json files = Json::array();
  if (sc.csv_prefix.empty()) return files;
  if (sc.sphere_grid > 0) {
    std::ostringstream csv;
    csv << "theta,phi,a1,a2,a3,residual_C,residual_Cperp\n";
    const int n = sc.sphere_grid;
    for (int i = 0; i <= n; ++i) {
      const double theta = std::numbers::pi * i / n;
      for (int k = 0; k < 2 * n; ++k) {
        const double phi = std::numbers::pi * k / n;
        const double a1 = std::sin(theta) * std::cos(phi);
        const double a2 = std::sin(theta) * std::sin(phi);
        const double a3 = std::cos(theta);
        const auto part = PartitionOfUnity<Complex>::binary(family_projection<Complex>(a1, a2, a3, 1e-9), 1e-9);
        const CcsReport r = noncommuting_ccs_residuals(sf, part);
        csv << double_to_string(theta) << ',' << double_to_string(phi) << ',' << double_to_string(a1) << ','
            << double_to_string(a2) << ',' << double_to_string(a3) << ',' << double_to_string(r.cells[0].residual)
            << ',' << double_to_string(r.cells[1].residual) << '\n';
      }
    }
    write_text(sc.csv_prefix + "_sphere.csv", csv.str());
    files.push_back(sc.csv_prefix + "_sphere.csv");
  }
  if (sc.lambda_sweep > 1) {
    std::ostringstream csv;
    csv << "t,lambda_AB,lambda_AperpBperp,lambda_ABperp,lambda_AperpB,correlation,family_residual\n";
    const double h = std::sqrt(0.5);
    const auto part = PartitionOfUnity<Complex>::binary(family_projection<Complex>(h, h, 0.0));
    for (int i = 0; i < sc.lambda_sweep; ++i) {
      const double t = static_cast<double>(i) / (sc.lambda_sweep - 1);
      SectorWeights<Complex> w;
      for (int p = 0; p < 4; ++p) w[p] = (1 - t) * 0.25 + t * sf.weights()[p];
      const auto s = build_lambda_state(sf.a(), sf.b(), w);
      csv << double_to_string(t);
      for (double v : w) csv << ',' << double_to_string(v);
      csv << ',' << double_to_string(correlation(s).sector_form) << ','
          << double_to_string(noncommuting_ccs_residuals(s, part).cells[0].residual) << '\n';
    }
    write_text(sc.csv_prefix + "_lambda.csv", csv.str());
    files.push_back(sc.csv_prefix + "_lambda.csv");
  }
  std::ostringstream gp;
  gp << "set datafile separator ','\n"
     << "set key autotitle columnhead\n";
  if (sc.sphere_grid > 0) {
    gp << "set terminal pngcairo size 900,600\n"
       << "set output '" << sc.csv_prefix << "_sphere.png'\n"
       << "set xlabel 'theta'\nset ylabel 'phi'\nset zlabel 'residual'\n"
       << "splot '" << sc.csv_prefix << "_sphere.csv' using 1:2:6 with points pt 7 ps 0.5\n";
  }
  if (sc.lambda_sweep > 1) {
    gp << "set terminal pngcairo size 900,600\n"
       << "set output '" << sc.csv_prefix << "_lambda.png'\n"
       << "set xlabel 't'\nset ylabel 'value'\n"
       << "plot '" << sc.csv_prefix << "_lambda.csv' using 1:6 with lines, '' using 1:7 with lines\n";
  }
  write_text(sc.csv_prefix + ".gp", gp.str());
  files.push_back(sc.csv_prefix + ".gp");
  return files;
}

}  // namespace

Json commuting_report(const Scenario& sc) {
  if (!sc.exact) return commuting_section(sc, nullptr);
  const auto s = scenario_state<ExactComplex>(sc);
  return commuting_section(sc, &s);
}

Json solver_report(const Scenario& sc, std::uint64_t seed) {
  return solver_section(sc, scenario_state<Complex>(sc), seed);
}

Json run_scenario(const Scenario& sc, const RunOptions& opts) {
  using Clock = std::chrono::steady_clock;
  Json timings;
  const auto t_start = Clock::now();
  const std::uint64_t seed = opts.seed.value_or(sc.solver.seed);

  Json report;
  report["tool"] = {{"name", "isingcc"}, {"version", kToolVersion}};
  report["scenario"] = sc.name;
  report["mode"] = sc.exact ? "exact" : "float";
  report["seed"] = seed;
  report["inputs"] = sc.raw;

  auto t0 = Clock::now();
  const LambdaState<Complex> sf = scenario_state<Complex>(sc);
  std::optional<LambdaState<ExactComplex>> se;
  if (sc.exact) se = scenario_state<ExactComplex>(sc);
  const LambdaState<ExactComplex>* sep = se ? &*se : nullptr;

  Json state;
  state["A"] = se ? to_string(se->a()) : to_string(sf.a());
  state["B"] = se ? to_string(se->b()) : to_string(sf.b());
  state["window"] = {{"first_qubit", sf.window().first}, {"last_qubit", sf.window().last}};
  state["sector_sizes"] = sf.sector_sizes();
  Json lambda;
  for (int p = 0; p < 4; ++p) {
    lambda[to_string(kSectors[p])] = se ? scalar_json(se->weights()[p]) : scalar_json(sf.weights()[p]);
  }
  state["lambda"] = lambda;
  report["state"] = state;

  bool correlated = false;
  Json corr;
  if (se) {
    const auto c = correlation(*se);
    if (!c.value.im.is_zero() || c.value.re != c.sector_form) {
      throw Error(ErrorCode::kDomain, "correlation forms disagree");
    }
    corr = scalar_json(c.sector_form);
    corr["sector_form"] = c.sector_form.to_string();
    correlated = !c.sector_form.is_zero();
    corr["positive"] = c.sector_form.sign() > 0;
  } else {
    const auto c = correlation(sf);
    corr = scalar_json(c.value.real());
    corr["sector_form"] = c.sector_form;
    correlated = std::abs(c.sector_form) > kDefaultTolerance;
    corr["positive"] = c.sector_form > kDefaultTolerance;
  }
  report["correlation"] = corr;
  timings["state"] = seconds_since(t0);

  t0 = Clock::now();
  report["geometry"] = geometry_section(sc);
  timings["geometry"] = seconds_since(t0);

  if (!correlated) {
    report["status"] = "no correlation to explain";
  } else {
    report["status"] = "analyzed";
    if (sc.run_commuting) {
      t0 = Clock::now();
      report["commuting"] = commuting_section(sc, sep);
      timings["commuting"] = seconds_since(t0);
    }
    if (sc.run_noncommuting) {
      t0 = Clock::now();
      report["noncommuting"] = noncommuting_section(sc, sf, sep);
      timings["noncommuting"] = seconds_since(t0);
    }
    if (sc.run_solver) {
      t0 = Clock::now();
      report["solver"] = solver_section(sc, sf, seed);
      timings["solver"] = seconds_since(t0);
    }
  }
  t0 = Clock::now();
  const Json files = write_plots(sc, sf);
  if (!files.empty()) report["plot_files"] = files;
  timings["plots"] = seconds_since(t0);
  timings["total"] = seconds_since(t_start);
  if (opts.timings) report["timings"] = timings;
  return report;
}

}  // namespace isingcc
