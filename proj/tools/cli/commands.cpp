#include "commands.hpp"

#include <cmath>
#include <fstream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hestondist/cregime.hpp"
#include "hestondist/deltaregime.hpp"
#include "hestondist/distance.hpp"
#include "hestondist/errors.hpp"
#include "hestondist/geodesic.hpp"
#include "hestondist/grushin.hpp"
#include "hestondist/ldpsim.hpp"
#include "report.hpp"
#include "suites.hpp"

namespace hdist::cli {

namespace {

struct Options {
  OutputFormat format = OutputFormat::Human;

  std::string model = "heston";
  std::vector<double> coords;
  std::string method = "delta";
  double rho = 0.0;
  double c = 1.0;

  int samples = 101;
  std::string out_path;

  long n_random = 1000;
  std::uint64_t seed = 0;

  std::vector<double> start{0.0, 1.0};
  std::vector<double> ball;
  std::vector<double> t_grid{0.4, 0.2, 0.1};
  std::int64_t n_paths = 100000;
  int steps = 400;
  unsigned threads = 0;
};

const std::map<std::string, OutputFormat> kFormats{
    {"human", OutputFormat::Human}, {"json", OutputFormat::JSON}, {"csv", OutputFormat::CSV}};

void add_format(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->transform(CLI::CheckedTransformer(kFormats, CLI::ignore_case));
}

void add_points(CLI::App* sub, Options& o, const std::string& names) {
  sub->add_option("coords", o.coords, names)->expected(4)->required();
}

std::string regime_name(Regime r) { return std::string(to_string(r)); }

std::string c_kind_name(CKind k) {
  switch (k) {
    case CKind::CClose:
      return "C-close";
    case CKind::CFar:
      return "C-far";
    case CKind::OnThreshold:
      return "C-threshold";
  }
  return "";
}

void add_solution(Record& r, const DistanceSolution& s, const std::string& suffix) {
  r.set("value" + suffix, s.value);
  r.set("regime" + suffix, regime_name(s.regime));
  r.set("parameter" + suffix, s.parameter);
  r.set("residual" + suffix, s.diagnostics.residual);
  r.set("iterations" + suffix, s.diagnostics.iterations);
  r.set("converged" + suffix, s.diagnostics.converged);
  if (s.diagnostics.secondary_regime) {
    r.set("secondary_regime" + suffix, regime_name(*s.diagnostics.secondary_regime));
  } else {
    r.set("secondary_regime" + suffix, Field{});
  }
}

DistanceSolution solve_distance(const Options& o, Method m) {
  const auto& p = o.coords;
  if (o.model == "heston") {
    return heston_distance({p[0], p[1]}, {p[2], p[3]}, m);
  }
  if (o.model == "grushin") {
    return grushin_distance({p[0], p[1]}, {p[2], p[3]}, m);
  }
  return correlated_distance({p[0], p[1]}, {p[2], p[3]}, {o.rho, o.c}, m);
}

Record cmd_distance(const Options& o) {
  Record r;
  r.set("model", o.model);
  r.set("method", o.method);
  if (o.method == "both") {
    const DistanceSolution via_delta = solve_distance(o, Method::Delta);
    const DistanceSolution via_c = solve_distance(o, Method::C);
    add_solution(r, via_delta, "");
    add_solution(r, via_c, "_c");
    add_solution(r, via_delta, "_delta");
    const double scale = std::max(std::abs(via_delta.value), 1e-12);
    r.set("relative_gap", std::abs(via_c.value - via_delta.value) / scale);
  } else {
    add_solution(r, solve_distance(o, o.method == "c" ? Method::C : Method::Delta), "");
  }
  return r;
}

Record cmd_classify(const Options& o) {
  const HestonPoint p0{o.coords[0], o.coords[1]};
  const HestonPoint p1{o.coords[2], o.coords[3]};
  const CanonicalPair pair = canonicalize(p0, p1);
  Record r;
  r.set("dx", pair.dx());
  r.set("v_min", pair.v_min());
  r.set("v_max", pair.v_max());
  r.set("vertical", pair.vertical());
  const CClassification c = classify_C(pair);
  const DeltaClassification d = classify_delta(pair);
  r.set("c_regime", c_kind_name(c.kind));
  r.set("c_threshold", c.threshold);
  r.set("delta_regime", d.kind == DeltaKind::DeltaClose ? "delta-close" : "delta-far");
  r.set("delta_threshold", d.threshold);
  const double y0 = std::sqrt(p0.v);
  const double y1 = std::sqrt(p1.v);
  r.set("grushin_threshold", grushin_threshold(y0, y1));
  r.set("in_M", in_region_M(p0.x, y0, p1.x, y1));
  return r;
}

Record cmd_geodesic(const Options& o) {
  const GeodesicPath g =
      geodesic_path({o.coords[0], o.coords[1]}, {o.coords[2], o.coords[3]}, o.samples);
  Record r;
  r.set("regime", regime_name(g.regime));
  r.set("vertical", g.vertical);
  r.set("C_star", g.C_star);
  r.set("shift_b", g.shift_b);
  if (g.apex) {
    r.set("apex_x", g.apex->x);
    r.set("apex_v", g.apex->v);
  } else {
    r.set("apex_x", Field{});
    r.set("apex_v", Field{});
  }
  r.set("length_closed_form", g.length_closed_form);
  r.set("length_quadrature", g.length_quadrature);
  r.set("endpoint_residual", g.endpoint_residual);
  std::vector<Record> rows;
  rows.reserve(g.samples.size());
  for (const auto& s : g.samples) {
    Record row;
    row.set("x", s.x).set("v", s.v);
    rows.push_back(std::move(row));
  }
  r.set("samples", std::move(rows));
  return r;
}

Record cmd_rate_fn(const Options& o) {
  const auto& p = o.coords;
  const GrushinPoint a{p[0], p[1]};
  const GrushinPoint b{p[2], p[3]};
  const RateFunctionResult res = lambda_star(a.x, a.y, b.x, b.y);
  Record r;
  r.set("lambda_star", res.value);
  r.set("branch", res.kind == RateKind::InteriorCritical ? "interior-critical"
                                                         : "boundary-contribution");
  r.set("delta_star", res.delta_star);
  r.set("gamma_star", res.gamma_star);
  r.set("R1", res.R1);
  r.set("R2", res.R2);
  r.set("threshold", grushin_threshold(a.y, b.y));
  r.set("in_M", in_region_M(a.x, a.y, b.x, b.y));
  return r;
}

Record cmd_validate(const Options& o, bool& all_passed) {
  const auto results = validation::run_all(o.n_random, o.seed);
  all_passed = true;
  std::vector<Record> rows;
  for (const auto& s : results) {
    all_passed = all_passed && s.passed;
    Record row;
    row.set("suite", s.name)
        .set("passed", s.passed)
        .set("cases", Field{static_cast<long long>(s.cases)})
        .set("failures", Field{static_cast<long long>(s.failures)})
        .set("max_error", s.max_error)
        .set("tolerance", s.tolerance)
        .set("note", s.note);
    rows.push_back(std::move(row));
  }
  Record r;
  r.set("passed", all_passed);
  r.set("n_random", Field{static_cast<long long>(o.n_random)});
  r.set("seed", Field{static_cast<long long>(o.seed)});
  r.set("suites", std::move(rows));
  return r;
}

Record cmd_ldp_sim(const Options& o) {
  if (o.start.size() != 2 || o.ball.size() != 3) {
    throw std::invalid_argument("ldp-sim: --start needs X Y and --ball needs CX CY R");
  }
  const GrushinPoint start{o.start[0], o.start[1]};
  BallSpec ball;
  ball.center = GrushinPoint{o.ball[0], o.ball[1]};
  ball.radius = o.ball[2];
  if (!(ball.radius > 0.0)) throw std::invalid_argument("ldp-sim: radius must be positive");

  const auto rows =
      ldp_trend_report(start, ball, o.t_grid, o.n_paths, o.steps, o.seed, o.threads);
  Record r;
  r.set("inf_lambda_star", rows.empty() ? 0.0 : -rows.front().minus_inf_lambda_star);
  r.set("ball_inside_M", ball_inside_region_M(start, ball));
  r.set("n_paths", Field{static_cast<long long>(o.n_paths)});
  r.set("steps", o.steps);
  r.set("seed", Field{static_cast<long long>(o.seed)});
  r.set("gaps_decreasing", gaps_decreasing(rows));
  std::vector<Record> table;
  for (const auto& row : rows) {
    Record t;
    t.set("t", row.t)
        .set("hits", Field{static_cast<long long>(row.ball.hits)})
        .set("p_hat", row.ball.p_hat)
        .set("stderr", row.ball.stderr_)
        .set("t_log_p", row.t_log_p)
        .set("minus_inf_lambda_star", row.minus_inf_lambda_star)
        .set("gap", row.gap)
        .set("relative_gap", row.relative_gap);
    table.push_back(std::move(t));
  }
  r.set("rows", std::move(table));
  return r;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Heston and Grushin distances, rate functions and geodesics", "hestondist"};
  app.require_subcommand(1);

  auto* distance = app.add_subcommand("distance", "Distance between two points");
  distance->add_option("model", o.model, "heston | grushin | heston-correlated")
      ->required()
      ->check(CLI::IsMember({"heston", "grushin", "heston-correlated"}));
  add_points(distance, o, "x0 a0 x1 a1 (a = v for Heston, y for Grushin)");
  distance->add_option("--method", o.method, "c | delta | both")
      ->check(CLI::IsMember({"c", "delta", "both"}));
  distance->add_option("--rho", o.rho, "Correlation (heston-correlated)");
  distance->add_option("--c", o.c, "Vol-of-vol (heston-correlated)");
  add_format(distance, o);

  auto* classify = app.add_subcommand("classify", "Regimes and thresholds of a Heston pair");
  add_points(classify, o, "x0 v0 x1 v1");
  add_format(classify, o);

  auto* geodesic = app.add_subcommand("geodesic", "Sample the geodesic between two points");
  add_points(geodesic, o, "x0 v0 x1 v1");
  geodesic->add_option("--samples", o.samples, "Number of samples")->check(CLI::Range(2, 100000000));
  geodesic->add_option("--out", o.out_path, "Output file (default: stdout)");
  add_format(geodesic, o);

  auto* rate = app.add_subcommand("rate-fn", "Legendre transform of the Grushin LCGF");
  add_points(rate, o, "x0 y0 x1 y1");
  add_format(rate, o);

  auto* validate = app.add_subcommand("validate", "Run the invariant suites");
  validate->add_option("--n-random", o.n_random, "Random cases per suite")
      ->check(CLI::NonNegativeNumber);
  validate->add_option("--seed", o.seed, "Seed");
  add_format(validate, o);

  auto* ldp = app.add_subcommand("ldp-sim", "Small-time ball probabilities against Lambda*");
  ldp->add_option("--start", o.start, "X Y")->expected(2);
  ldp->add_option("--ball", o.ball, "CX CY R")->expected(3)->required();
  ldp->add_option("--t-grid", o.t_grid, "Times")->delimiter(',');
  ldp->add_option("--n-paths", o.n_paths, "Paths per time")->check(CLI::PositiveNumber);
  ldp->add_option("--steps", o.steps, "Time steps")->check(CLI::PositiveNumber);
  ldp->add_option("--seed", o.seed, "Seed");
  ldp->add_option("--threads", o.threads, "Worker threads (0 = all)");
  add_format(ldp, o);

  bool geodesic_format_set = false;
  try {
    app.parse(argc, argv);
    geodesic_format_set = geodesic->count("--format") > 0;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kDomainError;
  }

  try {
    if (*distance) {
      write(out, cmd_distance(o), o.format);
    } else if (*classify) {
      write(out, cmd_classify(o), o.format);
    } else if (*geodesic) {
      const OutputFormat f = geodesic_format_set ? o.format : OutputFormat::CSV;
      const Record r = cmd_geodesic(o);
      if (o.out_path.empty()) {
        write(out, r, f);
      } else {
        std::ofstream file(o.out_path);
        if (!file) throw std::invalid_argument("cannot open " + o.out_path);
        write(file, r, f);
      }
    } else if (*rate) {
      write(out, cmd_rate_fn(o), o.format);
    } else if (*validate) {
      bool passed = true;
      write(out, cmd_validate(o, passed), o.format);
      if (!passed) return kValidationFailed;
    } else if (*ldp) {
      write(out, cmd_ldp_sim(o), o.format);
    }
  } catch (const SolverFailure& e) {
    err << "solver failure: " << e.what() << '\n';
    return kSolverFailure;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::invalid_argument& e) {
    err << "invalid argument: " << e.what() << '\n';
    return kDomainError;
  } catch (const std::overflow_error& e) {
    err << "overflow: " << e.what() << '\n';
    return kDomainError;
  }
  return kOk;
}

}  // namespace hdist::cli
