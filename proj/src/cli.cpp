#include "hankel/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankel/report_io.hpp"
#include "hankel/verification.hpp"

namespace hankel::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::uint64_t kDefaultSeed = 12345;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("HANKEL_AUDIT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument("HANKEL_AUDIT_SEED must be an unsigned integer");
    }
  }
  return kDefaultSeed;
}

Variant parse_variant(const std::string& s) {
  if (s == "printed") return Variant::printed;
  if (s == "derived") return Variant::derived;
  throw std::invalid_argument("--variant must be 'printed' or 'derived'");
}

void write_output(const std::string& path, const std::string& payload) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::invalid_argument("--out: cannot open '" + path + "' for writing");
  file << payload;
}

int worst_exit(int a, int b) {
  if (a == 1 || b == 1) return 1;
  if (a == 3 || b == 3) return 3;
  return std::max(a, b);
}

struct CommonAuditOptions {
  std::int64_t samples;
  std::uint64_t seed;
  int grid;
  int tau_grid;
};

}  // namespace

std::vector<double> parse_range(const std::string& text) {
  const auto first = text.find(':');
  if (first == std::string::npos) {
    try {
      return {std::stod(text)};
    } catch (const std::exception&) {
      throw std::invalid_argument("range '" + text + "' is not a number or A:B:N");
    }
  }
  const auto second = text.find(':', first + 1);
  if (second == std::string::npos)
    throw std::invalid_argument("range '" + text + "' must have the form A:B:N");
  double lo = 0.0, hi = 0.0;
  long n = 0;
  try {
    lo = std::stod(text.substr(0, first));
    hi = std::stod(text.substr(first + 1, second - first - 1));
    n = std::stol(text.substr(second + 1));
  } catch (const std::exception&) {
    throw std::invalid_argument("range '" + text + "' must have numeric A:B:N parts");
  }
  if (n < 1) throw std::invalid_argument("range '" + text + "': N must be >= 1");
  if (n == 1) {
    if (lo != hi) throw std::invalid_argument("range '" + text + "': N = 1 requires A = B");
    return {lo};
  }
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) out.push_back(lo + (hi - lo) * static_cast<double>(i) / (n - 1));
  return out;
}

namespace {

int run_bound(double beta, double t, bool allow_exterior, const std::string& variant,
              std::ostream& out) {
  const ClassParams params(beta, t, allow_exterior);
  const BoundBreakdown b = theorem_bound(params, parse_variant(variant));
  Json j;
  j["beta"] = beta;
  j["t"] = t;
  const Json body = Json::parse(to_json_string(b));
  for (const auto& [key, value] : body.items()) j[key] = value;
  out << j.dump(2) << "\n";
  return 0;
}

int run_verify(double beta, double t, bool allow_exterior, const CommonAuditOptions& opts,
               std::ostream& out) {
  const ClassParams params(beta, t, allow_exterior);
  AuditConfig config;
  config.samples = opts.samples;
  config.seed = opts.seed;
  config.omega_resolution = opts.grid;
  config.tau_resolution = opts.tau_grid;
  const AuditReport report = cross_check(params, config);
  out << to_json_string(report);
  return exit_code_for(report.flags);
}

int run_sweep(const std::string& beta_range, const std::string& t_range, const std::string& path,
              const std::string& format, bool allow_exterior, const CommonAuditOptions& opts,
              std::ostream& out) {
  const std::vector<double> betas = parse_range(beta_range);
  const std::vector<double> ts = parse_range(t_range);
  AuditConfig config;
  config.samples = opts.samples;
  config.seed = opts.seed;
  config.omega_resolution = opts.grid;
  config.tau_resolution = opts.tau_grid;
  std::vector<SweepRow> rows;
  int exit_code = 0;
  for (const double beta : betas) {
    for (const double t : ts) {
      const ClassParams params(beta, t, allow_exterior);
      const AuditReport report = cross_check(params, config);
      rows.push_back(make_sweep_row(report, report.printed));
      rows.push_back(make_sweep_row(report, report.derived));
      exit_code = worst_exit(exit_code, exit_code_for(report.flags));
    }
  }
  write_output(path, format == "json" ? to_json_string(rows) : to_csv(rows));
  Json j;
  j["command"] = "sweep";
  j["cells"] = betas.size() * ts.size();
  j["rows"] = rows.size();
  j["out"] = path;
  out << j.dump(2) << "\n";
  return exit_code;
}

int run_regions(int resolution, std::optional<std::string> beta_range,
                std::optional<std::string> t_range, const std::string& path,
                const std::string& format, std::ostream& out) {
  if (resolution < 2) throw std::invalid_argument("--resolution must be >= 2");
  std::ostringstream def_beta, def_t;
  def_beta << "0:1:" << resolution;
  def_t << "0.502:0.998:" << resolution;
  const std::vector<double> betas = parse_range(beta_range.value_or(def_beta.str()));
  const std::vector<double> ts = parse_range(t_range.value_or(def_t.str()));
  const std::vector<RegionRow> rows = region_map(betas, ts);
  write_output(path, format == "json" ? to_json_string(rows) : to_csv(rows));
  bool any_disagree = false;
  for (const auto& r : rows) any_disagree = any_disagree || !r.agree;
  Json j;
  j["command"] = "regions";
  j["rows"] = rows.size();
  j["disagreements"] = any_disagree;
  j["out"] = path;
  out << j.dump(2) << "\n";
  return any_disagree ? 3 : 0;
}

int run_fs(std::optional<double> mu, std::optional<double> beta, std::optional<double> t,
           bool allow_exterior, std::int64_t samples, std::uint64_t seed,
           const std::string& mu_range, std::ostream& out) {
  if (mu && !beta && !t) {
    Json j;
    j["command"] = "fs";
    j["mu"] = *mu;
    j["classical_bound"] = fekete_szego_classical_bound(*mu);
    out << j.dump(2) << "\n";
    return 0;
  }
  if (!beta || !t)
    throw std::invalid_argument("fs needs either --mu or both --beta and --t");
  const ClassParams params(*beta, *t, allow_exterior);
  const std::vector<double> mus = mu ? std::vector<double>{*mu} : parse_range(mu_range);
  std::vector<CoefficientTriple> triples;
  triples.reserve(static_cast<std::size_t>(samples));
  for (std::int64_t i = 0; i < samples; ++i)
    triples.push_back(closed_form_triple(params, sample_at(seed, i)));
  Json grid = Json::array();
  for (const double m : mus) {
    double best = 0.0;
    for (const auto& triple : triples)
      best = std::max(best, std::abs(fekete_szego_functional(triple, m)));
    Json cell;
    cell["mu"] = m;
    cell["empirical_max"] = best;
    cell["classical_bound"] = fekete_szego_classical_bound(m);
    grid.push_back(cell);
  }
  Json j;
  j["command"] = "fs";
  j["beta"] = *beta;
  j["t"] = *t;
  j["samples"] = samples;
  j["seed"] = seed;
  j["grid"] = grid;
  out << j.dump(2) << "\n";
  return 0;
}

int run_selfcheck_cmd(std::int64_t samples, std::ostream& out) {
  const std::vector<CheckResult> checks = run_selfcheck(samples);
  bool all_pass = true;
  Json arr = Json::array();
  for (const auto& c : checks) {
    all_pass = all_pass && c.pass;
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    j["detail"] = c.detail;
    arr.push_back(j);
  }
  Json j;
  j["command"] = "selfcheck";
  j["checks"] = arr;
  j["errata"] = errata_notes();
  j["all_pass"] = all_pass;
  out << j.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound evaluation and auditing for the second Hankel determinant of a "
               "Chebyshev-subordination function class"};
  app.require_subcommand(1);

  double beta = 0.0, t = 0.0;
  bool allow_exterior = false;
  std::string variant = "derived";
  std::string beta_range, t_range, out_path, format = "csv";
  std::int64_t samples = 100000;
  std::int64_t selfcheck_samples = 10000;
  int grid = 401;
  int tau_grid = 4001;
  int resolution = 25;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::optional<double> fs_mu, fs_beta, fs_t;
  std::string mu_range = "-1:2:61";
  std::int64_t fs_samples = 20000;

  auto* bound = app.add_subcommand("bound", "Evaluate the piecewise bound at one (beta, t)");
  bound->add_option("--beta", beta, "class parameter beta in [0, 1]")->required();
  bound->add_option("--t", t, "class parameter t in (1/2, 1)")->required();
  bound->add_option("--variant", variant, "formula variant: printed or derived");
  bound->add_flag("--allow-exterior", allow_exterior, "accept t outside (1/2, 1)");

  auto* verify = app.add_subcommand("verify", "Full audit at one (beta, t)");
  verify->add_option("--beta", beta, "class parameter beta in [0, 1]")->required();
  verify->add_option("--t", t, "class parameter t in (1/2, 1)")->required();
  verify->add_option("--samples", samples, "relaxation sample count");
  auto* seed_opt = verify->add_option("--seed", seed, "sampler seed (default HANKEL_AUDIT_SEED or 12345)");
  verify->add_option("--grid", grid, "square-maximization grid, per axis");
  verify->add_option("--tau-grid", tau_grid, "tau grid on [0, 2]");
  verify->add_flag("--allow-exterior", allow_exterior, "accept t outside (1/2, 1)");

  auto* sweep = app.add_subcommand("sweep", "Audit a (beta, t) grid into a table");
  sweep->add_option("--beta", beta_range, "beta range A:B:N")->required();
  sweep->add_option("--t", t_range, "t range A:B:N")->required();
  sweep->add_option("--out", out_path, "output file path")->required();
  sweep->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--samples", samples, "relaxation sample count per cell");
  auto* sweep_seed_opt = sweep->add_option("--seed", seed, "sampler seed");
  sweep->add_option("--grid", grid, "square-maximization grid, per axis");
  sweep->add_option("--tau-grid", tau_grid, "tau grid on [0, 2]");
  sweep->add_flag("--allow-exterior", allow_exterior, "accept t outside (1/2, 1)");

  auto* regions = app.add_subcommand("regions", "Case/sign map over the parameter square");
  regions->add_option("--resolution", resolution, "grid points per axis")->required();
  regions->add_option("--out", out_path, "output file path")->required();
  regions->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  std::string regions_beta_range, regions_t_range;
  auto* rb = regions->add_option("--beta", regions_beta_range, "beta range A:B:N override");
  auto* rt = regions->add_option("--t", regions_t_range, "t range A:B:N override");

  auto* fs = app.add_subcommand("fs", "Weighted coefficient functional |a3 - mu a2^2|");
  fs->add_option("--mu", fs_mu, "weight mu (classical bound mode)");
  fs->add_option("--beta", fs_beta, "class parameter beta");
  fs->add_option("--t", fs_t, "class parameter t");
  fs->add_option("--samples", fs_samples, "relaxation sample count");
  auto* fs_seed_opt = fs->add_option("--seed", seed, "sampler seed");
  fs->add_option("--mu-grid", mu_range, "mu range A:B:N for the empirical scan");
  fs->add_flag("--allow-exterior", allow_exterior, "accept t outside (1/2, 1)");

  auto* selfcheck = app.add_subcommand("selfcheck", "Run the invariant suite");
  selfcheck->add_option("--samples", selfcheck_samples, "sampler checks size");

  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("hankel_audit");
  for (const auto& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  seed_given = (seed_opt->count() > 0) || (sweep_seed_opt->count() > 0) ||
               (fs_seed_opt->count() > 0);

  try {
    CommonAuditOptions opts;
    opts.samples = samples;
    opts.seed = seed_given ? seed : default_seed();
    opts.grid = grid;
    opts.tau_grid = tau_grid;

    if (bound->parsed()) return run_bound(beta, t, allow_exterior, variant, out);
    if (verify->parsed()) return run_verify(beta, t, allow_exterior, opts, out);
    if (sweep->parsed()) {
      // lighter oracle defaults per cell unless overridden
      if (sweep->count("--samples") == 0) opts.samples = 20000;
      if (sweep->count("--grid") == 0) opts.grid = 101;
      if (sweep->count("--tau-grid") == 0) opts.tau_grid = 1001;
      return run_sweep(beta_range, t_range, out_path, format, allow_exterior, opts, out);
    }
    if (regions->parsed()) {
      std::optional<std::string> rbo, rto;
      if (rb->count() > 0) rbo = regions_beta_range;
      if (rt->count() > 0) rto = regions_t_range;
      return run_regions(resolution, rbo, rto, out_path, format, out);
    }
    if (fs->parsed())
      return run_fs(fs_mu, fs_beta, fs_t, allow_exterior, fs_samples,
                    seed_given ? seed : default_seed(), mu_range, out);
    if (selfcheck->parsed()) return run_selfcheck_cmd(selfcheck_samples, out);
  } catch (const std::domain_error& e) {
    err << "domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  err << "usage error: no subcommand\n";
  return 2;
}

}  // namespace hankel::cli
