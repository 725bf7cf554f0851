// Command-line front end: spectra, phase diagrams, trajectories, and
// exceptional-point searches as subcommands with CSV/JSON outputs.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "nhqw/analysis.hpp"
#include "nhqw/bandtheory.hpp"
#include "nhqw/config_io.hpp"
#include "nhqw/dynamics.hpp"
#include "nhqw/model.hpp"
#include "nhqw/spectra.hpp"
#include "nhqw/version.hpp"

namespace {

using namespace nhqw;
using nlohmann::json;
namespace fs = std::filesystem;

constexpr double kPi = std::numbers::pi;

// Full-precision, locale-independent number formatting for CSV bodies.
std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct CommonOpts {
  std::string config_path;
  std::string preset;
  std::string out_dir;
  int threads = 1;
  bool seedless = false;  // reserved; all computations are deterministic
  std::optional<double> t1l, t2l, t1r, t2r, gamma;
  std::optional<int> n_left, n_right;
  std::optional<std::string> boundary;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--config", o.config_path,
                  "Walk-configuration JSON file (see README for the schema)");
  cmd->add_option("--preset", o.preset,
                  "Named parameter preset: fig2a fig2e fig3e figS2 figS3 figS4"
                  " (default fig2a when --config is absent)");
  cmd->add_option("--out", o.out_dir, "Output directory for CSV/JSON files");
  cmd->add_option("--threads", o.threads, "Worker threads for grid scans")
      ->check(CLI::PositiveNumber);
  cmd->add_flag("--seedless", o.seedless,
                "Reserved; every computation is deterministic already");
  cmd->add_option("--theta1-left", o.t1l, "Override theta1_left (units of pi)");
  cmd->add_option("--theta2-left", o.t2l, "Override theta2_left (units of pi)");
  cmd->add_option("--theta1-right", o.t1r,
                  "Override theta1_right (units of pi)");
  cmd->add_option("--theta2-right", o.t2r,
                  "Override theta2_right (units of pi)");
  cmd->add_option("--gamma", o.gamma, "Override the loss parameter gamma");
  cmd->add_option("--n-left", o.n_left, "Override sites with x < 0");
  cmd->add_option("--n-right", o.n_right, "Override sites with x >= 0");
  cmd->add_option("--boundary", o.boundary, "Override boundary: open|periodic")
      ->check(CLI::IsMember({"open", "periodic"}));
}

WalkConfig resolve_config(const CommonOpts& o) {
  WalkConfig base = [&] {
    if (!o.config_path.empty()) {
      std::ifstream in(o.config_path);
      if (!in) throw ConfigError("cannot open config file " + o.config_path);
      std::stringstream ss;
      ss << in.rdbuf();
      return walk_config_from_json(ss.str());
    }
    return preset_config(o.preset.empty() ? "fig2a" : o.preset);
  }();

  const double t1l = o.t1l ? *o.t1l * kPi : base.left.theta1;
  const double t2l = o.t2l ? *o.t2l * kPi : base.left.theta2;
  const double t1r = o.t1r ? *o.t1r * kPi : base.right.theta1;
  const double t2r = o.t2r ? *o.t2r * kPi : base.right.theta2;
  const double gamma = o.gamma.value_or(base.gamma);
  const int n_left = o.n_left.value_or(base.n_left);
  const int n_right = o.n_right.value_or(base.n_right);
  Boundary boundary = base.boundary;
  if (o.boundary)
    boundary = *o.boundary == "open" ? Boundary::Open : Boundary::Periodic;
  return WalkConfig(CoinParams(t1l, t2l), CoinParams(t1r, t2r), gamma, n_left,
                    n_right, boundary);
}

struct OutputFile {
  std::string name;
  std::string header;  // empty for JSON outputs
};

json config_record(const WalkConfig& config) {
  return json::parse(walk_config_to_json(config));
}

void write_manifest(const CommonOpts& o, const std::string& subcommand,
                    const WalkConfig& config, const json& options,
                    const std::vector<OutputFile>& outputs,
                    double duration_seconds) {
  if (o.out_dir.empty()) return;
  json m;
  m["subcommand"] = subcommand;
  m["tool_version"] = kVersion;
  m["config"] = config_record(config);
  m["options"] = options;
  m["outputs"] = json::array();
  for (const OutputFile& f : outputs)
    m["outputs"].push_back({{"file", f.name}, {"header", f.header}});
  m["duration_seconds"] = duration_seconds;
  std::ofstream out(fs::path(o.out_dir) / "manifest.json");
  out << m.dump(2) << "\n";
}

std::ofstream open_output(const CommonOpts& o, const std::string& name) {
  fs::create_directories(o.out_dir);
  std::ofstream out(fs::path(o.out_dir) / name);
  if (!out) throw ConfigError("cannot write to " + o.out_dir + "/" + name);
  return out;
}

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

// ---------------------------------------------------------------------------
// spectrum
// ---------------------------------------------------------------------------

struct SpectrumOpts {
  CommonOpts common;
  std::string method;
  std::string region = "right";
  int num_points = 256;
};

constexpr const char* kSpectrumHeader =
    "param,re_lambda,im_lambda,re_E,im_E,band,method";

void run_spectrum(const SpectrumOpts& o) {
  const Stopwatch watch;
  const WalkConfig config = resolve_config(o.common);
  const CoinParams& coin =
      o.region == "left" ? config.left : config.right;

  std::vector<std::string> rows;
  double max_im = -std::numeric_limits<double>::infinity();

  if (o.method == "bloch" || o.method == "gbz") {
    const std::vector<QuasiEnergy> spec =
        o.method == "gbz" ? nonbloch_spectrum(coin, config.gamma, o.num_points)
                          : bloch_spectrum(coin, config.gamma, o.num_points);
    // Continuity-traced band labels along the sweep.
    std::vector<std::pair<Complex, Complex>> pairs(o.num_points);
    for (int j = 0; j < o.num_points; ++j)
      pairs[j] = {spec[2 * j].lambda(), spec[2 * j + 1].lambda()};
    std::vector<std::pair<Complex, Complex>> traced;
    traced.reserve(pairs.size());
    traced.push_back(pairs.front());
    for (std::size_t j = 1; j < pairs.size(); ++j) {
      auto [a, b] = pairs[j];
      const auto& [p0, p1] = traced.back();
      if (std::abs(a - p0) + std::abs(b - p1) >
          std::abs(b - p0) + std::abs(a - p1))
        std::swap(a, b);
      traced.emplace_back(a, b);
    }
    for (int j = 0; j < o.num_points; ++j) {
      const double param = 2.0 * kPi * j / o.num_points;
      const Complex lams[2] = {traced[j].first, traced[j].second};
      for (int band = 0; band < 2; ++band) {
        const QuasiEnergy e = quasienergy_from_lambda(lams[band]);
        max_im = std::max(max_im, e.imag());
        rows.push_back(fmt(param) + "," + fmt(lams[band].real()) + "," +
                       fmt(lams[band].imag()) + "," + fmt(e.real()) + "," +
                       fmt(e.imag()) + "," + std::to_string(band) + "," +
                       o.method);
      }
    }
  } else {  // realspace
    const std::vector<QuasiEnergy> spec = realspace_spectrum(config);
    for (std::size_t i = 0; i < spec.size(); ++i) {
      const Complex lambda = spec[i].lambda();
      max_im = std::max(max_im, spec[i].imag());
      rows.push_back(fmt(static_cast<double>(i)) + "," + fmt(lambda.real()) +
                     "," + fmt(lambda.imag()) + "," + fmt(spec[i].real()) +
                     "," + fmt(spec[i].imag()) + ",0," + o.method);
    }
  }

  if (!o.common.out_dir.empty()) {
    std::ofstream out = open_output(o.common, "spectrum.csv");
    out << kSpectrumHeader << "\n";
    for (const std::string& r : rows) out << r << "\n";
  }
  std::cout << "spectrum: " << rows.size() << " rows, max Im E = "
            << fmt(max_im) << "\n";

  json options{{"method", o.method},
               {"region", o.region},
               {"num_points", o.num_points}};
  write_manifest(o.common, "spectrum", config, options,
                 {{"spectrum.csv", kSpectrumHeader}}, watch.seconds());
}

// ---------------------------------------------------------------------------
// phase-diagram
// ---------------------------------------------------------------------------

struct PhaseDiagramOpts {
  CommonOpts common;
  std::string method = "gbz";
  std::vector<int> grid{101, 101};
  std::vector<double> theta1_range{-1.0, 1.0};
  std::vector<double> theta2_range{-1.0, 1.0};
};

constexpr const char* kPhaseDiagramHeader = "theta1_pi,theta2_pi,max_im_E";

void run_phase_diagram(const PhaseDiagramOpts& o) {
  const Stopwatch watch;
  const WalkConfig config = resolve_config(o.common);

  GridSpec grid;
  grid.n_theta1 = o.grid[0];
  grid.n_theta2 = o.grid[1];
  grid.theta1_min_pi = o.theta1_range[0];
  grid.theta1_max_pi = o.theta1_range[1];
  grid.theta2_min_pi = o.theta2_range[0];
  grid.theta2_max_pi = o.theta2_range[1];

  const long cells = static_cast<long>(grid.n_theta1) * grid.n_theta2;
  const long weight =
      o.method == "realspace" ? cells * 80 : cells;  // 40 sites per side
  if (weight > 2'000'000)
    throw ResourceError(
        "phase-diagram: grid too large (cells x sites > 2e6); reduce --grid "
        "or use --method gbz");

  const SpectrumMethod method = o.method == "realspace"
                                    ? SpectrumMethod::RealspaceObc
                                    : SpectrumMethod::Gbz;
  const PhaseDiagram diagram = phase_diagram(config.gamma, config.left, grid,
                                             method, o.common.threads);

  if (!o.common.out_dir.empty()) {
    std::ofstream out = open_output(o.common, "phase_diagram.csv");
    out << kPhaseDiagramHeader << "\n";
    for (int i = 0; i < grid.n_theta1; ++i)
      for (int j = 0; j < grid.n_theta2; ++j)
        out << fmt(diagram.theta1_pi[i]) << "," << fmt(diagram.theta2_pi[j])
            << "," << fmt(diagram.max_im_energy(i, j)) << "\n";
  }
  std::cout << "phase-diagram: " << cells << " cells, max Im E = "
            << fmt(diagram.max_im_energy.maxCoeff()) << "\n";

  json options{{"method", diagram.method},
               {"grid", o.grid},
               {"theta1_range_pi", o.theta1_range},
               {"theta2_range_pi", o.theta2_range},
               {"threads", o.common.threads}};
  write_manifest(o.common, "phase-diagram", config, options,
                 {{"phase_diagram.csv", kPhaseDiagramHeader}},
                 watch.seconds());
}

// ---------------------------------------------------------------------------
// evolve
// ---------------------------------------------------------------------------

struct EvolveOpts {
  CommonOpts common;
  std::string scheme = "domain-wall";
  int steps = 7;
  int x0 = 6;
  int coin = 0;
  std::optional<int> site;  // request the P_site column at this x
  bool site_dump = false;
  std::string fit = "none";  // none|exp|power|both
  bool auto_size = false;
};

constexpr const char* kTrajectoryHeader = "t,P_total,P_site,survival,cum_loss";
constexpr const char* kSitesHeader = "t,x,prob_c0,prob_c1";

void run_evolve(const EvolveOpts& o) {
  const Stopwatch watch;
  SchemeSpec spec;
  spec.scheme = o.scheme == "bulk" ? SchemeSpec::Scheme::Bulk
                                   : SchemeSpec::Scheme::DomainWall;
  spec.steps = o.steps;
  spec.x0 = o.x0;
  spec.coin = o.coin;

  WalkConfig config = resolve_config(o.common);
  if (o.auto_size)
    config = sized_for(config.left, config.right, config.gamma, spec);

  const Trajectory traj = evolve(config, spec);
  const std::vector<double> p_total = corrected_total(traj, config.gamma);
  std::vector<double> p_site;
  if (o.site) p_site = corrected_site(traj, config.gamma, *o.site);

  std::vector<OutputFile> outputs;
  if (!o.common.out_dir.empty()) {
    std::ofstream out = open_output(o.common, "trajectory.csv");
    out << kTrajectoryHeader << "\n";
    for (int t = 0; t <= traj.steps; ++t) {
      out << t << "," << fmt(p_total[t]) << ","
          << (o.site ? fmt(p_site[t]) : std::string()) << ","
          << fmt(traj.survival[t]) << "," << fmt(traj.cum_loss[t]) << "\n";
    }
    outputs.push_back({"trajectory.csv", kTrajectoryHeader});

    if (o.site_dump) {
      std::ofstream sites = open_output(o.common, "sites.csv");
      sites << kSitesHeader << "\n";
      for (int t = 0; t <= traj.steps; ++t)
        for (int i = 0; i < traj.num_sites(); ++i)
          sites << t << "," << (i - traj.n_left) << ","
                << fmt(traj.site_prob[t](i, 0)) << ","
                << fmt(traj.site_prob[t](i, 1)) << "\n";
      outputs.push_back({"sites.csv", kSitesHeader});
    }
  }

  json fit_report = json::array();
  if (o.fit != "none") {
    const std::vector<double>& series = o.site ? p_site : p_total;
    const auto report = [&](const FitResult& fit) {
      fit_report.push_back(
          {{"model", fit.model == FitResult::Model::Exponential ? "exponential"
                                                                : "power-law"},
           {"param", fit.param},
           {"amplitude", fit.amplitude},
           {"accumulated_variance", fit.accumulated_variance},
           {"t_range", {fit.t_lo, fit.t_hi}}});
    };
    if (o.fit == "exp" || o.fit == "both")
      report(fit_exponential(series, 1, traj.steps));
    if (o.fit == "power" || o.fit == "both")
      report(fit_power_law(series, 1, traj.steps));
    if (!o.common.out_dir.empty()) {
      std::ofstream out = open_output(o.common, "fit.json");
      out << fit_report.dump(2) << "\n";
      outputs.push_back({"fit.json", ""});
    }
  }

  std::cout << "evolve: " << traj.steps << " steps, P_total(T) = "
            << fmt(p_total.back());
  if (o.site) std::cout << ", P_site(T) = " << fmt(p_site.back());
  std::cout << "\n";
  for (const auto& f : fit_report)
    std::cout << "fit " << f["model"].get<std::string>() << ": param = "
              << fmt(f["param"].get<double>()) << ", accumulated variance = "
              << fmt(f["accumulated_variance"].get<double>()) << "\n";

  json options{{"scheme", o.scheme}, {"steps", o.steps},
               {"x0", o.x0},         {"coin", o.coin},
               {"fit", o.fit},       {"auto_size", o.auto_size}};
  if (o.site) options["site"] = *o.site;
  write_manifest(o.common, "evolve", config, options, outputs,
                 watch.seconds());
}

// ---------------------------------------------------------------------------
// locate-ep
// ---------------------------------------------------------------------------

struct LocateEpOpts {
  CommonOpts common;
  std::string criterion;
  std::vector<double> bracket{0.38, 0.45};
  int steps = 7;
  int x0 = 6;
  std::string scheme;  // default depends on criterion
};

void run_locate_ep(const LocateEpOpts& o) {
  const Stopwatch watch;
  const WalkConfig config = resolve_config(o.common);

  EpEstimate::Criterion criterion;
  if (o.criterion == "p-unity")
    criterion = EpEstimate::Criterion::ProbabilityUnity;
  else if (o.criterion == "alpha-zero")
    criterion = EpEstimate::Criterion::ZeroExponent;
  else if (o.criterion == "spectral")
    criterion = EpEstimate::Criterion::SpectralZero;
  else
    criterion = EpEstimate::Criterion::Analytic;

  EpSearch search{config.left, config.right.theta1, config.gamma};
  search.steps = o.steps;
  search.x0 = o.x0;
  std::string scheme = o.scheme;
  if (scheme.empty())
    scheme = o.criterion == "alpha-zero" ? "bulk" : "domain-wall";
  search.scheme = scheme == "bulk" ? SchemeSpec::Scheme::Bulk
                                   : SchemeSpec::Scheme::DomainWall;

  const EpEstimate ep =
      locate_ep(search, criterion, o.bracket[0], o.bracket[1]);

  if (criterion == EpEstimate::Criterion::Analytic) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6f", ep.theta2_star_pi);
    std::cout << "theta2* = " << buf << " pi (analytic)\n";
  } else {
    std::cout << "theta2* = " << fmt(ep.theta2_star_pi) << " pi in ["
              << fmt(ep.lo_pi) << ", " << fmt(ep.hi_pi) << "] ("
              << o.criterion << ")\n";
  }

  if (!o.common.out_dir.empty()) {
    json report{{"gamma", config.gamma},
                {"criterion", o.criterion},
                {"theta2_star_pi", ep.theta2_star_pi},
                {"bracket_pi", {ep.lo_pi, ep.hi_pi}},
                {"steps", o.steps},
                {"scheme", scheme}};
    std::ofstream out = open_output(o.common, "ep.json");
    out << report.dump(2) << "\n";
  }

  json options{{"criterion", o.criterion},
               {"bracket", o.bracket},
               {"steps", o.steps},
               {"x0", o.x0},
               {"scheme", scheme}};
  write_manifest(o.common, "locate-ep", config, options, {{"ep.json", ""}},
                 watch.seconds());
}

// ---------------------------------------------------------------------------
// gbz
// ---------------------------------------------------------------------------

struct GbzOpts {
  CommonOpts common;
  std::string region = "right";
  int num_points = 256;
};

constexpr const char* kGbzHeader = "p,re_beta,im_beta";

void run_gbz(const GbzOpts& o) {
  const Stopwatch watch;
  const WalkConfig config = resolve_config(o.common);
  const CoinParams& coin = o.region == "left" ? config.left : config.right;
  const double radius = gbz_radius(coin.theta2, config.gamma);
  std::cout << "gbz radius (" << o.region << " bulk) = " << fmt(radius)
            << "\n";

  if (!o.common.out_dir.empty()) {
    std::ofstream out = open_output(o.common, "gbz.csv");
    out << kGbzHeader << "\n";
    for (int j = 0; j < o.num_points; ++j) {
      const double p = 2.0 * kPi * j / o.num_points;
      out << fmt(p) << "," << fmt(radius * std::cos(p)) << ","
          << fmt(radius * std::sin(p)) << "\n";
    }
  }
  json options{{"region", o.region}, {"num_points", o.num_points}};
  write_manifest(o.common, "gbz", config, options, {{"gbz.csv", kGbzHeader}},
                 watch.seconds());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "nhqw: nonunitary quantum-walk spectra, dynamics, and non-Bloch "
      "exceptional points"};
  app.require_subcommand(1);

  SpectrumOpts spectrum_opts;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Quasienergy spectrum tables (CSV)");
  add_common(spectrum, spectrum_opts.common);
  spectrum->add_option("--method", spectrum_opts.method, "bloch|gbz|realspace")
      ->required()
      ->check(CLI::IsMember({"bloch", "gbz", "realspace"}));
  spectrum->add_option("--region", spectrum_opts.region,
                       "Bulk region for bloch/gbz methods")
      ->check(CLI::IsMember({"left", "right"}));
  spectrum->add_option("--num-points", spectrum_opts.num_points,
                       "Angular samples on the (G)BZ")
      ->check(CLI::Range(2, 1 << 20));

  PhaseDiagramOpts pd_opts;
  CLI::App* pd = app.add_subcommand("phase-diagram",
                                    "max Im E over a grid of right-region "
                                    "angles (CSV)");
  add_common(pd, pd_opts.common);
  pd->add_option("--method", pd_opts.method, "gbz|realspace")
      ->check(CLI::IsMember({"gbz", "realspace"}));
  pd->add_option("--grid", pd_opts.grid, "Grid resolution: n_theta1 n_theta2")
      ->expected(2);
  pd->add_option("--theta1-range", pd_opts.theta1_range,
                 "theta1 range in units of pi: min max")
      ->expected(2);
  pd->add_option("--theta2-range", pd_opts.theta2_range,
                 "theta2 range in units of pi: min max")
      ->expected(2);

  EvolveOpts evolve_opts;
  CLI::App* ev = app.add_subcommand("evolve",
                                    "Stroboscopic lossy evolution with the "
                                    "corrected-probability ledger (CSV)");
  add_common(ev, evolve_opts.common);
  ev->add_option("--scheme", evolve_opts.scheme, "domain-wall|bulk")
      ->check(CLI::IsMember({"domain-wall", "bulk"}));
  ev->add_option("--steps", evolve_opts.steps, "Number of walk steps")
      ->check(CLI::NonNegativeNumber);
  ev->add_option("--x0", evolve_opts.x0, "Start site for the bulk scheme");
  ev->add_option("--coin", evolve_opts.coin, "Initial coin state (0 or 1)")
      ->check(CLI::Range(0, 1));
  ev->add_option("--site", evolve_opts.site,
                 "Emit the corrected on-site probability P_site at this x");
  ev->add_flag("--site-dump", evolve_opts.site_dump,
               "Also write site-resolved probabilities (sites.csv)");
  ev->add_option("--fit", evolve_opts.fit,
                 "Fit the corrected series over t = 1..T: none|exp|power|both")
      ->check(CLI::IsMember({"none", "exp", "power", "both"}));
  ev->add_flag("--auto-size", evolve_opts.auto_size,
               "Resize the lattice so margins fit the requested steps");

  LocateEpOpts ep_opts;
  CLI::App* ep = app.add_subcommand(
      "locate-ep", "Locate an exceptional point over theta2_right (JSON)");
  add_common(ep, ep_opts.common);
  ep->add_option("--criterion", ep_opts.criterion,
                 "p-unity|alpha-zero|spectral|analytic")
      ->required()
      ->check(CLI::IsMember({"p-unity", "alpha-zero", "spectral", "analytic"}));
  ep->add_option("--bracket", ep_opts.bracket,
                 "Scan bracket for theta2_right in units of pi: lo hi")
      ->expected(2);
  ep->add_option("--steps", ep_opts.steps, "Walk steps for dynamical criteria")
      ->check(CLI::PositiveNumber);
  ep->add_option("--x0", ep_opts.x0, "Bulk start site for alpha-zero");
  ep->add_option("--scheme", ep_opts.scheme, "domain-wall|bulk")
      ->check(CLI::IsMember({"domain-wall", "bulk"}));

  GbzOpts gbz_opts;
  CLI::App* gbz = app.add_subcommand(
      "gbz", "Print the GBZ radius and write circle samples (CSV)");
  add_common(gbz, gbz_opts.common);
  gbz->add_option("--region", gbz_opts.region, "left|right")
      ->check(CLI::IsMember({"left", "right"}));
  gbz->add_option("--num-points", gbz_opts.num_points, "Circle samples")
      ->check(CLI::Range(2, 1 << 20));

  try {
    app.parse(argc, argv);
    if (*spectrum) run_spectrum(spectrum_opts);
    if (*pd) run_phase_diagram(pd_opts);
    if (*ev) run_evolve(evolve_opts);
    if (*ep) run_locate_ep(ep_opts);
    if (*gbz) run_gbz(gbz_opts);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const ResourceError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const BracketingError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SolverError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const SingularityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const EpProximityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const DegenerateDispersionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
