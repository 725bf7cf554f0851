#include "nhqw/analysis.hpp"

#include <cmath>
#include <numbers>
#include <thread>

namespace nhqw {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kBracketTolPi = 1e-4;      // bisection width, units of pi
constexpr double kSpectralThreshold = 1e-6; // max Im E considered nonzero

struct LogFitWindow {
  std::vector<double> abscissa;  // t or ln t
  std::vector<double> log_p;
};

LogFitWindow fit_window(const std::vector<double>& series, int t_lo, int t_hi,
                        bool log_abscissa) {
  if (t_lo < (log_abscissa ? 1 : 0) || t_hi >= static_cast<int>(series.size()) ||
      t_hi - t_lo + 1 < 3)
    throw DomainError("fit: window must contain >= 3 valid points");
  LogFitWindow w;
  for (int t = t_lo; t <= t_hi; ++t) {
    if (!(series[t] > 0.0))
      throw DomainError("fit: series must be positive on the window");
    w.abscissa.push_back(log_abscissa ? std::log(static_cast<double>(t))
                                      : static_cast<double>(t));
    w.log_p.push_back(std::log(series[t]));
  }
  return w;
}

/// Ordinary least squares y = slope * x + intercept.
std::pair<double, double> linear_fit(const std::vector<double>& x,
                                     const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  const double slope = sxy / sxx;
  return {slope, my - slope * mx};
}

WalkConfig dynamics_config(const EpSearch& search, double theta2_right_pi) {
  const CoinParams right(search.theta1_right, theta2_right_pi * kPi);
  SchemeSpec spec;
  spec.scheme = search.scheme;
  spec.steps = search.steps;
  spec.x0 = search.x0;
  return sized_for(search.left, right, search.gamma, spec);
}

}  // namespace

double FitResult::evaluate(int t) const {
  return model == Model::Exponential
             ? amplitude * std::exp(param * t)
             : amplitude * std::pow(static_cast<double>(t), -param);
}

FitResult fit_exponential(const std::vector<double>& series, int t_lo,
                          int t_hi) {
  const LogFitWindow w = fit_window(series, t_lo, t_hi, false);
  const auto [slope, intercept] = linear_fit(w.abscissa, w.log_p);
  FitResult fit{FitResult::Model::Exponential, slope, std::exp(intercept), 0.0,
                t_lo, t_hi};
  fit.accumulated_variance = accumulated_variance(series, fit);
  return fit;
}

FitResult fit_power_law(const std::vector<double>& series, int t_lo, int t_hi) {
  const LogFitWindow w = fit_window(series, t_lo, t_hi, true);
  const auto [slope, intercept] = linear_fit(w.abscissa, w.log_p);
  FitResult fit{FitResult::Model::PowerLaw, -slope, std::exp(intercept), 0.0,
                t_lo, t_hi};
  fit.accumulated_variance = accumulated_variance(series, fit);
  return fit;
}

double accumulated_variance(const std::vector<double>& series,
                            const FitResult& fit) {
  if (fit.t_lo < 0 || fit.t_hi >= static_cast<int>(series.size()))
    throw DomainError("accumulated_variance: fit window outside the series");
  double sum = 0.0;
  for (int t = fit.t_lo; t <= fit.t_hi; ++t) {
    const double f = fit.evaluate(t);
    const double d = series[t] - f;
    sum += d * d / (f * f);
  }
  return sum;
}

EpEstimate locate_ep(const EpSearch& search, EpEstimate::Criterion criterion,
                     double lo_pi, double hi_pi) {
  if (!(lo_pi < hi_pi))
    throw BracketingError("locate_ep: bracket must satisfy lo < hi");

  if (criterion == EpEstimate::Criterion::Analytic) {
    const double star = exceptional_theta2(search.gamma) / kPi;
    double found = 0.0;
    int hits = 0;
    for (double candidate : {star, -star, 1.0 - star, star - 1.0}) {
      if (candidate > lo_pi && candidate < hi_pi) {
        found = candidate;
        ++hits;
      }
    }
    if (hits != 1)
      throw BracketingError(
          "locate_ep: bracket must contain exactly one analytic EP branch");
    return {found, criterion, lo_pi, hi_pi};
  }

  auto indicator = [&](double theta2_pi) -> double {
    switch (criterion) {
      case EpEstimate::Criterion::ProbabilityUnity: {
        SchemeSpec spec;
        spec.scheme = search.scheme;
        spec.steps = search.steps;
        spec.x0 = search.x0;
        const WalkConfig config = dynamics_config(search, theta2_pi);
        const Trajectory traj = evolve(config, spec);
        return corrected_total(traj, search.gamma).back() - 1.0;
      }
      case EpEstimate::Criterion::ZeroExponent: {
        SchemeSpec spec;
        spec.scheme = SchemeSpec::Scheme::Bulk;
        spec.steps = search.steps;
        spec.x0 = search.x0;
        const WalkConfig config = dynamics_config(search, theta2_pi);
        const Trajectory traj = evolve(config, spec);
        const std::vector<double> p =
            corrected_site(traj, search.gamma, spec.x0);
        return fit_exponential(p, 1, search.steps).param;
      }
      case EpEstimate::Criterion::SpectralZero: {
        const CoinParams right(search.theta1_right, theta2_pi * kPi);
        return max_imag_quasienergy(search.left, right, search.gamma,
                                    SpectrumMethod::Gbz) -
               kSpectralThreshold;
      }
      case EpEstimate::Criterion::Analytic:
        break;
    }
    throw DomainError("locate_ep: unknown criterion");
  };

  double lo = lo_pi, hi = hi_pi;
  double f_lo = indicator(lo);
  const double f_hi = indicator(hi);
  if (f_lo == 0.0) return {lo, criterion, lo, lo};
  if (f_hi == 0.0) return {hi, criterion, hi, hi};
  if ((f_lo > 0.0) == (f_hi > 0.0))
    throw BracketingError("locate_ep: no sign change over the bracket");

  while (hi - lo > kBracketTolPi) {
    const double mid = 0.5 * (lo + hi);
    const double f_mid = indicator(mid);
    if (f_mid == 0.0) return {mid, criterion, lo, hi};
    if ((f_mid > 0.0) == (f_lo > 0.0)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
  return {0.5 * (lo + hi), criterion, lo, hi};
}

PhaseDiagram phase_diagram(double gamma, const CoinParams& left,
                           const GridSpec& grid, SpectrumMethod method,
                           int threads) {
  if (grid.n_theta1 < 1 || grid.n_theta2 < 1)
    throw DomainError("phase_diagram: grid must have at least one cell");
  if (method != SpectrumMethod::Gbz && method != SpectrumMethod::RealspaceObc)
    throw DomainError("phase_diagram: method must be gbz or realspace-obc");

  PhaseDiagram diagram;
  diagram.method = method == SpectrumMethod::Gbz ? "gbz" : "realspace-obc";
  diagram.theta1_pi.resize(grid.n_theta1);
  diagram.theta2_pi.resize(grid.n_theta2);
  for (int i = 0; i < grid.n_theta1; ++i)
    diagram.theta1_pi[i] =
        grid.n_theta1 == 1
            ? grid.theta1_min_pi
            : grid.theta1_min_pi + (grid.theta1_max_pi - grid.theta1_min_pi) *
                                       i / (grid.n_theta1 - 1);
  for (int j = 0; j < grid.n_theta2; ++j)
    diagram.theta2_pi[j] =
        grid.n_theta2 == 1
            ? grid.theta2_min_pi
            : grid.theta2_min_pi + (grid.theta2_max_pi - grid.theta2_min_pi) *
                                       j / (grid.n_theta2 - 1);
  diagram.max_im_energy.resize(grid.n_theta1, grid.n_theta2);

  const int total = grid.n_theta1 * grid.n_theta2;
  const int n_workers = std::max(1, std::min(threads, total));
  auto run_cells = [&](int begin, int end) {
    for (int cell = begin; cell < end; ++cell) {
      const int i = cell / grid.n_theta2;
      const int j = cell % grid.n_theta2;
      const CoinParams right = CoinParams::from_pi_units(
          diagram.theta1_pi[i], diagram.theta2_pi[j]);
      diagram.max_im_energy(i, j) =
          max_imag_quasienergy(left, right, gamma, method);
    }
  };

  if (n_workers == 1) {
    run_cells(0, total);
  } else {
    std::vector<std::thread> pool;
    const int chunk = (total + n_workers - 1) / n_workers;
    for (int w = 0; w < n_workers; ++w) {
      const int begin = w * chunk;
      const int end = std::min(total, begin + chunk);
      if (begin < end) pool.emplace_back(run_cells, begin, end);
    }
    for (auto& t : pool) t.join();
  }
  return diagram;
}

}  // namespace nhqw
