#include "nhqw/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

namespace nhqw {

namespace {

constexpr double kKernelModulusTol = 1e-12;
constexpr double kResidualTarget = 1e-10;

double residual_of(const Eigen::MatrixXcd& m, const Eigen::VectorXcd& v,
                   Complex lambda) {
  return (m * v - lambda * v).norm();
}

}  // namespace

EigenSystem eigendecompose(const Eigen::MatrixXcd& matrix) {
  if (matrix.rows() != matrix.cols() || matrix.rows() < 1)
    throw DomainError("eigendecompose: matrix must be square and non-empty");
  if (!matrix.allFinite())
    throw DomainError("eigendecompose: matrix has non-finite entries");

  const int n = static_cast<int>(matrix.rows());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(matrix, true);
  if (solver.info() != Eigen::Success)
    throw SolverError("eigendecompose: QR iteration did not converge");

  EigenSystem out;
  out.eigenvalues = solver.eigenvalues();
  out.right_vectors = solver.eigenvectors();  // unit columns
  out.residuals.resize(n);

  const double scale = std::max(1.0, matrix.cwiseAbs().maxCoeff());
  for (int i = 0; i < n; ++i) {
    double res = residual_of(matrix, out.right_vectors.col(i),
                             out.eigenvalues[i]);
    if (res > kResidualTarget * scale) {
      // One inverse-iteration step against a slightly shifted eigenvalue.
      const Complex shift =
          out.eigenvalues[i] * (1.0 + 1e-12) + Complex(1e-300, 0.0);
      Eigen::MatrixXcd shifted = matrix;
      shifted.diagonal().array() -= shift;
      Eigen::VectorXcd refined =
          shifted.partialPivLu().solve(out.right_vectors.col(i));
      const double norm = refined.norm();
      if (norm > 0.0 && refined.allFinite()) {
        refined /= norm;
        const double refined_res =
            residual_of(matrix, refined, out.eigenvalues[i]);
        if (refined_res < res) {
          out.right_vectors.col(i) = refined;
          res = refined_res;
        }
      }
    }
    out.residuals[i] = res;
  }

  // Left vectors from the inverse of the right-vector matrix: row j of V^-1
  // satisfies r U = lambda_j r, and chi_j = r^dag keeps the biorthogonality
  // <chi_j|v_k> = c_j delta_jk.
  const Eigen::MatrixXcd vinv = out.right_vectors.partialPivLu().inverse();
  out.left_vectors.resize(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::VectorXcd chi = vinv.row(i).adjoint();
    const double norm = chi.norm();
    if (norm > 0.0) chi /= norm;
    out.left_vectors.col(i) = chi;
  }

  out.near_defective.assign(n, false);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(out.eigenvalues[i] - out.eigenvalues[j]) <= 1e-8) {
        out.near_defective[i] = true;
        out.near_defective[j] = true;
      }
    }
  }
  return out;
}

std::vector<QuasiEnergy> realspace_spectrum(const WalkConfig& config,
                                            int size_cap) {
  if (config.num_sites() > size_cap)
    throw ResourceError("realspace_spectrum: lattice exceeds the size cap");
  const StepOperator op = build_step_operator(config, StepVariant::Balanced);
  const EigenSystem eig = eigendecompose(op.matrix);
  std::vector<QuasiEnergy> out;
  out.reserve(static_cast<std::size_t>(eig.eigenvalues.size()));
  for (Eigen::Index i = 0; i < eig.eigenvalues.size(); ++i) {
    const Complex lambda = eig.eigenvalues[i];
    if (std::abs(lambda) <= kKernelModulusTol) continue;  // annihilation kernel
    out.push_back(quasienergy_from_lambda(lambda));
  }
  return out;
}

LocalizationReport localization_report(const EigenSystem& eig,
                                       const WalkConfig& config) {
  const int n_states = static_cast<int>(eig.eigenvalues.size());
  if (n_states != config.dim())
    throw DomainError("localization_report: eigensystem does not match config");

  const int n_sites = config.num_sites();
  int max_dist = 0;
  std::vector<int> dist(n_sites);
  for (int x = config.x_min(); x <= config.x_max(); ++x) {
    const int d = x >= 0 ? x : -x - 1;
    dist[config.site_index(x)] = d;
    max_dist = std::max(max_dist, d);
  }

  LocalizationReport report;
  report.weight_within = Eigen::MatrixXd::Zero(n_states, max_dist + 1);
  report.ipr.resize(n_states);
  report.eigenvalue_modulus.resize(n_states);

  for (int s = 0; s < n_states; ++s) {
    Eigen::VectorXd by_dist = Eigen::VectorXd::Zero(max_dist + 1);
    double total = 0.0;
    double ipr_num = 0.0;
    for (int i = 0; i < n_sites; ++i) {
      const double w = std::norm(eig.right_vectors(2 * i, s)) +
                       std::norm(eig.right_vectors(2 * i + 1, s));
      by_dist[dist[i]] += w;
      total += w;
      ipr_num += w * w;
    }
    double cum = 0.0;
    for (int d = 0; d <= max_dist; ++d) {
      cum += by_dist[d];
      report.weight_within(s, d) = cum / total;
    }
    report.ipr[s] = ipr_num / (total * total);
    report.eigenvalue_modulus[s] = std::abs(eig.eigenvalues[s]);
  }
  return report;
}

double max_imag_quasienergy(const CoinParams& left, const CoinParams& right,
                            double gamma, SpectrumMethod method,
                            int num_points, int sites_per_side) {
  switch (method) {
    case SpectrumMethod::Gbz: {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& coin : {left, right}) {
        for (const QuasiEnergy& e : nonbloch_spectrum(coin, gamma, num_points))
          best = std::max(best, e.imag());
      }
      return best;
    }
    case SpectrumMethod::RealspaceObc: {
      const WalkConfig config(left, right, gamma, sites_per_side,
                              sites_per_side, Boundary::Open);
      double best = -std::numeric_limits<double>::infinity();
      for (const QuasiEnergy& e : realspace_spectrum(config))
        best = std::max(best, e.imag());
      return best;
    }
    case SpectrumMethod::Bloch:
      break;
  }
  throw DomainError("max_imag_quasienergy: method must be gbz or realspace-obc");
}

double spectral_loop_area(const std::vector<Complex>& closed_curve) {
  const std::size_t n = closed_curve.size();
  if (n < 3)
    throw DomainError("spectral_loop_area: need at least 3 points");
  double twice_area = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Complex& a = closed_curve[i];
    const Complex& b = closed_curve[(i + 1) % n];
    twice_area += a.real() * b.imag() - b.real() * a.imag();
  }
  return 0.5 * twice_area;
}

std::vector<std::vector<Complex>> trace_bands(
    const std::vector<std::pair<Complex, Complex>>& pairs) {
  if (pairs.empty()) return {};
  std::vector<Complex> band0{pairs.front().first};
  std::vector<Complex> band1{pairs.front().second};
  auto keeps_order = [](Complex a, Complex b, Complex prev0, Complex prev1) {
    return std::abs(a - prev0) + std::abs(b - prev1) <=
           std::abs(b - prev0) + std::abs(a - prev1);
  };
  for (std::size_t i = 1; i < pairs.size(); ++i) {
    auto [a, b] = pairs[i];
    if (!keeps_order(a, b, band0.back(), band1.back())) std::swap(a, b);
    band0.push_back(a);
    band1.push_back(b);
  }
  // Closing the sweep: if the continuation of band0 is band1's start, the two
  // bands exchange over one period and together form a single closed curve.
  if (keeps_order(pairs.front().first, pairs.front().second, band0.back(),
                  band1.back()))
    return {std::move(band0), std::move(band1)};
  band0.insert(band0.end(), band1.begin(), band1.end());
  return {std::move(band0)};
}

}  // namespace nhqw
