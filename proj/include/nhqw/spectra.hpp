#pragma once

#include <Eigen/Dense>
#include <string>
#include <utility>
#include <vector>

#include "nhqw/bandtheory.hpp"
#include "nhqw/model.hpp"

namespace nhqw {

/// Full non-symmetric eigendecomposition with matched left/right vectors.
/// Right vectors v_n satisfy U v_n = lambda_n v_n; left vectors chi_n satisfy
/// chi_n^dag U = lambda_n chi_n^dag. Both are stored as unit-norm columns, so
/// <chi_n|v_m> = c_n delta_nm with a per-pair constant c_n.
struct EigenSystem {
  Eigen::VectorXcd eigenvalues;
  Eigen::MatrixXcd right_vectors;
  Eigen::MatrixXcd left_vectors;
  Eigen::VectorXd residuals;        // ||U v - lambda v||_2 per pair
  std::vector<bool> near_defective; // eigenvalue gap <= 1e-8 to a neighbor
};

/// Dense complex eigendecomposition (Schur-based QR iteration) with one step
/// of inverse-iteration refinement for any pair whose residual exceeds the
/// contract. Left vectors come from the inverse of the right-vector matrix.
/// Throws SolverError on non-convergence.
EigenSystem eigendecompose(const Eigen::MatrixXcd& matrix);

inline constexpr int kRealspaceSizeCap = 512;  // sites

/// Quasienergies of the Balanced real-space step operator. Open-boundary
/// truncation annihilates amplitudes at the edges, which produces an exact
/// operator kernel; zero modes (|lambda| <= 1e-12) have no quasienergy and
/// are excluded. Throws ResourceError above `size_cap` sites.
std::vector<QuasiEnergy> realspace_spectrum(const WalkConfig& config,
                                            int size_cap = kRealspaceSizeCap);

/// Per-state localization data measured from the domain wall (sites -1 and 0
/// are at distance 0; distance = x for x >= 0 and -x-1 for x < 0).
struct LocalizationReport {
  /// weight_within(n, d): fraction of state n's squared norm within distance
  /// d of the wall; monotone nondecreasing in d, reaching 1.
  Eigen::MatrixXd weight_within;
  Eigen::VectorXd ipr;                 // inverse participation ratio per state
  Eigen::VectorXd eigenvalue_modulus;  // |lambda_n|; annihilation-kernel
                                       // modes show up as ~0

  int max_distance() const { return static_cast<int>(weight_within.cols()) - 1; }
};

LocalizationReport localization_report(const EigenSystem& eig,
                                       const WalkConfig& config);

enum class SpectrumMethod { Bloch, Gbz, RealspaceObc };

/// max Im E over the quasienergy spectrum. Method Gbz takes the maximum over
/// both bulks' non-Bloch spectra; RealspaceObc diagonalizes the domain-wall
/// operator with `sites_per_side` sites in each region. (Bloch is not a
/// valid method here; it is reserved for the spectrum tables.)
double max_imag_quasienergy(const CoinParams& left, const CoinParams& right,
                            double gamma, SpectrumMethod method,
                            int num_points = 256, int sites_per_side = 40);

/// Signed shoelace area of a closed curve in the complex plane (the segment
/// from the last point back to the first is implied). Throws DomainError for
/// fewer than 3 points.
double spectral_loop_area(const std::vector<Complex>& closed_curve);

/// Split per-parameter eigenvalue pairs into continuously traced closed
/// curves: two curves when the bands return to themselves after one sweep,
/// one merged curve when they exchange.
std::vector<std::vector<Complex>> trace_bands(
    const std::vector<std::pair<Complex, Complex>>& pairs);

/// max Im E sampled over a rectangular grid of right-region coin angles.
struct PhaseDiagram {
  Eigen::VectorXd theta1_pi;     // grid axes, units of pi
  Eigen::VectorXd theta2_pi;
  Eigen::MatrixXd max_im_energy; // (theta1 index, theta2 index)
  std::string method;            // "gbz" | "realspace-obc"
};

}  // namespace nhqw
