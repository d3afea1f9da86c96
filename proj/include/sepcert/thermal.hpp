#pragma once

#include <optional>

#include "sepcert/composite.hpp"
#include "sepcert/detectors.hpp"

namespace sepcert {

/// A Hermitian energy operator on a composite space.
class Hamiltonian {
 public:
  Hamiltonian(Matrix m, CompositeDims dims) : mat_(std::move(m)), dims_(std::move(dims)) {
    if (mat_.rows() != dims_.total() || mat_.cols() != dims_.total())
      throw std::invalid_argument("Hamiltonian: dimension mismatch");
    const double dev = (mat_ - mat_.adjoint()).cwiseAbs().maxCoeff();
    if (dev > tol::hermiticity)
      throw std::invalid_argument("Hamiltonian: not Hermitian (deviation " +
                                  std::to_string(dev) + ")");
    mat_ = 0.5 * (mat_ + mat_.adjoint().eval());
  }

  const Matrix& entries() const { return mat_; }
  const CompositeDims& dims() const { return dims_; }
  int dim() const { return dims_.total(); }

 private:
  Matrix mat_;
  CompositeDims dims_;
};

/// Guaranteed-separable inverse-temperature window and entanglement bounds.
struct ThermalWindow {
  double beta_o = 0.0;                       // guaranteed-separable half-width
  bool beta_o_infinite = false;              // h is a multiple of the identity
  std::optional<double> beta_minus_toth;     // upper bound on beta_c^+
  std::optional<double> beta_plus_toth;      // lower bound on beta_c^-
  double eta_minus = 0.0;                    // min of <h> over product states
  double eta_plus = 0.0;                     // max of <h> over product states
  std::optional<double> exact_beta_c_plus;   // PPT transition, decisive dims only
};

/// Gibbs state exp(-beta h)/Z, computed via eigendecomposition with max-shift.
DensityMatrix gibbs(const Hamiltonian& h, double beta);

/// beta_o = -ln(1-L)/(s_+(h)-s_-(h)); infinite (flag) for scalar h.
/// gibbs(h, beta) is certified separable for |beta| <= beta_o.
double beta_o_bound(const Hamiltonian& h, bool* infinite = nullptr);

/// Statistics of the multi-start product-state energy optimization.
struct EtaResult {
  double eta_minus;
  double eta_plus;
  int restarts;
  int converged_to_min;  // restarts reaching eta_minus within 1e-9
  int converged_to_max;
};

/// Extremal product-state energies by alternating single-factor eigenvector
/// updates with random restarts.  eta_minus is an upper bound on the true
/// infimum (lower bound for eta_plus).
EtaResult eta_extrema(const Hamiltonian& h, int restarts, Rng& rng);

/// Expected energy U(beta) = tr(rho_beta h); strictly decreasing for non-scalar h.
double thermal_energy(const Hamiltonian& h, double beta);

/// Solves U(beta) = eta_- (resp. eta_+) for the Toth bounds beta_-/beta_+.
/// Applies only when the ground (top) spectral projector state is entangled;
/// absent otherwise.  Requires eta_minus/eta_plus already present in window.
ThermalWindow toth_bounds(const Hamiltonian& h, ThermalWindow window,
                          double tolerance = tol::bisection);

/// Grid scan (default 200 points) of beta -> is_ppt(rho_beta) on [0, beta_max],
/// then bisection on the first sign change.  Dims (2,2)/(2,3) only; PPT
/// monotonicity in beta is not guaranteed, so any re-entrance found on the grid
/// is reported through *reentrant.
std::optional<double> exact_beta_c_scan(const Hamiltonian& h, double beta_max, double tolerance,
                                        int grid_points = 200, bool* reentrant = nullptr);

/// Checks spec(rho_{beta_i}) majorizes spec(rho_{beta_{i+1}}) along an
/// increasing list of nonnegative betas.
bool uhlmann_wehrl_check(const Hamiltonian& h, const std::vector<double>& betas);

}  // namespace sepcert
