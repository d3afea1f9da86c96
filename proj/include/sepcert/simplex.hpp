#pragma once

#include "sepcert/state.hpp"
#include "sepcert/types.hpp"

namespace sepcert {

/// Barycentric coordinates of a spectrum with respect to the simplex vertices e^{(j)}.
class BarycentricCoords {
 public:
  explicit BarycentricCoords(std::vector<double> x) : x_(std::move(x)) {
    double sum = 0.0;
    for (double v : x_) {
      if (v < -tol::sort) throw std::invalid_argument("BarycentricCoords: negative weight");
      sum += v;
    }
    if (std::abs(sum - 1.0) > tol::trace)
      throw std::invalid_argument("BarycentricCoords: weights do not sum to 1");
  }
  const std::vector<double>& values() const { return x_; }
  int size() const { return static_cast<int>(x_.size()); }

 private:
  std::vector<double> x_;
};

/// x_j = j(lambda_j - lambda_{j+1}) for j < d, x_d = d lambda_d.
BarycentricCoords to_barycentric(const SpectrumVector& lambda);

/// lambda_j = sum_{k>=j} x_k / k.
SpectrumVector from_barycentric(const BarycentricCoords& x);

/// Sigma_k(lambda) = lambda_1 + ... + lambda_k, 1 <= k <= d.
double partial_sum(const SpectrumVector& lambda, int k);

/// lambda majorizes mu in the "more mixed" sense: Sigma_k(lambda) <= Sigma_k(mu) for all k.
bool majorizes(const SpectrumVector& lambda, const SpectrumVector& mu);

/// Decomposition rho = sum_j mu_j rhohat^{(j)} + D lambda_D tau, with
/// mu_j = j(lambda_j - lambda_{j+1}) and rhohat^{(j)} the normalized rank-j
/// spectral averages for one chosen eigenbasis.  rhohat^{(D)} = tau.
struct GapRepresentation {
  std::vector<double> mu;                 // D-1 coefficients
  double tail_weight;                     // D * lambda_D
  std::vector<DensityMatrix> hat_states;  // D states rhohat^{(1)}..rhohat^{(D)}
};

GapRepresentation gap_representation(const DensityMatrix& rho);

}  // namespace sepcert
