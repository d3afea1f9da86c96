#pragma once

#include <cstdint>
#include <random>

#include "sepcert/state.hpp"
#include "sepcert/types.hpp"

namespace sepcert {

/// Caller-owned RNG stream; never global.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() { return unit_(engine_); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit_(engine_); }
  double gaussian() { return normal_(engine_); }
  Complex complex_gaussian() { return {normal_(engine_), normal_(engine_)}; }

  /// A fresh stream derived from this one, for concurrent tasks.
  Rng split() { return Rng(engine_()); }

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::uniform_real_distribution<double> unit_{0.0, 1.0};
  std::normal_distribution<double> normal_{0.0, 1.0};
};

/// Haar-uniform unit vector in C^d.
Vector haar_vector(int d, Rng& rng);

/// Haar-distributed unitary (QR of a Ginibre matrix with phase fix).
Matrix haar_unitary(int d, Rng& rng);

/// Hilbert-Schmidt random density matrix, G G^† / tr(G G^†).
DensityMatrix random_density(const CompositeDims& dims, Rng& rng);

/// Haar-random pure state on the composite space.
DensityMatrix random_pure(const CompositeDims& dims, Rng& rng);

/// Sorted uniform simplex point: Dirichlet(1,...,1) sample of L_d.
SpectrumVector random_spectrum(int d, Rng& rng);

}  // namespace sepcert
