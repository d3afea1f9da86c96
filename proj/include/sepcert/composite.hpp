#pragma once

#include "sepcert/random.hpp"
#include "sepcert/state.hpp"

namespace sepcert {

/// A pure product vector psi_1 x ... x psi_N, one unit vector per factor.
struct PureProductState {
  std::vector<Vector> local_vectors;

  /// The full product vector in the composite basis (last factor fastest).
  Vector assemble() const;
  /// The induced density matrix.
  DensityMatrix state(const CompositeDims& dims) const;
};

/// Verdict of the positive-partial-transpose test.
struct PPTReport {
  int subsystem_index;        // factor that was transposed (1-based)
  double min_pt_eigenvalue;   // minimal eigenvalue of the partial transpose
  bool is_ppt;                // min_pt_eigenvalue >= -ppt tolerance
};

/// Kronecker product in factor order; dims concatenate.
DensityMatrix tensor(const std::vector<DensityMatrix>& states);

/// Partial trace over all factors except j (1-based).
DensityMatrix marginal(const DensityMatrix& rho, int j);

/// Transposition of factor j's indices in the computational product basis
/// (row-major, last factor fastest).  Hermitian, trace 1, possibly non-PSD.
Matrix partial_transpose(const DensityMatrix& rho, int j);

/// PPT test for bipartite states; the transpose is taken on factor 2.
/// Transposing factor 1 instead gives the globally transposed matrix with the
/// same spectrum, so the choice does not affect the verdict.
PPTReport is_ppt(const DensityMatrix& rho);

/// Necessary-condition helper for N > 2: merges factors 1..k against k+1..N
/// (contiguous merge, so the basis ordering is unchanged) and runs the
/// bipartite PPT test on the merged system.
PPTReport is_ppt_bipartition(const DensityMatrix& rho, int k);

/// Each factor sampled Haar-uniform on its unit sphere.
PureProductState sample_pure_product(const CompositeDims& dims, Rng& rng);

}  // namespace sepcert
