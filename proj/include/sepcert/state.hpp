#pragma once

#include "sepcert/types.hpp"

namespace sepcert {

/// Hermitian, positive semidefinite, unit-trace matrix on a composite Hilbert space.
class DensityMatrix {
 public:
  /// Validates and constructs. The matrix is symmetrized (A+A^†)/2 before checks;
  /// eigenvalues in [-psd tol, 0) are treated as round-off.
  static DensityMatrix validate(const Matrix& m, const CompositeDims& dims);

  const CompositeDims& dims() const { return dims_; }
  const Matrix& entries() const { return mat_; }
  int dim() const { return dims_.total(); }

  /// Maximally mixed state tau = 1/D.
  static DensityMatrix maximally_mixed(const CompositeDims& dims);

  /// Pure state |psi><psi| from a unit vector.
  static DensityMatrix pure(const Vector& psi, const CompositeDims& dims);

 private:
  DensityMatrix(Matrix m, CompositeDims dims) : mat_(std::move(m)), dims_(std::move(dims)) {}
  Matrix mat_;
  CompositeDims dims_;
};

/// Eigendecomposition of a density matrix, sorted nonincreasingly.
/// Column j of `basis` is the eigenvector of `spectrum[j]`.
struct EigenSystem {
  std::vector<double> eigenvalues;  // nonincreasing
  Matrix basis;                     // unitary, columns are eigenvectors
};

EigenSystem eigensystem(const DensityMatrix& rho);

/// spec(rho): eigenvalues with multiplicity, sorted nonincreasingly.
/// Negative round-off is clamped to 0 and the vector renormalized.
SpectrumVector spectrum(const DensityMatrix& rho);

/// s_-(rho), the minimal eigenvalue; <= 1/D with equality iff rho = tau.
double min_eigenvalue(const DensityMatrix& rho);

/// rho_t = t.rho + (1-t).tau.  Satisfies (rho_t)_s = rho_{ts}.
DensityMatrix mix_with_trace(const DensityMatrix& rho, double t);

/// u rho u^† for unitary u; spectrum preserved.
DensityMatrix unitary_conjugate(const DensityMatrix& rho, const Matrix& u);

/// Averages the D cyclic reassignments of eigenvalues to eigenvectors; equals tau.
DensityMatrix cyclic_average(const DensityMatrix& rho);

/// Purity tr(rho^2), computed from the matrix.
double purity(const DensityMatrix& rho);

}  // namespace sepcert
