#include "sepcert/state.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>

namespace sepcert {

DensityMatrix DensityMatrix::validate(const Matrix& m, const CompositeDims& dims) {
  const int d = dims.total();
  if (m.rows() != d || m.cols() != d)
    throw std::invalid_argument("DensityMatrix: matrix is " + std::to_string(m.rows()) + "x" +
                                std::to_string(m.cols()) + ", expected " + std::to_string(d) +
                                "x" + std::to_string(d));
  const double herm_dev = (m - m.adjoint()).cwiseAbs().maxCoeff();
  if (herm_dev > tol::hermiticity)
    throw std::invalid_argument("DensityMatrix: Hermiticity violation " +
                                std::to_string(herm_dev));
  Matrix sym = 0.5 * (m + m.adjoint().eval());
  const double tr_dev = std::abs(sym.trace().real() - 1.0) + std::abs(sym.trace().imag());
  if (tr_dev > tol::trace)
    throw std::invalid_argument("DensityMatrix: trace deviates from 1 by " +
                                std::to_string(tr_dev));
  Eigen::SelfAdjointEigenSolver<Matrix> es(sym, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("DensityMatrix: eigensolver failed");
  const double min_ev = es.eigenvalues().minCoeff();
  if (min_ev < -tol::psd)
    throw std::invalid_argument("DensityMatrix: negative eigenvalue " + std::to_string(min_ev));
  return DensityMatrix(std::move(sym), dims);
}

DensityMatrix DensityMatrix::maximally_mixed(const CompositeDims& dims) {
  const int d = dims.total();
  return DensityMatrix(Matrix::Identity(d, d) / static_cast<double>(d), dims);
}

DensityMatrix DensityMatrix::pure(const Vector& psi, const CompositeDims& dims) {
  if (psi.size() != dims.total())
    throw std::invalid_argument("DensityMatrix::pure: vector length mismatch");
  const double n = psi.norm();
  if (std::abs(n - 1.0) > tol::trace)
    throw std::invalid_argument("DensityMatrix::pure: vector not normalized");
  return DensityMatrix(psi * psi.adjoint(), dims);
}

EigenSystem eigensystem(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.entries());
  if (es.info() != Eigen::Success) throw std::runtime_error("eigensystem: solver failed");
  const int d = rho.dim();
  // Eigen returns ascending order; reverse to nonincreasing.
  EigenSystem out;
  out.eigenvalues.resize(static_cast<std::size_t>(d));
  out.basis.resize(d, d);
  for (int j = 0; j < d; ++j) {
    out.eigenvalues[static_cast<std::size_t>(j)] = es.eigenvalues()(d - 1 - j);
    out.basis.col(j) = es.eigenvectors().col(d - 1 - j);
  }
  return out;
}

SpectrumVector spectrum(const DensityMatrix& rho) {
  auto es = eigensystem(rho);
  double drift = 0.0;
  for (double& v : es.eigenvalues) {
    if (v < 0.0) {
      drift += -v;
      v = 0.0;
    }
  }
  if (drift > tol::psd) throw std::runtime_error("spectrum: negative eigenvalues beyond tolerance");
  double sum = std::accumulate(es.eigenvalues.begin(), es.eigenvalues.end(), 0.0);
  if (std::abs(sum - 1.0) > tol::trace)
    throw std::runtime_error("spectrum: eigenvalue sum drifted from 1");
  for (double& v : es.eigenvalues) v /= sum;
  return SpectrumVector(std::move(es.eigenvalues));
}

double min_eigenvalue(const DensityMatrix& rho) { return spectrum(rho).min_value(); }

DensityMatrix mix_with_trace(const DensityMatrix& rho, double t) {
  if (t < 0.0 || t > 1.0) throw std::invalid_argument("mix_with_trace: t outside [0,1]");
  const int d = rho.dim();
  Matrix m = t * rho.entries() + ((1.0 - t) / d) * Matrix::Identity(d, d);
  return DensityMatrix::validate(m, rho.dims());
}

DensityMatrix unitary_conjugate(const DensityMatrix& rho, const Matrix& u) {
  const int d = rho.dim();
  if (u.rows() != d || u.cols() != d)
    throw std::invalid_argument("unitary_conjugate: dimension mismatch");
  const double dev = (u * u.adjoint() - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
  if (dev > tol::unitary)
    throw std::invalid_argument("unitary_conjugate: matrix is not unitary (deviation " +
                                std::to_string(dev) + ")");
  return DensityMatrix::validate(u * rho.entries() * u.adjoint(), rho.dims());
}

DensityMatrix cyclic_average(const DensityMatrix& rho) {
  const int d = rho.dim();
  auto es = eigensystem(rho);
  Matrix acc = Matrix::Zero(d, d);
  for (int shift = 0; shift < d; ++shift) {
    Matrix pi = Matrix::Zero(d, d);
    for (int j = 0; j < d; ++j) {
      const double lam = es.eigenvalues[static_cast<std::size_t>((j + shift) % d)];
      pi += lam * (es.basis.col(j) * es.basis.col(j).adjoint());
    }
    acc += pi / static_cast<double>(d);
  }
  return DensityMatrix::validate(acc, rho.dims());
}

double purity(const DensityMatrix& rho) {
  return (rho.entries() * rho.entries()).trace().real();
}

}  // namespace sepcert
