#include "sepcert/random.hpp"

#include <Eigen/QR>
#include <algorithm>
#include <cmath>

namespace sepcert {

Vector haar_vector(int d, Rng& rng) {
  Vector v(d);
  for (int j = 0; j < d; ++j) v(j) = rng.complex_gaussian();
  v.normalize();
  return v;
}

Matrix haar_unitary(int d, Rng& rng) {
  Matrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = rng.complex_gaussian();
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the phases so the distribution is Haar, not merely orthonormal.
  for (int c = 0; c < d; ++c) {
    Complex diag = r(c, c);
    double a = std::abs(diag);
    q.col(c) *= (a > 0.0) ? diag / a : Complex(1.0, 0.0);
  }
  return q;
}

DensityMatrix random_density(const CompositeDims& dims, Rng& rng) {
  const int d = dims.total();
  Matrix g(d, d);
  for (int r = 0; r < d; ++r)
    for (int c = 0; c < d; ++c) g(r, c) = rng.complex_gaussian();
  Matrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::validate(m, dims);
}

DensityMatrix random_pure(const CompositeDims& dims, Rng& rng) {
  return DensityMatrix::pure(haar_vector(dims.total(), rng), dims);
}

SpectrumVector random_spectrum(int d, Rng& rng) {
  // Dirichlet(1,...,1) via normalized exponentials, then sorted nonincreasing.
  std::vector<double> v(static_cast<std::size_t>(d));
  double sum = 0.0;
  for (double& x : v) {
    x = -std::log(std::max(rng.uniform(), 1e-300));
    sum += x;
  }
  for (double& x : v) x /= sum;
  std::sort(v.begin(), v.end(), std::greater<double>());
  return SpectrumVector(std::move(v));
}

}  // namespace sepcert
