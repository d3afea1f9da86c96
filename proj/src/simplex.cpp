#include "sepcert/simplex.hpp"

namespace sepcert {

BarycentricCoords to_barycentric(const SpectrumVector& lambda) {
  const int d = lambda.size();
  std::vector<double> x(static_cast<std::size_t>(d));
  for (int j = 0; j < d - 1; ++j) {
    double v = (j + 1) * (lambda[static_cast<std::size_t>(j)] -
                          lambda[static_cast<std::size_t>(j + 1)]);
    x[static_cast<std::size_t>(j)] = std::max(v, 0.0);
  }
  x[static_cast<std::size_t>(d - 1)] = d * lambda[static_cast<std::size_t>(d - 1)];
  return BarycentricCoords(std::move(x));
}

SpectrumVector from_barycentric(const BarycentricCoords& x) {
  const int d = x.size();
  std::vector<double> lambda(static_cast<std::size_t>(d));
  double tail = 0.0;
  for (int j = d - 1; j >= 0; --j) {
    tail += x.values()[static_cast<std::size_t>(j)] / (j + 1);
    lambda[static_cast<std::size_t>(j)] = tail;
  }
  return SpectrumVector(std::move(lambda));
}

double partial_sum(const SpectrumVector& lambda, int k) {
  if (k < 1 || k > lambda.size()) throw std::invalid_argument("partial_sum: k out of range");
  double s = 0.0;
  for (int j = 0; j < k; ++j) s += lambda[static_cast<std::size_t>(j)];
  return s;
}

bool majorizes(const SpectrumVector& lambda, const SpectrumVector& mu) {
  if (lambda.size() != mu.size()) throw std::invalid_argument("majorizes: length mismatch");
  double sl = 0.0, sm = 0.0;
  for (int k = 0; k < lambda.size(); ++k) {
    sl += lambda[static_cast<std::size_t>(k)];
    sm += mu[static_cast<std::size_t>(k)];
    if (sl > sm + tol::sort) return false;
  }
  return true;
}

GapRepresentation gap_representation(const DensityMatrix& rho) {
  const int d = rho.dim();
  auto es = eigensystem(rho);
  std::vector<double> lam = es.eigenvalues;
  for (double& v : lam) v = std::max(v, 0.0);

  GapRepresentation rep;
  rep.mu.resize(static_cast<std::size_t>(d - 1));
  for (int j = 0; j < d - 1; ++j)
    rep.mu[static_cast<std::size_t>(j)] =
        std::max((j + 1) * (lam[static_cast<std::size_t>(j)] -
                            lam[static_cast<std::size_t>(j + 1)]),
                 0.0);
  rep.tail_weight = d * lam[static_cast<std::size_t>(d - 1)];

  // rhohat^{(j)} = (1/j) sum_{k<=j} |psi_k><psi_k|, built cumulatively.
  Matrix acc = Matrix::Zero(d, d);
  rep.hat_states.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    acc += es.basis.col(j) * es.basis.col(j).adjoint();
    rep.hat_states.push_back(DensityMatrix::validate(acc / (j + 1.0), rho.dims()));
  }
  return rep;
}

}  // namespace sepcert
