#include "sepcert/composite.hpp"

#include <Eigen/Eigenvalues>
#include <numeric>

namespace sepcert {

namespace {

// Stride of factor j (1-based) in the product basis with the last factor fastest.
int factor_stride(const CompositeDims& dims, int j) {
  int s = 1;
  for (int k = j; k < dims.count(); ++k) s *= dims.factor(k);
  return s;
}

void check_factor_index(const CompositeDims& dims, int j, const char* who) {
  if (j < 1 || j > dims.count())
    throw std::invalid_argument(std::string(who) + ": subsystem index out of range");
}

}  // namespace

Vector PureProductState::assemble() const {
  Vector acc = Vector::Ones(1);
  for (const Vector& v : local_vectors) {
    Vector next(acc.size() * v.size());
    for (Eigen::Index a = 0; a < acc.size(); ++a)
      for (Eigen::Index b = 0; b < v.size(); ++b) next(a * v.size() + b) = acc(a) * v(b);
    acc = std::move(next);
  }
  return acc;
}

DensityMatrix PureProductState::state(const CompositeDims& dims) const {
  return DensityMatrix::pure(assemble(), dims);
}

DensityMatrix tensor(const std::vector<DensityMatrix>& states) {
  if (states.empty()) throw std::invalid_argument("tensor: empty list");
  std::vector<int> factors;
  Matrix acc = Matrix::Ones(1, 1);
  for (const DensityMatrix& s : states) {
    for (int f : s.dims().factors()) factors.push_back(f);
    const Matrix& b = s.entries();
    Matrix next(acc.rows() * b.rows(), acc.cols() * b.cols());
    for (Eigen::Index r = 0; r < acc.rows(); ++r)
      for (Eigen::Index c = 0; c < acc.cols(); ++c)
        next.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = acc(r, c) * b;
    acc = std::move(next);
  }
  CompositeDims dims(factors);  // throws on dimension overflow
  return DensityMatrix::validate(acc, dims);
}

DensityMatrix marginal(const DensityMatrix& rho, int j) {
  const CompositeDims& dims = rho.dims();
  check_factor_index(dims, j, "marginal");
  const int dj = dims.factor(j - 1);
  const int stride = factor_stride(dims, j);
  const int D = dims.total();
  const int outer = D / (dj * stride);  // joint dimension of factors before j

  Matrix out = Matrix::Zero(dj, dj);
  for (int a = 0; a < dj; ++a)
    for (int b = 0; b < dj; ++b) {
      Complex sum = 0.0;
      for (int o = 0; o < outer; ++o)
        for (int i = 0; i < stride; ++i)
          sum += rho.entries()((o * dj + a) * stride + i, (o * dj + b) * stride + i);
      out(a, b) = sum;
    }
  return DensityMatrix::validate(out, CompositeDims({dj}, dj));
}

Matrix partial_transpose(const DensityMatrix& rho, int j) {
  const CompositeDims& dims = rho.dims();
  check_factor_index(dims, j, "partial_transpose");
  const int dj = dims.factor(j - 1);
  const int stride = factor_stride(dims, j);
  const int D = dims.total();

  auto swap_factor = [&](int row, int col, int* nrow, int* ncol) {
    const int ra = (row / stride) % dj;
    const int ca = (col / stride) % dj;
    *nrow = row + (ca - ra) * stride;
    *ncol = col + (ra - ca) * stride;
  };

  Matrix out(D, D);
  for (int r = 0; r < D; ++r)
    for (int c = 0; c < D; ++c) {
      int nr, nc;
      swap_factor(r, c, &nr, &nc);
      out(nr, nc) = rho.entries()(r, c);
    }
  return out;
}

PPTReport is_ppt(const DensityMatrix& rho) {
  if (rho.dims().count() != 2)
    throw std::invalid_argument("is_ppt: defined for bipartite states only");
  Matrix pt = partial_transpose(rho, 2);
  Eigen::SelfAdjointEigenSolver<Matrix> es(pt, Eigen::EigenvaluesOnly);
  if (es.info() != Eigen::Success) throw std::runtime_error("is_ppt: eigensolver failed");
  const double min_ev = es.eigenvalues().minCoeff();
  return PPTReport{2, min_ev, min_ev >= -tol::ppt};
}

PPTReport is_ppt_bipartition(const DensityMatrix& rho, int k) {
  const CompositeDims& dims = rho.dims();
  if (k < 1 || k >= dims.count())
    throw std::invalid_argument("is_ppt_bipartition: cut out of range");
  int left = 1, right = 1;
  for (int j = 0; j < dims.count(); ++j) (j < k ? left : right) *= dims.factor(j);
  DensityMatrix merged =
      DensityMatrix::validate(rho.entries(), CompositeDims({left, right}, dims.total()));
  return is_ppt(merged);
}

PureProductState sample_pure_product(const CompositeDims& dims, Rng& rng) {
  PureProductState out;
  out.local_vectors.reserve(static_cast<std::size_t>(dims.count()));
  for (int f : dims.factors()) out.local_vectors.push_back(haar_vector(f, rng));
  return out;
}

}  // namespace sepcert
