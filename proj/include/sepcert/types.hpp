#pragma once

#include <complex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace sepcert {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Shared numerical tolerances.
namespace tol {
inline constexpr double hermiticity = 1e-10;
inline constexpr double psd = 1e-10;
inline constexpr double trace = 1e-10;
inline constexpr double sort = 1e-12;
inline constexpr double ppt = 1e-10;
inline constexpr double unitary = 1e-10;
inline constexpr double bisection = 1e-9;
}  // namespace tol

/// Ordered factor dimensions (d_1,...,d_N) of a composite system, D = prod d_j.
class CompositeDims {
 public:
  static constexpr int default_cap = 64;

  explicit CompositeDims(std::vector<int> factors, int cap = default_cap)
      : factors_(std::move(factors)) {
    if (factors_.empty()) throw std::invalid_argument("CompositeDims: need at least one factor");
    long long d = 1;
    for (int f : factors_) {
      if (f < 2) throw std::invalid_argument("CompositeDims: each factor must be >= 2");
      d *= f;
      if (d > cap)
        throw std::invalid_argument("CompositeDims: total dimension exceeds cap " +
                                    std::to_string(cap));
    }
    total_ = static_cast<int>(d);
  }

  const std::vector<int>& factors() const { return factors_; }
  int factor(int j) const { return factors_.at(static_cast<std::size_t>(j)); }
  int count() const { return static_cast<int>(factors_.size()); }
  int total() const { return total_; }

  bool operator==(const CompositeDims& o) const { return factors_ == o.factors_; }

 private:
  std::vector<int> factors_;
  int total_;
};

/// A point of the spectral simplex L_d: nonincreasing, nonnegative, unit sum.
class SpectrumVector {
 public:
  explicit SpectrumVector(std::vector<double> values) : values_(std::move(values)) {
    if (values_.empty()) throw std::invalid_argument("SpectrumVector: empty");
    double sum = 0.0;
    for (std::size_t j = 0; j < values_.size(); ++j) {
      if (values_[j] < -tol::sort)
        throw std::invalid_argument("SpectrumVector: negative entry");
      if (j > 0 && values_[j] > values_[j - 1] + tol::sort)
        throw std::invalid_argument("SpectrumVector: entries not nonincreasing");
      sum += values_[j];
    }
    if (std::abs(sum - 1.0) > tol::trace)
      throw std::invalid_argument("SpectrumVector: entries do not sum to 1");
  }

  const std::vector<double>& values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }
  int size() const { return static_cast<int>(values_.size()); }

  /// Minimal eigenvalue s_-(rho).
  double min_value() const { return values_.back(); }

  /// Vertex e^{(k)} of L_d: first k entries 1/k, rest 0.
  static SpectrumVector vertex(int d, int k) {
    if (k < 1 || k > d) throw std::invalid_argument("SpectrumVector::vertex: k out of range");
    std::vector<double> v(static_cast<std::size_t>(d), 0.0);
    for (int j = 0; j < k; ++j) v[static_cast<std::size_t>(j)] = 1.0 / k;
    return SpectrumVector(std::move(v));
  }

 private:
  std::vector<double> values_;
};

}  // namespace sepcert
