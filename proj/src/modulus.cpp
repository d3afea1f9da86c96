#include "sepcert/modulus.hpp"

#include <cmath>

namespace sepcert {

LBound l_constant(const CompositeDims& dims) {
  const int n = dims.count();
  const int D = dims.total();
  if (n == 1) return {1.0, LProvenance::exact_bipartite};  // no composite structure
  if (n == 2) return {2.0 / (2.0 + D), LProvenance::exact_bipartite};
  const int dmax = *std::max_element(dims.factors().begin(), dims.factors().end());
  const double rungta = 1.0 / (1.0 + std::pow(static_cast<double>(dmax), 2 * n - 1));
  const double vidal_tarrach = 1.0 / std::pow(1.0 + D / 2.0, n - 1);
  if (rungta > vidal_tarrach) return {rungta, LProvenance::rungta};
  return {vidal_tarrach, LProvenance::vidal_tarrach};
}

bool ppt_decisive(const CompositeDims& dims) {
  if (dims.count() != 2) return false;
  const int a = dims.factor(0), b = dims.factor(1);
  return (a == 2 && (b == 2 || b == 3)) || (b == 2 && a == 3);
}

ModulusEstimate modulus_ppt(const DensityMatrix& rho, double tolerance) {
  if (tolerance <= 0.0) throw std::invalid_argument("modulus_ppt: tolerance must be positive");
  if (rho.dims().count() != 2)
    throw std::invalid_argument("modulus_ppt: bipartite states only");

  ModulusEstimate est;
  est.method = ModulusMethod::ppt_bisection;
  est.exact = ppt_decisive(rho.dims());

  if (is_ppt(rho).is_ppt) {
    // rho_1 = rho passes PPT; in the decisive dims this means rho is separable
    // and l = 1 (Lemma: rho_t separable for all t iff rho separable).
    est.lower = est.upper = 1.0;
    return est;
  }

  // Monotone predicate: if rho_s fails PPT then rho_t fails for t >= s.
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 60 && hi - lo > tolerance; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (is_ppt(mix_with_trace(rho, mid)).is_ppt)
      lo = mid;
    else
      hi = mid;
  }
  est.lower = lo;
  est.upper = hi;
  return est;
}

MixtureModulusCheck modulus_of_mixture(const DensityMatrix& rho, double t, double tolerance) {
  if (t <= 0.0 || t > 1.0) throw std::invalid_argument("modulus_of_mixture: t outside (0,1]");
  const double l_rho = modulus_ppt(rho, tolerance).value();
  const double direct = modulus_ppt(mix_with_trace(rho, t), tolerance).value();
  return {direct, std::min(1.0, l_rho / t)};
}

double convexity_lower_bound(const std::vector<std::pair<double, double>>& weighted_moduli) {
  if (weighted_moduli.empty())
    throw std::invalid_argument("convexity_lower_bound: empty component list");
  double acc = 0.0, wsum = 0.0;
  for (const auto& [w, l] : weighted_moduli) {
    if (w <= 0.0) throw std::invalid_argument("convexity_lower_bound: nonpositive weight");
    if (l <= 0.0) throw std::invalid_argument("convexity_lower_bound: zero modulus component");
    acc += w / l;
    wsum += w;
  }
  if (std::abs(wsum - 1.0) > tol::trace)
    throw std::invalid_argument("convexity_lower_bound: weights do not sum to 1");
  return 1.0 / acc;
}

double gap_lower_bound(const DensityMatrix& rho, const std::vector<double>& hat_moduli) {
  const int D = rho.dim();
  if (static_cast<int>(hat_moduli.size()) != D - 1)
    throw std::invalid_argument("gap_lower_bound: need D-1 hat moduli");
  auto rep = gap_representation(rho);
  double acc = rep.tail_weight;
  for (int j = 0; j < D - 1; ++j) {
    const double mu = rep.mu[static_cast<std::size_t>(j)];
    if (mu == 0.0) continue;
    const double lhat = hat_moduli[static_cast<std::size_t>(j)];
    if (lhat <= 0.0) throw std::invalid_argument("gap_lower_bound: nonpositive hat modulus");
    acc += mu / lhat;
  }
  return 1.0 / acc;
}

bool one_over_l_convexity_check(const DensityMatrix& rho1, const DensityMatrix& rho2, double t,
                                double slack) {
  if (!(rho1.dims() == rho2.dims()))
    throw std::invalid_argument("one_over_l_convexity_check: dims mismatch");
  if (t < 0.0 || t > 1.0)
    throw std::invalid_argument("one_over_l_convexity_check: t outside [0,1]");
  Matrix mixm = t * rho1.entries() + (1.0 - t) * rho2.entries();
  DensityMatrix mix = DensityMatrix::validate(mixm, rho1.dims());
  const double lhs = 1.0 / modulus_ppt(mix).value();
  const double rhs =
      t / modulus_ppt(rho1).value() + (1.0 - t) / modulus_ppt(rho2).value();
  return lhs <= rhs + slack;
}

}  // namespace sepcert
