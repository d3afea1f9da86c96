#pragma once

#include <optional>

#include "sepcert/composite.hpp"
#include "sepcert/simplex.hpp"

namespace sepcert {

enum class ModulusMethod { ppt_bisection, convexity_bound, gap_bound, l_floor };

/// Certified interval for the separability modulus l(rho).
struct ModulusEstimate {
  double lower = 0.0;
  double upper = 1.0;
  bool exact = false;  // true when upper - lower <= bisection tolerance and PPT is decisive
  ModulusMethod method = ModulusMethod::ppt_bisection;

  double value() const { return 0.5 * (lower + upper); }
  /// Random robustness of entanglement, E = 1/l - 1.
  double random_robustness() const { return 1.0 / value() - 1.0; }
};

enum class LProvenance { exact_bipartite, vidal_tarrach, rungta };

/// Lower bound on L = inf l over all states; exact 2/(2+D) for N = 2.
struct LBound {
  double value;
  LProvenance provenance;
};

LBound l_constant(const CompositeDims& dims);

/// True when PPT is equivalent to separability for these dims: (2,2), (2,3), (3,2).
bool ppt_decisive(const CompositeDims& dims);

/// Bisection on t -> is_ppt(rho_t).  Exact for (2,2)/(2,3); for other bipartite
/// dims the returned value is an upper bound on l (PPT is necessary only) and
/// exact=false.
ModulusEstimate modulus_ppt(const DensityMatrix& rho, double tolerance = tol::bisection);

/// Both sides of the identity l(rho_t) = min{1, l(rho)/t}, for consistency checks.
struct MixtureModulusCheck {
  double direct;     // l(rho_t) by PPT bisection
  double predicted;  // min{1, l(rho)/t}
};
MixtureModulusCheck modulus_of_mixture(const DensityMatrix& rho, double t,
                                       double tolerance = tol::bisection);

/// Harmonic-mean lower bound (sum_j t_j / l_j)^{-1}; always >= min l_j.
double convexity_lower_bound(const std::vector<std::pair<double, double>>& weighted_moduli);

/// Gap-representation bound: l(rho) >= (sum_j mu_j / lhat_j + D lambda_D)^{-1},
/// where hat_moduli[j] is a lower bound on l(rhohat^{(j+1)}), j = 0..D-2.
double gap_lower_bound(const DensityMatrix& rho, const std::vector<double>& hat_moduli);

/// Checks 1/l(t rho1 + (1-t) rho2) <= t/l(rho1) + (1-t)/l(rho2) + slack,
/// with all moduli from PPT bisection (dims (2,2)/(2,3) only).
bool one_over_l_convexity_check(const DensityMatrix& rho1, const DensityMatrix& rho2, double t,
                                double slack = 1e-6);

}  // namespace sepcert
