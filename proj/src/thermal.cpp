#include "sepcert/thermal.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <limits>

namespace sepcert {

namespace {

struct HamSpec {
  Eigen::VectorXd energies;  // ascending
  Matrix basis;
};

HamSpec decompose(const Hamiltonian& h) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(h.entries());
  if (es.info() != Eigen::Success) throw std::runtime_error("Hamiltonian eigensolver failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

bool is_scalar(const Hamiltonian& h) {
  auto hs = decompose(h);
  return hs.energies.maxCoeff() - hs.energies.minCoeff() <= 1e-12;
}

}  // namespace

DensityMatrix gibbs(const Hamiltonian& h, double beta) {
  const int D = h.dim();
  if (beta == 0.0) return DensityMatrix::maximally_mixed(h.dims());
  auto hs = decompose(h);
  // Shift so all exponents are <= 0.
  double m = -std::numeric_limits<double>::infinity();
  for (int j = 0; j < D; ++j) m = std::max(m, -beta * hs.energies(j));
  Eigen::VectorXd w(D);
  double z = 0.0;
  for (int j = 0; j < D; ++j) {
    w(j) = std::exp(-beta * hs.energies(j) - m);
    z += w(j);
  }
  Matrix rho = Matrix::Zero(D, D);
  for (int j = 0; j < D; ++j)
    rho += (w(j) / z) * (hs.basis.col(j) * hs.basis.col(j).adjoint());
  return DensityMatrix::validate(rho, h.dims());
}

double beta_o_bound(const Hamiltonian& h, bool* infinite) {
  if (infinite) *infinite = false;
  auto hs = decompose(h);
  const double gap = hs.energies.maxCoeff() - hs.energies.minCoeff();
  if (gap <= 1e-12) {
    if (infinite) *infinite = true;
    return std::numeric_limits<double>::infinity();
  }
  const double L = l_constant(h.dims()).value;
  return -std::log(1.0 - L) / gap;
}

namespace {

// <psi_1 x ... x psi_N | h | phi ...> with factor f replaced by basis vectors:
// the effective one-factor operator seen when all other factors are frozen.
Matrix effective_operator(const Hamiltonian& h, const std::vector<Vector>& vecs, int f) {
  const CompositeDims& dims = h.dims();
  const int df = dims.factor(f);
  std::vector<Vector> work = vecs;
  std::vector<Vector> basis_cols(static_cast<std::size_t>(df));
  for (int a = 0; a < df; ++a) {
    work[static_cast<std::size_t>(f)] = Vector::Unit(df, a);
    PureProductState p{work};
    basis_cols[static_cast<std::size_t>(a)] = p.assemble();
  }
  Matrix eff(df, df);
  for (int a = 0; a < df; ++a)
    for (int b = 0; b < df; ++b)
      eff(a, b) = basis_cols[static_cast<std::size_t>(a)].dot(
          h.entries() * basis_cols[static_cast<std::size_t>(b)]);
  return eff;
}

// One multi-start run; minimize = true seeks eta_-, false seeks eta_+.
double optimize_product_energy(const Hamiltonian& h, Rng& rng, bool minimize) {
  const CompositeDims& dims = h.dims();
  const int n = dims.count();
  std::vector<Vector> vecs;
  vecs.reserve(static_cast<std::size_t>(n));
  for (int f = 0; f < n; ++f) vecs.push_back(haar_vector(dims.factor(f), rng));

  auto energy = [&]() {
    PureProductState p{vecs};
    Vector full = p.assemble();
    return full.dot(h.entries() * full).real();
  };

  double prev = energy();
  for (int sweep = 0; sweep < 500; ++sweep) {
    for (int f = 0; f < n; ++f) {
      Matrix eff = effective_operator(h, vecs, f);
      Eigen::SelfAdjointEigenSolver<Matrix> es(eff);
      const int idx = minimize ? 0 : dims.factor(f) - 1;
      vecs[static_cast<std::size_t>(f)] = es.eigenvectors().col(idx);
    }
    const double cur = energy();
    if (std::abs(prev - cur) < 1e-12) return cur;
    prev = cur;
  }
  return prev;
}

}  // namespace

EtaResult eta_extrema(const Hamiltonian& h, int restarts, Rng& rng) {
  if (restarts < 1) throw std::invalid_argument("eta_extrema: restarts >= 1 required");
  EtaResult out{std::numeric_limits<double>::infinity(),
                -std::numeric_limits<double>::infinity(), restarts, 0, 0};
  std::vector<double> mins, maxs;
  for (int r = 0; r < restarts; ++r) {
    mins.push_back(optimize_product_energy(h, rng, true));
    maxs.push_back(optimize_product_energy(h, rng, false));
    out.eta_minus = std::min(out.eta_minus, mins.back());
    out.eta_plus = std::max(out.eta_plus, maxs.back());
  }
  for (double v : mins)
    if (v <= out.eta_minus + 1e-9) ++out.converged_to_min;
  for (double v : maxs)
    if (v >= out.eta_plus - 1e-9) ++out.converged_to_max;
  return out;
}

double thermal_energy(const Hamiltonian& h, double beta) {
  return (gibbs(h, beta).entries() * h.entries()).trace().real();
}

namespace {

// State on the extremal eigenspace of h: P/m for the min (bottom=true) or max
// eigenvalue; this is the beta -> +/-inf limit of the Gibbs family.
DensityMatrix extremal_projector_state(const Hamiltonian& h, bool bottom) {
  auto hs = decompose(h);
  const int D = h.dim();
  const double target = bottom ? hs.energies.minCoeff() : hs.energies.maxCoeff();
  Matrix p = Matrix::Zero(D, D);
  int m = 0;
  for (int j = 0; j < D; ++j) {
    if (std::abs(hs.energies(j) - target) <= 1e-9) {
      p += hs.basis.col(j) * hs.basis.col(j).adjoint();
      ++m;
    }
  }
  return DensityMatrix::validate(p / m, h.dims());
}

// Solve U(beta) = target on the given sign half-line; U is strictly decreasing.
std::optional<double> solve_energy(const Hamiltonian& h, double target, bool positive,
                                   double tolerance) {
  double lo = 0.0, hi = 1.0;
  const double sign = positive ? 1.0 : -1.0;
  auto u = [&](double b) { return thermal_energy(h, sign * b); };
  // For positive beta, U decreases from tau(h); we need u(hi) past the target.
  auto past = [&](double v) { return positive ? v < target : v > target; };
  if (past(u(0.0))) return std::nullopt;
  int expand = 0;
  while (!past(u(hi))) {
    hi *= 2.0;
    if (++expand > 60) return std::nullopt;  // no finite root
  }
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    if (past(u(mid)))
      hi = mid;
    else
      lo = mid;
  }
  return sign * 0.5 * (lo + hi);
}

}  // namespace

ThermalWindow toth_bounds(const Hamiltonian& h, ThermalWindow window, double tolerance) {
  if (is_scalar(h)) return window;
  if (h.dims().count() != 2)
    throw std::invalid_argument("toth_bounds: entanglement precheck needs a bipartite system");
  auto hs = decompose(h);
  const double s_min = hs.energies.minCoeff();
  const double s_max = hs.energies.maxCoeff();

  if (!is_ppt(extremal_projector_state(h, true)).is_ppt && window.eta_minus > s_min) {
    window.beta_minus_toth = solve_energy(h, window.eta_minus, true, tolerance);
  }
  if (!is_ppt(extremal_projector_state(h, false)).is_ppt && window.eta_plus < s_max) {
    window.beta_plus_toth = solve_energy(h, window.eta_plus, false, tolerance);
  }
  return window;
}

std::optional<double> exact_beta_c_scan(const Hamiltonian& h, double beta_max, double tolerance,
                                        int grid_points, bool* reentrant) {
  if (reentrant) *reentrant = false;
  if (!ppt_decisive(h.dims()))
    throw std::invalid_argument("exact_beta_c_scan: dims (2,2) or (2,3) required");
  if (beta_max <= 0.0 || tolerance <= 0.0 || grid_points < 2)
    throw std::invalid_argument("exact_beta_c_scan: bad parameters");

  auto ppt_at = [&](double b) { return is_ppt(gibbs(h, b)).is_ppt; };

  std::optional<double> transition;
  bool prev = ppt_at(0.0);  // tau is PPT
  double prev_b = 0.0;
  bool failed_before = false;
  for (int i = 1; i <= grid_points; ++i) {
    const double b = beta_max * i / grid_points;
    const bool cur = ppt_at(b);
    if (prev && !cur && !transition) {
      double lo = prev_b, hi = b;
      while (hi - lo > tolerance) {
        const double mid = 0.5 * (lo + hi);
        if (ppt_at(mid))
          lo = mid;
        else
          hi = mid;
      }
      transition = 0.5 * (lo + hi);
      failed_before = true;
    } else if (!cur) {
      failed_before = true;
    } else if (cur && failed_before && reentrant) {
      *reentrant = true;  // PPT regained above a failure region
    }
    prev = cur;
    prev_b = b;
  }
  return transition;
}

bool uhlmann_wehrl_check(const Hamiltonian& h, const std::vector<double>& betas) {
  if (betas.size() < 2) return true;
  for (std::size_t i = 0; i + 1 < betas.size(); ++i) {
    if (betas[i] < 0.0 || betas[i + 1] <= betas[i])
      throw std::invalid_argument("uhlmann_wehrl_check: betas must be sorted and >= 0");
    if (!majorizes(spectrum(gibbs(h, betas[i])), spectrum(gibbs(h, betas[i + 1]))))
      return false;
  }
  return true;
}

}  // namespace sepcert
