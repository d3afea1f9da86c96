#include "sepcert/detectors.hpp"

#include <algorithm>
#include <cmath>

namespace sepcert {

namespace {

bool is_dims(const CompositeDims& d, int a, int b) {
  return d.count() == 2 && d.factor(0) == a && d.factor(1) == b;
}

double golden_section_min(const std::function<double(double)>& f, double lo, double hi,
                          int iters = 80) {
  const double phi = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = lo, b = hi;
  double x1 = b - phi * (b - a), x2 = a + phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < iters && b - a > 1e-12; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + phi * (b - a);
      f2 = f(x2);
    }
  }
  return std::min(f(a), std::min(f1, std::min(f2, f(b))));
}

}  // namespace

std::string ConvexFunctionSpec::name() const {
  switch (kind) {
    case ConvexFunctionKind::purity:
      return "purity";
    case ConvexFunctionKind::von_neumann_entropy_negated:
      return "von-neumann-entropy-negated";
    case ConvexFunctionKind::partial_sum_k:
      return "partial-sum-" + std::to_string(k.value());
  }
  return "?";
}

double evaluate_on_spectrum(const ConvexFunctionSpec& f, const std::vector<double>& lambda) {
  switch (f.kind) {
    case ConvexFunctionKind::purity: {
      double s = 0.0;
      for (double v : lambda) s += v * v;
      return s;
    }
    case ConvexFunctionKind::von_neumann_entropy_negated: {
      double s = 0.0;
      for (double v : lambda)
        if (v > 0.0) s += v * std::log(v);
      return s;
    }
    case ConvexFunctionKind::partial_sum_k: {
      const int k = f.k.value();
      if (k < 1 || k >= static_cast<int>(lambda.size()) + 1)
        throw std::invalid_argument("evaluate: partial-sum k out of range");
      double s = 0.0;
      for (int j = 0; j < k; ++j) s += lambda[static_cast<std::size_t>(j)];
      return s;
    }
  }
  throw std::logic_error("evaluate: unknown function kind");
}

double evaluate(const ConvexFunctionSpec& f, const DensityMatrix& rho) {
  return evaluate_on_spectrum(f, spectrum(rho).values());
}

DetectorReport theorem1_detector(const DensityMatrix& rho) {
  const int D = rho.dim();
  const LBound L = l_constant(rho.dims());
  DetectorReport r;
  r.detector_name = "theorem1";
  r.value = min_eigenvalue(rho);
  r.threshold = (1.0 - L.value) / D;
  r.threshold_provenance = (L.provenance == LProvenance::exact_bipartite)
                               ? ThresholdProvenance::exact
                               : ThresholdProvenance::lower_bound;
  r.verdict = (r.value >= r.threshold - tol::sort) ? Verdict::certified_separable : Verdict::inconclusive;
  return r;
}

DetectorReport improved_spectral_detector(const DensityMatrix& rho) {
  const int D = rho.dim();
  const LBound L = l_constant(rho.dims());
  const double c = (1.0 - L.value) * (D - 1) / D;
  const auto lam = spectrum(rho).values();
  DetectorReport r;
  r.detector_name = "improved-spectral";
  r.value = (1.0 - c) * lam[static_cast<std::size_t>(D - 1)] +
            c * lam[static_cast<std::size_t>(D - 2)];
  r.threshold = (1.0 - L.value) / D;
  const bool valid = ppt_decisive(rho.dims());
  r.threshold_provenance =
      valid ? ThresholdProvenance::exact : ThresholdProvenance::lower_bound;
  r.conditional = !valid;
  const bool met = r.value >= r.threshold - tol::sort;
  r.verdict = (met && valid) ? Verdict::certified_separable : Verdict::inconclusive;
  return r;
}

DetectorReport purity_detector(const DensityMatrix& rho) {
  const int D = rho.dim();
  const LBound L = l_constant(rho.dims());
  DetectorReport r;
  r.detector_name = "purity";
  r.value = evaluate(ConvexFunctionSpec::purity(), rho);
  if (is_dims(rho.dims(), 2, 2) || is_dims(rho.dims(), 3, 2)) {
    r.threshold = 1.0 / 3.0;
    r.threshold_provenance = ThresholdProvenance::exact;
  } else if (is_dims(rho.dims(), 2, 3)) {
    r.threshold = 1.0 / 5.0;
    r.threshold_provenance = ThresholdProvenance::lower_bound;
    r.bracket = std::make_pair(1.0 / 5.0, 7.0 / 32.0);
  } else {
    // General lower end of the critical bracket; certification stays sound.
    r.threshold = (D - 1.0 + L.value * L.value) / (D * (D - 1.0));
    r.threshold_provenance = ThresholdProvenance::lower_bound;
    r.bracket = std::make_pair(r.threshold, (L.value * L.value * (D - 1.0) + 1.0) / D);
  }
  r.verdict = (r.value <= r.threshold + tol::sort) ? Verdict::certified_separable : Verdict::inconclusive;
  return r;
}

DetectorReport partial_sum_detector(const DensityMatrix& rho, int k) {
  const int D = rho.dim();
  if (k < 1 || k > D - 1) throw std::invalid_argument("partial_sum_detector: k out of range");
  const int n = rho.dims().count();
  const LBound L = l_constant(rho.dims());
  DetectorReport r;
  r.detector_name = "partial-sum-" + std::to_string(k);
  r.value = partial_sum(spectrum(rho), k);

  const bool qubit_qubit = is_dims(rho.dims(), 2, 2) || is_dims(rho.dims(), 3, 2);
  const bool qubit_qutrit = is_dims(rho.dims(), 2, 3);
  if (n == 2 && k == D - 1) {
    r.threshold = (D + 1.0) / (D + 2.0);
    r.threshold_provenance = ThresholdProvenance::exact;
  } else if (qubit_qubit) {
    // D = 4: C[2] = 2/3 exact, C[1] in [1/3, 1/2].
    if (k == 2) {
      r.threshold = 2.0 / 3.0;
      r.threshold_provenance = ThresholdProvenance::exact;
    } else {
      r.threshold = 1.0 / 3.0;
      r.threshold_provenance = ThresholdProvenance::lower_bound;
      r.bracket = std::make_pair(1.0 / 3.0, 1.0 / 2.0);
    }
  } else if (qubit_qutrit) {
    // D = 6: C[4] = 3/4 exact, brackets for k <= 3.
    if (k == 4) {
      r.threshold = 3.0 / 4.0;
      r.threshold_provenance = ThresholdProvenance::exact;
    } else {
      static const double lo[] = {3.0 / 16.0, 3.0 / 8.0, 9.0 / 16.0};
      static const double hi[] = {3.0 / 8.0, 1.0 / 2.0, 5.0 / 8.0};
      r.threshold = lo[k - 1];
      r.threshold_provenance = ThresholdProvenance::lower_bound;
      r.bracket = std::make_pair(lo[k - 1], hi[k - 1]);
    }
  } else if (n == 2) {
    r.threshold = k * (D + 1.0) / ((D + 2.0) * (D - 1.0));
    r.threshold_provenance = ThresholdProvenance::lower_bound;
    r.bracket = std::make_pair(r.threshold, (k + 2.0) / (D + 2.0));
  } else {
    r.threshold = k * (L.value / (D - 1.0) + (1.0 - L.value) / D);
    r.threshold_provenance = ThresholdProvenance::lower_bound;
    r.bracket = std::make_pair(r.threshold, k * (1.0 - L.value) / D + L.value);
  }
  r.verdict = (r.value <= r.threshold + tol::sort) ? Verdict::certified_separable : Verdict::inconclusive;
  return r;
}

std::vector<DetectorReport> run_all_detectors(const DensityMatrix& rho) {
  std::vector<DetectorReport> out;
  out.push_back(theorem1_detector(rho));
  out.push_back(improved_spectral_detector(rho));
  out.push_back(purity_detector(rho));
  for (int k = 1; k < rho.dim(); ++k) out.push_back(partial_sum_detector(rho, k));
  return out;
}

std::pair<double, double> critical_bracket(const ConvexFunctionSpec& f,
                                           const CompositeDims& dims) {
  const int D = dims.total();
  const double L = l_constant(dims).value;
  std::vector<double> upper_spec(static_cast<std::size_t>(D), (1.0 - L) / D);
  upper_spec[0] += L;
  std::vector<double> lower_spec(static_cast<std::size_t>(D),
                                 L / (D - 1.0) + (1.0 - L) / D);
  lower_spec[static_cast<std::size_t>(D - 1)] = (1.0 - L) / D;
  return {evaluate_on_spectrum(f, lower_spec), evaluate_on_spectrum(f, upper_spec)};
}

double improved_lower_bound_inf(const ConvexFunctionSpec& f, const CompositeDims& dims,
                                int grid) {
  if (!ppt_decisive(dims))
    throw std::invalid_argument("improved_lower_bound_inf: dims (2,2) or (2,3) required");
  if (grid < 100) throw std::invalid_argument("improved_lower_bound_inf: grid >= 100 required");
  const int D = dims.total();
  const double L = l_constant(dims).value;

  // Spectrum of t.sigma + (1-t)L.omega + (1-t)(1-L).tau with omega's support
  // inside sigma's support: D-2 entries a(t), one b(t), one c(t).
  auto section = [&](double t) {
    const double base = (1.0 - t) * (1.0 - L) / D;
    const double a = t / (D - 1.0) + (1.0 - t) * L / (D - 2.0) + base;
    const double b = t / (D - 1.0) + base;
    std::vector<double> lam(static_cast<std::size_t>(D), a);
    lam[static_cast<std::size_t>(D - 2)] = b;
    lam[static_cast<std::size_t>(D - 1)] = base;
    std::sort(lam.begin(), lam.end(), std::greater<double>());
    return evaluate_on_spectrum(f, lam);
  };

  int best = 0;
  double best_val = section(0.0);
  for (int i = 1; i <= grid; ++i) {
    const double v = section(static_cast<double>(i) / grid);
    if (v < best_val) {
      best_val = v;
      best = i;
    }
  }
  const double lo = std::max(0.0, (best - 1.0) / grid);
  const double hi = std::min(1.0, (best + 1.0) / grid);
  return golden_section_min(section, lo, hi);
}

bool k_good_probe(const std::function<double(const std::vector<double>&)>& f_spec, int D, int p,
                  int samples, Rng& rng) {
  if (p < 1 || p > D - 1) throw std::invalid_argument("k_good_probe: p out of range");
  const int support = D - p;
  for (int trial = 0; trial < samples; ++trial) {
    // omega with spec in co(e^{(1)},...,e^{(D-p)}).
    std::vector<double> y(static_cast<std::size_t>(support));
    double ysum = 0.0;
    for (double& v : y) {
      v = -std::log(std::max(rng.uniform(), 1e-300));
      ysum += v;
    }
    std::vector<double> omega(static_cast<std::size_t>(D), 0.0);
    for (int j = 0; j < support; ++j) {
      const double w = y[static_cast<std::size_t>(j)] / ysum;
      for (int i = 0; i <= j; ++i) omega[static_cast<std::size_t>(i)] += w / (j + 1);
    }

    // Weights on the rhohat^{(D-p+j)} vertices, j = 1..p-1.
    std::vector<double> tj(static_cast<std::size_t>(std::max(p - 1, 0)));
    double t = 0.0;
    if (!tj.empty()) {
      for (double& v : tj) v = rng.uniform();
      double scale = rng.uniform() / std::accumulate(tj.begin(), tj.end(), 0.0);
      for (double& v : tj) {
        v *= scale;
      }
      t = std::accumulate(tj.begin(), tj.end(), 0.0);
    }

    auto section = [&](double s) {
      std::vector<double> lam(static_cast<std::size_t>(D), (1.0 - t - s) / D);
      for (int i = 0; i < D; ++i) lam[static_cast<std::size_t>(i)] += s * omega[static_cast<std::size_t>(i)];
      for (int j = 1; j < p; ++j) {
        const int rank = D - p + j;
        const double w = tj[static_cast<std::size_t>(j - 1)];
        for (int i = 0; i < rank; ++i) lam[static_cast<std::size_t>(i)] += w / rank;
      }
      std::sort(lam.begin(), lam.end(), std::greater<double>());
      return f_spec(lam);
    };

    const double f0 = section(0.0);
    const int npts = 8;
    double prev = f0;
    for (int i = 1; i <= npts; ++i) {
      const double s = (1.0 - t) * i / npts;
      const double v = section(s);
      if (v <= prev + tol::sort) return false;  // not strictly increasing
      prev = v;
    }
  }
  return true;
}

bool k_good_probe(const ConvexFunctionSpec& f, const CompositeDims& dims, int p, int samples,
                  Rng& rng) {
  return k_good_probe(
      [&](const std::vector<double>& lam) { return evaluate_on_spectrum(f, lam); },
      dims.total(), p, samples, rng);
}

}  // namespace sepcert
