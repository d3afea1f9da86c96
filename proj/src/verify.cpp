#include "sepcert/verify.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <fstream>
#include <limits>

#include <nlohmann/json.hpp>

#include "sepcert/io.hpp"
#include "sepcert/modulus.hpp"
#include "sepcert/table.hpp"
#include "sepcert/thermal.hpp"

namespace sepcert {

namespace {

struct Context {
  int samples;  // base Monte Carlo size
  Rng rng;
  std::string counterexample_path;
  std::vector<CheckResult> results;

  void record(const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({name, ok, ok ? "" : detail});
  }

  void dump_counterexample(const DensityMatrix& rho) {
    if (counterexample_path.empty()) return;
    std::ofstream out(counterexample_path);
    out << matrix_document(rho.entries(), rho.dims()).dump(2) << "\n";
  }
};

// `samples` acts as a percentage of the per-check defaults (0 = defaults).
int scaled(const Context& c, int dflt) {
  if (c.samples <= 0) return dflt;
  return std::max(1, static_cast<int>(static_cast<long long>(dflt) * c.samples / 100));
}

// Bell projector (|00> + |11>)/sqrt(2) on two qubits.
DensityMatrix bell_state() {
  CompositeDims d({2, 2});
  Vector psi = Vector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return DensityMatrix::pure(psi, d);
}

Hamiltonian heisenberg() {
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  sz << 1, 0, 0, -1;
  auto kron = [](const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index r = 0; r < a.rows(); ++r)
      for (Eigen::Index c = 0; c < a.cols(); ++c)
        out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
    return out;
  };
  return Hamiltonian(kron(sx, sx) + kron(sy, sy) + kron(sz, sz), CompositeDims({2, 2}));
}

// A state with the given spectrum in a Haar-random eigenbasis.
DensityMatrix state_with_spectrum(const SpectrumVector& lam, const CompositeDims& dims,
                                  Rng& rng) {
  const int d = dims.total();
  Matrix u = haar_unitary(d, rng);
  Matrix m = Matrix::Zero(d, d);
  for (int j = 0; j < d; ++j)
    m += lam[static_cast<std::size_t>(j)] * (u.col(j) * u.col(j).adjoint());
  return DensityMatrix::validate(m, dims);
}

// ---------------------------------------------------------------- simplex ---

void suite_simplex(Context& ctx) {
  // Barycentric round trip.
  bool ok = true;
  std::string detail;
  for (int d : {3, 4, 6}) {
    for (int i = 0; i < scaled(ctx, 200); ++i) {
      auto lam = random_spectrum(d, ctx.rng);
      auto back = from_barycentric(to_barycentric(lam));
      for (int j = 0; j < d; ++j) {
        if (std::abs(back[static_cast<std::size_t>(j)] - lam[static_cast<std::size_t>(j)]) >
            1e-12) {
          ok = false;
          detail = "round-trip drift at d=" + std::to_string(d);
        }
      }
    }
  }
  ctx.record("simplex/barycentric-round-trip", ok, detail);

  // Component and partial-sum bounds.
  ok = true;
  for (int d : {3, 4, 6}) {
    for (int i = 0; i < scaled(ctx, 1000); ++i) {
      auto lam = random_spectrum(d, ctx.rng);
      if (lam[0] < 1.0 / d - 1e-12 || lam[0] > 1.0 + 1e-12) ok = false;
      for (int k = 1; k <= d; ++k) {
        if (k >= 2 && lam[static_cast<std::size_t>(k - 1)] > 1.0 / k + 1e-12) ok = false;
        const double s = partial_sum(lam, k);
        if (s < static_cast<double>(k) / d - 1e-12 || s > 1.0 + 1e-12) ok = false;
      }
    }
  }
  ctx.record("simplex/partial-sum-bounds", ok, "component or partial-sum bound violated");

  // Vertex chain in the "more mixed" order.
  ok = true;
  for (int d : {3, 4, 6})
    for (int k = d; k >= 2; --k)
      if (!majorizes(SpectrumVector::vertex(d, k), SpectrumVector::vertex(d, k - 1))) ok = false;
  ctx.record("simplex/vertex-chain", ok, "e^{(k)} chain not ordered");

  // Monotonicity transfer: spec(rho) more mixed than spec(phi) forces
  // F(rho) <= F(phi) for every implemented convex F.
  ok = true;
  CompositeDims dims({2, 2});
  for (int i = 0; i < scaled(ctx, 100); ++i) {
    auto mu = random_spectrum(4, ctx.rng);
    const double t = ctx.rng.uniform();
    std::vector<double> mixed(4);
    for (int j = 0; j < 4; ++j)
      mixed[static_cast<std::size_t>(j)] = t * mu[static_cast<std::size_t>(j)] + (1.0 - t) / 4.0;
    SpectrumVector lam(mixed);
    DensityMatrix rho = state_with_spectrum(lam, dims, ctx.rng);
    DensityMatrix phi = state_with_spectrum(mu, dims, ctx.rng);
    std::vector<ConvexFunctionSpec> fs = {ConvexFunctionSpec::purity(),
                                          ConvexFunctionSpec::entropy_negated(),
                                          ConvexFunctionSpec::partial_sum(2)};
    for (const auto& f : fs)
      if (evaluate(f, rho) > evaluate(f, phi) + 1e-10) ok = false;
  }
  ctx.record("simplex/majorization-monotonicity", ok, "convex F not monotone under mixing");

  // f(lambda) = lambda_d lifts to a non-convex function on states.
  {
    const int d = 3;
    const double at_tau = 1.0 / d;       // F_f(tau)
    const double avg_vertices = 0.0;     // each basis projector has lambda_d = 0
    ctx.record("simplex/min-eigenvalue-lift-not-convex", at_tau > avg_vertices + 1e-12,
               "expected F_f(tau) above the vertex average");
  }
}

// -------------------------------------------------------------------- gap ---

void suite_gap(Context& ctx) {
  bool prod_ok = true, recon_ok = true, tail_ok = true;
  for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
    CompositeDims dims(factors);
    const int D = dims.total();
    for (int i = 0; i < scaled(ctx, 50); ++i) {
      DensityMatrix rho = random_density(dims, ctx.rng);
      auto rep = gap_representation(rho);
      // rhohat^{(D)} = tau.
      if ((rep.hat_states.back().entries() - Matrix::Identity(D, D) / D).cwiseAbs().maxCoeff() >
          1e-10)
        tail_ok = false;
      // Product identities.
      for (int j = 0; j < D; ++j)
        for (int k = 0; k < D; ++k) {
          Matrix lhs = rep.hat_states[static_cast<std::size_t>(j)].entries() *
                       rep.hat_states[static_cast<std::size_t>(k)].entries();
          Matrix rhs = rep.hat_states[static_cast<std::size_t>(std::min(j, k))].entries() /
                       (std::max(j, k) + 1.0);
          if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-10) prod_ok = false;
        }
      // Reconstruction.
      Matrix acc = rep.tail_weight * Matrix::Identity(D, D) / D;
      for (int j = 0; j < D - 1; ++j)
        acc += rep.mu[static_cast<std::size_t>(j)] *
               rep.hat_states[static_cast<std::size_t>(j)].entries();
      if ((acc - rho.entries()).cwiseAbs().maxCoeff() > 1e-10) {
        recon_ok = false;
        ctx.dump_counterexample(rho);
      }
    }
  }
  ctx.record("gap/vertex-product-identities", prod_ok, "rhohat product identity violated");
  ctx.record("gap/reconstruction", recon_ok, "gap decomposition does not reassemble the state");
  ctx.record("gap/tail-is-tau", tail_ok, "rhohat^{(D)} differs from tau");

  // Unitary invariance of the spectrum.
  bool ok = true;
  for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
    CompositeDims dims(factors);
    for (int i = 0; i < scaled(ctx, 100); ++i) {
      DensityMatrix rho = random_density(dims, ctx.rng);
      Matrix u = haar_unitary(dims.total(), ctx.rng);
      auto a = spectrum(rho).values();
      auto b = spectrum(unitary_conjugate(rho, u)).values();
      for (std::size_t j = 0; j < a.size(); ++j)
        if (std::abs(a[j] - b[j]) > 1e-10) ok = false;
    }
  }
  ctx.record("gap/spectrum-unitary-invariance", ok, "spectrum changed under conjugation");

  // Nested mixing: (rho_t)_s = rho_{ts}.
  ok = true;
  {
    CompositeDims dims({2, 2});
    for (int i = 0; i < scaled(ctx, 50); ++i) {
      DensityMatrix rho = random_density(dims, ctx.rng);
      const double t = 0.7, s = 0.4;
      Matrix lhs = mix_with_trace(mix_with_trace(rho, t), s).entries();
      Matrix rhs = mix_with_trace(rho, t * s).entries();
      if ((lhs - rhs).cwiseAbs().maxCoeff() > 1e-12) ok = false;
    }
  }
  ctx.record("gap/mixing-composition", ok, "(rho_t)_s != rho_{ts}");

  // Cyclic average of any state is tau.
  ok = true;
  for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
    CompositeDims dims(factors);
    const int D = dims.total();
    for (int i = 0; i < scaled(ctx, 20); ++i) {
      DensityMatrix rho = random_density(dims, ctx.rng);
      if ((cyclic_average(rho).entries() - Matrix::Identity(D, D) / D).cwiseAbs().maxCoeff() >
          1e-10)
        ok = false;
    }
  }
  ctx.record("gap/cyclic-average-is-tau", ok, "cyclic average differs from tau");
}

// ------------------------------------------------------------------- ppt ---

void suite_ppt(Context& ctx) {
  // Complement-of-a-pure-state family has positive partial transpose.
  bool ok = true;
  double worst = 0.0;
  for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}}) {
    CompositeDims dims(factors);
    const int D = dims.total();
    for (int i = 0; i < scaled(ctx, 500); ++i) {
      Vector psi = haar_vector(D, ctx.rng);
      Matrix m = (Matrix::Identity(D, D) - psi * psi.adjoint()) / (D - 1.0);
      DensityMatrix rho = DensityMatrix::validate(m, dims);
      const double ev = is_ppt(rho).min_pt_eigenvalue;
      worst = std::min(worst, ev);
      if (ev < -1e-12) {
        ok = false;
        ctx.dump_counterexample(rho);
      }
    }
  }
  ctx.record("ppt/pure-complement-family", ok,
             "min PT eigenvalue " + std::to_string(worst) + " below -1e-12");

  // Partial transpose is a Hermiticity/trace-preserving involution.
  ok = true;
  {
    CompositeDims dims({2, 3});
    const int d2 = dims.factor(1);
    for (int i = 0; i < scaled(ctx, 50); ++i) {
      DensityMatrix rho = random_density(dims, ctx.rng);
      Matrix pt = partial_transpose(rho, 2);
      if ((pt - pt.adjoint()).cwiseAbs().maxCoeff() > 1e-12) ok = false;
      if (std::abs(pt.trace().real() - 1.0) > 1e-12) ok = false;
      // Swap the factor-2 indices a second time by hand; must recover rho.
      Matrix twice = pt;
      for (int r = 0; r < dims.total(); ++r)
        for (int c = 0; c < dims.total(); ++c) {
          const int r2 = r % d2, c2 = c % d2;
          twice(r + (c2 - r2), c + (r2 - c2)) = pt(r, c);
        }
      if ((twice - rho.entries()).cwiseAbs().maxCoeff() > 1e-12) ok = false;
    }
  }
  ctx.record("ppt/involution", ok, "partial transpose not an involution");

  // Sampled separable mixtures pass PPT.
  ok = true;
  for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}}) {
    CompositeDims dims(factors);
    const int D = dims.total();
    for (int i = 0; i < scaled(ctx, 100); ++i) {
      const int terms = 1 + static_cast<int>(ctx.rng.uniform() * 5);
      Matrix m = Matrix::Zero(D, D);
      std::vector<double> w(static_cast<std::size_t>(terms));
      double wsum = 0.0;
      for (double& v : w) {
        v = -std::log(std::max(ctx.rng.uniform(), 1e-300));
        wsum += v;
      }
      for (int k = 0; k < terms; ++k) {
        auto p = sample_pure_product(dims, ctx.rng);
        m += (w[static_cast<std::size_t>(k)] / wsum) * p.state(dims).entries();
      }
      DensityMatrix rho = DensityMatrix::validate(m, dims);
      if (!is_ppt(rho).is_ppt) {
        ok = false;
        ctx.dump_counterexample(rho);
      }
    }
  }
  ctx.record("ppt/separable-mixtures-pass", ok, "separable mixture failed PPT");

  // Marginals of a product state recover the factors.
  ok = true;
  {
    CompositeDims d1({2}, 2), d2({3}, 3);
    for (int i = 0; i < scaled(ctx, 50); ++i) {
      DensityMatrix a = random_density(d1, ctx.rng);
      DensityMatrix b = random_density(d2, ctx.rng);
      DensityMatrix prod = tensor({a, b});
      if ((marginal(prod, 1).entries() - a.entries()).cwiseAbs().maxCoeff() > 1e-12) ok = false;
      if ((marginal(prod, 2).entries() - b.entries()).cwiseAbs().maxCoeff() > 1e-12) ok = false;
    }
  }
  ctx.record("ppt/marginal-of-tensor", ok, "marginal does not recover tensor factor");
}

// ---------------------------------------------------------------- modulus ---

void suite_modulus(Context& ctx) {
  // Bell projector modulus.
  {
    auto est = modulus_ppt(bell_state());
    ctx.record("modulus/bell-one-third", std::abs(est.value() - 1.0 / 3.0) < 1e-6,
               "Bell modulus " + std::to_string(est.value()));
  }

  // PPT failure is monotone along the mixing path (grid check).
  {
    bool ok = true;
    CompositeDims dims({2, 2});
    for (int i = 0; i < scaled(ctx, 30); ++i) {
      DensityMatrix rho = random_density(dims, ctx.rng);
      bool seen_fail = false;
      for (int g = 0; g <= 40; ++g) {
        const bool pass = is_ppt(mix_with_trace(rho, g / 40.0)).is_ppt;
        if (seen_fail && pass) ok = false;
        if (!pass) seen_fail = true;
      }
    }
    ctx.record("modulus/ppt-monotone-on-grid", ok, "PPT predicate not monotone in t");
  }

  // Floor: modulus never sinks below the universal constant.
  {
    bool ok = true;
    for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
      CompositeDims dims(factors);
      const double floor = l_constant(dims).value;
      for (int i = 0; i < scaled(ctx, 100); ++i) {
        DensityMatrix rho = random_density(dims, ctx.rng);
        if (modulus_ppt(rho).value() < floor - 1e-6) {
          ok = false;
          ctx.dump_counterexample(rho);
        }
      }
    }
    ctx.record("modulus/floor", ok, "modulus below the universal constant");
  }

  // Scaling identity for mixtures.
  {
    bool ok = true;
    for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
      CompositeDims dims(factors);
      for (int i = 0; i < scaled(ctx, 25); ++i) {
        DensityMatrix rho = random_density(dims, ctx.rng);
        const double t = 0.05 + 0.95 * ctx.rng.uniform();
        auto chk = modulus_of_mixture(rho, t);
        if (std::abs(chk.direct - chk.predicted) > 2e-6) ok = false;
      }
    }
    ctx.record("modulus/mixture-scaling", ok, "l(rho_t) != min{1, l(rho)/t}");
  }

  // Harmonic lower bound vs the exact oracle.
  {
    bool ok = true;
    CompositeDims dims({2, 2});
    for (int i = 0; i < scaled(ctx, 50); ++i) {
      DensityMatrix a = random_density(dims, ctx.rng);
      DensityMatrix b = random_density(dims, ctx.rng);
      const double t = ctx.rng.uniform();
      const double la = modulus_ppt(a).value(), lb = modulus_ppt(b).value();
      const double bound = convexity_lower_bound({{t, la}, {1.0 - t, lb}});
      DensityMatrix mix =
          DensityMatrix::validate(t * a.entries() + (1.0 - t) * b.entries(), dims);
      const double exact = modulus_ppt(mix).value();
      if (bound > exact + 1e-6) ok = false;
      if (bound < std::min(la, lb) - 1e-9) ok = false;
    }
    ctx.record("modulus/harmonic-bound", ok, "harmonic bound exceeds exact modulus");
  }

  // Gap-representation bound against the exact oracle.
  {
    bool ok = true;
    CompositeDims dims({2, 2});
    for (int i = 0; i < scaled(ctx, 25); ++i) {
      DensityMatrix rho = random_density(dims, ctx.rng);
      auto rep = gap_representation(rho);
      std::vector<double> hat_moduli;
      for (int j = 0; j < dims.total() - 1; ++j)
        hat_moduli.push_back(
            modulus_ppt(rep.hat_states[static_cast<std::size_t>(j)]).value());
      const double bound = gap_lower_bound(rho, hat_moduli);
      const double exact = modulus_ppt(rho).value();
      if (bound > exact + 1e-6) ok = false;
    }
    ctx.record("modulus/gap-bound-consistency", ok, "gap bound exceeds exact modulus");
  }

  // Convexity of the reciprocal modulus.
  {
    bool ok = true;
    CompositeDims dims({2, 2});
    for (int i = 0; i < scaled(ctx, 50); ++i) {
      DensityMatrix a = random_density(dims, ctx.rng);
      DensityMatrix b = random_density(dims, ctx.rng);
      if (!one_over_l_convexity_check(a, b, ctx.rng.uniform())) ok = false;
    }
    ctx.record("modulus/reciprocal-convexity", ok, "1/l convexity inequality violated");
  }
}

// -------------------------------------------------------------- detectors ---

// A random state scaled along the mixing path until it satisfies `accept`.
DensityMatrix conditioned_state(const CompositeDims& dims, Rng& rng,
                                const std::function<double(const DensityMatrix&)>& margin) {
  // margin(rho_t) is affine or monotone in t with margin(tau) > 0; pick the
  // largest t on a bisected grid with margin >= 0, then sample below it.
  DensityMatrix rho = random_density(dims, rng);
  double lo = 0.0, hi = 1.0;
  if (margin(rho) >= 0.0) return rho;
  for (int it = 0; it < 40; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (margin(mix_with_trace(rho, mid)) >= 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return mix_with_trace(rho, lo * rng.uniform());
}

void suite_detectors(Context& ctx) {
  // Soundness: anything certified must pass PPT where PPT decides.
  {
    bool ok = true;
    for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
      CompositeDims dims(factors);
      const int per_kind = scaled(ctx, 500);
      const double thr = (1.0 - l_constant(dims).value) / dims.total();
      std::vector<std::function<double(const DensityMatrix&)>> margins = {
          [&](const DensityMatrix& s) { return min_eigenvalue(s) - thr; },
          [&](const DensityMatrix& s) {
            return purity_detector(s).threshold - purity(s);
          },
          [&](const DensityMatrix& s) {
            auto r = improved_spectral_detector(s);
            return r.value - r.threshold;
          },
          [&](const DensityMatrix& s) {
            auto r = partial_sum_detector(s, s.dim() - 1);
            return r.threshold - r.value;
          }};
      for (const auto& m : margins) {
        for (int i = 0; i < per_kind; ++i) {
          DensityMatrix rho = conditioned_state(dims, ctx.rng, m);
          for (const auto& rep : run_all_detectors(rho)) {
            if (rep.verdict == Verdict::certified_separable && !is_ppt(rho).is_ppt) {
              ok = false;
              ctx.dump_counterexample(rho);
            }
          }
        }
      }
    }
    ctx.record("detectors/soundness", ok, "certified state failed PPT");
  }

  // Monotone section t -> F(rho_t).
  {
    bool ok = true;
    CompositeDims dims({2, 2});
    std::vector<ConvexFunctionSpec> fs = {ConvexFunctionSpec::purity(),
                                          ConvexFunctionSpec::entropy_negated(),
                                          ConvexFunctionSpec::partial_sum(1)};
    for (int i = 0; i < scaled(ctx, 50); ++i) {
      DensityMatrix rho = random_density(dims, ctx.rng);
      for (const auto& f : fs) {
        double prev = evaluate(f, mix_with_trace(rho, 0.0));
        const double first = prev;
        double last = prev;
        for (int g = 1; g <= 20; ++g) {
          const double cur = evaluate(f, mix_with_trace(rho, g / 20.0));
          if (cur < prev - 1e-12) ok = false;
          prev = cur;
          last = cur;
        }
        if (!(last > first + 1e-12)) ok = false;  // strict increase end to end
      }
    }
    ctx.record("detectors/monotone-section", ok, "F(rho_t) not increasing in t");
  }

  // Certifications of the plain minimal-eigenvalue test are a subset of the
  // sharpened two-eigenvalue test's.
  {
    bool subset_ok = true, strict = false;
    for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
      CompositeDims dims(factors);
      for (int i = 0; i < scaled(ctx, 300); ++i) {
        DensityMatrix rho = random_density(dims, ctx.rng);
        DensityMatrix probe = mix_with_trace(rho, ctx.rng.uniform());
        const bool t1 =
            theorem1_detector(probe).verdict == Verdict::certified_separable;
        const bool imp =
            improved_spectral_detector(probe).verdict == Verdict::certified_separable;
        if (t1 && !imp) subset_ok = false;
        if (imp && !t1) strict = true;
      }
    }
    ctx.record("detectors/threshold-consistency", subset_ok && strict,
               subset_ok ? "no state separated the two tests" : "subset relation violated");
  }

  // Entangled states exist just above the upper bracket end.
  {
    bool ok = true;
    for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}}) {
      CompositeDims dims(factors);
      const double L = l_constant(dims).value;
      // Maximally entangled pure state: Schmidt-uniform across the smaller factor.
      const int d1 = dims.factor(0), d2 = dims.factor(1);
      const int s = std::min(d1, d2);
      Vector psi = Vector::Zero(dims.total());
      for (int j = 0; j < s; ++j) psi(j * d2 + j) = 1.0 / std::sqrt(static_cast<double>(s));
      DensityMatrix phi = DensityMatrix::pure(psi, dims);
      DensityMatrix above = mix_with_trace(phi, L + 1e-3);
      if (is_ppt(above).is_ppt) ok = false;
      auto bracket = critical_bracket(ConvexFunctionSpec::purity(), dims);
      if (!(evaluate(ConvexFunctionSpec::purity(), above) > bracket.second)) ok = false;
    }
    ctx.record("detectors/tightness-above-upper-bound", ok,
               "state just above L is not entangled or not above the bound");
  }

  // Bracket sanity and coalescence at k = D-1.
  {
    bool ok = true;
    for (const auto& factors : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}}) {
      CompositeDims dims(factors);
      const int D = dims.total();
      const double L = l_constant(dims).value;
      for (int k = 1; k <= D - 1; ++k) {
        auto br = critical_bracket(ConvexFunctionSpec::partial_sum(k), dims);
        if (br.first > br.second + 1e-12) ok = false;
        if (k == D - 1 &&
            (std::abs(br.first - (1.0 - (1.0 - L) / D)) > 1e-12 ||
             std::abs(br.second - (1.0 - (1.0 - L) / D)) > 1e-12))
          ok = false;
      }
    }
    ctx.record("detectors/bracket-coalescence", ok, "C[k] bracket inconsistent");
  }

  // k-goodness probes.
  {
    CompositeDims dims({2, 2});
    bool ok = true;
    for (int p = 1; p <= 3; ++p) {
      if (!k_good_probe(ConvexFunctionSpec::purity(), dims, p, scaled(ctx, 50), ctx.rng))
        ok = false;
      if (!k_good_probe(ConvexFunctionSpec::partial_sum(2), dims, p, scaled(ctx, 50), ctx.rng))
        ok = false;
    }
    const bool stub = k_good_probe([](const std::vector<double>&) { return 1.0; }, 4, 2,
                                   scaled(ctx, 10), ctx.rng);
    if (stub) ok = false;
    ctx.record("detectors/k-good-probes", ok, "goodness probe gave the wrong verdict");
  }
}

// ---------------------------------------------------------------- thermal ---

void suite_thermal(Context& ctx) {
  // The guaranteed window is certified by the minimal-eigenvalue test.
  {
    bool ok = true;
    for (const auto& factors :
         std::vector<std::vector<int>>{{2, 2}, {2, 3}, {2, 2, 2}}) {
      CompositeDims dims(factors);
      const int D = dims.total();
      for (int i = 0; i < scaled(ctx, 10); ++i) {
        Matrix g(D, D);
        for (int r = 0; r < D; ++r)
          for (int c = 0; c < D; ++c) g(r, c) = ctx.rng.complex_gaussian();
        Hamiltonian h(0.5 * (g + g.adjoint().eval()), dims);
        const double bo = beta_o_bound(h);
        for (double frac : {-1.0, -0.5, 0.0, 0.5, 1.0}) {
          const double beta = frac * bo;
          if (theorem1_detector(gibbs(h, beta)).verdict != Verdict::certified_separable)
            ok = false;
        }
      }
    }
    ctx.record("thermal/window-certified", ok, "Gibbs state inside beta_o not certified");
  }

  // Spectral ordering along increasing beta.
  {
    bool ok = true;
    CompositeDims dims({2, 2});
    for (int i = 0; i < scaled(ctx, 20); ++i) {
      Matrix g(4, 4);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) g(r, c) = ctx.rng.complex_gaussian();
      Hamiltonian h(0.5 * (g + g.adjoint().eval()), dims);
      std::vector<double> betas;
      for (int k = 0; k < 20; ++k) betas.push_back(0.1 * k);
      if (!uhlmann_wehrl_check(h, betas)) ok = false;
    }
    ctx.record("thermal/mixedness-decreasing-in-beta", ok,
               "Gibbs family not ordered by majorization");
  }

  // U(beta) strictly decreasing for non-scalar h.
  {
    bool ok = true;
    Hamiltonian h = heisenberg();
    double prev = thermal_energy(h, -2.0);
    for (int k = 1; k <= 40; ++k) {
      const double cur = thermal_energy(h, -2.0 + 0.1 * k);
      if (cur >= prev - 1e-12) ok = false;
      prev = cur;
    }
    ctx.record("thermal/energy-decreasing", ok, "U(beta) not strictly decreasing");
  }

  // Heisenberg closed forms.
  {
    Hamiltonian h = heisenberg();
    const double b_exact = std::log(3.0) / 4.0;
    auto scan = exact_beta_c_scan(h, 2.0, 1e-9);
    bool ok = scan && std::abs(*scan - b_exact) < 1e-6;
    auto eta = eta_extrema(h, 8, ctx.rng);
    if (std::abs(eta.eta_minus + 1.0) > 1e-6) ok = false;
    ThermalWindow w;
    w.eta_minus = eta.eta_minus;
    w.eta_plus = eta.eta_plus;
    w.beta_o = beta_o_bound(h);
    w = toth_bounds(h, w, 1e-9);
    if (!w.beta_minus_toth || std::abs(*w.beta_minus_toth - b_exact) > 1e-4) ok = false;
    if (scan && w.beta_o > *scan + 1e-9) ok = false;
    if (scan && w.beta_minus_toth && *scan > *w.beta_minus_toth + 1e-6) ok = false;
    ctx.record("thermal/heisenberg-closed-forms", ok, "Heisenberg thresholds off");
  }

  // The alternating optimizer matches a dense local-angle grid on two qubits.
  {
    bool ok = true;
    CompositeDims dims({2, 2});
    for (int i = 0; i < scaled(ctx, 3); ++i) {
      Matrix g(4, 4);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) g(r, c) = ctx.rng.complex_gaussian();
      Hamiltonian h(0.5 * (g + g.adjoint().eval()), dims);
      auto eta = eta_extrema(h, 16, ctx.rng);
      // Grid over the second qubit's Bloch sphere with the first factor solved
      // exactly as the bottom eigenvector of the effective operator, then
      // local grid refinement around the best angles down to ~1e-5 spacing.
      auto value_at = [&](double th, double ph) {
        Vector v2(2);
        v2 << std::cos(th / 2.0), Complex(std::cos(ph), std::sin(ph)) * std::sin(th / 2.0);
        Matrix eff(2, 2);
        for (int p = 0; p < 2; ++p)
          for (int q = 0; q < 2; ++q) {
            Complex sum = 0.0;
            for (int x = 0; x < 2; ++x)
              for (int y = 0; y < 2; ++y)
                sum += std::conj(v2(x)) * v2(y) * h.entries()(p * 2 + x, q * 2 + y);
            eff(p, q) = sum;
          }
        Eigen::SelfAdjointEigenSolver<Matrix> es(eff, Eigen::EigenvaluesOnly);
        return es.eigenvalues().minCoeff();
      };
      double grid_min = std::numeric_limits<double>::infinity();
      double best_th = 0.0, best_ph = 0.0;
      double th0 = 0.0, th1 = M_PI, ph0 = 0.0, ph1 = 2.0 * M_PI;
      for (int level = 0; level < 4; ++level) {
        const int n = level == 0 ? 120 : 40;
        double lvl_min = std::numeric_limits<double>::infinity();
        double lvl_th = best_th, lvl_ph = best_ph;
        for (int a = 0; a <= n; ++a)
          for (int b = 0; b <= n; ++b) {
            const double th = th0 + (th1 - th0) * a / n;
            const double ph = ph0 + (ph1 - ph0) * b / n;
            const double v = value_at(th, ph);
            if (v < lvl_min) {
              lvl_min = v;
              lvl_th = th;
              lvl_ph = ph;
            }
          }
        grid_min = std::min(grid_min, lvl_min);
        best_th = lvl_th;
        best_ph = lvl_ph;
        const double hth = 2.0 * (th1 - th0) / n, hph = 2.0 * (ph1 - ph0) / n;
        th0 = best_th - hth;
        th1 = best_th + hth;
        ph0 = best_ph - hph;
        ph1 = best_ph + hph;
      }
      if (std::abs(eta.eta_minus - grid_min) > 1e-6) ok = false;
    }
    ctx.record("thermal/optimizer-vs-grid", ok, "alternating optimizer missed the grid optimum");
  }
}

}  // namespace

std::vector<CheckResult> run_suite(const std::string& suite, int samples, std::uint64_t seed,
                                   const std::string& counterexample_path) {
  Context ctx{samples, Rng(seed), counterexample_path, {}};
  const bool all = suite == "all";
  bool known = all;
  if (all || suite == "simplex") {
    suite_simplex(ctx);
    known = true;
  }
  if (all || suite == "gap") {
    suite_gap(ctx);
    known = true;
  }
  if (all || suite == "ppt-appendixA" || suite == "ppt") {
    suite_ppt(ctx);
    known = true;
  }
  if (all || suite == "modulus") {
    suite_modulus(ctx);
    known = true;
  }
  if (all || suite == "detectors") {
    suite_detectors(ctx);
    known = true;
  }
  if (all || suite == "thermal") {
    suite_thermal(ctx);
    known = true;
  }
  if (!known) throw std::invalid_argument("unknown suite: " + suite);
  return std::move(ctx.results);
}

}  // namespace sepcert
