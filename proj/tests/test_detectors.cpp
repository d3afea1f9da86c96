#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sepcert/detectors.hpp"

using namespace sepcert;

namespace {
const CompositeDims kQQ({2, 2});
const CompositeDims kQT({2, 3});

DensityMatrix diag_state(std::vector<double> d, const CompositeDims& dims) {
  Matrix m = Matrix::Zero(dims.total(), dims.total());
  for (std::size_t j = 0; j < d.size(); ++j) m(j, j) = d[j];
  return DensityMatrix::validate(m, dims);
}

DensityMatrix werner(double t) {
  Vector psi = Vector::Zero(4);
  psi(0) = psi(3) = 1.0 / std::sqrt(2.0);
  return mix_with_trace(DensityMatrix::pure(psi, kQQ), t);
}
}  // namespace

TEST_CASE("evaluate: purity, entropy orientation, partial sums") {
  auto tau = DensityMatrix::maximally_mixed(kQQ);
  CHECK(evaluate(ConvexFunctionSpec::purity(), tau) == doctest::Approx(0.25));
  auto pure = diag_state({1, 0, 0, 0}, kQQ);
  CHECK(evaluate(ConvexFunctionSpec::purity(), pure) == doctest::Approx(1.0));
  // convex orientation: sum lambda ln lambda, 0 ln 0 = 0
  CHECK(evaluate(ConvexFunctionSpec::entropy_negated(), tau) == doctest::Approx(-std::log(4.0)));
  CHECK(evaluate(ConvexFunctionSpec::entropy_negated(), pure) == doctest::Approx(0.0));
  CHECK(evaluate(ConvexFunctionSpec::partial_sum(2), diag_state({0.5, 0.3, 0.2, 0.0}, kQQ)) ==
        doctest::Approx(0.8));
  CHECK(evaluate_on_spectrum(ConvexFunctionSpec::purity(), {0.5, 0.5, 0.0, 0.0}) ==
        doctest::Approx(0.5));
}

TEST_CASE("minimal-eigenvalue detector") {
  auto tau_rep = theorem1_detector(DensityMatrix::maximally_mixed(kQT));
  CHECK(tau_rep.verdict == Verdict::certified_separable);
  CHECK(tau_rep.threshold == doctest::Approx((1 - 0.25) / 6.0));

  // lambda_6 = 1/8 exactly meets the (2,3) threshold
  auto edge = diag_state({0.2625, 0.1575, 0.1575, 0.15, 0.1475, 0.125}, kQT);
  CHECK(min_eigenvalue(edge) == doctest::Approx(0.125));
  CHECK(theorem1_detector(edge).verdict == Verdict::certified_separable);

  auto w = theorem1_detector(werner(0.35));
  CHECK(w.verdict == Verdict::inconclusive);
  CHECK(!is_ppt(werner(0.35)).is_ppt);
}

TEST_CASE("two-eigenvalue detector: (2,3) reduction 3l6 + 5l5 >= 1") {
  // threshold (1-L)/D = 1/8 with weights (1-c, c) = (3/8, 5/8) on (l6, l5)
  auto r = improved_spectral_detector(DensityMatrix::maximally_mixed(kQT));
  CHECK(r.verdict == Verdict::certified_separable);
  CHECK_FALSE(r.conditional);

  // spec = e^{(5)} on (2,3): 3*0 + 5*(1/5) = 1, certified at the boundary
  auto e5 = diag_state({0.2, 0.2, 0.2, 0.2, 0.2, 0.0}, kQT);
  CHECK(improved_spectral_detector(e5).verdict == Verdict::certified_separable);

  // same numeric condition outside (2,2)/(2,3) is conditional, not a certificate
  auto c = improved_spectral_detector(DensityMatrix::maximally_mixed(CompositeDims({3, 3})));
  CHECK(c.conditional);
  CHECK(c.verdict == Verdict::inconclusive);
}

TEST_CASE("purity detector thresholds") {
  auto qq = purity_detector(werner(1.0 / 3));
  CHECK(qq.threshold == doctest::Approx(1.0 / 3));
  CHECK(qq.threshold_provenance == ThresholdProvenance::exact);
  CHECK(qq.verdict == Verdict::certified_separable);

  auto qt = purity_detector(DensityMatrix::maximally_mixed(kQT));
  CHECK(qt.threshold == doctest::Approx(0.2));
  CHECK(qt.bracket.has_value());
  CHECK(qt.bracket->first == doctest::Approx(0.2));
  CHECK(qt.bracket->second == doctest::Approx(7.0 / 32));

  auto gen = purity_detector(DensityMatrix::maximally_mixed(CompositeDims({3, 3})));
  CHECK(gen.threshold_provenance == ThresholdProvenance::lower_bound);
  const double D = 9, L = 2.0 / 11;
  CHECK(gen.bracket->first == doctest::Approx((D - 1 + L * L) / (D * (D - 1))));
  CHECK(gen.bracket->second == doctest::Approx((L * L * (D - 1) + 1) / D));
}

TEST_CASE("partial-sum detector table values") {
  auto s3 = partial_sum_detector(diag_state({0.5, 1.0 / 6, 1.0 / 6, 1.0 / 6}, kQQ), 3);
  CHECK(s3.value == doctest::Approx(5.0 / 6));
  CHECK(s3.threshold == doctest::Approx(5.0 / 6));
  CHECK(s3.verdict == Verdict::certified_separable);
  CHECK(s3.threshold_provenance == ThresholdProvenance::exact);

  CHECK(partial_sum_detector(DensityMatrix::maximally_mixed(kQQ), 2).threshold ==
        doctest::Approx(2.0 / 3));
  CHECK(partial_sum_detector(DensityMatrix::maximally_mixed(kQT), 5).threshold ==
        doctest::Approx(7.0 / 8));
  CHECK(partial_sum_detector(DensityMatrix::maximally_mixed(kQT), 4).threshold ==
        doctest::Approx(3.0 / 4));

  // N=2, k=D-1 exact value (D+1)/(D+2) on (3,3)
  auto d33 = partial_sum_detector(DensityMatrix::maximally_mixed(CompositeDims({3, 3})), 8);
  CHECK(d33.threshold == doctest::Approx(10.0 / 11));
  CHECK(d33.threshold_provenance == ThresholdProvenance::exact);

  // tau always certified: Sigma_k(tau) = k/D below every lower bound
  for (int k = 1; k <= 5; ++k)
    CHECK(partial_sum_detector(DensityMatrix::maximally_mixed(kQT), k).verdict ==
          Verdict::certified_separable);
  CHECK_THROWS_AS(partial_sum_detector(DensityMatrix::maximally_mixed(kQT), 6),
                  std::invalid_argument);
}

TEST_CASE("critical brackets") {
  auto pur_qq = critical_bracket(ConvexFunctionSpec::purity(), kQQ);
  const double D = 4;
  CHECK(pur_qq.first == doctest::Approx(D * (D + 3) / ((D - 1) * (2 + D) * (2 + D))));
  CHECK(pur_qq.second == doctest::Approx((D + 8) / ((2 + D) * (2 + D))));

  auto ent_qq = critical_bracket(ConvexFunctionSpec::entropy_negated(), kQQ);
  // reported in the entropy's concave orientation after negation of the
  // internal convex values: lower end ln(2+D) - 3/(2+D) ln 3 = ln(6/sqrt(3))
  CHECK(-ent_qq.second == doctest::Approx(std::log(6.0 / std::sqrt(3.0))));
  CHECK(-ent_qq.first ==
        doctest::Approx(std::log(6.0) - (5.0 / 6.0) * std::log(5.0 / 3.0)));

  for (int k = 1; k <= 5; ++k) {
    auto br = critical_bracket(ConvexFunctionSpec::partial_sum(k), kQT);
    CHECK(br.first <= br.second + 1e-12);
  }
  auto top = critical_bracket(ConvexFunctionSpec::partial_sum(5), kQT);
  CHECK(top.first == doctest::Approx(1.0 - (1 - 0.25) / 6.0));
  CHECK(top.second == doctest::Approx(top.first));
}

TEST_CASE("section infimum reproduces the footnote fractions") {
  CHECK(improved_lower_bound_inf(ConvexFunctionSpec::purity(), kQQ) ==
        doctest::Approx(10.0 / 36).epsilon(1e-9));
  CHECK(improved_lower_bound_inf(ConvexFunctionSpec::purity(), kQT) ==
        doctest::Approx(33.0 / 192).epsilon(1e-9));
  CHECK_THROWS_AS(improved_lower_bound_inf(ConvexFunctionSpec::purity(), CompositeDims({3, 3})),
                  std::invalid_argument);
}

TEST_CASE("goodness probes") {
  Rng rng(37);
  for (int p = 1; p <= 3; ++p) {
    CHECK(k_good_probe(ConvexFunctionSpec::purity(), kQQ, p, 30, rng));
    CHECK(k_good_probe(ConvexFunctionSpec::partial_sum(2), kQQ, p, 30, rng));
  }
  CHECK_FALSE(k_good_probe([](const std::vector<double>&) { return 0.5; }, 4, 2, 10, rng));
}

TEST_CASE("run_all_detectors produces a stable set") {
  auto reports = run_all_detectors(DensityMatrix::maximally_mixed(kQT));
  CHECK(reports.size() >= 4);
  for (const auto& r : reports) CHECK(r.verdict == Verdict::certified_separable);
}
