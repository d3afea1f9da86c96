#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sepcert/random.hpp"
#include "sepcert/simplex.hpp"

using namespace sepcert;

TEST_CASE("barycentric coordinates of vertices and a generic point") {
  auto x1 = to_barycentric(SpectrumVector({1, 0, 0})).values();
  CHECK(x1[0] == doctest::Approx(1.0));
  CHECK(x1[1] == doctest::Approx(0.0));
  CHECK(x1[2] == doctest::Approx(0.0));

  auto x3 = to_barycentric(SpectrumVector({1.0 / 3, 1.0 / 3, 1.0 / 3})).values();
  CHECK(x3[0] == doctest::Approx(0.0));
  CHECK(x3[1] == doctest::Approx(0.0));
  CHECK(x3[2] == doctest::Approx(1.0));

  auto x = to_barycentric(SpectrumVector({0.5, 0.3, 0.2})).values();
  CHECK(x[0] == doctest::Approx(0.2));
  CHECK(x[1] == doctest::Approx(0.2));
  CHECK(x[2] == doctest::Approx(0.6));
}

TEST_CASE("from_barycentric inverts and evaluates closed forms") {
  auto ed = from_barycentric(BarycentricCoords({0, 0, 0, 1})).values();
  for (double v : ed) CHECK(v == doctest::Approx(0.25));

  auto lam = from_barycentric(BarycentricCoords({0.2, 0.2, 0.6})).values();
  CHECK(lam[0] == doctest::Approx(0.5));
  CHECK(lam[1] == doctest::Approx(0.3));
  CHECK(lam[2] == doctest::Approx(0.2));

  auto mix = from_barycentric(BarycentricCoords({0.5, 0.5, 0.0})).values();
  CHECK(mix[0] == doctest::Approx(0.75));
  CHECK(mix[1] == doctest::Approx(0.25));
  CHECK(mix[2] == doctest::Approx(0.0));
}

TEST_CASE("round trip on random simplex points") {
  Rng rng(42);
  for (int d : {3, 4, 6}) {
    for (int i = 0; i < 200; ++i) {
      auto lam = random_spectrum(d, rng);
      auto back = from_barycentric(to_barycentric(lam));
      for (int j = 0; j < d; ++j)
        CHECK(back[static_cast<std::size_t>(j)] ==
              doctest::Approx(lam[static_cast<std::size_t>(j)]).epsilon(1e-12));
    }
  }
}

TEST_CASE("partial sums: vertex equality cases and bounds") {
  for (int d : {3, 4, 6})
    for (int k = 1; k <= d; ++k)
      CHECK(partial_sum(SpectrumVector::vertex(d, d), k) == doctest::Approx(double(k) / d));
  CHECK(partial_sum(SpectrumVector::vertex(5, 1), 1) == doctest::Approx(1.0));
  CHECK(partial_sum(SpectrumVector({0.5, 0.3, 0.2}), 2) == doctest::Approx(0.8));
  CHECK_THROWS_AS(partial_sum(SpectrumVector({0.5, 0.3, 0.2}), 4), std::invalid_argument);
  CHECK_THROWS_AS(partial_sum(SpectrumVector({0.5, 0.3, 0.2}), 0), std::invalid_argument);
}

TEST_CASE("majorization: vertex chain, reflexivity, hand-checked pair") {
  for (int d : {3, 4, 6})
    CHECK(majorizes(SpectrumVector::vertex(d, d), SpectrumVector::vertex(d, 1)));
  SpectrumVector lam({0.4, 0.4, 0.2}), mu({0.5, 0.3, 0.2});
  CHECK(majorizes(lam, lam));
  CHECK(majorizes(lam, mu));
  CHECK_FALSE(majorizes(mu, lam));
  CHECK_THROWS_AS(majorizes(lam, SpectrumVector::vertex(4, 4)), std::invalid_argument);
}

TEST_CASE("gap representation of tau, pure states and a generic spectrum") {
  CompositeDims qq({2, 2});
  auto tau_rep = gap_representation(DensityMatrix::maximally_mixed(qq));
  for (double m : tau_rep.mu) CHECK(m == doctest::Approx(0.0));
  CHECK(tau_rep.tail_weight == doctest::Approx(1.0));

  Vector psi = Vector::Zero(4);
  psi(0) = 1.0;
  auto pure_rep = gap_representation(DensityMatrix::pure(psi, qq));
  CHECK(pure_rep.mu[0] == doctest::Approx(1.0));
  CHECK(pure_rep.mu[1] == doctest::Approx(0.0));
  CHECK(pure_rep.mu[2] == doctest::Approx(0.0));
  CHECK(pure_rep.tail_weight == doctest::Approx(0.0));

  CompositeDims d3({3});
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 0.5;
  m(1, 1) = 0.3;
  m(2, 2) = 0.2;
  auto rep = gap_representation(DensityMatrix::validate(m, d3));
  CHECK(rep.mu[0] == doctest::Approx(0.2));
  CHECK(rep.mu[1] == doctest::Approx(0.2));
  CHECK(rep.tail_weight == doctest::Approx(0.6));
  CHECK(rep.mu[0] + rep.mu[1] == doctest::Approx(1.0 - rep.tail_weight));
}
