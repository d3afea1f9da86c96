#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "sepcert/thermal.hpp"

using namespace sepcert;

namespace {
const CompositeDims kQQ({2, 2});

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index r = 0; r < a.rows(); ++r)
    for (Eigen::Index c = 0; c < a.cols(); ++c)
      out.block(r * b.rows(), c * b.cols(), b.rows(), b.cols()) = a(r, c) * b;
  return out;
}

Hamiltonian heisenberg() {
  Matrix sx(2, 2), sy(2, 2), sz(2, 2);
  sx << 0, 1, 1, 0;
  sy << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
  sz << 1, 0, 0, -1;
  return Hamiltonian(kron(sx, sx) + kron(sy, sy) + kron(sz, sz), kQQ);
}

Hamiltonian diag_h(std::vector<double> d, const CompositeDims& dims) {
  Matrix m = Matrix::Zero(dims.total(), dims.total());
  for (std::size_t j = 0; j < d.size(); ++j) m(j, j) = d[j];
  return Hamiltonian(m, dims);
}
}  // namespace

TEST_CASE("hamiltonian validation") {
  Matrix nh = Matrix::Zero(4, 4);
  nh(0, 1) = 1.0;  // not Hermitian
  CHECK_THROWS_AS(Hamiltonian(nh, kQQ), std::invalid_argument);
  CHECK_THROWS_AS(Hamiltonian(Matrix::Identity(3, 3), kQQ), std::invalid_argument);
}

TEST_CASE("gibbs: beta 0, scalar h, closed-form diagonal example") {
  auto h = diag_h({-1, 1, 1, 1}, kQQ);
  auto tau = gibbs(h, 0.0);
  CHECK((tau.entries() - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() < 1e-14);

  auto scalar = Hamiltonian(2.5 * Matrix::Identity(4, 4), kQQ);
  CHECK((gibbs(scalar, 3.7).entries() - Matrix::Identity(4, 4) / 4.0).cwiseAbs().maxCoeff() <
        1e-12);

  // weights (3, 1/3, 1/3, 1/3), partition sum 4: diag(3, 1/3, 1/3, 1/3) / 4
  auto rho = gibbs(h, std::log(3.0));
  CHECK(rho.entries()(0, 0).real() == doctest::Approx(0.75));
  CHECK(rho.entries()(1, 1).real() == doctest::Approx(1.0 / 12));
}

TEST_CASE("beta_o closed forms and the scalar case") {
  CHECK(beta_o_bound(diag_h({-1, 1, 1, 1}, kQQ)) == doctest::Approx(std::log(1.5) / 2.0));
  CompositeDims qt({2, 3});
  CHECK(beta_o_bound(diag_h({0, 1, 1, 1, 1, 1}, qt)) == doctest::Approx(std::log(4.0 / 3.0)));
  bool inf = false;
  beta_o_bound(Hamiltonian(2.0 * Matrix::Identity(4, 4), kQQ), &inf);
  CHECK(inf);
}

TEST_CASE("product-state energy extrema") {
  Rng rng(41);
  auto eta = eta_extrema(heisenberg(), 16, rng);
  CHECK(eta.eta_minus == doctest::Approx(-1.0).epsilon(1e-8));
  CHECK(eta.eta_plus == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(eta.restarts == 16);
  CHECK(eta.converged_to_min > 0);

  // non-interacting h = a x 1 + 1 x b reaches s_-(a) + s_-(b) on products
  Matrix a(2, 2), b(2, 2);
  a << -0.7, 0.2, 0.2, 0.9;
  b << 0.3, Complex(0, -0.4), Complex(0, 0.4), -0.1;
  Matrix m = kron(a, Matrix::Identity(2, 2)) + kron(Matrix::Identity(2, 2), b);
  auto eta2 = eta_extrema(Hamiltonian(m, kQQ), 16, rng);
  Eigen::SelfAdjointEigenSolver<Matrix> ea(a), eb(b);
  CHECK(eta2.eta_minus ==
        doctest::Approx(ea.eigenvalues().minCoeff() + eb.eigenvalues().minCoeff()).epsilon(1e-8));

  // products are states: eta bounded by the full spectral range
  Eigen::SelfAdjointEigenSolver<Matrix> eh(heisenberg().entries());
  CHECK(eta.eta_minus >= eh.eigenvalues().minCoeff() - 1e-9);
  CHECK(eta.eta_plus <= eh.eigenvalues().maxCoeff() + 1e-9);
}

TEST_CASE("thermal energy is strictly decreasing for non-scalar h") {
  auto h = heisenberg();
  double prev = thermal_energy(h, -1.0);
  for (int k = 1; k <= 20; ++k) {
    const double cur = thermal_energy(h, -1.0 + 0.1 * k);
    CHECK(cur < prev);
    prev = cur;
  }
  CHECK(thermal_energy(h, 0.0) == doctest::Approx(0.0));  // tau(h) = tr(h)/4
}

TEST_CASE("Toth bounds on the Heisenberg model") {
  auto h = heisenberg();
  Rng rng(43);
  auto eta = eta_extrema(h, 16, rng);
  ThermalWindow w;
  w.beta_o = beta_o_bound(h);
  w.eta_minus = eta.eta_minus;
  w.eta_plus = eta.eta_plus;
  w = toth_bounds(h, w);
  REQUIRE(w.beta_minus_toth.has_value());
  CHECK(*w.beta_minus_toth == doctest::Approx(std::log(3.0) / 4.0).epsilon(1e-7));
  // top of the spectrum is the (separable) triplet projector: no beta_+
  CHECK_FALSE(w.beta_plus_toth.has_value());
  CHECK(w.beta_o == doctest::Approx(std::log(1.5) / 4.0));
  CHECK(w.beta_o <= *w.beta_minus_toth);
}

TEST_CASE("non-interacting h: ground state is a product, no Toth root") {
  Matrix a = Matrix::Zero(2, 2);
  a(0, 0) = -1.0;
  a(1, 1) = 1.0;
  Matrix m = kron(a, Matrix::Identity(2, 2)) + kron(Matrix::Identity(2, 2), a);
  auto h = Hamiltonian(m, kQQ);
  Rng rng(47);
  auto eta = eta_extrema(h, 8, rng);
  ThermalWindow w;
  w.eta_minus = eta.eta_minus;
  w.eta_plus = eta.eta_plus;
  w = toth_bounds(h, w);
  CHECK_FALSE(w.beta_minus_toth.has_value());
  CHECK_FALSE(w.beta_plus_toth.has_value());
}

TEST_CASE("exact PPT transition scan") {
  auto bc = exact_beta_c_scan(heisenberg(), 2.0, 1e-9);
  REQUIRE(bc.has_value());
  CHECK(*bc == doctest::Approx(std::log(3.0) / 4.0).epsilon(1e-7));

  // commuting product-basis h: thermal states stay diagonal, never NPT
  Matrix sz(2, 2);
  sz << 1, 0, 0, -1;
  auto zz = Hamiltonian(kron(sz, sz), kQQ);
  bool reentrant = true;
  CHECK_FALSE(exact_beta_c_scan(zz, 3.0, 1e-9, 200, &reentrant).has_value());
  CHECK_FALSE(reentrant);

  CHECK_THROWS_AS(exact_beta_c_scan(Hamiltonian(Matrix::Identity(9, 9), CompositeDims({3, 3})),
                                    1.0, 1e-9),
                  std::invalid_argument);
}

TEST_CASE("majorization chain in beta") {
  CHECK(uhlmann_wehrl_check(heisenberg(), {0.0, 0.1, 0.5, 2.0}));
  CHECK(uhlmann_wehrl_check(Hamiltonian(Matrix::Identity(4, 4), kQQ), {0.0, 1.0, 2.0}));
  Rng rng(53);
  Matrix g(4, 4);
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) g(r, c) = rng.complex_gaussian();
  auto h = Hamiltonian(0.5 * (g + g.adjoint().eval()), kQQ);
  std::vector<double> betas;
  for (int k = 0; k < 20; ++k) betas.push_back(0.15 * k);
  CHECK(uhlmann_wehrl_check(h, betas));
}
