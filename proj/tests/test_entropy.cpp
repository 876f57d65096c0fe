#include "adqc/entropy.hpp"
#include "adqc/verify.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace adqc;
using testing_util::ket;

namespace {

const double kR = std::numbers::sqrt2 / 2.0;

DensityMatrix diag_rho(std::initializer_list<double> d) {
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d.size()), static_cast<Eigen::Index>(d.size()));
  Eigen::Index i = 0;
  for (double x : d) {
    m(i, i) = x;
    ++i;
  }
  return DensityMatrix(m);
}

DensityMatrix projector(const ComplexVector& v) { return DensityMatrix(v * v.adjoint()); }

}  // namespace

TEST(DensityMatrixType, ValidatesInputs) {
  ComplexMatrix not_hermitian(2, 2);
  not_hermitian << 0.5, 0.1, 0.0, 0.5;
  EXPECT_THROW(DensityMatrix{not_hermitian}, DomainError);
  EXPECT_THROW(diag_rho({0.7, 0.7}), DomainError);
  EXPECT_THROW(diag_rho({1.2, -0.2}), DomainError);
  EXPECT_THROW(diag_rho({0.5, 0.25, 0.25}), LinalgError);
  EXPECT_THROW(DensityMatrix(ComplexMatrix(ComplexMatrix::Identity(32, 32) / 32.0)), DomainError);
  EXPECT_NO_THROW(diag_rho({1.0 + 1e-11, -1e-11}));
}

TEST(DensityMatrixType, ClampsTinyNegativeEigenvalues) {
  const DensityMatrix rho = diag_rho({1.0 + 5e-11, -5e-11});
  EXPECT_GE(rho.spectrum().minCoeff(), 0.0);
  EXPECT_NEAR(rho.spectrum().sum(), 1.0, 1e-15);
}

TEST(PurityEntanglement, Examples) {
  EXPECT_NEAR(purity_entanglement(diag_rho({0.5, 0.5})), 1.0, 1e-15);
  EXPECT_NEAR(purity_entanglement(diag_rho({1.0, 0.0})), 0.0, 1e-15);
  EXPECT_NEAR(purity_entanglement(diag_rho({0.9, 0.1})), 0.36, 1e-12);
  EXPECT_THROW(purity_entanglement(diag_rho({0.25, 0.25, 0.25, 0.25})), DomainError);
}

TEST(VonNeumann, Examples) {
  EXPECT_NEAR(von_neumann(diag_rho({0.25, 0.25, 0.25, 0.25})), 2.0, 1e-12);
  EXPECT_NEAR(von_neumann(diag_rho({0.9, 0.1})), 0.4690, 1e-3);
  EXPECT_NEAR(von_neumann(rho_lambda(0.3)), 0.8813, 1e-3);
  EXPECT_NEAR(von_neumann(diag_rho({0.9, 0.1})), oracle::shannon({0.9, 0.1}), 1e-12);
  EXPECT_NEAR(von_neumann(diag_rho({1.0, 0.0})), 0.0, 0.0);
}

TEST(VonNeumann, MatchesShannonOfOracleSpectrumAndStaysInRange) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const DensityMatrix rho = random_density_matrix(2, seed);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix());
    std::vector<double> p(es.eigenvalues().data(), es.eigenvalues().data() + 4);
    for (double& x : p) x = std::max(x, 0.0);
    const double sv = von_neumann(rho);
    EXPECT_NEAR(sv, oracle::shannon(p), 1e-10);
    EXPECT_GE(sv, -1e-10);
    EXPECT_LE(sv, 2.0 + 1e-10);
  }
}

TEST(Correlator, Examples) {
  EXPECT_NEAR(correlator(projector(ket({kR, kR})), gate(GateName::Z)), 0.0, 1e-15);
  const DensityMatrix bell = projector(ket({kR, 0, 0, kR}));
  const ComplexMatrix zz = kron(gate(GateName::Z), gate(GateName::Z));
  EXPECT_NEAR(correlator(bell, zz), 1.0, 1e-15);
  for (double lambda : {0.0, 0.1, 0.3, 0.5, 0.77, 1.0}) {
    EXPECT_EQ(correlator(rho_lambda(lambda), zz), 1.0) << lambda;
    EXPECT_EQ(z_correlator(rho_lambda(lambda)), 1.0) << lambda;
  }
}

TEST(Correlator, Rejections) {
  const DensityMatrix bell = projector(ket({kR, 0, 0, kR}));
  EXPECT_THROW(correlator(bell, gate(GateName::Z)), LinalgError);
  ComplexMatrix non_hermitian = ComplexMatrix::Zero(4, 4);
  non_hermitian(0, 1) = 1.0;
  EXPECT_THROW(correlator(bell, non_hermitian), LinalgError);
}

TEST(SingleQubitReport, BlochIdentityAndPurity) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const DensityMatrix rho = random_density_matrix(1, seed);
    const auto rep = single_qubit_report(rho);
    ASSERT_TRUE(rep.purity_S.has_value());
    ASSERT_TRUE(rep.bloch_length_r.has_value());
    const ComplexMatrix& m = rho.matrix();
    const double direct_S = 2.0 * (1.0 - (m * m).trace().real());
    EXPECT_NEAR(*rep.purity_S, direct_S, 1e-12);
    const auto b = bloch_vector(rho);
    EXPECT_NEAR(1.0 - *rep.purity_S, b[0] * b[0] + b[1] * b[1] + b[2] * b[2], 1e-10);
    EXPECT_NEAR(*rep.bloch_length_r, std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]), 1e-12);
    EXPECT_EQ(rep.correlator, b[2]);
  }
}

TEST(TwoQubitReport, OmitsSingleQubitFields) {
  const auto rep = two_qubit_report(rho_lambda(0.3));
  EXPECT_FALSE(rep.purity_S.has_value());
  EXPECT_FALSE(rep.bloch_length_r.has_value());
  EXPECT_EQ(rep.correlator, 1.0);
  EXPECT_THROW(two_qubit_report(diag_rho({0.5, 0.5})), DomainError);
}

TEST(BoundFunctions, Examples) {
  EXPECT_EQ(f(0.0), 1.0);
  EXPECT_EQ(f(1.0), 0.0);
  EXPECT_NEAR(f(0.5), 0.8113, 1e-4);
  EXPECT_NEAR(f(0.5), oracle::shannon({0.75, 0.25}), 1e-15);
  EXPECT_EQ(g(0.0), 2.0);
  EXPECT_EQ(g(1.0), 1.0);
  EXPECT_NEAR(g(0.5), 1.8113, 1e-4);
  EXPECT_NEAR(g(0.5), 1.0 + f(0.5), 1e-12);
}

TEST(BoundFunctions, InverseExamples) {
  EXPECT_EQ(f_inverse(1.0), 0.0);
  EXPECT_EQ(f_inverse(0.0), 1.0);
  EXPECT_NEAR(f_inverse(0.4690), 0.8, 1e-3);
  EXPECT_EQ(g_inverse(2.0), 0.0);
  EXPECT_EQ(g_inverse(1.0), 1.0);
  EXPECT_NEAR(g_inverse(1.8113), 0.5, 1e-3);
}

TEST(BoundFunctions, DomainErrors) {
  EXPECT_THROW(f(-0.1), DomainError);
  EXPECT_THROW(f(1.1), DomainError);
  EXPECT_THROW(g(1.5), DomainError);
  EXPECT_THROW(f_inverse(1.5), DomainError);
  EXPECT_THROW(g_inverse(0.5), DomainError);
  EXPECT_THROW(g_inverse(0.999), DomainError);
  EXPECT_THROW(g_inverse(2.1), DomainError);
  EXPECT_THROW(f(std::nan("")), DomainError);
}

TEST(BoundFunctions, StrictlyDecreasingAndGIsOnePlusF) {
  double prev_f = f(0.0);
  for (int i = 1; i <= 1000; ++i) {
    const double x = i / 1000.0;
    EXPECT_LT(f(x), prev_f) << x;
    prev_f = f(x);
    EXPECT_NEAR(g(x), 1.0 + f(x), 1e-12) << x;
  }
}

TEST(BoundFunctions, RoundTripsOnDenseGrids) {
  for (int i = 0; i <= 1000; ++i) {
    const double s = i / 1000.0;
    EXPECT_LE(std::abs(f(f_inverse(s)) - s), 1e-9) << s;
    EXPECT_LE(std::abs(g(g_inverse(1.0 + s)) - (1.0 + s)), 1e-9) << s;
  }
}

TEST(BoundFunctions, InverseCurvesNondecreasing) {
  double prev_f = -1.0;
  double prev_g = -1.0;
  for (int i = 0; i <= 1000; ++i) {
    const double s = i / 1000.0;
    const double cf = 1.0 - f_inverse(s) * f_inverse(s);
    const double cg = 1.0 - g_inverse(1.0 + s) * g_inverse(1.0 + s);
    EXPECT_GE(cf, prev_f) << s;
    EXPECT_GE(cg, prev_g) << s;
    prev_f = cf;
    prev_g = cg;
  }
}

TEST(EntropyInequalities, HoldForRandomStates) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const DensityMatrix rho1 = random_density_matrix(1, 10'000 + seed);
    const auto rep = single_qubit_report(rho1);
    EXPECT_LE(rep.correlator * rep.correlator, 1.0 - *rep.purity_S + 1e-12);
    EXPECT_LE(rep.von_neumann, f(std::abs(rep.correlator)) + 1e-10);

    const DensityMatrix rho2 = random_density_matrix(2, 20'000 + seed);
    EXPECT_LE(von_neumann(rho2), g(std::abs(z_correlator(rho2))) + 1e-10);
  }
}
