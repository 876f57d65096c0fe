#include "adqc/linalg.hpp"
#include "adqc/qcore.hpp"
#include "oracle.hpp"
#include "test_util.hpp"

#include <gtest/gtest.h>

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <numbers>

using namespace adqc;
using testing_util::ket;
using testing_util::MatrixNear;

namespace {

ComplexMatrix pauli_z() { return gate(GateName::Z); }

ComplexVector ghz3() {
  const double r = std::numbers::sqrt2 / 2.0;
  ComplexVector v = ComplexVector::Zero(8);
  v(0) = r;
  v(7) = r;
  return v;
}

}  // namespace

TEST(Kron, ZTensorZIsDiagonalSigns) {
  ComplexMatrix expected = ComplexMatrix::Zero(4, 4);
  expected.diagonal() << 1, -1, -1, 1;
  EXPECT_TRUE(MatrixNear(kron(pauli_z(), pauli_z()), expected, 0.0));
}

TEST(Kron, IdentityTensorIdentity) {
  const ComplexMatrix id = ComplexMatrix::Identity(2, 2);
  EXPECT_TRUE(MatrixNear(kron(id, id), ComplexMatrix::Identity(4, 4), 0.0));
}

TEST(Kron, HadamardPairOnZeroZero) {
  // Expected from multiplying out the 4x4 matrix by hand: every entry of
  // H (x) H is +-1/2 and its first column is all +1/2.
  const ComplexMatrix hh = kron(gate(GateName::H), gate(GateName::H));
  const ComplexVector out = hh * ket({1, 0, 0, 0});
  EXPECT_TRUE(MatrixNear(out, ket({0.5, 0.5, 0.5, 0.5}), 1e-15));
}

TEST(Kron, EntryLayout) {
  ComplexMatrix a(2, 3), b(3, 2);
  a << 1, 2, 3, 4, 5, 6;
  b << 1, Complex(0, 1), 2, 3, 4, 5;
  const ComplexMatrix k = kron(a, b);
  ASSERT_EQ(k.rows(), 6);
  ASSERT_EQ(k.cols(), 6);
  for (int i1 = 0; i1 < 2; ++i1)
    for (int j1 = 0; j1 < 3; ++j1)
      for (int i2 = 0; i2 < 3; ++i2)
        for (int j2 = 0; j2 < 2; ++j2) EXPECT_EQ(k(i1 * 3 + i2, j1 * 2 + j2), a(i1, j1) * b(i2, j2));
}

TEST(Kron, AssociativeOnRandomMatrices) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const ComplexMatrix a = testing_util::random_hermitian(2, rng);
    const ComplexMatrix b = testing_util::random_unitary(2, rng);
    const ComplexMatrix c = testing_util::random_hermitian(4, rng);
    EXPECT_TRUE(MatrixNear(kron(kron(a, b), c), kron(a, kron(b, c)), 1e-12));
  }
}

TEST(PartialTrace, BellQubitZeroIsMaximallyMixed) {
  const double r = std::numbers::sqrt2 / 2.0;
  const ComplexMatrix rho = partial_trace(ket({r, 0, 0, r}), {0});
  EXPECT_TRUE(MatrixNear(rho, ComplexMatrix::Identity(2, 2) / 2.0, 1e-15));
}

TEST(PartialTrace, ProductStateKeepsPlus) {
  const double r = std::numbers::sqrt2 / 2.0;
  // |0> (x) |+>
  const ComplexMatrix rho = partial_trace(ket({r, r, 0, 0}), {1});
  const ComplexVector plus = ket({r, r});
  EXPECT_TRUE(MatrixNear(rho, plus * plus.adjoint(), 1e-15));
}

TEST(PartialTrace, GhzPairMatchesBruteForceSum) {
  const ComplexVector psi = ghz3();
  const ComplexMatrix full = psi * psi.adjoint();
  const ComplexMatrix expected = oracle::reduce(full, {0, 1}, 3);
  // (|00><00| + |11><11|)/2
  ComplexMatrix literal = ComplexMatrix::Zero(4, 4);
  literal(0, 0) = literal(3, 3) = 0.5;
  EXPECT_TRUE(MatrixNear(expected, literal, 1e-15));
  EXPECT_TRUE(MatrixNear(partial_trace(psi, {0, 1}), literal, 1e-15));
  EXPECT_TRUE(MatrixNear(partial_trace(full, {0, 1}), literal, 1e-15));
}

TEST(PartialTrace, AgreesWithOracleInRequestedOrder) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexVector psi = random_pure_state(4, seed).amplitudes();
    const ComplexMatrix full = psi * psi.adjoint();
    for (const QubitList& keep : {QubitList{2}, QubitList{3, 0}, QubitList{1, 2, 0}}) {
      const ComplexMatrix expected = oracle::reduce(full, keep, 4);
      EXPECT_TRUE(MatrixNear(partial_trace(psi, keep), expected, 1e-13));
      EXPECT_TRUE(MatrixNear(partial_trace(full, keep), expected, 1e-13));
    }
  }
}

TEST(PartialTrace, KeepingEverythingIsIdentityAndTracePreserved) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const ComplexVector psi = random_pure_state(3, seed).amplitudes();
    const ComplexMatrix rho = psi * psi.adjoint();
    EXPECT_TRUE(MatrixNear(partial_trace(rho, {0, 1, 2}), rho, 1e-15));
    for (const QubitList& keep : {QubitList{0}, QubitList{2, 1}}) {
      EXPECT_NEAR(partial_trace(rho, keep).trace().real(), rho.trace().real(), 1e-12);
    }
  }
}

TEST(PartialTrace, SchmidtSymmetry) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ComplexVector psi = random_pure_state(4, 100 + seed).amplitudes();
    const RealVector a = hermitian_eigenvalues(partial_trace(psi, {0}));
    const RealVector b = hermitian_eigenvalues(partial_trace(psi, {1, 2, 3}));
    // The larger side carries extra zeros; compare the top of both spectra.
    for (Eigen::Index k = 0; k < a.size(); ++k) {
      EXPECT_NEAR(a(a.size() - 1 - k), b(b.size() - 1 - k), 1e-10);
    }
    for (Eigen::Index k = 0; k < b.size() - a.size(); ++k) EXPECT_NEAR(b(k), 0.0, 1e-10);
  }
}

TEST(PartialTrace, RejectsBadIndices) {
  const ComplexVector psi = ghz3();
  EXPECT_THROW(partial_trace(psi, {3}), LinalgError);
  EXPECT_THROW(partial_trace(psi, {-1}), LinalgError);
  EXPECT_THROW(partial_trace(psi, {1, 1}), LinalgError);
  EXPECT_THROW(partial_trace(ComplexVector(ComplexVector::Zero(3)), {0}), LinalgError);
}

TEST(HermitianEigenvalues, PauliX) {
  const RealVector ev = hermitian_eigenvalues(gate(GateName::X));
  EXPECT_NEAR(ev(0), -1.0, 1e-14);
  EXPECT_NEAR(ev(1), 1.0, 1e-14);
}

TEST(HermitianEigenvalues, DiagonalIsSorted) {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 3.0;
  d(1, 1) = 1.0;
  const RealVector ev = hermitian_eigenvalues(d);
  EXPECT_EQ(ev(0), 1.0);
  EXPECT_EQ(ev(1), 3.0);
}

TEST(HermitianEigenvalues, GhzReducedPair) {
  const RealVector ev = hermitian_eigenvalues(partial_trace(ghz3(), {0, 1}));
  ASSERT_EQ(ev.size(), 4);
  EXPECT_NEAR(ev(0), 0.0, 1e-14);
  EXPECT_NEAR(ev(1), 0.0, 1e-14);
  EXPECT_NEAR(ev(2), 0.5, 1e-14);
  EXPECT_NEAR(ev(3), 0.5, 1e-14);
}

TEST(HermitianEigenvalues, RecoversDiagonalOfConjugatedMatrix) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> uni(-3.0, 3.0);
  for (Eigen::Index dim : {2, 3, 4, 8, 16}) {
    for (int trial = 0; trial < 5; ++trial) {
      RealVector d(dim);
      for (Eigen::Index i = 0; i < dim; ++i) d(i) = uni(rng);
      const ComplexMatrix u = testing_util::random_unitary(dim, rng);
      const ComplexMatrix m = u * d.cast<Complex>().asDiagonal() * u.adjoint();
      RealVector sorted = d;
      std::sort(sorted.data(), sorted.data() + dim);
      const RealVector ev = hermitian_eigenvalues(m);
      EXPECT_LE((ev - sorted).cwiseAbs().maxCoeff(), 1e-10) << "dim " << dim;
      EXPECT_NEAR(ev.sum(), m.trace().real(), 1e-10);
    }
  }
}

TEST(HermitianEigensystem, AgreesWithEigenSelfAdjointSolver) {
  std::mt19937_64 rng(9);
  for (Eigen::Index dim : {2, 4, 7, 16}) {
    const ComplexMatrix m = testing_util::random_hermitian(dim, rng);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> reference(m);
    const auto sys = hermitian_eigensystem(m);
    EXPECT_LE((sys.values - reference.eigenvalues()).cwiseAbs().maxCoeff(), 1e-10);
    // Columns are eigenvectors and form a unitary.
    EXPECT_TRUE(MatrixNear(sys.vectors.adjoint() * sys.vectors, ComplexMatrix::Identity(dim, dim), 1e-12));
    EXPECT_TRUE(MatrixNear(m * sys.vectors, sys.vectors * sys.values.cast<Complex>().asDiagonal(), 1e-10));
  }
}

TEST(HermitianEigenvalues, Rejections) {
  ComplexMatrix nonherm(2, 2);
  nonherm << 1, 2, 0, 1;
  EXPECT_THROW(hermitian_eigenvalues(nonherm), LinalgError);
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix(ComplexMatrix::Identity(32, 32))), LinalgError);
  EXPECT_THROW(hermitian_eigenvalues(ComplexMatrix(ComplexMatrix::Zero(2, 3))), LinalgError);
}

TEST(PhaseAlignedDistance, IgnoresGlobalPhaseOnly) {
  const ComplexVector a = ket({0.6, Complex(0, 0.8)});
  const ComplexVector b = std::exp(Complex(0, 1.3)) * a;
  EXPECT_NEAR(phase_aligned_distance(a, b), 0.0, 1e-15);
  EXPECT_NEAR(phase_invariant_overlap(a, b), 1.0, 1e-15);
  EXPECT_GT(phase_aligned_distance(a, ket({0.8, Complex(0, 0.6)})), 0.1);
}
