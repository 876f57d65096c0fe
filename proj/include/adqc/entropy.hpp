// entropy.hpp
// Density matrices, correlation and entropy measures, and the binary-entropy
// bound functions f, g together with their bisection inverses.

#pragma once

#include "adqc/linalg.hpp"
#include "adqc/qcore.hpp"

#include <array>
#include <optional>
#include <stdexcept>

namespace adqc {

inline constexpr double kDensityTolerance = 1e-10;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Validated density matrix over 1..4 qubits.
///
/// Construction checks Hermiticity, unit trace and positivity (all within
/// 1e-10), symmetrizes the matrix and caches its spectrum with eigenvalues
/// in [-1e-10, 0) clamped to zero and renormalized to sum to one.
class DensityMatrix {
 public:
  explicit DensityMatrix(const ComplexMatrix& m);

  static DensityMatrix from_pure(const PureState& psi);
  /// Reduced state of `psi` on `keep`.
  static DensityMatrix reduced(const PureState& psi, const QubitList& keep);

  int qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return matrix_.rows(); }
  const ComplexMatrix& matrix() const { return matrix_; }
  /// Ascending, clamped, renormalized spectrum.
  const RealVector& spectrum() const { return spectrum_; }

 private:
  int n_qubits_;
  ComplexMatrix matrix_;
  RealVector spectrum_;
};

struct EntanglementReport {
  std::optional<double> purity_S;        // single-qubit reports only
  double von_neumann = 0.0;              // S_v (one qubit) or S_v2 (two qubits)
  double correlator = 0.0;               // C_z or C_zz
  std::optional<double> bloch_length_r;  // single-qubit reports only
};

/// 2(1 - Tr rho^2) for a single-qubit state.
double purity_entanglement(const DensityMatrix& rho);

/// -Tr(rho log2 rho) with 0 log 0 = 0.
double von_neumann(const DensityMatrix& rho);

/// Tr(rho O) for a Hermitian observable.
double correlator(const DensityMatrix& rho, const ComplexMatrix& observable);

/// (Tr rho X, Tr rho Y, Tr rho Z).
std::array<double, 3> bloch_vector(const DensityMatrix& rho);
double bloch_length(const DensityMatrix& rho);

/// C_z = Tr(rho Z) for one qubit, C_zz = Tr(rho Z (x) Z) for two.
double z_correlator(const DensityMatrix& rho);

EntanglementReport single_qubit_report(const DensityMatrix& rho);
EntanglementReport two_qubit_report(const DensityMatrix& rho);

/// x log2 x with the 0 log 0 = 0 convention.
double xlog2x(double x);

/// Binary entropy of the pair ((1+x)/2, (1-x)/2); decreasing on [0, 1].
double f(double c);
/// -((1+x)/2) log2((1+x)/4) - ((1-x)/2) log2((1-x)/4); equals 1 + f(x).
double g(double c);

/// Unique c in [0,1] with f(c) = s, by bisection.
double f_inverse(double s);
/// Unique c in [0,1] with g(c) = s for s in [1,2]. Values below 1 lie outside
/// the range of g and throw DomainError.
double g_inverse(double s);

}  // namespace adqc
