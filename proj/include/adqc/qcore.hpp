// qcore.hpp
// Qubit states, the gate set used by measurement-driven protocols, deviated
// single-qubit measurement bases and measurement branch extraction.

#pragma once

#include "adqc/linalg.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <string_view>

namespace adqc {

inline constexpr double kNormTolerance = 1e-12;

/// Normalized amplitude vector over 1..8 qubits.
class PureState {
 public:
  /// Throws LinalgError unless the squared norm is 1 within 1e-12.
  explicit PureState(ComplexVector amplitudes);

  /// Rescales to unit norm; throws on a zero vector.
  static PureState normalized(const ComplexVector& amplitudes);
  /// Computational basis state |index> on n qubits.
  static PureState basis(int n_qubits, std::uint64_t index);

  int qubits() const { return n_qubits_; }
  Eigen::Index dim() const { return amplitudes_.size(); }
  const ComplexVector& amplitudes() const { return amplitudes_; }
  Complex operator[](Eigen::Index i) const { return amplitudes_(i); }

 private:
  int n_qubits_;
  ComplexVector amplitudes_;
};

/// Ordered orthonormal pair of single-qubit vectors; outcome j projects on vector(j).
struct MeasurementBasis {
  ComplexVector plus;
  ComplexVector minus;
  std::optional<double> u;
  double epsilon = 0.0;
  double delta = 0.0;

  const ComplexVector& vector(int outcome) const { return outcome == 0 ? plus : minus; }
};

/// Unnormalized post-measurement state for one outcome.
struct BranchState {
  int outcome = 0;
  ComplexVector vector;
  double probability = 0.0;
};

enum class GateName { X, Y, Z, H, I, CZ, SWAP, CZSWAP, E_CZ };

/// Exact unitary for a named gate. E_CZ is (H (x) H) CZ.
ComplexMatrix gate(GateName name);
/// Accepts "X", "Y", "Z", "H", "1" (or "I"), "CZ", "SWAP", "CZSWAP", "E_CZ".
GateName parse_gate_name(std::string_view name);

/// H * diag(e^{iu/2}, e^{-iu/2}).
ComplexMatrix j_gate(double u);

/// (|0> + s e^{iu}|1>)/sqrt(2) for s = +1 / -1.
ComplexVector u_plus(double u);
ComplexVector u_minus(double u);

/// Ideal u-basis tilted by polar angle epsilon and relative phase delta.
MeasurementBasis deviated_u_basis(double u, double epsilon, double delta);
/// Computational basis tilted the same way: |0~> = cos(e/2)|0> + sin(e/2)e^{-i d}|1>.
MeasurementBasis deviated_z_basis(double epsilon, double delta);

/// Applies `op` on `targets`; the first target is the most significant index of op.
/// Works on unnormalized vectors and non-unitary operators.
ComplexVector apply_operator(const ComplexVector& state, const ComplexMatrix& op,
                             const QubitList& targets);
PureState apply_gate(const PureState& state, const ComplexMatrix& op, const QubitList& targets);

/// Projects `qubit` onto each basis vector and removes it from the register.
/// Qubits above `qubit` shift down by one. Measuring a lone qubit leaves a
/// one-entry vector holding the outcome amplitude.
std::array<BranchState, 2> measure_branch(const ComplexVector& state, int qubit,
                                          const MeasurementBasis& basis);
std::array<BranchState, 2> measure_branch(const PureState& state, int qubit,
                                          const MeasurementBasis& basis);

/// Inserts a single-qubit vector at position `position` of `rest`, i.e. the
/// inverse of removing that qubit.
ComplexVector insert_qubit(const ComplexVector& rest, const ComplexVector& single, int position);

/// Moves qubit `from` to position `to`, shifting the qubits in between.
ComplexVector move_qubit(const ComplexVector& state, int from, int to);

// Seeds are split per sample with a SplitMix64 finalizer so sample i of a
// campaign is reproducible on its own and independent of execution order.
std::uint64_t mix_seed(std::uint64_t x);
std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index);

using Rng = std::mt19937_64;

/// Haar-random state: i.i.d. standard complex Gaussians, normalized.
PureState random_pure_state(int n_qubits, Rng& rng);
PureState random_pure_state(int n_qubits, std::uint64_t seed);

}  // namespace adqc
