// protocols.hpp
// Measurement-driven gate protocols (one-way elementary rotation and the
// ancilla-driven rotations / two-qubit gates) with deviated measurements,
// their mean gate fidelity and the entanglement-based fidelity bounds.

#pragma once

#include "adqc/entropy.hpp"
#include "adqc/qcore.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace adqc {

enum class ProtocolKind {
  OnewayRotation,
  AdqcRotationCz,
  AdqcRotationCzSwap,
  AdqcCzGate,
  AdqcCzSwapGate,
};

inline constexpr std::array<ProtocolKind, 5> kAllProtocols = {
    ProtocolKind::OnewayRotation, ProtocolKind::AdqcRotationCz, ProtocolKind::AdqcRotationCzSwap,
    ProtocolKind::AdqcCzGate, ProtocolKind::AdqcCzSwapGate};

/// Canonical names: ONEWAY_ROTATION, ADQC_ROTATION_CZ, ADQC_ROTATION_CZSWAP,
/// ADQC_CZ_GATE, ADQC_CZSWAP_GATE.
std::string_view protocol_name(ProtocolKind kind);
ProtocolKind parse_protocol(std::string_view name);
bool is_rotation(ProtocolKind kind);

/// Which byproduct error a protocol suffers: X on one qubit or Z(x)Z on a pair.
enum class ErrorKind { XType, ZZType };
ErrorKind error_kind(ProtocolKind kind);

struct ProtocolSpec {
  ProtocolKind kind = ProtocolKind::AdqcRotationCz;
  QubitList targets;
  std::optional<double> u;
  double epsilon = 0.0;
  double delta = 0.0;

  static ProtocolSpec rotation(ProtocolKind kind, int target, double u, double epsilon,
                               double delta);
  static ProtocolSpec two_qubit(ProtocolKind kind, int first, int second, double epsilon,
                                double delta);

  /// Throws LinalgError when the target/u layout does not match the kind.
  void validate(int register_qubits) const;
};

struct ProtocolBranch {
  PureState ideal;  // normalized output for an accurate measurement
  double ideal_probability = 0.0;
  ComplexVector inaccurate;  // unnormalized output for the deviated measurement
};

struct ProtocolResult {
  std::array<ProtocolBranch, 2> branches;
  int register_qubits = 0;
};

/// Register plus ancilla (last qubit) right before the measurement, for
/// protocols that measure the ancilla. The one-way rotation measures a
/// register qubit instead; its pre-measurement state has the same layout.
ComplexVector pre_measurement_state(const PureState& input, const ProtocolSpec& spec);

ProtocolResult run_protocol(const PureState& input, const ProtocolSpec& spec);

/// Sum_j |<ideal_j | inaccurate_j>|^2.
double mean_gate_fidelity(const ProtocolResult& result);

/// cos^2(e/2) + c^2 sin^2(e/2).
double closed_form_fidelity(double correlator, double epsilon);

/// cos(e/2) + (-1)^j P e^{(-1)^j i d} sin(e/2) with P = X or Z(x)Z.
ComplexMatrix error_operator(ErrorKind kind, int outcome, double epsilon, double delta);

/// Qubits the byproduct error acts on in the output register.
QubitList error_qubits(const ProtocolSpec& spec);

/// Raised by bound_sv2 for S_v2 < 1, where no bound on |C_zz| follows from S_v2.
class BoundDomainError : public DomainError {
 public:
  using DomainError::DomainError;
};

double bound_purity(double S, double epsilon);
double bound_sv(double sv, double epsilon);
double bound_sv2(double sv2, double epsilon);

struct BoundValue {
  std::string name;  // purity_bound, sv_bound, sv2_bound
  double value = 0.0;
  double slack = 0.0;  // bound - F
};

struct Violation {
  std::string bound;
  double magnitude = 0.0;
};

struct FidelityReport {
  ProtocolSpec spec;
  std::array<double, 2> branch_probabilities{};
  double simulated_F = 0.0;
  double closed_form_F = 0.0;
  double correlator_used = 0.0;
  QubitList analyzed_qubits;  // qubits of the input whose reduced state feeds the bounds
  EntanglementReport entanglement;
  std::vector<BoundValue> bounds;
  std::vector<Violation> violations;
  std::optional<std::string> domain_note;  // set when S_v2 < 1
};

inline constexpr double kViolationTolerance = 1e-9;

FidelityReport analyze(const PureState& input, const ProtocolSpec& spec);

}  // namespace adqc
