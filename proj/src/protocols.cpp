#include "adqc/protocols.hpp"

#include <cmath>
#include <numbers>

namespace adqc {

namespace {

ComplexVector plus_state() {
  ComplexVector v(2);
  v << std::numbers::sqrt2 / 2.0, std::numbers::sqrt2 / 2.0;
  return v;
}

int measured_qubit(const ProtocolSpec& spec, int register_qubits) {
  return spec.kind == ProtocolKind::OnewayRotation ? spec.targets[0] : register_qubits;
}

MeasurementBasis protocol_basis(const ProtocolSpec& spec, double epsilon, double delta) {
  if (is_rotation(spec.kind)) return deviated_u_basis(*spec.u, epsilon, delta);
  return deviated_z_basis(epsilon, delta);
}

// Measures the prepared state and returns the two register branches.
std::array<ComplexVector, 2> measure_outputs(const ComplexVector& pre, const ProtocolSpec& spec,
                                             int register_qubits, double epsilon, double delta) {
  const int measured = measured_qubit(spec, register_qubits);
  auto branches = measure_branch(pre, measured, protocol_basis(spec, epsilon, delta));
  std::array<ComplexVector, 2> out;
  for (int j = 0; j < 2; ++j) {
    out[j] = std::move(branches[j].vector);
    if (spec.kind == ProtocolKind::OnewayRotation) {
      // The ancilla, now last, carries the measured qubit's logical state.
      out[j] = move_qubit(out[j], register_qubits - 1, spec.targets[0]);
    }
  }
  return out;
}

}  // namespace

std::string_view protocol_name(ProtocolKind kind) {
  switch (kind) {
    case ProtocolKind::OnewayRotation:
      return "ONEWAY_ROTATION";
    case ProtocolKind::AdqcRotationCz:
      return "ADQC_ROTATION_CZ";
    case ProtocolKind::AdqcRotationCzSwap:
      return "ADQC_ROTATION_CZSWAP";
    case ProtocolKind::AdqcCzGate:
      return "ADQC_CZ_GATE";
    case ProtocolKind::AdqcCzSwapGate:
      return "ADQC_CZSWAP_GATE";
  }
  return "UNKNOWN";
}

ProtocolKind parse_protocol(std::string_view name) {
  for (ProtocolKind kind : kAllProtocols) {
    if (protocol_name(kind) == name) return kind;
  }
  throw LinalgError("unknown protocol '" + std::string(name) + "'");
}

bool is_rotation(ProtocolKind kind) {
  return kind == ProtocolKind::OnewayRotation || kind == ProtocolKind::AdqcRotationCz ||
         kind == ProtocolKind::AdqcRotationCzSwap;
}

ErrorKind error_kind(ProtocolKind kind) {
  return kind == ProtocolKind::AdqcCzSwapGate ? ErrorKind::ZZType : ErrorKind::XType;
}

ProtocolSpec ProtocolSpec::rotation(ProtocolKind kind, int target, double u, double epsilon,
                                    double delta) {
  return ProtocolSpec{kind, {target}, u, epsilon, delta};
}

ProtocolSpec ProtocolSpec::two_qubit(ProtocolKind kind, int first, int second, double epsilon,
                                     double delta) {
  return ProtocolSpec{kind, {first, second}, std::nullopt, epsilon, delta};
}

void ProtocolSpec::validate(int register_qubits) const {
  if (register_qubits < 1 || register_qubits + 1 > kMaxQubits) {
    throw LinalgError("protocol: register plus ancilla must fit in 8 qubits");
  }
  if (is_rotation(kind)) {
    if (targets.size() != 1 || !u) {
      throw LinalgError("protocol: rotations take exactly one target and an angle u");
    }
  } else if (targets.size() != 2 || u) {
    throw LinalgError("protocol: two-qubit gates take exactly two targets and no u");
  }
  check_qubit_list(register_qubits, targets);
}

ComplexVector pre_measurement_state(const PureState& input, const ProtocolSpec& spec) {
  const int n = input.qubits();
  spec.validate(n);
  const int a = n;
  ComplexVector state = kron(input.amplitudes(), plus_state());
  const QubitList& t = spec.targets;
  switch (spec.kind) {
    case ProtocolKind::OnewayRotation:
      state = apply_operator(state, gate(GateName::CZ), {t[0], a});
      break;
    case ProtocolKind::AdqcRotationCz:
      state = apply_operator(state, gate(GateName::E_CZ), {t[0], a});
      break;
    case ProtocolKind::AdqcRotationCzSwap:
      state = apply_operator(state, gate(GateName::CZSWAP), {t[0], a});
      break;
    case ProtocolKind::AdqcCzGate:
      state = apply_operator(state, gate(GateName::E_CZ), {t[0], a});
      state = apply_operator(state, gate(GateName::E_CZ), {t[1], a});
      break;
    case ProtocolKind::AdqcCzSwapGate: {
      const ComplexMatrix czswap = gate(GateName::CZSWAP);
      state = apply_operator(state, czswap, {a, t[0]});
      state = apply_operator(state, czswap, {a, t[1]});
      state = apply_operator(state, czswap, {a, t[0]});
      break;
    }
  }
  return state;
}

ProtocolResult run_protocol(const PureState& input, const ProtocolSpec& spec) {
  const ComplexVector pre = pre_measurement_state(input, spec);
  const int n = input.qubits();
  auto ideal = measure_outputs(pre, spec, n, 0.0, 0.0);
  auto inaccurate = measure_outputs(pre, spec, n, spec.epsilon, spec.delta);
  ProtocolResult result{
      {ProtocolBranch{PureState::normalized(ideal[0]), ideal[0].squaredNorm(), std::move(inaccurate[0])},
       ProtocolBranch{PureState::normalized(ideal[1]), ideal[1].squaredNorm(), std::move(inaccurate[1])}},
      n};
  return result;
}

double mean_gate_fidelity(const ProtocolResult& result) {
  double total = 0.0;
  for (const auto& b : result.branches) total += std::norm(inner(b.ideal.amplitudes(), b.inaccurate));
  return total;
}

double closed_form_fidelity(double correlator, double epsilon) {
  if (!(std::abs(correlator) <= 1.0 + 1e-12)) {
    throw DomainError("closed_form_fidelity: correlator outside [-1, 1]");
  }
  const double c = std::cos(epsilon / 2.0);
  const double s = std::sin(epsilon / 2.0);
  return c * c + correlator * correlator * s * s;
}

ComplexMatrix error_operator(ErrorKind kind, int outcome, double epsilon, double delta) {
  if (outcome != 0 && outcome != 1) throw LinalgError("error_operator: outcome must be 0 or 1");
  const double sign = outcome == 0 ? 1.0 : -1.0;
  const ComplexMatrix z = gate(GateName::Z);
  const ComplexMatrix pauli = kind == ErrorKind::XType ? gate(GateName::X) : kron(z, z);
  const Complex weight = sign * std::exp(Complex(0.0, sign * delta)) * std::sin(epsilon / 2.0);
  return std::cos(epsilon / 2.0) * ComplexMatrix::Identity(pauli.rows(), pauli.cols()) +
         weight * pauli;
}

QubitList error_qubits(const ProtocolSpec& spec) {
  if (spec.kind == ProtocolKind::AdqcCzSwapGate) return spec.targets;
  return {spec.targets[0]};
}

double bound_purity(double S, double epsilon) {
  if (!(S >= -1e-12 && S <= 1.0 + 1e-12)) throw DomainError("bound_purity: S outside [0, 1]");
  const double s = std::sin(epsilon / 2.0);
  return 1.0 - S * s * s;
}

double bound_sv(double sv, double epsilon) {
  const double c = f_inverse(sv);
  const double s = std::sin(epsilon / 2.0);
  return 1.0 - (1.0 - c * c) * s * s;
}

double bound_sv2(double sv2, double epsilon) {
  if (sv2 < 1.0 - 1e-12) {
    throw BoundDomainError("bound_sv2: S_v2 = " + std::to_string(sv2) +
                           " is below 1; no bound on |C_zz| follows from S_v2 there");
  }
  const double c = g_inverse(sv2);
  const double s = std::sin(epsilon / 2.0);
  return 1.0 - (1.0 - c * c) * s * s;
}

FidelityReport analyze(const PureState& input, const ProtocolSpec& spec) {
  const ProtocolResult result = run_protocol(input, spec);
  FidelityReport report;
  report.spec = spec;
  report.branch_probabilities = {result.branches[0].inaccurate.squaredNorm(),
                                 result.branches[1].inaccurate.squaredNorm()};
  report.simulated_F = mean_gate_fidelity(result);

  auto add_bound = [&](std::string name, double value) {
    report.bounds.push_back({name, value, value - report.simulated_F});
    if (report.simulated_F - value > kViolationTolerance) {
      report.violations.push_back({std::move(name), report.simulated_F - value});
    }
  };

  if (error_kind(spec.kind) == ErrorKind::XType) {
    report.analyzed_qubits = {spec.targets[0]};
    const DensityMatrix rho = DensityMatrix::reduced(input, report.analyzed_qubits);
    report.entanglement = single_qubit_report(rho);
    report.correlator_used = report.entanglement.correlator;
    add_bound("purity_bound", bound_purity(*report.entanglement.purity_S, spec.epsilon));
    add_bound("sv_bound", bound_sv(report.entanglement.von_neumann, spec.epsilon));
  } else {
    report.analyzed_qubits = spec.targets;
    const DensityMatrix rho = DensityMatrix::reduced(input, report.analyzed_qubits);
    report.entanglement = two_qubit_report(rho);
    report.correlator_used = report.entanglement.correlator;
    try {
      add_bound("sv2_bound", bound_sv2(report.entanglement.von_neumann, spec.epsilon));
    } catch (const BoundDomainError&) {
      report.domain_note = "below bound domain: S_v2 < 1 does not constrain |C_zz|";
    }
  }
  report.closed_form_F = closed_form_fidelity(report.correlator_used, spec.epsilon);
  return report;
}

}  // namespace adqc
