#include "adqc/qcore.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace adqc {

namespace {

constexpr Complex kI{0.0, 1.0};

ComplexMatrix mat2(Complex a, Complex b, Complex c, Complex d) {
  ComplexMatrix m(2, 2);
  m << a, b, c, d;
  return m;
}

ComplexVector vec2(Complex a, Complex b) {
  ComplexVector v(2);
  v << a, b;
  return v;
}

// Inserts `bit` at qubit position `q` of an index over (n - 1) qubits.
std::uint64_t insert_bit(std::uint64_t rest, int n, int q, std::uint64_t bit) {
  const int shift = n - 1 - q;
  const std::uint64_t low = rest & ((std::uint64_t{1} << shift) - 1);
  const std::uint64_t high = rest >> shift;
  return (high << (shift + 1)) | (bit << shift) | low;
}

}  // namespace

PureState::PureState(ComplexVector amplitudes)
    : n_qubits_(qubits_for_dim(amplitudes.size())), amplitudes_(std::move(amplitudes)) {
  const double norm2 = amplitudes_.squaredNorm();
  if (std::abs(norm2 - 1.0) > kNormTolerance) {
    throw LinalgError("PureState: squared norm " + std::to_string(norm2) + " is not 1");
  }
}

PureState PureState::normalized(const ComplexVector& amplitudes) {
  const double norm = amplitudes.norm();
  if (!(norm > 0.0)) throw LinalgError("PureState: cannot normalize a zero vector");
  return PureState(amplitudes / norm);
}

PureState PureState::basis(int n_qubits, std::uint64_t index) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) throw LinalgError("PureState: bad qubit count");
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  if (index >= static_cast<std::uint64_t>(dim)) throw LinalgError("PureState: basis index out of range");
  ComplexVector v = ComplexVector::Zero(dim);
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v));
}

ComplexMatrix gate(GateName name) {
  const double r = std::numbers::sqrt2 / 2.0;
  switch (name) {
    case GateName::X:
      return mat2(0, 1, 1, 0);
    case GateName::Y:
      return mat2(0, -kI, kI, 0);
    case GateName::Z:
      return mat2(1, 0, 0, -1);
    case GateName::H:
      return mat2(r, r, r, -r);
    case GateName::I:
      return ComplexMatrix::Identity(2, 2);
    case GateName::CZ: {
      ComplexMatrix m = ComplexMatrix::Identity(4, 4);
      m(3, 3) = -1.0;
      return m;
    }
    case GateName::SWAP: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
      return m;
    }
    case GateName::CZSWAP: {
      ComplexMatrix m = ComplexMatrix::Zero(4, 4);
      m(0, 0) = m(1, 2) = m(2, 1) = 1.0;
      m(3, 3) = -1.0;
      return m;
    }
    case GateName::E_CZ: {
      const ComplexMatrix h = gate(GateName::H);
      return kron(h, h) * gate(GateName::CZ);
    }
  }
  throw LinalgError("gate: unknown gate");
}

GateName parse_gate_name(std::string_view name) {
  if (name == "X") return GateName::X;
  if (name == "Y") return GateName::Y;
  if (name == "Z") return GateName::Z;
  if (name == "H") return GateName::H;
  if (name == "1" || name == "I") return GateName::I;
  if (name == "CZ") return GateName::CZ;
  if (name == "SWAP") return GateName::SWAP;
  if (name == "CZSWAP") return GateName::CZSWAP;
  if (name == "E_CZ") return GateName::E_CZ;
  throw LinalgError("gate: unknown gate name '" + std::string(name) + "'");
}

ComplexMatrix j_gate(double u) {
  ComplexMatrix phase = ComplexMatrix::Zero(2, 2);
  phase(0, 0) = std::exp(kI * (u / 2.0));
  phase(1, 1) = std::exp(-kI * (u / 2.0));
  return gate(GateName::H) * phase;
}

ComplexVector u_plus(double u) {
  const double r = std::numbers::sqrt2 / 2.0;
  return vec2(r, r * std::exp(kI * u));
}

ComplexVector u_minus(double u) {
  const double r = std::numbers::sqrt2 / 2.0;
  return vec2(r, -r * std::exp(kI * u));
}

MeasurementBasis deviated_u_basis(double u, double epsilon, double delta) {
  const double c = std::cos(epsilon / 2.0);
  const double s = std::sin(epsilon / 2.0);
  const Complex phase = std::exp(-kI * delta);
  const ComplexVector up = u_plus(u);
  const ComplexVector um = u_minus(u);
  MeasurementBasis b;
  b.plus = c * up + phase * s * um;
  b.minus = s * up - phase * c * um;
  b.u = u;
  b.epsilon = epsilon;
  b.delta = delta;
  return b;
}

MeasurementBasis deviated_z_basis(double epsilon, double delta) {
  const double c = std::cos(epsilon / 2.0);
  const double s = std::sin(epsilon / 2.0);
  const Complex phase = std::exp(-kI * delta);
  MeasurementBasis b;
  b.plus = vec2(c, s * phase);
  b.minus = vec2(s, -c * phase);
  b.epsilon = epsilon;
  b.delta = delta;
  return b;
}

ComplexVector apply_operator(const ComplexVector& state, const ComplexMatrix& op,
                             const QubitList& targets) {
  const int n = qubits_for_dim(state.size());
  check_qubit_list(n, targets);
  const Eigen::Index sub = Eigen::Index{1} << targets.size();
  if (targets.empty() || op.rows() != sub || op.cols() != sub) {
    throw LinalgError("apply_operator: operator dimension does not match target count");
  }
  std::vector<std::uint64_t> offsets(sub, 0);
  std::uint64_t target_bits = 0;
  for (Eigen::Index k = 0; k < sub; ++k) {
    for (std::size_t t = 0; t < targets.size(); ++t) {
      const bool bit = (k >> (targets.size() - 1 - t)) & 1;
      if (bit) offsets[k] |= qubit_mask(n, targets[t]);
    }
  }
  for (int q : targets) target_bits |= qubit_mask(n, q);

  ComplexVector out(state.size());
  ComplexVector in_local(sub);
  for (std::uint64_t base = 0; base < static_cast<std::uint64_t>(state.size()); ++base) {
    if (base & target_bits) continue;
    for (Eigen::Index k = 0; k < sub; ++k) in_local(k) = state(base | offsets[k]);
    const ComplexVector out_local = op * in_local;
    for (Eigen::Index k = 0; k < sub; ++k) out(base | offsets[k]) = out_local(k);
  }
  return out;
}

PureState apply_gate(const PureState& state, const ComplexMatrix& op, const QubitList& targets) {
  return PureState(apply_operator(state.amplitudes(), op, targets));
}

std::array<BranchState, 2> measure_branch(const ComplexVector& state, int qubit,
                                          const MeasurementBasis& basis) {
  const int n = qubits_for_dim(state.size());
  check_qubit_list(n, {qubit});
  const Eigen::Index half = state.size() / 2;
  std::array<BranchState, 2> out;
  for (int j = 0; j < 2; ++j) {
    const ComplexVector& b = basis.vector(j);
    ComplexVector v(half);
    for (Eigen::Index r = 0; r < half; ++r) {
      const auto idx0 = insert_bit(static_cast<std::uint64_t>(r), n, qubit, 0);
      const auto idx1 = insert_bit(static_cast<std::uint64_t>(r), n, qubit, 1);
      v(r) = std::conj(b(0)) * state(idx0) + std::conj(b(1)) * state(idx1);
    }
    out[j].outcome = j;
    out[j].probability = v.squaredNorm();
    out[j].vector = std::move(v);
  }
  return out;
}

std::array<BranchState, 2> measure_branch(const PureState& state, int qubit,
                                          const MeasurementBasis& basis) {
  return measure_branch(state.amplitudes(), qubit, basis);
}

ComplexVector insert_qubit(const ComplexVector& rest, const ComplexVector& single, int position) {
  if (single.size() != 2) throw LinalgError("insert_qubit: single-qubit vector must have dimension 2");
  const int n = qubits_for_dim(rest.size() * 2);
  check_qubit_list(n, {position});
  ComplexVector out(rest.size() * 2);
  for (Eigen::Index r = 0; r < rest.size(); ++r) {
    for (std::uint64_t bit = 0; bit < 2; ++bit) {
      out(insert_bit(static_cast<std::uint64_t>(r), n, position, bit)) = single(bit) * rest(r);
    }
  }
  return out;
}

ComplexVector move_qubit(const ComplexVector& state, int from, int to) {
  const int n = qubits_for_dim(state.size());
  check_qubit_list(n, {from});
  check_qubit_list(n, {to});
  // New position p holds old qubit order[p].
  QubitList order;
  for (int q = 0; q < n; ++q) {
    if (q != from) order.push_back(q);
  }
  order.insert(order.begin() + to, from);
  ComplexVector out(state.size());
  for (std::uint64_t idx = 0; idx < static_cast<std::uint64_t>(state.size()); ++idx) {
    std::uint64_t old_idx = 0;
    for (int p = 0; p < n; ++p) {
      if (idx & qubit_mask(n, p)) old_idx |= qubit_mask(n, order[p]);
    }
    out(idx) = state(old_idx);
  }
  return out;
}

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t campaign_seed, std::uint64_t index) {
  return mix_seed(mix_seed(campaign_seed) ^ (index * 0xD1B54A32D192ED03ULL));
}

PureState random_pure_state(int n_qubits, Rng& rng) {
  if (n_qubits < 1 || n_qubits > kMaxQubits) {
    throw LinalgError("random_pure_state: qubit count must be in [1, 8]");
  }
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  ComplexVector v(dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const double re = normal(rng);
    const double im = normal(rng);
    v(i) = Complex(re, im);
  }
  return PureState::normalized(v);
}

PureState random_pure_state(int n_qubits, std::uint64_t seed) {
  Rng rng(mix_seed(seed));
  return random_pure_state(n_qubits, rng);
}

}  // namespace adqc
