#include "adqc/entropy.hpp"

#include <cmath>
#include <string>

namespace adqc {

namespace {

// Slack on [0,1]-style domains for values produced by floating-point sums.
constexpr double kDomainSlack = 1e-12;

double clamp_to(double x, double lo, double hi, const char* what) {
  if (!(x >= lo - kDomainSlack && x <= hi + kDomainSlack)) {
    throw DomainError(std::string(what) + ": argument " + std::to_string(x) + " outside [" +
                      std::to_string(lo) + ", " + std::to_string(hi) + "]");
  }
  return std::clamp(x, lo, hi);
}

// Bisection for a strictly decreasing function on [0, 1].
template <typename Fn>
double invert_decreasing(Fn&& fn, double target) {
  double lo = 0.0;
  double hi = 1.0;
  double mid = 0.5;
  constexpr int kMaxIterations = 200;
  for (int it = 0; it < kMaxIterations; ++it) {
    mid = 0.5 * (lo + hi);
    const double value = fn(mid);
    if (std::abs(value - target) <= 1e-12 || hi - lo <= 1e-13) break;
    if (value > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return mid;
}

}  // namespace

DensityMatrix::DensityMatrix(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("density matrix must be square");
  n_qubits_ = qubits_for_dim(m.rows());
  if (m.rows() > kMaxEigenDim) throw DomainError("density matrix larger than 4 qubits");
  if (hermiticity_defect(m) > kDensityTolerance) throw DomainError("density matrix is not Hermitian");
  const Complex tr = m.trace();
  if (std::abs(tr - Complex(1.0)) > kDensityTolerance) {
    throw DomainError("density matrix trace " + std::to_string(tr.real()) + " is not 1");
  }
  matrix_ = (m + m.adjoint()) / 2.0;
  spectrum_ = hermitian_eigenvalues(matrix_);
  if (spectrum_(0) < -kDensityTolerance) {
    throw DomainError("density matrix has negative eigenvalue " + std::to_string(spectrum_(0)));
  }
  spectrum_ = spectrum_.cwiseMax(0.0);
  spectrum_ /= spectrum_.sum();
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.amplitudes() * psi.amplitudes().adjoint());
}

DensityMatrix DensityMatrix::reduced(const PureState& psi, const QubitList& keep) {
  return DensityMatrix(partial_trace(psi.amplitudes(), keep));
}

double purity_entanglement(const DensityMatrix& rho) {
  if (rho.qubits() != 1) throw DomainError("purity_entanglement: expects a single-qubit state");
  const double tr_sq = (rho.matrix() * rho.matrix()).trace().real();
  return 2.0 * (1.0 - tr_sq);
}

double xlog2x(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

double von_neumann(const DensityMatrix& rho) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < rho.spectrum().size(); ++i) s -= xlog2x(rho.spectrum()(i));
  return std::max(s, 0.0);
}

double correlator(const DensityMatrix& rho, const ComplexMatrix& observable) {
  if (observable.rows() != rho.dim() || observable.cols() != rho.dim()) {
    throw LinalgError("correlator: observable dimension does not match the state");
  }
  if (hermiticity_defect(observable) > kHermitianTolerance) {
    throw LinalgError("correlator: observable is not Hermitian");
  }
  const Complex value = (rho.matrix() * observable).trace();
  if (std::abs(value.imag()) > 1e-12) {
    throw LinalgError("correlator: expectation value has imaginary part " +
                      std::to_string(value.imag()));
  }
  return value.real();
}

std::array<double, 3> bloch_vector(const DensityMatrix& rho) {
  if (rho.qubits() != 1) throw DomainError("bloch_vector: expects a single-qubit state");
  return {correlator(rho, gate(GateName::X)), correlator(rho, gate(GateName::Y)),
          correlator(rho, gate(GateName::Z))};
}

double bloch_length(const DensityMatrix& rho) {
  const auto b = bloch_vector(rho);
  return std::sqrt(b[0] * b[0] + b[1] * b[1] + b[2] * b[2]);
}

double z_correlator(const DensityMatrix& rho) {
  const ComplexMatrix z = gate(GateName::Z);
  switch (rho.qubits()) {
    case 1:
      return correlator(rho, z);
    case 2:
      return correlator(rho, kron(z, z));
    default:
      throw DomainError("z_correlator: expects one or two qubits");
  }
}

EntanglementReport single_qubit_report(const DensityMatrix& rho) {
  EntanglementReport r;
  r.purity_S = purity_entanglement(rho);
  r.von_neumann = von_neumann(rho);
  r.correlator = z_correlator(rho);
  r.bloch_length_r = bloch_length(rho);
  return r;
}

EntanglementReport two_qubit_report(const DensityMatrix& rho) {
  if (rho.qubits() != 2) throw DomainError("two_qubit_report: expects a two-qubit state");
  EntanglementReport r;
  r.von_neumann = von_neumann(rho);
  r.correlator = z_correlator(rho);
  return r;
}

double f(double c) {
  c = clamp_to(c, 0.0, 1.0, "f");
  return -xlog2x((1.0 + c) / 2.0) - xlog2x((1.0 - c) / 2.0);
}

double g(double c) {
  c = clamp_to(c, 0.0, 1.0, "g");
  const double p = (1.0 + c) / 2.0;
  const double q = (1.0 - c) / 2.0;
  const double a = p > 0.0 ? -p * std::log2((1.0 + c) / 4.0) : 0.0;
  const double b = q > 0.0 ? -q * std::log2((1.0 - c) / 4.0) : 0.0;
  return a + b;
}

double f_inverse(double s) {
  s = clamp_to(s, 0.0, 1.0, "f_inverse");
  if (s == 0.0) return 1.0;
  if (s == 1.0) return 0.0;
  return invert_decreasing([](double c) { return f(c); }, s);
}

double g_inverse(double s) {
  s = clamp_to(s, 1.0, 2.0, "g_inverse");
  if (s == 1.0) return 1.0;
  if (s == 2.0) return 0.0;
  return invert_decreasing([](double c) { return g(c); }, s);
}

}  // namespace adqc
