// linalg.hpp
// Dense complex kernel for small qubit registers: Kronecker products, partial
// traces and a cyclic Jacobi eigensolver for Hermitian matrices.
//
// Qubit ordering is big-endian throughout: qubit 0 is the most significant
// bit of an amplitude index.

#pragma once

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace adqc {

template <typename Real>
using MatrixC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using VectorC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using ComplexMatrix = MatrixC<double>;
using ComplexVector = VectorC<double>;
using RealVector = VectorR<double>;

/// Ordered list of qubit indices.
using QubitList = std::vector<int>;

inline constexpr int kMaxQubits = 8;
inline constexpr Eigen::Index kMaxEigenDim = 16;
inline constexpr double kHermitianTolerance = 1e-10;

class LinalgError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Number of qubits for a dimension that must be a power of two in [2, 2^8].
inline int qubits_for_dim(Eigen::Index dim) {
  int n = 0;
  while ((Eigen::Index{1} << n) < dim) ++n;
  if (dim < 2 || (Eigen::Index{1} << n) != dim || n > kMaxQubits) {
    throw LinalgError("dimension " + std::to_string(dim) +
                      " is not a power of two between 2 and 256");
  }
  return n;
}

/// Bit mask of qubit `q` in an n-qubit index.
inline std::uint64_t qubit_mask(int n_qubits, int q) {
  return std::uint64_t{1} << (n_qubits - 1 - q);
}

inline void check_qubit_list(int n_qubits, const QubitList& qubits) {
  std::uint64_t seen = 0;
  for (int q : qubits) {
    if (q < 0 || q >= n_qubits) {
      throw LinalgError("qubit index " + std::to_string(q) + " out of range for " +
                        std::to_string(n_qubits) + " qubits");
    }
    if (seen & (std::uint64_t{1} << q)) {
      throw LinalgError("duplicate qubit index " + std::to_string(q));
    }
    seen |= std::uint64_t{1} << q;
  }
}

/// Kronecker product; entry (i1*b.rows()+i2, j1*b.cols()+j2) = a(i1,j1)*b(i2,j2).
template <typename DerivedA, typename DerivedB>
Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> kron(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  static_assert(std::is_same_v<typename DerivedA::Scalar, typename DerivedB::Scalar>,
                "kron operands must share a scalar type");
  Eigen::Matrix<typename DerivedA::Scalar, Eigen::Dynamic, Eigen::Dynamic> out(
      a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

namespace detail {

// Splits every full index into (kept index, traced index). The kept index
// reads the bits of `keep` in the order given, first entry most significant.
struct IndexSplit {
  std::vector<Eigen::Index> kept;
  std::vector<Eigen::Index> traced;
  Eigen::Index kept_dim = 1;
  Eigen::Index traced_dim = 1;
};

inline IndexSplit split_indices(int n_qubits, const QubitList& keep) {
  check_qubit_list(n_qubits, keep);
  QubitList rest;
  for (int q = 0; q < n_qubits; ++q) {
    if (std::find(keep.begin(), keep.end(), q) == keep.end()) rest.push_back(q);
  }
  const Eigen::Index dim = Eigen::Index{1} << n_qubits;
  IndexSplit split;
  split.kept.resize(dim);
  split.traced.resize(dim);
  split.kept_dim = Eigen::Index{1} << keep.size();
  split.traced_dim = Eigen::Index{1} << rest.size();
  for (Eigen::Index idx = 0; idx < dim; ++idx) {
    Eigen::Index k = 0;
    for (int q : keep) k = (k << 1) | ((idx & qubit_mask(n_qubits, q)) ? 1 : 0);
    Eigen::Index t = 0;
    for (int q : rest) t = (t << 1) | ((idx & qubit_mask(n_qubits, q)) ? 1 : 0);
    split.kept[idx] = k;
    split.traced[idx] = t;
  }
  return split;
}

}  // namespace detail

/// Reduced density matrix of a pure state on the qubits in `keep`, ordered as given.
template <typename Real>
MatrixC<Real> partial_trace(const VectorC<Real>& state, const QubitList& keep) {
  const int n = qubits_for_dim(state.size());
  const auto split = detail::split_indices(n, keep);
  MatrixC<Real> amps = MatrixC<Real>::Zero(split.kept_dim, split.traced_dim);
  for (Eigen::Index idx = 0; idx < state.size(); ++idx) {
    amps(split.kept[idx], split.traced[idx]) = state(idx);
  }
  return amps * amps.adjoint();
}

/// Partial trace of a density matrix over every qubit not in `keep`.
template <typename Real>
MatrixC<Real> partial_trace(const MatrixC<Real>& rho, const QubitList& keep) {
  if (rho.rows() != rho.cols()) throw LinalgError("partial_trace: matrix is not square");
  const int n = qubits_for_dim(rho.rows());
  const auto split = detail::split_indices(n, keep);
  MatrixC<Real> out = MatrixC<Real>::Zero(split.kept_dim, split.kept_dim);
  for (Eigen::Index r = 0; r < rho.rows(); ++r) {
    for (Eigen::Index c = 0; c < rho.cols(); ++c) {
      if (split.traced[r] == split.traced[c]) {
        out(split.kept[r], split.kept[c]) += rho(r, c);
      }
    }
  }
  return out;
}

/// Largest entry-wise deviation of `m` from its adjoint.
template <typename Derived>
typename Eigen::NumTraits<typename Derived::Scalar>::Real hermiticity_defect(
    const Eigen::MatrixBase<Derived>& m) {
  if (m.rows() != m.cols()) {
    return std::numeric_limits<typename Eigen::NumTraits<typename Derived::Scalar>::Real>::infinity();
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

template <typename Real>
struct HermitianEigensystem {
  VectorR<Real> values;   // ascending
  MatrixC<Real> vectors;  // column k pairs with values(k)
};

/// Cyclic complex Jacobi diagonalization. The input is symmetrized as
/// (M + M^dagger)/2 and sweeps continue until the off-diagonal Frobenius norm
/// drops below 1e-14 (scaled by the matrix norm when that exceeds 1).
template <typename Real>
HermitianEigensystem<Real> hermitian_eigensystem(const MatrixC<Real>& m) {
  using Cx = std::complex<Real>;
  if (m.rows() != m.cols()) throw LinalgError("eigensolver: matrix is not square");
  if (m.rows() == 0 || m.rows() > kMaxEigenDim) {
    throw LinalgError("eigensolver: dimension " + std::to_string(m.rows()) +
                      " outside [1, 16]");
  }
  if (hermiticity_defect(m) > Real(kHermitianTolerance)) {
    throw LinalgError("eigensolver: matrix is not Hermitian");
  }
  const Eigen::Index dim = m.rows();
  MatrixC<Real> a = (m + m.adjoint()) / Real(2);
  MatrixC<Real> v = MatrixC<Real>::Identity(dim, dim);

  auto off_norm = [&] {
    Real sum = 0;
    for (Eigen::Index i = 0; i < dim; ++i)
      for (Eigen::Index j = 0; j < dim; ++j)
        if (i != j) sum += std::norm(a(i, j));
    return std::sqrt(sum);
  };
  const Real threshold = Real(1e-14) * std::max(Real(1), a.norm());

  constexpr int kMaxSweeps = 100;
  for (int sweep = 0; sweep < kMaxSweeps && off_norm() > threshold; ++sweep) {
    for (Eigen::Index p = 0; p < dim - 1; ++p) {
      for (Eigen::Index q = p + 1; q < dim; ++q) {
        const Real b = std::abs(a(p, q));
        if (b == Real(0)) continue;
        // Phase the (p,q) element real, then apply a real plane rotation.
        const Cx phase = a(p, q) / b;
        const Real app = std::real(a(p, p));
        const Real aqq = std::real(a(q, q));
        const Real zeta = (aqq - app) / (Real(2) * b);
        Real t;
        if (std::abs(zeta) > Real(1e150)) {
          t = Real(1) / (Real(2) * zeta);
        } else {
          t = (zeta >= 0 ? Real(1) : Real(-1)) / (std::abs(zeta) + std::sqrt(Real(1) + zeta * zeta));
        }
        const Real c = Real(1) / std::sqrt(Real(1) + t * t);
        const Real s = t * c;
        // Block of the unitary acting on columns (p, q).
        const Cx upp = c;
        const Cx upq = s;
        const Cx uqp = -s * std::conj(phase);
        const Cx uqq = c * std::conj(phase);
        for (Eigen::Index k = 0; k < dim; ++k) {
          const Cx akp = a(k, p);
          const Cx akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
          const Cx vkp = v(k, p);
          const Cx vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
        for (Eigen::Index k = 0; k < dim; ++k) {
          const Cx apk = a(p, k);
          const Cx aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = a(q, p) = Cx(0);
        a(p, p) = std::real(a(p, p));
        a(q, q) = std::real(a(q, q));
      }
    }
  }
  if (off_norm() > threshold) throw std::runtime_error("eigensolver: Jacobi sweeps did not converge");

  std::vector<Eigen::Index> order(dim);
  for (Eigen::Index i = 0; i < dim; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index x, Eigen::Index y) {
    return std::real(a(x, x)) < std::real(a(y, y));
  });
  HermitianEigensystem<Real> out;
  out.values.resize(dim);
  out.vectors.resize(dim, dim);
  for (Eigen::Index k = 0; k < dim; ++k) {
    out.values(k) = std::real(a(order[k], order[k]));
    out.vectors.col(k) = v.col(order[k]);
  }
  return out;
}

/// Ascending real spectrum of a Hermitian matrix of dimension at most 16.
template <typename Real>
VectorR<Real> hermitian_eigenvalues(const MatrixC<Real>& m) {
  return hermitian_eigensystem(m).values;
}

/// <a|b>, conjugating the first argument.
template <typename Real>
std::complex<Real> inner(const VectorC<Real>& a, const VectorC<Real>& b) {
  if (a.size() != b.size()) throw LinalgError("inner: dimension mismatch");
  return a.dot(b);
}

/// min over theta of ||a - e^{i theta} b||.
template <typename Real>
Real phase_aligned_distance(const VectorC<Real>& a, const VectorC<Real>& b) {
  if (a.size() != b.size()) throw LinalgError("phase_aligned_distance: dimension mismatch");
  const std::complex<Real> overlap = b.dot(a);
  const Real mag = std::abs(overlap);
  const std::complex<Real> phase = mag > Real(0) ? overlap / mag : std::complex<Real>(1);
  return (a - phase * b).norm();
}

/// |<a|b>| for normalized vectors; 1 means equal up to a global phase.
template <typename Real>
Real phase_invariant_overlap(const VectorC<Real>& a, const VectorC<Real>& b) {
  return std::abs(inner(a, b));
}

}  // namespace adqc
