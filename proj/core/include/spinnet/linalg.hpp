#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "spinnet/errors.hpp"
#include "spinnet/tolerances.hpp"

namespace spinnet {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Square complex matrix validated to be Hermitian at construction
/// (max |M - M^dag| <= tol::hermitian).
class HermitianOperator {
 public:
  explicit HermitianOperator(ComplexMatrix m);

  const ComplexMatrix& matrix() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  ComplexMatrix m_;
};

/// Square complex matrix validated to be unitary at construction
/// (max |U^dag U - I| <= tol::unitary).
class UnitaryOperator {
 public:
  explicit UnitaryOperator(ComplexMatrix u);

  const ComplexMatrix& matrix() const { return u_; }
  Eigen::Index dim() const { return u_.rows(); }

 private:
  ComplexMatrix u_;
};

/// Spectral decomposition H = V diag(eigenvalues) V^dag with eigenvalues
/// ascending and V unitary (columns are eigenvectors).
struct EigenSystem {
  RealVector eigenvalues;
  ComplexMatrix eigenvectors;
};

/// Full eigendecomposition of a Hermitian operator. Throws numeric_error if
/// the solver fails to converge.
EigenSystem hermitian_eig(const HermitianOperator& h);

/// Time-evolution operator U(t) = V diag(exp(-i * lambda * t)) V^dag.
UnitaryOperator propagator(const HermitianOperator& h, double t);
UnitaryOperator propagator(const EigenSystem& eig, double t);

/// Kronecker product; the first factor owns the most significant index.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

/// Ordered list of distinct qubit labels. The first label owns the most
/// significant bit of every basis index, so for labels (q0, q1, q2) the
/// basis state |b0 b1 b2> has index b0*4 + b1*2 + b2.
class QubitRegister {
 public:
  explicit QubitRegister(std::vector<std::string> labels);

  int size() const { return static_cast<int>(labels_.size()); }
  Eigen::Index dim() const { return Eigen::Index(1) << size(); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool contains(const std::string& label) const;
  /// 0-based position in the label list; throws input_error when absent.
  int position(const std::string& label) const;
  /// Bit position (shift count) of the label inside a basis index.
  int bit_of(const std::string& label) const { return size() - 1 - position(label); }

 private:
  std::vector<std::string> labels_;
};

/// Register A1..An, B1..Bn used by the two-network protocol.
QubitRegister network_pair_register(int n);

/// Pure state (amplitude vector) or mixed state (density matrix) over a
/// qubit register. Pure states must be normalized and densities must be
/// Hermitian with unit trace, both within tol::state.
class QuantumState {
 public:
  static QuantumState pure(QubitRegister reg, ComplexVector amplitudes);
  static QuantumState density(QubitRegister reg, ComplexMatrix rho);

  bool is_pure() const { return std::holds_alternative<ComplexVector>(payload_); }
  const QubitRegister& reg() const { return reg_; }
  int qubit_count() const { return reg_.size(); }
  Eigen::Index dim() const { return reg_.dim(); }

  /// Pure payload; throws input_error on a density state.
  const ComplexVector& amplitudes() const;
  /// Density payload; throws input_error on a pure state.
  const ComplexMatrix& density_matrix() const;
  /// Density form regardless of representation (outer product when pure).
  ComplexMatrix as_density() const;

  /// Smallest eigenvalue of the density form (0 target; small negatives are
  /// numerical noise). Intended for validation paths, costs a full solve.
  double min_eigenvalue() const;

 private:
  QuantumState(QubitRegister reg, std::variant<ComplexVector, ComplexMatrix> payload);

  QubitRegister reg_;
  std::variant<ComplexVector, ComplexMatrix> payload_;
};

/// Reduced density matrix on the kept labels (result ordered by register
/// position, not by the order of `keep`). Keeping every label returns the
/// state in density form. Throws input_error for unknown labels or an empty
/// keep list.
QuantumState partial_trace(const QuantumState& s, const std::vector<std::string>& keep);

/// Result of projecting a subset of qubits onto computational-basis values:
/// the unnormalized post-measurement payload on the remaining labels plus
/// the branch probability (trace or squared norm of the projection).
struct Projection {
  QubitRegister remaining;
  std::variant<ComplexVector, ComplexMatrix> unnormalized;
  double probability;

  /// Normalized branch state; throws numeric_error when probability is
  /// below tol::degenerate.
  QuantumState normalized() const;
};

/// Projects each assigned label onto the given bit (0 or 1). At least one
/// label must stay unassigned. Throws input_error for unknown labels,
/// duplicate assignments, or bits outside {0, 1}.
Projection project_qubits(const QuantumState& s,
                          const std::vector<std::pair<std::string, int>>& assignments);

}  // namespace spinnet
