#include "spinnet/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace spinnet {

namespace {

double max_abs(const ComplexMatrix& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

HermitianOperator::HermitianOperator(ComplexMatrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw input_error("Hermitian operator must be square");
  if (m_.rows() == 0) throw input_error("Hermitian operator must be non-empty");
  if (max_abs(m_ - m_.adjoint().eval()) > tol::hermitian)
    throw input_error("matrix is not Hermitian within tolerance");
}

UnitaryOperator::UnitaryOperator(ComplexMatrix u) : u_(std::move(u)) {
  if (u_.rows() != u_.cols()) throw input_error("unitary operator must be square");
  if (u_.rows() == 0) throw input_error("unitary operator must be non-empty");
  ComplexMatrix gram = u_.adjoint() * u_;
  gram -= ComplexMatrix::Identity(u_.rows(), u_.cols());
  if (max_abs(gram) > tol::unitary)
    throw input_error("matrix is not unitary within tolerance");
}

EigenSystem hermitian_eig(const HermitianOperator& h) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(h.matrix());
  if (solver.info() != Eigen::Success)
    throw numeric_error("Hermitian eigensolver failed to converge");
  return EigenSystem{solver.eigenvalues(), solver.eigenvectors()};
}

UnitaryOperator propagator(const EigenSystem& eig, double t) {
  const auto& v = eig.eigenvectors;
  ComplexVector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases(k) = std::exp(Complex(0.0, -eig.eigenvalues(k) * t));
  return UnitaryOperator(v * phases.asDiagonal() * v.adjoint());
}

UnitaryOperator propagator(const HermitianOperator& h, double t) {
  return propagator(hermitian_eig(h), t);
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

QubitRegister::QubitRegister(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty()) throw input_error("register needs at least one qubit");
  if (labels_.size() > 12) throw input_error("register larger than 12 qubits is unsupported");
  std::unordered_set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw input_error("empty qubit label");
    if (!seen.insert(l).second) throw input_error("duplicate qubit label: " + l);
  }
}

bool QubitRegister::contains(const std::string& label) const {
  return std::find(labels_.begin(), labels_.end(), label) != labels_.end();
}

int QubitRegister::position(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw input_error("unknown qubit label: " + label);
  return static_cast<int>(it - labels_.begin());
}

QubitRegister network_pair_register(int n) {
  if (n < 1) throw input_error("network size must be >= 1");
  std::vector<std::string> labels;
  labels.reserve(2 * static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) labels.push_back("A" + std::to_string(i));
  for (int i = 1; i <= n; ++i) labels.push_back("B" + std::to_string(i));
  return QubitRegister(std::move(labels));
}

QuantumState::QuantumState(QubitRegister reg, std::variant<ComplexVector, ComplexMatrix> payload)
    : reg_(std::move(reg)), payload_(std::move(payload)) {}

QuantumState QuantumState::pure(QubitRegister reg, ComplexVector amplitudes) {
  if (amplitudes.size() != reg.dim())
    throw input_error("amplitude vector does not match register dimension");
  if (std::abs(amplitudes.norm() - 1.0) > tol::state)
    throw input_error("pure state is not normalized within tolerance");
  return QuantumState(std::move(reg), std::move(amplitudes));
}

QuantumState QuantumState::density(QubitRegister reg, ComplexMatrix rho) {
  if (rho.rows() != reg.dim() || rho.cols() != reg.dim())
    throw input_error("density matrix does not match register dimension");
  if (max_abs(rho - rho.adjoint().eval()) > tol::state)
    throw input_error("density matrix is not Hermitian within tolerance");
  if (std::abs(rho.trace().real() - 1.0) > tol::state || std::abs(rho.trace().imag()) > tol::state)
    throw input_error("density matrix trace differs from 1");
  return QuantumState(std::move(reg), std::move(rho));
}

const ComplexVector& QuantumState::amplitudes() const {
  if (!is_pure()) throw input_error("state is not pure");
  return std::get<ComplexVector>(payload_);
}

const ComplexMatrix& QuantumState::density_matrix() const {
  if (is_pure()) throw input_error("state is not in density form");
  return std::get<ComplexMatrix>(payload_);
}

ComplexMatrix QuantumState::as_density() const {
  if (is_pure()) {
    const auto& v = std::get<ComplexVector>(payload_);
    return v * v.adjoint();
  }
  return std::get<ComplexMatrix>(payload_);
}

double QuantumState::min_eigenvalue() const {
  if (is_pure()) return 0.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(std::get<ComplexMatrix>(payload_));
  if (solver.info() != Eigen::Success) throw numeric_error("eigensolver failed on density");
  return solver.eigenvalues().minCoeff();
}

namespace {

// Positions (bit shifts) for a subset of labels, plus the complement.
struct SplitBits {
  std::vector<int> kept;    // bit shift per kept label, register order
  std::vector<int> traced;  // bit shift per remaining label, register order
};

SplitBits split_register(const QubitRegister& reg, const std::vector<std::string>& keep) {
  std::unordered_set<std::string> keep_set;
  for (const auto& l : keep) {
    if (!reg.contains(l)) throw input_error("unknown qubit label: " + l);
    if (!keep_set.insert(l).second) throw input_error("duplicate qubit label: " + l);
  }
  SplitBits split;
  for (const auto& l : reg.labels()) {
    if (keep_set.count(l))
      split.kept.push_back(reg.bit_of(l));
    else
      split.traced.push_back(reg.bit_of(l));
  }
  return split;
}

// Scatters the bits of `sub` (MSB first over `shifts`) into a basis index.
inline Eigen::Index scatter(Eigen::Index sub, const std::vector<int>& shifts) {
  Eigen::Index out = 0;
  const int m = static_cast<int>(shifts.size());
  for (int pos = 0; pos < m; ++pos) {
    const Eigen::Index bit = (sub >> (m - 1 - pos)) & 1;
    out |= bit << shifts[static_cast<size_t>(pos)];
  }
  return out;
}

}  // namespace

QuantumState partial_trace(const QuantumState& s, const std::vector<std::string>& keep) {
  if (keep.empty()) throw input_error("partial trace must keep at least one qubit");
  const auto split = split_register(s.reg(), keep);

  std::vector<std::string> kept_labels;
  for (const auto& l : s.reg().labels())
    if (std::find(keep.begin(), keep.end(), l) != keep.end()) kept_labels.push_back(l);
  QubitRegister out_reg(kept_labels);

  const Eigen::Index dim_keep = Eigen::Index(1) << split.kept.size();
  const Eigen::Index dim_env = Eigen::Index(1) << split.traced.size();
  ComplexMatrix out = ComplexMatrix::Zero(dim_keep, dim_keep);

  if (s.is_pure()) {
    // rho_keep = sum_e |v_e><v_e| with v_e the amplitude slice at
    // environment assignment e; avoids forming the full outer product.
    const auto& psi = s.amplitudes();
    ComplexVector slice(dim_keep);
    for (Eigen::Index e = 0; e < dim_env; ++e) {
      const Eigen::Index base = scatter(e, split.traced);
      for (Eigen::Index k = 0; k < dim_keep; ++k)
        slice(k) = psi(base | scatter(k, split.kept));
      out.noalias() += slice * slice.adjoint();
    }
  } else {
    const auto& rho = s.density_matrix();
    for (Eigen::Index e = 0; e < dim_env; ++e) {
      const Eigen::Index base = scatter(e, split.traced);
      for (Eigen::Index r = 0; r < dim_keep; ++r) {
        const Eigen::Index gr = base | scatter(r, split.kept);
        for (Eigen::Index c = 0; c < dim_keep; ++c)
          out(r, c) += rho(gr, base | scatter(c, split.kept));
      }
    }
  }

  const double trace_err = std::abs(out.trace().real() - s.as_density().trace().real());
  if (trace_err > tol::trace_keep * static_cast<double>(s.dim()))
    throw numeric_error("partial trace failed to preserve the total trace");
  return QuantumState::density(std::move(out_reg), std::move(out));
}

QuantumState Projection::normalized() const {
  if (probability < tol::degenerate)
    throw numeric_error("cannot normalize a branch with vanishing probability");
  if (std::holds_alternative<ComplexVector>(unnormalized)) {
    ComplexVector v = std::get<ComplexVector>(unnormalized) / std::sqrt(probability);
    return QuantumState::pure(remaining, std::move(v));
  }
  ComplexMatrix m = std::get<ComplexMatrix>(unnormalized) / probability;
  return QuantumState::density(remaining, std::move(m));
}

Projection project_qubits(const QuantumState& s,
                          const std::vector<std::pair<std::string, int>>& assignments) {
  if (assignments.empty()) throw input_error("projection needs at least one assignment");
  std::unordered_set<std::string> seen;
  Eigen::Index fixed_bits = 0;
  std::vector<std::string> assigned_labels;
  for (const auto& [label, bit] : assignments) {
    if (!s.reg().contains(label)) throw input_error("unknown qubit label: " + label);
    if (!seen.insert(label).second) throw input_error("duplicate assignment for label " + label);
    if (bit != 0 && bit != 1) throw input_error("assignment bits must be 0 or 1");
    if (bit) fixed_bits |= Eigen::Index(1) << s.reg().bit_of(label);
    assigned_labels.push_back(label);
  }
  if (static_cast<int>(assignments.size()) >= s.qubit_count())
    throw input_error("at least one qubit must remain unassigned");

  std::vector<std::string> remaining_labels;
  std::vector<int> remaining_shifts;
  for (const auto& l : s.reg().labels()) {
    if (!seen.count(l)) {
      remaining_labels.push_back(l);
      remaining_shifts.push_back(s.reg().bit_of(l));
    }
  }
  QubitRegister out_reg(remaining_labels);
  const Eigen::Index dim_out = out_reg.dim();

  if (s.is_pure()) {
    const auto& psi = s.amplitudes();
    ComplexVector v(dim_out);
    for (Eigen::Index k = 0; k < dim_out; ++k)
      v(k) = psi(fixed_bits | scatter(k, remaining_shifts));
    const double p = v.squaredNorm();
    return Projection{std::move(out_reg), std::move(v), p};
  }

  const auto& rho = s.density_matrix();
  ComplexMatrix m(dim_out, dim_out);
  for (Eigen::Index r = 0; r < dim_out; ++r) {
    const Eigen::Index gr = fixed_bits | scatter(r, remaining_shifts);
    for (Eigen::Index c = 0; c < dim_out; ++c)
      m(r, c) = rho(gr, fixed_bits | scatter(c, remaining_shifts));
  }
  const double p = m.trace().real();
  return Projection{std::move(out_reg), std::move(m), p};
}

}  // namespace spinnet
