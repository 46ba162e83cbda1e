#include "spinnet/transfer.hpp"

#include <cmath>
#include <string>

#include "spinnet/entanglement.hpp"
#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

void check_vertex(const Graph& g, int v, const char* what) {
  if (v < 1 || v > g.vertex_count())
    throw input_error(std::string(what) + " vertex " + std::to_string(v) +
                      " out of range 1.." + std::to_string(g.vertex_count()));
}

}  // namespace

ComplexVector excitation_amplitudes(const Graph& g, int source, double t,
                                    const CouplingModel& model) {
  check_vertex(g, source, "source");
  const EigenSystem eig = hermitian_eig(single_excitation_block(g, model));
  const auto& v = eig.eigenvectors;
  ComplexVector phases(eig.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases(k) = std::exp(Complex(0.0, -eig.eigenvalues(k) * t));
  // alpha = V exp(-i lambda t) V^dag e_source; only one column of V^dag needed.
  return v * (phases.asDiagonal() * v.row(source - 1).adjoint());
}

double pair_concurrence(const TransferScenario& s, double t) {
  check_vertex(s.graph_a, s.target_a, "target");
  check_vertex(s.graph_b, s.target_b, "target");
  const ComplexVector alpha = excitation_amplitudes(s.graph_a, s.source_a, t, s.model);
  const ComplexVector beta = excitation_amplitudes(s.graph_b, s.source_b, t, s.model);
  return std::abs(alpha(s.target_a - 1)) * std::abs(beta(s.target_b - 1));
}

Eigen::Matrix4cd joint_reduced_density(const TransferScenario& s, double t) {
  check_vertex(s.graph_a, s.source_a, "source");
  check_vertex(s.graph_b, s.source_b, "source");
  check_vertex(s.graph_a, s.target_a, "target");
  check_vertex(s.graph_b, s.target_b, "target");
  const int na = s.graph_a.vertex_count();
  const int nb = s.graph_b.vertex_count();
  if (na + nb > 12)
    throw input_error("joint oracle capped at 12 qubits total, got " + std::to_string(na + nb));

  const Eigen::Index dim_a = Eigen::Index(1) << na;
  const Eigen::Index dim_b = Eigen::Index(1) << nb;

  // (|0>_A |source_b>_B + |source_a>_A |0>_B) / sqrt(2), A block owns the
  // high bits and vertex 1 the most significant bit of its block.
  const Eigen::Index exc_a = Eigen::Index(1) << (na - s.source_a);
  const Eigen::Index exc_b = Eigen::Index(1) << (nb - s.source_b);
  ComplexMatrix psi = ComplexMatrix::Zero(dim_a, dim_b);  // Psi[a, b]
  const double inv = std::sqrt(0.5);
  psi(0, exc_b) += inv;
  psi(exc_a, 0) += inv;

  const ComplexMatrix ua = propagator(build_hamiltonian(s.graph_a, s.model), t).matrix();
  const ComplexMatrix ub = propagator(build_hamiltonian(s.graph_b, s.model), t).matrix();
  // (U_A tensor U_B) psi in matrix form.
  psi = ua * psi * ub.transpose();

  // Reduce onto (target_a, target_b) by accumulating outer products of the
  // 4-amplitude slices over every environment assignment.
  const Eigen::Index bit_a = Eigen::Index(1) << (na - s.target_a);
  const Eigen::Index bit_b = Eigen::Index(1) << (nb - s.target_b);
  Eigen::Matrix4cd rho = Eigen::Matrix4cd::Zero();
  Eigen::Vector4cd slice;
  for (Eigen::Index ea = 0; ea < dim_a; ++ea) {
    if (ea & bit_a) continue;  // environment indices leave the target bit clear
    for (Eigen::Index eb = 0; eb < dim_b; ++eb) {
      if (eb & bit_b) continue;
      slice(0) = psi(ea, eb);
      slice(1) = psi(ea, eb | bit_b);
      slice(2) = psi(ea | bit_a, eb);
      slice(3) = psi(ea | bit_a, eb | bit_b);
      rho.noalias() += slice * slice.adjoint();
    }
  }
  return rho;
}

double joint_concurrence_oracle(const TransferScenario& s, double t) {
  return concurrence(TwoQubitDensity(joint_reduced_density(s, t)));
}

}  // namespace spinnet
