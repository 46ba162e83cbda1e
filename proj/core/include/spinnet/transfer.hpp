#pragma once

#include "spinnet/graph.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/linalg.hpp"

namespace spinnet {

/// Two spin networks A and B that never interact with each other. One
/// excitation is shared between them in the Bell-like state
///   (|0...0>_A |source_b>_B + |source_a>_A |0...0>_B) / sqrt(2),
/// each network evolves under its own Hamiltonian, and we ask how much
/// entanglement the pair (target_a in A, target_b in B) holds at time t.
/// Sources may equal targets. Vertices are 1-based.
struct TransferScenario {
  Graph graph_a;
  Graph graph_b;
  int source_a = 1;
  int source_b = 1;
  int target_a = 1;
  int target_b = 1;
  CouplingModel model;
};

/// Amplitudes alpha(t) = exp(-i h t) e_source of one excitation spreading
/// over a network, with h the single-excitation block. Norm is conserved.
ComplexVector excitation_amplitudes(const Graph& g, int source, double t,
                                    const CouplingModel& model);

/// Closed-form pair concurrence |alpha_j(t)| * |beta_l(t)|, built from the
/// two networks' single-excitation amplitudes.
double pair_concurrence(const TransferScenario& s, double t);

/// 4x4 reduced density matrix on (target_a, target_b) obtained by evolving
/// the full 2^(na+nb)-dimensional state vector and tracing everything else
/// out. Makes no use of excitation-number conservation. Dimension is capped
/// at 2^12 (input_error beyond).
Eigen::Matrix4cd joint_reduced_density(const TransferScenario& s, double t);

/// Wootters concurrence of joint_reduced_density: the independent check of
/// pair_concurrence.
double joint_concurrence_oracle(const TransferScenario& s, double t);

}  // namespace spinnet
