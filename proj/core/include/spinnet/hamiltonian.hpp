#pragma once

#include "spinnet/graph.hpp"
#include "spinnet/linalg.hpp"

namespace spinnet {

enum class Coupling { XY, Heisenberg };

/// Interaction model: pairwise XY (XX + YY) or Heisenberg (XX + YY + ZZ)
/// terms over the edges of a graph, times a global positive scale.
struct CouplingModel {
  Coupling kind = Coupling::XY;
  double scale = 1.0;
};

/// Full 2^n-dimensional network Hamiltonian
///   H = -(scale/2) * sum_{i != j} A_ij (X_i X_j + Y_i Y_j [+ Z_i Z_j]),
/// where the ordered sum visits each edge twice, so one edge contributes
/// -scale * (X_u X_v + Y_u Y_v [+ Z_u Z_v]). Qubit u owns bit n-u (vertex 1
/// is the most significant bit). Commutes with total Z. Throws input_error
/// for n > 12 or scale <= 0.
HermitianOperator build_hamiltonian(const Graph& g, const CouplingModel& model);

/// n x n restriction of the Hamiltonian to the span of single-excitation
/// basis states |i> (excitation at vertex i). For XY coupling this equals
/// -2 * scale * A(G); Heisenberg coupling adds the diagonal
/// scale * (2 deg(i) - |E|) coming from the ZZ terms.
HermitianOperator single_excitation_block(const Graph& g, const CouplingModel& model);

}  // namespace spinnet
