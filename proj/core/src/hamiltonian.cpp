#include "spinnet/hamiltonian.hpp"

#include <string>

#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

void validate_model(const CouplingModel& model) {
  if (!(model.scale > 0.0)) throw input_error("coupling scale must be positive");
}

}  // namespace

HermitianOperator build_hamiltonian(const Graph& g, const CouplingModel& model) {
  validate_model(model);
  const int n = g.vertex_count();
  if (n > 12) throw input_error("network Hamiltonian capped at 12 qubits, got n=" +
                                std::to_string(n));
  const Eigen::Index dim = Eigen::Index(1) << n;
  ComplexMatrix h = ComplexMatrix::Zero(dim, dim);
  const double s = model.scale;

  for (auto [u, v] : g.edges()) {
    const Eigen::Index bu = Eigen::Index(1) << (n - u);  // vertex 1 owns the MSB
    const Eigen::Index bv = Eigen::Index(1) << (n - v);
    for (Eigen::Index idx = 0; idx < dim; ++idx) {
      const bool eu = idx & bu;
      const bool ev = idx & bv;
      // (XX + YY) maps |01> <-> |10> with matrix element 2, else vanishes.
      if (eu != ev) h(idx ^ (bu | bv), idx) += Complex(-2.0 * s, 0.0);
      // ZZ is diagonal: +1 on aligned bits, -1 otherwise.
      if (model.kind == Coupling::Heisenberg) h(idx, idx) += Complex(eu == ev ? -s : s, 0.0);
    }
  }
  return HermitianOperator(std::move(h));
}

HermitianOperator single_excitation_block(const Graph& g, const CouplingModel& model) {
  validate_model(model);
  const int n = g.vertex_count();
  ComplexMatrix h = (-2.0 * model.scale) * g.adjacency_matrix().cast<Complex>();
  if (model.kind == Coupling::Heisenberg) {
    const int edges = g.edge_count();
    for (int i = 1; i <= n; ++i)
      h(i - 1, i - 1) += Complex(model.scale * (2.0 * g.degree(i) - edges), 0.0);
  }
  return HermitianOperator(std::move(h));
}

}  // namespace spinnet
