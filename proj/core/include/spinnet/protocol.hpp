#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spinnet/entanglement.hpp"
#include "spinnet/graph.hpp"
#include "spinnet/hamiltonian.hpp"
#include "spinnet/linalg.hpp"

namespace spinnet {

/// Initial state of one qubit pair (A_i, B_i) shared between the networks.
struct PairSpec {
  enum class Kind { Pure, Werner, Ground };

  Kind kind = Kind::Ground;
  double value = 0.0;  // theta for Pure, fidelity for Werner, unused for Ground

  /// cos(theta)|00> + sin(theta)|11>, theta in [0, pi/2].
  static PairSpec pure(double theta);
  /// Werner state with fidelity f in [1/4, 1].
  static PairSpec werner(double fidelity);
  /// |00>.
  static PairSpec ground();
};

/// One computational-basis outcome of measuring qubits A2..An and B2..Bn.
/// bits_a[j] is the result on A_{j+2} ('0' or '1'), bits_b likewise for B.
/// `conditional` is the normalized post-measurement state of (A1, B1);
/// branches with probability below tol::degenerate are kept, flagged
/// degenerate, and carry zero gain with a maximally mixed placeholder state.
struct OutcomeRecord {
  std::string bits_a;
  std::string bits_b;
  double probability = 0.0;
  Eigen::Matrix4cd conditional = Eigen::Matrix4cd::Identity() / 4.0;
  double concurrence_out = 0.0;
  double gain = 0.0;  // max(0, concurrence_out - baseline)
  bool degenerate = false;
};

/// Efficiency sweep entry: at parameter (theta or fidelity), the optimizer
/// found e_max at time t_opt; records list every outcome at t_opt.
struct EfficiencyResult {
  double parameter = 0.0;
  double t_opt = 0.0;
  double e_max = 0.0;
  double baseline = 0.0;
  std::vector<OutcomeRecord> records;
};

/// Product state over pairs: pair i occupies (A_i, B_i) of the register
/// A1..An, B1..Bn. Pure whenever no Werner spec is present. specs.size()
/// must equal n; n is capped at 6 (joint dimension 4^n <= 4096).
QuantumState initial_state(int n, const std::vector<PairSpec>& specs);

/// Applies U_A tensor U_B with U = exp(-i H t) built from the same graph and
/// model for both networks (first half of the register is the A block).
QuantumState evolve(const QuantumState& s, const Graph& g, const CouplingModel& model,
                    double t);

/// All 4^(n-1) outcomes of measuring A2..An, B2..Bn in the Z basis, ordered
/// by (bits_a, bits_b) read as binary numbers. Probabilities sum to 1.
/// n = 1 yields the single empty-string record. `baseline` is the reference
/// concurrence that gains are measured against.
std::vector<OutcomeRecord> enumerate_outcomes(const QuantumState& sigma, double baseline);

/// Protocol efficiency at time t:
///   E = sum_o P_o * max(0, C_o - C_baseline),
/// with C_baseline the concurrence of the initial reduced state of (A1, B1)
/// (computed, never assumed).
double efficiency(const Graph& g, const CouplingModel& model,
                  const std::vector<PairSpec>& specs, double t);

struct OptimizeOptions {
  /// Scan window [0, window]; defaults to default_time_window(g, model).
  std::optional<double> window;
  /// Coarse grid points before refinement; must be >= 100.
  int grid_points = 2000;
};

struct OptimumResult {
  double t_opt = 0.0;
  double e_max = 0.0;
};

/// Maximizes efficiency over t: coarse grid scan, then golden-section
/// refinement of the best bracket down to |dt| <= tol::time_refine.
/// Tie-break is deterministic: the smallest t among grid maxima that agree
/// within tol::tie_break.
OptimumResult optimize_time(const Graph& g, const CouplingModel& model,
                            const std::vector<PairSpec>& specs,
                            const OptimizeOptions& options = {});

/// Default optimization window: one revival period 2*pi/g0 when the full
/// spectrum is commensurate (every eigenvalue an integer multiple of some g0,
/// detected by a rational-ratio test with tolerance tol::commensurate),
/// otherwise 8*pi. Always capped at 8*pi.
double default_time_window(const Graph& g, const CouplingModel& model);

/// Parameter sweep template: every grid entry expands to one pair-spec list.
///   PureAll:       every pair Pure(theta)
///   PureFirstOnly: pair 1 Pure(theta), the rest Ground
///   WernerAll:     every pair Werner(f)
struct SweepSpec {
  enum class Kind { PureAll, PureFirstOnly, WernerAll };

  Kind kind = Kind::PureAll;
  std::vector<double> grid;  // monotone increasing parameter values
};

/// Runs optimize_time at every grid value and returns the full outcome set
/// at each optimum. Grid must be monotone increasing.
std::vector<EfficiencyResult> efficiency_curve(const Graph& g, const CouplingModel& model,
                                               const SweepSpec& sweep,
                                               const OptimizeOptions& options = {});

/// Expands a sweep entry into its pair-spec list for an n-vertex network.
std::vector<PairSpec> expand_sweep_specs(const SweepSpec& sweep, int n, double value);

/// Caches the network eigendecomposition, the initial state, and the
/// baseline concurrence so repeated time evaluations stay cheap. All the
/// free protocol functions are thin wrappers over this engine.
class ProtocolEngine {
 public:
  ProtocolEngine(Graph g, CouplingModel model, std::vector<PairSpec> specs);

  int pair_count() const { return n_; }
  double baseline() const { return baseline_; }
  const RealVector& spectrum() const { return eig_.eigenvalues; }

  /// E(t); fast path that skips record assembly.
  double efficiency_at(double t) const;
  /// Full outcome records at time t.
  std::vector<OutcomeRecord> outcomes_at(double t) const;
  /// Evolved joint state at time t.
  QuantumState state_at(double t) const;

 private:
  ComplexMatrix network_propagator(double t) const;

  Graph graph_;
  CouplingModel model_;
  std::vector<PairSpec> specs_;
  int n_;
  bool pure_;
  EigenSystem eig_;          // of the 2^n network Hamiltonian
  ComplexMatrix psi0_;       // pure path: 2^n x 2^n amplitude matrix Psi[a, b]
  ComplexMatrix rho0_;       // mixed path: 4^n x 4^n density
  double baseline_ = 0.0;
};

}  // namespace spinnet
