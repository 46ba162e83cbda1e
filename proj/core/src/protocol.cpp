#include "spinnet/protocol.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spinnet/errors.hpp"

namespace spinnet {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kWindowCap = 8.0 * kPi;

// 4x4 density of a single pair spec in the (a_i, b_i) basis.
Eigen::Matrix4cd pair_density(const PairSpec& spec) {
  switch (spec.kind) {
    case PairSpec::Kind::Pure: {
      Eigen::Vector4cd v = Eigen::Vector4cd::Zero();
      v(0) = std::cos(spec.value);
      v(3) = std::sin(spec.value);
      return v * v.adjoint();
    }
    case PairSpec::Kind::Werner:
      return werner(spec.value).matrix();
    case PairSpec::Kind::Ground: {
      Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
      m(0, 0) = 1.0;
      return m;
    }
  }
  throw input_error("unknown pair spec kind");
}

// Pure amplitude of one pair at local basis (a, b); only Pure/Ground specs.
Complex pair_amplitude(const PairSpec& spec, int a, int b) {
  if (spec.kind == PairSpec::Kind::Ground) return (a == 0 && b == 0) ? 1.0 : 0.0;
  if (a == 0 && b == 0) return std::cos(spec.value);
  if (a == 1 && b == 1) return std::sin(spec.value);
  return 0.0;
}

void validate_protocol_size(int n, size_t spec_count) {
  if (n < 1) throw input_error("protocol needs at least one pair");
  if (n > 6) throw input_error("protocol capped at 6 pairs (joint dimension 4^6)");
  if (spec_count != static_cast<size_t>(n))
    throw input_error("pair spec count must equal the network size");
}

// Joint basis index for pair bits: a-block owns the high n bits, A1/B1 the
// most significant bit of each block.
inline Eigen::Index joint_index(int n, Eigen::Index a_part, Eigen::Index b_part) {
  return (a_part << n) | b_part;
}

std::string bit_string(Eigen::Index bits, int width) {
  std::string s(static_cast<size_t>(width), '0');
  for (int j = 0; j < width; ++j)
    if ((bits >> (width - 1 - j)) & 1) s[static_cast<size_t>(j)] = '1';
  return s;
}

double window_from_spectrum(const RealVector& eigenvalues) {
  const double max_abs = eigenvalues.cwiseAbs().maxCoeff();
  const double floor = 1e-12 * std::max(1.0, max_abs);
  double lambda0 = 0.0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    const double a = std::abs(eigenvalues(k));
    if (a > floor && (lambda0 == 0.0 || a < lambda0)) lambda0 = a;
  }
  if (lambda0 == 0.0) return 2.0 * kPi;  // frozen dynamics, window is arbitrary
  for (int m = 1; m <= 64; ++m) {
    const double g0 = lambda0 / m;
    bool ok = true;
    for (Eigen::Index k = 0; k < eigenvalues.size() && ok; ++k) {
      const double a = std::abs(eigenvalues(k));
      if (a <= floor) continue;
      const double r = a / g0;
      if (std::abs(r - std::round(r)) > tol::commensurate * std::max(1.0, r)) ok = false;
    }
    if (ok) return std::min(2.0 * kPi / g0, kWindowCap);
  }
  return kWindowCap;
}

}  // namespace

PairSpec PairSpec::pure(double theta) {
  if (theta < 0.0 || theta > kPi / 2.0 + 1e-12)
    throw input_error("pure pair angle must lie in [0, pi/2]");
  return PairSpec{Kind::Pure, theta};
}

PairSpec PairSpec::werner(double fidelity) {
  if (fidelity < 0.25 - 1e-12 || fidelity > 1.0 + 1e-12)
    throw input_error("Werner fidelity must lie in [1/4, 1]");
  return PairSpec{Kind::Werner, fidelity};
}

PairSpec PairSpec::ground() { return PairSpec{Kind::Ground, 0.0}; }

QuantumState initial_state(int n, const std::vector<PairSpec>& specs) {
  validate_protocol_size(n, specs.size());
  QubitRegister reg = network_pair_register(n);
  const Eigen::Index net_dim = Eigen::Index(1) << n;

  const bool pure = std::none_of(specs.begin(), specs.end(), [](const PairSpec& s) {
    return s.kind == PairSpec::Kind::Werner;
  });

  if (pure) {
    ComplexVector psi(net_dim * net_dim);
    for (Eigen::Index a = 0; a < net_dim; ++a) {
      for (Eigen::Index b = 0; b < net_dim; ++b) {
        Complex amp = 1.0;
        for (int i = 1; i <= n && amp != Complex(0.0); ++i) {
          const int ai = static_cast<int>((a >> (n - i)) & 1);
          const int bi = static_cast<int>((b >> (n - i)) & 1);
          amp *= pair_amplitude(specs[static_cast<size_t>(i - 1)], ai, bi);
        }
        psi(joint_index(n, a, b)) = amp;
      }
    }
    return QuantumState::pure(std::move(reg), std::move(psi));
  }

  std::vector<Eigen::Matrix4cd> factors;
  factors.reserve(specs.size());
  for (const auto& s : specs) factors.push_back(pair_density(s));

  const Eigen::Index dim = net_dim * net_dim;
  ComplexMatrix rho(dim, dim);
  for (Eigen::Index ar = 0; ar < net_dim; ++ar)
    for (Eigen::Index br = 0; br < net_dim; ++br) {
      const Eigen::Index r = joint_index(n, ar, br);
      for (Eigen::Index ac = 0; ac < net_dim; ++ac)
        for (Eigen::Index bc = 0; bc < net_dim; ++bc) {
          Complex val = 1.0;
          for (int i = 1; i <= n && val != Complex(0.0); ++i) {
            const int row = static_cast<int>(((ar >> (n - i)) & 1) * 2 + ((br >> (n - i)) & 1));
            const int col = static_cast<int>(((ac >> (n - i)) & 1) * 2 + ((bc >> (n - i)) & 1));
            val *= factors[static_cast<size_t>(i - 1)](row, col);
          }
          rho(r, joint_index(n, ac, bc)) = val;
        }
    }
  return QuantumState::density(std::move(reg), std::move(rho));
}

QuantumState evolve(const QuantumState& s, const Graph& g, const CouplingModel& model,
                    double t) {
  const int n = g.vertex_count();
  if (s.qubit_count() != 2 * n)
    throw input_error("state register must hold 2n qubits for an n-vertex network");
  const ComplexMatrix u = propagator(build_hamiltonian(g, model), t).matrix();
  const Eigen::Index net_dim = u.rows();

  if (s.is_pure()) {
    const auto& psi = s.amplitudes();
    ComplexMatrix m(net_dim, net_dim);
    for (Eigen::Index a = 0; a < net_dim; ++a)
      for (Eigen::Index b = 0; b < net_dim; ++b) m(a, b) = psi(joint_index(n, a, b));
    m = u * m * u.transpose();
    ComplexVector out(net_dim * net_dim);
    for (Eigen::Index a = 0; a < net_dim; ++a)
      for (Eigen::Index b = 0; b < net_dim; ++b) out(joint_index(n, a, b)) = m(a, b);
    return QuantumState::pure(s.reg(), std::move(out));
  }

  const ComplexMatrix ubig = kron(u, u);
  ComplexMatrix rho = ubig * s.density_matrix() * ubig.adjoint();
  // Evolution must preserve Hermiticity exactly; symmetrize rounding noise.
  rho = Complex(0.5) * (rho + rho.adjoint().eval());
  return QuantumState::density(s.reg(), std::move(rho));
}

namespace {

// Gathers the four (a1, b1) amplitudes of one measurement branch from the
// amplitude matrix Psi[a, b].
inline void gather_pure(const ComplexMatrix& m, int n, Eigen::Index bits_a,
                        Eigen::Index bits_b, Eigen::Vector4cd& out) {
  const Eigen::Index half = Eigen::Index(1) << (n - 1);
  const Eigen::Index r0 = bits_a, r1 = half | bits_a;
  const Eigen::Index c0 = bits_b, c1 = half | bits_b;
  out(0) = m(r0, c0);
  out(1) = m(r0, c1);
  out(2) = m(r1, c0);
  out(3) = m(r1, c1);
}

// Branch indices of (a1, b1) in {00, 01, 10, 11} for fixed measured bits.
inline void branch_indices(int n, Eigen::Index bits_a, Eigen::Index bits_b,
                           std::array<Eigen::Index, 4>& idx) {
  const Eigen::Index half = Eigen::Index(1) << (n - 1);
  idx[0] = joint_index(n, bits_a, bits_b);
  idx[1] = joint_index(n, bits_a, half | bits_b);
  idx[2] = joint_index(n, half | bits_a, bits_b);
  idx[3] = joint_index(n, half | bits_a, half | bits_b);
}

OutcomeRecord make_record(int n, Eigen::Index bits_a, Eigen::Index bits_b,
                          const Eigen::Matrix4cd& unnormalized, double p, double baseline) {
  OutcomeRecord rec;
  rec.bits_a = bit_string(bits_a, n - 1);
  rec.bits_b = bit_string(bits_b, n - 1);
  rec.probability = std::max(0.0, p);
  if (p < tol::degenerate) {
    rec.degenerate = true;
    return rec;  // placeholder conditional, zero concurrence and gain
  }
  Eigen::Matrix4cd cond = unnormalized / p;
  cond = Complex(0.5) * (cond + cond.adjoint().eval());
  rec.conditional = cond;
  rec.concurrence_out = concurrence(TwoQubitDensity(cond));
  rec.gain = std::max(0.0, rec.concurrence_out - baseline);
  return rec;
}

}  // namespace

std::vector<OutcomeRecord> enumerate_outcomes(const QuantumState& sigma, double baseline) {
  const int qubits = sigma.qubit_count();
  if (qubits % 2 != 0) throw input_error("outcome enumeration needs a 2n-qubit state");
  const int n = qubits / 2;
  const Eigen::Index half = Eigen::Index(1) << (n - 1);

  std::vector<OutcomeRecord> records;
  records.reserve(static_cast<size_t>(half * half));
  std::array<Eigen::Index, 4> idx{};

  if (sigma.is_pure()) {
    const auto& psi = sigma.amplitudes();
    for (Eigen::Index bits_a = 0; bits_a < half; ++bits_a)
      for (Eigen::Index bits_b = 0; bits_b < half; ++bits_b) {
        branch_indices(n, bits_a, bits_b, idx);
        Eigen::Vector4cd v;
        for (int k = 0; k < 4; ++k) v(k) = psi(idx[static_cast<size_t>(k)]);
        const double p = v.squaredNorm();
        records.push_back(make_record(n, bits_a, bits_b, (v * v.adjoint()).eval(), p, baseline));
      }
  } else {
    const auto& rho = sigma.density_matrix();
    for (Eigen::Index bits_a = 0; bits_a < half; ++bits_a)
      for (Eigen::Index bits_b = 0; bits_b < half; ++bits_b) {
        branch_indices(n, bits_a, bits_b, idx);
        Eigen::Matrix4cd block;
        for (int r = 0; r < 4; ++r)
          for (int c = 0; c < 4; ++c)
            block(r, c) = rho(idx[static_cast<size_t>(r)], idx[static_cast<size_t>(c)]);
        const double p = block.trace().real();
        records.push_back(make_record(n, bits_a, bits_b, block, p, baseline));
      }
  }
  return records;
}

ProtocolEngine::ProtocolEngine(Graph g, CouplingModel model, std::vector<PairSpec> specs)
    : graph_(std::move(g)), model_(model), specs_(std::move(specs)),
      n_(graph_.vertex_count()), pure_(true) {
  validate_protocol_size(n_, specs_.size());
  eig_ = hermitian_eig(build_hamiltonian(graph_, model_));

  const QuantumState init = initial_state(n_, specs_);
  pure_ = init.is_pure();
  const Eigen::Index net_dim = Eigen::Index(1) << n_;
  if (pure_) {
    psi0_.resize(net_dim, net_dim);
    const auto& psi = init.amplitudes();
    for (Eigen::Index a = 0; a < net_dim; ++a)
      for (Eigen::Index b = 0; b < net_dim; ++b) psi0_(a, b) = psi(joint_index(n_, a, b));
  } else {
    rho0_ = init.density_matrix();
  }

  if (specs_.front().kind != PairSpec::Kind::Werner) {
    // The first pair starts unentangled with the rest, so its concurrence
    // has the exact pure form; this keeps the baseline free of eigensolver
    // noise that would otherwise leak into every gain term.
    Eigen::Vector4cd v;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) v(2 * a + b) = pair_amplitude(specs_.front(), a, b);
    baseline_ = concurrence_of_pure(v);
  } else {
    const QuantumState reduced = partial_trace(init, {"A1", "B1"});
    baseline_ = concurrence(TwoQubitDensity(reduced.density_matrix()));
  }
}

ComplexMatrix ProtocolEngine::network_propagator(double t) const {
  const auto& v = eig_.eigenvectors;
  ComplexVector phases(eig_.eigenvalues.size());
  for (Eigen::Index k = 0; k < phases.size(); ++k)
    phases(k) = std::exp(Complex(0.0, -eig_.eigenvalues(k) * t));
  return v * phases.asDiagonal() * v.adjoint();
}

double ProtocolEngine::efficiency_at(double t) const {
  const ComplexMatrix u = network_propagator(t);
  const Eigen::Index half = Eigen::Index(1) << (n_ - 1);
  double total = 0.0;

  if (pure_) {
    const ComplexMatrix m = u * psi0_ * u.transpose();
    Eigen::Vector4cd v;
    for (Eigen::Index bits_a = 0; bits_a < half; ++bits_a)
      for (Eigen::Index bits_b = 0; bits_b < half; ++bits_b) {
        gather_pure(m, n_, bits_a, bits_b, v);
        const double p = v.squaredNorm();
        if (p < tol::degenerate) continue;
        const double c_out = 2.0 * std::abs(v(0) * v(3) - v(1) * v(2)) / p;
        if (c_out > baseline_) total += p * (c_out - baseline_);
      }
    return total;
  }

  const ComplexMatrix ubig = kron(u, u);
  const ComplexMatrix w = ubig * rho0_;  // sigma = w * ubig^dag, sliced below
  std::array<Eigen::Index, 4> idx{};
  Eigen::Matrix4cd block;
  for (Eigen::Index bits_a = 0; bits_a < half; ++bits_a)
    for (Eigen::Index bits_b = 0; bits_b < half; ++bits_b) {
      branch_indices(n_, bits_a, bits_b, idx);
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          block(r, c) = ubig.row(idx[static_cast<size_t>(c)])
                            .dot(w.row(idx[static_cast<size_t>(r)]));
      const double p = block.trace().real();
      if (p < tol::degenerate) continue;
      Eigen::Matrix4cd cond = block / p;
      cond = Complex(0.5) * (cond + cond.adjoint().eval());
      const double c_out = concurrence(TwoQubitDensity(cond));
      if (c_out > baseline_) total += p * (c_out - baseline_);
    }
  return total;
}

std::vector<OutcomeRecord> ProtocolEngine::outcomes_at(double t) const {
  return enumerate_outcomes(state_at(t), baseline_);
}

QuantumState ProtocolEngine::state_at(double t) const {
  const ComplexMatrix u = network_propagator(t);
  const Eigen::Index net_dim = u.rows();
  QubitRegister reg = network_pair_register(n_);
  if (pure_) {
    const ComplexMatrix m = u * psi0_ * u.transpose();
    ComplexVector out(net_dim * net_dim);
    for (Eigen::Index a = 0; a < net_dim; ++a)
      for (Eigen::Index b = 0; b < net_dim; ++b) out(joint_index(n_, a, b)) = m(a, b);
    return QuantumState::pure(std::move(reg), std::move(out));
  }
  const ComplexMatrix ubig = kron(u, u);
  ComplexMatrix rho = ubig * rho0_ * ubig.adjoint();
  rho = Complex(0.5) * (rho + rho.adjoint().eval());
  return QuantumState::density(std::move(reg), std::move(rho));
}

double efficiency(const Graph& g, const CouplingModel& model,
                  const std::vector<PairSpec>& specs, double t) {
  return ProtocolEngine(g, model, specs).efficiency_at(t);
}

double default_time_window(const Graph& g, const CouplingModel& model) {
  const EigenSystem eig = hermitian_eig(build_hamiltonian(g, model));
  return window_from_spectrum(eig.eigenvalues);
}

namespace {

OptimumResult optimize_with_engine(const ProtocolEngine& engine, const OptimizeOptions& options) {
  if (options.grid_points < 100) throw input_error("optimizer grid needs at least 100 points");
  double window = options.window.value_or(window_from_spectrum(engine.spectrum()));
  if (!(window > 0.0)) throw input_error("optimizer window must be positive");

  const int n_grid = options.grid_points;
  std::vector<double> ts(static_cast<size_t>(n_grid) + 1);
  std::vector<double> vals(ts.size());
  for (int i = 0; i <= n_grid; ++i) {
    ts[static_cast<size_t>(i)] = window * i / n_grid;
    vals[static_cast<size_t>(i)] = engine.efficiency_at(ts[static_cast<size_t>(i)]);
  }

  // Smallest t among grid maxima that tie within tolerance.
  const double v_best = *std::max_element(vals.begin(), vals.end());
  size_t best = 0;
  while (vals[best] < v_best - tol::tie_break) ++best;

  double lo = ts[best > 0 ? best - 1 : 0];
  double hi = ts[std::min(best + 1, ts.size() - 1)];
  double t_best = ts[best];
  double f_best = vals[best];

  const double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - phi * (hi - lo);
  double x2 = lo + phi * (hi - lo);
  double f1 = engine.efficiency_at(x1);
  double f2 = engine.efficiency_at(x2);
  while (hi - lo > tol::time_refine) {
    if (f1 >= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - phi * (hi - lo);
      f1 = engine.efficiency_at(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + phi * (hi - lo);
      f2 = engine.efficiency_at(x2);
    }
    const double x = (f1 >= f2) ? x1 : x2;
    const double f = std::max(f1, f2);
    if (f > f_best) {
      f_best = f;
      t_best = x;
    }
  }
  return OptimumResult{t_best, f_best};
}

}  // namespace

OptimumResult optimize_time(const Graph& g, const CouplingModel& model,
                            const std::vector<PairSpec>& specs,
                            const OptimizeOptions& options) {
  return optimize_with_engine(ProtocolEngine(g, model, specs), options);
}

std::vector<PairSpec> expand_sweep_specs(const SweepSpec& sweep, int n, double value) {
  std::vector<PairSpec> specs;
  specs.reserve(static_cast<size_t>(n));
  switch (sweep.kind) {
    case SweepSpec::Kind::PureAll:
      specs.assign(static_cast<size_t>(n), PairSpec::pure(value));
      break;
    case SweepSpec::Kind::PureFirstOnly:
      specs.push_back(PairSpec::pure(value));
      specs.resize(static_cast<size_t>(n), PairSpec::ground());
      break;
    case SweepSpec::Kind::WernerAll:
      specs.assign(static_cast<size_t>(n), PairSpec::werner(value));
      break;
  }
  return specs;
}

std::vector<EfficiencyResult> efficiency_curve(const Graph& g, const CouplingModel& model,
                                               const SweepSpec& sweep,
                                               const OptimizeOptions& options) {
  if (sweep.grid.empty()) throw input_error("sweep grid must be non-empty");
  for (size_t i = 1; i < sweep.grid.size(); ++i)
    if (!(sweep.grid[i] > sweep.grid[i - 1]))
      throw input_error("sweep grid must be strictly increasing");

  std::vector<EfficiencyResult> results;
  results.reserve(sweep.grid.size());
  for (double value : sweep.grid) {
    ProtocolEngine engine(g, model, expand_sweep_specs(sweep, g.vertex_count(), value));
    const OptimumResult opt = optimize_with_engine(engine, options);
    EfficiencyResult entry;
    entry.parameter = value;
    entry.t_opt = opt.t_opt;
    entry.e_max = opt.e_max;
    entry.baseline = engine.baseline();
    entry.records = engine.outcomes_at(opt.t_opt);
    results.push_back(std::move(entry));
  }
  return results;
}

}  // namespace spinnet
