// Command-line front end: entanglement transfer curves, concentration and
// purification sweeps, per-outcome tables, and the formula adjudication
// report. All numeric output is CSV with 12 significant digits so identical
// invocations produce byte-identical files.
#include <spinnet/errors.hpp>
#include <spinnet/graph.hpp>
#include <spinnet/hamiltonian.hpp>
#include <spinnet/protocol.hpp>
#include <spinnet/report.hpp>
#include <spinnet/transfer.hpp>

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace spinnet;

std::string fmt12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::vector<double> linear_grid(double lo, double hi, int steps) {
  if (steps < 1) throw input_error("step count must be at least 1");
  if (hi < lo) throw input_error("grid maximum is below its minimum");
  if (steps == 1) return {lo};
  std::vector<double> out;
  out.reserve(static_cast<size_t>(steps));
  for (int k = 0; k < steps; ++k)
    out.push_back(lo + (hi - lo) * static_cast<double>(k) / (steps - 1));
  return out;
}

// A graph argument is either "<family>:<n>" with family path|cycle|complete,
// or the path of an edge-list file.
Graph graph_from_spec(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon != std::string::npos) {
    const std::string family = spec.substr(0, colon);
    if (family == "path" || family == "cycle" || family == "complete") {
      int n = 0;
      try {
        size_t used = 0;
        n = std::stoi(spec.substr(colon + 1), &used);
        if (used != spec.size() - colon - 1) throw std::invalid_argument("trailing text");
      } catch (const std::exception&) {
        throw input_error("cannot parse vertex count in graph spec '" + spec + "'");
      }
      if (family == "path") return Graph::path(n);
      if (family == "cycle") return Graph::cycle(n);
      return Graph::complete(n);
    }
  }
  return load_edge_list(spec);
}

// Topology flags used by concentrate/purify/outcomes: a named family plus
// --nodes, or an edge-list file (in which case --nodes must be absent).
Graph graph_from_topology(const std::string& topology, std::optional<int> nodes) {
  if (topology == "path" || topology == "cycle" || topology == "complete") {
    if (!nodes)
      throw input_error("named topology '" + topology + "' requires --nodes");
    if (topology == "path") return Graph::path(*nodes);
    if (topology == "cycle") return Graph::cycle(*nodes);
    return Graph::complete(*nodes);
  }
  if (nodes)
    throw input_error("--nodes conflicts with an edge-list topology; the file fixes n");
  return load_edge_list(topology);
}

Coupling coupling_from_name(const std::string& name) {
  if (name == "xy") return Coupling::XY;
  if (name == "heisenberg") return Coupling::Heisenberg;
  throw input_error("coupling must be 'xy' or 'heisenberg'");
}

void write_output(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw input_error("cannot open output file '" + path + "'");
  out << text;
}

void warn_isolated(const Graph& g) {
  if (has_isolated_vertex(g))
    std::cerr << "warning: topology has an isolated vertex; it never couples to the "
                 "rest of the network, results may be degenerate\n";
}

// Option callbacks must signal conversion failure by returning false so the
// parser reports it as a usage error.
bool parse_int(const std::string& text, std::optional<int>& out) {
  try {
    size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) return false;
    out = v;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

bool parse_double(const std::string& text, std::optional<double>& out) {
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) return false;
    out = v;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

// ---------------------------------------------------------------------------
// transfer

struct TransferArgs {
  std::string graph_a, graph_b;
  int source_a = 1, source_b = 1, target_a = 1, target_b = 1;
  double t_max = 0.0;
  int t_steps = 0;
  double scale = 1.0;
  std::string coupling = "xy";
  bool oracle = false;
  std::string output;
};

int run_transfer(const TransferArgs& a) {
  const TransferScenario s{graph_from_spec(a.graph_a),
                           graph_from_spec(a.graph_b),
                           a.source_a,
                           a.source_b,
                           a.target_a,
                           a.target_b,
                           CouplingModel{coupling_from_name(a.coupling), a.scale}};
  if (a.t_max <= 0.0) throw input_error("--t-max must be positive");

  std::ostringstream csv;
  csv << "t,abs_alpha_target,abs_beta_target,pair_concurrence,oracle_concurrence\n";
  for (double t : linear_grid(0.0, a.t_max, a.t_steps)) {
    const ComplexVector alpha = excitation_amplitudes(s.graph_a, s.source_a, t, s.model);
    const ComplexVector beta = excitation_amplitudes(s.graph_b, s.source_b, t, s.model);
    const double aa = std::abs(alpha(s.target_a - 1));
    const double bb = std::abs(beta(s.target_b - 1));
    csv << fmt12(t) << ',' << fmt12(aa) << ',' << fmt12(bb) << ','
        << fmt12(pair_concurrence(s, t)) << ',';
    if (a.oracle) csv << fmt12(joint_concurrence_oracle(s, t));
    csv << '\n';
  }
  write_output(csv.str(), a.output);
  return 0;
}

// ---------------------------------------------------------------------------
// concentrate / purify

struct SweepArgs {
  std::string topology;
  std::optional<int> nodes;
  double lo = 0.0, hi = 0.0;
  int steps = 0;
  std::string pairs = "all";
  double scale = 0.5;
  std::string coupling = "xy";
  std::optional<double> window;
  int grid_points = 2000;
  std::string output;
};

int run_sweep(const SweepArgs& a, bool werner) {
  const Graph g = graph_from_topology(a.topology, a.nodes);
  const CouplingModel model{coupling_from_name(a.coupling), a.scale};
  SweepSpec sweep;
  if (werner) {
    sweep.kind = SweepSpec::Kind::WernerAll;
  } else if (a.pairs == "all") {
    sweep.kind = SweepSpec::Kind::PureAll;
  } else if (a.pairs == "first-only") {
    sweep.kind = SweepSpec::Kind::PureFirstOnly;
  } else {
    throw input_error("--pairs must be 'all' or 'first-only'");
  }
  if (!werner && sweep.kind == SweepSpec::Kind::PureAll) warn_isolated(g);
  sweep.grid = linear_grid(a.lo, a.hi, a.steps);

  OptimizeOptions opts;
  opts.window = a.window;
  opts.grid_points = a.grid_points;
  const std::vector<EfficiencyResult> curve = efficiency_curve(g, model, sweep, opts);

  std::ostringstream csv;
  csv << (werner ? "f" : "theta") << ",t_opt,e_max,baseline_concurrence\n";
  for (const auto& row : curve)
    csv << fmt12(row.parameter) << ',' << fmt12(row.t_opt) << ',' << fmt12(row.e_max)
        << ',' << fmt12(row.baseline) << '\n';
  write_output(csv.str(), a.output);
  return 0;
}

// ---------------------------------------------------------------------------
// outcomes

struct OutcomesArgs {
  std::string topology;
  std::optional<int> nodes;
  std::optional<double> theta;
  std::optional<double> fidelity;
  double time = 0.0;
  std::string pairs = "all";
  double scale = 0.5;
  std::string coupling = "xy";
  std::string output;
};

int run_outcomes(const OutcomesArgs& a) {
  const Graph g = graph_from_topology(a.topology, a.nodes);
  const CouplingModel model{coupling_from_name(a.coupling), a.scale};
  if (a.theta.has_value() == a.fidelity.has_value())
    throw input_error("exactly one of --theta / --fidelity is required");

  const int n = g.vertex_count();
  std::vector<PairSpec> specs;
  if (a.fidelity) {
    specs.assign(static_cast<size_t>(n), PairSpec::werner(*a.fidelity));
  } else if (a.pairs == "all") {
    specs.assign(static_cast<size_t>(n), PairSpec::pure(*a.theta));
    warn_isolated(g);
  } else if (a.pairs == "first-only") {
    specs.assign(static_cast<size_t>(n), PairSpec::ground());
    specs[0] = PairSpec::pure(*a.theta);
  } else {
    throw input_error("--pairs must be 'all' or 'first-only'");
  }

  ProtocolEngine engine(g, model, specs);
  const std::vector<OutcomeRecord> recs = engine.outcomes_at(a.time);

  std::ostringstream csv;
  csv << "bits_a,bits_b,probability,concurrence_out,gain\n";
  double psum = 0.0, eff = 0.0;
  for (const auto& r : recs) {
    psum += r.probability;
    eff += r.probability * r.gain;
    csv << r.bits_a << ',' << r.bits_b << ',' << fmt12(r.probability) << ','
        << fmt12(r.concurrence_out) << ',' << fmt12(r.gain) << '\n';
  }
  csv << "total,," << fmt12(psum) << ",," << fmt12(eff) << '\n';
  write_output(csv.str(), a.output);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact simulator of entanglement transfer, concentration, and purification\n"
      "between two identical spin-1/2 networks with XY interactions."};
  app.require_subcommand(1);

  TransferArgs ta;
  CLI::App* transfer = app.add_subcommand(
      "transfer", "Track one shared excitation and the entanglement of a target pair");
  transfer->add_option("--graph-a", ta.graph_a,
                       "Network A: path:N, cycle:N, complete:N, or an edge-list file")
      ->required();
  transfer->add_option("--graph-b", ta.graph_b, "Network B, same forms as --graph-a")
      ->required();
  transfer->add_option("--source-a", ta.source_a, "Excitation site in A (1-based)");
  transfer->add_option("--source-b", ta.source_b, "Excitation site in B (1-based)");
  transfer->add_option("--target-a", ta.target_a, "Observed site in A (1-based)");
  transfer->add_option("--target-b", ta.target_b, "Observed site in B (1-based)");
  transfer->add_option("--t-max", ta.t_max, "End of the time grid")->required();
  transfer->add_option("--t-steps", ta.t_steps, "Number of rows (grid spans [0, t-max])")
      ->required();
  transfer->add_option("--scale", ta.scale, "Coupling scale (default 1)");
  transfer->add_option("--coupling", ta.coupling, "xy or heisenberg (default xy)");
  transfer->add_flag("--oracle", ta.oracle,
                     "Also compute the full-space concurrence check column");
  transfer->add_option("--output", ta.output, "Write CSV here instead of stdout");

  SweepArgs ca;
  CLI::App* concentrate = app.add_subcommand(
      "concentrate", "Optimal-time efficiency sweep over the pair angle theta");
  concentrate->add_option("--topology", ca.topology,
                          "path, cycle, complete (with --nodes) or an edge-list file")
      ->required();
  concentrate->add_option("--nodes", [&ca](const CLI::results_t& res) {
        return parse_int(res[0], ca.nodes);
      }, "Vertex count for a named topology");
  concentrate->add_option("--theta-min", ca.lo, "Grid start")->required();
  concentrate->add_option("--theta-max", ca.hi, "Grid end")->required();
  concentrate->add_option("--theta-steps", ca.steps, "Grid size")->required();
  concentrate->add_option("--pairs", ca.pairs, "all or first-only (default all)");
  concentrate->add_option("--scale", ca.scale, "Coupling scale (default 0.5)");
  concentrate->add_option("--coupling", ca.coupling, "xy or heisenberg (default xy)");
  concentrate->add_option("--window", [&ca](const CLI::results_t& res) {
        return parse_double(res[0], ca.window);
      }, "Optimization window [0, window] (default: one revival period)");
  concentrate->add_option("--grid-points", ca.grid_points,
                          "Coarse optimizer grid size (default 2000)");
  concentrate->add_option("--output", ca.output, "Write CSV here instead of stdout");

  SweepArgs pa;
  CLI::App* purify = app.add_subcommand(
      "purify", "Optimal-time efficiency sweep over the Werner fidelity f");
  purify->add_option("--topology", pa.topology,
                     "path, cycle, complete (with --nodes) or an edge-list file")
      ->required();
  purify->add_option("--nodes", [&pa](const CLI::results_t& res) {
        return parse_int(res[0], pa.nodes);
      }, "Vertex count for a named topology");
  purify->add_option("--f-min", pa.lo, "Grid start (at least 0.25)")->required();
  purify->add_option("--f-max", pa.hi, "Grid end (at most 1)")->required();
  purify->add_option("--f-steps", pa.steps, "Grid size")->required();
  purify->add_option("--scale", pa.scale, "Coupling scale (default 0.5)");
  purify->add_option("--coupling", pa.coupling, "xy or heisenberg (default xy)");
  purify->add_option("--window", [&pa](const CLI::results_t& res) {
        return parse_double(res[0], pa.window);
      }, "Optimization window [0, window] (default: one revival period)");
  purify->add_option("--grid-points", pa.grid_points,
                     "Coarse optimizer grid size (default 2000)");
  purify->add_option("--output", pa.output, "Write CSV here instead of stdout");

  OutcomesArgs oa;
  CLI::App* outcomes = app.add_subcommand(
      "outcomes", "Every measurement branch of one protocol run at a fixed time");
  outcomes->add_option("--topology", oa.topology,
                       "path, cycle, complete (with --nodes) or an edge-list file")
      ->required();
  outcomes->add_option("--nodes", [&oa](const CLI::results_t& res) {
        return parse_int(res[0], oa.nodes);
      }, "Vertex count for a named topology");
  outcomes->add_option("--theta", [&oa](const CLI::results_t& res) {
        return parse_double(res[0], oa.theta);
      }, "Pure pair angle (exclusive with --fidelity)");
  outcomes->add_option("--fidelity", [&oa](const CLI::results_t& res) {
        return parse_double(res[0], oa.fidelity);
      }, "Werner fidelity (exclusive with --theta)");
  outcomes->add_option("--time", oa.time, "Evolution time")->required();
  outcomes->add_option("--pairs", oa.pairs, "all or first-only (default all)");
  outcomes->add_option("--scale", oa.scale, "Coupling scale (default 0.5)");
  outcomes->add_option("--coupling", oa.coupling, "xy or heisenberg (default xy)");
  outcomes->add_option("--output", oa.output, "Write CSV here instead of stdout");

  std::string report_output;
  CLI::App* discrepancy = app.add_subcommand(
      "discrepancy", "Adjudicate every published closed form against the simulator");
  discrepancy->add_option("--output", report_output, "Write the report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints the message
    return 2;
  }

  try {
    if (transfer->parsed()) return run_transfer(ta);
    if (concentrate->parsed()) return run_sweep(ca, /*werner=*/false);
    if (purify->parsed()) return run_sweep(pa, /*werner=*/true);
    if (outcomes->parsed()) return run_outcomes(oa);
    if (discrepancy->parsed()) {
      write_output(build_discrepancy_report().to_text(), report_output);
      return 0;
    }
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const numeric_error& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
