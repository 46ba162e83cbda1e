#include "spinnet/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "spinnet/graph.hpp"
#include "spinnet/protocol.hpp"

namespace spinnet {

namespace {

constexpr double kPi = 3.14159265358979323846;

// The closed forms under audit use the time convention in which a lone edge
// produces amplitudes cos(t), sin(t); that is coupling scale 1/2 here.
CouplingModel half_xy() { return CouplingModel{Coupling::XY, 0.5}; }

std::vector<double> linspace(double lo, double hi, int count) {
  std::vector<double> v(static_cast<size_t>(count));
  for (int i = 0; i < count; ++i)
    v[static_cast<size_t>(i)] = lo + (hi - lo) * i / (count - 1);
  return v;
}

std::string fmt(double x) {
  std::ostringstream ss;
  ss << std::setprecision(6) << x;
  return ss.str();
}

// Single-pair concentration formulas (two-site network, one entangled pair).
double one_pair_formula(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  const double x = std::cos(t) * std::cos(t);
  return 2.0 * s * c * (x - c * c - s * s * x * x);
}

double one_pair_max_formula(double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return c / (2.0 * s) * (1.0 - 4.0 * c * c * s * s);
}

// Printed two-pair branch formulas (two-site network, both pairs entangled).
double two_pair_p00_printed(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  return 0.5 * c * c * (2.0 * c * c - s * s - s * s * std::cos(4.0 * t));
}

double two_pair_p11_printed(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  return 0.5 * s * s * (c * c - 2.0 * s * s + c * c * std::cos(4.0 * t));
}

double two_pair_c00_printed(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  return 4.0 * s * c * std::cos(2.0 * t) /
         (2.0 * c * c - s * s - s * s * std::cos(4.0 * t));
}

double two_pair_c11_printed(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  return 4.0 * s * c * std::cos(2.0 * t) /
         (c * c - 2.0 * s * s + c * c * std::cos(4.0 * t));
}

double two_pair_eff_printed(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  const double c2 = c * c, s2 = s * s;
  const double c4 = std::pow(c, 4), s4 = std::pow(s, 4);
  const double cos2t = std::cos(2.0 * t), cos4t = std::cos(4.0 * t);
  return c4 * s4 * (c2 - 2.0 * s2 - 2.0 * cos2t + c2 * cos4t) *
             (2.0 * c2 - s2 - 2.0 * cos2t - s2 * cos4t) -
         2.0 * std::pow(c, 5) * s * cos4t;
}

double two_pair_max_printed(double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return 2.0 * std::pow(c, 4) * s * (8.0 * std::pow(s, 7) - c);
}

// Sign-corrected two-pair branch values derived from the exact evolution.
double two_pair_p00_truth(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  const double x = std::cos(2.0 * t);
  return std::pow(c, 4) + c * c * s * s * x * x;
}

double two_pair_p11_truth(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  const double x = std::cos(2.0 * t);
  return std::pow(s, 4) + c * c * s * s * x * x;
}

double two_pair_c00_truth(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  const double x = std::abs(std::cos(2.0 * t));
  return 2.0 * c * s * x / (c * c + s * s * x * x);
}

double two_pair_c11_truth(double theta, double t) {
  const double s = std::sin(theta), c = std::cos(theta);
  const double x = std::abs(std::cos(2.0 * t));
  return 2.0 * c * s * x / (c * c * x * x + s * s);
}

double three_node_formula(double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return 5.0 * c * c * s * s * (1.0 - 2.0 * c * c);
}

double four_node_formula(double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return (1.0 / 16.0) * c * s * s * s *
         (8.0 * std::cos(4.0 * theta) - 3.0 * std::cos(6.0 * theta) -
          29.0 * std::cos(2.0 * theta) + 8.0);
}

double five_node_formula(double theta) {
  const double s = std::sin(theta), c = std::cos(theta);
  return 0.25 * c * s * s * s *
         (std::cos(4.0 * theta) - std::cos(6.0 * theta) -
          13.0 * std::cos(2.0 * theta) + 1.0);
}

double werner_offset_printed(double f) { return (1.0 + 4.0 * f - 32.0 * f * f) / 36.0; }

std::vector<PairSpec> all_pure(int n, double theta) {
  return std::vector<PairSpec>(static_cast<size_t>(n), PairSpec::pure(theta));
}

}  // namespace

FormulaCheck check_one_pair_efficiency() {
  FormulaCheck chk;
  chk.id = "one-pair-efficiency";
  chk.formula =
      "E(theta,t) = 2 sin(theta)cos(theta) (cos^2 t - cos^2 theta - sin^2 theta cos^4 t), "
      "clamped at 0";
  chk.tolerance = 1e-9;
  const Graph g = Graph::path(2);
  double dev = 0.0;
  for (double theta : linspace(0.0, kPi / 2.0, 13)) {
    ProtocolEngine engine(g, half_xy(), {PairSpec::pure(theta), PairSpec::ground()});
    for (double t : linspace(0.0, kPi, 26)) {
      const double expected = std::max(0.0, one_pair_formula(theta, t));
      dev = std::max(dev, std::abs(engine.efficiency_at(t) - expected));
    }
  }
  chk.max_abs_deviation = dev;
  chk.confirmed = dev <= chk.tolerance;
  chk.notes = {
      "only the 00 branch can gain; the formula is negative exactly where the protocol "
      "yields zero efficiency"};
  return chk;
}

FormulaCheck check_one_pair_optimum() {
  FormulaCheck chk;
  chk.id = "one-pair-optimum";
  chk.formula =
      "cos^2(t*) = 1/(2 sin^2 theta); E*(theta) = cos(theta)/(2 sin(theta)) "
      "(1 - 4 cos^2 theta sin^2 theta)";
  chk.tolerance = 1e-8;
  const Graph g = Graph::path(2);
  double dev_val = 0.0, dev_time = 0.0;
  for (double theta : {0.9, 1.1, 1.3}) {
    const OptimumResult r =
        optimize_time(g, half_xy(), {PairSpec::pure(theta), PairSpec::ground()});
    dev_val = std::max(dev_val, std::abs(r.e_max - one_pair_max_formula(theta)));
    const double s = std::sin(theta);
    const double x = std::cos(r.t_opt) * std::cos(r.t_opt);
    dev_time = std::max(dev_time, std::abs(x - 1.0 / (2.0 * s * s)));
  }
  chk.max_abs_deviation = dev_val;
  chk.confirmed = dev_val <= chk.tolerance;
  chk.notes = {"largest |cos^2 t_opt - 1/(2 sin^2 theta)| over theta in {0.9, 1.1, 1.3}: " +
               fmt(dev_time) + " (time-law tolerance 1e-4)"};
  return chk;
}

FormulaCheck check_three_node_max_efficiency() {
  FormulaCheck chk;
  chk.id = "three-node-max-efficiency";
  chk.formula = "E(theta) = 5 cos^2 theta sin^2 theta (1 - 2 cos^2 theta)";
  chk.tolerance = 1e-8;
  const Graph chain = Graph::path(3);
  const Graph full = Graph::complete(3);
  const CouplingModel unit{Coupling::XY, 1.0};
  double dev = 0.0;
  for (double theta : linspace(kPi / 4.0, kPi / 2.0, 20)) {
    const double expected = three_node_formula(theta);
    const std::vector<PairSpec> specs = all_pure(3, theta);
    ProtocolEngine chain_engine(chain, half_xy(), specs);
    ProtocolEngine full_engine(full, half_xy(), specs);
    dev = std::max(dev, std::abs(chain_engine.efficiency_at(kPi / std::sqrt(2.0)) - expected));
    dev = std::max(dev, std::abs(full_engine.efficiency_at(kPi) - expected));
    dev = std::max(dev, std::abs(optimize_time(chain, unit, specs).e_max - expected));
    dev = std::max(dev, std::abs(optimize_time(full, unit, specs).e_max - expected));
  }
  chk.max_abs_deviation = dev;
  chk.confirmed = dev <= chk.tolerance;
  const double spot_theta = 3.0 * kPi / 8.0;
  const std::vector<PairSpec> spot_specs = all_pure(3, spot_theta);
  ProtocolEngine chain_spot(chain, half_xy(), spot_specs);
  const OptimumResult chain_best = optimize_time(chain, half_xy(), spot_specs);
  const OptimumResult full_best = optimize_time(full, half_xy(), spot_specs);
  chk.notes = {
      "every conditional concurrence is at most 1 and the gains are clamped at zero, so "
      "E <= 1 - C_baseline = 1 - sin(2 theta); at theta = 3 pi/8 that bound is " +
          fmt(1.0 - std::sin(2.0 * spot_theta)) + " while the closed form claims " +
          fmt(three_node_formula(spot_theta)) + ", so no simulator can reach it",
      "at coupling scale 1/2 and t = pi/sqrt(2) the chain propagator is a parity-signed "
      "site reversal that maps the product of pairs back onto itself; the simulated "
      "efficiency there is exactly " +
          fmt(chain_spot.efficiency_at(kPi / std::sqrt(2.0))) + " at theta = 3 pi/8",
      "true maxima over the full window at theta = 3 pi/8: chain " + fmt(chain_best.e_max) +
          " at t = " + fmt(chain_best.t_opt) + ", triangle " + fmt(full_best.e_max) +
          " at t = " + fmt(full_best.t_opt)};
  return chk;
}

FormulaCheck check_four_node_max_efficiency() {
  FormulaCheck chk;
  chk.id = "four-node-max-efficiency";
  chk.formula =
      "E(theta) = (1/16) cos theta sin^3 theta (8 cos 4theta - 3 cos 6theta - "
      "29 cos 2theta + 8)";
  chk.tolerance = 1e-6;
  const Graph ring = Graph::cycle(4);
  const Graph full = Graph::complete(4);
  double dev = 0.0;
  for (double theta : linspace(kPi / 4.0, kPi / 2.0, 20)) {
    const double expected = four_node_formula(theta);
    const std::vector<PairSpec> specs = all_pure(4, theta);
    ProtocolEngine ring_engine(ring, half_xy(), specs);
    ProtocolEngine full_engine(full, half_xy(), specs);
    dev = std::max(dev, std::abs(ring_engine.efficiency_at(kPi) - expected));
    dev = std::max(dev, std::abs(full_engine.efficiency_at(kPi / 2.0) - expected));
  }
  chk.max_abs_deviation = dev;
  chk.confirmed = dev <= chk.tolerance;
  const double spot_theta = 3.0 * kPi / 8.0;
  const std::vector<PairSpec> spot_specs = all_pure(4, spot_theta);
  ProtocolEngine ring_spot(ring, half_xy(), spot_specs);
  ProtocolEngine full_spot(full, half_xy(), spot_specs);
  const OptimumResult ring_best = optimize_time(ring, half_xy(), spot_specs);
  chk.notes = {
      "the clamped-gain bound E <= 1 - sin(2 theta) gives " +
          fmt(1.0 - std::sin(2.0 * spot_theta)) + " at theta = 3 pi/8, below the closed "
          "form's " + fmt(four_node_formula(spot_theta)) + ", so the curve is unreachable",
      "simulated values at theta = 3 pi/8: 4-ring at t = pi " +
          fmt(ring_spot.efficiency_at(kPi)) + ", fully connected at t = pi/2 " +
          fmt(full_spot.efficiency_at(kPi / 2.0)),
      "true 4-ring maximum over the full window at theta = 3 pi/8: " + fmt(ring_best.e_max) +
          " at t = " + fmt(ring_best.t_opt)};
  return chk;
}

FormulaCheck check_five_node_efficiency_at_pi() {
  FormulaCheck chk;
  chk.id = "five-node-at-revival-time";
  chk.formula =
      "E(theta) = (1/4) cos theta sin^3 theta (cos 4theta - cos 6theta - "
      "13 cos 2theta + 1) at t = pi";
  chk.tolerance = 1e-3;
  const Graph ring = Graph::cycle(5);
  double dev = 0.0;
  for (double theta : linspace(kPi / 4.0, kPi / 2.0, 20)) {
    ProtocolEngine engine(ring, half_xy(), all_pure(5, theta));
    dev = std::max(dev, std::abs(engine.efficiency_at(kPi) - five_node_formula(theta)));
  }
  chk.max_abs_deviation = dev;
  chk.confirmed = dev <= chk.tolerance;

  const double spot_theta = 3.0 * kPi / 8.0;
  ProtocolEngine spot(ring, half_xy(), all_pure(5, spot_theta));
  const OptimumResult best = optimize_time(ring, half_xy(), all_pure(5, spot_theta));
  chk.notes = {
      "the 5-ring spectrum is incommensurate (golden-ratio eigenvalues), so t = pi is "
      "not an exact revival; deviations are physical, not numerical",
      "theta = 3 pi/8: value at t = pi is " + fmt(spot.efficiency_at(kPi)) +
          ", closed form gives " + fmt(five_node_formula(spot_theta)),
      "theta = 3 pi/8: true numerical optimum over the default 8 pi window: E = " +
          fmt(best.e_max) + " at t = " + fmt(best.t_opt)};
  return chk;
}

FormulaCheck check_two_pair_outcome_probabilities() {
  FormulaCheck chk;
  chk.id = "two-pair-outcome-probabilities";
  chk.formula =
      "P00 = (1/2) cos^2 theta (2 cos^2 theta - sin^2 theta - sin^2 theta cos 4t); "
      "P11 = (1/2) sin^2 theta (cos^2 theta - 2 sin^2 theta + cos^2 theta cos 4t)";
  chk.tolerance = 1e-9;
  const Graph g = Graph::path(2);
  double dev = 0.0, dev_truth = 0.0;
  for (double theta : {0.5, 0.8, 1.1, 1.35}) {
    ProtocolEngine engine(g, half_xy(), all_pure(2, theta));
    for (double t : linspace(0.0, kPi, 21)) {
      const auto recs = engine.outcomes_at(t);
      dev = std::max(dev, std::abs(recs[0].probability - two_pair_p00_printed(theta, t)));
      dev = std::max(dev, std::abs(recs[3].probability - two_pair_p11_printed(theta, t)));
      dev_truth =
          std::max(dev_truth, std::abs(recs[0].probability - two_pair_p00_truth(theta, t)));
      dev_truth =
          std::max(dev_truth, std::abs(recs[3].probability - two_pair_p11_truth(theta, t)));
    }
  }
  chk.max_abs_deviation = dev;
  chk.confirmed = dev <= chk.tolerance;
  chk.notes = {
      "printed forms break at t = 0, where the 00 branch must carry cos^4 + cos^2 sin^2 "
      "= cos^2, and go negative near t = pi/4",
      "sign-corrected forms cos^4 + cos^2 sin^2 cos^2 2t and sin^4 + cos^2 sin^2 cos^2 2t "
      "match the simulator within " +
          fmt(dev_truth)};
  return chk;
}

FormulaCheck check_two_pair_outcome_concurrences() {
  FormulaCheck chk;
  chk.id = "two-pair-outcome-concurrences";
  chk.formula =
      "C00 = 4 sin cos cos 2t / (2 cos^2 - sin^2 - sin^2 cos 4t); "
      "C11 = 4 sin cos cos 2t / (cos^2 - 2 sin^2 + cos^2 cos 4t)";
  chk.tolerance = 1e-9;
  const Graph g = Graph::path(2);
  double dev = 0.0, dev_truth = 0.0;
  for (double theta : {0.5, 0.8, 1.1, 1.35}) {
    ProtocolEngine engine(g, half_xy(), all_pure(2, theta));
    for (double t : linspace(0.05, kPi - 0.05, 21)) {
      const auto recs = engine.outcomes_at(t);
      dev = std::max(dev, std::abs(recs[0].concurrence_out - two_pair_c00_printed(theta, t)));
      dev = std::max(dev, std::abs(recs[3].concurrence_out - two_pair_c11_printed(theta, t)));
      dev_truth = std::max(dev_truth,
                           std::abs(recs[0].concurrence_out - two_pair_c00_truth(theta, t)));
      dev_truth = std::max(dev_truth,
                           std::abs(recs[3].concurrence_out - two_pair_c11_truth(theta, t)));
    }
  }
  chk.max_abs_deviation = dev;
  chk.confirmed = dev <= chk.tolerance;
  chk.notes = {
      "printed rational forms change sign and diverge where their (equally disputed) "
      "denominators vanish; simulator concurrences stay in [0, 1]",
      "sign-corrected forms 2 cos sin |cos 2t| / (cos^2 + sin^2 cos^2 2t) and "
      "2 cos sin |cos 2t| / (cos^2 cos^2 2t + sin^2) match the simulator within " +
          fmt(dev_truth)};
  return chk;
}

FormulaCheck check_two_pair_efficiency() {
  FormulaCheck chk;
  chk.id = "two-pair-efficiency";
  chk.formula =
      "E(theta,t) = cos^4 sin^4 (cos^2 - 2 sin^2 - 2 cos 2t + cos^2 cos 4t)"
      "(2 cos^2 - sin^2 - 2 cos 2t - sin^2 cos 4t) - 2 cos^5 sin cos 4t; "
      "claimed max at t = pi: E(theta) = 2 cos^4 sin (8 sin^7 - cos)";
  chk.tolerance = 1e-6;
  const Graph g = Graph::path(2);
  double dev = 0.0;
  for (double theta : {0.9, 1.1, 1.3}) {
    ProtocolEngine engine(g, half_xy(), all_pure(2, theta));
    for (double t : linspace(0.0, kPi, 21))
      dev = std::max(dev, std::abs(engine.efficiency_at(t) - two_pair_eff_printed(theta, t)));
  }
  chk.max_abs_deviation = dev;
  chk.confirmed = dev <= chk.tolerance;

  ProtocolEngine spot(g, half_xy(), all_pure(2, kPi / 3.0));
  const OptimumResult best = optimize_time(g, half_xy(), all_pure(2, kPi / 3.0));
  std::ostringstream truth_dev;
  {
    double d = 0.0;
    for (double theta : {0.9, 1.1, 1.3}) {
      ProtocolEngine engine(g, half_xy(), all_pure(2, theta));
      const double s = std::sin(theta), c = std::cos(theta);
      for (double t : linspace(0.0, kPi, 21)) {
        const double x = std::abs(std::cos(2.0 * t));
        const double truth = std::max(0.0, 2.0 * c * c * c * s * (x - c * c - s * s * x * x));
        d = std::max(d, std::abs(engine.efficiency_at(t) - truth));
      }
    }
    truth_dev << fmt(d);
  }
  chk.notes = {
      "at t = pi the joint propagator is a local phase, so the true efficiency is " +
          fmt(spot.efficiency_at(kPi)) + " at theta = pi/3 where the printed maximum gives " +
          fmt(two_pair_max_printed(kPi / 3.0)),
      "true efficiency follows 2 cos^3 sin (x - cos^2 - sin^2 x^2) with x = |cos 2t| for "
      "theta > pi/4 (simulator deviation " +
          truth_dev.str() + "), so the true two-pair maximum at theta = pi/3 is " +
          fmt(best.e_max) + " at t = " + fmt(best.t_opt),
      "the true two-pair maximum is cos^2 theta times the one-pair maximum; it never "
      "exceeds the one-pair curve"};
  return chk;
}

FormulaCheck check_werner_pair_offset() {
  FormulaCheck chk;
  chk.id = "werner-offset";
  chk.formula = "C_o - C = (1 + 4f - 32 f^2)/36 for every outcome of two-node Werner runs";
  chk.tolerance = 1e-9;
  const Graph g = Graph::path(2);
  double dev = 0.0, max_eff = 0.0;
  double f1_offset_lo = 0.0, f1_offset_hi = -1.0;
  for (double f : {0.5, 0.7, 0.9, 1.0}) {
    ProtocolEngine engine(g, half_xy(),
                          {PairSpec::werner(f), PairSpec::werner(f)});
    const double printed = werner_offset_printed(f);
    for (double t : {0.2, 0.5, 0.9, 1.3}) {
      max_eff = std::max(max_eff, engine.efficiency_at(t));
      for (const auto& rec : engine.outcomes_at(t)) {
        if (rec.degenerate) continue;
        const double offset = rec.concurrence_out - engine.baseline();
        dev = std::max(dev, std::abs(offset - printed));
        if (f == 1.0) {
          f1_offset_lo = std::min(f1_offset_lo, offset);
          f1_offset_hi = std::max(f1_offset_hi, offset);
        }
      }
    }
  }
  chk.max_abs_deviation = dev;
  chk.confirmed = dev <= chk.tolerance;
  chk.notes = {
      "two-node Werner efficiency itself stays at zero (largest observed E = " +
          fmt(max_eff) + "), every branch loses concurrence",
      "the offset is time- and outcome-dependent: at f = 1 the observed range over the "
      "probe grid is [" +
          fmt(f1_offset_lo) + ", " + fmt(f1_offset_hi) +
          "] where the printed constant gives -0.75"};
  return chk;
}

FormulaCheck check_heisenberg_equivalence() {
  FormulaCheck chk;
  chk.id = "heisenberg-equivalence";
  chk.formula = "E_XY(t) = E_Heisenberg(t) at matched times for pure pairs on n <= 3 nodes";
  chk.tolerance = 1e-9;
  const CouplingModel xy = half_xy();
  const CouplingModel heis{Coupling::Heisenberg, 0.5};
  double dev2 = 0.0, dev3 = 0.0;
  for (double theta : {0.9, 1.2}) {
    {
      const Graph g = Graph::path(2);
      ProtocolEngine exy(g, xy, all_pure(2, theta));
      ProtocolEngine eh(g, heis, all_pure(2, theta));
      for (double t : linspace(0.0, 2.0 * kPi, 17))
        dev2 = std::max(dev2, std::abs(exy.efficiency_at(t) - eh.efficiency_at(t)));
    }
    {
      const Graph g = Graph::path(3);
      ProtocolEngine exy(g, xy, all_pure(3, theta));
      ProtocolEngine eh(g, heis, all_pure(3, theta));
      for (double t : linspace(0.0, 2.0 * kPi, 17))
        dev3 = std::max(dev3, std::abs(exy.efficiency_at(t) - eh.efficiency_at(t)));
    }
  }
  chk.max_abs_deviation = std::max(dev2, dev3);
  chk.confirmed = chk.max_abs_deviation <= chk.tolerance;
  chk.notes = {
      "two-node runs: the ZZ term commutes with the XY term on a single edge and only "
      "adds sector phases that cancel in the concurrence; max deviation " +
          fmt(dev2),
      "three-node chain runs: the ZZ term neither commutes nor reduces to sector phases; "
      "max deviation " +
          fmt(dev3)};
  return chk;
}

DiscrepancyReport build_discrepancy_report() {
  DiscrepancyReport report;
  report.checks = {
      check_one_pair_efficiency(),       check_one_pair_optimum(),
      check_three_node_max_efficiency(), check_four_node_max_efficiency(),
      check_five_node_efficiency_at_pi(), check_two_pair_outcome_probabilities(),
      check_two_pair_outcome_concurrences(), check_two_pair_efficiency(),
      check_werner_pair_offset(),        check_heisenberg_equivalence(),
  };
  return report;
}

std::string DiscrepancyReport::to_text() const {
  std::ostringstream out;
  out << "closed-form audit: exact simulator vs published expressions\n";
  out << "time convention: single-edge amplitudes cos(t), sin(t) (coupling scale 1/2)\n\n";
  int confirmed = 0;
  for (const auto& chk : checks) {
    out << "[" << chk.id << "] " << (chk.confirmed ? "CONFIRMED" : "DISPUTED")
        << "  max |formula - simulator| = " << fmt(chk.max_abs_deviation)
        << " (tolerance " << fmt(chk.tolerance) << ")\n";
    out << "  formula: " << chk.formula << "\n";
    for (const auto& note : chk.notes) out << "  - " << note << "\n";
    out << "\n";
    if (chk.confirmed) ++confirmed;
  }
  out << "summary: " << confirmed << " of " << checks.size() << " confirmed\n";
  return out.str();
}

}  // namespace spinnet
