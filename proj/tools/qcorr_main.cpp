#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qcorr/qcorr.hpp"

namespace {

using nlohmann::ordered_json;
using namespace qcorr;

void emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream os(path);
  if (!os) throw std::invalid_argument("cannot open output file: " + path);
  os << payload;
}

ordered_json opt_to_json(const std::optional<double>& v) {
  if (v) return *v;
  return nullptr;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

int run_verify(std::uint64_t seed, std::size_t samples) {
  oracle::StateSampler sampler(seed);
  double dev_c = 0.0, dev_hs = 0.0, dev_rel = 0.0, dev_dqr = 0.0;
  for (std::size_t i = 0; i < samples; ++i) {
    const BellDiagonalState s = sampler.next();
    const MeasureSet m = measure_all(s);
    const DensityMatrix rho = to_density_matrix(s);
    dev_c = std::max(
        dev_c, std::abs(oracle::optimize_classical_correlation(rho).value - m.classical));
    dev_hs = std::max(dev_hs,
                      std::abs(oracle::min_hs_to_zero_discord(s).value - m.hs));
    dev_rel = std::max(
        dev_rel,
        std::abs(oracle::min_relative_entropy_to_classical(s).value - m.rel_entropy));
    dev_dqr = std::max(dev_dqr, std::abs(m.discord - m.rel_entropy));
  }
  std::cout << "self-check over " << samples << " seeded states (seed " << seed
            << ")\n";
  std::cout << "  max |C(optimized) - C(closed form)|     = " << format_number(dev_c)
            << "  (tolerance 2e-4)\n";
  std::cout << "  max |Q_S(scanned) - Q_S(closed form)|   = " << format_number(dev_hs)
            << "  (tolerance 1e-8)\n";
  std::cout << "  max |Q_R(scanned) - Q_R(closed form)|   = " << format_number(dev_rel)
            << "  (tolerance 1e-6)\n";
  std::cout << "  max |D - Q_R|                           = " << format_number(dev_dqr)
            << "  (tolerance 1e-10)\n";
  const bool ok =
      dev_c < 2e-4 && dev_hs < 1e-8 && dev_rel < 1e-6 && dev_dqr < 1e-10;
  std::cout << (ok ? "self-check passed\n" : "self-check FAILED\n");
  return ok ? 0 : 1;
}

DephasingChannel make_channel(bool markovian, const std::optional<double>& ratio) {
  if (markovian) return DephasingChannel::markovian_limit(1.0);
  if (!ratio)
    throw std::invalid_argument("either --ratio or --markovian is required");
  return DephasingChannel(1.0, *ratio);  // Gamma fixed to 1: times are Gamma t
}

ordered_json channel_meta(bool markovian, const std::optional<double>& ratio) {
  if (markovian) return true;
  return *ratio;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum correlation measures of Bell-diagonal two-qubit states "
               "under independent dephasing"};
  app.require_subcommand(1);

  double c1 = 0.0, c2 = 0.0, c3 = 0.0;
  std::optional<double> ratio;
  bool markovian = false;
  double t_max = 0.0;
  std::size_t steps = 500;
  std::size_t grid = 201;
  double c3_fixed = 0.5;
  std::string measure_name = "discord";
  std::string format = "csv";
  std::string out_path;
  bool verify = false;
  std::uint64_t seed = 12345;
  std::size_t samples = 50;
  double ratio_min = 0.01, ratio_max = 100.0;
  std::string spacing = "log";

  const auto add_state = [&](CLI::App* sub, bool required) {
    auto* o1 = sub->add_option("--c1", c1, "Initial coefficient c1");
    auto* o2 = sub->add_option("--c2", c2, "Initial coefficient c2");
    auto* o3 = sub->add_option("--c3", c3, "Initial coefficient c3");
    if (required) {
      o1->required();
      o2->required();
      o3->required();
    }
  };
  const auto add_channel = [&](CLI::App* sub) {
    auto* r = sub->add_option("--ratio", ratio, "Bandwidth ratio gamma/Gamma (> 0)");
    sub->add_flag("--markovian", markovian, "Markovian limit (gamma -> infinity)")
        ->excludes(r);
  };
  const auto add_output = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));
    sub->add_option("--out", out_path, "Output file (default: stdout)");
  };

  auto* cmd_measures =
      app.add_subcommand("measures", "Report D, Q_R, Q_S, C, I for one state");
  add_state(cmd_measures, false);
  add_output(cmd_measures);
  cmd_measures->add_flag("--verify", verify,
                         "Run oracle cross-checks on seeded random states");
  cmd_measures->add_option("--seed", seed, "Seed for --verify sampling");
  cmd_measures->add_option("--samples", samples, "Sample count for --verify");

  auto* cmd_trajectory = app.add_subcommand(
      "trajectory", "Sample all measures along the dephasing trajectory");
  add_state(cmd_trajectory, true);
  add_channel(cmd_trajectory);
  cmd_trajectory->add_option("--t-max", t_max, "Largest Gamma t sampled")->required();
  cmd_trajectory->add_option("--steps", steps, "Number of rows (>= 2)");
  add_output(cmd_trajectory);

  auto* cmd_critical =
      app.add_subcommand("critical", "Sudden-change time of one trajectory");
  add_state(cmd_critical, true);
  add_channel(cmd_critical);
  add_output(cmd_critical);

  auto* cmd_contour = app.add_subcommand(
      "contour", "Map one measure over (c1, c2) at fixed c3");
  cmd_contour->add_option("--c3-fixed", c3_fixed, "Fixed c3 of the map");
  cmd_contour->add_option("--grid", grid, "Points per axis (odd, >= 3)");
  cmd_contour->add_option("--measure", measure_name, "Mapped measure")
      ->check(CLI::IsMember({"discord", "hs"}));
  add_output(cmd_contour);

  auto* cmd_sweep = app.add_subcommand(
      "bandwidth-sweep", "Critical time T = Gamma tau across bandwidth ratios");
  add_state(cmd_sweep, true);
  cmd_sweep->add_option("--ratio-min", ratio_min, "Smallest gamma/Gamma");
  cmd_sweep->add_option("--ratio-max", ratio_max, "Largest gamma/Gamma");
  cmd_sweep->add_option("--steps", steps, "Number of sweep points");
  cmd_sweep->add_option("--spacing", spacing, "Ratio spacing")
      ->check(CLI::IsMember({"log", "linear"}));
  add_output(cmd_sweep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (cmd_measures->parsed()) {
      if (verify) return run_verify(seed, samples);
      if (cmd_measures->count("--c1") == 0 || cmd_measures->count("--c2") == 0 ||
          cmd_measures->count("--c3") == 0)
        throw std::invalid_argument("--c1, --c2 and --c3 are required");
      const BellDiagonalState s{c1, c2, c3};
      require_physical(s);
      const MeasureSet m = measure_all(s);
      if (format == "csv") {
        std::ostringstream os;
        write_measures_csv(os, s, m);
        emit(out_path, os.str());
      } else {
        ordered_json j;
        j["meta"] = {{"subcommand", "measures"}, {"c1", c1}, {"c2", c2},
                     {"c3", c3},                 {"version", kVersion}};
        j["rows"] = ordered_json::array(
            {{{"c1", s.c1}, {"c2", s.c2}, {"c3", s.c3}, {"D", m.discord},
              {"Q_R", m.rel_entropy}, {"Q_S", m.hs}, {"C", m.classical},
              {"I", m.mutual}}});
        emit(out_path, dump(j));
      }
      return 0;
    }

    if (cmd_trajectory->parsed()) {
      const BellDiagonalState s{c1, c2, c3};
      const DephasingChannel ch = make_channel(markovian, ratio);
      const TrajectoryTable table = make_trajectory(s, ch, t_max, steps);
      if (format == "csv") {
        std::ostringstream os;
        write_trajectory_csv(os, table);
        emit(out_path, os.str());
      } else {
        ordered_json j;
        j["meta"] = {{"subcommand", "trajectory"},
                     {"c1", c1},
                     {"c2", c2},
                     {"c3", c3},
                     {"channel", channel_meta(markovian, ratio)},
                     {"t_max", t_max},
                     {"steps", steps},
                     {"tau_Gamma", opt_to_json(table.tau_scaled)},
                     {"version", kVersion}};
        auto rows = ordered_json::array();
        for (const MeasureRecord& r : table.rows)
          rows.push_back({{"Gamma_t", r.time}, {"c1", r.state.c1},
                          {"c2", r.state.c2}, {"c3", r.state.c3},
                          {"D", r.measures.discord}, {"Q_R", r.measures.rel_entropy},
                          {"Q_S", r.measures.hs}, {"C", r.measures.classical},
                          {"I", r.measures.mutual}});
        j["rows"] = std::move(rows);
        emit(out_path, dump(j));
      }
      return 0;
    }

    if (cmd_critical->parsed()) {
      const BellDiagonalState s{c1, c2, c3};
      require_physical(s);
      const DephasingChannel ch = make_channel(markovian, ratio);
      const CriticalPoint cp = critical_time(s, ch);
      if (format == "csv") {
        std::ostringstream os;
        os << "tau_Gamma,eta_Gamma,lambert_argument\n";
        os << (cp.scaled_tau ? format_number(*cp.scaled_tau) : "none") << ','
           << format_number(cp.eta * ch.decay_rate) << ','
           << (cp.lambert_argument ? format_number(*cp.lambert_argument) : "none")
           << '\n';
        emit(out_path, os.str());
      } else {
        ordered_json j;
        j["meta"] = {{"subcommand", "critical"},
                     {"c1", c1},
                     {"c2", c2},
                     {"c3", c3},
                     {"channel", channel_meta(markovian, ratio)},
                     {"version", kVersion}};
        j["rows"] = ordered_json::array(
            {{{"tau_Gamma", opt_to_json(cp.scaled_tau)},
              {"eta_Gamma", cp.eta * ch.decay_rate},
              {"lambert_argument", opt_to_json(cp.lambert_argument)}}});
        emit(out_path, dump(j));
      }
      return 0;
    }

    if (cmd_contour->parsed()) {
      const MeasureKind kind =
          measure_name == "discord" ? MeasureKind::discord : MeasureKind::hs;
      const ContourTable table = make_contour(grid, c3_fixed, kind);
      if (format == "csv") {
        std::ostringstream os;
        write_contour_csv(os, table);
        emit(out_path, os.str());
      } else {
        ordered_json j;
        j["meta"] = {{"subcommand", "contour"},
                     {"c3", c3_fixed},
                     {"grid", grid},
                     {"measure", measure_name},
                     {"version", kVersion}};
        auto rows = ordered_json::array();
        const std::size_t n = table.axis.size();
        for (std::size_t jj = 0; jj < n; ++jj)
          for (std::size_t ii = 0; ii < n; ++ii)
            rows.push_back({{"c1", table.axis[ii]},
                            {"c2", table.axis[jj]},
                            {"measure_value", table.values[jj * n + ii]}});
        j["rows"] = std::move(rows);
        emit(out_path, dump(j));
      }
      return 0;
    }

    if (cmd_sweep->parsed()) {
      const BellDiagonalState s{c1, c2, c3};
      require_physical(s);
      const CriticalPoint cp =
          critical_time(s, DephasingChannel::markovian_limit(1.0));
      if (!cp.tau)
        throw std::invalid_argument(
            "bandwidth sweep: state has no sudden change (needs |c1| >= |c3| > 0)");
      const double eta_scaled = cp.eta;  // Gamma = 1
      const std::vector<double> ratios =
          make_ratio_grid(ratio_min, ratio_max, steps, spacing == "log");
      const std::vector<SweepPoint> points = bandwidth_sweep(ratios, eta_scaled);
      if (format == "csv") {
        std::ostringstream os;
        write_sweep_csv(os, points);
        emit(out_path, os.str());
      } else {
        ordered_json j;
        j["meta"] = {{"subcommand", "bandwidth-sweep"},
                     {"c1", c1},
                     {"c2", c2},
                     {"c3", c3},
                     {"eta_Gamma", eta_scaled},
                     {"ratio_min", ratio_min},
                     {"ratio_max", ratio_max},
                     {"steps", steps},
                     {"spacing", spacing},
                     {"version", kVersion}};
        auto rows = ordered_json::array();
        for (const SweepPoint& p : points)
          rows.push_back({{"gamma_over_Gamma", p.ratio}, {"T", p.scaled_tau}});
        j["rows"] = std::move(rows);
        emit(out_path, dump(j));
      }
      return 0;
    }
  } catch (const convergence_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
