#pragma once

#include <cmath>
#include <cstddef>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qcorr/bell.hpp"
#include "qcorr/channel.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/critical.hpp"

namespace qcorr {

/// Shortest decimal string that parses back to the same value as the
/// 12-significant-digit representation. NaN prints as lowercase "nan".
inline std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0.0 ? "inf" : "-inf";
  char ref[40];
  std::snprintf(ref, sizeof ref, "%.12g", v);
  const double target = std::strtod(ref, nullptr);
  for (int k = 1; k < 12; ++k) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", k, v);
    if (std::strtod(buf, nullptr) == target) return buf;
  }
  return ref;
}

/// One trajectory sample: time, evolved triple, and all five measures.
struct MeasureRecord {
  double time = 0.0;
  BellDiagonalState state;
  MeasureSet measures;
};

struct TrajectoryTable {
  std::vector<MeasureRecord> rows;
  std::optional<double> tau_scaled;  // Gamma tau when a sudden change exists
};

/// Uniform sampling of the dephasing trajectory: `steps` rows covering
/// [0, t_max] inclusive. t_max = 0 produces identical rows at t = 0.
inline TrajectoryTable make_trajectory(const BellDiagonalState& s0,
                                       const DephasingChannel& ch, double t_max,
                                       std::size_t steps) {
  if (steps < 2)
    throw std::invalid_argument("make_trajectory: needs at least 2 steps");
  if (!(t_max >= 0.0))
    throw std::invalid_argument("make_trajectory: t_max must be >= 0");
  require_physical(s0);
  TrajectoryTable table;
  table.tau_scaled = critical_time(s0, ch).scaled_tau;
  table.rows.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const double t =
        t_max * static_cast<double>(i) / static_cast<double>(steps - 1);
    MeasureRecord rec;
    rec.time = t;
    rec.state = evolve(s0, ch, t);
    rec.measures = measure_all(rec.state);
    table.rows.push_back(rec);
  }
  return table;
}

enum class MeasureKind { discord, hs };

inline const char* to_string(MeasureKind k) {
  return k == MeasureKind::discord ? "discord" : "hs";
}

/// Square map of one measure over (c1, c2) in [-1, 1]^2 at fixed c3.
/// Unphysical cells hold NaN. values is row-major with c1 fastest:
/// values[j * grid + i] belongs to (axis[i], axis[j]).
struct ContourTable {
  std::vector<double> axis;
  std::vector<double> values;
  double c3_fixed = 0.0;
  MeasureKind measure = MeasureKind::discord;
};

/// grid must be odd and >= 3 so the origin lines are sampled exactly.
inline ContourTable make_contour(std::size_t grid, double c3_fixed,
                                 MeasureKind measure) {
  if (grid < 3 || grid % 2 == 0)
    throw std::invalid_argument("make_contour: grid must be odd and at least 3");
  if (!(std::abs(c3_fixed) <= 1.0))
    throw std::invalid_argument("make_contour: requires |c3| <= 1");
  ContourTable table;
  table.c3_fixed = c3_fixed;
  table.measure = measure;
  table.axis.resize(grid);
  const double denom = static_cast<double>(grid - 1);
  for (std::size_t i = 0; i < grid; ++i)
    table.axis[i] = (2.0 * static_cast<double>(i) - denom) / denom;
  table.values.reserve(grid * grid);
  for (std::size_t j = 0; j < grid; ++j)
    for (std::size_t i = 0; i < grid; ++i) {
      const BellDiagonalState s{table.axis[i], table.axis[j], c3_fixed};
      if (!is_physical(s)) {
        table.values.push_back(std::numeric_limits<double>::quiet_NaN());
        continue;
      }
      table.values.push_back(measure == MeasureKind::discord
                                 ? quantum_discord(s)
                                 : hs_discord_bell(s));
    }
  return table;
}

/// Inclusive ratio grid, logarithmically or linearly spaced; endpoints are
/// reproduced exactly.
inline std::vector<double> make_ratio_grid(double lo, double hi,
                                           std::size_t points,
                                           bool log_spacing) {
  if (points == 0)
    throw std::invalid_argument("make_ratio_grid: empty range");
  if (!(lo > 0.0) || !(hi >= lo))
    throw std::invalid_argument("make_ratio_grid: requires 0 < lo <= hi");
  if (points >= 2 && !(lo < hi))
    throw std::invalid_argument("make_ratio_grid: requires lo < hi for multiple points");
  std::vector<double> out(points);
  out.front() = lo;
  if (points == 1) return out;
  out.back() = hi;
  const double denom = static_cast<double>(points - 1);
  for (std::size_t i = 1; i + 1 < points; ++i) {
    const double u = static_cast<double>(i) / denom;
    out[i] = log_spacing ? std::exp(std::log(lo) + u * (std::log(hi) - std::log(lo)))
                         : lo + u * (hi - lo);
  }
  return out;
}

inline void write_measures_csv(std::ostream& os, const BellDiagonalState& s,
                               const MeasureSet& m) {
  os << "c1,c2,c3,D,Q_R,Q_S,C,I\n";
  os << format_number(s.c1) << ',' << format_number(s.c2) << ','
     << format_number(s.c3) << ',' << format_number(m.discord) << ','
     << format_number(m.rel_entropy) << ',' << format_number(m.hs) << ','
     << format_number(m.classical) << ',' << format_number(m.mutual) << '\n';
}

inline void write_trajectory_csv(std::ostream& os, const TrajectoryTable& table) {
  if (table.tau_scaled)
    os << "# tau_Gamma = " << format_number(*table.tau_scaled) << '\n';
  os << "Gamma_t,c1,c2,c3,D,Q_R,Q_S,C,I\n";
  for (const MeasureRecord& r : table.rows)
    os << format_number(r.time) << ',' << format_number(r.state.c1) << ','
       << format_number(r.state.c2) << ',' << format_number(r.state.c3) << ','
       << format_number(r.measures.discord) << ','
       << format_number(r.measures.rel_entropy) << ','
       << format_number(r.measures.hs) << ','
       << format_number(r.measures.classical) << ','
       << format_number(r.measures.mutual) << '\n';
}

inline void write_contour_csv(std::ostream& os, const ContourTable& table) {
  os << "# c3 = " << format_number(table.c3_fixed) << '\n';
  os << "# measure = " << to_string(table.measure) << '\n';
  os << "c1,c2,measure_value\n";
  const std::size_t grid = table.axis.size();
  for (std::size_t j = 0; j < grid; ++j)
    for (std::size_t i = 0; i < grid; ++i)
      os << format_number(table.axis[i]) << ',' << format_number(table.axis[j])
         << ',' << format_number(table.values[j * grid + i]) << '\n';
}

inline void write_sweep_csv(std::ostream& os,
                            const std::vector<SweepPoint>& points) {
  os << "gamma_over_Gamma,T\n";
  for (const SweepPoint& p : points)
    os << format_number(p.ratio) << ',' << format_number(p.scaled_tau) << '\n';
}

}  // namespace qcorr
