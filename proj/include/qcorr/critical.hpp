#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qcorr/bell.hpp"
#include "qcorr/channel.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

/// Principal branch W_0 of w e^w = x, real x >= -1/e. Halley iteration from
/// a branch-point series or logarithmic guess; stops once the residual falls
/// below 1e-13 max(1, |x|) and returns with one further step applied, which
/// leaves the result accurate to rounding.
inline double lambert_w0(double x) {
  constexpr double kNegInvE = -0.36787944117144232;  // -1/e
  if (x < kNegInvE - 1e-15)
    throw std::domain_error("lambert_w0: argument below -1/e");
  if (x <= kNegInvE) return -1.0;

  double w;
  if (x < -0.25) {
    // Series around the branch point, p = sqrt(2 (1 + e x)).
    const double p = std::sqrt(2.0 * (1.0 + std::exp(1.0) * x));
    w = -1.0 + p - p * p / 3.0 + 11.0 * p * p * p / 72.0;
  } else if (x < std::exp(1.0)) {
    w = std::log1p(x);
  } else {
    const double l = std::log(x);
    w = l - std::log(l);
  }

  for (int i = 0; i < 50; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double next = w - f / denom;
    if (std::abs(f) <= 1e-13 * std::max(1.0, std::abs(x))) return next;
    w = next;
  }
  throw convergence_error("lambert_w0: iteration did not converge");
}

namespace detail {

/// Gamma tau as a function of Gamma eta and gamma/Gamma; solves
/// r T + e^{-r T} = 1 + eta_scaled r on the principal branch.
inline double scaled_critical_time(double eta_scaled, double ratio) {
  const double x = eta_scaled * ratio;
  if (x == 0.0) return 0.0;  // the crossing sits exactly at t = 0
  return (1.0 + x + lambert_w0(-std::exp(-1.0 - x))) / ratio;
}

}  // namespace detail

/// Sudden-change time of the dominant-coefficient switch along a dephasing
/// trajectory. tau is absent when |c1(0)| < |c3|, c1(0) = 0, or c3 = 0;
/// |c1(0)| = |c3| gives tau = 0.
struct CriticalPoint {
  std::optional<double> tau;               // absolute time
  std::optional<double> scaled_tau;        // Gamma tau
  double eta = 0.0;                        // ln|c1(0)/c3| / Gamma; may be +-inf or NaN
  std::optional<double> lambert_argument;  // -e^{-1 - eta gamma}; absent when markovian
};

inline CriticalPoint critical_time(const BellDiagonalState& s,
                                   const DephasingChannel& ch) {
  CriticalPoint out;
  const double a1 = std::abs(s.c1);
  const double a3 = std::abs(s.c3);
  if (a1 == 0.0 && a3 == 0.0)
    out.eta = std::numeric_limits<double>::quiet_NaN();
  else if (a3 == 0.0)
    out.eta = std::numeric_limits<double>::infinity();
  else if (a1 == 0.0)
    out.eta = -std::numeric_limits<double>::infinity();
  else
    out.eta = std::log(a1 / a3) / ch.decay_rate;

  if (a1 == 0.0 || a3 == 0.0 || a1 < a3) return out;

  const double eta_scaled = out.eta * ch.decay_rate;
  if (ch.markovian) {
    out.scaled_tau = eta_scaled;
    out.tau = out.eta;
    return out;
  }
  const double ratio = ch.bandwidth / ch.decay_rate;
  out.lambert_argument = -std::exp(-1.0 - eta_scaled * ratio);
  out.scaled_tau = detail::scaled_critical_time(eta_scaled, ratio);
  out.tau = *out.scaled_tau / ch.decay_rate;
  return out;
}

namespace detail {

/// The two closed-form trajectory branches below require the factorizing
/// family c2 = -c1 c3 with c1 dominant.
inline void require_factorizing_family(const BellDiagonalState& s) {
  const double a1 = std::abs(s.c1);
  if (a1 < std::abs(s.c2) || a1 < std::abs(s.c3))
    throw std::invalid_argument(
        "piecewise trajectory: requires |c1| >= |c2| and |c1| >= |c3|");
  if (s.c1 != 0.0 && std::abs(s.c2 / s.c1 + s.c3) > 1e-12)
    throw std::invalid_argument(
        "piecewise trajectory: requires the factorizing family c2 = -c1 c3");
}

}  // namespace detail

/// Closed-form discord along the trajectory of a factorizing-family state:
/// constant 1 - H((1 + c3)/2) while |c1(t)| >= |c3| (t <= tau), then
/// 1 - H((1 + c1(t))/2). The t <= tau side takes the first branch.
inline double discord_piecewise(const BellDiagonalState& s,
                                const DephasingChannel& ch, double t) {
  detail::require_factorizing_family(s);
  const double w = decoherence_function(ch, t);
  const double c1t = s.c1 * w * w;
  if (std::abs(c1t) >= std::abs(s.c3))
    return 1.0 - binary_entropy(0.5 * (1.0 + s.c3));
  return 1.0 - binary_entropy(0.5 * (1.0 + c1t));
}

/// Closed-form Hilbert-Schmidt discord along the same trajectory:
/// (c2(t)^2 + c3^2)/4 while |c1(t)| >= |c3| (t <= tau), then
/// (c1(t)^2 + c2(t)^2)/4.
inline double hs_piecewise(const BellDiagonalState& s,
                           const DephasingChannel& ch, double t) {
  detail::require_factorizing_family(s);
  const double w = decoherence_function(ch, t);
  const double c1t = s.c1 * w * w;
  const double c2t = s.c2 * w * w;
  if (std::abs(c1t) >= std::abs(s.c3)) return 0.25 * (c2t * c2t + s.c3 * s.c3);
  return 0.25 * (c1t * c1t + c2t * c2t);
}

struct SweepPoint {
  double ratio = 0.0;       // gamma / Gamma
  double scaled_tau = 0.0;  // Gamma tau
};

/// Gamma tau across bandwidth ratios at fixed Gamma eta.
inline std::vector<SweepPoint> bandwidth_sweep(const std::vector<double>& ratios,
                                               double eta_scaled) {
  if (!(eta_scaled > 0.0) || !std::isfinite(eta_scaled))
    throw std::invalid_argument("bandwidth_sweep: Gamma eta must be finite and > 0");
  std::vector<SweepPoint> out;
  out.reserve(ratios.size());
  for (double r : ratios) {
    if (!(r > 0.0) || !std::isfinite(r))
      throw std::invalid_argument("bandwidth_sweep: ratios must be finite and > 0");
    out.push_back(SweepPoint{r, detail::scaled_critical_time(eta_scaled, r)});
  }
  return out;
}

/// Index j of the sampling cell [t_j, t_{j+1}] with the largest kink score
/// |d2[j]| + |d2[j+1]|, where d2 is the second difference of the values.
/// Assumes uniform spacing; ties keep the lowest index.
inline std::size_t locate_kink_cell(const std::vector<double>& values) {
  const std::size_t n = values.size();
  if (n < 4)
    throw std::invalid_argument("locate_kink_cell: needs at least 4 samples");
  auto d2 = [&](std::size_t k) {
    return values[k + 1] - 2.0 * values[k] + values[k - 1];
  };
  std::size_t best = 1;
  double best_score = -1.0;
  for (std::size_t j = 1; j + 2 < n; ++j) {
    const double score = std::abs(d2(j)) + std::abs(d2(j + 1));
    if (score > best_score) {
      best_score = score;
      best = j;
    }
  }
  return best;
}

}  // namespace qcorr
