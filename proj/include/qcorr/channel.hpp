#pragma once

#include <array>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "qcorr/bell.hpp"
#include "qcorr/density.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

/// Single-qubit dephasing with a Lorentzian environment spectrum. The
/// Markovian limit (bandwidth -> infinity) is an explicit flag, never a
/// magic bandwidth value.
struct DephasingChannel {
  double decay_rate;  // Gamma > 0
  double bandwidth;   // gamma > 0; +inf when markovian
  bool markovian;

  DephasingChannel(double decay_rate_, double bandwidth_)
      : decay_rate(decay_rate_), bandwidth(bandwidth_), markovian(false) {
    if (!(decay_rate > 0.0))
      throw std::invalid_argument("DephasingChannel: decay rate must be positive");
    if (!(bandwidth > 0.0))
      throw std::invalid_argument("DephasingChannel: bandwidth must be positive");
  }

  static DephasingChannel markovian_limit(double decay_rate_) {
    if (!(decay_rate_ > 0.0))
      throw std::invalid_argument("DephasingChannel: decay rate must be positive");
    DephasingChannel ch(decay_rate_, 1.0);
    ch.bandwidth = std::numeric_limits<double>::infinity();
    ch.markovian = true;
    return ch;
  }
};

/// f(t) = Gamma (t + (e^{-gamma t} - 1)/gamma)/2, the exponent of the
/// decoherence function. Small gamma t switches to the series
/// Gamma gamma t^2/4 (1 - gamma t/3 + (gamma t)^2/12 - (gamma t)^3/60)
/// to avoid cancellation.
inline double dephasing_exponent(const DephasingChannel& ch, double t) {
  if (!(t >= 0.0))
    throw std::invalid_argument("dephasing_exponent: time must be nonnegative");
  if (ch.markovian) return 0.5 * ch.decay_rate * t;
  const double gt = ch.bandwidth * t;
  if (gt < 1e-4) {
    const double corr = 1.0 - gt / 3.0 + gt * gt / 12.0 - gt * gt * gt / 60.0;
    return 0.25 * ch.decay_rate * ch.bandwidth * t * t * corr;
  }
  return 0.5 * ch.decay_rate * (t + std::expm1(-gt) / ch.bandwidth);
}

/// omega(t) = e^{-f(t)}, in (0, 1].
inline double decoherence_function(const DephasingChannel& ch, double t) {
  return std::exp(-dephasing_exponent(ch, t));
}

/// Kraus pair for one qubit plus the four two-qubit products
/// ops[2a + b] = k_a (x) k_b.
struct KrausSet {
  Matrix2 k0;
  Matrix2 k1;
  std::array<Matrix4, 4> ops;
};

inline KrausSet kraus_operators(const DephasingChannel& ch, double t) {
  const double w = decoherence_function(ch, t);
  KrausSet ks;
  ks.k0(0, 0) = w;
  ks.k0(1, 1) = 1.0;
  ks.k1(0, 0) = std::sqrt(std::max(0.0, 1.0 - w * w));
  ks.k1(1, 1) = 0.0;
  const Matrix2* k[2] = {&ks.k0, &ks.k1};
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) ks.ops[2 * a + b] = kron(*k[a], *k[b]);
  return ks;
}

/// Closed-form trajectory of a Bell-diagonal triple under independent local
/// dephasing on both qubits: (c1, c2, c3) -> (c1 w^2, c2 w^2, c3).
inline BellDiagonalState evolve(const BellDiagonalState& s,
                                const DephasingChannel& ch, double t) {
  const double w = decoherence_function(ch, t);
  const double w2 = w * w;
  return BellDiagonalState{s.c1 * w2, s.c2 * w2, s.c3};
}

/// Kraus-sum evolution of an arbitrary two-qubit state under the same
/// channel acting independently on each qubit.
inline DensityMatrix evolve_density(const DensityMatrix& rho,
                                    const DephasingChannel& ch, double t) {
  const KrausSet ks = kraus_operators(ch, t);
  Matrix4 out;
  for (const Matrix4& op : ks.ops) out = out + op * rho.m * adjoint(op);
  return DensityMatrix{out};
}

}  // namespace qcorr
