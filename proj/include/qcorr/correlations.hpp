#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

#include "qcorr/bell.hpp"
#include "qcorr/density.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

namespace detail {

/// x log2(x) with the 0 log 0 = 0 convention; negative round-off maps to 0.
inline double plog2(double x) { return x > 0.0 ? x * std::log2(x) : 0.0; }

}  // namespace detail

/// H(p) = -p log2 p - (1-p) log2(1-p). Accepts round-off spill of 1e-12
/// beyond [0, 1] and clamps it.
inline double binary_entropy(double p) {
  if (!(p >= -1e-12 && p <= 1.0 + 1e-12))
    throw std::domain_error("binary_entropy: argument outside [0, 1]");
  p = std::clamp(p, 0.0, 1.0);
  return -detail::plog2(p) - detail::plog2(1.0 - p);
}

/// C(rho) = 1 - H((1 + m)/2) with m = max_j |c_j|.
inline double classical_correlation(const BellDiagonalState& s) {
  const double m =
      std::max({std::abs(s.c1), std::abs(s.c2), std::abs(s.c3)});
  return 1.0 - binary_entropy(0.5 * (1.0 + m));
}

/// I(rho) = 2 + sum_ab lambda_ab log2 lambda_ab.
inline double mutual_information(const BellDiagonalState& s) {
  const BellSpectrum sp = spectrum(s);
  double acc = 2.0;
  for (std::size_t i = 0; i < 4; ++i) acc += detail::plog2(sp[i]);
  return acc;
}

/// D = I - C, evaluated exactly as those two functions compute them.
inline double quantum_discord(const BellDiagonalState& s) {
  return mutual_information(s) - classical_correlation(s);
}

/// Closest classical state under relative entropy: the two largest spectral
/// weights are equalized to Lambda/2 on their Bell projectors, the rest to
/// (1 - Lambda)/2.
struct ClosestClassicalState {
  double weight = 0.0;                        // Lambda = lambda_(1) + lambda_(2)
  std::array<std::size_t, 2> pair_indices{};  // spectrum indices of the top pair
  BellDiagonalState state{};                  // resulting Bell-diagonal triple
};

inline ClosestClassicalState closest_classical_state(const BellDiagonalState& s) {
  const BellSpectrum sp = spectrum(s);
  const auto order = sp.sorted_indices();
  ClosestClassicalState out;
  out.pair_indices = {order[0], order[1]};
  out.weight = sp[order[0]] + sp[order[1]];

  // Two distinct Bell vertices agree in exactly one coordinate; the closest
  // classical triple sits on that axis with magnitude 2 Lambda - 1.
  const auto v0 = bell_vertex(static_cast<int>(order[0] >> 1),
                              static_cast<int>(order[0] & 1));
  const auto v1 = bell_vertex(static_cast<int>(order[1] >> 1),
                              static_cast<int>(order[1] & 1));
  std::array<double, 3> c{};
  for (std::size_t j = 0; j < 3; ++j)
    if (v0[j] == v1[j]) c[j] = v0[j] * (2.0 * out.weight - 1.0);
  out.state = BellDiagonalState{c[0], c[1], c[2]};
  return out;
}

struct RelEntropyDiscord {
  double value = 0.0;
  ClosestClassicalState closest;
};

/// Q_R = S(sigma) - S(rho) = sum lambda log2 lambda + H(Lambda) + 1.
inline RelEntropyDiscord relative_entropy_discord(const BellDiagonalState& s) {
  RelEntropyDiscord out;
  out.closest = closest_classical_state(s);
  const BellSpectrum sp = spectrum(s);
  double acc = 1.0 + binary_entropy(out.closest.weight);
  for (std::size_t i = 0; i < 4; ++i) acc += detail::plog2(sp[i]);
  out.value = acc;
  return out;
}

/// Q_S for a Bell-diagonal triple: (sum_j c_j^2 - max_j c_j^2)/4.
inline double hs_discord_bell(const BellDiagonalState& s) {
  const double sq1 = s.c1 * s.c1;
  const double sq2 = s.c2 * s.c2;
  const double sq3 = s.c3 * s.c3;
  return 0.25 * (sq1 + sq2 + sq3 - std::max({sq1, sq2, sq3}));
}

/// Q_S for an arbitrary two-qubit state:
/// (|alpha|^2 + |M|^2 - max eig(alpha alpha^T + M M^T))/4.
inline double hs_discord_general(const DensityMatrix& rho) {
  const BlochDecomposition d = bloch_decomposition(rho);
  return 0.25 * (d.alpha_norm_sq() + d.corr_norm_sq() - d.delta_max());
}

/// Zero-discord Bell-diagonal state nearest in Hilbert-Schmidt norm: keep the
/// dominant coefficient, zero the others. Ties keep the lowest index.
inline BellDiagonalState nearest_zero_discord_state(const BellDiagonalState& s) {
  const std::array<double, 3> c = {s.c1, s.c2, s.c3};
  std::size_t jmax = 0;
  for (std::size_t j = 1; j < 3; ++j)
    if (std::abs(c[j]) > std::abs(c[jmax])) jmax = j;
  std::array<double, 3> out{};
  out[jmax] = c[jmax];
  return BellDiagonalState{out[0], out[1], out[2]};
}

struct MeasureSet {
  double classical = 0.0;    // C
  double mutual = 0.0;       // I
  double discord = 0.0;      // D
  double rel_entropy = 0.0;  // Q_R
  double hs = 0.0;           // Q_S
};

inline MeasureSet measure_all(const BellDiagonalState& s) {
  MeasureSet m;
  m.classical = classical_correlation(s);
  m.mutual = mutual_information(s);
  m.discord = m.mutual - m.classical;
  m.rel_entropy = relative_entropy_discord(s).value;
  m.hs = hs_discord_bell(s);
  return m;
}

}  // namespace qcorr
