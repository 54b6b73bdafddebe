#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

#include "qcorr/bell.hpp"
#include "qcorr/correlations.hpp"
#include "qcorr/density.hpp"
#include "qcorr/matrix.hpp"

/// Brute-force evaluators used to cross-check the closed forms. Everything
/// here works from explicit matrices and scans, never from the formulas
/// under test.
namespace qcorr::oracle {

struct GridSpec {
  std::size_t resolution = 2001;
  double lo = 0.0;
  double hi = 1.0;

  void validate() const {
    if (resolution < 2)
      throw std::invalid_argument("GridSpec: resolution must be at least 2");
    if (!(lo < hi)) throw std::invalid_argument("GridSpec: requires lo < hi");
  }
};

namespace detail {

constexpr double kInvPhi = 0.6180339887498949;

/// Golden-section minimum of f on [a, b]; returns {min value, argmin}.
template <typename F>
std::pair<double, double> golden_min(F&& f, double a, double b, int iters = 80) {
  double x1 = b - kInvPhi * (b - a);
  double x2 = a + kInvPhi * (b - a);
  double f1 = f(x1);
  double f2 = f(x2);
  for (int i = 0; i < iters; ++i) {
    if (f1 <= f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kInvPhi * (b - a);
      f1 = f(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kInvPhi * (b - a);
      f2 = f(x2);
    }
  }
  return f1 <= f2 ? std::make_pair(f1, x1) : std::make_pair(f2, x2);
}

/// Grid scan followed by golden-section polish inside the bracketing cells.
template <typename F>
std::pair<double, double> scan_min(F&& f, const GridSpec& grid) {
  grid.validate();
  const double step = (grid.hi - grid.lo) / static_cast<double>(grid.resolution - 1);
  double best = std::numeric_limits<double>::infinity();
  std::size_t best_i = 0;
  for (std::size_t i = 0; i < grid.resolution; ++i) {
    const double v = f(grid.lo + step * static_cast<double>(i));
    if (v < best) {
      best = v;
      best_i = i;
    }
  }
  const double lo = grid.lo + step * (best_i == 0 ? 0.0 : static_cast<double>(best_i - 1));
  const double hi = grid.lo + step * static_cast<double>(
                                         best_i + 1 >= grid.resolution
                                             ? grid.resolution - 1
                                             : best_i + 1);
  auto [pv, px] = golden_min(f, lo, hi);
  const double gx = grid.lo + step * static_cast<double>(best_i);
  return best <= pv ? std::make_pair(best, gx) : std::make_pair(pv, px);
}

}  // namespace detail

/// Von Neumann entropy (base 2) from closed-form 2x2 eigenvalues.
inline double entropy_2x2(const Matrix2& m) {
  const double a = m(0, 0).real();
  const double d = m(1, 1).real();
  const double h = 0.5 * (a + d);
  const double r = std::hypot(0.5 * (a - d), std::abs(m(0, 1)));
  return -qcorr::detail::plog2(h + r) - qcorr::detail::plog2(h - r);
}

/// Von Neumann entropy (base 2) via the Jacobi eigensolver.
inline double entropy_4x4(const Matrix4& m) {
  const auto es = jacobi_hermitian(m);
  double s = 0.0;
  for (double v : es.values) s -= qcorr::detail::plog2(v);
  return s;
}

/// Tr((rho1 - rho2)^2), the squared Hilbert-Schmidt distance.
inline double hs_distance(const DensityMatrix& x, const DensityMatrix& y) {
  return frobenius_sq(x.m - y.m);
}

/// I = S(rho_A) + S(rho_B) - S(rho), all from the matrix.
inline double mutual_information_matrix(const DensityMatrix& rho) {
  return entropy_2x2(partial_trace_b(rho)) + entropy_2x2(partial_trace_a(rho)) -
         entropy_4x4(rho.m);
}

/// Projective measurement direction on the Bloch sphere.
struct MeasurementBasis {
  double theta = 0.0;  // polar angle in [0, pi]
  double phi = 0.0;    // azimuth

  /// {P_+, P_-} with P_{+-} = (1 +- n.sigma)/2.
  std::array<Matrix2, 2> projectors() const {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    Matrix2 p;
    p(0, 0) = 0.5 * (1.0 + nz);
    p(1, 1) = 0.5 * (1.0 - nz);
    p(0, 1) = cplx(0.5 * nx, -0.5 * ny);
    p(1, 0) = cplx(0.5 * nx, 0.5 * ny);
    return {p, Matrix2::identity() - p};
  }
};

struct ClassicalOpt {
  double value = 0.0;  // maximized classical correlation
  MeasurementBasis basis;
};

/// C = S(rho_A) - min over projective measurements on B of the conditional
/// entropy sum q_k S(rho_A | k). Dense angle grid (grid.resolution polar
/// points over [grid.lo, grid.hi], 2 (resolution - 1) azimuthal over a full
/// turn) plus alternating golden-section polish.
inline ClassicalOpt optimize_classical_correlation(
    const DensityMatrix& rho,
    const GridSpec& grid = GridSpec{181, 0.0, 3.141592653589793}) {
  grid.validate();
  constexpr double kPi = 3.141592653589793238462643383279502884;
  const std::size_t resolution = grid.resolution;
  const Matrix2 rho_a = partial_trace_b(rho);

  // Conditional entropy after measuring direction (theta, phi) on B. The
  // unnormalized branch A_+ = Tr_B[rho (1 x P_+)] contracts directly;
  // A_- = rho_A - A_+.
  auto conditional = [&](double theta, double phi) {
    const double nx = std::sin(theta) * std::cos(phi);
    const double ny = std::sin(theta) * std::sin(phi);
    const double nz = std::cos(theta);
    Matrix2 p;
    p(0, 0) = 0.5 * (1.0 + nz);
    p(1, 1) = 0.5 * (1.0 - nz);
    p(0, 1) = cplx(0.5 * nx, -0.5 * ny);
    p(1, 0) = cplx(0.5 * nx, 0.5 * ny);
    Matrix2 ap;
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t k = 0; k < 2; ++k) {
        cplx acc = 0.0;
        for (std::size_t j = 0; j < 2; ++j)
          for (std::size_t l = 0; l < 2; ++l)
            acc += rho.m(2 * i + j, 2 * k + l) * p(l, j);
        ap(i, k) = acc;
      }
    const Matrix2 am = rho_a - ap;
    double total = 0.0;
    const double q0 = trace(ap).real();
    if (q0 > 1e-14) total += q0 * entropy_2x2(cplx(1.0 / q0) * ap);
    const double q1 = trace(am).real();
    if (q1 > 1e-14) total += q1 * entropy_2x2(cplx(1.0 / q1) * am);
    return total;
  };

  const std::size_t n_theta = resolution;
  const std::size_t n_phi = 2 * (resolution - 1);
  const double d_theta = (grid.hi - grid.lo) / static_cast<double>(n_theta - 1);
  const double d_phi = 2.0 * kPi / static_cast<double>(n_phi);
  double best = std::numeric_limits<double>::infinity();
  double best_theta = 0.0;
  double best_phi = 0.0;
  for (std::size_t i = 0; i < n_theta; ++i) {
    const double theta = grid.lo + d_theta * static_cast<double>(i);
    for (std::size_t j = 0; j < n_phi; ++j) {
      const double phi = d_phi * static_cast<double>(j);
      const double v = conditional(theta, phi);
      if (v < best) {
        best = v;
        best_theta = theta;
        best_phi = phi;
      }
    }
  }
  for (int round = 0; round < 3; ++round) {
    auto [vt, th] = detail::golden_min(
        [&](double t) { return conditional(t, best_phi); },
        std::max(grid.lo, best_theta - d_theta),
        std::min(grid.hi, best_theta + d_theta), 60);
    if (vt < best) {
      best = vt;
      best_theta = th;
    }
    auto [vp, ph] = detail::golden_min(
        [&](double f) { return conditional(best_theta, f); }, best_phi - d_phi,
        best_phi + d_phi, 60);
    if (vp < best) {
      best = vp;
      best_phi = ph;
    }
  }
  return ClassicalOpt{entropy_2x2(rho_a) - best, MeasurementBasis{best_theta, best_phi}};
}

/// Discord from the matrix alone: optimized I - C.
inline double discord_matrix(
    const DensityMatrix& rho,
    const GridSpec& grid = GridSpec{181, 0.0, 3.141592653589793}) {
  return mutual_information_matrix(rho) -
         optimize_classical_correlation(rho, grid).value;
}

struct RelEntropyMin {
  double value = 0.0;
  std::array<std::size_t, 2> pair{};  // spectrum indices sharing weight L/2
  double weight = 0.0;                // argmin L
};

/// min over classical Bell-diagonal states of S(rho || sigma), scanning the
/// three pairings of the Bell projectors and the pair weight L. Terms follow
/// the conventions p <= 1e-14 -> 0 and p > 1e-14 with mu = 0 -> +inf.
inline RelEntropyMin min_relative_entropy_to_classical(
    const BellDiagonalState& s, const GridSpec& grid = GridSpec{2001, 0.0, 1.0}) {
  const BellSpectrum sp = spectrum(s);
  constexpr std::array<std::array<std::size_t, 2>, 3> kPairings = {
      {{0, 1}, {0, 2}, {0, 3}}};

  RelEntropyMin out;
  out.value = std::numeric_limits<double>::infinity();
  for (const auto& pair : kPairings) {
    auto rel = [&](double big_l) {
      double acc = 0.0;
      for (std::size_t k = 0; k < 4; ++k) {
        const double p = sp[k];
        if (p <= 1e-14) continue;
        const bool in_pair = k == pair[0] || k == pair[1];
        const double mu = 0.5 * (in_pair ? big_l : 1.0 - big_l);
        if (mu <= 0.0) return std::numeric_limits<double>::infinity();
        acc += p * (std::log2(p) - std::log2(mu));
      }
      return acc;
    };
    auto [v, big_l] = detail::scan_min(rel, grid);
    if (v < out.value) {
      out.value = v;
      out.pair = pair;
      out.weight = big_l;
    }
  }
  return out;
}

struct HsMin {
  double value = 0.0;        // squared Hilbert-Schmidt distance
  std::size_t axis = 0;      // 0, 1, 2 for c1, c2, c3
  double coefficient = 0.0;  // surviving coefficient of the nearest state
};

/// min over zero-discord Bell-diagonal states (single-axis triples) of the
/// squared Hilbert-Schmidt distance, computed from explicit matrices.
inline HsMin min_hs_to_zero_discord(const BellDiagonalState& s,
                                    const GridSpec& grid = GridSpec{2001, -1.0,
                                                                    1.0}) {
  const DensityMatrix target{bell_matrix(s)};
  HsMin out;
  out.value = std::numeric_limits<double>::infinity();
  for (std::size_t axis = 0; axis < 3; ++axis) {
    auto dist = [&](double x) {
      std::array<double, 3> c{};
      c[axis] = x;
      return hs_distance(target,
                         DensityMatrix{bell_matrix(BellDiagonalState{c[0], c[1], c[2]})});
    };
    auto [v, x] = detail::scan_min(dist, grid);
    if (v < out.value) {
      out.value = v;
      out.axis = axis;
      out.coefficient = x;
    }
  }
  return out;
}

/// Deterministic sampler of physical Bell-diagonal triples. Uniform draws
/// use explicit 53-bit scaling so the stream is identical across platforms;
/// rejection keeps the physical tetrahedron.
struct StateSampler {
  explicit StateSampler(std::uint64_t seed) : rng_(seed) {}

  /// Uniform in [0, 1).
  double uniform() {
    return static_cast<double>(rng_() >> 11) * 0x1.0p-53;
  }

  BellDiagonalState next() {
    for (;;) {
      const double c1 = 2.0 * uniform() - 1.0;
      const double c2 = 2.0 * uniform() - 1.0;
      const double c3 = 2.0 * uniform() - 1.0;
      const BellDiagonalState s{c1, c2, c3};
      if (is_physical(s)) return s;
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qcorr::oracle
