#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qcorr {

// Physicality slack for the tetrahedron check; pure Bell states sit exactly
// on the boundary and must pass.
inline constexpr double kTolPhys = 1e-12;

// Bell-diagonality detection threshold, sized for Kraus round-trip noise.
inline constexpr double kTolBell = 1e-10;

/// Two-qubit Bell-diagonal state, parameterized by the three correlation
/// coefficients (c1, c2, c3), each in [-1, 1]. The state is physical iff
/// the triple lies inside the Bell tetrahedron.
struct BellDiagonalState {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;
};

/// The four eigenvalues of a Bell-diagonal state, indexed by (a,b) as
/// lambda[2a+b].
struct BellSpectrum {
  std::array<double, 4> lambda{};

  double operator[](std::size_t i) const { return lambda[i]; }

  double min() const { return *std::min_element(lambda.begin(), lambda.end()); }

  double sum() const { return lambda[0] + lambda[1] + lambda[2] + lambda[3]; }

  /// Descending view lambda_1 >= ... >= lambda_4.
  std::array<double, 4> sorted() const {
    std::array<double, 4> s = lambda;
    std::sort(s.begin(), s.end(), std::greater<>());
    return s;
  }

  /// Indices 0..3 ordered by descending eigenvalue; ties keep (a,b) order.
  std::array<std::size_t, 4> sorted_indices() const {
    std::array<std::size_t, 4> idx{0, 1, 2, 3};
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return lambda[x] > lambda[y]; });
    return idx;
  }
};

inline std::string spectrum_component_name(std::size_t i) {
  static const char* names[] = {"lambda_00", "lambda_01", "lambda_10", "lambda_11"};
  return names[i];
}

/// lambda_ab = (1 + (-1)^a c1 - (-1)^(a+b) c2 + (-1)^b c3) / 4.
inline BellSpectrum spectrum(const BellDiagonalState& s) {
  BellSpectrum sp;
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b) {
      const double sa = (a == 0) ? 1.0 : -1.0;
      const double sb = (b == 0) ? 1.0 : -1.0;
      sp.lambda[2 * a + b] = (1.0 + sa * s.c1 - sa * sb * s.c2 + sb * s.c3) / 4.0;
    }
  return sp;
}

/// Tetrahedron membership: all eigenvalues >= -tol.
inline bool is_physical(const BellDiagonalState& s, double tol = kTolPhys) {
  return spectrum(s).min() >= -tol;
}

/// Throws with the name and value of the most negative eigenvalue if the
/// triple lies outside the tetrahedron.
inline void require_physical(const BellDiagonalState& s, double tol = kTolPhys) {
  const BellSpectrum sp = spectrum(s);
  std::size_t worst = 0;
  for (std::size_t i = 1; i < 4; ++i)
    if (sp.lambda[i] < sp.lambda[worst]) worst = i;
  if (sp.lambda[worst] < -tol) {
    std::ostringstream msg;
    msg << "state (" << s.c1 << ", " << s.c2 << ", " << s.c3
        << ") is outside the Bell tetrahedron: " << spectrum_component_name(worst)
        << " = " << sp.lambda[worst];
    throw std::invalid_argument(msg.str());
  }
}

/// Correlation triple of the pure Bell state |chi_ab>, i.e. the vertex of
/// the tetrahedron whose projector is (1 + sum_j t_j sigma_j x sigma_j)/4.
inline std::array<double, 3> bell_vertex(int a, int b) {
  const double sa = (a == 0) ? 1.0 : -1.0;
  const double sb = (b == 0) ? 1.0 : -1.0;
  return {sa, -sa * sb, sb};
}

/// |chi_ab> = (|0,b> + (-1)^a |1, 1 xor b>)/sqrt(2) in the product basis
/// |00>,|01>,|10>,|11>.
inline std::array<double, 4> bell_state_vector(int a, int b) {
  std::array<double, 4> v{};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  v[b] = inv_sqrt2;                              // |0,b>
  v[2 + (1 - b)] = ((a == 0) ? 1.0 : -1.0) * inv_sqrt2;  // |1, 1 xor b>
  return v;
}

}  // namespace qcorr
