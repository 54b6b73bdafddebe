#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "qcorr/bell.hpp"
#include "qcorr/matrix.hpp"

namespace qcorr {

/// 4x4 two-qubit density matrix, basis ordering |00>,|01>,|10>,|11>.
struct DensityMatrix {
  Matrix4 m;
};

inline Matrix2 pauli(int j) {
  Matrix2 s;
  switch (j) {
    case 1:
      s(0, 1) = 1.0;
      s(1, 0) = 1.0;
      break;
    case 2:
      s(0, 1) = cplx(0.0, -1.0);
      s(1, 0) = cplx(0.0, 1.0);
      break;
    case 3:
      s(0, 0) = 1.0;
      s(1, 1) = -1.0;
      break;
    default:
      throw std::invalid_argument("pauli: index must be 1, 2 or 3");
  }
  return s;
}

/// Raw matrix realization (1 + sum_j c_j sigma_j x sigma_j)/4 with no
/// physicality gate; the oracle scans use it outside the tetrahedron.
inline Matrix4 bell_matrix(const BellDiagonalState& s) {
  Matrix4 m = 0.25 * Matrix4::identity();
  const double c[3] = {s.c1, s.c2, s.c3};
  for (int j = 1; j <= 3; ++j) {
    const Matrix4 ss = kron(pauli(j), pauli(j));
    m = m + 0.25 * c[j - 1] * ss;
  }
  return m;
}

inline DensityMatrix to_density_matrix(const BellDiagonalState& s) {
  require_physical(s);
  return DensityMatrix{bell_matrix(s)};
}

/// Projector onto the Bell state |chi_ab>.
inline Matrix4 bell_projector(int a, int b) {
  const std::array<double, 4> v = bell_state_vector(a, b);
  Matrix4 p;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) p(i, j) = v[i] * v[j];
  return p;
}

inline Matrix2 partial_trace_b(const DensityMatrix& rho) {
  Matrix2 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j) r(i, k) += rho.m(2 * i + j, 2 * k + j);
  return r;
}

inline Matrix2 partial_trace_a(const DensityMatrix& rho) {
  Matrix2 r;
  for (std::size_t j = 0; j < 2; ++j)
    for (std::size_t l = 0; l < 2; ++l)
      for (std::size_t i = 0; i < 2; ++i) r(j, l) += rho.m(2 * i + j, 2 * i + l);
  return r;
}

/// Hermitian within 1e-12, unit trace within 1e-12, eigenvalues >= -1e-10.
inline bool is_valid_density(const DensityMatrix& rho, double tol_herm = 1e-12,
                             double tol_trace = 1e-12, double tol_eig = 1e-10) {
  if (!is_hermitian(rho.m, tol_herm)) return false;
  if (std::abs(trace(rho.m) - cplx(1.0)) > tol_trace) return false;
  const auto es = jacobi_hermitian(rho.m);
  return es.values[0] >= -tol_eig;
}

/// Local Bloch vectors and correlation matrix of a two-qubit state:
/// alpha_j = Tr(rho sigma_j x 1), beta_j = Tr(rho 1 x sigma_j),
/// corr[j][k] = Tr(rho sigma_j x sigma_k).
struct BlochDecomposition {
  std::array<double, 3> alpha{};
  std::array<double, 3> beta{};
  std::array<std::array<double, 3>, 3> corr{};

  double alpha_norm_sq() const {
    return alpha[0] * alpha[0] + alpha[1] * alpha[1] + alpha[2] * alpha[2];
  }

  double corr_norm_sq() const {
    double s = 0.0;
    for (const auto& row : corr)
      for (double v : row) s += v * v;
    return s;
  }

  /// Largest eigenvalue of alpha alpha^T + M M^T, computed on demand.
  double delta_max() const {
    Matrix3 k;
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t l = 0; l < 3; ++l) {
        double v = alpha[j] * alpha[l];
        for (std::size_t r = 0; r < 3; ++r) v += corr[j][r] * corr[l][r];
        k(j, l) = v;
      }
    return jacobi_hermitian(k).values[2];
  }
};

inline BlochDecomposition bloch_decomposition(const DensityMatrix& rho) {
  BlochDecomposition d;
  const Matrix2 id = Matrix2::identity();
  for (int j = 1; j <= 3; ++j) {
    const Matrix2 sj = pauli(j);
    d.alpha[j - 1] = trace(rho.m * kron(sj, id)).real();
    d.beta[j - 1] = trace(rho.m * kron(id, sj)).real();
    for (int k = 1; k <= 3; ++k)
      d.corr[j - 1][k - 1] = trace(rho.m * kron(sj, pauli(k))).real();
  }
  return d;
}

/// Rebuild the matrix from its Bloch data; inverse of bloch_decomposition.
inline DensityMatrix bloch_reconstruct(const BlochDecomposition& d) {
  const Matrix2 id = Matrix2::identity();
  Matrix4 m = 0.25 * Matrix4::identity();
  for (int j = 1; j <= 3; ++j) {
    m = m + 0.25 * d.alpha[j - 1] * kron(pauli(j), id);
    m = m + 0.25 * d.beta[j - 1] * kron(id, pauli(j));
    for (int k = 1; k <= 3; ++k)
      m = m + 0.25 * d.corr[j - 1][k - 1] * kron(pauli(j), pauli(k));
  }
  return DensityMatrix{m};
}

/// Extracts (c1, c2, c3) from a Bell-diagonal matrix. Rejects input whose
/// local Bloch vectors or off-diagonal correlations exceed tol.
inline BellDiagonalState from_density_matrix(const DensityMatrix& rho,
                                             double tol = kTolBell) {
  const BlochDecomposition d = bloch_decomposition(rho);
  for (int j = 0; j < 3; ++j) {
    if (std::abs(d.alpha[j]) > tol || std::abs(d.beta[j]) > tol)
      throw std::invalid_argument(
          "from_density_matrix: nonzero local Bloch vector, state is not Bell-diagonal");
    for (int k = 0; k < 3; ++k)
      if (j != k && std::abs(d.corr[j][k]) > tol)
        throw std::invalid_argument(
            "from_density_matrix: off-diagonal correlation entry, state is not "
            "Bell-diagonal");
  }
  return BellDiagonalState{d.corr[0][0], d.corr[1][1], d.corr[2][2]};
}

}  // namespace qcorr
