#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>

namespace qcorr {

using cplx = std::complex<double>;

/// Thrown when an iterative routine (Jacobi diagonalization, Lambert W
/// refinement) fails to reach its residual target within the iteration cap.
struct convergence_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Dense square complex matrix of fixed dimension, row-major.
template <std::size_t N>
struct Matrix {
  std::array<cplx, N * N> a{};

  cplx& operator()(std::size_t i, std::size_t j) { return a[i * N + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return a[i * N + j]; }

  static Matrix identity() {
    Matrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }
};

using Matrix2 = Matrix<2>;
using Matrix3 = Matrix<3>;
using Matrix4 = Matrix<4>;

template <std::size_t N>
Matrix<N> operator+(const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

template <std::size_t N>
Matrix<N> operator-(const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

template <std::size_t N>
Matrix<N> operator*(cplx s, const Matrix<N>& x) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N * N; ++i) r.a[i] = s * x.a[i];
  return r;
}

template <std::size_t N>
Matrix<N> operator*(const Matrix<N>& x, const Matrix<N>& y) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k) {
      const cplx xik = x(i, k);
      if (xik == cplx{}) continue;
      for (std::size_t j = 0; j < N; ++j) r(i, j) += xik * y(k, j);
    }
  return r;
}

template <std::size_t N>
Matrix<N> adjoint(const Matrix<N>& x) {
  Matrix<N> r;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r(i, j) = std::conj(x(j, i));
  return r;
}

template <std::size_t N>
cplx trace(const Matrix<N>& x) {
  cplx t = 0.0;
  for (std::size_t i = 0; i < N; ++i) t += x(i, i);
  return t;
}

template <std::size_t N>
double frobenius_sq(const Matrix<N>& x) {
  double s = 0.0;
  for (const cplx& v : x.a) s += std::norm(v);
  return s;
}

template <std::size_t N>
double max_abs(const Matrix<N>& x) {
  double m = 0.0;
  for (const cplx& v : x.a) m = std::max(m, std::abs(v));
  return m;
}

template <std::size_t N>
bool is_hermitian(const Matrix<N>& x, double tol) {
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j)
      if (std::abs(x(i, j) - std::conj(x(j, i))) > tol) return false;
  return true;
}

/// Tensor product of two 2x2 blocks, ordering |ij> -> index 2i+j.
inline Matrix4 kron(const Matrix2& x, const Matrix2& y) {
  Matrix4 r;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l)
          r(2 * i + k, 2 * j + l) = x(i, j) * y(k, l);
  return r;
}

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values;  // ascending
  Matrix<N> vectors;             // columns, matching values
};

/// Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations. Sweeps annihilate each off-diagonal entry in turn with a
/// phased Givens rotation until the off-diagonal Frobenius mass falls
/// below tol * max(1, ||A||_F). Eigenvalues are returned ascending with
/// matching eigenvector columns.
template <std::size_t N>
EigenSystem<N> jacobi_hermitian(Matrix<N> m, double tol = 1e-13,
                                int max_sweeps = 50) {
  Matrix<N> v = Matrix<N>::identity();
  const double scale = std::max(1.0, std::sqrt(frobenius_sq(m)));

  auto off_diag_sq = [&]() {
    double s = 0.0;
    for (std::size_t p = 0; p < N; ++p)
      for (std::size_t q = p + 1; q < N; ++q) s += 2.0 * std::norm(m(p, q));
    return s;
  };

  int sweep = 0;
  for (; sweep < max_sweeps; ++sweep) {
    if (std::sqrt(off_diag_sq()) <= tol * scale) break;
    for (std::size_t p = 0; p < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const cplx g = m(p, q);
        const double ag = std::abs(g);
        if (ag <= 1e-300) continue;
        const cplx u = g / ag;  // phase of the pivot
        const double app = m(p, p).real();
        const double aqq = m(q, q).real();
        // tan(2*theta) = 2|g| / (app - aqq), stable half-angle form.
        const double zeta = (app - aqq) / (2.0 * ag);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(zeta) + std::sqrt(zeta * zeta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;

        // Column update A <- A R with R = [[c, -s u], [s conj(u), c]].
        for (std::size_t k = 0; k < N; ++k) {
          const cplx akp = m(k, p);
          const cplx akq = m(k, q);
          m(k, p) = c * akp + s * std::conj(u) * akq;
          m(k, q) = -s * u * akp + c * akq;
        }
        // Row update A <- R^dag A.
        for (std::size_t k = 0; k < N; ++k) {
          const cplx apk = m(p, k);
          const cplx aqk = m(q, k);
          m(p, k) = c * apk + s * u * aqk;
          m(q, k) = -s * std::conj(u) * apk + c * aqk;
        }
        m(p, q) = 0.0;
        m(q, p) = 0.0;
        m(p, p) = cplx(m(p, p).real(), 0.0);
        m(q, q) = cplx(m(q, q).real(), 0.0);

        for (std::size_t k = 0; k < N; ++k) {
          const cplx vkp = v(k, p);
          const cplx vkq = v(k, q);
          v(k, p) = c * vkp + s * std::conj(u) * vkq;
          v(k, q) = -s * u * vkp + c * vkq;
        }
      }
    }
  }
  if (sweep == max_sweeps && std::sqrt(off_diag_sq()) > tol * scale)
    throw convergence_error("jacobi_hermitian: no convergence after 50 sweeps");

  EigenSystem<N> es;
  for (std::size_t i = 0; i < N; ++i) es.values[i] = m(i, i).real();
  es.vectors = v;
  // Insertion sort into ascending order, carrying the vector columns.
  for (std::size_t i = 1; i < N; ++i) {
    const double val = es.values[i];
    std::array<cplx, N> col;
    for (std::size_t k = 0; k < N; ++k) col[k] = es.vectors(k, i);
    std::size_t j = i;
    while (j > 0 && es.values[j - 1] > val) {
      es.values[j] = es.values[j - 1];
      for (std::size_t k = 0; k < N; ++k) es.vectors(k, j) = es.vectors(k, j - 1);
      --j;
    }
    es.values[j] = val;
    for (std::size_t k = 0; k < N; ++k) es.vectors(k, j) = col[k];
  }
  return es;
}

}  // namespace qcorr
