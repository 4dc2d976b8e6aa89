// Copyright 2026 The xstate Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense complex linear algebra for small Hermitian matrices.
//
// This is the brute-force side of every closed-form check in the library:
// nothing here may call into core.hpp beyond reading XParams fields.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numeric>
#include <string>

#include "xstate/core.hpp"
#include "xstate/error.hpp"

namespace xstate::numerics {

template <std::size_t N>
using CMatrix = std::array<std::array<Complex, N>, N>;

using Matrix2 = CMatrix<2>;
using DenseHermitian4 = CMatrix<4>;

inline constexpr double kHermitianTolerance = 1e-14;
inline constexpr double kJacobiTolerance = 1e-13;
inline constexpr int kMaxJacobiSweeps = 100;

template <std::size_t N>
CMatrix<N> identity() {
  CMatrix<N> m{};
  for (std::size_t i = 0; i < N; ++i) m[i][i] = 1.0;
  return m;
}

template <std::size_t N>
CMatrix<N> multiply(const CMatrix<N>& x, const CMatrix<N>& y) {
  CMatrix<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t j = 0; j < N; ++j) r[i][j] += x[i][k] * y[k][j];
  return r;
}

template <std::size_t N>
CMatrix<N> adjoint(const CMatrix<N>& x) {
  CMatrix<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i][j] = std::conj(x[j][i]);
  return r;
}

template <std::size_t N>
CMatrix<N> conjugate(const CMatrix<N>& x) {
  CMatrix<N> r{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) r[i][j] = std::conj(x[i][j]);
  return r;
}

template <std::size_t N>
Complex trace(const CMatrix<N>& x) {
  Complex t = 0.0;
  for (std::size_t i = 0; i < N; ++i) t += x[i][i];
  return t;
}

/// Largest |x_ij - conj(x_ji)|.
template <std::size_t N>
double hermiticity_error(const CMatrix<N>& x) {
  double e = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i; j < N; ++j) e = std::max(e, std::abs(x[i][j] - std::conj(x[j][i])));
  return e;
}

template <std::size_t N>
double max_abs_difference(const CMatrix<N>& x, const CMatrix<N>& y) {
  double e = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) e = std::max(e, std::abs(x[i][j] - y[i][j]));
  return e;
}

inline CMatrix<4> kron(const Matrix2& x, const Matrix2& y) {
  CMatrix<4> r{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = x[i][j] * y[k][l];
  return r;
}

inline DenseHermitian4 to_dense(const XParams& p) {
  DenseHermitian4 m{};
  m[0][0] = p.a;
  m[3][3] = p.a;
  m[1][1] = p.b;
  m[2][2] = p.b;
  m[0][3] = p.d;
  m[3][0] = std::conj(p.d);
  m[1][2] = p.c;
  m[2][1] = std::conj(p.c);
  return m;
}

/// Transpose on the second qubit: (i k),(j l) -> (i l),(j k).
inline CMatrix<4> partial_transpose(const CMatrix<4>& m) {
  CMatrix<4> r{};
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t l = 0; l < 2; ++l) r[2 * i + k][2 * j + l] = m[2 * i + l][2 * j + k];
  return r;
}

/// (sigma_y x sigma_y) conj(m) (sigma_y x sigma_y)
inline CMatrix<4> spin_flip(const CMatrix<4>& m) {
  const Matrix2 sy{{{Complex(0.0), Complex(0.0, -1.0)}, {Complex(0.0, 1.0), Complex(0.0)}}};
  const CMatrix<4> yy = kron(sy, sy);
  return multiply(multiply(yy, conjugate(m)), yy);
}

template <std::size_t N>
struct EigenSystem {
  // Descending.
  std::array<double, N> values{};
  // Column k is the eigenvector for values[k].
  CMatrix<N> vectors{};
  int sweeps = 0;
};

template <std::size_t N>
double off_diagonal_norm(const CMatrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(a[i][j]);
  return std::sqrt(s);
}

/// Cyclic complex Jacobi. Each rotation first removes the phase of a_pq
/// with a diagonal unitary, then applies the real symmetric rotation that
/// zeroes it. Stops when the off-diagonal Frobenius norm drops below
/// kJacobiTolerance or after kMaxJacobiSweeps sweeps.
template <std::size_t N>
EigenSystem<N> hermitian_eig(const CMatrix<N>& m) {
  const double herr = hermiticity_error(m);
  if (!(herr <= kHermitianTolerance)) {
    throw Error(ErrorKind::kNonHermitian, "hermiticity error " + std::to_string(herr));
  }
  CMatrix<N> a{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) a[i][j] = 0.5 * (m[i][j] + std::conj(m[j][i]));
  CMatrix<N> v = identity<N>();

  int sweep = 0;
  for (; sweep < kMaxJacobiSweeps; ++sweep) {
    if (off_diagonal_norm(a) < kJacobiTolerance) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const double mag = std::abs(a[p][q]);
        if (mag == 0.0) continue;
        const Complex ph = std::conj(a[p][q] / mag);
        const double theta = 0.5 * (a[q][q].real() - a[p][p].real()) / mag;
        double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
        if (theta < 0.0) t = -t;
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        // G = diag(1, .., ph at q, ..) * real rotation; only columns p, q
        // of G differ from the identity.
        const Complex g_pp = c;
        const Complex g_pq = s;
        const Complex g_qp = -s * ph;
        const Complex g_qq = c * ph;

        for (std::size_t r = 0; r < N; ++r) {
          const Complex arp = a[r][p];
          const Complex arq = a[r][q];
          a[r][p] = arp * g_pp + arq * g_qp;
          a[r][q] = arp * g_pq + arq * g_qq;
          const Complex vrp = v[r][p];
          const Complex vrq = v[r][q];
          v[r][p] = vrp * g_pp + vrq * g_qp;
          v[r][q] = vrp * g_pq + vrq * g_qq;
        }
        for (std::size_t r = 0; r < N; ++r) {
          const Complex apr = a[p][r];
          const Complex aqr = a[q][r];
          a[p][r] = std::conj(g_pp) * apr + std::conj(g_qp) * aqr;
          a[q][r] = std::conj(g_pq) * apr + std::conj(g_qq) * aqr;
        }
        a[p][q] = 0.0;
        a[q][p] = 0.0;
        a[p][p] = a[p][p].real();
        a[q][q] = a[q][q].real();
      }
    }
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&a](std::size_t x, std::size_t y) {
    return a[x][x].real() > a[y][y].real();
  });
  EigenSystem<N> out;
  out.sweeps = sweep;
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a[order[k]][order[k]].real();
    for (std::size_t r = 0; r < N; ++r) out.vectors[r][k] = v[r][order[k]];
  }
  return out;
}

inline EigenSystem<4> hermitian_eig4(const DenseHermitian4& m) { return hermitian_eig<4>(m); }

/// m^n / Tr(m^n) by repeated multiplication.
template <std::size_t N>
CMatrix<N> matrix_power_normalize(const CMatrix<N>& m, int n) {
  if (n < 1) throw std::invalid_argument("power must be >= 1");
  CMatrix<N> r = m;
  for (int i = 1; i < n; ++i) r = multiply(r, m);
  const double tr = trace(r).real();
  if (tr == 0.0 || !std::isfinite(tr)) {
    throw Error(ErrorKind::kZeroTrace, "Tr(m^n) vanishes for n = " + std::to_string(n));
  }
  for (auto& row : r)
    for (auto& x : row) x /= tr;
  return r;
}

/// Sum of |eigenvalue|.
template <std::size_t N>
double trace_norm(const CMatrix<N>& m) {
  const auto es = hermitian_eig<N>(m);
  double s = 0.0;
  for (double l : es.values) s += std::abs(l);
  return s;
}

}  // namespace xstate::numerics
