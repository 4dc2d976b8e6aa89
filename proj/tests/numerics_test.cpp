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

#include "xstate/numerics.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace xstate::numerics {
namespace {

using testing::Sampler;

DenseHermitian4 random_hermitian(Sampler& s, double scale = 1.0) {
  DenseHermitian4 m{};
  for (int i = 0; i < 4; ++i) {
    m[i][i] = scale * s.uniform(-1.0, 1.0);
    for (int j = i + 1; j < 4; ++j) {
      m[i][j] = scale * Complex(s.uniform(-1.0, 1.0), s.uniform(-1.0, 1.0));
      m[j][i] = std::conj(m[i][j]);
    }
  }
  return m;
}

DenseHermitian4 diagonal(double a, double b, double c, double d) {
  DenseHermitian4 m{};
  m[0][0] = a;
  m[1][1] = b;
  m[2][2] = c;
  m[3][3] = d;
  return m;
}

TEST(ToDense, Placement) {
  EXPECT_EQ(to_dense(XParams{0.25, 0.25, 0.0, 0.0}), diagonal(0.25, 0.25, 0.25, 0.25));

  const auto w = to_dense(werner(1.0));
  for (auto [r, c] : {std::pair{0, 0}, {3, 3}, {0, 3}, {3, 0}}) EXPECT_EQ(w[r][c], Complex(0.5));
  EXPECT_EQ(w[1][1], Complex(0.0));

  const auto m = to_dense(XParams{0.3, 0.2, Complex(0.0, 0.1), 0.0});
  EXPECT_EQ(m[1][2], Complex(0.0, 0.1));
  EXPECT_EQ(m[2][1], Complex(0.0, -0.1));
  EXPECT_EQ(hermiticity_error(m), 0.0);
}

TEST(HermitianEig, DiagonalInput) {
  const auto es = hermitian_eig4(diagonal(0.1, 0.4, 0.2, 0.3));
  EXPECT_EQ(es.values, (std::array<double, 4>{0.4, 0.3, 0.2, 0.1}));
  EXPECT_EQ(es.sweeps, 0);
}

TEST(HermitianEig, XStateExamples) {
  const auto w = hermitian_eig4(to_dense(werner(0.5))).values;
  EXPECT_NEAR(w[0], 0.625, 1e-12);
  for (int k = 1; k < 4; ++k) EXPECT_NEAR(w[k], 0.125, 1e-12);

  const auto x = hermitian_eig4(to_dense(XParams{0.33, 0.17, 0.1, 0.2})).values;
  EXPECT_NEAR(x[0], 0.53, 1e-12);
  EXPECT_NEAR(x[1], 0.27, 1e-12);
  EXPECT_NEAR(x[2], 0.13, 1e-12);
  EXPECT_NEAR(x[3], 0.07, 1e-12);
}

TEST(HermitianEig, RejectsNonHermitian) {
  DenseHermitian4 m = diagonal(1.0, 0.0, 0.0, 0.0);
  m[0][1] = 0.5;
  try {
    hermitian_eig4(m);
    FAIL() << "expected NonHermitian";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kNonHermitian);
  }
  EXPECT_THROW(trace_norm(m), Error);
}

TEST(HermitianEig, RandomResidualsAndOrthonormality) {
  Sampler s(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto m = random_hermitian(s, trial % 3 == 0 ? 10.0 : 1.0);
    const auto es = hermitian_eig4(m);
    EXPECT_LT(es.sweeps, kMaxJacobiSweeps);
    double sum = 0.0;
    for (int k = 0; k < 4; ++k) {
      sum += es.values[k];
      if (k > 0) {
        EXPECT_GE(es.values[k - 1], es.values[k]);
      }
      double residual = 0.0;
      for (int r = 0; r < 4; ++r) {
        Complex mv = 0.0;
        for (int c = 0; c < 4; ++c) mv += m[r][c] * es.vectors[c][k];
        residual += std::norm(mv - es.values[k] * es.vectors[r][k]);
      }
      ASSERT_LT(std::sqrt(residual), 1e-10);
    }
    EXPECT_NEAR(sum, trace(m).real(), 1e-12);
    const auto gram = multiply(adjoint(es.vectors), es.vectors);
    EXPECT_LT(max_abs_difference(gram, identity<4>()), 1e-12);
  }
}

TEST(HermitianEig, DegenerateSpectrum) {
  // Werner-type triple degeneracy with a rotated basis.
  Sampler s(32);
  const auto es = hermitian_eig4(to_dense(XParams::from_polar(0.375, 0.125, 0.0, 0.0, 0.25, 0.7)));
  EXPECT_NEAR(es.values[0], 0.625, 1e-13);
  const auto gram = multiply(adjoint(es.vectors), es.vectors);
  EXPECT_LT(max_abs_difference(gram, identity<4>()), 1e-12);
}

TEST(MatrixPower, IdentityPowerNormalizes) {
  Sampler s(33);
  auto m = to_dense(s.valid_state());
  for (auto& row : m)
    for (auto& x : row) x *= 3.0;
  const auto r = matrix_power_normalize(m, 1);
  EXPECT_NEAR(trace(r).real(), 1.0, 1e-15);
  EXPECT_LT(max_abs_difference(r, [&] {
              auto q = m;
              for (auto& row : q)
                for (auto& x : row) x /= 3.0;
              return q;
            }()),
            1e-15);
}

TEST(MatrixPower, ProjectorFixedPoint) {
  const auto p = diagonal(0.5, 0.5, 0.0, 0.0);
  EXPECT_EQ(matrix_power_normalize(p, 2), p);
}

TEST(MatrixPower, WernerSquared) {
  const auto r = matrix_power_normalize(to_dense(werner(0.5)), 2);
  EXPECT_NEAR(r[0][0].real(), 0.46428571428571425, 1e-15);
  EXPECT_NEAR(r[1][1].real(), 0.03571428571428571, 1e-15);
  EXPECT_NEAR(r[0][3].real(), 0.42857142857142855, 1e-15);
  EXPECT_EQ(std::abs(r[1][2]), 0.0);
}

TEST(MatrixPower, ZeroTrace) {
  try {
    matrix_power_normalize(diagonal(1.0, -1.0, 0.0, 0.0), 1);
    FAIL() << "expected ZeroTrace";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kZeroTrace);
  }
}

TEST(TraceNorm, Values) {
  Sampler s(34);
  EXPECT_NEAR(trace_norm(to_dense(s.valid_state())), 1.0, 1e-12);
  EXPECT_NEAR(trace_norm(diagonal(0.375, 0.375, 0.375, -0.125)), 1.25, 1e-15);
  EXPECT_EQ(trace_norm(DenseHermitian4{}), 0.0);
}

TEST(TraceNorm, BoundsTrace) {
  Sampler s(35);
  for (int i = 0; i < 1000; ++i) {
    const auto m = random_hermitian(s);
    EXPECT_GE(trace_norm(m) + 1e-12, std::abs(trace(m).real()));
  }
}

TEST(SpinFlip, DenseOfXStateIsItself) {
  Sampler s(36);
  for (int i = 0; i < 200; ++i) {
    const auto m = to_dense(s.any_state());
    EXPECT_LT(max_abs_difference(spin_flip(m), m), 1e-15);
  }
}

}  // namespace
}  // namespace xstate::numerics
