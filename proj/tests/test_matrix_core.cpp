// Copyright 2026 The lopt developers
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

#include "lopt/matrix_core.hpp"

#include "lopt/errors.hpp"
#include "lopt/optics_model.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lopt;
using lopt::testing::haar_unitary;
using lopt::testing::matrix_exp;
using lopt::testing::random_beamsplitter;

TEST_CASE("is_unitary accepts the identity and rejects a shear") {
  CHECK(is_unitary(cmat::Identity(3, 3), 1e-9));
  cmat shear(2, 2);
  shear << 1, 1, 0, 1;
  CHECK_FALSE(is_unitary(shear, 1e-9));
  CHECK_THROWS_AS(is_unitary(cmat::Zero(2, 3), 1e-9), ValidationError);
}

TEST_CASE("is_unitary holds for products of embedded beamsplitters") {
  std::mt19937_64 rng(11);
  Circuit c;
  c.modes = 4;
  std::uniform_int_distribution<int> mode(0, 3);
  for (int k = 0; k < 6; ++k) {
    int i = mode(rng), j = mode(rng);
    while (j == i) j = mode(rng);
    PlacedGate g;
    g.gate = random_beamsplitter(rng, true);
    g.mode_a = i;
    g.mode_b = j;
    c.gates.push_back(g);
  }
  CHECK(is_unitary(evaluate(c), 1e-9));
}

TEST_CASE("unitaries accepted at 1e-9 have unit-magnitude determinant") {
  std::mt19937_64 rng(12);
  for (int k = 0; k < 100; ++k) {
    const cmat u = haar_unitary(2 + k % 5, rng);
    REQUIRE(is_unitary(u, 1e-9));
    CHECK(std::abs(std::abs(u.determinant()) - 1.0) <= 1e-8);
  }
}

TEST_CASE("phase_distance basics") {
  std::mt19937_64 rng(13);
  const cmat u = haar_unitary(3, rng);
  CHECK(phase_distance(u, u) <= 1e-12);
  CHECK(phase_distance(cmat::Identity(3, 3), -cmat::Identity(3, 3)) <= 1e-12);
  CHECK_THROWS_AS(phase_distance(cmat::Identity(2, 2), cmat::Identity(3, 3)),
                  ValidationError);
}

TEST_CASE("phase_distance of I2 and diag(1,-1) is sqrt(2)") {
  cmat d = cmat::Identity(2, 2);
  d(1, 1) = -1.0;
  // Scan oracle: minimize max(|1-phi|, |1+phi|) over the unit circle.
  double scan_best = 1e9;
  for (int k = 0; k < 100000; ++k) {
    const cplx phi = std::polar(1.0, 2.0 * std::numbers::pi * k / 100000.0);
    scan_best = std::min(scan_best, std::max(std::abs(1.0 - phi), std::abs(1.0 + phi)));
  }
  CHECK(scan_best == doctest::Approx(std::sqrt(2.0)).epsilon(1e-8));
  CHECK(phase_distance(cmat::Identity(2, 2), d) ==
        doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));
}

TEST_CASE("phase_distance is a pseudometric on random triples") {
  std::mt19937_64 rng(14);
  for (int k = 0; k < 25; ++k) {
    const int d = 2 + k % 3;
    const cmat a = haar_unitary(d, rng);
    const cmat b = haar_unitary(d, rng);
    const cmat c = haar_unitary(d, rng);
    const double ab = phase_distance(a, b);
    const double ba = phase_distance(b, a);
    const double bc = phase_distance(b, c);
    const double ac = phase_distance(a, c);
    CHECK(std::abs(ab - ba) <= 1e-12);
    CHECK(ac <= ab + bc + 1e-12);
    // zero on phase-equivalent pairs
    const cplx phi = std::polar(1.0, 0.37 + k);
    CHECK(phase_distance(a, phi * a) <= 1e-12);
  }
}

TEST_CASE("principal_log_unitary diagonal cases") {
  const PrincipalLog zero = principal_log_unitary(cmat::Identity(3, 3));
  CHECK(zero.matrix.cwiseAbs().maxCoeff() <= 1e-12);
  CHECK_FALSE(zero.branch_warning);

  cmat d(2, 2);
  d << cplx(0, 1), 0, 0, cplx(0, -1);
  const PrincipalLog log = principal_log_unitary(d);
  CHECK(std::abs(log.matrix(0, 0) - cplx(0, std::numbers::pi / 2)) <= 1e-10);
  CHECK(std::abs(log.matrix(1, 1) - cplx(0, -std::numbers::pi / 2)) <= 1e-10);
  CHECK(std::abs(log.matrix(0, 1)) <= 1e-12);
}

TEST_CASE("principal_log_unitary flags eigenvalues at -1") {
  cmat d = cmat::Identity(2, 2);
  d(1, 1) = -1.0;
  const PrincipalLog log = principal_log_unitary(d);
  CHECK(log.branch_warning);
  CHECK(phase_distance(matrix_exp(log.matrix), d) <= 1e-8);
}

TEST_CASE("exp(principal_log_unitary(M)) reproduces M") {
  std::mt19937_64 rng(15);
  for (int k = 0; k < 1000; ++k) {
    const int dim = 2 + k % 5;  // dimensions 2..6
    const cmat u = haar_unitary(dim, rng);
    const PrincipalLog log = principal_log_unitary(u);
    CHECK((log.matrix + log.matrix.adjoint()).cwiseAbs().maxCoeff() <= 1e-8);
    CHECK(phase_distance(matrix_exp(log.matrix), u) <= 1e-8);
  }
}

TEST_CASE("numeric_rank on simple configurations") {
  cvec e1 = cvec::Zero(4), e2 = cvec::Zero(4);
  e1(0) = 1.0;
  e2(1) = 1.0;
  CHECK(numeric_rank({e1, e2}, 1e-9) == 2);
  cvec v(3);
  v << cplx(1, 2), cplx(0, -1), cplx(3, 0);
  CHECK(numeric_rank({v, 2.0 * v}, 1e-9) == 1);
  CHECK(numeric_rank({}, 1e-9) == 0);
}

TEST_CASE("phase_fix makes the leading entry positive real") {
  std::mt19937_64 rng(16);
  const cmat u = haar_unitary(3, rng);
  const cmat fixed = phase_fix(std::polar(1.0, 1.234) * u);
  const cmat fixed2 = phase_fix(u);
  CHECK((fixed - fixed2).cwiseAbs().maxCoeff() <= 1e-12);
  CHECK(std::abs(fixed(0, 0).imag()) <= 1e-12 * std::abs(fixed(0, 0)));
}
