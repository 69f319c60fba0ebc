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

#include "lopt/reck_compiler.hpp"

#include "lopt/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lopt;
using lopt::testing::haar_rotation;
using lopt::testing::haar_unitary;
using lopt::testing::random_beamsplitter;

namespace {

int beamsplitter_count(const Circuit& c) {
  int n = 0;
  for (const PlacedGate& g : c.gates) {
    if (std::holds_alternative<Beamsplitter>(g.gate)) ++n;
  }
  return n;
}

// Multiply-back oracle: rebuild the matrix from the decomposition parts.
double rebuild_error(const Decomposition& d, const cmat& input) {
  cmat rebuilt = evaluate(d.circuit);
  for (int j = 0; j < d.circuit.modes; ++j) {
    rebuilt.col(j) *= std::polar(1.0, d.residual_phases[j]);
  }
  return phase_distance(rebuilt, input);
}

}  // namespace

TEST_CASE("decompose of the identity is empty") {
  const Decomposition d = decompose(cmat::Identity(4, 4));
  CHECK(d.circuit.gates.empty());
  for (double phi : d.residual_phases) CHECK(phi == 0.0);
  CHECK(d.reconstruction_error <= 1e-12);
}

TEST_CASE("decompose rejects non-unitary input") {
  cmat bad(3, 3);
  bad.setOnes();
  CHECK_THROWS_AS(decompose(bad), ValidationError);
}

TEST_CASE("a single embedded beamsplitter decomposes to one beamsplitter") {
  std::mt19937_64 rng(31);
  const Beamsplitter b = random_beamsplitter(rng, true);
  const cmat u = embed(b.matrix(), 0, 1, 3);
  const Decomposition d = decompose(u);
  CHECK(beamsplitter_count(d.circuit) == 1);
  CHECK(rebuild_error(d, u) <= 1e-12);
}

TEST_CASE("random 4x4 unitary uses at most six beamsplitters") {
  std::mt19937_64 rng(32);
  const cmat u = haar_unitary(4, rng);
  const Decomposition d = decompose(u);
  CHECK(beamsplitter_count(d.circuit) <= 6);
  CHECK(d.reconstruction_error <= 1e-9);
  CHECK(rebuild_error(d, u) <= 1e-9);
}

TEST_CASE("round-trip over dimensions 2..6") {
  std::mt19937_64 rng(33);
  for (int m = 2; m <= 6; ++m) {
    for (int k = 0; k < 10; ++k) {
      const cmat u = haar_unitary(m, rng);
      const Decomposition d = decompose(u);
      CHECK(rebuild_error(d, u) <= 1e-9);
      CHECK(beamsplitter_count(d.circuit) <= m * (m - 1) / 2);
    }
  }
}

TEST_CASE("decompose_real of the identity is empty") {
  const Decomposition d = decompose_real(cmat::Identity(3, 3));
  CHECK(d.circuit.gates.empty());
  CHECK(d.reconstruction_error <= 1e-12);
}

TEST_CASE("decompose_real rejects complex input") {
  cmat u = cmat::Identity(2, 2);
  u(0, 0) = cplx(0, 1);
  u(1, 1) = cplx(0, -1);
  CHECK_THROWS_AS(decompose_real(u), ValidationError);
}

TEST_CASE("rotation by pi/5 about the z axis is one real beamsplitter") {
  const double t = std::numbers::pi / 5.0;
  cmat o = cmat::Identity(3, 3);
  o(0, 0) = std::cos(t);
  o(0, 1) = -std::sin(t);
  o(1, 0) = std::sin(t);
  o(1, 1) = std::cos(t);
  const Decomposition d = decompose_real(o);
  REQUIRE(beamsplitter_count(d.circuit) == 1);
  CHECK(d.circuit.gates.size() == 1);
  CHECK(d.circuit.gates[0].mode_a == 0);
  CHECK(d.circuit.gates[0].mode_b == 1);
  const auto& bs = std::get<Beamsplitter>(d.circuit.gates[0].gate);
  CHECK(bs.alpha.imag() == 0.0);
  CHECK(bs.beta.imag() == 0.0);
  CHECK(rebuild_error(d, o) <= 1e-12);
}

TEST_CASE("random SO(5) uses at most ten real beamsplitters and stays real") {
  std::mt19937_64 rng(34);
  for (int k = 0; k < 5; ++k) {
    const cmat o = haar_rotation(5, rng);
    const Decomposition d = decompose_real(o);
    CHECK(beamsplitter_count(d.circuit) <= 10);
    CHECK(rebuild_error(d, o) <= 1e-9);
    CHECK(evaluate(d.circuit).imag().cwiseAbs().maxCoeff() <= 1e-12);
    for (const PlacedGate& g : d.circuit.gates) {
      CHECK(std::holds_alternative<Beamsplitter>(g.gate));
    }
  }
}

TEST_CASE("determinant -1 orthogonal input lands the reflection in the residual phases") {
  std::mt19937_64 rng(35);
  cmat o = haar_rotation(4, rng);
  o.col(3) *= -1.0;  // det −1 now
  const Decomposition d = decompose_real(o);
  CHECK(rebuild_error(d, o) <= 1e-9);
  int pi_flips = 0;
  for (double phi : d.residual_phases) {
    CHECK((phi == 0.0 || std::abs(phi - std::numbers::pi) <= 1e-12));
    if (phi != 0.0) ++pi_flips;
  }
  CHECK(pi_flips % 2 == 1);
  CHECK(beamsplitter_count(d.circuit) <= 6);
}
