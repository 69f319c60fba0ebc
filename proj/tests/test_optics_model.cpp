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

#include "lopt/optics_model.hpp"

#include "lopt/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>

using namespace lopt;
using lopt::testing::random_beamsplitter;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
}

TEST_CASE("make_beamsplitter validates the norm") {
  const Beamsplitter b = make_beamsplitter(kInvSqrt2, kInvSqrt2);
  const Eigen::Matrix2cd m = b.matrix();
  CHECK(std::abs(m(0, 0) - cplx(kInvSqrt2)) <= 1e-12);
  CHECK(std::abs(m(1, 1) + cplx(kInvSqrt2)) <= 1e-12);
  CHECK(std::abs(m.determinant() + 1.0) <= 1e-9);

  const Beamsplitter axis = make_beamsplitter(1.0, 0.0);
  CHECK(std::abs(axis.matrix()(0, 0) - 1.0) <= 1e-12);
  CHECK(std::abs(axis.matrix()(1, 1) + 1.0) <= 1e-12);

  CHECK_THROWS_AS(make_beamsplitter(0.9, 0.5), ValidationError);
}

TEST_CASE("is_nontrivial thresholds") {
  CHECK(is_nontrivial(make_beamsplitter(kInvSqrt2, kInvSqrt2)));
  CHECK_FALSE(is_nontrivial(make_beamsplitter(1.0, 0.0)));
  CHECK_FALSE(is_nontrivial(Beamsplitter{1e-15, 1.0}, 1e-10));
}

TEST_CASE("embed matches the displayed mode placements") {
  std::mt19937_64 rng(21);
  const Beamsplitter b = random_beamsplitter(rng, true);
  const cplx a = b.alpha, be = b.beta;

  SUBCASE("b12 on three modes") {
    const cmat m = embed(b.matrix(), 0, 1, 3);
    CHECK(m(0, 0) == a);
    CHECK(m(0, 1) == std::conj(be));
    CHECK(m(1, 0) == be);
    CHECK(m(1, 1) == -std::conj(a));
    CHECK(m(2, 2) == cplx(1.0));
    CHECK(m(0, 2) == cplx(0.0));
  }

  SUBCASE("b31 reversed placement puts -alpha* top-left") {
    const cmat m = embed(b.matrix(), 2, 0, 3);
    CHECK(m(0, 0) == -std::conj(a));
    CHECK(m(0, 2) == be);
    CHECK(m(2, 0) == std::conj(be));
    CHECK(m(2, 2) == a);
    CHECK(m(1, 1) == cplx(1.0));
  }

  SUBCASE("identity embeds to identity") {
    CHECK((embed(Eigen::Matrix2cd::Identity(), 0, 2, 4) - cmat::Identity(4, 4))
              .cwiseAbs()
              .maxCoeff() == 0.0);
  }

  SUBCASE("restriction to the placed rows and columns is exact") {
    const cmat m = embed(b.matrix(), 1, 3, 5);
    CHECK(m(1, 1) == a);
    CHECK(m(1, 3) == std::conj(be));
    CHECK(m(3, 1) == be);
    CHECK(m(3, 3) == -std::conj(a));
  }

  CHECK_THROWS_AS(embed(b.matrix(), 1, 1, 3), ValidationError);
  CHECK_THROWS_AS(embed(b.matrix(), 0, 3, 3), ValidationError);
}

TEST_CASE("evaluate applies the first listed gate first") {
  SUBCASE("empty circuit") {
    Circuit c;
    c.modes = 3;
    CHECK((evaluate(c) - cmat::Identity(3, 3)).cwiseAbs().maxCoeff() == 0.0);
  }

  SUBCASE("single gate") {
    std::mt19937_64 rng(22);
    const Beamsplitter b = random_beamsplitter(rng, true);
    Circuit c;
    c.modes = 3;
    c.gates.push_back(PlacedGate{b, 0, 1});
    CHECK((evaluate(c) - embed(b.matrix(), 0, 1, 3)).cwiseAbs().maxCoeff() <= 1e-15);
  }

  SUBCASE("b on (0,2) then b on (0,1) gives the product b12*b13") {
    std::mt19937_64 rng(23);
    const Beamsplitter b = random_beamsplitter(rng, true);
    Circuit c;
    c.modes = 3;
    c.gates.push_back(PlacedGate{b, 0, 2});
    c.gates.push_back(PlacedGate{b, 0, 1});
    const cmat expected = embed(b.matrix(), 0, 1, 3) * embed(b.matrix(), 0, 2, 3);
    CHECK((evaluate(c) - expected).cwiseAbs().maxCoeff() <= 1e-15);
    // entrywise check of the first generator's displayed form
    const cplx a = b.alpha, be = b.beta;
    const cmat r1 = evaluate(c);
    CHECK(std::abs(r1(0, 0) - a * a) <= 1e-12);
    CHECK(std::abs(r1(2, 0) - be) <= 1e-12);
    CHECK(std::abs(r1(2, 1)) <= 1e-12);
    CHECK(std::abs(r1(2, 2) + std::conj(a)) <= 1e-12);
  }
}

TEST_CASE("evaluate stays unitary over long random circuits") {
  std::mt19937_64 rng(24);
  Circuit c;
  c.modes = 5;
  std::uniform_int_distribution<int> mode(0, 4);
  std::uniform_real_distribution<double> angle(0.0, 6.28);
  for (int k = 0; k < 2000; ++k) {
    if (k % 3 == 0) {
      PlacedGate g;
      g.gate = Phaseshifter{angle(rng)};
      g.mode_a = mode(rng);
      c.gates.push_back(g);
    } else {
      int i = mode(rng), j = mode(rng);
      while (j == i) j = mode(rng);
      c.gates.push_back(PlacedGate{random_beamsplitter(rng, true), i, j});
    }
  }
  CHECK(is_unitary(evaluate(c), 1e-9));
}

TEST_CASE("embedded gate determinants") {
  std::mt19937_64 rng(25);
  const Beamsplitter b = random_beamsplitter(rng, true);
  CHECK(std::abs(embed(b.matrix(), 1, 2, 4).determinant() + 1.0) <= 1e-9);

  PlacedGate ps;
  ps.gate = Phaseshifter{0.77};
  ps.mode_a = 2;
  const cmat m = gate_matrix(ps, 4);
  CHECK(std::abs(m.determinant() - std::polar(1.0, 0.77)) <= 1e-9);
}
