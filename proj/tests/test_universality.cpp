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

#include "lopt/universality.hpp"

#include "lopt/errors.hpp"
#include "test_util.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace lopt;
using lopt::testing::random_beamsplitter;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

Eigen::Matrix2cd rotation(double theta) {
  Eigen::Matrix2cd r;
  r << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return r;
}

}  // namespace

TEST_CASE("beamsplitter dichotomy verdicts") {
  CHECK(classify_beamsplitter(make_beamsplitter(1.0, 0.0)).outcome == Outcome::Trivial);
  CHECK(classify_beamsplitter(make_beamsplitter(kInvSqrt2, kInvSqrt2)).outcome ==
        Outcome::UniversalOrthogonal);
  CHECK(classify_beamsplitter(make_beamsplitter(cplx(0, kInvSqrt2), kInvSqrt2)).outcome ==
        Outcome::UniversalUnitary);
}

TEST_CASE("borderline inputs keep their outcome but get flagged") {
  const Verdict v = classify_beamsplitter(make_beamsplitter(
      cplx(std::sqrt(1.0 - 25e-20), 5e-10), 0.0), 1e-10);
  CHECK(v.outcome == Outcome::Trivial);
  const Beamsplitter nearly_real =
      make_beamsplitter(cplx(0.6, 4e-10), std::sqrt(1.0 - std::norm(cplx(0.6, 4e-10))));
  const Verdict w = classify_beamsplitter(nearly_real, 1e-10);
  CHECK(w.outcome == Outcome::UniversalUnitary);
  CHECK(w.rationale.find("borderline") != std::string::npos);
}

TEST_CASE("two-mode gate with phaseshifters") {
  CHECK(classify_two_mode_with_phases(Eigen::Matrix2cd::Identity()).outcome ==
        Outcome::Trivial);

  Eigen::Matrix2cd monomial;
  monomial << 0, 1, -1, 0;
  CHECK(classify_two_mode_with_phases(monomial).outcome == Outcome::Trivial);

  const Verdict v = classify_two_mode_with_phases(rotation(std::numbers::pi / 7));
  CHECK(v.outcome == Outcome::UniversalUnitary);
  CHECK(v.rationale.find("det-adjusted-by-phase") != std::string::npos);

  Eigen::Matrix2cd skew;
  skew << 1, 1, 1, -1;
  CHECK_THROWS_AS(classify_two_mode_with_phases(skew), ValidationError);
}

TEST_CASE("phase invariance of the phaseshifter route") {
  std::mt19937_64 rng(51);
  for (int k = 0; k < 20; ++k) {
    const Beamsplitter b = random_beamsplitter(rng, true);
    const Eigen::Matrix2cd g = b.matrix();
    const Verdict base = classify_two_mode_with_phases(g);
    for (double phi : {0.3, 1.9, 4.4}) {
      const Verdict shifted = classify_two_mode_with_phases(std::polar(1.0, phi) * g);
      CHECK(shifted.outcome == base.outcome);
    }
  }
}

TEST_CASE("real two-mode gates") {
  CHECK(classify_real_two_mode(rotation(std::numbers::pi / 2)).outcome == Outcome::Trivial);
  CHECK(classify_real_two_mode(rotation(std::numbers::pi / 5)).outcome ==
        Outcome::UniversalOrthogonal);

  Eigen::Matrix2cd reflection;
  reflection << 1, 0, 0, -1;
  CHECK(classify_real_two_mode(reflection).outcome == Outcome::Trivial);

  Eigen::Matrix2cd complex_gate;
  complex_gate << cplx(0, 1), 0, 0, cplx(0, -1);
  CHECK_THROWS_AS(classify_real_two_mode(complex_gate), ValidationError);
}

TEST_CASE("rotation verdicts are invariant under quarter-turn shifts") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> uni(0.0, 2.0 * std::numbers::pi);
  for (int k = 0; k < 40; ++k) {
    const double theta = uni(rng);
    const Verdict a = classify_real_two_mode(rotation(theta));
    const Verdict b = classify_real_two_mode(rotation(theta + std::numbers::pi / 2));
    CHECK(a.outcome == b.outcome);
  }
}

TEST_CASE("gates outside the theorem get a distinct verdict") {
  // complex, mixing, det != −1, no phaseshifters
  const Eigen::Matrix2cd g = std::polar(1.0, 0.4) * rotation(0.3);
  const Verdict v = classify_gate(g, false);
  CHECK(v.outcome == Outcome::OutOfTheoremScope);
  CHECK(v.rationale == "out-of-theorem-scope");
  // ... but monomial complex gates are still trivially classical
  Eigen::Matrix2cd phases;
  phases << std::polar(1.0, 0.4), 0, 0, std::polar(1.0, 1.1);
  CHECK(classify_gate(phases, false).outcome == Outcome::Trivial);
}

TEST_CASE("verdict_cross_check bundles evidence for a Pythagorean beamsplitter") {
  const Verdict v = verdict_cross_check(make_beamsplitter(0.6, 0.8));
  CHECK(v.outcome == Outcome::UniversalOrthogonal);
  REQUIRE(v.evidence.has_value());
  CHECK(v.evidence->commutant_dimension == 1);
  CHECK(v.evidence->closure.outcome == ClosureReport::Outcome::CapExceeded);
  CHECK(v.evidence->lie_closure.dimension == 3);
  CHECK(v.evidence->characters.has_value());
}

TEST_CASE("verdict_cross_check on a trivial gate reports the tiny closure") {
  const Verdict v = verdict_cross_check(make_beamsplitter(1.0, 0.0));
  CHECK(v.outcome == Outcome::Trivial);
  REQUIRE(v.evidence.has_value());
  CHECK(v.evidence->closure.outcome == ClosureReport::Outcome::Finite);
  CHECK(v.evidence->closure.order == 2);
  CHECK_FALSE(v.evidence->characters.has_value());
}

TEST_CASE("verdict_cross_check on a complex beamsplitter") {
  const Verdict v = verdict_cross_check(make_beamsplitter(cplx(0, kInvSqrt2), kInvSqrt2));
  CHECK(v.outcome == Outcome::UniversalUnitary);
  REQUIRE(v.evidence.has_value());
  CHECK(v.evidence->lie_closure.dimension == 8);
  const double signal = std::max(std::abs(v.evidence->complex_witness),
                                 std::abs(v.evidence->trace_values[0].imag()));
  CHECK(signal > 1e-6);
}

TEST_CASE("clause verdicts and forensics agree on random samples") {
  std::mt19937_64 rng(53);
  for (int k = 0; k < 20; ++k) {
    const Beamsplitter b = random_beamsplitter(rng, k % 2 == 0);
    const Verdict v = verdict_cross_check(b);  // throws InternalError on mismatch
    const bool real = std::abs(b.alpha.imag()) <= 1e-10 && std::abs(b.beta.imag()) <= 1e-10;
    CHECK(v.outcome == (real ? Outcome::UniversalOrthogonal : Outcome::UniversalUnitary));
  }
}
