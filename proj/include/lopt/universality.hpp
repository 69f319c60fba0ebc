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

#pragma once

#include "lopt/group_forensics.hpp"
#include "lopt/optics_model.hpp"

#include <optional>
#include <string>

namespace lopt {

enum class Outcome {
  Trivial,              // generates only monomial (norm-0/1 entry) matrices
  UniversalOrthogonal,  // densely generates the orthogonal transformations
  UniversalUnitary,     // densely generates the unitary transformations
  OutOfTheoremScope,    // complex two-mode gate, det != −1, no phaseshifters
};

std::string to_string(Outcome o);

/// Forensic evidence bundle attached by verdict_cross_check.
struct Evidence {
  int commutant_dimension = 0;
  ClosureReport closure;
  std::optional<EliminationReport> characters;  // absent for trivial gates
  std::optional<EliminationReport> dihedral;
  LieClosureResult lie_closure;
  double complex_witness = 0.0;
  std::array<cplx, 3> trace_values{};
};

struct Verdict {
  Outcome outcome = Outcome::Trivial;
  std::string rationale;   // which clause fired; "borderline" appended when
                           // the deciding magnitude is within 10x of tol
  std::optional<Evidence> evidence;
};

/// Dichotomy for a single beamsplitter: Trivial when it does not mix modes,
/// otherwise universal — orthogonal if all entries are real, unitary if not.
Verdict classify_beamsplitter(const Beamsplitter& b, double tol = 1e-10);

/// A two-mode gate plus free phaseshifters: the determinant is rotated to −1
/// by a phase and the beamsplitter dichotomy applies; any mixing gate is
/// universal-unitary because the phaseshifters supply complex phases.
Verdict classify_two_mode_with_phases(const Eigen::Matrix2cd& g, double tol = 1e-10);

/// A real orthogonal two-mode gate on its own: det −1 reduces to the
/// beamsplitter case; det +1 is a rotation, trivial exactly when its angle is
/// a multiple of pi/2 (within 1e−9 rad).
Verdict classify_real_two_mode(const Eigen::Matrix2cd& g, double tol = 1e-10);

/// Dispatch for an arbitrary 2×2 unitary: with_phases uses the phase-adjusted
/// route; real gates use the rotation route; complex det −1 gates are
/// beamsplitters; anything else is outside the theorem's scope.
Verdict classify_gate(const Eigen::Matrix2cd& g, bool with_phases, double tol = 1e-10);

/// Runs the whole forensic pipeline behind the clause-based verdict and
/// attaches the results. Throws InternalError if any piece of evidence
/// contradicts the verdict.
Verdict verdict_cross_check(const Beamsplitter& b, double tol = 1e-10, long closure_cap = 3240);

}  // namespace lopt
