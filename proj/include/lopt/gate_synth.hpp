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

#include "lopt/optics_model.hpp"

#include <string>
#include <vector>

namespace lopt {

/// The six embeddings of one beamsplitter on three modes. Ordered pairs:
/// B21, B31, B32 are the reversed placements. Enum order is the label order
/// used for lexicographic tie-breaking.
enum class Placement { B12, B13, B21, B23, B31, B32 };

struct WordLetter {
  Placement placement = Placement::B12;
  bool adjoint = false;

  auto operator<=>(const WordLetter&) const = default;
};

using Word = std::vector<WordLetter>;

std::string to_string(Placement p);
Placement placement_from_string(const std::string& label);

/// Embedded 3×3 matrix of one letter for the given beamsplitter.
Eigen::Matrix3cd placement_matrix(const Beamsplitter& b, const WordLetter& letter);

/// Product of the letter matrices in application order (first letter first).
Eigen::Matrix3cd apply_word(const Beamsplitter& b, const Word& word);

struct SynthesisResult {
  Word word;
  double achieved_error = 0.0;  // phase_distance(apply_word(b, word), target)
  long nodes_explored = 0;
  int budget = 0;
  bool converged = false;
};

/// Bidirectional meet-in-the-middle search for a word of length <= budget
/// with phase_distance(apply_word(b, word), target) <= epsilon. Returns the
/// first such word (shortest, lexicographic label order on ties), or the best
/// candidate found with converged = false. Deterministic for fixed inputs.
///
/// Half-words are deduplicated by the phase-fixed fingerprint; approximate
/// matches use a coarser first-row bucket keyed at epsilon/4 granularity
/// (a recall heuristic, so a word slightly over the bucket resolution may be
/// found one level later). Internal level sets are capped at 2e6 nodes.
///
/// Throws ValidationError for a trivial beamsplitter, a non-unitary target,
/// or a real beamsplitter with a target that is not phase-equivalent to a
/// real orthogonal matrix (unreachable).
SynthesisResult synthesize(const Beamsplitter& b, const cmat& target, double epsilon,
                           int budget);

}  // namespace lopt
