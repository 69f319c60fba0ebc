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

#include "lopt/matrix_core.hpp"

#include <variant>
#include <vector>

namespace lopt {

/// Two-mode gate [[alpha, beta*], [beta, −alpha*]] with |alpha|² + |beta|² = 1.
/// Always has determinant −1. Construct through make_beamsplitter.
struct Beamsplitter {
  cplx alpha;
  cplx beta;

  Eigen::Matrix2cd matrix() const;
};

/// One-mode gate multiplying the mode amplitude by e^{i·theta}.
struct Phaseshifter {
  double theta = 0.0;
};

/// Arbitrary 2×2 unitary placed on two modes (admitted so that gates with
/// determinant other than −1 can be classified).
struct TwoModeGate {
  Eigen::Matrix2cd matrix;
};

/// A gate bound to modes of a circuit. Beamsplitters and general gates use
/// both mode indices (order matters, see embed); phaseshifters use mode_a.
struct PlacedGate {
  std::variant<Beamsplitter, Phaseshifter, TwoModeGate> gate;
  int mode_a = 0;
  int mode_b = -1;
};

/// Ordered gate list over m modes; the first listed gate is applied first.
struct Circuit {
  int modes = 0;
  std::vector<PlacedGate> gates;
};

/// Validates |alpha|² + |beta|² = 1 within 1e−9; throws ValidationError otherwise.
Beamsplitter make_beamsplitter(cplx alpha, cplx beta);

/// The beamsplitter mixes modes: both |alpha| and |beta| exceed tol.
bool is_nontrivial(const Beamsplitter& b, double tol = kDefaultTol);

/// Places a 2×2 gate g on modes (i, j) of an m-mode system: identity
/// everywhere except (i,i) = g00, (i,j) = g01, (j,i) = g10, (j,j) = g11.
/// The pair is ordered — embed(g, j, i, m) is the reversed placement.
cmat embed(const Eigen::Matrix2cd& g, int i, int j, int m);

/// Embedded matrix of one placed gate.
cmat gate_matrix(const PlacedGate& g, int modes);

/// Product G_k···G_2·G_1 of the embedded gate matrices, where G_1 is the
/// first listed (first applied) gate.
cmat evaluate(const Circuit& c);

}  // namespace lopt
