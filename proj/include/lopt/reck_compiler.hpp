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

namespace lopt {

/// Triangular decomposition of an m×m unitary: evaluate(circuit) times the
/// diagonal of residual phases reproduces the input.
struct Decomposition {
  Circuit circuit;
  std::vector<double> residual_phases;  // one angle per mode, applied as the
                                        // rightmost (first) diagonal factor
  double reconstruction_error = 0.0;
};

/// Reck-style elimination: below-diagonal entries are nulled column by column
/// (left to right), bottom to top, each by a phaseshifter on the lower mode
/// followed by a real-angle beamsplitter on adjacent modes. At most
/// m(m−1)/2 beamsplitters are emitted; entries already below 1e−14 are
/// skipped. Throws ValidationError if u is not unitary within tol.
Decomposition decompose(const cmat& u, double tol = kDefaultTol);

/// Real/orthogonal variant: the circuit contains only real beamsplitters and
/// the residual phases are 0 or pi (sign flips, including the single trailing
/// reflection that a determinant −1 input forces).
Decomposition decompose_real(const cmat& o, double tol = kDefaultTol);

}  // namespace lopt
