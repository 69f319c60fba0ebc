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

#include <vector>

namespace lopt {

/// Occupation-number vector (s_1, ..., s_m); photon number is the sum.
struct FockState {
  std::vector<int> occupations;

  int photons() const;
  int modes() const { return static_cast<int>(occupations.size()); }
  bool operator==(const FockState&) const = default;
};

/// n-photon action of a single-photon unitary, with its basis ordering.
struct LiftedUnitary {
  int photons = 0;
  std::vector<FockState> basis;  // lexicographically descending occupations
  cmat matrix;                   // entry (T, S) = amplitude(U, S, T)
};

/// All occupation vectors of n photons in m modes, in lexicographically
/// descending order. Throws CapacityError when C(n+m−1, n) exceeds 10^4.
std::vector<FockState> fock_basis(int n, int m);

/// Permanent by Ryser's formula with Gray-code iteration; dimension cap 12.
cplx permanent(const cmat& m);

/// Transition amplitude <T| lift(U) |S> = Per(U_{S,T}) / sqrt(prod s_j! prod t_i!)
/// where U_{S,T} repeats column j s_j times and row i t_i times.
cplx amplitude(const cmat& u, const FockState& s, const FockState& t);

/// Lifts an m×m unitary to the n-photon space; unitary within 1e−8.
LiftedUnitary lift(const cmat& u, int n);

}  // namespace lopt
