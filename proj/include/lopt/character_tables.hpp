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

#include <string>
#include <vector>

namespace lopt {

/// Allowed character values of the three-dimensional irreducible
/// representations of one finite group. Values are built from closed-form
/// constants (square roots, roots of unity) evaluated in double precision.
struct CharacterTable {
  std::string group_name;
  std::vector<cplx> allowed_characters;

  /// Distance from z to the nearest allowed character.
  double distance(cplx z) const;
  /// The nearest allowed character itself.
  cplx nearest(cplx z) const;
  /// distance(z) <= tol.
  bool contains(cplx z, double tol) const;
};

/// The groups with three-dimensional irreps whose character sets the
/// classifier tests: the eight exceptional finite subgroups of SU(3) and the
/// relevant finite rotation groups with their double covers.
const std::vector<CharacterTable>& character_tables();

/// Lookup by name; throws ValidationError for unknown names.
const CharacterTable& character_table(const std::string& group_name);

}  // namespace lopt
