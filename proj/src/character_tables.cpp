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

#include "lopt/character_tables.hpp"

#include "lopt/errors.hpp"

#include <cmath>
#include <initializer_list>
#include <limits>
#include <numbers>

namespace lopt {

namespace {

constexpr double kPi = std::numbers::pi;

// e_n^k = exp(2*pi*i*k/n)
cplx root(int n, int k) { return std::polar(1.0, 2.0 * kPi * k / n); }

const double kSqrt5 = std::sqrt(5.0);
const double kSqrt7 = std::sqrt(7.0);

std::vector<cplx> times_cube_roots(const std::vector<cplx>& base) {
  std::vector<cplx> out;
  out.reserve(base.size() * 3);
  for (int k = 0; k < 3; ++k) {
    for (const cplx& c : base) out.push_back(c * root(3, k));
  }
  return out;
}

std::vector<cplx> plus_minus(std::initializer_list<cplx> values) {
  std::vector<cplx> out;
  for (const cplx& v : values) {
    out.push_back(v);
    out.push_back(-v);
  }
  return out;
}

std::vector<CharacterTable> build_tables() {
  std::vector<CharacterTable> tables;

  const std::vector<cplx> sigma60 = {0.0, -1.0, 3.0, (1.0 + kSqrt5) / 2.0,
                                     (1.0 - kSqrt5) / 2.0};
  tables.push_back({"Sigma(60)", sigma60});
  tables.push_back({"Sigma(60)xZ3", times_cube_roots(sigma60)});

  const std::vector<cplx> sigma168 = {0.0, 1.0, -1.0, 3.0,
                                      cplx(-0.5, kSqrt7 / 2.0),
                                      cplx(-0.5, -kSqrt7 / 2.0)};
  tables.push_back({"Sigma(168)", sigma168});
  tables.push_back({"Sigma(168)xZ3", times_cube_roots(sigma168)});

  tables.push_back({"Sigma(216)", {0.0, -1.0, 3.0}});

  {
    std::vector<cplx> s = plus_minus({1.0, root(3, 1), root(3, 2), root(4, 1),
                                      root(12, 7), root(12, 11), 3.0,
                                      3.0 * root(3, 1), 3.0 * root(3, 2)});
    s.push_back(0.0);
    tables.push_back({"Sigma(36x3)", std::move(s)});
  }

  {
    std::vector<cplx> s = plus_minus({1.0, root(3, 1), root(3, 2)});
    s.insert(s.end(), {cplx(0.0), cplx(3.0), -root(9, 2), -root(9, 4), -root(9, 5),
                       -root(9, 7), root(9, 2) + root(9, 5), -root(9, 2) + root(9, 5),
                       2.0 * root(9, 2) + root(9, 5), -root(9, 2) - 2.0 * root(9, 5),
                       root(9, 4) + root(9, 7), root(9, 4) + 2.0 * root(9, 7),
                       -2.0 * root(9, 4) - root(9, 7)});
    tables.push_back({"Sigma(216x3)", std::move(s)});
  }

  {
    std::vector<cplx> s = plus_minus({1.0, root(3, 1), root(3, 2)});
    s.insert(s.end(), {cplx(0.0), 3.0 * root(3, 1), 3.0 * root(3, 2),
                       -root(5, 1) - root(5, 4), -root(5, 2) - root(5, 3),
                       -root(15, 1) - root(15, 4), -root(15, 7) - root(15, 13),
                       -root(15, 11) - root(15, 14), -root(15, 2) - root(15, 8)});
    tables.push_back({"Sigma(360x3)", std::move(s)});
  }

  // Finite rotation groups with three-dimensional irreps, and the double
  // covers that admit them.
  const std::vector<cplx> octa_tetra = {0.0, 1.0, -1.0, 3.0, -3.0};
  tables.push_back({"octahedral", octa_tetra});
  tables.push_back({"tetrahedral", octa_tetra});
  tables.push_back({"binary-tetrahedral", octa_tetra});
  tables.push_back({"binary-octahedral", octa_tetra});
  tables.push_back({"binary-icosahedral",
                    {0.0, -1.0, 3.0, (kSqrt5 + 1.0) / 2.0, (kSqrt5 - 1.0) / 2.0}});

  return tables;
}

}  // namespace

double CharacterTable::distance(cplx z) const {
  double best = std::numeric_limits<double>::infinity();
  for (const cplx& c : allowed_characters) best = std::min(best, std::abs(z - c));
  return best;
}

cplx CharacterTable::nearest(cplx z) const {
  cplx best = allowed_characters.front();
  double best_d = std::abs(z - best);
  for (const cplx& c : allowed_characters) {
    const double d = std::abs(z - c);
    if (d < best_d) {
      best_d = d;
      best = c;
    }
  }
  return best;
}

bool CharacterTable::contains(cplx z, double tol) const {
  return distance(z) <= tol;
}

const std::vector<CharacterTable>& character_tables() {
  static const std::vector<CharacterTable> tables = build_tables();
  return tables;
}

const CharacterTable& character_table(const std::string& group_name) {
  for (const CharacterTable& t : character_tables()) {
    if (t.group_name == group_name) return t;
  }
  throw ValidationError("character_table: unknown group " + group_name);
}

}  // namespace lopt
