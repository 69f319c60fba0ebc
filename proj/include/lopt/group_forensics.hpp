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

#include "lopt/character_tables.hpp"
#include "lopt/optics_model.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace lopt {

/// The three SU(3) elements generated by one beamsplitter on three modes:
/// R1 = b12·b13, R2 = b23·b13, R3 = b12·b23, with their traces.
struct GeneratorTriple {
  Eigen::Matrix3cd r1, r2, r3;
  cplx t1, t2, t3;

  std::array<Eigen::Matrix3cd, 3> matrices() const { return {r1, r2, r3}; }
  std::array<cplx, 3> trace_values() const { return {t1, t2, t3}; }
};

/// Builds the triple from embedded products. The traces are cross-checked
/// against their closed forms T1 = a² − 2a*, T2 = (a*)² + 2a,
/// T3 = −|a|² + 2i·Im(a); a mismatch beyond 1e−10 raises InternalError.
GeneratorTriple generator_triple(const Beamsplitter& b);

/// Returns (T1, T2, T3), re-verifying the closed forms against the matrices.
std::array<cplx, 3> traces(const GeneratorTriple& t);

/// Dimension of {X : MX = XM for every generator M}, computed as the nullity
/// of the stacked commutator maps on vectorized unknowns. Result 1 certifies
/// that the generators form an irreducible set.
int commutant_dimension(const std::vector<cmat>& mats, double tol = kDefaultTol);

struct ClosureReport {
  enum class Outcome { Finite, CapExceeded };
  Outcome outcome = Outcome::CapExceeded;
  long order = 0;           // meaningful when outcome == Finite
  long elements_found = 0;  // deduplicated elements seen when stopping
  int max_word_length_reached = 0;
};

/// Breadth-first product closure of the generators and their adjoints,
/// deduplicated by the phase-fixed rounded fingerprint. Stops as soon as the
/// element count exceeds cap or the word length exceeds word_cap.
ClosureReport finite_closure(const std::vector<cmat>& gens, long cap = 3240,
                             double dedup_tol = 1e-6, int word_cap = 40);

struct GroupElimination {
  std::string group_name;
  bool excluded = false;
  std::array<double, 3> trace_distances{};  // min distance of T_i to the set
  std::array<cplx, 3> nearest_characters{};
  int failing_trace = -1;       // 0-based index of the most distant trace
  double failing_distance = 0;
};

struct PairProductTrace {
  int i = 0, j = 0;     // 0-based generator indices
  cplx value;
  bool nonzero = false;
};

struct DihedralSection {
  std::array<double, 3> trace_norms{};
  std::array<bool, 3> traces_nonzero{};
  std::array<bool, 3> unit_norm{};          // | |T_i| − 1 | <= tol
  std::array<PairProductTrace, 3> pair_product_traces{};  // (0,1), (0,2), (1,2)
  bool excluded = false;
};

/// Evidence produced by the finite-group eliminations. character_elimination
/// fills `groups`; dihedral_elimination fills `dihedral`.
struct EliminationReport {
  std::vector<GroupElimination> groups;
  std::optional<DihedralSection> dihedral;
};

/// Tests every tabled group: excluded when some trace T_i has distance
/// greater than tol from every allowed character of that group.
/// Requires a nontrivial beamsplitter triple (degenerate traces otherwise).
EliminationReport character_elimination(const GeneratorTriple& t, double tol = kDefaultTol);

/// Dihedral-like family elimination: records that no trace vanishes, which
/// traces have unit norm, and that every unit-norm pair has a nonzero
/// pair-product trace — the observations that rule out the permutation-like
/// series groups. Requires a nontrivial beamsplitter triple.
EliminationReport dihedral_elimination(const GeneratorTriple& t, double tol = kDefaultTol);

enum class DeltaSeries { Delta3n2, Delta6n2 };
enum class DeltaClass { A, B, C, D, E, F };

/// Character of conjugacy class cls(p, q) in the three-dimensional irrep
/// labeled (m1, m2) (and t for the 6n² series) of Delta(3n²) or Delta(6n²).
/// Classes B, D, F exist only in the 6n² series; D and F need even n.
cplx delta_character(DeltaSeries series, int n, int m1, int m2, int t,
                     DeltaClass cls, int p, int q);

struct LieClosureResult {
  int dimension = 0;
  bool branch_warning = false;  // some word's log was pinned at eigenphase pi
};

/// Heuristic lower bound on the dimension of the Lie algebra generated by the
/// given unitaries: principal logs of all words of length <= 3, closed under
/// commutator brackets, dimension by numeric rank at the given tolerance.
/// Reaches 3 for real nontrivial triples and 8 for complex ones.
LieClosureResult lie_closure_dimension(const std::vector<cmat>& gens, double tol = 1e-6);

/// Im Tr(R1·R2·R3·R1), computed directly from the matrices. Vanishes for real
/// beamsplitters; nonzero whenever beta is non-real and b is nontrivial.
double complex_witness(const GeneratorTriple& t);

}  // namespace lopt
