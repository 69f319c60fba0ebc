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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <vector>

namespace lopt {

using cplx = std::complex<double>;
using cmat = Eigen::MatrixXcd;
using cvec = Eigen::VectorXcd;

inline constexpr double kDefaultTol = 1e-9;

/// True iff every entry of m is finite (no NaN/Inf).
bool entries_finite(const cmat& m);

/// Max-entry magnitude of (m†m − I) is at most tol. Throws on non-square input.
bool is_unitary(const cmat& m, double tol = kDefaultTol);

/// Largest singular value.
double operator_norm(const cmat& m);

/// min over |phi| = 1 of the operator norm of (a − phi·b).
/// Pseudometric on matrices of equal dimension; zero on phase-equivalent pairs.
double phase_distance(const cmat& a, const cmat& b);

struct PrincipalLog {
  cmat matrix;                 // skew-Hermitian L with exp(L) = input
  bool branch_warning = false; // some eigenphase was pinned to +pi
};

/// Principal logarithm of a unitary matrix, eigenphases in (−pi, pi].
/// Eigenvalues within 1e−12 of −1 are pinned to eigenphase +pi and flagged.
PrincipalLog principal_log_unitary(const cmat& m);

struct UnitaryEigensystem {
  cmat vectors;             // orthonormal eigenvectors, one per column
  Eigen::VectorXd phases;   // eigenphases in (−pi, pi], same order
  bool branch_warning = false;
};

/// Spectral decomposition of a unitary matrix via its commuting Hermitian
/// pair (M+M†)/2 and (M−M†)/(2i); robust for the small dimensions used here.
UnitaryEigensystem unitary_eigensystem(const cmat& m);

/// Number of singular values of the stacked vectors above tol times the
/// largest one. Empty input has rank 0.
int numeric_rank(const std::vector<cvec>& vectors, double tol = kDefaultTol);

/// Rotates m by a global phase so its first entry of magnitude above 1e−6
/// (row-major order) becomes positive real.
cmat phase_fix(const cmat& m);

/// Dedup key: entries of phase_fix(m) rounded to multiples of granularity.
std::vector<std::int64_t> phase_fixed_fingerprint(const cmat& m, double granularity);

}  // namespace lopt
