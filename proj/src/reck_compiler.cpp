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

#include "lopt/reck_compiler.hpp"

#include "lopt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lopt {

namespace {

constexpr double kSkipMagnitude = 1e-14;

struct Step {
  double mix_angle;   // real beamsplitter (cos t, sin t)
  double phase;       // phaseshifter on the lower mode, applied before the mix
  int lower_mode;
};

// Shared elimination core. Nulls w(r, c) for every below-diagonal entry by
// mixing adjacent rows (r−1, r); returns the steps in elimination order and
// leaves w diagonal.
std::vector<Step> triangularize(cmat& w, bool real_only) {
  const int m = static_cast<int>(w.rows());
  std::vector<Step> steps;
  for (int c = 0; c < m - 1; ++c) {
    for (int r = m - 1; r > c; --r) {
      const cplx b = w(r, c);
      if (std::abs(b) <= kSkipMagnitude) continue;
      const cplx a = w(r - 1, c);
      double t, phi;
      if (real_only) {
        // Real Givens-style beamsplitter, no phase needed.
        t = std::atan2(b.real(), a.real());
        phi = 0.0;
      } else {
        t = std::atan2(std::abs(b), std::abs(a));
        phi = (std::abs(a) <= kSkipMagnitude) ? 0.0 : std::arg(b / a);
      }
      const double ct = std::cos(t), st = std::sin(t);
      const cplx ph = std::polar(1.0, phi);
      // Apply embed([[ct, st], [st, −ct]] · diag(ph, 1), r−1, r) on the left.
      const Eigen::RowVectorXcd row_hi = w.row(r - 1);
      const Eigen::RowVectorXcd row_lo = w.row(r);
      w.row(r - 1) = ct * ph * row_hi + st * row_lo;
      w.row(r) = st * ph * row_hi - ct * row_lo;
      w(r, c) = 0.0;
      steps.push_back(Step{t, phi, r - 1});
    }
  }
  return steps;
}

Decomposition assemble(const cmat& input, cmat& w, const std::vector<Step>& steps,
                       bool real_only) {
  const int m = static_cast<int>(w.rows());
  Decomposition out;
  out.circuit.modes = m;
  // input = step_1⁻¹ ··· step_K⁻¹ · diag(w); each step⁻¹ is the (involutive)
  // beamsplitter followed by the opposite phaseshifter, so the circuit lists
  // the steps in reverse order.
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
    PlacedGate bs;
    bs.gate = Beamsplitter{std::cos(it->mix_angle), std::sin(it->mix_angle)};
    bs.mode_a = it->lower_mode;
    bs.mode_b = it->lower_mode + 1;
    out.circuit.gates.push_back(bs);
    if (!real_only && std::abs(it->phase) > kSkipMagnitude) {
      PlacedGate ps;
      ps.gate = Phaseshifter{-it->phase};
      ps.mode_a = it->lower_mode;
      out.circuit.gates.push_back(ps);
    }
  }
  out.residual_phases.resize(m);
  for (int j = 0; j < m; ++j) {
    const cplx d = w(j, j);
    double angle = std::arg(d);
    if (real_only) angle = d.real() < 0.0 ? std::numbers::pi : 0.0;
    out.residual_phases[j] = std::abs(angle) <= kSkipMagnitude ? 0.0 : angle;
  }
  cmat rebuilt = evaluate(out.circuit);
  for (int j = 0; j < m; ++j) {
    rebuilt.col(j) *= std::polar(1.0, out.residual_phases[j]);
  }
  out.reconstruction_error = phase_distance(rebuilt, input);
  return out;
}

}  // namespace

Decomposition decompose(const cmat& u, double tol) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw ValidationError("decompose: input must be square");
  }
  if (!is_unitary(u, tol)) {
    throw ValidationError("decompose: input is not unitary within tolerance");
  }
  cmat w = u;
  const std::vector<Step> steps = triangularize(w, /*real_only=*/false);
  return assemble(u, w, steps, /*real_only=*/false);
}

Decomposition decompose_real(const cmat& o, double tol) {
  if (o.rows() != o.cols() || o.rows() < 1) {
    throw ValidationError("decompose_real: input must be square");
  }
  if (o.imag().cwiseAbs().maxCoeff() > tol) {
    throw ValidationError("decompose_real: input has complex entries");
  }
  if (!is_unitary(o, tol)) {
    throw ValidationError("decompose_real: input is not orthogonal within tolerance");
  }
  cmat w = o.real().cast<cplx>();
  const std::vector<Step> steps = triangularize(w, /*real_only=*/true);
  return assemble(o, w, steps, /*real_only=*/true);
}

}  // namespace lopt
