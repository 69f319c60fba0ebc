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

#include "lopt/optics_model.hpp"

#include "lopt/errors.hpp"

#include <cmath>

namespace lopt {

Eigen::Matrix2cd Beamsplitter::matrix() const {
  Eigen::Matrix2cd m;
  m << alpha, std::conj(beta), beta, -std::conj(alpha);
  return m;
}

Beamsplitter make_beamsplitter(cplx alpha, cplx beta) {
  if (!std::isfinite(alpha.real()) || !std::isfinite(alpha.imag()) ||
      !std::isfinite(beta.real()) || !std::isfinite(beta.imag())) {
    throw ValidationError("make_beamsplitter: amplitudes must be finite");
  }
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > 1e-9) {
    throw ValidationError("make_beamsplitter: |alpha|^2 + |beta|^2 must be 1 (got " +
                          std::to_string(norm) + ")");
  }
  return Beamsplitter{alpha, beta};
}

bool is_nontrivial(const Beamsplitter& b, double tol) {
  return std::abs(b.alpha) > tol && std::abs(b.beta) > tol;
}

cmat embed(const Eigen::Matrix2cd& g, int i, int j, int m) {
  if (m < 2 || i == j || i < 0 || j < 0 || i >= m || j >= m) {
    throw ValidationError("embed: mode indices must be distinct and < m");
  }
  cmat out = cmat::Identity(m, m);
  out(i, i) = g(0, 0);
  out(i, j) = g(0, 1);
  out(j, i) = g(1, 0);
  out(j, j) = g(1, 1);
  return out;
}

cmat gate_matrix(const PlacedGate& g, int modes) {
  if (const auto* ps = std::get_if<Phaseshifter>(&g.gate)) {
    if (g.mode_a < 0 || g.mode_a >= modes) {
      throw ValidationError("gate_matrix: phaseshifter mode out of range");
    }
    cmat out = cmat::Identity(modes, modes);
    out(g.mode_a, g.mode_a) = std::polar(1.0, ps->theta);
    return out;
  }
  Eigen::Matrix2cd two;
  if (const auto* bs = std::get_if<Beamsplitter>(&g.gate)) {
    two = bs->matrix();
  } else {
    two = std::get<TwoModeGate>(g.gate).matrix;
  }
  return embed(two, g.mode_a, g.mode_b, modes);
}

cmat evaluate(const Circuit& c) {
  if (c.modes < 1) throw ValidationError("evaluate: circuit needs at least one mode");
  cmat u = cmat::Identity(c.modes, c.modes);
  for (const PlacedGate& g : c.gates) {
    u = gate_matrix(g, c.modes) * u;
  }
  return u;
}

}  // namespace lopt
