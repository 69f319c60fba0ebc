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

#include "lopt/universality.hpp"

#include "lopt/errors.hpp"

#include <cmath>
#include <numbers>

namespace lopt {

namespace {

constexpr double kPi = std::numbers::pi;

bool borderline(double magnitude, double tol) {
  return magnitude > tol && magnitude <= 10.0 * tol;
}

std::string with_flag(std::string rationale, bool is_borderline) {
  if (is_borderline) rationale += " (borderline)";
  return rationale;
}

bool monomial(const cmat& m, double tol) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double a = std::abs(m(i, j));
      if (a > tol && std::abs(a - 1.0) > tol) return false;
    }
  }
  return true;
}

}  // namespace

std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::Trivial: return "Trivial";
    case Outcome::UniversalOrthogonal: return "UniversalOrthogonal";
    case Outcome::UniversalUnitary: return "UniversalUnitary";
    case Outcome::OutOfTheoremScope: return "OutOfTheoremScope";
  }
  return "?";
}

Verdict classify_beamsplitter(const Beamsplitter& b, double tol) {
  const double a = std::abs(b.alpha);
  const double be = std::abs(b.beta);
  Verdict v;
  if (a <= tol || be <= tol) {
    v.outcome = Outcome::Trivial;
    v.rationale = "trivial-mixing";
    return v;
  }
  const double im = std::max(std::abs(b.alpha.imag()), std::abs(b.beta.imag()));
  const bool near_axis = borderline(a, tol) || borderline(be, tol);
  if (im <= tol) {
    v.outcome = Outcome::UniversalOrthogonal;
    v.rationale = with_flag("real-beamsplitter", near_axis);
  } else {
    v.outcome = Outcome::UniversalUnitary;
    v.rationale = with_flag("complex-beamsplitter", near_axis || borderline(im, tol));
  }
  return v;
}

Verdict classify_two_mode_with_phases(const Eigen::Matrix2cd& g, double tol) {
  if (!is_unitary(g, std::max(tol, 1e-9))) {
    throw ValidationError("classify_two_mode_with_phases: gate must be unitary");
  }
  const double theta = std::arg(g.determinant());
  const Eigen::Matrix2cd adjusted = std::polar(1.0, (kPi - theta) / 2.0) * g;
  const Beamsplitter b{adjusted(0, 0), adjusted(1, 0)};
  Verdict v;
  if (!is_nontrivial(b, tol)) {
    v.outcome = Outcome::Trivial;
    v.rationale = "trivial-mixing";
    return v;
  }
  v.outcome = Outcome::UniversalUnitary;
  v.rationale = with_flag("det-adjusted-by-phase",
                          borderline(std::abs(b.alpha), tol) ||
                              borderline(std::abs(b.beta), tol));
  return v;
}

Verdict classify_real_two_mode(const Eigen::Matrix2cd& g, double tol) {
  if (g.imag().cwiseAbs().maxCoeff() > tol) {
    throw ValidationError("classify_real_two_mode: gate must be real");
  }
  if (!is_unitary(g, std::max(tol, 1e-9))) {
    throw ValidationError("classify_real_two_mode: gate must be orthogonal");
  }
  const double det = g.determinant().real();
  if (det < 0.0) {
    return classify_beamsplitter(Beamsplitter{g(0, 0).real(), g(1, 0).real()}, tol);
  }
  constexpr double kAngleTol = 1e-9;
  const double theta = std::atan2(g(1, 0).real(), g(0, 0).real());
  const double rem = std::remainder(theta, kPi / 2.0);
  Verdict v;
  if (std::abs(rem) <= kAngleTol) {
    v.outcome = Outcome::Trivial;
    v.rationale = "real-rotation-angle";
  } else {
    v.outcome = Outcome::UniversalOrthogonal;
    v.rationale = with_flag("real-rotation-angle", std::abs(rem) <= 10.0 * kAngleTol);
  }
  return v;
}

Verdict classify_gate(const Eigen::Matrix2cd& g, bool with_phases, double tol) {
  if (!is_unitary(g, std::max(tol, 1e-9))) {
    throw ValidationError("classify_gate: gate must be unitary");
  }
  if (with_phases) return classify_two_mode_with_phases(g, tol);
  if (g.imag().cwiseAbs().maxCoeff() <= tol) return classify_real_two_mode(g.real().cast<cplx>(), tol);
  if (std::abs(g.determinant() - cplx(-1.0)) <= std::max(tol, 1e-9)) {
    return classify_beamsplitter(Beamsplitter{g(0, 0), g(1, 0)}, tol);
  }
  // A complex gate with det != −1 and no free phaseshifters: no verdict is
  // available; mixing gates must not be guessed either way.
  Verdict v;
  const Beamsplitter as_bs{g(0, 0), g(1, 0)};
  if (!is_nontrivial(as_bs, tol) && monomial(g, tol)) {
    v.outcome = Outcome::Trivial;
    v.rationale = "trivial-mixing";
    return v;
  }
  v.outcome = Outcome::OutOfTheoremScope;
  v.rationale = "out-of-theorem-scope";
  return v;
}

Verdict verdict_cross_check(const Beamsplitter& b, double tol, long closure_cap) {
  Verdict v = classify_beamsplitter(b, tol);
  const GeneratorTriple triple = generator_triple(b);
  const std::vector<cmat> gens = {triple.r1, triple.r2, triple.r3};

  Evidence e;
  e.trace_values = triple.trace_values();
  e.commutant_dimension = commutant_dimension(gens, 1e-9);
  e.closure = finite_closure(gens, closure_cap);
  e.lie_closure = lie_closure_dimension(gens, 1e-6);
  e.complex_witness = complex_witness(triple);
  const bool nontrivial = is_nontrivial(b, tol);
  if (nontrivial) {
    e.characters = character_elimination(triple, 1e-9);
    e.dihedral = dihedral_elimination(triple, 1e-9);
  }

  // Evidence must back the clause-based verdict.
  if (v.outcome == Outcome::Trivial) {
    for (const cmat& g : gens) {
      if (!monomial(g, 1e-9)) {
        throw InternalError("verdict_cross_check: trivial verdict but non-monomial generator");
      }
    }
  } else {
    if (e.commutant_dimension != 1) {
      throw InternalError("verdict_cross_check: universal verdict but commutant dimension " +
                          std::to_string(e.commutant_dimension));
    }
    if (e.closure.outcome != ClosureReport::Outcome::CapExceeded) {
      throw InternalError("verdict_cross_check: universal verdict but finite closure");
    }
    const int want_dim = v.outcome == Outcome::UniversalOrthogonal ? 3 : 8;
    if (e.lie_closure.dimension != want_dim) {
      throw InternalError("verdict_cross_check: universal verdict but Lie dimension " +
                          std::to_string(e.lie_closure.dimension));
    }
    if (v.outcome == Outcome::UniversalUnitary) {
      const double complex_signal =
          std::max({std::abs(e.complex_witness), std::abs(triple.t1.imag()),
                    std::abs(triple.t2.imag()), std::abs(triple.t3.imag())});
      if (complex_signal <= tol) {
        throw InternalError("verdict_cross_check: unitary verdict but no complex signal");
      }
    }
  }
  v.evidence = std::move(e);
  return v;
}

}  // namespace lopt
