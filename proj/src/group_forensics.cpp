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

#include "lopt/group_forensics.hpp"

#include "lopt/errors.hpp"

#include <cmath>
#include <deque>
#include <numbers>
#include <unordered_map>

namespace lopt {

namespace {

constexpr double kPi = std::numbers::pi;

struct FingerprintHash {
  std::size_t operator()(const std::vector<std::int64_t>& key) const {
    std::size_t h = 1469598103934665603ull;  // FNV-1a
    for (std::int64_t v : key) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

void check_closed_form_traces(const GeneratorTriple& t) {
  const cplx a = std::conj(-t.r1(2, 2));  // R1(2,2) = −a*
  const cplx t1 = a * a - 2.0 * std::conj(a);
  const cplx t2 = std::conj(a) * std::conj(a) + 2.0 * a;
  const cplx t3 = cplx(-std::norm(a), 2.0 * a.imag());
  if (std::abs(t1 - t.t1) > 1e-10 || std::abs(t2 - t.t2) > 1e-10 ||
      std::abs(t3 - t.t3) > 1e-10) {
    throw InternalError("traces: closed forms disagree with matrix traces");
  }
}

}  // namespace

GeneratorTriple generator_triple(const Beamsplitter& b) {
  const cmat b12 = embed(b.matrix(), 0, 1, 3);
  const cmat b13 = embed(b.matrix(), 0, 2, 3);
  const cmat b23 = embed(b.matrix(), 1, 2, 3);
  GeneratorTriple t;
  t.r1 = b12 * b13;
  t.r2 = b23 * b13;
  t.r3 = b12 * b23;
  t.t1 = t.r1.trace();
  t.t2 = t.r2.trace();
  t.t3 = t.r3.trace();
  check_closed_form_traces(t);
  return t;
}

std::array<cplx, 3> traces(const GeneratorTriple& t) {
  check_closed_form_traces(t);
  return t.trace_values();
}

int commutant_dimension(const std::vector<cmat>& mats, double tol) {
  if (mats.empty()) {
    throw ValidationError("commutant_dimension: at least one generator needed");
  }
  const Eigen::Index d = mats.front().rows();
  for (const cmat& m : mats) {
    if (m.rows() != d || m.cols() != d) {
      throw ValidationError("commutant_dimension: generators must share one dimension");
    }
  }
  // Row-major vectorization: vec(MX − XM) = (M ⊗ I − I ⊗ Mᵀ) vec(X).
  const Eigen::Index d2 = d * d;
  cmat stacked(static_cast<Eigen::Index>(mats.size()) * d2, d2);
  stacked.setZero();
  Eigen::Index row0 = 0;
  for (const cmat& m : mats) {
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        for (Eigen::Index k = 0; k < d; ++k) {
          stacked(row0 + i * d + j, k * d + j) += m(i, k);   // (M ⊗ I)
          stacked(row0 + i * d + j, i * d + k) -= m(k, j);   // −(I ⊗ Mᵀ)
        }
      }
    }
    row0 += d2;
  }
  const Eigen::VectorXd sigma = stacked.jacobiSvd().singularValues();
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > tol * sigma(0)) ++rank;
  }
  return static_cast<int>(d2) - rank;
}

ClosureReport finite_closure(const std::vector<cmat>& gens, long cap,
                             double dedup_tol, int word_cap) {
  if (cap < 1) throw ValidationError("finite_closure: cap must be at least 1");
  if (gens.empty()) throw ValidationError("finite_closure: no generators");
  for (const cmat& g : gens) {
    if (!is_unitary(g, 1e-8)) {
      throw ValidationError("finite_closure: generators must be unitary");
    }
  }

  std::vector<cmat> alphabet;
  for (const cmat& g : gens) alphabet.push_back(g);
  for (const cmat& g : gens) alphabet.push_back(g.adjoint());

  std::unordered_map<std::vector<std::int64_t>, int, FingerprintHash> seen;
  std::deque<std::pair<cmat, int>> frontier;  // (element, word length)

  ClosureReport report;
  auto admit = [&](const cmat& m, int depth) {
    auto key = phase_fixed_fingerprint(m, dedup_tol);
    if (seen.emplace(std::move(key), 1).second) {
      frontier.emplace_back(m, depth);
      report.max_word_length_reached = std::max(report.max_word_length_reached, depth);
      return true;
    }
    return false;
  };

  for (const cmat& g : alphabet) admit(g, 1);

  bool stabilized = true;
  while (!frontier.empty()) {
    if (static_cast<long>(seen.size()) > cap) {
      stabilized = false;
      break;
    }
    const auto [element, depth] = frontier.front();
    frontier.pop_front();
    if (depth >= word_cap) {
      stabilized = false;
      continue;
    }
    for (const cmat& g : alphabet) {
      admit(element * g, depth + 1);
    }
  }

  report.elements_found = static_cast<long>(seen.size());
  if (stabilized && static_cast<long>(seen.size()) <= cap) {
    report.outcome = ClosureReport::Outcome::Finite;
    report.order = static_cast<long>(seen.size());
  } else {
    report.outcome = ClosureReport::Outcome::CapExceeded;
  }
  return report;
}

EliminationReport character_elimination(const GeneratorTriple& t, double tol) {
  const auto tr = t.trace_values();
  if (std::abs(t.r1(2, 0)) <= 1e-12 || std::abs(t.r1(2, 2)) <= 1e-12) {
    // R1(2,0) = beta and |R1(2,2)| = |alpha|: degenerate traces either way.
    throw ValidationError("character_elimination: beamsplitter must be nontrivial");
  }
  EliminationReport report;
  for (const CharacterTable& table : character_tables()) {
    GroupElimination g;
    g.group_name = table.group_name;
    for (int i = 0; i < 3; ++i) {
      g.trace_distances[i] = table.distance(tr[i]);
      g.nearest_characters[i] = table.nearest(tr[i]);
      if (g.failing_trace < 0 || g.trace_distances[i] > g.failing_distance) {
        g.failing_trace = i;
        g.failing_distance = g.trace_distances[i];
      }
    }
    g.excluded = g.failing_distance > tol;
    report.groups.push_back(std::move(g));
  }
  return report;
}

EliminationReport dihedral_elimination(const GeneratorTriple& t, double tol) {
  if (std::abs(t.r1(2, 0)) <= 1e-12 || std::abs(t.r1(2, 2)) <= 1e-12) {
    throw ValidationError("dihedral_elimination: beamsplitter must be nontrivial");
  }
  const auto tr = t.trace_values();
  const auto mats = t.matrices();

  DihedralSection section;
  for (int i = 0; i < 3; ++i) {
    section.trace_norms[i] = std::abs(tr[i]);
    section.traces_nonzero[i] = section.trace_norms[i] > tol;
    section.unit_norm[i] = std::abs(section.trace_norms[i] - 1.0) <= tol;
  }
  const std::array<std::pair<int, int>, 3> pairs = {{{0, 1}, {0, 2}, {1, 2}}};
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    PairProductTrace p;
    p.i = i;
    p.j = j;
    p.value = (mats[i] * mats[j]).trace();
    p.nonzero = std::abs(p.value) > tol;
    section.pair_product_traces[k] = p;
  }

  // The series groups would need traceless generators (classes C/E), or two
  // generators of distinct unit-trace types whose product is traceless.
  // Nonzero traces rule out the former; a nonzero pair-product trace for
  // every unit-norm pair rules out the latter.
  bool excluded = section.traces_nonzero[0] && section.traces_nonzero[1] &&
                  section.traces_nonzero[2];
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const auto [i, j] = pairs[k];
    if (section.unit_norm[i] && section.unit_norm[j]) {
      excluded = excluded && section.pair_product_traces[k].nonzero;
    }
  }
  section.excluded = excluded;

  EliminationReport report;
  report.dihedral = section;
  return report;
}

cplx delta_character(DeltaSeries series, int n, int m1, int m2, int t,
                     DeltaClass cls, int p, int q) {
  if (n < 1) throw ValidationError("delta_character: n must be positive");
  if (p < 0 || p >= n || q < 0 || q >= n) {
    throw ValidationError("delta_character: p, q must lie in [0, n)");
  }
  if (m1 < 0 || m1 >= n || m2 < 0 || m2 >= n) {
    throw ValidationError("delta_character: m1, m2 must lie in [0, n)");
  }
  if (t != 0 && t != 1) throw ValidationError("delta_character: t must be 0 or 1");
  const bool six = series == DeltaSeries::Delta6n2;
  if (!six && (cls == DeltaClass::B || cls == DeltaClass::D || cls == DeltaClass::F)) {
    throw ValidationError("delta_character: classes B, D, F exist only in Delta(6n^2)");
  }
  if ((cls == DeltaClass::D || cls == DeltaClass::F) && n % 2 != 0) {
    throw ValidationError("delta_character: classes D and F need even n");
  }

  const auto omega = [n](long k) { return std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / n); };
  const double sign = (six && t == 1) ? -1.0 : 1.0;
  switch (cls) {
    case DeltaClass::A:
      return omega(static_cast<long>(m1) * p + static_cast<long>(m2) * q) +
             omega(static_cast<long>(m1) * q - static_cast<long>(m2) * (p + q)) +
             omega(-static_cast<long>(m1) * (p + q) + static_cast<long>(m2) * p);
    case DeltaClass::B:
      return sign * omega(static_cast<long>(m1) * p + static_cast<long>(m2) * q);
    case DeltaClass::D:
      return sign * omega(static_cast<long>(m1) * (n / 2 - p - q) + static_cast<long>(m2) * p);
    case DeltaClass::F:
      return sign * omega(static_cast<long>(m1) * q + static_cast<long>(m2) * (n / 2 - p - q));
    case DeltaClass::C:
    case DeltaClass::E:
      return 0.0;
  }
  throw ValidationError("delta_character: invalid class");
}

LieClosureResult lie_closure_dimension(const std::vector<cmat>& gens, double tol) {
  if (gens.empty()) return {0, false};
  const Eigen::Index d = gens.front().rows();
  bool special = true;
  for (const cmat& g : gens) {
    if (g.rows() != d || g.cols() != d || !is_unitary(g, 1e-8)) {
      throw ValidationError("lie_closure_dimension: generators must be unitary, same dimension");
    }
    special = special && std::abs(g.determinant() - cplx(1.0)) <= 1e-9;
  }

  // All words of length 1..3 over the generators.
  std::vector<cmat> words = gens;
  const std::size_t n1 = words.size();
  for (std::size_t i = 0; i < n1; ++i)
    for (const cmat& g : gens) words.push_back(words[i] * g);
  for (std::size_t i = n1; i < n1 + n1 * n1; ++i)
    for (const cmat& g : gens) words.push_back(words[i] * g);

  // The span is taken over the reals: each log contributes the vector of
  // (re, im) parts of its entries.
  const auto real_embed = [d](const cmat& m) {
    Eigen::VectorXd w(2 * d * d);
    for (Eigen::Index i = 0; i < d; ++i) {
      for (Eigen::Index j = 0; j < d; ++j) {
        w(2 * (i * d + j)) = m(i, j).real();
        w(2 * (i * d + j) + 1) = m(i, j).imag();
      }
    }
    return w;
  };
  const auto to_mat = [d](const Eigen::VectorXd& v) {
    cmat m(d, d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j)
        m(i, j) = cplx(v(2 * (i * d + j)), v(2 * (i * d + j) + 1));
    return m;
  };

  LieClosureResult result;
  std::vector<Eigen::VectorXd> span;
  for (const cmat& w : words) {
    PrincipalLog pl = principal_log_unitary(w);
    if (pl.branch_warning) {
      // A pinned eigenphase makes the branch choice arbitrary; the log may
      // leave the algebra, so it is not used as a spanning element.
      result.branch_warning = true;
      continue;
    }
    if (special) {
      // Words of det-1 generators stay in SU(d); principal logs can still
      // carry a 2*pi*i/d trace offset, which is not an algebra element.
      pl.matrix -= (pl.matrix.trace() / static_cast<double>(d)) * cmat::Identity(d, d);
    }
    span.push_back(real_embed(pl.matrix));
  }

  int rank = 0;
  while (!span.empty()) {
    Eigen::MatrixXd stacked(static_cast<Eigen::Index>(span.size()), 2 * d * d);
    for (std::size_t i = 0; i < span.size(); ++i) {
      stacked.row(static_cast<Eigen::Index>(i)) = span[i].transpose();
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(stacked, Eigen::ComputeThinV);
    const Eigen::VectorXd sigma = svd.singularValues();
    int new_rank = 0;
    for (Eigen::Index i = 0; i < sigma.size(); ++i) {
      if (sigma(0) > 0.0 && sigma(i) > tol * sigma(0)) ++new_rank;
    }
    if (new_rank == rank) break;
    rank = new_rank;

    // Orthonormal basis of the span, as matrices, plus all pairwise brackets.
    std::vector<cmat> basis;
    for (int i = 0; i < rank; ++i) basis.push_back(to_mat(svd.matrixV().col(i)));
    span.clear();
    for (const cmat& b : basis) span.push_back(real_embed(b));
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        span.push_back(real_embed(cmat(basis[i] * basis[j] - basis[j] * basis[i])));
      }
    }
  }
  result.dimension = rank;
  return result;
}

double complex_witness(const GeneratorTriple& t) {
  return (t.r1 * t.r2 * t.r3 * t.r1).trace().imag();
}

}  // namespace lopt
