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

#include "lopt/matrix_core.hpp"

#include "lopt/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace lopt {

namespace {

constexpr double kPi = std::numbers::pi;

void require_square(const cmat& m, const char* who) {
  if (m.rows() != m.cols() || m.rows() == 0) {
    throw ValidationError(std::string(who) + ": matrix must be square and non-empty");
  }
}

double spectral_norm_at(const cmat& a, const cmat& b, double theta) {
  const cplx phi = std::polar(1.0, theta);
  return (a - phi * b).jacobiSvd().singularValues()(0);
}

// Golden-section minimisation of f on [lo, hi]; f need not be smooth.
template <typename F>
double golden_min(F f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-13) {
    if (f1 < f2) {
      b = x2; x2 = x1; f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    } else {
      a = x1; x1 = x2; f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    }
  }
  return std::min(f1, f2);
}

}  // namespace

bool entries_finite(const cmat& m) {
  return m.allFinite();
}

bool is_unitary(const cmat& m, double tol) {
  require_square(m, "is_unitary");
  const cmat g = m.adjoint() * m - cmat::Identity(m.rows(), m.cols());
  return g.cwiseAbs().maxCoeff() <= tol;
}

double operator_norm(const cmat& m) {
  if (m.size() == 0) return 0.0;
  return m.jacobiSvd().singularValues()(0);
}

double phase_distance(const cmat& a, const cmat& b) {
  require_square(a, "phase_distance");
  require_square(b, "phase_distance");
  if (a.rows() != b.rows()) {
    throw ValidationError("phase_distance: dimension mismatch");
  }
  // Coarse circular scan, then golden-section refinement of the best basins.
  constexpr int kGrid = 720;
  std::array<double, kGrid> f{};
  for (int i = 0; i < kGrid; ++i) {
    f[i] = spectral_norm_at(a, b, 2.0 * kPi * i / kGrid);
  }
  std::vector<int> minima;
  for (int i = 0; i < kGrid; ++i) {
    const double left = f[(i + kGrid - 1) % kGrid];
    const double right = f[(i + 1) % kGrid];
    if (f[i] <= left && f[i] <= right) minima.push_back(i);
  }
  std::sort(minima.begin(), minima.end(), [&](int i, int j) { return f[i] < f[j]; });
  double best = *std::min_element(f.begin(), f.end());
  const double h = 2.0 * kPi / kGrid;
  const int refine = std::min<int>(3, static_cast<int>(minima.size()));
  for (int k = 0; k < refine; ++k) {
    const double center = h * minima[k];
    best = std::min(best, golden_min([&](double t) { return spectral_norm_at(a, b, t); },
                                     center - h, center + h));
  }
  return best;
}

UnitaryEigensystem unitary_eigensystem(const cmat& m) {
  require_square(m, "unitary_eigensystem");
  if (!is_unitary(m, 1e-9)) {
    throw ValidationError("unitary_eigensystem: input is not unitary within 1e-9");
  }
  const Eigen::Index d = m.rows();
  const cmat h_re = (m + m.adjoint()) / 2.0;                 // cos of eigenphases
  const cmat h_im = (m - m.adjoint()) / cplx(0.0, 2.0);      // sin of eigenphases

  Eigen::SelfAdjointEigenSolver<cmat> es(h_re);
  cmat v = es.eigenvectors();
  const Eigen::VectorXd cos_vals = es.eigenvalues();

  // Within every (near-)degenerate cluster of h_re, diagonalise the projected
  // imaginary part so that m itself is diagonal in the final basis.
  Eigen::Index start = 0;
  while (start < d) {
    Eigen::Index stop = start + 1;
    while (stop < d && cos_vals(stop) - cos_vals(stop - 1) <= 1e-7) ++stop;
    if (stop - start > 1) {
      const cmat block = v.middleCols(start, stop - start);
      Eigen::SelfAdjointEigenSolver<cmat> sub(cmat(block.adjoint() * h_im * block));
      v.middleCols(start, stop - start) = block * sub.eigenvectors();
    }
    start = stop;
  }

  UnitaryEigensystem out;
  out.vectors = v;
  out.phases.resize(d);
  for (Eigen::Index j = 0; j < d; ++j) {
    const cplx lambda = v.col(j).dot(m * v.col(j));  // Rayleigh quotient, |lambda| = 1
    double theta = std::atan2(lambda.imag(), lambda.real());
    if (std::abs(lambda + 1.0) <= 1e-12) {
      theta = kPi;
      out.branch_warning = true;
    }
    out.phases(j) = theta;
  }
  return out;
}

PrincipalLog principal_log_unitary(const cmat& m) {
  const UnitaryEigensystem eig = unitary_eigensystem(m);
  const Eigen::Index d = m.rows();
  cmat lambda = cmat::Zero(d, d);
  for (Eigen::Index j = 0; j < d; ++j) lambda(j, j) = cplx(0.0, eig.phases(j));
  cmat log = eig.vectors * lambda * eig.vectors.adjoint();
  log = (log - log.adjoint().eval()) / 2.0;  // exact skew-Hermitian cleanup
  return PrincipalLog{std::move(log), eig.branch_warning};
}

int numeric_rank(const std::vector<cvec>& vectors, double tol) {
  if (vectors.empty()) return 0;
  const Eigen::Index len = vectors.front().size();
  cmat stacked(static_cast<Eigen::Index>(vectors.size()), len);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != len) {
      throw ValidationError("numeric_rank: vectors must all have the same length");
    }
    stacked.row(static_cast<Eigen::Index>(i)) = vectors[i].transpose();
  }
  const Eigen::VectorXd sigma = stacked.jacobiSvd().singularValues();
  if (sigma.size() == 0 || sigma(0) == 0.0) return 0;
  int rank = 0;
  for (Eigen::Index i = 0; i < sigma.size(); ++i) {
    if (sigma(i) > tol * sigma(0)) ++rank;
  }
  return rank;
}

cmat phase_fix(const cmat& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const cplx z = m(i, j);
      if (std::abs(z) > 1e-6) {
        return m * (std::conj(z) / std::abs(z));
      }
    }
  }
  return m;
}

std::vector<std::int64_t> phase_fixed_fingerprint(const cmat& m, double granularity) {
  const cmat fixed = phase_fix(m);
  std::vector<std::int64_t> key;
  key.reserve(static_cast<std::size_t>(2 * m.size()));
  for (Eigen::Index i = 0; i < fixed.rows(); ++i) {
    for (Eigen::Index j = 0; j < fixed.cols(); ++j) {
      key.push_back(std::llround(fixed(i, j).real() / granularity));
      key.push_back(std::llround(fixed(i, j).imag() / granularity));
    }
  }
  return key;
}

}  // namespace lopt
