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

#include "lopt/fock_lift.hpp"

#include "lopt/errors.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <numeric>

namespace lopt {

namespace {

constexpr int kPermanentCap = 12;
constexpr long kBasisCap = 10000;

long basis_size(int n, int m) {
  // C(n + m − 1, n), capped arithmetic is safe at desk scale.
  long num = 1;
  for (int k = 1; k <= n; ++k) {
    num = num * (m - 1 + k) / k;
    if (num > 100 * kBasisCap) return num;  // early out, already way over
  }
  return num;
}

void enumerate(int remaining, int modes_left, std::vector<int>& prefix,
               std::vector<FockState>& out) {
  if (modes_left == 1) {
    prefix.push_back(remaining);
    out.push_back(FockState{prefix});
    prefix.pop_back();
    return;
  }
  for (int k = remaining; k >= 0; --k) {  // descending lexicographic order
    prefix.push_back(k);
    enumerate(remaining - k, modes_left - 1, prefix, out);
    prefix.pop_back();
  }
}

double occupation_factorial(const FockState& s) {
  double f = 1.0;
  for (int v : s.occupations) {
    for (int k = 2; k <= v; ++k) f *= k;
  }
  return f;
}

}  // namespace

int FockState::photons() const {
  return std::accumulate(occupations.begin(), occupations.end(), 0);
}

std::vector<FockState> fock_basis(int n, int m) {
  if (n < 0 || m < 1) throw ValidationError("fock_basis: need n >= 0 and m >= 1");
  if (basis_size(n, m) > kBasisCap) {
    throw CapacityError("fock_basis: C(n+m-1, n) exceeds the 10^4 cap");
  }
  std::vector<FockState> out;
  std::vector<int> prefix;
  enumerate(n, m, prefix, out);
  return out;
}

cplx permanent(const cmat& m) {
  if (m.rows() != m.cols()) throw ValidationError("permanent: matrix must be square");
  const int n = static_cast<int>(m.rows());
  if (n > kPermanentCap) throw CapacityError("permanent: dimension cap is 12");
  if (n == 0) return 1.0;

  // Ryser with Gray-code subset iteration over columns:
  //   Per(A) = (−1)^n · sum over nonempty S of (−1)^|S| · prod_i sum_{j in S} a_ij
  cvec row_sums = cvec::Zero(n);
  cplx total = 0.0;
  std::uint32_t gray = 0;
  for (std::uint32_t k = 1; k < (1u << n); ++k) {
    const std::uint32_t next = k ^ (k >> 1);
    const std::uint32_t changed = next ^ gray;
    const int j = std::countr_zero(changed);
    if (next & changed) {
      row_sums += m.col(j);
    } else {
      row_sums -= m.col(j);
    }
    gray = next;
    cplx prod = 1.0;
    for (int i = 0; i < n; ++i) prod *= row_sums(i);
    total += (std::popcount(next) % 2 == 0) ? prod : -prod;
  }
  return (n % 2 == 0) ? total : -total;
}

cplx amplitude(const cmat& u, const FockState& s, const FockState& t) {
  const int m = static_cast<int>(u.rows());
  if (u.rows() != u.cols()) throw ValidationError("amplitude: unitary must be square");
  if (s.modes() != m || t.modes() != m) {
    throw ValidationError("amplitude: states must match the number of modes");
  }
  const int n = s.photons();
  if (t.photons() != n) {
    throw ValidationError("amplitude: photon numbers of input and output differ");
  }
  if (n > kPermanentCap) throw CapacityError("amplitude: photon number cap is 12");
  if (n == 0) return 1.0;

  cmat sub(n, n);
  int row = 0;
  for (int i = 0; i < m; ++i) {
    for (int rep = 0; rep < t.occupations[i]; ++rep, ++row) {
      int col = 0;
      for (int j = 0; j < m; ++j) {
        for (int cep = 0; cep < s.occupations[j]; ++cep, ++col) {
          sub(row, col) = u(i, j);
        }
      }
    }
  }
  return permanent(sub) / std::sqrt(occupation_factorial(s) * occupation_factorial(t));
}

LiftedUnitary lift(const cmat& u, int n) {
  if (u.rows() != u.cols() || u.rows() < 1) {
    throw ValidationError("lift: unitary must be square");
  }
  if (!is_unitary(u, 1e-8)) throw ValidationError("lift: input is not unitary");
  const int m = static_cast<int>(u.rows());

  LiftedUnitary out;
  out.photons = n;
  out.basis = fock_basis(n, m);
  const Eigen::Index dim = static_cast<Eigen::Index>(out.basis.size());
  out.matrix.resize(dim, dim);
  for (Eigen::Index col = 0; col < dim; ++col) {
    for (Eigen::Index row = 0; row < dim; ++row) {
      out.matrix(row, col) = amplitude(u, out.basis[col], out.basis[row]);
    }
  }
  return out;
}

}  // namespace lopt
