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

#include "lopt/gate_synth.hpp"

#include "lopt/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <unordered_set>

namespace lopt {

namespace {

constexpr double kFineGranularity = 1e-11;
constexpr double kBoundaryMargin = 1e-13;
constexpr long kLevelNodeCap = 2'000'000;

using Key = std::vector<std::int64_t>;

struct KeyHash {
  std::size_t operator()(const Key& key) const {
    std::size_t h = 1469598103934665603ull;
    for (std::int64_t v : key) {
      h ^= static_cast<std::size_t>(v);
      h *= 1099511628211ull;
    }
    return h;
  }
};

Eigen::Matrix3cd canon3(const Eigen::Matrix3cd& m) {
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const cplx z = m(i, j);
      if (std::abs(z) > 1e-6) return m * (std::conj(z) / std::abs(z));
    }
  }
  return m;
}

Key fine_key(const Eigen::Matrix3cd& canon) {
  Key key(18);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      key[2 * (3 * i + j)] = std::llround(canon(i, j).real() / kFineGranularity);
      key[2 * (3 * i + j) + 1] = std::llround(canon(i, j).imag() / kFineGranularity);
    }
  }
  return key;
}

// All fine keys whose cell could hold a value within kBoundaryMargin of the
// given matrix: the base key plus neighbor cells along near-boundary
// coordinates (capped to keep the probe cheap).
std::vector<Key> fine_probe_keys(const Eigen::Matrix3cd& canon) {
  const Key base = fine_key(canon);
  std::vector<int> boundary;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const std::array<double, 2> parts = {canon(i, j).real(), canon(i, j).imag()};
      for (int k = 0; k < 2; ++k) {
        const int idx = 2 * (3 * i + j) + k;
        const double offset = parts[k] - static_cast<double>(base[idx]) * kFineGranularity;
        if (kFineGranularity / 2.0 - std::abs(offset) <= kBoundaryMargin) {
          boundary.push_back(idx);
        }
      }
    }
  }
  if (boundary.size() > 4) boundary.resize(4);
  std::vector<Key> keys = {base};
  for (int idx : boundary) {
    const std::size_t count = keys.size();
    for (std::size_t i = 0; i < count; ++i) {
      Key up = keys[i];
      up[idx] += 1;
      keys.push_back(std::move(up));
      Key down = keys[i];
      down[idx] -= 1;
      keys.push_back(std::move(down));
    }
  }
  return keys;
}

Key coarse_key(const Eigen::Matrix3cd& canon, double granularity) {
  Key key(6);
  for (int j = 0; j < 3; ++j) {
    key[2 * j] = std::llround(canon(0, j).real() / granularity);
    key[2 * j + 1] = std::llround(canon(0, j).imag() / granularity);
  }
  return key;
}

double frob_phase_distance3(const Eigen::Matrix3cd& a, const Eigen::Matrix3cd& b) {
  const double t = std::abs((b.adjoint() * a).trace());
  return std::sqrt(std::max(0.0, 6.0 - 2.0 * t));
}

struct Level {
  std::vector<Eigen::Matrix3cd> mats;
  std::vector<int> parent;
  std::vector<std::int8_t> letter;
  std::unordered_map<Key, std::vector<int>, KeyHash> fine;
  std::unordered_map<Key, std::vector<int>, KeyHash> coarse;
};

}  // namespace

std::string to_string(Placement p) {
  switch (p) {
    case Placement::B12: return "b12";
    case Placement::B13: return "b13";
    case Placement::B21: return "b21";
    case Placement::B23: return "b23";
    case Placement::B31: return "b31";
    case Placement::B32: return "b32";
  }
  return "?";
}

Placement placement_from_string(const std::string& label) {
  if (label == "b12") return Placement::B12;
  if (label == "b13") return Placement::B13;
  if (label == "b21") return Placement::B21;
  if (label == "b23") return Placement::B23;
  if (label == "b31") return Placement::B31;
  if (label == "b32") return Placement::B32;
  throw ValidationError("unknown placement label: " + label);
}

Eigen::Matrix3cd placement_matrix(const Beamsplitter& b, const WordLetter& letter) {
  static constexpr std::array<std::pair<int, int>, 6> kModes = {
      {{0, 1}, {0, 2}, {1, 0}, {1, 2}, {2, 0}, {2, 1}}};
  const auto [i, j] = kModes[static_cast<int>(letter.placement)];
  Eigen::Matrix3cd m = embed(b.matrix(), i, j, 3);
  return letter.adjoint ? Eigen::Matrix3cd(m.adjoint()) : m;
}

Eigen::Matrix3cd apply_word(const Beamsplitter& b, const Word& word) {
  Eigen::Matrix3cd u = Eigen::Matrix3cd::Identity();
  for (const WordLetter& letter : word) {
    u = placement_matrix(b, letter) * u;
  }
  return u;
}

SynthesisResult synthesize(const Beamsplitter& b, const cmat& target, double epsilon,
                           int budget) {
  if (!is_nontrivial(b, 1e-10)) {
    throw ValidationError("synthesize: beamsplitter must be nontrivial");
  }
  if (target.rows() != 3 || target.cols() != 3 || !is_unitary(target, 1e-9)) {
    throw ValidationError("synthesize: target must be a 3x3 unitary");
  }
  if (budget < 0 || epsilon < 0.0) {
    throw ValidationError("synthesize: budget and epsilon must be non-negative");
  }
  const Eigen::Matrix3cd t3 = target;
  const bool real_b =
      std::abs(b.alpha.imag()) <= 1e-9 && std::abs(b.beta.imag()) <= 1e-9;
  if (real_b) {
    // Words of a real beamsplitter are orthogonal; a reachable target must be
    // a global phase times a real matrix, i.e. T·Tᵀ proportional to I.
    const Eigen::Matrix3cd ttt = t3 * t3.transpose();
    const cplx c = ttt.trace() / 3.0;
    if ((ttt - c * Eigen::Matrix3cd::Identity()).cwiseAbs().maxCoeff() > 1e-8) {
      throw ValidationError(
          "synthesize: unreachable target — a real beamsplitter generates only "
          "orthogonal transformations");
    }
  }

  std::array<Eigen::Matrix3cd, 12> letters;
  for (int id = 0; id < 12; ++id) {
    letters[id] = placement_matrix(
        b, WordLetter{static_cast<Placement>(id / 2), (id % 2) != 0});
  }
  const double coarse_granularity = std::max(epsilon / 4.0, 1e-6);

  std::vector<Level> levels(1);
  levels[0].mats.push_back(Eigen::Matrix3cd::Identity());
  levels[0].parent.push_back(-1);
  levels[0].letter.push_back(-1);
  {
    const Eigen::Matrix3cd canon = canon3(Eigen::Matrix3cd::Identity());
    levels[0].fine[fine_key(canon)].push_back(0);
    levels[0].coarse[coarse_key(canon, coarse_granularity)].push_back(0);
  }
  std::unordered_set<Key, KeyHash> global_seen;
  global_seen.insert(fine_key(canon3(Eigen::Matrix3cd::Identity())));

  SynthesisResult result;
  result.budget = budget;
  result.nodes_explored = 1;

  const auto word_of = [&](int level, int index) {
    Word w(level);
    for (int l = level; l > 0; --l) {
      const std::int8_t id = levels[l].letter[index];
      w[l - 1] = WordLetter{static_cast<Placement>(id / 2), (id % 2) != 0};
      index = levels[l].parent[index];
    }
    return w;
  };

  // Identity word first.
  result.word = {};
  result.achieved_error = phase_distance(Eigen::MatrixXcd::Identity(3, 3), target);
  if (result.achieved_error <= epsilon) {
    result.converged = true;
    return result;
  }

  const auto ensure_level = [&](int l) -> bool {
    while (static_cast<int>(levels.size()) <= l) {
      const int cur = static_cast<int>(levels.size());
      const Level& prev = levels[cur - 1];
      Level next;
      for (int p = 0; p < static_cast<int>(prev.mats.size()); ++p) {
        for (int id = 0; id < 12; ++id) {
          Eigen::Matrix3cd child = letters[id] * prev.mats[p];
          const Eigen::Matrix3cd canon = canon3(child);
          Key key = fine_key(canon);
          if (!global_seen.insert(key).second) continue;
          if (static_cast<long>(next.mats.size()) >= kLevelNodeCap) return false;
          const int idx = static_cast<int>(next.mats.size());
          next.mats.push_back(child);
          next.parent.push_back(p);
          next.letter.push_back(static_cast<std::int8_t>(id));
          next.fine[std::move(key)].push_back(idx);
          next.coarse[coarse_key(canon, coarse_granularity)].push_back(idx);
        }
      }
      result.nodes_explored += static_cast<long>(next.mats.size());
      levels.push_back(std::move(next));
    }
    return true;
  };

  struct Success {
    Word word;
    double error;
  };
  bool best_set = false;
  double best_fd = std::numeric_limits<double>::infinity();
  Word best_word;

  for (int total = 1; total <= budget; ++total) {
    const int a = (total + 1) / 2;
    const int bl = total - a;
    if (!ensure_level(a) || !ensure_level(bl)) break;  // node cap reached

    std::vector<Success> successes;
    const Level& left = levels[a];
    const Level& right = levels[bl];
    for (int v = 0; v < static_cast<int>(right.mats.size()); ++v) {
      const Eigen::Matrix3cd needed = right.mats[v].adjoint() * t3;
      const Eigen::Matrix3cd canon = canon3(needed);

      std::vector<int> candidates;
      for (const Key& key : fine_probe_keys(canon)) {
        if (auto it = left.fine.find(key); it != left.fine.end()) {
          candidates.insert(candidates.end(), it->second.begin(), it->second.end());
        }
      }
      if (auto it = left.coarse.find(coarse_key(canon, coarse_granularity));
          it != left.coarse.end()) {
        candidates.insert(candidates.end(), it->second.begin(), it->second.end());
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()),
                       candidates.end());

      for (int u : candidates) {
        const Eigen::Matrix3cd product = right.mats[v] * left.mats[u];
        const double fd = frob_phase_distance3(product, t3);
        if (fd < best_fd) {
          best_fd = fd;
          best_word = word_of(a, u);
          const Word tail = word_of(bl, v);
          best_word.insert(best_word.end(), tail.begin(), tail.end());
          best_set = true;
        }
        // operator norm >= Frobenius/sqrt(3); beyond that the exact check
        // cannot succeed.
        if (fd <= epsilon * std::sqrt(3.0)) {
          const double exact = phase_distance(product, t3);
          if (exact <= epsilon) {
            Word w = word_of(a, u);
            const Word tail = word_of(bl, v);
            w.insert(w.end(), tail.begin(), tail.end());
            successes.push_back(Success{std::move(w), exact});
          }
        }
      }
    }
    if (!successes.empty()) {
      const auto lex_min = std::min_element(
          successes.begin(), successes.end(),
          [](const Success& x, const Success& y) { return x.word < y.word; });
      result.word = lex_min->word;
      result.converged = true;
      result.achieved_error = phase_distance(apply_word(b, result.word), t3);
      return result;
    }
  }

  if (best_set) {
    const double exact = phase_distance(apply_word(b, best_word), t3);
    if (exact < result.achieved_error) {
      result.word = best_word;
      result.achieved_error = exact;
    }
  }
  result.converged = result.achieved_error <= epsilon;
  return result;
}

}  // namespace lopt
