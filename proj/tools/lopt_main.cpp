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

#include "lopt/errors.hpp"
#include "lopt/json_io.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

namespace {

// Exit codes: 0 success, 1 verdict-level failure, 2 input validation error,
// 3 capacity error.
constexpr int kOk = 0;
constexpr int kVerdictFailure = 1;
constexpr int kValidation = 2;
constexpr int kCapacity = 3;

lopt::cplx parse_complex(const std::string& s) {
  const auto comma = s.find(',');
  if (comma == std::string::npos) {
    throw lopt::ValidationError("complex literal must be \"re,im\": " + s);
  }
  try {
    std::size_t done_re = 0, done_im = 0;
    const std::string re_str = s.substr(0, comma);
    const std::string im_str = s.substr(comma + 1);
    const double re = std::stod(re_str, &done_re);
    const double im = std::stod(im_str, &done_im);
    if (done_re != re_str.size() || done_im != im_str.size()) {
      throw lopt::ValidationError("trailing characters in complex literal: " + s);
    }
    return {re, im};
  } catch (const std::logic_error&) {
    throw lopt::ValidationError("malformed complex literal: " + s);
  }
}

void print_json(const lopt::json& doc, int indent) {
  if (indent < 0) {
    std::cout << doc.dump() << "\n";
  } else {
    std::cout << doc.dump(indent) << "\n";
  }
}

Eigen::Matrix2cd load_two_mode(const std::string& path) {
  const lopt::cmat u = lopt::load_unitary_file(path);
  if (u.rows() != 2) {
    throw lopt::ValidationError("expected a 2x2 gate in " + path);
  }
  return u;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lopt — beamsplitter universality classifier and circuit toolkit"};
  app.require_subcommand(1);
  app.fallthrough();

  double tol = -1.0;  // per-command default when negative
  int indent = 2;
  std::uint64_t seed = 0;
  app.add_option("--tol", tol, "numeric tolerance override");
  app.add_option("--json-indent", indent, "stdout JSON indent (negative = compact)");
  app.add_option("--seed", seed, "reserved for randomized internals (none currently)");

  // classify
  auto* classify = app.add_subcommand("classify", "dichotomy verdict for a two-mode gate");
  std::string alpha_str, beta_str, gate_file;
  bool with_phases = false;
  classify->add_option("--alpha", alpha_str, "beamsplitter alpha as re,im");
  classify->add_option("--beta", beta_str, "beamsplitter beta as re,im");
  classify->add_option("--gate", gate_file, "2x2 unitary JSON file");
  classify->add_flag("--with-phases", with_phases, "free phaseshifters available");

  // forensics
  auto* forensics = app.add_subcommand("forensics", "full group-theoretic evidence");
  std::string f_alpha, f_beta;
  long cap = 3240;
  forensics->add_option("--alpha", f_alpha, "beamsplitter alpha as re,im")->required();
  forensics->add_option("--beta", f_beta, "beamsplitter beta as re,im")->required();
  forensics->add_option("--cap", cap, "closure element cap");

  // decompose
  auto* decompose_cmd = app.add_subcommand("decompose", "triangular beamsplitter mesh");
  std::string unitary_file;
  bool real_mode = false;
  decompose_cmd->add_option("--unitary", unitary_file, "unitary JSON file")->required();
  decompose_cmd->add_flag("--real", real_mode, "real/orthogonal decomposition");

  // synth
  auto* synth = app.add_subcommand("synth", "word search over one beamsplitter");
  std::string s_alpha, s_beta, target_file;
  double eps = 0.1;
  int budget = 16;
  synth->add_option("--alpha", s_alpha, "beamsplitter alpha as re,im")->required();
  synth->add_option("--beta", s_beta, "beamsplitter beta as re,im")->required();
  synth->add_option("--target", target_file, "3x3 target unitary JSON file")->required();
  synth->add_option("--eps", eps, "phase-distance goal");
  synth->add_option("--budget", budget, "maximum word length");

  // lift
  auto* lift_cmd = app.add_subcommand("lift", "n-photon action of a unitary");
  std::string lift_file;
  int photons = 1;
  lift_cmd->add_option("--unitary", lift_file, "unitary JSON file")->required();
  lift_cmd->add_option("--photons", photons, "photon number")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    std::cerr << e.what() << "\n";
    return kValidation;
  }

  try {
    if (classify->parsed()) {
      const bool inline_form = !alpha_str.empty() || !beta_str.empty();
      const bool file_form = !gate_file.empty();
      if (inline_form == file_form) {
        throw lopt::ValidationError("classify: give either --alpha/--beta or --gate");
      }
      const double t = tol < 0.0 ? 1e-10 : tol;
      lopt::Verdict verdict;
      if (inline_form) {
        if (alpha_str.empty() || beta_str.empty()) {
          throw lopt::ValidationError("classify: both --alpha and --beta are needed");
        }
        const lopt::Beamsplitter b =
            lopt::make_beamsplitter(parse_complex(alpha_str), parse_complex(beta_str));
        verdict = lopt::classify_beamsplitter(b, t);
      } else {
        verdict = lopt::classify_gate(load_two_mode(gate_file), with_phases, t);
      }
      print_json(lopt::verdict_to_json(verdict), indent);
      return kOk;
    }

    if (forensics->parsed()) {
      const double t = tol < 0.0 ? 1e-10 : tol;
      const lopt::Beamsplitter b =
          lopt::make_beamsplitter(parse_complex(f_alpha), parse_complex(f_beta));
      const lopt::Verdict verdict = lopt::verdict_cross_check(b, t, cap);
      lopt::json out = lopt::verdict_to_json(verdict);
      out["alpha"] = lopt::complex_to_json(b.alpha);
      out["beta"] = lopt::complex_to_json(b.beta);
      print_json(out, indent);
      return kOk;
    }

    if (decompose_cmd->parsed()) {
      const double t = tol < 0.0 ? lopt::kDefaultTol : tol;
      const lopt::cmat u = lopt::load_unitary_file(unitary_file);
      const lopt::Decomposition d =
          real_mode ? lopt::decompose_real(u, t) : lopt::decompose(u, t);
      print_json(lopt::decomposition_to_json(d), indent);
      return d.reconstruction_error <= 1e-9 ? kOk : kVerdictFailure;
    }

    if (synth->parsed()) {
      const lopt::Beamsplitter b =
          lopt::make_beamsplitter(parse_complex(s_alpha), parse_complex(s_beta));
      const lopt::cmat target = lopt::load_unitary_file(target_file);
      const lopt::SynthesisResult r = lopt::synthesize(b, target, eps, budget);
      print_json(lopt::synthesis_to_json(r), indent);
      return r.converged ? kOk : kVerdictFailure;
    }

    if (lift_cmd->parsed()) {
      const lopt::cmat u = lopt::load_unitary_file(lift_file);
      const lopt::LiftedUnitary l = lopt::lift(u, photons);
      print_json(lopt::lifted_to_json(l), indent);
      return kOk;
    }
  } catch (const lopt::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const lopt::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCapacity;
  } catch (const lopt::InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kVerdictFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerdictFailure;
  }
  return kOk;
}
