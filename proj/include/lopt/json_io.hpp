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

#include "lopt/fock_lift.hpp"
#include "lopt/gate_synth.hpp"
#include "lopt/optics_model.hpp"
#include "lopt/reck_compiler.hpp"
#include "lopt/universality.hpp"

#include <json.hpp>

#include <string>

namespace lopt {

using json = nlohmann::json;

// Complex numbers are always [re, im] pairs in every file format.
json complex_to_json(cplx z);
cplx complex_from_json(const json& j);

// Circuit schema:
// {"modes": m, "gates": [{"type": "bs", "alpha": [re,im], "beta": [re,im],
//  "modes": [i,j]} | {"type": "ps", "theta": t, "mode": i} |
//  {"type": "u2", "entries": [[..],[..]], "modes": [i,j]}]}
json circuit_to_json(const Circuit& c);
Circuit circuit_from_json(const json& j);

// Unitary file format: {"dim": d, "entries": [[[re,im],...],...]}
json unitary_to_json(const cmat& m);
cmat unitary_from_json(const json& j);
cmat load_unitary_file(const std::string& path);

json verdict_to_json(const Verdict& v);
json closure_to_json(const ClosureReport& r);
json elimination_to_json(const EliminationReport& r);
json decomposition_to_json(const Decomposition& d);
json synthesis_to_json(const SynthesisResult& r);
json lifted_to_json(const LiftedUnitary& l);

json word_to_json(const Word& w);
Word word_from_json(const json& j);

}  // namespace lopt
