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

#include "lopt/json_io.hpp"

#include "lopt/errors.hpp"

#include <fstream>

namespace lopt {

json complex_to_json(cplx z) {
  return json::array({z.real(), z.imag()});
}

cplx complex_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw ValidationError("complex values must be [re, im] pairs");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

json circuit_to_json(const Circuit& c) {
  json gates = json::array();
  for (const PlacedGate& g : c.gates) {
    json entry;
    if (const auto* bs = std::get_if<Beamsplitter>(&g.gate)) {
      entry["type"] = "bs";
      entry["alpha"] = complex_to_json(bs->alpha);
      entry["beta"] = complex_to_json(bs->beta);
      entry["modes"] = json::array({g.mode_a, g.mode_b});
    } else if (const auto* ps = std::get_if<Phaseshifter>(&g.gate)) {
      entry["type"] = "ps";
      entry["theta"] = ps->theta;
      entry["mode"] = g.mode_a;
    } else {
      const auto& u2 = std::get<TwoModeGate>(g.gate);
      entry["type"] = "u2";
      entry["entries"] = json::array(
          {json::array({complex_to_json(u2.matrix(0, 0)), complex_to_json(u2.matrix(0, 1))}),
           json::array({complex_to_json(u2.matrix(1, 0)), complex_to_json(u2.matrix(1, 1))})});
      entry["modes"] = json::array({g.mode_a, g.mode_b});
    }
    gates.push_back(std::move(entry));
  }
  return json{{"modes", c.modes}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const json& j) {
  if (!j.is_object() || !j.contains("modes") || !j.contains("gates")) {
    throw ValidationError("circuit JSON needs \"modes\" and \"gates\"");
  }
  Circuit c;
  c.modes = j.at("modes").get<int>();
  for (const json& entry : j.at("gates")) {
    PlacedGate g;
    const std::string type = entry.at("type").get<std::string>();
    if (type == "bs") {
      g.gate = make_beamsplitter(complex_from_json(entry.at("alpha")),
                                 complex_from_json(entry.at("beta")));
      g.mode_a = entry.at("modes").at(0).get<int>();
      g.mode_b = entry.at("modes").at(1).get<int>();
    } else if (type == "ps") {
      g.gate = Phaseshifter{entry.at("theta").get<double>()};
      g.mode_a = entry.at("mode").get<int>();
    } else if (type == "u2") {
      TwoModeGate u2;
      const json& rows = entry.at("entries");
      if (!rows.is_array() || rows.size() != 2) {
        throw ValidationError("u2 gate entries must be a 2x2 array");
      }
      for (int r = 0; r < 2; ++r) {
        for (int col = 0; col < 2; ++col) {
          u2.matrix(r, col) = complex_from_json(rows.at(r).at(col));
        }
      }
      g.gate = u2;
      g.mode_a = entry.at("modes").at(0).get<int>();
      g.mode_b = entry.at("modes").at(1).get<int>();
    } else {
      throw ValidationError("unknown gate type: " + type);
    }
    c.gates.push_back(std::move(g));
  }
  return c;
}

json unitary_to_json(const cmat& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"entries", std::move(rows)}};
}

cmat unitary_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries")) {
    throw ValidationError("unitary JSON needs \"dim\" and \"entries\"");
  }
  const int d = j.at("dim").get<int>();
  if (d < 1) throw ValidationError("unitary dim must be positive");
  const json& rows = j.at("entries");
  if (!rows.is_array() || static_cast<int>(rows.size()) != d) {
    throw ValidationError("unitary entries must have dim rows");
  }
  cmat m(d, d);
  for (int i = 0; i < d; ++i) {
    if (static_cast<int>(rows.at(i).size()) != d) {
      throw ValidationError("unitary entries must have dim columns");
    }
    for (int k = 0; k < d; ++k) m(i, k) = complex_from_json(rows.at(i).at(k));
  }
  if (!entries_finite(m)) throw ValidationError("unitary entries must be finite");
  return m;
}

cmat load_unitary_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ValidationError("malformed JSON in " + path + ": " + e.what());
  }
  return unitary_from_json(j);
}

json closure_to_json(const ClosureReport& r) {
  return json{
      {"outcome", r.outcome == ClosureReport::Outcome::Finite ? "Finite" : "CapExceeded"},
      {"order", r.order},
      {"elements_found", r.elements_found},
      {"max_word_length_reached", r.max_word_length_reached}};
}

namespace {

json dihedral_to_json(const DihedralSection& d) {
  json pairs = json::array();
  for (const PairProductTrace& p : d.pair_product_traces) {
    pairs.push_back(json{{"generators", json::array({p.i + 1, p.j + 1})},
                         {"value", complex_to_json(p.value)},
                         {"nonzero", p.nonzero}});
  }
  return json{{"trace_norms", d.trace_norms},
              {"traces_nonzero", d.traces_nonzero},
              {"unit_norm_traces", d.unit_norm},
              {"pair_product_traces", std::move(pairs)},
              {"excluded", d.excluded}};
}

}  // namespace

json elimination_to_json(const EliminationReport& r) {
  json out = json::object();
  if (!r.groups.empty()) {
    json groups = json::object();
    for (const GroupElimination& g : r.groups) {
      groups[g.group_name] = json{
          {"verdict", g.excluded ? "excluded" : "not-excluded"},
          {"trace_distances", g.trace_distances},
          {"nearest_characters",
           json::array({complex_to_json(g.nearest_characters[0]),
                        complex_to_json(g.nearest_characters[1]),
                        complex_to_json(g.nearest_characters[2])})},
          {"failing_trace", g.failing_trace + 1},
          {"failing_distance", g.failing_distance}};
    }
    out["groups"] = std::move(groups);
  }
  if (r.dihedral) out["dihedral"] = dihedral_to_json(*r.dihedral);
  return out;
}

json verdict_to_json(const Verdict& v) {
  json out{{"outcome", to_string(v.outcome)}, {"rationale", v.rationale}};
  if (v.evidence) {
    const Evidence& e = *v.evidence;
    json ev{{"commutant_dimension", e.commutant_dimension},
            {"closure", closure_to_json(e.closure)},
            {"lie_closure", json{{"dimension", e.lie_closure.dimension},
                                 {"branch_warning", e.lie_closure.branch_warning}}},
            {"complex_witness", e.complex_witness},
            {"traces", json::array({complex_to_json(e.trace_values[0]),
                                    complex_to_json(e.trace_values[1]),
                                    complex_to_json(e.trace_values[2])})}};
    ev["character_elimination"] =
        e.characters ? elimination_to_json(*e.characters) : json{{"skipped", "trivial"}};
    ev["dihedral_elimination"] =
        e.dihedral ? elimination_to_json(*e.dihedral) : json{{"skipped", "trivial"}};
    out["evidence"] = std::move(ev);
  }
  return out;
}

json decomposition_to_json(const Decomposition& d) {
  json out = circuit_to_json(d.circuit);
  out["residual_phases"] = d.residual_phases;
  out["reconstruction_error"] = d.reconstruction_error;
  return out;
}

json word_to_json(const Word& w) {
  json out = json::array();
  for (const WordLetter& l : w) {
    out.push_back(json{{"placement", to_string(l.placement)}, {"adjoint", l.adjoint}});
  }
  return out;
}

Word word_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("word JSON must be an array");
  Word w;
  for (const json& entry : j) {
    w.push_back(WordLetter{placement_from_string(entry.at("placement").get<std::string>()),
                           entry.at("adjoint").get<bool>()});
  }
  return w;
}

json synthesis_to_json(const SynthesisResult& r) {
  return json{{"word", word_to_json(r.word)},
              {"achieved_error", r.achieved_error},
              {"nodes_explored", r.nodes_explored},
              {"budget", r.budget},
              {"converged", r.converged}};
}

json lifted_to_json(const LiftedUnitary& l) {
  json basis = json::array();
  for (const FockState& s : l.basis) basis.push_back(s.occupations);
  json rows = json::array();
  for (Eigen::Index i = 0; i < l.matrix.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < l.matrix.cols(); ++j) {
      row.push_back(complex_to_json(l.matrix(i, j)));
    }
    rows.push_back(std::move(row));
  }
  return json{{"n", l.photons}, {"basis", std::move(basis)}, {"matrix", std::move(rows)}};
}

}  // namespace lopt
