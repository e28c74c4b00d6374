// Copyright 2026 The gridcube Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gridcube/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "gridcube/errors.hpp"

namespace gridcube::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw InvalidInputError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

const Json& array_field(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) throw InvalidInputError(std::string("field \"") + name + "\" must be an array");
  return a;
}

int int_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InvalidInputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::size_t index_from_json(const Json& j, const char* what) {
  const int v = int_from_json(j, what);
  if (v < 1) throw InvalidInputError(std::string(what) + " must be at least 1");
  return static_cast<std::size_t>(v - 1);
}

Json sizes_to_json(const BlockType& t) { return Json(t.sizes()); }

BlockType sizes_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInputError("block sizes must be an array");
  std::vector<int> sizes;
  for (const auto& s : j) sizes.push_back(int_from_json(s, "block size"));
  return BlockType(sizes);
}

Json tagged(const char* kind) {
  Json j = Json::object();
  j["kind"] = kind;
  return j;
}

Json owner_to_json(Owner o) { return o == Owner::kMax ? "max" : "min"; }

Owner owner_from_json(const Json& j) {
  if (j == "max") return Owner::kMax;
  if (j == "min") return Owner::kMin;
  throw InvalidInputError("owner must be \"max\" or \"min\"");
}

}  // namespace

Json rational_to_json(const Rational& x) { return to_string(x); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return parse_rational(j.dump());
  throw InvalidInputError("expected a rational string or an integer, got " + j.dump());
}

Json vector_to_json(const Vector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(rational_to_json(x));
  return a;
}

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInputError("expected an array of rationals");
  Vector v;
  for (const auto& x : j) v.push_back(rational_from_json(x));
  return v;
}

Json matrix_to_json(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_to_json(m.row_vector(r)));
  return a;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInputError("expected a matrix as an array of rows");
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  return Matrix::from_rows(rows);
}

Json block_matrix_to_json(const BlockMatrix& m) {
  Json blocks = Json::array();
  for (std::size_t j = 0; j < m.n(); ++j) {
    Json rows = Json::array();
    for (int i = 0; i < m.type().size(j); ++i) {
      auto row = m.row(j, i);
      rows.push_back(vector_to_json(Vector(row.begin(), row.end())));
    }
    blocks.push_back(std::move(rows));
  }
  Json out = Json::object();
  out["blocks"] = std::move(blocks);
  return out;
}

BlockMatrix block_matrix_from_json(const Json& j) {
  const Json& blocks = array_field(j, "blocks");
  std::vector<int> sizes;
  std::vector<Vector> rows;
  for (const auto& b : blocks) {
    if (!b.is_array() || b.empty()) throw InvalidInputError("every block needs at least one row");
    sizes.push_back(static_cast<int>(b.size()));
    for (const auto& r : b) rows.push_back(vector_from_json(r));
  }
  if (sizes.empty()) throw InvalidInputError("block matrix without blocks");
  Matrix e = Matrix::from_rows(rows);
  if (e.cols() != sizes.size())
    throw InvalidInputError("block matrix rows need one entry per block (" + std::to_string(sizes.size()) + ")");
  return BlockMatrix(BlockType(sizes), std::move(e));
}

Json glcp_to_json(const GLCPInstance& inst) {
  Json j = tagged("glcp");
  j["M"] = block_matrix_to_json(inst.m);
  j["q"] = vector_to_json(inst.q);
  return j;
}

GLCPInstance glcp_from_json(const Json& j) {
  GLCPInstance inst{block_matrix_from_json(field(j, "M")), vector_from_json(field(j, "q"))};
  inst.validate();
  return inst;
}

Json solution_to_json(const GLCPSolution& sol) {
  Json j = tagged("solution");
  j["w"] = vector_to_json(sol.w);
  j["z"] = vector_to_json(sol.z);
  return j;
}

GLCPSolution solution_from_json(const Json& j) {
  return GLCPSolution{vector_from_json(field(j, "w")), vector_from_json(field(j, "z"))};
}

Json grid_lp_to_json(const GridLP& lp) {
  Json j = tagged("gridlp");
  j["M"] = block_matrix_to_json(lp.m);
  j["p"] = vector_to_json(lp.p);
  j["q"] = vector_to_json(lp.q);
  return j;
}

GridLP grid_lp_from_json(const Json& j) {
  GridLP lp{block_matrix_from_json(field(j, "M")), vector_from_json(field(j, "p")), vector_from_json(field(j, "q"))};
  lp.validate();
  return lp;
}

Json mdp_to_json(const DiscountedMDP& mdp) {
  Json j = tagged("mdp");
  j["gamma"] = rational_to_json(mdp.gamma);
  Json states = Json::array();
  const BlockType& a = mdp.actions();
  for (std::size_t s = 0; s < a.blocks(); ++s) {
    Json actions = Json::array();
    for (int i = 0; i < a.size(s); ++i) {
      Json act = Json::object();
      act["reward"] = rational_to_json(mdp.r[a.flat(s, i)]);
      auto row = mdp.p.row(s, i);
      act["probs"] = vector_to_json(Vector(row.begin(), row.end()));
      actions.push_back(std::move(act));
    }
    Json st = Json::object();
    st["actions"] = std::move(actions);
    states.push_back(std::move(st));
  }
  j["states"] = std::move(states);
  return j;
}

DiscountedMDP mdp_from_json(const Json& j) {
  DiscountedMDP mdp;
  mdp.gamma = rational_from_json(field(j, "gamma"));
  std::vector<int> sizes;
  std::vector<Vector> rows;
  for (const auto& st : array_field(j, "states")) {
    const Json& actions = array_field(st, "actions");
    if (actions.empty()) throw InvalidInputError("every state needs at least one action");
    sizes.push_back(static_cast<int>(actions.size()));
    for (const auto& act : actions) {
      mdp.r.push_back(rational_from_json(field(act, "reward")));
      rows.push_back(vector_from_json(field(act, "probs")));
    }
  }
  if (sizes.empty()) throw InvalidInputError("MDP without states");
  mdp.p = BlockMatrix(BlockType(sizes), Matrix::from_rows(rows));
  mdp.validate();
  return mdp;
}

Json game_to_json(const StochasticGame& g) {
  Json j = mdp_to_json(g.mdp);
  j["kind"] = "game";
  Json owners = Json::array();
  for (Owner o : g.owner) owners.push_back(owner_to_json(o));
  j["owner"] = std::move(owners);
  return j;
}

StochasticGame game_from_json(const Json& j) {
  StochasticGame g;
  g.mdp = mdp_from_json(j);
  for (const auto& o : array_field(j, "owner")) g.owner.push_back(owner_from_json(o));
  g.validate();
  return g;
}

Json uso_to_json(const GridUSO& o) {
  Json j = tagged("uso");
  std::vector<int> b;
  for (int s : o.type.sizes()) b.push_back(s - 1);
  j["b"] = b;
  Json out = Json::object();
  for (std::uint64_t rank = 0; rank < o.out.size(); ++rank) {
    Json moves = Json::array();
    for (const Move& m : o.out[rank]) moves.push_back(Json::array({m.block + 1, m.row + 1}));
    out[selector_key(selector_unrank(o.type, rank))] = std::move(moves);
  }
  j["out"] = std::move(out);
  return j;
}

GridUSO uso_from_json(const Json& j) {
  std::vector<int> sizes;
  for (const auto& s : array_field(j, "b")) sizes.push_back(int_from_json(s, "b") + 1);
  GridUSO o;
  o.type = BlockType(sizes);
  o.out.assign(o.type.vertex_count(), {});
  std::vector<char> seen(o.out.size(), 0);
  const Json& out = field(j, "out");
  if (!out.is_object()) throw InvalidInputError("\"out\" must map vertex keys to move lists");
  for (const auto& [key, moves] : out.items()) {
    const Selector v = parse_selector_key(key);
    check_selector(o.type, v);
    const std::uint64_t rank = selector_rank(o.type, v);
    if (seen[rank]) throw InvalidInputError("vertex " + key + " listed twice");
    seen[rank] = 1;
    for (const auto& mv : moves) {
      if (!mv.is_array() || mv.size() != 2) throw InvalidInputError("a move is a [block, row] pair");
      Move m{index_from_json(mv[0], "move block"), static_cast<int>(index_from_json(mv[1], "move row"))};
      if (m.block >= o.type.blocks() || m.row >= o.type.size(m.block) || m.row == v[m.block])
        throw InvalidInputError("invalid move at vertex " + key);
      o.out[rank].push_back(m);
    }
    std::sort(o.out[rank].begin(), o.out[rank].end());
  }
  for (std::uint64_t rank = 0; rank < seen.size(); ++rank)
    if (!seen[rank]) throw InvalidInputError("vertex " + selector_key(selector_unrank(o.type, rank)) + " is missing");
  return o;
}

Json trace_to_json(const ReductionTrace& t) {
  Json steps = Json::array();
  for (const TraceStep& s : t.steps) {
    Json j = Json::object();
    j["step"] = step_kind_name(s.kind);
    j["input_type"] = sizes_to_json(s.input_type);
    j["output_type"] = sizes_to_json(s.output_type);
    switch (s.kind) {
      case StepKind::kHiddenKToK:
        j["f"] = vector_to_json(s.f);
        break;
      case StepKind::kKToHiddenK:
        j["C"] = selector_key(s.c);
        j["MC_inverse"] = matrix_to_json(s.mc_inverse);
        j["qC"] = vector_to_json(s.qc);
        break;
      case StepKind::kPSplit:
      case StepKind::kKSplit:
        j["block"] = s.block + 1;
        j["row"] = s.row + 1;
        break;
      case StepKind::kRescale:
        j["L"] = vector_to_json(s.scaling.left);
        j["H"] = vector_to_json(s.scaling.right);
        break;
    }
    steps.push_back(std::move(j));
  }
  return steps;
}

ReductionTrace trace_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInputError("trace steps must be an array");
  ReductionTrace t;
  for (const auto& sj : j) {
    TraceStep s;
    s.kind = parse_step_kind(field(sj, "step").get<std::string>());
    s.input_type = sizes_from_json(field(sj, "input_type"));
    s.output_type = sizes_from_json(field(sj, "output_type"));
    switch (s.kind) {
      case StepKind::kHiddenKToK:
        s.f = vector_from_json(field(sj, "f"));
        break;
      case StepKind::kKToHiddenK:
        s.c = parse_selector_key(field(sj, "C").get<std::string>());
        s.mc_inverse = matrix_from_json(field(sj, "MC_inverse"));
        s.qc = vector_from_json(field(sj, "qC"));
        break;
      case StepKind::kPSplit:
      case StepKind::kKSplit:
        s.block = index_from_json(field(sj, "block"), "block");
        s.row = static_cast<int>(index_from_json(field(sj, "row"), "row"));
        break;
      case StepKind::kRescale:
        s.scaling.left = vector_from_json(field(sj, "L"));
        s.scaling.right = vector_from_json(field(sj, "H"));
        break;
    }
    t.steps.push_back(std::move(s));
  }
  return t;
}

Json split_records_to_json(const std::vector<SplitRecord>& records) {
  Json a = Json::array();
  for (const auto& r : records) {
    Json j = Json::object();
    j["state"] = r.state + 1;
    j["new_state"] = r.new_state + 1;
    j["owner"] = owner_to_json(r.owner);
    j["gamma"] = rational_to_json(r.gamma);
    j["delta"] = rational_to_json(r.delta);
    a.push_back(std::move(j));
  }
  return a;
}

std::vector<SplitRecord> split_records_from_json(const Json& j) {
  if (!j.is_array()) throw InvalidInputError("split records must be an array");
  std::vector<SplitRecord> out;
  for (const auto& rj : j) {
    SplitRecord r;
    r.state = index_from_json(field(rj, "state"), "state");
    r.new_state = index_from_json(field(rj, "new_state"), "new_state");
    r.owner = owner_from_json(field(rj, "owner"));
    r.gamma = rational_from_json(field(rj, "gamma"));
    r.delta = rational_from_json(field(rj, "delta"));
    out.push_back(r);
  }
  return out;
}

std::string kind_of(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) throw InvalidInputError("\"kind\" must be a string");
  return k.get<std::string>();
}

void expect_kind(const Json& j, const std::string& kind) {
  const std::string k = kind_of(j);
  if (k != kind) throw InvalidInputError("expected a " + kind + " file, got " + k);
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InvalidInputError(std::string("malformed JSON: ") + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

void write_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw InvalidInputError("cannot write " + path);
  out << j.dump(2) << "\n";
}

}  // namespace gridcube::io
