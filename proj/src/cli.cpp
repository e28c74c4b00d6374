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

#include "gridcube/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gridcube/core.hpp"
#include "gridcube/errors.hpp"
#include "gridcube/games.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/io.hpp"
#include "gridcube/lpgrid.hpp"
#include "gridcube/mdp.hpp"
#include "gridcube/reduce.hpp"
#include "gridcube/uso.hpp"
#include "gridcube/witness.hpp"

namespace gridcube::cli {

namespace {

using io::Json;

/// Raised when a computed answer fails its independent check.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(std::ostream& out, const Json& j, const std::string& path) {
  if (path.empty()) {
    out << j.dump(2) << "\n";
  } else {
    io::write_file(path, j);
  }
}

std::string type_string(const BlockType& t) {
  std::string s = "(";
  for (std::size_t j = 0; j < t.blocks(); ++j) {
    if (j > 0) s += ",";
    s += std::to_string(t.size(j));
  }
  return s + ")";
}

std::string matrix_string(const Matrix& m) {
  std::string s = "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r > 0) s += ",";
    s += to_string(m.row(r));
  }
  return s + "]";
}

Json policy_to_json(const Policy& pi) {
  Json a = Json::array();
  for (int x : pi) a.push_back(x + 1);
  return a;
}

Policy policy_from_argmax(const std::vector<std::vector<int>>& sets) {
  Policy pi;
  for (const auto& s : sets) pi.push_back(s.empty() ? 0 : s.front());
  return pi;
}

BlockMatrix matrix_of(const Json& j) {
  const std::string kind = io::kind_of(j);
  if (kind != "matrix" && kind != "glcp" && kind != "gridlp")
    throw InvalidInputError("expected a matrix, glcp or gridlp file, got " + kind);
  if (!j.contains("M")) throw InvalidInputError("missing field \"M\"");
  return io::block_matrix_from_json(j.at("M"));
}

Matrix witness_of(const BlockMatrix& m, const std::string& witness_path) {
  if (!witness_path.empty()) {
    const Json w = io::read_file(witness_path);
    io::expect_kind(w, "witness");
    if (!w.contains("X")) throw InvalidInputError("witness file without \"X\"");
    return io::matrix_from_json(w.at("X"));
  }
  auto x = is_hidden_k(m);
  if (!x) throw PreconditionError("matrix is not hidden K");
  return *x;
}

// ---- classify ---------------------------------------------------------------

int cmd_classify(const std::string& path, std::ostream& out) {
  const BlockMatrix m = matrix_of(io::read_file(path));
  out << "type: " << type_string(m.type()) << "\n";
  if (auto v = find_nonpositive_minor(m)) {
    std::string where;
    for (std::size_t j = 0; j < v->picks.size(); ++j) {
      if (v->picks[j] < 0) continue;
      if (!where.empty()) where += "|";
      where += std::to_string(j + 1) + "," + std::to_string(v->picks[j] + 1);
    }
    out << "P: no (minor " << to_string(v->minor) << " at " << where << ")\n";
  } else {
    out << "P: yes\n";
  }
  out << "Z: " << (is_z_matrix(m) ? "yes" : "no") << "\n";
  if (auto x = is_k_matrix(m) ? k_certificate(m) : std::nullopt) {
    out << "K: yes (x=" << to_string(*x) << ")\n";
  } else {
    out << "K: no\n";
  }
  if (auto s = as_stochastic_k(m)) {
    out << "stochastic-K: yes (gamma=" << to_string(s.form->gamma) << ")\n";
  } else {
    out << "stochastic-K: no\n";
  }
  if (auto x = is_hidden_k(m)) {
    out << "hidden-K: yes (X=" << matrix_string(*x) << ")\n";
  } else {
    out << "hidden-K: no\n";
  }
  return 0;
}

// ---- witness ----------------------------------------------------------------

int cmd_witness(const std::string& path, const std::string& out_path, std::ostream& out) {
  const BlockMatrix m = matrix_of(io::read_file(path));
  auto w = compute_min_factor_witness(m);
  if (!w) throw PreconditionError("no hidden-K witness: the matrix is not hidden K");
  Json j = Json::object();
  j["kind"] = "witness";
  j["gamma"] = io::rational_to_json(w->gamma);
  j["X"] = io::matrix_to_json(w->x);
  emit(out, j, out_path);
  return 0;
}

// ---- solve ------------------------------------------------------------------

struct SolveOptions {
  std::string path;
  std::string method;
  std::string out;
  std::string eps = "1/1000000";
  bool oracle = false;
};

Json solve_glcp(const GLCPInstance& inst, const SolveOptions& o) {
  GLCPSolution sol;
  if (o.method.empty() || o.method == "pivot") {
    PivotOptions po;
    po.lexicographic = true;
    sol = principal_pivot_solve(inst, po).solution;
  } else if (o.method == "brute-force") {
    auto all = distinct_solutions(brute_force_solve(inst));
    if (all.empty()) throw PreconditionError("the GLCP has no solution");
    if (all.size() > 1) throw PreconditionError("the GLCP has " + std::to_string(all.size()) + " solutions");
    sol = all.front();
  } else {
    throw InvalidInputError("unknown glcp method '" + o.method + "' (pivot, brute-force)");
  }
  if (!verify_solution(inst, sol)) throw CheckFailed("solver output is not a solution");
  if (o.oracle) {
    auto all = distinct_solutions(brute_force_solve(inst));
    if (all.size() != 1 || !(all.front() == sol)) throw CheckFailed("brute-force oracle disagrees");
  }
  Json j = io::solution_to_json(sol);
  j["basis"] = selector_key(solution_basis(inst, sol));
  return j;
}

Json grid_lp_solution_json(const GridSimplexResult& r) {
  Json j = Json::object();
  j["kind"] = "solution";
  j["basis"] = selector_key(r.basis);
  j["u"] = io::vector_to_json(r.u);
  j["value"] = io::rational_to_json(r.value);
  return j;
}

Basis grid_lp_brute_basis(const GridLP& lp) {
  const GLCPInstance inst = glcp_from_grid_lp(lp);
  auto all = distinct_solutions(brute_force_solve(inst));
  if (all.size() != 1) throw PreconditionError("the Grid-LP complementarity system has no unique solution");
  return solution_basis(inst, all.front());
}

Json solve_grid_lp(const GridLP& lp, const SolveOptions& o) {
  GridSimplexResult r;
  if (o.method.empty() || o.method == "simplex") {
    r = grid_simplex(lp);
  } else if (o.method == "brute-force") {
    r = grid_lp_point(lp, grid_lp_brute_basis(lp));
  } else {
    throw InvalidInputError("unknown gridlp method '" + o.method + "' (simplex, brute-force)");
  }
  if (!is_optimal_basis(lp, r.basis)) throw CheckFailed("basis is not optimal");
  if (o.oracle && grid_lp_point(lp, grid_lp_brute_basis(lp)).value != r.value)
    throw CheckFailed("brute-force oracle disagrees");
  return grid_lp_solution_json(r);
}

Json mdp_solution_json(const DiscountedMDP& mdp, const Vector& v) {
  Json j = Json::object();
  j["kind"] = "solution";
  j["value"] = io::vector_to_json(v);
  j["policy"] = policy_to_json(policy_from_argmax(argmax_sets(mdp, v)));
  return j;
}

Json solve_mdp(const DiscountedMDP& mdp, const SolveOptions& o) {
  if (o.method == "value-iteration") {
    const Rational eps = parse_rational(o.eps);
    if (sgn(eps) <= 0) throw InvalidInputError("--eps must be positive");
    auto r = value_iteration(mdp, eps);
    Json j = mdp_solution_json(mdp, r.value);
    j["approximate"] = true;
    j["eps"] = io::rational_to_json(eps);
    j["iterations"] = r.iterations;
    return j;
  }
  MdpMethod method;
  if (o.method.empty() || o.method == "policy-iteration") {
    method = MdpMethod::kPolicyIteration;
  } else if (o.method == "brute-force") {
    method = MdpMethod::kBruteForce;
  } else {
    throw InvalidInputError("unknown mdp method '" + o.method +
                            "' (policy-iteration, brute-force, value-iteration)");
  }
  const MdpSolution s = solve_optimal(mdp, method);
  if (!satisfies_bellman(mdp, s.value)) throw CheckFailed("values violate the Bellman equations");
  if (o.oracle && solve_optimal(mdp, MdpMethod::kBruteForce).value != s.value)
    throw CheckFailed("brute-force oracle disagrees");
  Json j = Json::object();
  j["kind"] = "solution";
  j["value"] = io::vector_to_json(s.value);
  j["policy"] = policy_to_json(s.policy);
  return j;
}

Json solve_game(const StochasticGame& g, const SolveOptions& o) {
  Vector v;
  Policy pi;
  if (o.method.empty() || o.method == "strategy-iteration") {
    auto s = strategy_iteration(g);
    v = s.value;
    pi = s.policy;
  } else if (o.method == "brute-force") {
    auto s = brute_force_game(g);
    v = s.value;
    pi = s.optimal.front();
  } else {
    throw InvalidInputError("unknown game method '" + o.method + "' (strategy-iteration, brute-force)");
  }
  if (!check_optimality(g, v)) throw CheckFailed("values violate the optimality equations");
  if (o.oracle && brute_force_game(g).value != v) throw CheckFailed("brute-force oracle disagrees");
  Json j = Json::object();
  j["kind"] = "solution";
  j["value"] = io::vector_to_json(v);
  j["policy"] = policy_to_json(pi);
  return j;
}

int cmd_solve(const SolveOptions& o, std::ostream& out) {
  const Json in = io::read_file(o.path);
  const std::string kind = io::kind_of(in);
  Json result;
  if (kind == "glcp") {
    result = solve_glcp(io::glcp_from_json(in), o);
  } else if (kind == "gridlp") {
    result = solve_grid_lp(io::grid_lp_from_json(in), o);
  } else if (kind == "mdp") {
    result = solve_mdp(io::mdp_from_json(in), o);
  } else if (kind == "game") {
    result = solve_game(io::game_from_json(in), o);
  } else {
    throw InvalidInputError("cannot solve a " + kind + " file");
  }
  result["problem"] = kind;
  emit(out, result, o.out);
  return 0;
}

// ---- reduce -----------------------------------------------------------------

struct ReduceOptions {
  std::string path;
  std::string target;
  std::string out;
  std::string trace;
  std::string witness;
};

std::string default_trace_path(const std::string& out) {
  const std::string ext = ".json";
  if (out.size() > ext.size() && out.compare(out.size() - ext.size(), ext.size(), ext) == 0)
    return out.substr(0, out.size() - ext.size()) + ".trace.json";
  return out + ".trace.json";
}

Reduction to_binary_kglcp(const GLCPInstance& inst) {
  if (as_stochastic_k(inst.m)) return kglcp_to_binary(inst);
  auto x = k_certificate(inst.m);
  if (!x || !is_k_matrix(inst.m)) throw PreconditionError("binary-kglcp needs a K-matrix");
  Reduction first = rescale(inst, stochastic_form(inst.m, *x).scaling);
  Reduction rest = kglcp_to_binary(first.inst);
  first.trace.append(rest.trace);
  first.inst = std::move(rest.inst);
  return first;
}

int cmd_reduce(const ReduceOptions& o, std::ostream& out) {
  const Json in = io::read_file(o.path);
  const std::string kind = io::kind_of(in);
  const std::string& t = o.target;
  Json reduced;
  Json trace = Json::object();
  trace["kind"] = "trace";
  trace["target"] = t;
  trace["source"] = in;
  std::size_t steps = 0;

  auto need = [&](const char* k) {
    if (kind != k) throw InvalidInputError("target " + t + " needs a " + k + " file, got " + kind);
  };

  if (t == "plcp" || t == "binary-kglcp" || t == "hiddenk-lcp") {
    need("glcp");
    const GLCPInstance inst = io::glcp_from_json(in);
    GLCPInstance result;
    ReductionTrace rt;
    if (t == "plcp") {
      if (!is_p_matrix(inst.m)) throw NotPMatrixError("plcp target needs a P-matrix");
      Reduction r = pglcp_to_plcp(inst);
      result = std::move(r.inst);
      rt = std::move(r.trace);
    } else if (t == "binary-kglcp") {
      Reduction r = to_binary_kglcp(inst);
      result = std::move(r.inst);
      rt = std::move(r.trace);
    } else {
      HiddenKReduction r = hiddenk_glcp_to_hiddenk_lcp(inst, witness_of(inst.m, o.witness));
      result = std::move(r.inst);
      rt = std::move(r.trace);
      trace["witness"] = io::matrix_to_json(r.witness);
    }
    reduced = io::glcp_to_json(result);
    trace["steps"] = io::trace_to_json(rt);
    steps = rt.steps.size();
  } else if (t == "cube-lp") {
    need("gridlp");
    const GridLP lp = io::grid_lp_from_json(in);
    std::optional<Matrix> x;
    if (!o.witness.empty()) x = witness_of(lp.m, o.witness);
    CubeLpReduction r = grid_lp_to_cube_lp(lp, x);
    reduced = io::grid_lp_to_json(r.cube);
    trace["witness"] = io::matrix_to_json(r.witness);
    trace["steps"] = io::trace_to_json(r.trace);
    steps = r.trace.steps.size();
  } else if (t == "binary-mdp") {
    need("mdp");
    BinaryMdpReduction r = mdp_to_binary_mdp(io::mdp_from_json(in));
    reduced = io::mdp_to_json(r.mdp);
    trace["offset"] = io::rational_to_json(r.offset);
    trace["steps"] = io::trace_to_json(r.trace);
    steps = r.trace.steps.size();
  } else if (t == "binary-game") {
    need("game");
    auto [g, records] = game_to_binary(io::game_from_json(in));
    reduced = io::game_to_json(g);
    trace["records"] = io::split_records_to_json(records);
    steps = records.size();
  } else {
    throw InvalidInputError("unknown target '" + t +
                            "' (plcp, binary-kglcp, hiddenk-lcp, cube-lp, binary-mdp, binary-game)");
  }
  trace["reduced"] = reduced;

  const std::string trace_path = o.trace.empty() ? default_trace_path(o.out) : o.trace;
  io::write_file(o.out, reduced);
  io::write_file(trace_path, trace);
  out << "reduced " << kind << " to " << io::kind_of(reduced) << " in " << steps << " steps\n";
  out << "instance: " << o.out << "\n";
  out << "trace: " << trace_path << "\n";
  return 0;
}

// ---- recover ----------------------------------------------------------------

int cmd_recover(const std::string& trace_path, const std::string& sol_path, const std::string& out_path,
                std::ostream& out) {
  const Json tr = io::read_file(trace_path);
  io::expect_kind(tr, "trace");
  const Json sol = io::read_file(sol_path);
  if (!tr.contains("target") || !tr.contains("source") || !tr.contains("reduced"))
    throw InvalidInputError("trace file is missing target, source or reduced");
  const std::string t = tr.at("target").get<std::string>();
  const Json& src = tr.at("source");
  const Json& red = tr.at("reduced");
  auto steps = [&] { return io::trace_from_json(tr.at("steps")); };

  Json result;
  if (t == "plcp" || t == "binary-kglcp" || t == "hiddenk-lcp") {
    const GLCPInstance reduced = io::glcp_from_json(red);
    const GLCPSolution s = io::solution_from_json(sol);
    if (!verify_solution(reduced, s)) throw CheckFailed("input is not a solution of the reduced instance");
    const GLCPInstance original = io::glcp_from_json(src);
    const GLCPSolution back = recover(steps(), s);
    if (!verify_solution(original, back)) throw CheckFailed("recovered point is not a solution");
    result = io::solution_to_json(back);
    result["basis"] = selector_key(solution_basis(original, back));
  } else if (t == "cube-lp") {
    const GridLP lp = io::grid_lp_from_json(src);
    if (!sol.contains("basis")) throw InvalidInputError("cube-lp recovery needs a solution with \"basis\"");
    CubeLpReduction r{io::grid_lp_from_json(red), io::matrix_from_json(tr.at("witness")), steps()};
    const Basis b = recover_grid_lp_basis(lp, r, parse_selector_key(sol.at("basis").get<std::string>()));
    if (!is_optimal_basis(lp, b)) throw CheckFailed("recovered basis is not optimal");
    result = grid_lp_solution_json(grid_lp_point(lp, b));
  } else if (t == "binary-mdp") {
    const DiscountedMDP mdp = io::mdp_from_json(src);
    BinaryMdpReduction r{io::mdp_from_json(red), io::rational_from_json(tr.at("offset")), steps()};
    const Vector v = recover_mdp_values(mdp, r, io::vector_from_json(sol.at("value")));
    if (!satisfies_bellman(mdp, v)) throw CheckFailed("recovered values violate the Bellman equations");
    result = mdp_solution_json(mdp, v);
  } else if (t == "binary-game") {
    const StochasticGame g = io::game_from_json(src);
    const Vector v = recover_game_values(io::split_records_from_json(tr.at("records")),
                                         io::vector_from_json(sol.at("value")));
    if (!check_optimality(g, v)) throw CheckFailed("recovered values violate the optimality equations");
    result = Json::object();
    result["kind"] = "solution";
    result["value"] = io::vector_to_json(v);
  } else {
    throw InvalidInputError("unknown trace target '" + t + "'");
  }
  result["problem"] = io::kind_of(src);
  emit(out, result, out_path);
  return 0;
}

// ---- uso --------------------------------------------------------------------

int cmd_uso(const std::string& path, bool dot, bool check, const std::string& out_path, std::ostream& out,
            std::ostream& err) {
  const Json in = io::read_file(path);
  const std::string kind = io::kind_of(in);
  GridUSO o;
  std::optional<std::set<std::size_t>> min_blocks;
  if (kind == "glcp") {
    o = uso_from_glcp(io::glcp_from_json(in));
  } else if (kind == "gridlp") {
    o = uso_from_grid_lp(io::grid_lp_from_json(in));
  } else if (kind == "mdp") {
    const DiscountedMDP mdp = io::mdp_from_json(in);
    o = uso_from_glcp(mdp_to_kglcp(mdp, default_offset(mdp)));
  } else if (kind == "game") {
    SignedUso s = signed_uso_from_game(io::game_from_json(in));
    o = std::move(s.uso);
    min_blocks = std::move(s.f);
  } else if (kind == "uso") {
    o = io::uso_from_json(in);
  } else {
    throw InvalidInputError("no orientation for a " + kind + " file");
  }
  if (check) {
    const bool ok = is_uso(o);
    err << "is_uso: " << (ok ? "yes" : "no") << "\n";
    if (!ok) throw CheckFailed("orientation is not a unique sink orientation");
  }
  if (dot) {
    if (out_path.empty()) {
      out << to_dot(o);
    } else {
      std::ofstream f(out_path);
      if (!f) throw InvalidInputError("cannot write " + out_path);
      f << to_dot(o);
    }
    return 0;
  }
  Json j = io::uso_to_json(o);
  if (min_blocks) {
    Json f = Json::array();
    for (std::size_t s : *min_blocks) f.push_back(s + 1);
    j["min_blocks"] = std::move(f);
  }
  emit(out, j, out_path);
  return 0;
}

// ---- verify -----------------------------------------------------------------

int cmd_verify(const std::string& problem_path, const std::string& sol_path, std::ostream& out) {
  const Json in = io::read_file(problem_path);
  const std::string kind = io::kind_of(in);
  if (kind == "uso") {
    if (!is_uso(io::uso_from_json(in))) throw CheckFailed("not a unique sink orientation");
    out << "valid\n";
    return 0;
  }
  if (sol_path.empty()) throw InvalidInputError("verify needs a solution file for a " + kind + " problem");
  const Json sol = io::read_file(sol_path);
  bool ok = false;
  if (kind == "glcp") {
    ok = verify_solution(io::glcp_from_json(in), io::solution_from_json(sol));
  } else if (kind == "gridlp") {
    if (!sol.contains("basis")) throw InvalidInputError("gridlp solution needs \"basis\"");
    const GridLP lp = io::grid_lp_from_json(in);
    const Basis b = parse_selector_key(sol.at("basis").get<std::string>());
    check_selector(lp.m.type().grown(), b);
    ok = is_optimal_basis(lp, b);
  } else if (kind == "mdp") {
    ok = satisfies_bellman(io::mdp_from_json(in), io::vector_from_json(sol.at("value")));
  } else if (kind == "game") {
    ok = check_optimality(io::game_from_json(in), io::vector_from_json(sol.at("value")));
  } else {
    throw InvalidInputError("cannot verify a " + kind + " file");
  }
  if (!ok) throw CheckFailed("solution is not optimal");
  out << "valid\n";
  return 0;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"gridcube: exact complementarity, grid LP, MDP and game toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::string second;
  std::string out_path;

  auto* classify = app.add_subcommand("classify", "Matrix class verdicts with certificates");
  classify->add_option("file", file, "matrix, glcp or gridlp file")->required();

  auto* witness = app.add_subcommand("witness", "Minimal-factor hidden-K witness (gamma*, X*)");
  witness->add_option("file", file, "matrix, glcp or gridlp file")->required();
  witness->add_option("-o,--out", out_path, "write the witness here instead of stdout");

  SolveOptions so;
  auto* solve = app.add_subcommand("solve", "Solve a glcp, gridlp, mdp or game file");
  solve->add_option("file", so.path, "problem file")->required();
  solve->add_option("-m,--method", so.method,
                    "pivot | brute-force (glcp); simplex | brute-force (gridlp); "
                    "policy-iteration | brute-force | value-iteration (mdp); "
                    "strategy-iteration | brute-force (game)");
  solve->add_option("--eps", so.eps, "value-iteration tolerance as a rational");
  solve->add_flag("--oracle", so.oracle, "cross-check against brute-force enumeration");
  solve->add_option("-o,--out", so.out, "write the solution here instead of stdout");

  ReduceOptions ro;
  auto* reduce = app.add_subcommand("reduce", "Reduce an instance and record a trace");
  reduce->add_option("file", ro.path, "problem file")->required();
  reduce->add_option("-t,--target", ro.target,
                     "plcp | binary-kglcp | hiddenk-lcp | cube-lp | binary-mdp | binary-game")
      ->required();
  reduce->add_option("-o,--out", ro.out, "reduced instance")->required();
  reduce->add_option("--trace", ro.trace, "trace file (default: OUT with .trace.json)");
  reduce->add_option("--witness", ro.witness, "witness file for hiddenk-lcp and cube-lp");

  auto* recover_cmd = app.add_subcommand("recover", "Map a reduced solution back and verify it");
  recover_cmd->add_option("trace", file, "trace file written by reduce")->required();
  recover_cmd->add_option("solution", second, "solution of the reduced instance")->required();
  recover_cmd->add_option("-o,--out", out_path, "write the recovered solution here");

  bool dot = false;
  bool check = false;
  auto* uso = app.add_subcommand("uso", "Orientation induced by a glcp, gridlp, mdp or game");
  uso->add_option("file", file, "problem file")->required();
  uso->add_flag("--dot", dot, "emit Graphviz DOT instead of JSON");
  uso->add_flag("--check", check, "run the unique-sink check");
  uso->add_option("-o,--out", out_path, "output file");

  auto* verify = app.add_subcommand("verify", "Check a solution (or a uso file on its own)");
  verify->add_option("problem", file, "problem file")->required();
  verify->add_option("solution", second, "solution file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : static_cast<int>(ErrorKind::kInvalidInput);
  }

  try {
    if (*classify) return cmd_classify(file, out);
    if (*witness) return cmd_witness(file, out_path, out);
    if (*solve) return cmd_solve(so, out);
    if (*reduce) return cmd_reduce(ro, out);
    if (*recover_cmd) return cmd_recover(file, second, out_path, out);
    if (*uso) return cmd_uso(file, dot, check, out_path, out, err);
    if (*verify) return cmd_verify(file, second, out);
  } catch (const CheckFailed& e) {
    err << "check failed: " << e.what() << "\n";
    return kCheckFailed;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.kind());
  } catch (const nlohmann::json::exception& e) {
    err << "error: malformed JSON: " << e.what() << "\n";
    return static_cast<int>(ErrorKind::kInvalidInput);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kInternalError;
}

}  // namespace gridcube::cli
