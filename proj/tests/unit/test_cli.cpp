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

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "generators.hpp"
#include "gridcube/cli.hpp"
#include "gridcube/io.hpp"
#include "gridcube/lpgrid.hpp"
#include "gridcube/reduce.hpp"
#include "gridcube/witness.hpp"

namespace gridcube {
namespace {

namespace fs = std::filesystem;
using testing::q;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("gridcube_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const io::Json& j) const {
    io::write_file(path(name), j);
    return path(name);
  }

  static Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "gridcube");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  static io::Json matrix_file(const BlockMatrix& m) {
    io::Json j = io::Json::object();
    j["kind"] = "matrix";
    j["M"] = io::block_matrix_to_json(m);
    return j;
  }

  fs::path dir_;
};

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

TEST_F(Cli, ClassifyK1) {
  const Outcome r = run({"classify", write("k1.json", matrix_file(testing::k1()))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "Z: yes")) << r.out;
  EXPECT_TRUE(contains(r.out, "K: yes (x=(1,1))")) << r.out;
  EXPECT_TRUE(contains(r.out, "hidden-K: yes")) << r.out;
}

TEST_F(Cli, ClassifyH1) {
  const Outcome r = run({"classify", write("h1.json", matrix_file(testing::h1()))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "P: yes")) << r.out;
  EXPECT_TRUE(contains(r.out, "Z: no")) << r.out;
  EXPECT_TRUE(contains(r.out, "hidden-K: yes (X=")) << r.out;
}

TEST_F(Cli, ClassifyNegativeScalar) {
  const Outcome r = run({"classify", write("m.json", matrix_file(BlockMatrix::square(Matrix{{q(-1)}})))});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "P: no (minor -1")) << r.out;
}

TEST_F(Cli, WitnessOfH1) {
  const std::string w = path("w.json");
  ASSERT_EQ(run({"witness", write("h1.json", matrix_file(testing::h1())), "--out", w}).code, 0);
  const io::Json j = io::read_file(w);
  EXPECT_EQ(io::kind_of(j), "witness");
  EXPECT_TRUE(verify_proper(testing::h1(), io::matrix_from_json(j.at("X"))));
  EXPECT_EQ(run({"witness", write("neg.json", matrix_file(BlockMatrix::square(Matrix{{q(-1)}})))}).code, 2);
}

TEST_F(Cli, SolveMdp1) {
  const std::string f = write("mdp1.json", io::mdp_to_json(testing::mdp1()));
  for (const char* method : {"policy-iteration", "brute-force"}) {
    const Outcome r = run({"solve", f, "--method", method, "--oracle"});
    ASSERT_EQ(r.code, 0) << r.err;
    const io::Json j = io::parse(r.out);
    EXPECT_EQ(j.at("value"), io::Json::array({"4"}));
    EXPECT_EQ(j.at("policy"), io::Json::array({2}));
  }
  const Outcome vi = run({"solve", f, "--method", "value-iteration", "--eps", "1/1000"});
  ASSERT_EQ(vi.code, 0) << vi.err;
  const Rational v = io::rational_from_json(io::parse(vi.out).at("value")[0]);
  EXPECT_LE(abs(v - 4), q(1, 1000));
}

TEST_F(Cli, SolveGlcpAndVerify) {
  const GLCPInstance inst{BlockMatrix::square(Matrix{{q(2), q(1)}, {q(1), q(2)}}), {q(-1), q(-1)}};
  const std::string f = write("lcp.json", io::glcp_to_json(inst));
  const std::string s = path("sol.json");
  const Outcome r = run({"solve", f, "--oracle", "--out", s});
  ASSERT_EQ(r.code, 0) << r.err;
  const GLCPSolution sol = io::solution_from_json(io::read_file(s));
  EXPECT_EQ(sol.z, (Vector{q(1, 3), q(1, 3)}));
  EXPECT_EQ(run({"verify", f, s}).code, 0);
  io::Json bad = io::read_file(s);
  bad["z"] = io::Json::array({"0", "0"});
  EXPECT_EQ(run({"verify", f, write("bad.json", bad)}).code, cli::kCheckFailed);
}

TEST_F(Cli, SolveGameAgainstOracle) {
  const StochasticGame g = game_from_mdp(testing::mdp1(), Owner::kMin);
  const Outcome r = run({"solve", write("g.json", io::game_to_json(g)), "--oracle"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(io::parse(r.out).at("value"), io::Json::array({"2"}));
}

TEST_F(Cli, BinaryMdpRoundTrip) {
  testing::Generator gen(71);
  for (int t = 0; t < 5; ++t) {
    const DiscountedMDP mdp = gen.mdp(3, 3, gen.discount());
    const std::string in = write("mdp.json", io::mdp_to_json(mdp));
    const std::string red = path("bin.json");
    ASSERT_EQ(run({"reduce", in, "--target", "binary-mdp", "--out", red}).code, 0);
    const DiscountedMDP bin = io::mdp_from_json(io::read_file(red));
    for (std::size_t s = 0; s < bin.states(); ++s) EXPECT_LE(bin.actions().size(s), 2);
    const std::string sol = path("bin.sol.json");
    ASSERT_EQ(run({"solve", red, "--out", sol}).code, 0);
    const Outcome back = run({"recover", path("bin.trace.json"), sol});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(io::vector_from_json(io::parse(back.out).at("value")), solve_optimal(mdp).value);
  }
}

TEST_F(Cli, CubeLpRoundTrip) {
  testing::Generator gen(72);
  for (int t = 0; t < 4; ++t) {
    const DiscountedMDP mdp = gen.mdp(2, 3, q(1, 2));
    const GridLP lp = mdp_to_grid_lp(mdp, Vector(mdp.states(), q(1)));
    const std::string in = write("lp.json", io::grid_lp_to_json(lp));
    const std::string red = path("cube.json");
    const std::string trace = path("cube.trace");
    ASSERT_EQ(run({"reduce", in, "--target", "cube-lp", "--out", red, "--trace", trace}).code, 0);
    const GridLP cube = io::grid_lp_from_json(io::read_file(red));
    EXPECT_TRUE(cube.m.type().is_all_ones());
    const std::string sol = path("cube.sol.json");
    ASSERT_EQ(run({"solve", red, "--out", sol}).code, 0);
    const Outcome back = run({"recover", trace, sol});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(io::parse(back.out).at("basis"), selector_key(grid_simplex(lp).basis));
  }
}

TEST_F(Cli, GlcpTargetsRoundTrip) {
  testing::Generator gen(73);
  const auto [hm, hx] = gen.hidden_k(BlockType({2, 3}), 3);
  struct Case {
    std::string target;
    GLCPInstance inst;
  };
  const std::vector<Case> cases = {
      {"plcp", gen.glcp(gen.p_matrix(BlockType({3, 2}), 3), 3)},
      {"binary-kglcp", gen.glcp(gen.k_matrix(BlockType({3, 1, 3}), 3), 3)},
      {"hiddenk-lcp", gen.glcp(hm, 3)},
  };
  for (const auto& c : cases) {
    const std::string in = write("in.json", io::glcp_to_json(c.inst));
    const std::string red = path("red.json");
    const Outcome r = run({"reduce", in, "--target", c.target, "--out", red});
    ASSERT_EQ(r.code, 0) << c.target << ": " << r.err;
    const std::string sol = path("red.sol.json");
    ASSERT_EQ(run({"solve", red, "--method", "brute-force", "--out", sol}).code, 0) << c.target;
    const Outcome back = run({"recover", path("red.trace.json"), sol});
    ASSERT_EQ(back.code, 0) << c.target << ": " << back.err;
    EXPECT_TRUE(verify_solution(c.inst, io::solution_from_json(io::parse(back.out)))) << c.target;
  }
}

TEST_F(Cli, BinaryGameRoundTrip) {
  testing::Generator gen(74);
  for (int t = 0; t < 5; ++t) {
    const StochasticGame g = gen.game(3, 3, gen.discount());
    const std::string in = write("g.json", io::game_to_json(g));
    const std::string red = path("bin.json");
    ASSERT_EQ(run({"reduce", in, "--target", "binary-game", "--out", red}).code, 0);
    const std::string sol = path("bin.sol.json");
    ASSERT_EQ(run({"solve", red, "--out", sol}).code, 0);
    const Outcome back = run({"recover", path("bin.trace.json"), sol});
    ASSERT_EQ(back.code, 0) << back.err;
    EXPECT_EQ(io::vector_from_json(io::parse(back.out).at("value")), strategy_iteration(g).value);
  }
}

TEST_F(Cli, UsoCheckAndDot) {
  const GLCPInstance inst{BlockMatrix::square(Matrix{{q(2), q(1)}, {q(1), q(2)}}), {q(-1), q(-1)}};
  const std::string f = write("lcp.json", io::glcp_to_json(inst));
  const Outcome j = run({"uso", f, "--check"});
  ASSERT_EQ(j.code, 0) << j.err;
  EXPECT_EQ(io::uso_from_json(io::parse(j.out)), uso_from_glcp(inst));
  EXPECT_TRUE(contains(j.err, "is_uso: yes"));
  const Outcome d = run({"uso", f, "--dot"});
  ASSERT_EQ(d.code, 0);
  EXPECT_TRUE(contains(d.out, "digraph"));
  EXPECT_EQ(run({"verify", write("o.json", io::parse(j.out))}).code, 0);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run({"solve", path("missing.json")}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  const GLCPInstance not_p{BlockMatrix::square(Matrix{{q(-1)}}), {q(1)}};
  EXPECT_EQ(run({"reduce", write("np.json", io::glcp_to_json(not_p)), "--target", "plcp", "--out", path("o.json")})
                .code,
            2);
  const GLCPInstance degenerate{BlockMatrix::square(Matrix{{q(1)}}), {q(0)}};
  EXPECT_EQ(run({"uso", write("d.json", io::glcp_to_json(degenerate))}).code, 3);
  const std::string mdp = write("mdp1.json", io::mdp_to_json(testing::mdp1()));
  ::setenv("GRIDCUBE_CAP", "1", 1);
  const int capped = run({"solve", mdp, "--method", "brute-force"}).code;
  ::unsetenv("GRIDCUBE_CAP");
  EXPECT_EQ(capped, 4);
  io::Json wrong = io::Json::object();
  wrong["value"] = io::Json::array({"3"});
  EXPECT_EQ(run({"verify", mdp, write("wrong.json", wrong)}).code, cli::kCheckFailed);
}

}  // namespace
}  // namespace gridcube
