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

#ifndef GRIDCUBE_IO_HPP
#define GRIDCUBE_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "gridcube/block.hpp"
#include "gridcube/games.hpp"
#include "gridcube/glcp.hpp"
#include "gridcube/lpgrid.hpp"
#include "gridcube/mdp.hpp"
#include "gridcube/reduce.hpp"
#include "gridcube/uso.hpp"

/// Kind-tagged JSON files. Rationals are written as "p/q" strings in lowest
/// terms and read from strings or JSON integers. Block and row numbers in
/// files are 1-based.
namespace gridcube::io {

using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json vector_to_json(const Vector& v);
Vector vector_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j);

/// {"blocks": [[row, ...], ...]}
Json block_matrix_to_json(const BlockMatrix& m);
BlockMatrix block_matrix_from_json(const Json& j);

Json glcp_to_json(const GLCPInstance& inst);
GLCPInstance glcp_from_json(const Json& j);
Json solution_to_json(const GLCPSolution& sol);
GLCPSolution solution_from_json(const Json& j);
Json grid_lp_to_json(const GridLP& lp);
GridLP grid_lp_from_json(const Json& j);
Json mdp_to_json(const DiscountedMDP& mdp);
DiscountedMDP mdp_from_json(const Json& j);
Json game_to_json(const StochasticGame& g);
StochasticGame game_from_json(const Json& j);
Json uso_to_json(const GridUSO& o);
GridUSO uso_from_json(const Json& j);
Json trace_to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const Json& j);
Json split_records_to_json(const std::vector<SplitRecord>& records);
std::vector<SplitRecord> split_records_from_json(const Json& j);

/// The "kind" tag; InvalidInputError when missing.
std::string kind_of(const Json& j);
/// Checks the tag and raises InvalidInputError on a mismatch.
void expect_kind(const Json& j, const std::string& kind);

Json parse(const std::string& text);
Json read_file(const std::string& path);
void write_file(const std::string& path, const Json& j);

}  // namespace gridcube::io

#endif  // GRIDCUBE_IO_HPP
