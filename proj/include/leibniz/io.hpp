// Copyright 2026 The leibniz-bimod Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef LEIBNIZ_IO_HPP
#define LEIBNIZ_IO_HPP

#include <stdexcept>
#include <string>
#include <string_view>

#include <json.hpp>

#include "leibniz/bimodule.hpp"
#include "leibniz/groth.hpp"

namespace leibniz {

using Json = nlohmann::ordered_json;

// Malformed input; line and column are 1-based (0 when unknown).
class InputError : public std::runtime_error {
 public:
  InputError(const std::string& what, std::size_t line = 0, std::size_t column = 0);
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_, column_;
};

Json parse_json_text(std::string_view text);
Json read_json_file(const std::string& path);

Json scalar_to_json(const Scalar& s);
Json matrix_to_json(const MatrixX& m);
MatrixX matrix_from_json(const Json& j, const FieldSpec& f, Index rows, Index cols);
// basis rows
Json subspace_to_json(const Subspace& s);

// {"field": "Q", "basis": [...], "products": [["x", "y", {"z": "1"}], ...]}
Json algebra_to_json(const LeibnizAlgebra& a);
// Validates the left Leibniz identity; throws InputError naming the triple.
LeibnizAlgebra algebra_from_json(const Json& j);

// {"algebra": <object or builtin name>, "field": ..., "dim": n,
//  "lambda": {"x": [[..]]}, "rho": {...}}; missing operators are zero.
Json bimodule_to_json(const Bimodule& m);
Bimodule bimodule_from_json(const Json& j, AlgebraPtr algebra = nullptr);

Json gr_to_json(const GrElement& g);
GrElement gr_from_json(const FusionRule& r, const Json& j);

}  // namespace leibniz

#endif  // LEIBNIZ_IO_HPP
