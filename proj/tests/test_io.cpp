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

#include <gtest/gtest.h>

#include "leibniz/io.hpp"

using namespace leibniz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

}  // namespace

TEST(Io, AlgebraRoundTrip) {
  for (const auto& name : builtin_algebra_names())
    for (auto f : {Q, FieldSpec::prime(7)}) {
      const auto a = builtin_algebra(name, f);
      EXPECT_EQ(algebra_from_json(parse_json_text(algebra_to_json(a).dump())), a) << name;
    }
}

TEST(Io, BimoduleRoundTrip) {
  const auto a = share(make_S(Q));
  for (Index n = 0; n <= 2; ++n) {
    const auto m = sl2_bimodule(a, n, n % 2 == 0);
    EXPECT_EQ(bimodule_from_json(bimodule_to_json(m)), m);
    EXPECT_EQ(bimodule_from_json(bimodule_to_json(m), a), m);
  }
}

TEST(Io, BimoduleByBuiltinNameWithMissingOperators) {
  const auto m = bimodule_from_json(parse_json_text(R"({"algebra": "A", "dim": 1, "lambda": {"h": [["1"]]}})"));
  EXPECT_EQ(m.dim(), 1);
  EXPECT_EQ(m.lambda(0)(0, 0), Scalar(1));
  EXPECT_TRUE(is_zero_matrix(m.rho(0)));
  EXPECT_TRUE(is_zero_matrix(m.lambda(1)));
}

TEST(Io, ParseErrorsCarryPosition) {
  try {
    parse_json_text("{\n  \"a\": 1,\n  \"b\": ]\n}");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 8u);
    EXPECT_EQ(std::string(e.what()).rfind("line 3, column 8: ", 0), 0u) << e.what();
  }
}

TEST(Io, RejectsBadScalarsAndShapes) {
  EXPECT_ANY_THROW(matrix_from_json(parse_json_text(R"([["1/0"]])"), Q, 1, 1));
  EXPECT_THROW(matrix_from_json(parse_json_text(R"([["1", "2"]])"), Q, 1, 1), InputError);
  EXPECT_THROW(matrix_from_json(parse_json_text(R"([[true]])"), Q, 1, 1), InputError);
  EXPECT_EQ(matrix_from_json(parse_json_text(R"([["3/6", 2]])"), Q, 1, 2)(0, 0).to_string(), "1/2");
  EXPECT_THROW(bimodule_from_json(parse_json_text(R"({"algebra": "A", "dim": 1, "lambda": [[["1"]]]})")),
               InputError);
  EXPECT_THROW(bimodule_from_json(parse_json_text(R"({"algebra": "A", "dim": 1, "rho": {"q": [["1"]]}})")),
               InputError);
  EXPECT_THROW(bimodule_from_json(parse_json_text(R"({"dim": 1})")), InputError);
}

TEST(Io, NonLeibnizAlgebraNamesTriple) {
  const char* text = R"({"field": "Q", "basis": ["x", "y"],
    "products": [["x", "x", {"y": "1"}], ["y", "x", {"x": "1"}]]})";
  try {
    algebra_from_json(parse_json_text(text));
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("not a left Leibniz algebra"), std::string::npos);
  }
  EXPECT_THROW(algebra_from_json(parse_json_text(R"({"basis": ["x"], "products": [["x", "z", {}]]})")),
               InputError);
}

TEST(Io, DifferentAlgebraRejected) {
  const auto m = adjoint(share(make_A(Q)));
  EXPECT_THROW(bimodule_from_json(bimodule_to_json(m), share(make_N(Q))), InputError);
}

TEST(Io, GrElements) {
  const auto r = sl2_rule();
  const GrElement g = parse_gr_element(*r, "2S(2) - A(1) + U");
  EXPECT_EQ(gr_from_json(*r, gr_to_json(g)), g);
  EXPECT_EQ(gr_from_json(*r, Json("2S(2) - A(1) + U")), g);
  EXPECT_THROW(gr_from_json(*r, parse_json_text(R"j({"S(1)": 1.5})j")), InputError);
  EXPECT_THROW(gr_from_json(*r, Json(3)), InputError);
}
