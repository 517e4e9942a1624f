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

#include "leibniz/groth.hpp"

using namespace leibniz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

GrElement el(const FusionRule& r, const char* text) { return parse_gr_element(r, text); }

}  // namespace

TEST(Groth, ClebschGordan) {
  EXPECT_EQ(clebsch_gordan(2, 1), (std::vector<long long>{3, 1}));
  EXPECT_EQ(clebsch_gordan(0, 4), (std::vector<long long>{4}));
  // dimension count (m+1)(n+1)
  for (long long m = 0; m <= 6; ++m)
    for (long long n = 0; n <= 6; ++n) {
      long long d = 0;
      for (auto k : clebsch_gordan(m, n)) d += k + 1;
      EXPECT_EQ(d, (m + 1) * (n + 1));
      EXPECT_EQ(clebsch_gordan(m, n), clebsch_gordan(n, m));
    }
}

TEST(Groth, WeightProducts) {
  const auto r = weight_rule(Q, 1);
  EXPECT_EQ(gr_mul(*r, el(*r, "S(1)"), el(*r, "S(1)")), el(*r, "S(2)"));
  EXPECT_EQ(gr_mul(*r, el(*r, "S(2)"), el(*r, "S(-2)")), el(*r, "U"));
  EXPECT_EQ(gr_mul(*r, el(*r, "S(1)"), el(*r, "A(-1)")), GrElement{});
  EXPECT_EQ(gr_mul(*r, el(*r, "S(2)+S(-2)"), el(*r, "S(2)+S(-2)")), el(*r, "S(4)+S(-4)+2U"));
  EXPECT_EQ(gr_mul(*r, el(*r, "U"), el(*r, "3A(1)")), el(*r, "3A(1)"));
}

TEST(Groth, StarProductsReproduceDirectRules) {
  const auto w = weight_rule(Q, 1);
  const auto sw = star_product(group_rule(Q, 1), group_rule(Q, 1));
  const auto s = sl2_rule();
  const auto ss = star_product(zt_rule(), zt_rule());
  for (const auto& [direct, star] : {std::pair{w, sw}, std::pair{s, ss}}) {
    const auto win = direct->window();
    for (const auto& a : win)
      for (const auto& b : win) EXPECT_EQ(direct->mul(a, b), star->mul(a, b)) << a.to_string() << b.to_string();
  }
  EXPECT_EQ(parse_rule("star:zt,zt", Q)->name(), "star:zt,zt");
  EXPECT_THROW(parse_rule("star:zt", Q), std::invalid_argument);
}

TEST(Groth, IntegerStarIntegerIsTrivial) {
  const auto r = star_product(integer_rule(), integer_rule());
  EXPECT_EQ(gr_mul(*r, el(*r, "2U"), el(*r, "3U")), el(*r, "6U"));
}

TEST(Groth, UnitAndCommutativityOnWindows) {
  for (const char* name : {"weight:1", "weight:2", "sl2", "zt", "group:1"}) {
    const auto r = parse_rule(name, Q);
    const auto win = r->window();
    for (const auto& a : win) {
      EXPECT_EQ(r->mul(r->unit(), a), gr_label(a)) << name;
      for (const auto& b : win) EXPECT_EQ(r->mul(a, b), r->mul(b, a)) << name;
    }
  }
}

TEST(Groth, ForeignLabelsRejected) {
  const auto r = sl2_rule();
  EXPECT_THROW(r->mul(Label::integral(Label::Kind::Plain, 1), r->unit()), std::invalid_argument);
  EXPECT_THROW(el(*r, "P(1)"), std::runtime_error);
}

TEST(Groth, Sl2Witnesses) {
  const auto r = sl2_rule();
  const auto win = r->window();
  for (const auto& v : identity_checkers(*r, win, 50, 1)) {
    if (v.identity == Identity::Commutative) {
      EXPECT_TRUE(v.holds);
      continue;
    }
    ASSERT_FALSE(v.holds) << identity_name(v.identity);
    const auto& w = *v.witness;
    const auto sides = identity_sides(*r, v.identity, w.args);
    EXPECT_EQ(sides.first, w.lhs);
    EXPECT_EQ(sides.second, w.rhs);
    EXPECT_NE(w.lhs, w.rhs);
  }
  const auto alt = check_identity(*r, Identity::Alternative, win, 0, 1);
  ASSERT_TRUE(alt.witness);
  EXPECT_EQ(gr_to_string(alt.witness->args[0]), "S(1)");
  EXPECT_EQ(gr_to_string(alt.witness->args[1]), "A(1)");
  EXPECT_EQ(gr_to_string(alt.witness->lhs), "A(1)");
  EXPECT_EQ(gr_to_string(alt.witness->rhs), "0");
}

TEST(Groth, WeightRingIsNotAlternative) {
  const auto r = weight_rule(Q, 1);
  const GrElement u = el(*r, "S(2)+S(-2)"), v = el(*r, "A(-2)");
  const auto sides = identity_sides(*r, Identity::Alternative, {u, v});
  EXPECT_EQ(sides.first, el(*r, "2A(-2)"));
  EXPECT_EQ(sides.second, GrElement{});
  // single labels do satisfy it
  for (const auto& a : r->window())
    for (const auto& b : r->window()) {
      const auto s = identity_sides(*r, Identity::Alternative, {gr_label(a), gr_label(b)});
      EXPECT_EQ(s.first, s.second);
    }
}

TEST(Groth, CriterionScan) {
  EXPECT_THROW(criterion_scan(*zt_rule(), zt_rule()->window()), std::invalid_argument);
  for (const auto& r : {star_product(zt_rule(), zt_rule()), star_product(group_rule(Q, 1), group_rule(Q, 1))}) {
    const auto scan = criterion_scan(*r, r->window());
    EXPECT_FALSE(scan.hits.empty()) << r->name();
    EXPECT_TRUE(scan.all_confirmed()) << r->name();
  }
  const auto z = star_product(integer_rule(), integer_rule());
  EXPECT_TRUE(criterion_scan(*z, z->window()).hits.empty());
}

TEST(Groth, Parser) {
  const auto r = sl2_rule();
  EXPECT_EQ(el(*r, "0"), GrElement{});
  EXPECT_EQ(el(*r, "2*S(1) - A(1) + 3U"), gr_add(gr_add(gr_label(Label::integral(Label::Kind::Sym, 1), 2),
                                                         gr_label(Label::integral(Label::Kind::Anti, 1), -1)),
                                                  gr_unit(), 3));
  EXPECT_EQ(el(*r, "S(1) - S(1)"), GrElement{});
  EXPECT_EQ(gr_to_string(el(*r, "U + S(1) + 2S(3)")), "2S(3) + S(1) + U");
  try {
    el(*r, "S(1) + ?");
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("position 7"), std::string::npos) << e.what();
  }
  EXPECT_THROW(el(*r, "S(1"), std::runtime_error);
}

TEST(Groth, ClassesOfModules) {
  const auto a = share(make_A(Q));
  const auto ra = registry_rule(*a, Registry::Weight);
  EXPECT_EQ(class_of_bimodule(adjoint(a), Registry::Weight), el(*ra, "A(1)+U"));
  EXPECT_EQ(class_of_bimodule(adjoint(a), Registry::Weight, 5),
            class_of_bimodule(adjoint(a), Registry::Weight, 9));
  const auto sl = share(make_sl2(Q));
  const auto r = sl2_rule();
  const auto l1 = sl2_bimodule(sl, 1, true);
  EXPECT_EQ(class_of_bimodule(tensor_product(l1, l1), Registry::Sl2), el(*r, "S(2)+U"));
  const auto e = share(make_e(Q));
  EXPECT_THROW(class_of_bimodule(one_dim_bimodule(e, {Scalar(0)}, {Scalar(1)}), Registry::Weight),
               std::invalid_argument);
}

TEST(Groth, RingOfLeibnizMatchesItsLieQuotient) {
  const auto a = make_A(Q);
  EXPECT_EQ(registry_rule(a, Registry::Weight)->name(),
            registry_rule(canonical_lie(a).lie, Registry::Weight)->name());
}

TEST(Groth, RingAgreesWithTruncatedTensors) {
  const auto sl = share(make_sl2(Q));
  std::vector<std::pair<Bimodule, Bimodule>> pairs;
  for (Index m = 0; m <= 1; ++m)
    for (Index n = 1; n <= 2; ++n)
      for (bool s : {true, false}) pairs.emplace_back(sl2_bimodule(sl, m, s), sl2_bimodule(sl, n, !s));
  EXPECT_TRUE(verify_ring_vs_modules(*sl2_rule(), Registry::Sl2, pairs).ok());
}
