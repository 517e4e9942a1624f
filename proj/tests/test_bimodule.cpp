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

#include <set>

#include "leibniz/random.hpp"
#include "leibniz/tensor.hpp"

using namespace leibniz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

MatrixX scalar(long long v) { return MatrixX::Constant(1, 1, Scalar(v)); }

}  // namespace

TEST(Bimodule, AdjointIsFull) {
  for (const auto& name : builtin_algebra_names()) {
    const auto a = share(builtin_algebra(name, Q));
    const auto rep = axiom_report(adjoint(a));
    EXPECT_TRUE(rep.full()) << name;
    EXPECT_TRUE(rep.zd) << name;
  }
}

TEST(Bimodule, SymAndAntiAreFull) {
  const auto a = share(make_A(Q));
  const std::vector<MatrixX> lam{scalar(1), scalar(0)};
  const auto s = symmetrize(a, lam), an = antisymmetrize(a, lam);
  EXPECT_TRUE(axiom_report(s).full());
  EXPECT_TRUE(axiom_report(an).full());
  EXPECT_TRUE(classify_flags(s).symmetric);
  EXPECT_TRUE(classify_flags(an).anti_symmetric);
  EXPECT_FALSE(classify_flags(s).anti_symmetric);
}

TEST(Bimodule, WeakOneDimOverE) {
  const auto e = share(make_e(Q));
  const auto m = one_dim_bimodule(e, {Scalar(0)}, {Scalar(1)});
  const auto rep = axiom_report(m);
  EXPECT_TRUE(rep.weak());
  EXPECT_FALSE(rep.full());
  EXPECT_TRUE(rep.zd_consistent);
  EXPECT_EQ(kernels_and_invariants(m).M0.dim(), 1);
  ASSERT_TRUE(rep.first_failure.has_value());
  EXPECT_EQ(rep.first_failure->axiom, Axiom::MLL);
}

TEST(Bimodule, KernelsOfAdjointA) {
  const auto k = kernels_and_invariants(adjoint(share(make_A(Q))));
  EXPECT_EQ(k.M0.dim(), 1);
  EXPECT_EQ(k.MR.dim(), 1);
  EXPECT_TRUE(k.M0_left_invariant);
  EXPECT_TRUE(k.MR_invariant);
}

TEST(Bimodule, ClosureQuotientRestrict) {
  const auto a = share(make_A(Q));
  const auto ad = adjoint(a);
  const Subspace c = subbimodule_closure(ad, std::vector<VectorX>{a->unit(1)});
  EXPECT_EQ(c.dim(), 1);
  EXPECT_TRUE(is_subbimodule(ad, c));
  EXPECT_FALSE(is_subbimodule(ad, Subspace::from_rows(MatrixX(a->unit(0).transpose()))));
  EXPECT_EQ(quotient(ad, c).dim(), 1);
  EXPECT_EQ(restrict(ad, c).dim(), 1);
  EXPECT_TRUE(axiom_report(quotient(ad, c)).full());
}

TEST(Bimodule, DirectSumAndTensorDims) {
  const auto a = share(make_N(Q));
  const auto ad = adjoint(a);
  EXPECT_EQ(direct_sum(ad, ad).dim(), 4);
  EXPECT_EQ(tensor_product(ad, ad).dim(), 4);
  EXPECT_TRUE(axiom_report(tensor_product(ad, ad)).weak());
}

TEST(Bimodule, DualityOnRandomWeakModules) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    const FieldSpec f = t % 2 ? Q : FieldSpec::prime(5);
    const auto a = share(t % 3 == 0 ? make_A(f) : t % 3 == 1 ? make_N(f) : make_e(f));
    const auto m = random_bimodule(a, 1 + t % 3, false, rng);
    ASSERT_TRUE(axiom_report(m).weak());
    const auto d = duality_morphism_checks(m);
    EXPECT_TRUE(d.all()) << t;
    EXPECT_TRUE(are_isomorphic(dual(dual(m)), m));
  }
}

TEST(Bimodule, RandomFullGeneratorIsFull) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    const auto a = share(make_A(FieldSpec::prime(3)));
    EXPECT_TRUE(axiom_report(random_bimodule(a, 3, true, rng)).full());
  }
}

TEST(Bimodule, Intertwiners) {
  const auto a = share(make_A(Q));
  const auto ad = adjoint(a);
  EXPECT_TRUE(is_intertwiner(ad, ad, MatrixX::Identity(2, 2)));
  EXPECT_EQ(intertwiner_space(ad, ad).dim(), 1);
  Rng rng(1);
  const MatrixX p = random_invertible(Q, 2, rng);
  EXPECT_TRUE(are_isomorphic(ad, conjugate(ad, p)));
  EXPECT_FALSE(are_isomorphic(ad, trivial_bimodule(a, 2)));
}

TEST(Bimodule, HomRequiresWeak) {
  const auto e = share(make_e(Q));
  // lambda_h = lambda_e = 1 breaks LLM: lambda_{he} = lambda_e but [lambda_h, lambda_e] = 0
  const auto a = share(make_A(Q));
  const Bimodule bad(a, 1, {scalar(1), scalar(1)}, {scalar(0), scalar(0)});
  EXPECT_FALSE(axiom_report(bad).weak());
  EXPECT_THROW(hom_bimodule(bad, bad), std::invalid_argument);
  EXPECT_NO_THROW(hom_bimodule(trivial_bimodule(e, 1), trivial_bimodule(e, 2)));
}

TEST(Chop, AdjointA) {
  const auto rep = chop(adjoint(share(make_A(Q))));
  EXPECT_TRUE(rep.certified);
  EXPECT_EQ(rep.strategy, "weight");
  std::multiset<std::string> ids;
  for (const auto& f : rep.factors) ids.insert(*f.registry_id);
  EXPECT_EQ(ids, (std::multiset<std::string>{"F(1,0)^a", "F(0,0)"}));
}

TEST(Chop, ClebschGordan) {
  const auto sl = share(make_sl2(Q));
  const auto l1 = sl2_bimodule(sl, 1, true), l2 = sl2_bimodule(sl, 2, true);
  const auto rep = chop(tensor_product(l1, l2));
  EXPECT_EQ(rep.strategy, "sl2");
  std::multiset<Index> hw;
  for (const auto& f : rep.factors) hw.insert(*f.highest_weight);
  EXPECT_EQ(hw, (std::multiset<Index>{3, 1}));
  const auto r0 = chop(trivial_bimodule(sl, 2));
  for (const auto& f : r0.factors) EXPECT_EQ(*f.registry_id, "L(0)");
}

TEST(Chop, WeakInputIsUncertified) {
  const auto e = share(make_e(Q));
  const auto rep = chop(one_dim_bimodule(e, {Scalar(0)}, {Scalar(1)}));
  EXPECT_FALSE(rep.certified);
  EXPECT_FALSE(rep.note.empty());
}

TEST(Chop, MatchesBruteForceOracle) {
  Rng rng(11);
  const FieldSpec f3 = FieldSpec::prime(3);
  for (int t = 0; t < 15; ++t) {
    const auto a = share(t % 2 ? make_N(f3) : make_abelian(f3, 2));
    const auto m = random_bimodule(a, 1 + t % 3, true, rng);
    const auto rep = chop(m, static_cast<std::uint64_t>(t));
    EXPECT_TRUE(rep.certified);
    std::vector<Bimodule> fs;
    for (const auto& x : rep.factors) fs.push_back(x.module);
    EXPECT_TRUE(same_factor_multiset(fs, bruteforce_composition_factors(m))) << t;
  }
}

TEST(Chop, BruteForceLatticeOfTrivial) {
  const auto a = share(make_e(FieldSpec::prime(2)));
  // every subspace of F_2^2 is invariant: 0, three lines, the whole space
  EXPECT_EQ(bruteforce_invariant_subspaces(trivial_bimodule(a, 2)).size(), 5u);
  EXPECT_THROW(bruteforce_invariant_subspaces(trivial_bimodule(share(make_e(Q)), 1)), std::invalid_argument);
}
