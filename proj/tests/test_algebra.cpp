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

#include <random>

#include "leibniz/algebra.hpp"

using namespace leibniz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

VectorX random_vector(const LeibnizAlgebra& a, std::mt19937_64& rng) {
  VectorX v(a.dim());
  for (Index i = 0; i < a.dim(); ++i) v(i) = a.field().from_int(static_cast<long long>(rng() % 7) - 3);
  return v;
}

// x(yz) = (xy)z + y(xz) on random elements, independent of the basis check.
bool leibniz_on_samples(const LeibnizAlgebra& a, int samples) {
  std::mt19937_64 rng(7);
  for (int s = 0; s < samples; ++s) {
    const VectorX x = random_vector(a, rng), y = random_vector(a, rng), z = random_vector(a, rng);
    const VectorX lhs = a.multiply(x, a.multiply(y, z));
    const VectorX rhs = a.multiply(a.multiply(x, y), z) + a.multiply(y, a.multiply(x, z));
    if (!(lhs == rhs)) return false;
  }
  return true;
}

// span of squares of b_i and b_i + b_j
Subspace squares_span(const LeibnizAlgebra& a) {
  std::vector<VectorX> sq;
  for (Index i = 0; i < a.dim(); ++i)
    for (Index j = i; j < a.dim(); ++j) {
      const VectorX x = a.unit(i) + (i == j ? VectorX(VectorX::Zero(a.dim())) : a.unit(j));
      sq.push_back(a.multiply(x, x));
    }
  return rref_span(sq, a.dim());
}

}  // namespace

TEST(Algebra, BuiltinsAreLeftLeibniz) {
  for (const auto& name : builtin_algebra_names()) {
    for (auto f : {Q, FieldSpec::prime(5)}) {
      const auto a = builtin_algebra(name, f);
      EXPECT_FALSE(validate_left_leibniz(a)) << name;
      EXPECT_TRUE(leibniz_on_samples(a, 30)) << name;
    }
  }
}

TEST(Algebra, ExampleProducts) {
  const auto a = make_A(Q);
  const Index h = a.index_of("h"), e = a.index_of("e");
  EXPECT_EQ(a.product(h, e), a.unit(e));
  EXPECT_TRUE(is_zero_matrix(a.product(e, h)));
  const auto n = make_N(Q);
  EXPECT_EQ(n.product(n.index_of("e"), n.index_of("e")), n.unit(n.index_of("c")));
  EXPECT_THROW(a.index_of("x"), std::invalid_argument);
}

TEST(Algebra, ValidatorFindsBrokenTriple) {
  // x x = y, y x = x fails the left Leibniz identity
  std::vector<std::vector<VectorX>> t(2, std::vector<VectorX>(2, VectorX::Zero(2)));
  t[0][0] = VectorX::Unit(2, 1);
  t[1][0] = VectorX::Unit(2, 0);
  LeibnizAlgebra bad(Q, {"x", "y"}, t);
  EXPECT_TRUE(validate_left_leibniz(bad).has_value());
  EXPECT_FALSE(leibniz_on_samples(bad, 30));
}

TEST(Algebra, LeibnizKernelMatchesSquares) {
  for (const auto& name : builtin_algebra_names()) {
    const auto a = builtin_algebra(name, Q);
    EXPECT_EQ(leibniz_kernel(a), squares_span(a)) << name;
  }
  EXPECT_EQ(leibniz_kernel(make_A(Q)).dim(), 1);
  EXPECT_EQ(leibniz_kernel(make_S(Q)).dim(), 2);
  EXPECT_EQ(leibniz_kernel(make_sl2(Q)).dim(), 0);
}

TEST(Algebra, CanonicalLie) {
  for (const auto& name : builtin_algebra_names()) {
    const auto a = builtin_algebra(name, Q);
    const auto cl = canonical_lie(a);
    EXPECT_TRUE(is_lie(cl.lie)) << name;
    EXPECT_EQ(cl.lie.dim(), a.dim() - cl.kernel.dim());
    EXPECT_TRUE(verify_algebra_hom(a, cl.lie, cl.projection.matrix)) << name;
  }
  EXPECT_TRUE(is_lie(make_sl2(Q)));
  EXPECT_FALSE(is_lie(make_A(Q)));
}

TEST(Algebra, Series) {
  const auto sa = products_and_series(make_A(Q));
  EXPECT_FALSE(sa.is_perfect);
  EXPECT_TRUE(sa.is_solvable);
  const auto ss = products_and_series(make_sl2(Q));
  EXPECT_TRUE(ss.is_perfect);
  EXPECT_FALSE(ss.is_solvable);
  EXPECT_TRUE(products_and_series(make_S(Q)).is_perfect);
}

TEST(Algebra, Sl2HeadAndIrreps) {
  EXPECT_TRUE(has_sl2_head(make_sl2(Q)));
  EXPECT_TRUE(has_sl2_head(make_S(Q)));
  EXPECT_FALSE(has_sl2_head(make_A(Q)));
  EXPECT_THROW(make_sl2(FieldSpec::prime(2)), std::invalid_argument);
  for (Index n = 0; n <= 3; ++n) {
    const auto ops = sl2_irrep(Q, n);
    ASSERT_EQ(ops.size(), 3u);
    EXPECT_EQ(ops[0].rows(), n + 1);
    // [e, f] = h
    EXPECT_EQ(MatrixX(ops[0] * ops[2] - ops[2] * ops[0]), ops[1]);
  }
}

TEST(Algebra, HemiSemidirectRejectsNonModules) {
  const auto g = make_sl2(Q);
  auto ops = sl2_irrep(Q, 1);
  ops[1] = MatrixX::Identity(2, 2);  // breaks [h, e] = 2e
  EXPECT_THROW(hemi_semidirect(g, ops), std::invalid_argument);
}

TEST(Algebra, Registry) {
  EXPECT_EQ(builtin_algebra("abelian:3", Q).dim(), 3);
  EXPECT_EQ(builtin_algebra("S", Q), builtin_algebra("hemi-sl2-L1", Q));
  EXPECT_THROW(builtin_algebra("abelian:x", Q), std::invalid_argument);
  EXPECT_THROW(builtin_algebra("nope", Q), std::invalid_argument);
}
