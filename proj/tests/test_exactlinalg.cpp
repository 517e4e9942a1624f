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

#include "leibniz/linalg.hpp"

using namespace leibniz;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

VectorX vec(const FieldSpec& f, std::initializer_list<long long> xs) {
  VectorX v(static_cast<Index>(xs.size()));
  Index i = 0;
  for (auto x : xs) v(i++) = f.from_int(x);
  return v;
}

MatrixX random_matrix(const FieldSpec& f, Index r, Index c, std::mt19937_64& rng) {
  MatrixX m(r, c);
  for (Index i = 0; i < r; ++i)
    for (Index j = 0; j < c; ++j)
      m(i, j) = f.from_int(static_cast<long long>(rng() % 7) - 3);
  return m;
}

}  // namespace

TEST(Scalar, RationalCanonicalForm) {
  Scalar a = Q.parse_scalar("6/-4");
  EXPECT_EQ(a.to_string(), "-3/2");
  EXPECT_EQ(Q.parse_scalar("4/2").to_string(), "2");
  Scalar b = Q.parse_scalar("7/3");
  EXPECT_TRUE((b * b.inverse()).is_one());
  EXPECT_THROW(Q.parse_scalar("1/0"), std::invalid_argument);
  EXPECT_THROW(Q.parse_scalar("x"), std::invalid_argument);
}

TEST(Scalar, Residues) {
  Scalar a = F5.from_int(-1);
  EXPECT_EQ(a.to_string(), "4");
  EXPECT_EQ((a * a).to_string(), "1");
  EXPECT_EQ((F5.from_int(2).inverse()).to_string(), "3");
  // unbound integer constants adopt the modulus
  EXPECT_EQ((a + Scalar(3)).to_string(), "2");
  EXPECT_TRUE(F5.from_int(5).is_zero());
  EXPECT_THROW(F5.parse_scalar("5"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::prime(4), std::invalid_argument);
  EXPECT_THROW(F5.one() + FieldSpec::prime(3).one(), std::domain_error);
}

TEST(Scalar, FieldParse) {
  EXPECT_TRUE(FieldSpec::parse("Q").is_rational());
  EXPECT_EQ(FieldSpec::parse("Fp:7").characteristic(), 7u);
  EXPECT_THROW(FieldSpec::parse("Fp:9"), std::invalid_argument);
  EXPECT_THROW(FieldSpec::parse("R"), std::invalid_argument);
}

TEST(RrefSpan, Basics) {
  EXPECT_EQ(rref_span<Scalar>({}, 3).dim(), 0);
  auto s = rref_span<Scalar>({vec(Q, {1, 0}), vec(Q, {2, 0})}, 2);
  EXPECT_EQ(s.dim(), 1);
  EXPECT_EQ(s.basis()(0, 0), Scalar(1));
  EXPECT_EQ(rref_span<Scalar>({vec(Q, {1, 1}), vec(Q, {1, -1})}, 2).dim(), 2);
  EXPECT_THROW(rref_span<Scalar>({vec(Q, {1, 1}), vec(Q, {1})}, 2),
               std::invalid_argument);
}

TEST(RrefSpan, CanonicalAndOrderInsensitive) {
  auto a = rref_span<Scalar>({vec(Q, {1, 2, 3}), vec(Q, {0, 1, 1})}, 3);
  auto b = rref_span<Scalar>({vec(Q, {1, 3, 4}), vec(Q, {2, 4, 6})}, 3);
  EXPECT_EQ(a, b);
  EXPECT_EQ(Subspace::from_rows(a.basis()), a);
}

TEST(Nullspace, Examples) {
  EXPECT_EQ(nullspace(MatrixX::Zero(2, 2)).dim(), 2);
  EXPECT_EQ(nullspace(MatrixX::Identity(2, 2)).dim(), 0);
  MatrixX m(2, 2);
  m << Scalar(1), Scalar(1), Scalar(1), Scalar(1);
  auto n = nullspace(m);
  ASSERT_EQ(n.dim(), 1);
  EXPECT_TRUE(n.contains(vec(Q, {1, -1})));
}

TEST(Nullspace, RankNullity) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 20; ++t) {
    for (const auto& f : {Q, F5}) {
      MatrixX m = random_matrix(f, 3, 5, rng);
      auto n = nullspace(m);
      EXPECT_EQ(rank(m) + n.dim(), 5);
      EXPECT_TRUE(is_zero_matrix(m * n.basis().transpose()));
    }
  }
}

TEST(SubspaceOps, SumIntersect) {
  Subspace zero(3);
  auto u = rref_span<Scalar>({vec(Q, {1, 1, 0})}, 3);
  auto v = rref_span<Scalar>({vec(Q, {1, 1, 0}), vec(Q, {0, 0, 1})}, 3);
  EXPECT_EQ(subspace_sum(u, zero), u);
  EXPECT_EQ(subspace_intersect(u, zero).dim(), 0);
  EXPECT_EQ(subspace_intersect(u, v), u);
  auto e1 = rref_span<Scalar>({vec(Q, {1, 0})}, 2);
  auto e2 = rref_span<Scalar>({vec(Q, {0, 1})}, 2);
  EXPECT_TRUE(subspace_sum(e1, e2).is_whole());
  EXPECT_THROW(subspace_sum(e1, u), std::invalid_argument);
}

TEST(SubspaceOps, ModularLaw) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    for (const auto& f : {Q, F5}) {
      auto u = Subspace::from_rows(random_matrix(f, 2, 4, rng));
      auto v = Subspace::from_rows(random_matrix(f, 3, 4, rng));
      auto s = subspace_sum(u, v);
      auto i = subspace_intersect(u, v);
      EXPECT_EQ(s.dim() + i.dim(), u.dim() + v.dim());
      EXPECT_TRUE(u.contains(i));
      EXPECT_TRUE(v.contains(i));
    }
  }
}

TEST(Membership, Coordinates) {
  auto s = rref_span<Scalar>({vec(Q, {1, 0, 2}), vec(Q, {0, 1, 1})}, 3);
  auto c = s.coordinates(vec(Q, {0, 0, 0}));
  ASSERT_TRUE(c);
  EXPECT_TRUE(is_zero_matrix(*c));
  auto d = s.coordinates(vec(Q, {3, -1, 5}));
  ASSERT_TRUE(d);
  EXPECT_EQ(VectorX(s.basis().transpose() * *d), vec(Q, {3, -1, 5}));
  auto e1 = rref_span<Scalar>({vec(Q, {1, 0})}, 2);
  EXPECT_FALSE(e1.coordinates(vec(Q, {0, 1})));
}

TEST(Kron, MixedProduct) {
  EXPECT_EQ(kron(MatrixX(MatrixX::Identity(2, 2)), MatrixX(MatrixX::Identity(3, 3))),
            MatrixX(MatrixX::Identity(6, 6)));
  std::mt19937_64 rng(5);
  MatrixX z = MatrixX::Zero(2, 2);
  EXPECT_TRUE(is_zero_matrix(kron(random_matrix(F5, 2, 2, rng), z)));
  for (int t = 0; t < 10; ++t) {
    MatrixX a = random_matrix(F5, 2, 2, rng), b = random_matrix(F5, 2, 2, rng);
    MatrixX c = random_matrix(F5, 2, 2, rng), d = random_matrix(F5, 2, 2, rng);
    EXPECT_EQ(MatrixX(kron(a, b) * kron(c, d)), kron(MatrixX(a * c), MatrixX(b * d)));
  }
  // index convention: e_i (x) f_j sits at i * dim N + j
  MatrixX a = MatrixX::Zero(2, 2), b = MatrixX::Zero(3, 3);
  a(1, 0) = Scalar(1);
  b(2, 1) = Scalar(1);
  EXPECT_EQ(kron(a, b)(1 * 3 + 2, 0 * 3 + 1), Scalar(1));
}

TEST(Charpoly, Berkowitz) {
  MatrixX m(3, 3);
  m << Scalar(2), Scalar(1), Scalar(0), Scalar(0), Scalar(2), Scalar(0),
      Scalar(0), Scalar(0), Scalar(-3);
  auto p = charpoly(m);
  // (x-2)^2 (x+3) = x^3 - x^2 - 8x + 12
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[1], Scalar(-1));
  EXPECT_EQ(p[2], Scalar(-8));
  EXPECT_EQ(p[3], Scalar(12));
  auto roots = eigenvalues_in_field(m, Q);
  ASSERT_TRUE(roots);
  EXPECT_EQ(roots->size(), 2u);
}

TEST(Charpoly, NonSplitOverQ) {
  MatrixX m(2, 2);
  m << Scalar(0), Scalar(-1), Scalar(1), Scalar(0);
  auto r = eigenvalues_in_field(m, Q);
  ASSERT_TRUE(r);
  EXPECT_TRUE(r->empty());
  MatrixX m5 = m;
  for (Index i = 0; i < 2; ++i)
    for (Index j = 0; j < 2; ++j) m5(i, j) = F5.coerce(m(i, j));
  auto r5 = eigenvalues_in_field(m5, F5);
  ASSERT_TRUE(r5);
  EXPECT_EQ(r5->size(), 2u);  // x^2 + 1 splits mod 5
}

TEST(Quotient, RestrictAndInduce) {
  MatrixX a(2, 2);
  a << Scalar(1), Scalar(1), Scalar(0), Scalar(2);
  auto u = rref_span<Scalar>({vec(Q, {1, 0})}, 2);
  EXPECT_TRUE(is_invariant(u, a));
  EXPECT_EQ(restrict_operator(a, u)(0, 0), Scalar(1));
  EXPECT_EQ(quotient_operator(a, u)(0, 0), Scalar(2));
  auto w = rref_span<Scalar>({vec(Q, {0, 1})}, 2);
  EXPECT_THROW(quotient_operator(a, w), std::invalid_argument);
}
