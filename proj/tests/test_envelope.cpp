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

#include "leibniz/envelope.hpp"

using namespace leibniz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Index binom(Index n, Index k) {
  Index r = 1;
  for (Index i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST(NcPoly, Arithmetic) {
  const NcPoly x = nc_word({0}, Scalar(1)), y = nc_word({1}, Scalar(1));
  const NcPoly xy = nc_mul(x, y), yx = nc_mul(y, x);
  EXPECT_NE(xy, yx);
  const NcPoly c = nc_add(xy, yx, Scalar(-1));
  EXPECT_EQ(c.size(), 2u);
  EXPECT_EQ(nc_degree(c), 2u);
  EXPECT_TRUE(nc_add(c, c, Scalar(-1)).empty());
}

TEST(SparseEchelon, RankAndMembership) {
  SparseEchelon<Word, DegLex> e;
  const NcPoly a = nc_add(nc_word({0}, Scalar(1)), nc_word({1}, Scalar(1)), Scalar(1));
  const NcPoly b = nc_add(nc_word({0}, Scalar(1)), nc_word({1}, Scalar(1)), Scalar(-1));
  EXPECT_TRUE(e.insert(a));
  EXPECT_TRUE(e.insert(b));
  EXPECT_FALSE(e.insert(nc_word({0}, Scalar(3))));
  EXPECT_EQ(e.size(), 2u);
  EXPECT_FALSE(e.contains(nc_word({0, 1}, Scalar(1))));
}

TEST(Envelope, FreeAlgebraIsGeometric) {
  for (int n = 1; n <= 3; ++n) {
    const auto p = free_presentation(Q, n, 3);
    const auto dims = filtered_dims(p, 3);
    Index total = 0, pw = 1;
    for (int d = 0; d <= 3; ++d, pw *= n) {
      total += pw;
      EXPECT_EQ(dims[static_cast<std::size_t>(d)], total) << n << " " << d;
    }
  }
}

TEST(Envelope, WeakEnvelopesOfAbelianAlgebras) {
  // l_x central and commuting, r_x free: degree-n slice has sum_i (i + k - 1 choose k - 1) k^(n-i)
  for (Index k = 1; k <= 2; ++k) {
    const auto a = share(k == 1 ? make_e(Q) : make_abelian(Q, 2));
    const auto dims = filtered_dims(build_presentation(a, Which::ULWeak, 3), 3);
    Index total = 0;
    for (Index d = 0; d <= 3; ++d) {
      Index pw = 1;
      for (Index i = d; i >= 0; --i, pw *= k) total += binom(i + k - 1, k - 1) * pw;
      EXPECT_EQ(dims[static_cast<std::size_t>(d)], total) << k << " " << d;
    }
  }
}

TEST(Envelope, PbwForSl2) {
  const auto p = build_presentation(share(make_sl2(Q)), Which::ULie, 3);
  EXPECT_EQ(filtered_dims(p, 3), (std::vector<Index>{1, 4, 10, 20}));
}

TEST(Envelope, ULieNeedsLie) {
  EXPECT_THROW(build_presentation(share(make_A(Q)), Which::ULie), std::invalid_argument);
}

TEST(Envelope, PrimitivesOfA) {
  const auto a = share(make_A(Q));
  EXPECT_EQ(degree_one_primitive_dim(build_presentation(a, Which::UL)), 3);
}

TEST(Envelope, SectionIdentitiesAndMaps) {
  for (const char* name : {"A", "N", "e", "sl2"}) {
    const auto e = build_envelopes(share(builtin_algebra(name, Q)));
    const auto s = check_section_identities(e);
    EXPECT_TRUE(s.d0s0 && s.d1s0 && s.kernel_product) << name;
    EXPECT_TRUE(verify_hom(make_d0(e))) << name;
    EXPECT_TRUE(verify_hom(make_d1(e))) << name;
    EXPECT_TRUE(verify_hom(make_s0(e))) << name;
    EXPECT_TRUE(verify_hom(make_omega(e))) << name;
  }
}

TEST(Envelope, HopfStructure) {
  const auto a = share(make_A(Q));
  const auto weak = build_presentation(a, Which::ULWeak);
  EXPECT_TRUE(hopf_check(weak).all());
  auto h = primitive_hopf_data(weak);
  h.antipode[0] = nc_word({0}, Scalar(1));  // S(x) = x instead of -x
  EXPECT_FALSE(hopf_check(weak, h).antipode);
  EXPECT_THROW(hopf_check(build_presentation(a, Which::UL)), std::invalid_argument);
  EXPECT_TRUE(hopf_check(build_presentation(share(make_sl2(Q)), Which::ULie)).all());
}

TEST(Envelope, ActionMatchesMatrixProducts) {
  const auto a = share(make_N(Q));
  const auto p = build_presentation(a, Which::ULWeak);
  const auto m = adjoint(a);
  const Index k = a->dim();
  auto op = [&](int g) -> MatrixX { return g < k ? m.lambda(g) : m.rho(g - k); };
  for (int g1 = 0; g1 < 2 * k; ++g1)
    for (int g2 = 0; g2 < 2 * k; ++g2)
      for (Index b = 0; b < m.dim(); ++b) {
        const VectorX v = VectorX::Unit(m.dim(), b);
        EXPECT_EQ(act(p, Word{g1, g2}, m, v), VectorX(op(g1) * op(g2) * v));
      }
  // relations act by zero on a full module
  for (const auto& r : p.relations)
    for (Index b = 0; b < m.dim(); ++b)
      EXPECT_TRUE(is_zero_matrix(act(p, r, m, VectorX::Unit(m.dim(), b))));
}

TEST(Envelope, ParseWhich) {
  EXPECT_EQ(parse_which("ulweak"), Which::ULWeak);
  EXPECT_THROW(parse_which("x"), std::invalid_argument);
}
