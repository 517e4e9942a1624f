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

#include "leibniz/random.hpp"
#include "leibniz/tensor.hpp"

using namespace leibniz;

namespace {

const FieldSpec Q = FieldSpec::rationals();

VectorX kron_vec(const VectorX& a, const VectorX& b) {
  VectorX r(a.size() * b.size());
  for (Index i = 0; i < a.size(); ++i)
    for (Index j = 0; j < b.size(); ++j) r(i * b.size() + j) = a(i) * b(j);
  return r;
}

// S from its generators (xm + mx) (x) ny + my (x) (xn + nx), then a naive
// fixed-point closure under every operator of M (x) N.
Subspace closure_oracle(const Bimodule& m, const Bimodule& n) {
  std::vector<VectorX> vs;
  for (Index x = 0; x < m.algebra_dim(); ++x)
    for (Index y = 0; y < m.algebra_dim(); ++y)
      for (Index a = 0; a < m.dim(); ++a)
        for (Index b = 0; b < n.dim(); ++b) {
          const VectorX ma = VectorX::Unit(m.dim(), a), nb = VectorX::Unit(n.dim(), b);
          vs.push_back(kron_vec((m.lambda(x) + m.rho(x)) * ma, n.rho(y) * nb) +
                       kron_vec(m.rho(y) * ma, (n.lambda(x) + n.rho(x)) * nb));
        }
  const Bimodule t = tensor_product(m, n);
  Subspace s = rref_span(vs, t.dim());
  for (;;) {
    std::vector<VectorX> next;
    for (Index r = 0; r < s.dim(); ++r) {
      const VectorX v = s.basis().row(r).transpose();
      next.push_back(v);
      for (Index x = 0; x < t.algebra_dim(); ++x) {
        next.push_back(t.lambda(x) * v);
        next.push_back(t.rho(x) * v);
      }
    }
    Subspace grown = rref_span(next, t.dim());
    if (grown.dim() == s.dim()) return grown;
    s = grown;
  }
}

std::vector<Bimodule> full_samples(const AlgebraPtr& a) {
  const Index k = a->dim();
  std::vector<MatrixX> lam(static_cast<std::size_t>(k), MatrixX::Zero(1, 1));
  const auto chars = annihilator(products_and_series(*a).product_span);
  std::vector<Bimodule> out{adjoint(a), trivial_bimodule(a, 1)};
  if (chars.dim() > 0) {
    for (Index i = 0; i < k; ++i) lam[static_cast<std::size_t>(i)](0, 0) = chars.basis()(0, i);
    out.push_back(symmetrize(a, lam));
    out.push_back(antisymmetrize(a, lam));
  }
  return out;
}

}  // namespace

TEST(Tensor, TMatchesClosureOracle) {
  for (const char* name : {"A", "N", "e", "abelian:2"}) {
    const auto a = share(builtin_algebra(name, Q));
    const auto ms = full_samples(a);
    for (const auto& m : ms)
      for (const auto& n : ms) {
        const auto td = truncation_data(m, n);
        EXPECT_EQ(td.T, closure_oracle(m, n)) << name;
        EXPECT_TRUE(td.containment_verified) << name;
      }
  }
}

TEST(Tensor, AdjointAExample) {
  const auto a = share(make_A(Q));
  const auto ad = adjoint(a);
  const auto td = truncation_data(ad, ad);
  ASSERT_TRUE(td.T0.has_value());
  EXPECT_EQ(trunc_bar(ad, ad).dim(), 4 - td.T.dim());
  EXPECT_EQ(trunc_under(ad, ad).dim(), 4 - td.T0->dim());
  EXPECT_TRUE(axiom_report(trunc_bar(ad, ad)).full());
  EXPECT_TRUE(axiom_report(trunc_under(ad, ad)).full());
}

TEST(Tensor, MainTheoremCases) {
  for (const char* name : {"A", "N", "e"}) {
    const auto a = share(builtin_algebra(name, Q));
    const auto ms = full_samples(a);
    for (const auto& m : ms)
      for (const auto& n : ms) {
        const auto fm = classify_flags(m), fn = classify_flags(n);
        if (!fm.symmetric && !fm.anti_symmetric && !fn.symmetric && !fn.anti_symmetric) {
          EXPECT_THROW(theorem_main_check(m, n), std::invalid_argument);
          continue;
        }
        EXPECT_TRUE(theorem_main_check(m, n).ok()) << name;
      }
  }
}

TEST(Tensor, TruncUnderNeedsFullFactors) {
  const auto e = share(make_e(Q));
  const auto weak = one_dim_bimodule(e, {Scalar(0)}, {Scalar(1)});
  EXPECT_THROW(trunc_under(weak, weak), std::invalid_argument);
  EXPECT_NO_THROW(trunc_bar(weak, weak));
}

TEST(Tensor, FlipIsInvolution) {
  for (Index m = 1; m <= 3; ++m)
    for (Index n = 1; n <= 3; ++n) {
      const MatrixX g = flip_matrix(m, n);
      EXPECT_EQ(MatrixX(flip_matrix(n, m) * g), MatrixX(MatrixX::Identity(m * n, m * n)));
    }
}

TEST(Tensor, KronSubspace) {
  const Subspace u = Subspace::whole(2), v = rref_span<Scalar>({VectorX::Unit(3, 1)}, 3);
  const Subspace k = kron_subspace(u, v);
  EXPECT_EQ(k.dim(), 2);
  EXPECT_TRUE(k.contains(kron_vec(VectorX::Unit(2, 1), VectorX::Unit(3, 1))));
  EXPECT_FALSE(k.contains(kron_vec(VectorX::Unit(2, 1), VectorX::Unit(3, 0))));
}

TEST(Tensor, StructuralChecksOnRandomModules) {
  Rng rng(17);
  const auto a = share(make_N(FieldSpec::prime(5)));
  for (int t = 0; t < 4; ++t) {
    const auto l = random_bimodule(a, 1 + t % 2, true, rng);
    const auto m = random_bimodule(a, 2, true, rng);
    const auto n = random_bimodule(a, 1, true, rng);
    EXPECT_TRUE(structural_checks(l, m, n).all()) << t;
  }
}

TEST(Tensor, NonassociativityWitness) {
  const auto w = nonassociativity_witness(share(make_A(Q)));
  EXPECT_NE(w.bar_left, w.bar_right);
  EXPECT_THROW(nonassociativity_witness(share(make_sl2(Q))), std::invalid_argument);
}

TEST(Tensor, DifferentAlgebrasRejected) {
  const auto m = adjoint(share(make_A(Q)));
  const auto n = adjoint(share(make_N(Q)));
  EXPECT_THROW(truncation_data(m, n), std::invalid_argument);
}
