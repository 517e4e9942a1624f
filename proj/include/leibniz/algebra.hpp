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

#ifndef LEIBNIZ_ALGEBRA_HPP
#define LEIBNIZ_ALGEBRA_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "leibniz/linalg.hpp"

namespace leibniz {

// Finite-dimensional left Leibniz algebra given by structure constants:
// b_i b_j = sum_k c_{ij}^k b_k.
class LeibnizAlgebra {
 public:
  LeibnizAlgebra() = default;
  // table[i][j] holds the coordinate vector of b_i b_j
  LeibnizAlgebra(FieldSpec field, std::vector<std::string> basis,
                 const std::vector<std::vector<VectorX>>& table);

  const FieldSpec& field() const { return field_; }
  Index dim() const { return static_cast<Index>(basis_.size()); }
  const std::vector<std::string>& basis_names() const { return basis_; }
  Index index_of(std::string_view name) const;

  const VectorX& product(Index i, Index j) const {
    return table_[static_cast<std::size_t>(i * dim() + j)];
  }
  Scalar c(Index i, Index j, Index k) const { return product(i, j)(k); }
  VectorX multiply(const VectorX& x, const VectorX& y) const;
  VectorX unit(Index i) const;

  friend bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b);

 private:
  FieldSpec field_;
  std::vector<std::string> basis_;
  std::vector<VectorX> table_;
};

struct Triple {
  Index i, j, k;
  friend bool operator==(const Triple&, const Triple&) = default;
};

// First basis triple where x(yz) = (xy)z + y(xz) fails, if any.
std::optional<Triple> validate_left_leibniz(const LeibnizAlgebra& a);
// Antisymmetry and Jacobi on basis triples.
std::optional<Triple> validate_lie(const LeibnizAlgebra& a);
bool is_lie(const LeibnizAlgebra& a);

struct MultOps {
  std::vector<MatrixX> left;   // (L_i)_{k,j} = c_{ij}^k
  std::vector<MatrixX> right;  // (R_i)_{k,j} = c_{ji}^k
};

MultOps mult_ops(const LeibnizAlgebra& a);

Subspace leibniz_kernel(const LeibnizAlgebra& a);

struct AlgebraMorphismData {
  Index domain_dim = 0;
  Index codomain_dim = 0;
  MatrixX matrix;
  bool homomorphism = false;
};

bool verify_algebra_hom(const LeibnizAlgebra& dom, const LeibnizAlgebra& cod,
                        const MatrixX& matrix);

// Quotient by a two-sided ideal; basis = the ideal's free coordinates.
struct QuotientAlgebra {
  LeibnizAlgebra algebra;
  AlgebraMorphismData projection;
};

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& ideal);

struct CanonicalLie {
  LeibnizAlgebra lie;
  AlgebraMorphismData projection;
  Subspace kernel;
};

CanonicalLie canonical_lie(const LeibnizAlgebra& a);

struct SeriesReport {
  Subspace product_span;
  bool is_perfect = false;
  std::vector<Index> derived_dims;
  bool is_solvable = false;
};

SeriesReport products_and_series(const LeibnizAlgebra& a);

// Builders.
LeibnizAlgebra make_A(const FieldSpec& f);
LeibnizAlgebra make_N(const FieldSpec& f);
LeibnizAlgebra make_e(const FieldSpec& f);
LeibnizAlgebra make_abelian(const FieldSpec& f, Index n);
LeibnizAlgebra make_sl2(const FieldSpec& f);
// g must be a Lie algebra and action[i] the operator of b_i on a left g-module.
LeibnizAlgebra hemi_semidirect(const LeibnizAlgebra& g,
                               const std::vector<MatrixX>& action);
// Action matrices (e, h, f) of the highest-weight module L(n).
std::vector<MatrixX> sl2_irrep(const FieldSpec& f, Index n);
LeibnizAlgebra make_S(const FieldSpec& f);

// "A", "N", "e", "sl2", "hemi-sl2-L1", "abelian:<n>"
LeibnizAlgebra builtin_algebra(std::string_view name, const FieldSpec& f);
std::vector<std::string> builtin_algebra_names();

// true when the first three basis vectors multiply like sl2 in (e, h, f)
// order and the remaining ones span the Leibniz kernel.
bool has_sl2_head(const LeibnizAlgebra& a);

}  // namespace leibniz

#endif  // LEIBNIZ_ALGEBRA_HPP
