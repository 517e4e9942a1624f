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

#ifndef LEIBNIZ_TENSOR_HPP
#define LEIBNIZ_TENSOR_HPP

#include <optional>
#include <string>
#include <vector>

#include "leibniz/bimodule.hpp"

namespace leibniz {

// M (x) N with m_i (x) n_j at index i * dim N + j.
struct TensorBimodule {
  Bimodule module;
  Index left_dim = 0;
  Index right_dim = 0;
};

TensorBimodule tensor_bimodule(const Bimodule& m, const Bimodule& n);

// Span of a (x) b over bases of u and v, inside the kron-ordered space.
Subspace kron_subspace(const Subspace& u, const Subspace& v);

struct TruncationData {
  Subspace S_span;
  Subspace T;
  std::optional<Subspace> T0;  // only for full factors
  bool S_in_T = false;
  bool T_in_T0 = false;
  bool containment_verified = false;
  bool T_equals_T0 = false;
};

// full_only: reject non-full factors (T0 is then undefined).
TruncationData truncation_data(const Bimodule& m, const Bimodule& n, bool full_only = true);

Bimodule trunc_bar(const Bimodule& m, const Bimodule& n);
Bimodule trunc_under(const Bimodule& m, const Bimodule& n);

struct MainCase {
  std::string name;      // "a" .. "d"
  std::string hypothesis;
  Subspace expected;
  bool T_matches = false;
  bool T0_matches = false;
};

struct TheoremMainReport {
  std::vector<MainCase> cases;
  bool ok() const;
};

// Throws when neither factor is symmetric or anti-symmetric.
TheoremMainReport theorem_main_check(const Bimodule& m, const Bimodule& n);

MatrixX flip_matrix(Index m, Index n);

struct StructuralChecks {
  bool flip_is_morphism = false;
  bool associator_is_morphism = false;
  bool units_are_morphisms = false;
  std::optional<bool> flip_descends_to_truncations;
  std::optional<bool> distributivity_dims;
  bool all() const;
};

StructuralChecks structural_checks(const Bimodule& l, const Bimodule& m, const Bimodule& n);

struct NonassociativityWitness {
  Bimodule L, M, N;
  Index bar_left = 0, bar_right = 0;      // (L M) N and L (M N) with trunc_bar
  Index under_left = 0, under_right = 0;  // same with trunc_under
};

// Throws std::invalid_argument for perfect algebras.
NonassociativityWitness nonassociativity_witness(const AlgebraPtr& a);

}  // namespace leibniz

#endif  // LEIBNIZ_TENSOR_HPP
