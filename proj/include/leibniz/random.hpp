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

#ifndef LEIBNIZ_RANDOM_HPP
#define LEIBNIZ_RANDOM_HPP

#include <cstdint>
#include <random>

#include "leibniz/bimodule.hpp"

namespace leibniz {

using Rng = std::mt19937_64;

// Seed from LEIBNIZ_SEED when set, else the given default.
std::uint64_t resolve_seed(std::uint64_t fallback);

Scalar random_scalar(const FieldSpec& f, Rng& rng);
MatrixX random_matrix(const FieldSpec& f, Index rows, Index cols, Rng& rng);
MatrixX random_invertible(const FieldSpec& f, Index n, Rng& rng);

// Random (weak or full) bimodule of the given dimension: an upper block
// triangular extension of 1- and 2-dimensional pieces, conjugated by a random
// change of basis. Off-diagonal blocks are random solutions of the (linear)
// axiom equations.
Bimodule random_bimodule(AlgebraPtr a, Index dim, bool full, Rng& rng);

// Extension of bottom by top with random admissible off-diagonal blocks.
Bimodule random_extension(const Bimodule& top, const Bimodule& bottom, bool full, Rng& rng);

Bimodule conjugate(const Bimodule& m, const MatrixX& p);

}  // namespace leibniz

#endif  // LEIBNIZ_RANDOM_HPP
