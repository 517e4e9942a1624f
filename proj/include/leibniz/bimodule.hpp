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

#ifndef LEIBNIZ_BIMODULE_HPP
#define LEIBNIZ_BIMODULE_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "leibniz/algebra.hpp"

namespace leibniz {

using AlgebraPtr = std::shared_ptr<const LeibnizAlgebra>;

inline AlgebraPtr share(LeibnizAlgebra a) {
  return std::make_shared<const LeibnizAlgebra>(std::move(a));
}

// Pair of action families: lambda[i] is x -> b_i . x, rho[i] is x -> x . b_i.
class Bimodule {
 public:
  Bimodule() = default;
  Bimodule(AlgebraPtr algebra, Index dim, std::vector<MatrixX> lambda,
           std::vector<MatrixX> rho);

  const LeibnizAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const FieldSpec& field() const { return algebra_->field(); }
  Index dim() const { return dim_; }
  Index algebra_dim() const { return algebra_->dim(); }
  const std::vector<MatrixX>& lambda() const { return lambda_; }
  const std::vector<MatrixX>& rho() const { return rho_; }
  const MatrixX& lambda(Index i) const { return lambda_[static_cast<std::size_t>(i)]; }
  const MatrixX& rho(Index i) const { return rho_[static_cast<std::size_t>(i)]; }
  // action of an arbitrary algebra element given in coordinates
  MatrixX lambda_of(const VectorX& x) const;
  MatrixX rho_of(const VectorX& x) const;

  friend bool operator==(const Bimodule& a, const Bimodule& b);

 private:
  AlgebraPtr algebra_;
  Index dim_ = 0;
  std::vector<MatrixX> lambda_;
  std::vector<MatrixX> rho_;
};

bool same_algebra(const Bimodule& a, const Bimodule& b);

enum class Axiom { LLM, LML, MLL, ZD };
const char* axiom_name(Axiom a);

struct AxiomFailure {
  Axiom axiom;
  Index i, j;
};

enum class BimoduleKind { None, LeftOnly, Weak, Full };
const char* kind_name(BimoduleKind k);

struct AxiomReport {
  bool llm = true, lml = true, mll = true, zd = true;
  std::optional<AxiomFailure> first_failure;
  // (lml and zd) == (lml and mll)
  bool zd_consistent = true;

  bool weak() const { return llm && lml; }
  bool full() const { return llm && lml && mll; }
  BimoduleKind kind() const;
};

AxiomReport axiom_report(const Bimodule& m);

struct Flags {
  bool symmetric = false, anti_symmetric = false, trivial = false;
};
Flags classify_flags(const Bimodule& m);

Bimodule trivial_bimodule(AlgebraPtr a, Index dim);
Bimodule symmetrize(AlgebraPtr a, const std::vector<MatrixX>& lambda);
Bimodule antisymmetrize(AlgebraPtr a, const std::vector<MatrixX>& lambda);
Bimodule adjoint(AlgebraPtr a);
Bimodule one_dim_bimodule(AlgebraPtr a, const std::vector<Scalar>& left,
                          const std::vector<Scalar>& right);
// L(n)^s or L(n)^a over an algebra with an sl2 head (kernel part acts by 0).
Bimodule sl2_bimodule(AlgebraPtr a, Index n, bool symmetric);

struct Kernels {
  Subspace M0;    // columns of lambda_i + rho_i
  Subspace MR;    // M L: columns of rho_i
  Subspace LM;    // L M: columns of lambda_i
  Subspace Minv;  // M^L: common kernel of rho_i
  bool M0_left_invariant = false;
  bool M0_right_invariant = false;
  bool MR_invariant = false;
  bool Minv_invariant = false;
};

Kernels kernels_and_invariants(const Bimodule& m);

bool is_subbimodule(const Bimodule& m, const Subspace& s);
Subspace subbimodule_closure(const Bimodule& m, const std::vector<VectorX>& seeds);
Subspace subbimodule_closure(const Bimodule& m, const Subspace& seeds);
Bimodule quotient(const Bimodule& m, const Subspace& s);
Bimodule restrict(const Bimodule& m, const Subspace& s);
Bimodule direct_sum(const Bimodule& m, const Bimodule& n);

// Natural tensor product on the kron-ordered basis m_i (x) n_j -> i * dim N + j.
Bimodule tensor_product(const Bimodule& m, const Bimodule& n);

// Hom(M, N) on maps f stored row-major: f_{ab} at index a * dim M + b.
Bimodule hom_bimodule(const Bimodule& m, const Bimodule& n);
Bimodule dual(const Bimodule& m);

// BimoduleHomCandidate: matrix from m to n commuting with all actions.
bool is_intertwiner(const Bimodule& m, const Bimodule& n, const MatrixX& f);
// Space of intertwiners, as row-major vectorized dim N x dim M matrices.
Subspace intertwiner_space(const Bimodule& m, const Bimodule& n);
bool are_isomorphic(const Bimodule& m, const Bimodule& n);

struct DualityChecks {
  bool ev = false, ev_prime = false, coev = false, coev_prime = false;
  bool double_dual = false;
  bool ev_coev_prime_trace = false;  // ev o coev' = dim M
  bool ev_prime_coev_trace = false;  // ev' o coev = dim M
  bool all() const {
    return ev && ev_prime && coev && coev_prime && double_dual && ev_coev_prime_trace &&
           ev_prime_coev_trace;
  }
};

DualityChecks duality_morphism_checks(const Bimodule& m);

// Composition series.
struct CompositionFactor {
  Bimodule module;
  bool symmetric = false;
  bool anti_symmetric = false;
  std::optional<std::string> registry_id;
  std::vector<Scalar> left_weights;   // 1-dim factors: lambda_i values
  std::vector<Scalar> right_weights;  // 1-dim factors: rho_i values
  std::optional<Index> highest_weight;  // sl2 factors
};

struct CompositionReport {
  std::vector<CompositionFactor> factors;
  std::string strategy;
  bool certified = false;
  std::string note;
  Index total_dim() const;
};

CompositionReport chop(const Bimodule& m, std::uint64_t seed = 0);

// All invariant subspaces, by enumeration (prime field, dim <= 4, p <= 7).
std::vector<Subspace> bruteforce_invariant_subspaces(const Bimodule& m);
// Composition factors read off a maximal chain of the brute-force lattice.
std::vector<Bimodule> bruteforce_composition_factors(const Bimodule& m);

// Multiset equality up to isomorphism (factors assumed irreducible).
bool same_factor_multiset(const std::vector<Bimodule>& a, const std::vector<Bimodule>& b);

}  // namespace leibniz

#endif  // LEIBNIZ_BIMODULE_HPP
