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

#include "leibniz/tensor.hpp"

#include <stdexcept>

namespace leibniz {

namespace {

MatrixX stack_cols(const std::vector<MatrixX>& ms, Index rows) {
  Index cols = 0;
  for (const auto& m : ms) cols += m.cols();
  MatrixX out(rows, cols);
  Index c = 0;
  for (const auto& m : ms) {
    out.middleCols(c, m.cols()) = m;
    c += m.cols();
  }
  return out;
}

void require_weak(const Bimodule& m) {
  if (!axiom_report(m).weak()) throw std::invalid_argument("factor is not a weak bimodule");
}

void require_full(const Bimodule& m) {
  if (!axiom_report(m).full())
    throw std::invalid_argument("factor is not a full bimodule (T0 is undefined)");
}

Subspace image_under(const MatrixX& a, const Subspace& s) {
  return column_space(MatrixX(a * s.basis().transpose()));
}

}  // namespace

TensorBimodule tensor_bimodule(const Bimodule& m, const Bimodule& n) {
  require_weak(m);
  require_weak(n);
  return {tensor_product(m, n), m.dim(), n.dim()};
}

Subspace kron_subspace(const Subspace& u, const Subspace& v) {
  const Index amb = u.ambient_dim() * v.ambient_dim();
  if (u.dim() == 0 || v.dim() == 0) return Subspace(amb);
  MatrixX rows(u.dim() * v.dim(), amb);
  for (Index a = 0; a < u.dim(); ++a)
    for (Index b = 0; b < v.dim(); ++b)
      rows.row(a * v.dim() + b) = kron(MatrixX(u.basis().row(a)), MatrixX(v.basis().row(b)));
  return Subspace::from_rows(rows);
}

TruncationData truncation_data(const Bimodule& m, const Bimodule& n, bool full_only) {
  if (!same_algebra(m, n)) throw std::invalid_argument("bimodules over different algebras");
  const bool full = axiom_report(m).full() && axiom_report(n).full();
  if (full_only) {
    require_full(m);
    require_full(n);
  } else {
    require_weak(m);
    require_weak(n);
  }
  const Index k = m.algebra_dim();
  const Index amb = m.dim() * n.dim();
  TruncationData td;
  std::vector<MatrixX> gens;
  for (Index i = 0; i < k; ++i) {
    const MatrixX sm = m.lambda(i) + m.rho(i);
    const MatrixX sn = n.lambda(i) + n.rho(i);
    for (Index j = 0; j < k; ++j)
      gens.push_back(kron(sm, n.rho(j)) + kron(m.rho(j), sn));
  }
  td.S_span = column_space(stack_cols(gens, amb));
  Bimodule t = tensor_product(m, n);
  td.T = subbimodule_closure(t, td.S_span);
  td.S_in_T = td.T.contains(td.S_span);
  if (full) {
    Kernels km = kernels_and_invariants(m), kn = kernels_and_invariants(n);
    td.T0 = subspace_sum(kron_subspace(km.M0, kn.MR), kron_subspace(km.MR, kn.M0));
    td.T_in_T0 = td.T0->contains(td.T);
    td.containment_verified = td.S_in_T && td.T_in_T0;
    td.T_equals_T0 = td.T == *td.T0;
  } else {
    td.containment_verified = td.S_in_T;
  }
  return td;
}

Bimodule trunc_bar(const Bimodule& m, const Bimodule& n) {
  auto td = truncation_data(m, n, false);
  return quotient(tensor_product(m, n), td.T);
}

Bimodule trunc_under(const Bimodule& m, const Bimodule& n) {
  auto td = truncation_data(m, n, true);
  return quotient(tensor_product(m, n), *td.T0);
}

bool TheoremMainReport::ok() const {
  if (cases.empty()) return false;
  for (const auto& c : cases)
    if (!c.T_matches || !c.T0_matches) return false;
  return true;
}

TheoremMainReport theorem_main_check(const Bimodule& m, const Bimodule& n) {
  Flags fm = classify_flags(m), fn = classify_flags(n);
  if (!fm.symmetric && !fm.anti_symmetric && !fn.symmetric && !fn.anti_symmetric)
    throw std::invalid_argument("theorem_main_check: neither factor is symmetric or anti-symmetric");
  auto td = truncation_data(m, n, true);
  Kernels km = kernels_and_invariants(m), kn = kernels_and_invariants(n);
  TheoremMainReport rep;
  auto add = [&](const char* name, const char* hyp, Subspace expected) {
    MainCase c{name, hyp, std::move(expected)};
    c.T_matches = td.T == c.expected;
    c.T0_matches = *td.T0 == c.expected;
    rep.cases.push_back(std::move(c));
  };
  if (fm.symmetric) add("a", "M symmetric", kron_subspace(km.LM, kn.M0));
  if (fm.anti_symmetric) add("b", "M anti-symmetric", kron_subspace(km.LM, kn.MR));
  if (fn.symmetric) add("c", "N symmetric", kron_subspace(km.M0, kn.LM));
  if (fn.anti_symmetric) add("d", "N anti-symmetric", kron_subspace(km.MR, kn.LM));
  return rep;
}

MatrixX flip_matrix(Index m, Index n) {
  MatrixX p = MatrixX::Zero(m * n, m * n);
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < n; ++j) p(j * m + i, i * n + j) = Scalar(1);
  return p;
}

bool StructuralChecks::all() const {
  return flip_is_morphism && associator_is_morphism && units_are_morphisms &&
         flip_descends_to_truncations.value_or(true) && distributivity_dims.value_or(true);
}

StructuralChecks structural_checks(const Bimodule& l, const Bimodule& m, const Bimodule& n) {
  StructuralChecks sc;
  Bimodule mn = tensor_product(m, n), nm = tensor_product(n, m);
  const MatrixX gamma = flip_matrix(m.dim(), n.dim());
  sc.flip_is_morphism = is_intertwiner(mn, nm, gamma);
  Bimodule lm_n = tensor_product(tensor_product(l, m), n);
  Bimodule l_mn = tensor_product(l, mn);
  const Index d3 = l.dim() * m.dim() * n.dim();
  sc.associator_is_morphism = is_intertwiner(lm_n, l_mn, MatrixX::Identity(d3, d3));
  Bimodule unit = trivial_bimodule(m.algebra_ptr(), 1);
  const MatrixX id = MatrixX::Identity(m.dim(), m.dim());
  sc.units_are_morphisms = is_intertwiner(tensor_product(unit, m), m, id) &&
                           is_intertwiner(tensor_product(m, unit), m, id);
  const bool full = axiom_report(l).full() && axiom_report(m).full() && axiom_report(n).full();
  if (full) {
    auto t_mn = truncation_data(m, n), t_nm = truncation_data(n, m);
    sc.flip_descends_to_truncations =
        image_under(gamma, t_mn.T) == t_nm.T && image_under(gamma, *t_mn.T0) == *t_nm.T0;
    Bimodule sum = direct_sum(m, n);
    sc.distributivity_dims =
        trunc_bar(l, sum).dim() == trunc_bar(l, m).dim() + trunc_bar(l, n).dim() &&
        trunc_under(l, sum).dim() == trunc_under(l, m).dim() + trunc_under(l, n).dim();
  }
  return sc;
}

NonassociativityWitness nonassociativity_witness(const AlgebraPtr& a) {
  auto series = products_and_series(*a);
  if (series.is_perfect)
    throw std::invalid_argument("algebra is perfect; no functional vanishes on LL");
  Subspace chars = annihilator(series.product_span);
  const VectorX lam = chars.basis().row(0).transpose();
  std::vector<MatrixX> plus, minus;
  for (Index i = 0; i < a->dim(); ++i) {
    plus.push_back(MatrixX::Constant(1, 1, lam(i)));
    minus.push_back(MatrixX::Constant(1, 1, -lam(i)));
  }
  NonassociativityWitness w{symmetrize(a, plus), symmetrize(a, minus), antisymmetrize(a, plus)};
  w.bar_left = trunc_bar(trunc_bar(w.L, w.M), w.N).dim();
  w.bar_right = trunc_bar(w.L, trunc_bar(w.M, w.N)).dim();
  w.under_left = trunc_under(trunc_under(w.L, w.M), w.N).dim();
  w.under_right = trunc_under(w.L, trunc_under(w.M, w.N)).dim();
  return w;
}

}  // namespace leibniz
