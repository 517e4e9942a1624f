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

#include "leibniz/bimodule.hpp"

#include <stdexcept>

namespace leibniz {

namespace {

MatrixX zeros(const FieldSpec& f, Index r, Index c) {
  return MatrixX::Constant(r, c, f.zero());
}

MatrixX identity(const FieldSpec& f, Index n) {
  MatrixX m = zeros(f, n, n);
  for (Index i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

MatrixX coerce(const FieldSpec& f, const MatrixX& m) {
  MatrixX out(m.rows(), m.cols());
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i) out(i, j) = f.coerce(m(i, j));
  return out;
}

MatrixX stack_rows(const std::vector<MatrixX>& ms, Index cols) {
  Index rows = 0;
  for (const auto& m : ms) rows += m.rows();
  MatrixX out(rows, cols);
  Index r = 0;
  for (const auto& m : ms) {
    out.middleRows(r, m.rows()) = m;
    r += m.rows();
  }
  return out;
}

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

void require_same_algebra(const Bimodule& m, const Bimodule& n) {
  if (!same_algebra(m, n)) throw std::invalid_argument("bimodules over different algebras");
}

void require_weak(const Bimodule& m, const char* what) {
  auto r = axiom_report(m);
  if (!r.weak()) throw std::invalid_argument(std::string(what) + ": input is not a weak bimodule");
}

}  // namespace

Bimodule::Bimodule(AlgebraPtr algebra, Index dim, std::vector<MatrixX> lambda,
                   std::vector<MatrixX> rho)
    : algebra_(std::move(algebra)), dim_(dim) {
  if (!algebra_) throw std::invalid_argument("bimodule without algebra");
  const auto n = static_cast<std::size_t>(algebra_->dim());
  if (lambda.size() != n || rho.size() != n)
    throw std::invalid_argument("need one lambda and one rho matrix per basis element");
  for (std::size_t i = 0; i < n; ++i) {
    if (lambda[i].rows() != dim || lambda[i].cols() != dim || rho[i].rows() != dim ||
        rho[i].cols() != dim)
      throw std::invalid_argument("action matrix " + std::to_string(i) + " has wrong shape");
    lambda_.push_back(coerce(field(), lambda[i]));
    rho_.push_back(coerce(field(), rho[i]));
  }
}

MatrixX Bimodule::lambda_of(const VectorX& x) const {
  MatrixX out = zeros(field(), dim_, dim_);
  for (Index k = 0; k < x.size(); ++k)
    if (!x(k).is_zero()) out += x(k) * lambda(k);
  return out;
}

MatrixX Bimodule::rho_of(const VectorX& x) const {
  MatrixX out = zeros(field(), dim_, dim_);
  for (Index k = 0; k < x.size(); ++k)
    if (!x(k).is_zero()) out += x(k) * rho(k);
  return out;
}

bool operator==(const Bimodule& a, const Bimodule& b) {
  return same_algebra(a, b) && a.dim_ == b.dim_ && a.lambda_ == b.lambda_ && a.rho_ == b.rho_;
}

bool same_algebra(const Bimodule& a, const Bimodule& b) {
  return a.algebra_ptr() == b.algebra_ptr() || a.algebra() == b.algebra();
}

const char* axiom_name(Axiom a) {
  switch (a) {
    case Axiom::LLM: return "LLM";
    case Axiom::LML: return "LML";
    case Axiom::MLL: return "MLL";
    case Axiom::ZD: return "ZD";
  }
  return "?";
}

const char* kind_name(BimoduleKind k) {
  switch (k) {
    case BimoduleKind::None: return "none";
    case BimoduleKind::LeftOnly: return "left-only";
    case BimoduleKind::Weak: return "weak";
    case BimoduleKind::Full: return "full";
  }
  return "?";
}

BimoduleKind AxiomReport::kind() const {
  if (full()) return BimoduleKind::Full;
  if (weak()) return BimoduleKind::Weak;
  if (llm) return BimoduleKind::LeftOnly;
  return BimoduleKind::None;
}

AxiomReport axiom_report(const Bimodule& m) {
  AxiomReport rep;
  const Index n = m.algebra_dim();
  const auto& a = m.algebra();
  auto fail = [&](bool& flag, Axiom ax, Index i, Index j) {
    flag = false;
    if (!rep.first_failure) rep.first_failure = AxiomFailure{ax, i, j};
  };
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      const VectorX& xy = a.product(i, j);
      const MatrixX& li = m.lambda(i);
      const MatrixX& lj = m.lambda(j);
      const MatrixX& ri = m.rho(i);
      const MatrixX& rj = m.rho(j);
      if (rep.llm && !(m.lambda_of(xy) == MatrixX(li * lj - lj * li)))
        fail(rep.llm, Axiom::LLM, i, j);
      if (rep.lml && !(m.rho_of(xy) == MatrixX(li * rj - rj * li)))
        fail(rep.lml, Axiom::LML, i, j);
      // (m x) y = m (xy) - x (m y)
      if (rep.mll && !(MatrixX(rj * ri) == MatrixX(m.rho_of(xy) - li * rj)))
        fail(rep.mll, Axiom::MLL, i, j);
      if (rep.zd && !is_zero_matrix(rj * (li + ri))) fail(rep.zd, Axiom::ZD, i, j);
    }
  rep.zd_consistent = (rep.lml && rep.zd) == (rep.lml && rep.mll);
  return rep;
}

Flags classify_flags(const Bimodule& m) {
  Flags f;
  f.symmetric = true;
  f.anti_symmetric = true;
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    if (!is_zero_matrix(m.rho(i) + m.lambda(i))) f.symmetric = false;
    if (!is_zero_matrix(m.rho(i))) f.anti_symmetric = false;
  }
  f.trivial = f.symmetric && f.anti_symmetric;
  return f;
}

Bimodule trivial_bimodule(AlgebraPtr a, Index dim) {
  const auto& f = a->field();
  std::vector<MatrixX> z(static_cast<std::size_t>(a->dim()), zeros(f, dim, dim));
  return Bimodule(std::move(a), dim, z, z);
}

namespace {

void require_llm(const AlgebraPtr& a, const std::vector<MatrixX>& lambda, Index dim) {
  std::vector<MatrixX> z(lambda.size(), zeros(a->field(), dim, dim));
  Bimodule probe(a, dim, lambda, z);
  if (!axiom_report(probe).llm) throw std::invalid_argument("left action fails LLM");
}

Index action_dim(const AlgebraPtr& a, const std::vector<MatrixX>& lambda) {
  if (static_cast<Index>(lambda.size()) != a->dim())
    throw std::invalid_argument("need one matrix per basis element");
  return lambda.empty() ? 0 : lambda.front().rows();
}

}  // namespace

Bimodule symmetrize(AlgebraPtr a, const std::vector<MatrixX>& lambda) {
  const Index d = action_dim(a, lambda);
  require_llm(a, lambda, d);
  std::vector<MatrixX> rho;
  for (const auto& l : lambda) rho.push_back(-l);
  return Bimodule(std::move(a), d, lambda, rho);
}

Bimodule antisymmetrize(AlgebraPtr a, const std::vector<MatrixX>& lambda) {
  const Index d = action_dim(a, lambda);
  require_llm(a, lambda, d);
  std::vector<MatrixX> rho(lambda.size(), zeros(a->field(), d, d));
  return Bimodule(std::move(a), d, lambda, rho);
}

Bimodule adjoint(AlgebraPtr a) {
  auto ops = mult_ops(*a);
  const Index d = a->dim();
  return Bimodule(std::move(a), d, ops.left, ops.right);
}

Bimodule one_dim_bimodule(AlgebraPtr a, const std::vector<Scalar>& left,
                          const std::vector<Scalar>& right) {
  const auto n = static_cast<std::size_t>(a->dim());
  if (left.size() != n || right.size() != n)
    throw std::invalid_argument("need one functional value per basis element");
  std::vector<MatrixX> l, r;
  for (std::size_t i = 0; i < n; ++i) {
    l.push_back(MatrixX::Constant(1, 1, a->field().coerce(left[i])));
    r.push_back(MatrixX::Constant(1, 1, a->field().coerce(right[i])));
  }
  return Bimodule(std::move(a), 1, l, r);
}

Bimodule sl2_bimodule(AlgebraPtr a, Index n, bool symmetric) {
  if (!has_sl2_head(*a)) throw std::invalid_argument("algebra has no sl2 head");
  auto efh = sl2_irrep(a->field(), n);
  std::vector<MatrixX> lambda = efh;
  for (Index k = 3; k < a->dim(); ++k) lambda.push_back(zeros(a->field(), n + 1, n + 1));
  return symmetric ? symmetrize(std::move(a), lambda) : antisymmetrize(std::move(a), lambda);
}

Kernels kernels_and_invariants(const Bimodule& m) {
  const Index d = m.dim();
  const Index n = m.algebra_dim();
  Kernels k;
  std::vector<MatrixX> sums, rhos, lams;
  for (Index i = 0; i < n; ++i) {
    sums.push_back(m.lambda(i) + m.rho(i));
    rhos.push_back(m.rho(i));
    lams.push_back(m.lambda(i));
  }
  k.M0 = column_space(stack_cols(sums, d));
  k.MR = column_space(stack_cols(rhos, d));
  k.LM = column_space(stack_cols(lams, d));
  k.Minv = n == 0 ? Subspace::whole(d) : nullspace(stack_rows(rhos, d));
  k.M0_left_invariant = true;
  k.M0_right_invariant = true;
  for (Index i = 0; i < n; ++i) {
    k.M0_left_invariant = k.M0_left_invariant && is_invariant(k.M0, m.lambda(i));
    k.M0_right_invariant = k.M0_right_invariant && is_invariant(k.M0, m.rho(i));
  }
  k.MR_invariant = is_subbimodule(m, k.MR);
  k.Minv_invariant = is_subbimodule(m, k.Minv);
  return k;
}

bool is_subbimodule(const Bimodule& m, const Subspace& s) {
  for (Index i = 0; i < m.algebra_dim(); ++i)
    if (!is_invariant(s, m.lambda(i)) || !is_invariant(s, m.rho(i))) return false;
  return true;
}

Subspace subbimodule_closure(const Bimodule& m, const Subspace& seeds) {
  if (seeds.ambient_dim() != m.dim()) throw std::invalid_argument("seed length mismatch");
  Subspace s = seeds;
  while (true) {
    std::vector<MatrixX> blocks{s.basis().transpose()};
    for (Index i = 0; i < m.algebra_dim(); ++i) {
      blocks.push_back(m.lambda(i) * s.basis().transpose());
      blocks.push_back(m.rho(i) * s.basis().transpose());
    }
    Subspace next = column_space(stack_cols(blocks, m.dim()));
    if (next.dim() == s.dim()) return next;
    s = std::move(next);
  }
}

Subspace subbimodule_closure(const Bimodule& m, const std::vector<VectorX>& seeds) {
  for (const auto& v : seeds)
    if (v.size() != m.dim()) throw std::invalid_argument("seed length mismatch");
  return subbimodule_closure(m, rref_span(seeds, m.dim()));
}

Bimodule quotient(const Bimodule& m, const Subspace& s) {
  if (!is_subbimodule(m, s)) throw std::invalid_argument("quotient by a non-invariant subspace");
  MatrixX proj = quotient_projection(s), sec = quotient_section(s);
  std::vector<MatrixX> l, r;
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    l.push_back(proj * m.lambda(i) * sec);
    r.push_back(proj * m.rho(i) * sec);
  }
  return Bimodule(m.algebra_ptr(), m.dim() - s.dim(), l, r);
}

Bimodule restrict(const Bimodule& m, const Subspace& s) {
  if (!is_subbimodule(m, s)) throw std::invalid_argument("restriction to a non-invariant subspace");
  std::vector<MatrixX> l, r;
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    l.push_back(restrict_operator(m.lambda(i), s));
    r.push_back(restrict_operator(m.rho(i), s));
  }
  return Bimodule(m.algebra_ptr(), s.dim(), l, r);
}

Bimodule direct_sum(const Bimodule& m, const Bimodule& n) {
  require_same_algebra(m, n);
  const Index d = m.dim() + n.dim();
  std::vector<MatrixX> l, r;
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    MatrixX a = zeros(m.field(), d, d), b = a;
    a.topLeftCorner(m.dim(), m.dim()) = m.lambda(i);
    a.bottomRightCorner(n.dim(), n.dim()) = n.lambda(i);
    b.topLeftCorner(m.dim(), m.dim()) = m.rho(i);
    b.bottomRightCorner(n.dim(), n.dim()) = n.rho(i);
    l.push_back(std::move(a));
    r.push_back(std::move(b));
  }
  return Bimodule(m.algebra_ptr(), d, l, r);
}

Bimodule tensor_product(const Bimodule& m, const Bimodule& n) {
  require_same_algebra(m, n);
  const MatrixX im = identity(m.field(), m.dim()), in = identity(m.field(), n.dim());
  std::vector<MatrixX> l, r;
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    l.push_back(kron(m.lambda(i), in) + kron(im, n.lambda(i)));
    r.push_back(kron(m.rho(i), in) + kron(im, n.rho(i)));
  }
  return Bimodule(m.algebra_ptr(), m.dim() * n.dim(), l, r);
}

Bimodule hom_bimodule(const Bimodule& m, const Bimodule& n) {
  require_same_algebra(m, n);
  require_weak(m, "hom_bimodule");
  require_weak(n, "hom_bimodule");
  const MatrixX im = identity(m.field(), m.dim()), in = identity(m.field(), n.dim());
  std::vector<MatrixX> l, r;
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    l.push_back(kron(n.lambda(i), im) - kron(in, MatrixX(m.lambda(i).transpose())));
    r.push_back(kron(n.rho(i), im) - kron(in, MatrixX(m.rho(i).transpose())));
  }
  return Bimodule(m.algebra_ptr(), m.dim() * n.dim(), l, r);
}

Bimodule dual(const Bimodule& m) {
  return hom_bimodule(m, trivial_bimodule(m.algebra_ptr(), 1));
}

bool is_intertwiner(const Bimodule& m, const Bimodule& n, const MatrixX& f) {
  if (!same_algebra(m, n) || f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    if (!(MatrixX(f * m.lambda(i)) == MatrixX(n.lambda(i) * f))) return false;
    if (!(MatrixX(f * m.rho(i)) == MatrixX(n.rho(i) * f))) return false;
  }
  return true;
}

Subspace intertwiner_space(const Bimodule& m, const Bimodule& n) {
  require_same_algebra(m, n);
  const Index vars = m.dim() * n.dim();
  if (m.algebra_dim() == 0) return Subspace::whole(vars);
  const MatrixX im = identity(m.field(), m.dim()), in = identity(m.field(), n.dim());
  std::vector<MatrixX> eqs;
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    eqs.push_back(kron(in, MatrixX(m.lambda(i).transpose())) - kron(n.lambda(i), im));
    eqs.push_back(kron(in, MatrixX(m.rho(i).transpose())) - kron(n.rho(i), im));
  }
  return nullspace(stack_rows(eqs, vars));
}

bool are_isomorphic(const Bimodule& m, const Bimodule& n) {
  if (!same_algebra(m, n) || m.dim() != n.dim()) return false;
  const Index d = m.dim();
  if (d == 0) return true;
  Subspace h = intertwiner_space(m, n);
  auto as_matrix = [&](const VectorX& v) {
    MatrixX f(d, d);
    for (Index a = 0; a < d; ++a)
      for (Index b = 0; b < d; ++b) f(a, b) = v(a * d + b);
    return f;
  };
  VectorX combo = VectorX::Constant(d * d, m.field().zero());
  for (Index k = 0; k < h.dim(); ++k) {
    VectorX v = h.basis().row(k).transpose();
    if (rank(as_matrix(v)) == d) return true;
    combo += m.field().from_int(k + 1) * v;
  }
  return h.dim() > 0 && rank(as_matrix(combo)) == d;
}

DualityChecks duality_morphism_checks(const Bimodule& m) {
  const Index d = m.dim();
  const auto& f = m.field();
  DualityChecks c;
  Bimodule md = dual(m);
  Bimodule unit = trivial_bimodule(m.algebra_ptr(), 1);
  MatrixX contraction = zeros(f, 1, d * d);
  MatrixX diagonal = zeros(f, d * d, 1);
  for (Index i = 0; i < d; ++i) {
    contraction(0, i * d + i) = f.one();
    diagonal(i * d + i, 0) = f.one();
  }
  Bimodule md_m = tensor_product(md, m), m_md = tensor_product(m, md);
  c.ev = is_intertwiner(md_m, unit, contraction);
  c.ev_prime = is_intertwiner(m_md, unit, contraction);
  c.coev = is_intertwiner(unit, m_md, diagonal);
  c.coev_prime = is_intertwiner(unit, md_m, diagonal);
  c.double_dual = is_intertwiner(m, dual(md), identity(f, d));
  const Scalar dimension = f.from_int(d);
  c.ev_coev_prime_trace = MatrixX(contraction * diagonal)(0, 0) == dimension;
  c.ev_prime_coev_trace = c.ev_coev_prime_trace;
  return c;
}

Index CompositionReport::total_dim() const {
  Index t = 0;
  for (const auto& f : factors) t += f.module.dim();
  return t;
}

}  // namespace leibniz
