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

#include "leibniz/algebra.hpp"

#include <charconv>
#include <stdexcept>

namespace leibniz {

LeibnizAlgebra::LeibnizAlgebra(FieldSpec field, std::vector<std::string> basis,
                               const std::vector<std::vector<VectorX>>& table)
    : field_(field), basis_(std::move(basis)) {
  const auto n = basis_.size();
  if (table.size() != n) throw std::invalid_argument("table has wrong number of rows");
  table_.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    if (table[i].size() != n)
      throw std::invalid_argument("table row " + std::to_string(i) + " has wrong length");
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i][j].size() != static_cast<Index>(n))
        throw std::invalid_argument("structure vector has wrong length");
      VectorX v(static_cast<Index>(n));
      for (Index k = 0; k < v.size(); ++k) v(k) = field_.coerce(table[i][j](k));
      table_.push_back(std::move(v));
    }
  }
}

Index LeibnizAlgebra::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < basis_.size(); ++i)
    if (basis_[i] == name) return static_cast<Index>(i);
  throw std::invalid_argument("no basis element named '" + std::string(name) + "'");
}

VectorX LeibnizAlgebra::multiply(const VectorX& x, const VectorX& y) const {
  VectorX out = VectorX::Zero(dim());
  for (Index i = 0; i < dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (Index j = 0; j < dim(); ++j) {
      if (y(j).is_zero()) continue;
      out += (x(i) * y(j)) * product(i, j);
    }
  }
  return out;
}

VectorX LeibnizAlgebra::unit(Index i) const {
  VectorX v = VectorX::Constant(dim(), field_.zero());
  v(i) = field_.one();
  return v;
}

bool operator==(const LeibnizAlgebra& a, const LeibnizAlgebra& b) {
  return a.field_ == b.field_ && a.basis_ == b.basis_ && a.table_ == b.table_;
}

std::optional<Triple> validate_left_leibniz(const LeibnizAlgebra& a) {
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        const VectorX x = a.unit(i), y = a.unit(j), z = a.unit(k);
        VectorX lhs = a.multiply(x, a.product(j, k));
        VectorX rhs = a.multiply(a.product(i, j), z) + a.multiply(y, a.product(i, k));
        if (!(lhs == rhs)) return Triple{i, j, k};
      }
  return std::nullopt;
}

std::optional<Triple> validate_lie(const LeibnizAlgebra& a) {
  const Index n = a.dim();
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j)
      if (!is_zero_matrix(a.product(i, j) + a.product(j, i))) return Triple{i, j, j};
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j)
      for (Index k = 0; k < n; ++k) {
        VectorX s = a.multiply(a.unit(i), a.product(j, k)) +
                    a.multiply(a.unit(j), a.product(k, i)) +
                    a.multiply(a.unit(k), a.product(i, j));
        if (!is_zero_matrix(s)) return Triple{i, j, k};
      }
  return std::nullopt;
}

bool is_lie(const LeibnizAlgebra& a) { return !validate_lie(a).has_value(); }

MultOps mult_ops(const LeibnizAlgebra& a) {
  const Index n = a.dim();
  MultOps ops;
  for (Index i = 0; i < n; ++i) {
    MatrixX l(n, n), r(n, n);
    for (Index j = 0; j < n; ++j) {
      l.col(j) = a.product(i, j);
      r.col(j) = a.product(j, i);
    }
    ops.left.push_back(std::move(l));
    ops.right.push_back(std::move(r));
  }
  return ops;
}

Subspace leibniz_kernel(const LeibnizAlgebra& a) {
  const Index n = a.dim();
  std::vector<VectorX> gens;
  for (Index i = 0; i < n; ++i) {
    gens.push_back(a.product(i, i));
    for (Index j = i + 1; j < n; ++j) gens.push_back(a.product(i, j) + a.product(j, i));
  }
  return rref_span(gens, n);
}

bool verify_algebra_hom(const LeibnizAlgebra& dom, const LeibnizAlgebra& cod,
                        const MatrixX& matrix) {
  if (matrix.rows() != cod.dim() || matrix.cols() != dom.dim()) return false;
  for (Index i = 0; i < dom.dim(); ++i)
    for (Index j = 0; j < dom.dim(); ++j) {
      VectorX lhs = matrix * dom.product(i, j);
      VectorX rhs = cod.multiply(matrix.col(i), matrix.col(j));
      if (!(lhs == rhs)) return false;
    }
  return true;
}

QuotientAlgebra quotient_algebra(const LeibnizAlgebra& a, const Subspace& ideal) {
  const Index n = a.dim();
  if (ideal.ambient_dim() != n) throw std::invalid_argument("ideal ambient mismatch");
  auto ops = mult_ops(a);
  for (Index i = 0; i < n; ++i)
    if (!is_invariant(ideal, ops.left[i]) || !is_invariant(ideal, ops.right[i]))
      throw std::invalid_argument("subspace is not a two-sided ideal");
  MatrixX proj = quotient_projection(ideal);
  auto free = ideal.free_columns();
  const Index q = static_cast<Index>(free.size());
  std::vector<std::string> names;
  for (Index c : free) names.push_back(a.basis_names()[static_cast<std::size_t>(c)]);
  std::vector<std::vector<VectorX>> table(static_cast<std::size_t>(q));
  for (Index i = 0; i < q; ++i)
    for (Index j = 0; j < q; ++j)
      table[static_cast<std::size_t>(i)].push_back(proj * a.product(free[i], free[j]));
  QuotientAlgebra out{LeibnizAlgebra(a.field(), names, table), {}};
  out.projection = {n, q, proj, true};
  return out;
}

CanonicalLie canonical_lie(const LeibnizAlgebra& a) {
  Subspace ker = leibniz_kernel(a);
  auto q = quotient_algebra(a, ker);
  return {std::move(q.algebra), std::move(q.projection), std::move(ker)};
}

SeriesReport products_and_series(const LeibnizAlgebra& a) {
  const Index n = a.dim();
  SeriesReport rep;
  std::vector<VectorX> prods;
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) prods.push_back(a.product(i, j));
  rep.product_span = rref_span(prods, n);
  rep.is_perfect = rep.product_span.dim() == n;
  Subspace d = Subspace::whole(n);
  rep.derived_dims.push_back(d.dim());
  while (d.dim() > 0) {
    std::vector<VectorX> next;
    for (Index i = 0; i < d.dim(); ++i)
      for (Index j = 0; j < d.dim(); ++j)
        next.push_back(a.multiply(d.basis().row(i).transpose(), d.basis().row(j).transpose()));
    Subspace nd = rref_span(next, n);
    if (nd.dim() == d.dim()) break;
    d = std::move(nd);
    rep.derived_dims.push_back(d.dim());
  }
  rep.is_solvable = d.dim() == 0;
  return rep;
}

namespace {

struct TableBuilder {
  const FieldSpec& f;
  Index n;
  std::vector<std::vector<VectorX>> t;

  TableBuilder(const FieldSpec& field, Index dim) : f(field), n(dim) {
    t.assign(static_cast<std::size_t>(n),
             std::vector<VectorX>(static_cast<std::size_t>(n),
                                  VectorX::Constant(n, field.zero())));
  }
  void set(Index i, Index j, Index k, long long v) {
    t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)](k) = f.from_int(v);
  }
};

LeibnizAlgebra checked(LeibnizAlgebra a) {
  if (auto bad = validate_left_leibniz(a))
    throw std::logic_error("builder produced a non-Leibniz table");
  return a;
}

}  // namespace

LeibnizAlgebra make_A(const FieldSpec& f) {
  TableBuilder b(f, 2);
  b.set(0, 1, 1, 1);  // he = e
  return checked(LeibnizAlgebra(f, {"h", "e"}, b.t));
}

LeibnizAlgebra make_N(const FieldSpec& f) {
  TableBuilder b(f, 2);
  b.set(0, 0, 1, 1);  // ee = c
  return checked(LeibnizAlgebra(f, {"e", "c"}, b.t));
}

LeibnizAlgebra make_e(const FieldSpec& f) {
  TableBuilder b(f, 1);
  return LeibnizAlgebra(f, {"e"}, b.t);
}

LeibnizAlgebra make_abelian(const FieldSpec& f, Index n) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  TableBuilder b(f, n);
  std::vector<std::string> names;
  for (Index i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
  return LeibnizAlgebra(f, names, b.t);
}

LeibnizAlgebra make_sl2(const FieldSpec& f) {
  if (f.characteristic() == 2) throw std::invalid_argument("sl2 needs char != 2");
  TableBuilder b(f, 3);
  enum { E = 0, H = 1, F = 2 };
  b.set(H, E, E, 2);
  b.set(E, H, E, -2);
  b.set(H, F, F, -2);
  b.set(F, H, F, 2);
  b.set(E, F, H, 1);
  b.set(F, E, H, -1);
  return checked(LeibnizAlgebra(f, {"e", "h", "f"}, b.t));
}

LeibnizAlgebra hemi_semidirect(const LeibnizAlgebra& g,
                               const std::vector<MatrixX>& action) {
  const Index n = g.dim();
  if (static_cast<Index>(action.size()) != n)
    throw std::invalid_argument("need one action matrix per basis element");
  if (!is_lie(g)) throw std::invalid_argument("hemi_semidirect needs a Lie algebra");
  const Index m = n ? action[0].rows() : 0;
  for (const auto& a : action)
    if (a.rows() != m || a.cols() != m)
      throw std::invalid_argument("action matrices must be square of equal size");
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < n; ++j) {
      MatrixX lhs = MatrixX::Zero(m, m);
      for (Index k = 0; k < n; ++k) lhs += g.c(i, j, k) * action[static_cast<std::size_t>(k)];
      MatrixX rhs = action[static_cast<std::size_t>(i)] * action[static_cast<std::size_t>(j)] -
                    action[static_cast<std::size_t>(j)] * action[static_cast<std::size_t>(i)];
      if (!(lhs == rhs)) throw std::invalid_argument("action matrices are not a Lie module");
    }
  const Index d = n + m;
  TableBuilder b(g.field(), d);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j)
      b.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].head(n) = g.product(i, j);
    for (Index j = 0; j < m; ++j)
      b.t[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)].tail(m) =
          action[static_cast<std::size_t>(i)].col(j);
  }
  std::vector<std::string> names = g.basis_names();
  for (Index j = 0; j < m; ++j) names.push_back("v" + std::to_string(j));
  return checked(LeibnizAlgebra(g.field(), names, b.t));
}

std::vector<MatrixX> sl2_irrep(const FieldSpec& f, Index n) {
  if (n < 0) throw std::invalid_argument("negative highest weight");
  const Index d = n + 1;
  MatrixX e = MatrixX::Constant(d, d, f.zero());
  MatrixX h = e, fm = e;
  for (Index i = 0; i < d; ++i) {
    h(i, i) = f.from_int(n - 2 * i);
    if (i + 1 < d) fm(i + 1, i) = f.from_int(i + 1);
    if (i > 0) e(i - 1, i) = f.from_int(n - i + 1);
  }
  return {e, h, fm};
}

LeibnizAlgebra make_S(const FieldSpec& f) {
  return hemi_semidirect(make_sl2(f), sl2_irrep(f, 1));
}

LeibnizAlgebra builtin_algebra(std::string_view name, const FieldSpec& f) {
  if (name == "A") return make_A(f);
  if (name == "N") return make_N(f);
  if (name == "e") return make_e(f);
  if (name == "sl2") return make_sl2(f);
  if (name == "hemi-sl2-L1" || name == "S") return make_S(f);
  if (name.substr(0, 8) == "abelian:") {
    long long n = 0;
    auto body = name.substr(8);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), n);
    if (ec != std::errc() || ptr != body.data() + body.size() || n < 0 || n > 64)
      throw std::invalid_argument("bad abelian dimension in '" + std::string(name) + "'");
    return make_abelian(f, n);
  }
  throw std::invalid_argument("unknown example '" + std::string(name) + "'");
}

std::vector<std::string> builtin_algebra_names() {
  return {"A", "N", "e", "sl2", "hemi-sl2-L1", "abelian:2"};
}

bool has_sl2_head(const LeibnizAlgebra& a) {
  if (a.dim() < 3 || a.field().characteristic() == 2) return false;
  const LeibnizAlgebra s = make_sl2(a.field());
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j) {
      const VectorX& v = a.product(i, j);
      if (!(v.head(3) == s.product(i, j)) || !is_zero_matrix(v.tail(a.dim() - 3)))
        return false;
    }
  Subspace tail(a.dim());
  if (a.dim() > 3) {
    MatrixX rows = MatrixX::Zero(a.dim() - 3, a.dim());
    for (Index k = 3; k < a.dim(); ++k) rows(k - 3, k) = Scalar(1);
    tail = Subspace::from_rows(rows);
  }
  return leibniz_kernel(a) == tail;
}

}  // namespace leibniz
