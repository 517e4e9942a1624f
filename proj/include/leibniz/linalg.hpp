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

#ifndef LEIBNIZ_LINALG_HPP
#define LEIBNIZ_LINALG_HPP

#include <Eigen/Core>
#include <optional>
#include <stdexcept>
#include <unsupported/Eigen/KroneckerProduct>
#include <utility>
#include <vector>

#include "leibniz/scalar.hpp"

namespace leibniz {

using Eigen::Index;

template <typename S>
using MatX = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
template <typename S>
using VecX = Eigen::Matrix<S, Eigen::Dynamic, 1>;

template <typename S>
inline bool is_zero(const S& s) {
  return s == S(0);
}
inline bool is_zero(const Scalar& s) { return s.is_zero(); }

template <typename Derived>
bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_zero(m(i, j))) return false;
  return true;
}

template <typename S>
struct RrefResult {
  MatX<S> matrix;  // nonzero rows only
  std::vector<Index> pivots;
};

// Gauss-Jordan elimination. Zero rows are dropped from the result.
template <typename Derived>
RrefResult<typename Derived::Scalar> rref(const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  MatX<S> a = m;
  const Index rows = a.rows(), cols = a.cols();
  std::vector<Index> pivots;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index piv = -1;
    for (Index i = r; i < rows; ++i)
      if (!is_zero(a(i, c))) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r) a.row(piv).swap(a.row(r));
    const S inv = S(1) / a(r, c);
    for (Index j = c; j < cols; ++j) a(r, j) *= inv;
    for (Index i = 0; i < rows; ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const S f = a(i, c);
      for (Index j = c; j < cols; ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a.topRows(r), std::move(pivots)};
}

template <typename Derived>
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return static_cast<Index>(rref(m).pivots.size());
}

// Subspace of S^n stored as a reduced row echelon basis (rows are vectors).
template <typename S>
class BasicSubspace {
 public:
  explicit BasicSubspace(Index ambient = 0)
      : ambient_(ambient), basis_(0, ambient) {}

  static BasicSubspace whole(Index n) {
    return from_rows(MatX<S>::Identity(n, n));
  }

  template <typename Derived>
  static BasicSubspace from_rows(const Eigen::MatrixBase<Derived>& rows) {
    BasicSubspace s(rows.cols());
    auto r = rref(rows);
    s.basis_ = std::move(r.matrix);
    s.pivots_ = std::move(r.pivots);
    return s;
  }

  template <typename Derived>
  static BasicSubspace from_columns(const Eigen::MatrixBase<Derived>& cols) {
    return from_rows(cols.transpose());
  }

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_whole() const { return dim() == ambient_; }
  const MatX<S>& basis() const { return basis_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  std::vector<Index> free_columns() const {
    std::vector<Index> out;
    std::size_t k = 0;
    for (Index c = 0; c < ambient_; ++c) {
      if (k < pivots_.size() && pivots_[k] == c) {
        ++k;
      } else {
        out.push_back(c);
      }
    }
    return out;
  }

  // v minus its component along the pivots; zero iff v is in the span.
  template <typename Derived>
  VecX<S> reduce(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("vector length does not match ambient dim");
    VecX<S> w = v;
    for (Index i = 0; i < dim(); ++i) {
      const S c = w(pivots_[i]);
      if (leibniz::is_zero(c)) continue;
      for (Index j = pivots_[i]; j < ambient_; ++j)
        if (!leibniz::is_zero(basis_(i, j))) w(j) -= c * basis_(i, j);
    }
    return w;
  }

  template <typename Derived>
  std::optional<VecX<S>> coordinates(const Eigen::MatrixBase<Derived>& v) const {
    if (v.size() != ambient_)
      throw std::invalid_argument("vector length does not match ambient dim");
    VecX<S> c(dim());
    for (Index i = 0; i < dim(); ++i) c(i) = v(pivots_[i]);
    VecX<S> back = basis_.transpose() * c;
    for (Index j = 0; j < ambient_; ++j)
      if (!(back(j) == v(j))) return std::nullopt;
    return c;
  }

  template <typename Derived>
  bool contains(const Eigen::MatrixBase<Derived>& v) const {
    return is_zero_matrix(reduce(v));
  }

  bool contains(const BasicSubspace& other) const {
    if (other.ambient_ != ambient_) throw std::invalid_argument("ambient mismatch");
    for (Index i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i).transpose())) return false;
    return true;
  }

  friend bool operator==(const BasicSubspace& a, const BasicSubspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ &&
           a.basis_ == b.basis_;
  }
  friend bool operator!=(const BasicSubspace& a, const BasicSubspace& b) {
    return !(a == b);
  }

 private:
  Index ambient_;
  MatX<S> basis_;
  std::vector<Index> pivots_;
};

using Subspace = BasicSubspace<Scalar>;

template <typename S>
BasicSubspace<S> rref_span(const std::vector<VecX<S>>& vectors, Index ambient) {
  MatX<S> rows(static_cast<Index>(vectors.size()), ambient);
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (vectors[i].size() != ambient)
      throw std::invalid_argument("rref_span: dimension mismatch");
    rows.row(static_cast<Index>(i)) = vectors[i].transpose();
  }
  return BasicSubspace<S>::from_rows(rows);
}

template <typename Derived>
BasicSubspace<typename Derived::Scalar> nullspace(
    const Eigen::MatrixBase<Derived>& m) {
  using S = typename Derived::Scalar;
  auto r = rref(m);
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : r.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  MatX<S> rows(n - static_cast<Index>(r.pivots.size()), n);
  rows.setZero();
  Index k = 0;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    rows(k, f) = S(1);
    for (std::size_t i = 0; i < r.pivots.size(); ++i)
      rows(k, r.pivots[i]) = -r.matrix(static_cast<Index>(i), f);
    ++k;
  }
  return BasicSubspace<S>::from_rows(rows);
}

template <typename S>
BasicSubspace<S> subspace_sum(const BasicSubspace<S>& u,
                              const BasicSubspace<S>& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("subspace_sum: ambient mismatch");
  MatX<S> rows(u.dim() + v.dim(), u.ambient_dim());
  rows.topRows(u.dim()) = u.basis();
  rows.bottomRows(v.dim()) = v.basis();
  return BasicSubspace<S>::from_rows(rows);
}

// Vectors w with <u, w> = 0 for all u in U (standard bilinear pairing).
template <typename S>
BasicSubspace<S> annihilator(const BasicSubspace<S>& u) {
  if (u.dim() == 0) return BasicSubspace<S>::whole(u.ambient_dim());
  return nullspace(u.basis());
}

template <typename S>
BasicSubspace<S> subspace_intersect(const BasicSubspace<S>& u,
                                    const BasicSubspace<S>& v) {
  if (u.ambient_dim() != v.ambient_dim())
    throw std::invalid_argument("subspace_intersect: ambient mismatch");
  auto ann = subspace_sum(annihilator(u), annihilator(v));
  return annihilator(ann);
}

template <typename S, typename Derived>
BasicSubspace<S> image(const Eigen::MatrixBase<Derived>& a,
                       const BasicSubspace<S>& u) {
  MatX<S> cols = a * u.basis().transpose();
  return BasicSubspace<S>::from_columns(cols);
}

template <typename Derived>
BasicSubspace<typename Derived::Scalar> column_space(
    const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  if (a.cols() == 0) return BasicSubspace<S>(a.rows());
  return BasicSubspace<S>::from_columns(a);
}

template <typename S, typename Derived>
bool is_invariant(const BasicSubspace<S>& u, const Eigen::MatrixBase<Derived>& a) {
  MatX<S> img = a * u.basis().transpose();
  for (Index j = 0; j < img.cols(); ++j)
    if (!u.contains(img.col(j))) return false;
  return true;
}

// Matrix of a restricted to the invariant subspace u, in u's row basis.
template <typename S, typename Derived>
MatX<S> restrict_operator(const Eigen::MatrixBase<Derived>& a,
                          const BasicSubspace<S>& u) {
  const Index d = u.dim();
  MatX<S> out(d, d);
  MatX<S> img = a * u.basis().transpose();
  for (Index j = 0; j < d; ++j) {
    auto c = u.coordinates(img.col(j));
    if (!c) throw std::invalid_argument("subspace is not invariant");
    out.col(j) = *c;
  }
  return out;
}

// Projection S^n -> S^n / u in the basis of the free (non-pivot) columns.
template <typename S>
MatX<S> quotient_projection(const BasicSubspace<S>& u) {
  const Index n = u.ambient_dim();
  auto free = u.free_columns();
  MatX<S> proj = MatX<S>::Zero(static_cast<Index>(free.size()), n);
  for (Index k = 0; k < n; ++k) {
    VecX<S> e = VecX<S>::Zero(n);
    e(k) = S(1);
    VecX<S> w = u.reduce(e);
    for (std::size_t i = 0; i < free.size(); ++i)
      proj(static_cast<Index>(i), k) = w(free[i]);
  }
  return proj;
}

// Section of the projection: quotient coordinates -> standard vectors.
template <typename S>
MatX<S> quotient_section(const BasicSubspace<S>& u) {
  auto free = u.free_columns();
  MatX<S> sec = MatX<S>::Zero(u.ambient_dim(), static_cast<Index>(free.size()));
  for (std::size_t i = 0; i < free.size(); ++i)
    sec(free[i], static_cast<Index>(i)) = S(1);
  return sec;
}

template <typename S, typename Derived>
MatX<S> quotient_operator(const Eigen::MatrixBase<Derived>& a,
                          const BasicSubspace<S>& u) {
  if (!is_invariant(u, a)) throw std::invalid_argument("subspace is not invariant");
  return quotient_projection(u) * a * quotient_section(u);
}

template <typename DA, typename DB>
MatX<typename DA::Scalar> kron(const Eigen::MatrixBase<DA>& a,
                               const Eigen::MatrixBase<DB>& b) {
  MatX<typename DA::Scalar> out = Eigen::kroneckerProduct(a.derived(), b.derived());
  return out;
}

// Characteristic polynomial det(xI - a) by Berkowitz's division-free
// recursion; coefficients listed from the leading one down.
template <typename Derived>
std::vector<typename Derived::Scalar> charpoly(const Eigen::MatrixBase<Derived>& a) {
  using S = typename Derived::Scalar;
  const Index n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("charpoly: matrix not square");
  std::vector<S> p{S(1)};
  for (Index r = n - 1; r >= 0; --r) {
    const Index k = n - r;  // size of the trailing block
    std::vector<S> t(static_cast<std::size_t>(k + 1), S(0));
    t[0] = S(1);
    t[1] = -a(r, r);
    if (k > 1) {
      auto row = a.block(r, r + 1, 1, k - 1);
      auto a1 = a.block(r + 1, r + 1, k - 1, k - 1);
      VecX<S> v = a.block(r + 1, r, k - 1, 1);
      for (Index j = 2; j <= k; ++j) {
        S s = (row * v)(0, 0);
        t[static_cast<std::size_t>(j)] = -s;
        v = a1 * v;
      }
    }
    std::vector<S> q(static_cast<std::size_t>(k + 1), S(0));
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < p.size() && j <= i; ++j)
        q[i] += t[i - j] * p[j];
    p = std::move(q);
  }
  return p;
}

// Roots in the ground field of a polynomial (leading coefficient first).
// nullopt when the search is out of reach (huge integers or huge p).
std::optional<std::vector<Scalar>> field_roots(const std::vector<Scalar>& poly,
                                               const FieldSpec& field);

std::optional<std::vector<Scalar>> eigenvalues_in_field(const MatrixX& a,
                                                        const FieldSpec& field);

}  // namespace leibniz

#endif  // LEIBNIZ_LINALG_HPP
