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

#include "leibniz/random.hpp"

#include <cstdlib>
#include <string>

namespace leibniz {

std::uint64_t resolve_seed(std::uint64_t fallback) {
  if (const char* env = std::getenv("LEIBNIZ_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::invalid_argument(std::string("LEIBNIZ_SEED is not an integer: ") + env);
    }
  }
  return fallback;
}

Scalar random_scalar(const FieldSpec& f, Rng& rng) {
  if (f.is_rational()) return f.from_int(static_cast<long long>(rng() % 5) - 2);
  return f.from_int(static_cast<long long>(rng() % f.p));
}

MatrixX random_matrix(const FieldSpec& f, Index rows, Index cols, Rng& rng) {
  MatrixX m(rows, cols);
  for (Index i = 0; i < rows; ++i)
    for (Index j = 0; j < cols; ++j) m(i, j) = random_scalar(f, rng);
  return m;
}

MatrixX random_invertible(const FieldSpec& f, Index n, Rng& rng) {
  while (true) {
    MatrixX m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

MatrixX inverse(const MatrixX& p) {
  const Index n = p.rows();
  MatrixX aug(n, 2 * n);
  aug.leftCols(n) = p;
  aug.rightCols(n) = MatrixX::Identity(n, n);
  auto r = rref(aug);
  if (static_cast<Index>(r.pivots.size()) < n || (n > 0 && r.pivots[n - 1] != n - 1))
    throw std::domain_error("matrix is singular");
  return r.matrix.rightCols(n);
}

Bimodule conjugate(const Bimodule& m, const MatrixX& p) {
  MatrixX pinv = inverse(p);
  std::vector<MatrixX> l, r;
  for (Index i = 0; i < m.algebra_dim(); ++i) {
    l.push_back(p * m.lambda(i) * pinv);
    r.push_back(p * m.rho(i) * pinv);
  }
  return Bimodule(m.algebra_ptr(), m.dim(), l, r);
}

namespace {

MatrixX zeros(const FieldSpec& f, Index r, Index c) { return MatrixX::Constant(r, c, f.zero()); }

// Matrix with irreducible characteristic polynomial of degree 2.
MatrixX irreducible_2x2(const FieldSpec& f) {
  MatrixX j = zeros(f, 2, 2);
  j(1, 0) = f.one();
  if (f.is_rational()) {
    j(0, 1) = f.from_int(-1);
  } else if (f.p == 2) {
    j(0, 1) = f.one();
    j(1, 1) = f.one();  // x^2 + x + 1
  } else {
    for (long long d = 2;; ++d) {
      bool square = false;
      for (long long x = 0; x < static_cast<long long>(f.p) && !square; ++x)
        square = (x * x - d) % static_cast<long long>(f.p) == 0;
      if (!square) {
        j(0, 1) = f.from_int(d);
        break;
      }
    }
  }
  return j;
}

// Random functional vanishing on LL, as values on the basis.
std::vector<Scalar> random_character(const LeibnizAlgebra& a, const Subspace& chars, Rng& rng) {
  VectorX v = VectorX::Constant(a.dim(), a.field().zero());
  for (Index k = 0; k < chars.dim(); ++k)
    v += random_scalar(a.field(), rng) * VectorX(chars.basis().row(k).transpose());
  return std::vector<Scalar>(v.data(), v.data() + v.size());
}

Bimodule random_piece(const AlgebraPtr& a, Index size, bool full, Rng& rng) {
  const FieldSpec& f = a->field();
  const Subspace chars = annihilator(products_and_series(*a).product_span);
  const MatrixX j = size == 2 ? irreducible_2x2(f) : MatrixX::Constant(1, 1, f.zero());
  const MatrixX id = MatrixX::Identity(size, size);
  auto values = [&](std::vector<MatrixX>& out) {
    auto s = random_character(*a, chars, rng);
    auto t = random_character(*a, chars, rng);
    for (Index i = 0; i < a->dim(); ++i)
      out.push_back(s[static_cast<std::size_t>(i)] * id + t[static_cast<std::size_t>(i)] * j);
  };
  std::vector<MatrixX> lambda, rho;
  values(lambda);
  const unsigned mode = full ? static_cast<unsigned>(rng() % 2) : static_cast<unsigned>(rng() % 3);
  if (mode == 0) {
    for (const auto& l : lambda) rho.push_back(-l);
  } else if (mode == 1) {
    rho.assign(lambda.size(), zeros(f, size, size));
  } else {
    values(rho);
  }
  return Bimodule(a, size, lambda, rho);
}

}  // namespace

Bimodule random_extension(const Bimodule& top, const Bimodule& bottom, bool full, Rng& rng) {
  const FieldSpec& f = top.field();
  const Index n = top.algebra_dim();
  const Index dt = top.dim(), db = bottom.dim(), d = dt + db;
  const Index block = dt * db;
  const Index unknowns = 2 * n * block;
  const auto& alg = top.algebra();

  auto assemble = [&](const VectorX& u, std::vector<MatrixX>& l, std::vector<MatrixX>& r) {
    l.clear();
    r.clear();
    for (Index i = 0; i < n; ++i) {
      MatrixX a = zeros(f, d, d), b = zeros(f, d, d);
      a.topLeftCorner(dt, dt) = top.lambda(i);
      a.bottomRightCorner(db, db) = bottom.lambda(i);
      b.topLeftCorner(dt, dt) = top.rho(i);
      b.bottomRightCorner(db, db) = bottom.rho(i);
      for (Index x = 0; x < dt; ++x)
        for (Index y = 0; y < db; ++y) {
          a(x, dt + y) = u(i * block + x * db + y);
          b(x, dt + y) = u(n * block + i * block + x * db + y);
        }
      l.push_back(std::move(a));
      r.push_back(std::move(b));
    }
  };
  auto residual = [&](const VectorX& u) {
    std::vector<MatrixX> l, r;
    assemble(u, l, r);
    std::vector<Scalar> out;
    auto push = [&](const MatrixX& m) {
      for (Index x = 0; x < dt; ++x)
        for (Index y = 0; y < db; ++y) out.push_back(m(x, dt + y));
    };
    for (Index i = 0; i < n; ++i)
      for (Index j = 0; j < n; ++j) {
        MatrixX lxy = zeros(f, d, d), rxy = zeros(f, d, d);
        for (Index k = 0; k < n; ++k) {
          lxy += alg.c(i, j, k) * l[static_cast<std::size_t>(k)];
          rxy += alg.c(i, j, k) * r[static_cast<std::size_t>(k)];
        }
        const auto& li = l[static_cast<std::size_t>(i)];
        const auto& lj = l[static_cast<std::size_t>(j)];
        const auto& ri = r[static_cast<std::size_t>(i)];
        const auto& rj = r[static_cast<std::size_t>(j)];
        push(lxy - (li * lj - lj * li));
        push(rxy - (li * rj - rj * li));
        if (full) push(MatrixX(rj * ri) - (rxy - li * rj));
      }
    VectorX v(static_cast<Index>(out.size()));
    for (std::size_t k = 0; k < out.size(); ++k) v(static_cast<Index>(k)) = out[k];
    return v;
  };

  VectorX u = VectorX::Constant(unknowns, f.zero());
  if (unknowns > 0) {
    VectorX r0 = residual(u);
    MatrixX sys(r0.size(), unknowns);
    for (Index k = 0; k < unknowns; ++k) {
      VectorX e = VectorX::Constant(unknowns, f.zero());
      e(k) = f.one();
      sys.col(k) = residual(e);
    }
    Subspace sol = nullspace(sys);
    for (Index k = 0; k < sol.dim(); ++k)
      u += random_scalar(f, rng) * VectorX(sol.basis().row(k).transpose());
  }
  std::vector<MatrixX> l, r;
  assemble(u, l, r);
  return Bimodule(top.algebra_ptr(), d, l, r);
}

Bimodule random_bimodule(AlgebraPtr a, Index dim, bool full, Rng& rng) {
  if (dim == 0) return trivial_bimodule(a, 0);
  std::vector<Index> sizes;
  Index left = dim;
  while (left > 0) {
    const Index s = (left >= 2 && rng() % 3 == 0) ? 2 : 1;
    sizes.push_back(s);
    left -= s;
  }
  Bimodule m = random_piece(a, sizes[0], full, rng);
  for (std::size_t k = 1; k < sizes.size(); ++k)
    m = random_extension(m, random_piece(a, sizes[k], full, rng), full, rng);
  return conjugate(m, random_invertible(a->field(), dim, rng));
}

}  // namespace leibniz
