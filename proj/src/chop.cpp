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

#include <random>
#include <sstream>

#include "leibniz/bimodule.hpp"

namespace leibniz {

namespace {

constexpr std::uint64_t kExhaustiveSpinLimit = 4096;

MatrixX identity(const FieldSpec& f, Index n) {
  MatrixX m = MatrixX::Constant(n, n, f.zero());
  for (Index i = 0; i < n; ++i) m(i, i) = f.one();
  return m;
}

std::vector<MatrixX> all_ops(const Bimodule& m) {
  std::vector<MatrixX> ops = m.lambda();
  ops.insert(ops.end(), m.rho().begin(), m.rho().end());
  return ops;
}

Scalar random_scalar(const FieldSpec& f, std::mt19937_64& rng) {
  if (f.is_rational()) return f.from_int(static_cast<long long>(rng() % 7) - 3);
  return f.from_int(static_cast<long long>(rng() % f.p));
}

// Depth-first search through eigenvalue choices; nullopt with *infeasible set
// when some characteristic polynomial cannot be factored.
std::optional<VectorX> common_eigenvector(const std::vector<MatrixX>& ops,
                                          const FieldSpec& f, Index d, bool* infeasible) {
  std::vector<std::vector<Scalar>> eig;
  for (const auto& a : ops) {
    auto e = eigenvalues_in_field(a, f);
    if (!e) {
      *infeasible = true;
      return std::nullopt;
    }
    eig.push_back(std::move(*e));
  }
  std::optional<VectorX> found;
  auto dfs = [&](auto&& self, std::size_t k, const Subspace& w) -> bool {
    if (k == ops.size()) {
      found = w.basis().row(0).transpose();
      return true;
    }
    for (const auto& mu : eig[k]) {
      Subspace ker = nullspace(MatrixX(ops[k] - mu * identity(f, d)));
      Subspace next = subspace_intersect(w, ker);
      if (next.dim() > 0 && self(self, k + 1, next)) return true;
    }
    return false;
  };
  dfs(dfs, 0, Subspace::whole(d));
  return found;
}

std::optional<std::vector<Bimodule>> weight_strategy(Bimodule m) {
  std::vector<Bimodule> out;
  while (m.dim() > 0) {
    bool infeasible = false;
    auto v = common_eigenvector(all_ops(m), m.field(), m.dim(), &infeasible);
    if (!v) return std::nullopt;
    Subspace s = rref_span(std::vector<VectorX>{*v}, m.dim());
    out.push_back(restrict(m, s));
    m = quotient(m, s);
  }
  return out;
}

std::optional<std::vector<Bimodule>> sl2_strategy(const Bimodule& m) {
  const auto& alg = m.algebra();
  if (!m.field().is_rational() || !has_sl2_head(alg) || !axiom_report(m).full())
    return std::nullopt;
  Kernels k = kernels_and_invariants(m);
  std::vector<Bimodule> out;
  const std::pair<Bimodule, bool> parts[] = {{restrict(m, k.M0), false},
                                             {quotient(m, k.M0), true}};
  for (const auto& [p, symmetric] : parts) {
    if (p.dim() == 0) continue;
    auto eig = eigenvalues_in_field(p.lambda(1), p.field());
    if (!eig) return std::nullopt;
    Index total = 0;
    Subspace ker_e = nullspace(p.lambda(0));
    for (const auto& mu : *eig) {
      const mpq_class& q = mu.rational();
      if (q.get_den() != 1 || q < 0) continue;
      Subspace ker_h = nullspace(MatrixX(p.lambda(1) - mu * identity(p.field(), p.dim())));
      const Index mult = subspace_intersect(ker_e, ker_h).dim();
      const Index n = q.get_num().get_si();
      for (Index c = 0; c < mult; ++c) out.push_back(sl2_bimodule(m.algebra_ptr(), n, symmetric));
      total += mult * (n + 1);
    }
    if (total != p.dim()) return std::nullopt;
  }
  return out;
}

// Smallest invariant subspace containing v, or nullopt if it is everything.
std::optional<Subspace> proper_spin(const Bimodule& m, const VectorX& v) {
  if (is_zero_matrix(v)) return std::nullopt;
  Subspace s = subbimodule_closure(m, std::vector<VectorX>{v});
  if (s.dim() < m.dim()) return s;
  return std::nullopt;
}

struct SpinResult {
  std::optional<Subspace> sub;
  bool exhaustive = false;
};

SpinResult find_submodule(const Bimodule& m, std::mt19937_64& rng) {
  const Index d = m.dim();
  const FieldSpec& f = m.field();
  SpinResult res;
  if (!f.is_rational()) {
    std::uint64_t count = 1;
    bool small = true;
    for (Index i = 0; i < d && small; ++i) {
      count *= f.p;
      small = count <= kExhaustiveSpinLimit;
    }
    if (small) {
      // every line through the origin: first nonzero coordinate is 1
      for (Index lead = 0; lead < d; ++lead) {
        const Index rest = d - lead - 1;
        std::uint64_t total = 1;
        for (Index i = 0; i < rest; ++i) total *= f.p;
        for (std::uint64_t code = 0; code < total; ++code) {
          VectorX v = VectorX::Constant(d, f.zero());
          v(lead) = f.one();
          std::uint64_t c = code;
          for (Index i = lead + 1; i < d; ++i) {
            v(i) = f.from_int(static_cast<long long>(c % f.p));
            c /= f.p;
          }
          if (auto s = proper_spin(m, v)) {
            res.sub = s;
            return res;
          }
        }
      }
      res.exhaustive = true;
      return res;
    }
  }
  for (Index i = 0; i < d; ++i) {
    VectorX v = VectorX::Constant(d, f.zero());
    v(i) = f.one();
    if (auto s = proper_spin(m, v)) {
      res.sub = s;
      return res;
    }
  }
  auto ops = all_ops(m);
  std::vector<MatrixX> dual_ops;
  for (const auto& a : ops) dual_ops.push_back(a.transpose());
  for (int attempt = 0; attempt < 4; ++attempt) {
    MatrixX x = MatrixX::Constant(d, d, f.zero());
    MatrixX y = x;
    for (std::size_t k = 0; k < ops.size(); ++k) {
      const Scalar c = random_scalar(f, rng);
      x += c * ops[k];
      y += c * dual_ops[k];
    }
    if (attempt > 0) {
      x = MatrixX(x * x) + x;
      y = MatrixX(y * y) + y;
    }
    auto ex = eigenvalues_in_field(x, f);
    if (ex)
      for (const auto& mu : *ex) {
        Subspace ker = nullspace(MatrixX(x - mu * identity(f, d)));
        for (Index r = 0; r < ker.dim(); ++r)
          if (auto s = proper_spin(m, ker.basis().row(r).transpose())) {
            res.sub = s;
            return res;
          }
      }
    // submodules of the dual give quotients of m via annihilators
    auto ey = eigenvalues_in_field(y, f);
    if (ey)
      for (const auto& mu : *ey) {
        Subspace ker = nullspace(MatrixX(y - mu * identity(f, d)));
        for (Index r = 0; r < ker.dim(); ++r) {
          Subspace w = rref_span(std::vector<VectorX>{ker.basis().row(r).transpose()}, d);
          while (true) {
            std::vector<VectorX> gens;
            for (Index b = 0; b < w.dim(); ++b) {
              VectorX u = w.basis().row(b).transpose();
              gens.push_back(u);
              for (const auto& a : dual_ops) gens.push_back(a * u);
            }
            Subspace nw = rref_span(gens, d);
            if (nw.dim() == w.dim()) break;
            w = std::move(nw);
          }
          if (w.dim() < d) {
            res.sub = annihilator(w);
            return res;
          }
        }
      }
  }
  return res;
}

void spin_chop(const Bimodule& m, std::mt19937_64& rng, std::vector<Bimodule>& out,
               bool& certified) {
  if (m.dim() == 0) return;
  if (m.dim() == 1) {
    out.push_back(m);
    return;
  }
  SpinResult r = find_submodule(m, rng);
  if (!r.sub) {
    if (!r.exhaustive) certified = false;
    out.push_back(m);
    return;
  }
  spin_chop(restrict(m, *r.sub), rng, out, certified);
  spin_chop(quotient(m, *r.sub), rng, out, certified);
}

CompositionFactor describe(const Bimodule& m) {
  CompositionFactor f;
  f.module = m;
  Flags fl = classify_flags(m);
  f.symmetric = fl.symmetric;
  f.anti_symmetric = fl.anti_symmetric;
  const char* suffix = fl.trivial ? "" : fl.symmetric ? "^s" : fl.anti_symmetric ? "^a" : "^w";
  if (m.dim() == 1) {
    std::ostringstream id;
    id << "F(";
    for (Index i = 0; i < m.algebra_dim(); ++i) {
      f.left_weights.push_back(m.lambda(i)(0, 0));
      f.right_weights.push_back(m.rho(i)(0, 0));
      id << (i ? "," : "") << m.lambda(i)(0, 0);
    }
    id << ")" << suffix;
    if (!fl.symmetric && !fl.anti_symmetric) {
      id << "[";
      for (Index i = 0; i < m.algebra_dim(); ++i) id << (i ? "," : "") << m.rho(i)(0, 0);
      id << "]";
    }
    f.registry_id = id.str();
    if (fl.trivial && has_sl2_head(m.algebra())) {
      f.highest_weight = 0;
      f.registry_id = "L(0)";
    }
  } else if (has_sl2_head(m.algebra()) && m.field().is_rational()) {
    // highest weight = top eigenvalue of h on ker e
    auto eig = eigenvalues_in_field(m.lambda(1), m.field());
    if (eig && !eig->empty()) {
      Scalar top = eig->front();
      for (const auto& e : *eig) top = std::max(top, e);
      const mpq_class& q = top.rational();
      if (q.get_den() == 1 && q.get_num() + 1 == m.dim()) {
        f.highest_weight = q.get_num().get_si();
        f.registry_id = "L(" + std::to_string(*f.highest_weight) + ")" + suffix;
      }
    }
  }
  return f;
}

}  // namespace

CompositionReport chop(const Bimodule& m, std::uint64_t seed) {
  CompositionReport rep;
  const bool full = axiom_report(m).full();
  auto finish = [&](std::vector<Bimodule> factors, std::string strategy, bool certified) {
    for (const auto& f : factors) rep.factors.push_back(describe(f));
    rep.strategy = std::move(strategy);
    rep.certified = certified && full;
    if (!full) rep.note = "input is not a full bimodule; report is uncertified";
  };
  if (m.dim() == 0) {
    finish({}, "empty", true);
  } else if (auto w = weight_strategy(m)) {
    finish(std::move(*w), "weight", true);
  } else if (auto s = sl2_strategy(m)) {
    finish(std::move(*s), "sl2", true);
  } else {
    std::mt19937_64 rng(seed);
    std::vector<Bimodule> out;
    bool certified = true;
    spin_chop(m, rng, out, certified);
    finish(std::move(out), "spin", certified);
    if (!certified && rep.note.empty())
      rep.note = "no proper submodule found for some factor; irreducibility unproven";
  }
  return rep;
}

std::vector<Subspace> bruteforce_invariant_subspaces(const Bimodule& m) {
  const FieldSpec& f = m.field();
  const Index d = m.dim();
  if (f.is_rational() || f.p > 7 || d > 4)
    throw std::invalid_argument("bruteforce_invariant_subspaces: needs F_p with p <= 7 and dim <= 4");
  std::vector<Subspace> out;
  for (unsigned mask = 0; mask < (1u << d); ++mask) {
    std::vector<Index> piv;
    for (Index c = 0; c < d; ++c)
      if (mask & (1u << c)) piv.push_back(c);
    const Index r = static_cast<Index>(piv.size());
    std::vector<std::pair<Index, Index>> free;
    for (Index i = 0; i < r; ++i)
      for (Index c = piv[i] + 1; c < d; ++c)
        if (!(mask & (1u << c))) free.emplace_back(i, c);
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < free.size(); ++k) total *= f.p;
    for (std::uint64_t code = 0; code < total; ++code) {
      MatrixX rows = MatrixX::Constant(r, d, f.zero());
      for (Index i = 0; i < r; ++i) rows(i, piv[i]) = f.one();
      std::uint64_t c = code;
      for (const auto& [i, col] : free) {
        rows(i, col) = f.from_int(static_cast<long long>(c % f.p));
        c /= f.p;
      }
      Subspace s = r ? Subspace::from_rows(rows) : Subspace(d);
      if (is_subbimodule(m, s)) out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<Bimodule> bruteforce_composition_factors(const Bimodule& m) {
  auto lattice = bruteforce_invariant_subspaces(m);
  std::vector<Bimodule> out;
  Subspace current(m.dim());
  while (current.dim() < m.dim()) {
    const Subspace* best = nullptr;
    for (const auto& s : lattice)
      if (s.dim() > current.dim() && s.contains(current) && (!best || s.dim() < best->dim()))
        best = &s;
    Bimodule q = quotient(m, current);
    Subspace img = column_space(MatrixX(quotient_projection(current) * best->basis().transpose()));
    out.push_back(restrict(q, img));
    current = *best;
  }
  return out;
}

bool same_factor_multiset(const std::vector<Bimodule>& a, const std::vector<Bimodule>& b) {
  if (a.size() != b.size()) return false;
  std::vector<bool> used(b.size(), false);
  for (const auto& x : a) {
    bool matched = false;
    for (std::size_t j = 0; j < b.size() && !matched; ++j)
      if (!used[j] && are_isomorphic(x, b[j])) {
        used[j] = true;
        matched = true;
      }
    if (!matched) return false;
  }
  return true;
}

}  // namespace leibniz
