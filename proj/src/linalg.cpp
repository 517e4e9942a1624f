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

#include "leibniz/linalg.hpp"

#include <algorithm>
#include <set>

namespace leibniz {

namespace {

// polynomials below are stored lowest coefficient first
using Poly = std::vector<Scalar>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  while (a.size() >= b.size() && !a.empty()) {
    const Scalar f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_div(Poly a, const Poly& b) {
  trim(a);
  if (a.size() < b.size()) return {};
  Poly q(a.size() - b.size() + 1, Scalar(0));
  while (a.size() >= b.size() && !a.empty()) {
    const Scalar f = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    q[shift] = f;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return q;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Scalar eval(const Poly& p, const Scalar& x) {
  Scalar acc(0);
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

constexpr unsigned long kFactorLimit = 1000000000000UL;
constexpr std::uint32_t kResidueScanLimit = 200000;

std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0 || n > kFactorLimit) return std::nullopt;
  unsigned long v = n.get_ui();
  std::vector<mpz_class> out;
  for (unsigned long d = 1; d * d <= v; ++d) {
    if (v % d) continue;
    out.emplace_back(d);
    if (d != v / d) out.emplace_back(v / d);
  }
  return out;
}

}  // namespace

std::optional<std::vector<Scalar>> field_roots(const std::vector<Scalar>& poly,
                                               const FieldSpec& field) {
  Poly p(poly.rbegin(), poly.rend());
  trim(p);
  if (p.empty()) throw std::invalid_argument("field_roots: zero polynomial");
  std::vector<Scalar> roots;
  if (!field.is_rational()) {
    if (field.p > kResidueScanLimit) return std::nullopt;
    for (std::uint32_t r = 0; r < field.p; ++r) {
      Scalar x = Scalar::residue(r, field.p);
      if (eval(p, x).is_zero()) roots.push_back(x);
    }
    return roots;
  }
  // roots of the squarefree part, whose coefficients stay small
  Poly dp;
  for (std::size_t i = 1; i < p.size(); ++i)
    dp.push_back(p[i] * Scalar(static_cast<long>(i)));
  Poly sq = p;
  if (!dp.empty()) sq = poly_div(p, poly_gcd(p, dp));
  trim(sq);
  std::size_t low = 0;
  while (low < sq.size() && sq[low].is_zero()) ++low;
  if (low > 0) roots.emplace_back(0);
  Poly q(sq.begin() + static_cast<std::ptrdiff_t>(low), sq.end());
  if (q.size() <= 1) return roots;
  mpz_class lcm = 1;
  for (const auto& c : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(),
                                  c.rational().get_den_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : q) {
    mpq_class v = c.rational() * lcm;
    ints.push_back(v.get_num());
  }
  auto num_divs = divisors(ints.front());
  auto den_divs = divisors(ints.back());
  if (!num_divs || !den_divs) return std::nullopt;
  std::set<Scalar> found;
  for (const auto& a : *num_divs)
    for (const auto& b : *den_divs)
      for (int sign : {1, -1}) {
        Scalar x(mpq_class(a * sign, b));
        if (eval(q, x).is_zero()) found.insert(x);
      }
  roots.insert(roots.end(), found.begin(), found.end());
  return roots;
}

std::optional<std::vector<Scalar>> eigenvalues_in_field(const MatrixX& a,
                                                        const FieldSpec& field) {
  if (a.rows() == 0) return std::vector<Scalar>{};
  return field_roots(charpoly(a), field);
}

}  // namespace leibniz
