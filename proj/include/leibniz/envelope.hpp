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

#ifndef LEIBNIZ_ENVELOPE_HPP
#define LEIBNIZ_ENVELOPE_HPP

#include <iterator>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "leibniz/bimodule.hpp"

namespace leibniz {

// Noncommutative polynomials: words in generator indices, deg-lex ordered.
using Word = std::vector<int>;

struct DegLex {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  }
};

using NcPoly = std::map<Word, Scalar, DegLex>;

// Elements of T (x) T, keyed by pairs of words.
using WordPair = std::pair<Word, Word>;

struct PairOrder {
  bool operator()(const WordPair& a, const WordPair& b) const {
    const auto da = a.first.size() + a.second.size(), db = b.first.size() + b.second.size();
    if (da != db) return da < db;
    if (a.first != b.first) return DegLex{}(a.first, b.first);
    return DegLex{}(a.second, b.second);
  }
};

using TensorPoly = std::map<WordPair, Scalar, PairOrder>;

NcPoly nc_add(const NcPoly& a, const NcPoly& b, const Scalar& scale);
NcPoly nc_mul(const NcPoly& a, const NcPoly& b);
NcPoly nc_word(const Word& w, const Scalar& c);
std::size_t nc_degree(const NcPoly& p);
TensorPoly tp_mul(const TensorPoly& a, const TensorPoly& b);

// Span of sparse vectors kept with pairwise distinct leading keys.
template <typename Key, typename Cmp>
class SparseEchelon {
 public:
  using Poly = std::map<Key, Scalar, Cmp>;

  Poly reduce(Poly p) const {
    while (!p.empty()) {
      auto lead = std::prev(p.end());
      auto row = rows_.find(lead->first);
      if (row == rows_.end()) return p;
      const Scalar c = lead->second;
      for (const auto& [k, v] : row->second) {
        auto it = p.find(k);
        if (it == p.end()) {
          p.emplace(k, -(c * v));
        } else {
          it->second -= c * v;
          if (it->second.is_zero()) p.erase(it);
        }
      }
    }
    return p;
  }

  bool insert(Poly p) {
    p = reduce(std::move(p));
    if (p.empty()) return false;
    const Scalar inv = std::prev(p.end())->second.inverse();
    for (auto& [k, v] : p) v *= inv;
    const Key lead = std::prev(p.end())->first;
    rows_.emplace(lead, std::move(p));
    return true;
  }

  bool contains(const Poly& p) const { return reduce(p).empty(); }
  std::size_t size() const { return rows_.size(); }
  const std::map<Key, Poly, Cmp>& rows() const { return rows_; }

 private:
  std::map<Key, Poly, Cmp> rows_;
};

enum class Which { UL, ULWeak, ULie };
const char* which_name(Which w);
Which parse_which(const std::string& s);

struct PresentedAlgebra {
  Which which = Which::UL;
  FieldSpec field;
  AlgebraPtr algebra;  // L for UL / UL_weak, the Lie algebra for U_lie
  std::vector<std::string> generators;
  std::vector<NcPoly> relations;
  std::vector<std::string> relation_names;
  int cutoff = 3;
  SparseEchelon<Word, DegLex> ideal;  // span of u.rel.v with |u| + |v| + 2 <= cutoff

  int num_generators() const { return static_cast<int>(generators.size()); }
  bool in_ideal(const NcPoly& p) const { return ideal.contains(p); }
};

// ULie requires a Lie algebra.
PresentedAlgebra build_presentation(const AlgebraPtr& a, Which which, int cutoff = 3);
// Free algebra on n generators (no relations), for reference counts.
PresentedAlgebra free_presentation(const FieldSpec& f, int generators, int cutoff);

// Dimensions of the degree <= d slices of the quotient, d = 0..D:
// dim F_d - dim(I_cutoff cap F_d).
std::vector<Index> filtered_dims(const PresentedAlgebra& p, int d);
Index degree_one_primitive_dim(const PresentedAlgebra& p);

struct AlgebraHom {
  std::string name;
  const PresentedAlgebra* source = nullptr;
  const PresentedAlgebra* target = nullptr;
  std::vector<NcPoly> images;  // one per source generator, degree <= 1
};

NcPoly apply_hom(const AlgebraHom& h, const NcPoly& p);
bool verify_hom(const AlgebraHom& h);

struct EnvelopeMaps {
  PresentedAlgebra ul, ulweak, ulie;
  CanonicalLie lie;
};

EnvelopeMaps build_envelopes(const AlgebraPtr& a, int cutoff = 3);
AlgebraHom make_d0(const EnvelopeMaps& e);
AlgebraHom make_d1(const EnvelopeMaps& e);
AlgebraHom make_s0(const EnvelopeMaps& e);
AlgebraHom make_omega(const EnvelopeMaps& e);

struct SectionIdentities {
  bool d0s0 = false, d1s0 = false, kernel_product = false;
};

SectionIdentities check_section_identities(const EnvelopeMaps& e);
// r_x (l_y + r_y) in the ideal of p for all basis pairs.
bool kernel_products_vanish(const PresentedAlgebra& p);

struct HopfData {
  std::vector<TensorPoly> delta;
  std::vector<Scalar> counit;
  std::vector<NcPoly> antipode;
};

HopfData primitive_hopf_data(const PresentedAlgebra& p);

struct HopfReport {
  bool counit = false, coideal = false, antipode = false;
  bool all() const { return counit && coideal && antipode; }
};

// Throws for UL, which is only augmented.
HopfReport hopf_check(const PresentedAlgebra& p, const HopfData& h);
HopfReport hopf_check(const PresentedAlgebra& p);

// Word g_1 ... g_k acts as g_1 o ... o g_k (l_i by lambda_i, r_i by rho_i).
VectorX act(const PresentedAlgebra& p, const Word& w, const Bimodule& m, const VectorX& v);
VectorX act(const PresentedAlgebra& p, const NcPoly& q, const Bimodule& m, const VectorX& v);

std::string poly_to_string(const PresentedAlgebra& p, const NcPoly& q);

}  // namespace leibniz

#endif  // LEIBNIZ_ENVELOPE_HPP
