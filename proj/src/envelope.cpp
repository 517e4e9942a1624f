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

#include "leibniz/envelope.hpp"

#include <sstream>
#include <stdexcept>

namespace leibniz {

namespace {

void add_term(NcPoly& p, const Word& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

void add_term(TensorPoly& p, const WordPair& w, const Scalar& c) {
  if (c.is_zero()) return;
  auto it = p.find(w);
  if (it == p.end()) {
    p.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) p.erase(it);
  }
}

Word concat(const Word& a, const Word& b) {
  Word w = a;
  w.insert(w.end(), b.begin(), b.end());
  return w;
}

// all words of length k over g letters
std::vector<Word> words_of_length(int g, std::size_t k) {
  std::vector<Word> out{Word{}};
  for (std::size_t step = 0; step < k; ++step) {
    std::vector<Word> next;
    for (const auto& w : out)
      for (int x = 0; x < g; ++x) {
        Word v = w;
        v.push_back(x);
        next.push_back(std::move(v));
      }
    out = std::move(next);
  }
  return out;
}

NcPoly linear(const std::vector<std::pair<int, Scalar>>& terms) {
  NcPoly p;
  for (const auto& [g, c] : terms) add_term(p, Word{g}, c);
  return p;
}

void fill_ideal(PresentedAlgebra& p) {
  if (p.cutoff < 2) throw std::invalid_argument("cutoff must be at least 2");
  const int g = p.num_generators();
  const std::size_t slack = static_cast<std::size_t>(p.cutoff - 2);
  for (const auto& rel : p.relations)
    for (std::size_t du = 0; du <= slack; ++du)
      for (std::size_t dv = 0; du + dv <= slack; ++dv)
        for (const auto& u : words_of_length(g, du))
          for (const auto& v : words_of_length(g, dv))
            p.ideal.insert(nc_mul(nc_mul(nc_word(u, Scalar(1)), rel), nc_word(v, Scalar(1))));
}

}  // namespace

NcPoly nc_add(const NcPoly& a, const NcPoly& b, const Scalar& scale) {
  NcPoly out = a;
  for (const auto& [w, c] : b) add_term(out, w, scale * c);
  return out;
}

NcPoly nc_mul(const NcPoly& a, const NcPoly& b) {
  NcPoly out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b) add_term(out, concat(u, v), c * d);
  return out;
}

NcPoly nc_word(const Word& w, const Scalar& c) {
  NcPoly p;
  add_term(p, w, c);
  return p;
}

std::size_t nc_degree(const NcPoly& p) { return p.empty() ? 0 : std::prev(p.end())->first.size(); }

TensorPoly tp_mul(const TensorPoly& a, const TensorPoly& b) {
  TensorPoly out;
  for (const auto& [u, c] : a)
    for (const auto& [v, d] : b)
      add_term(out, WordPair{concat(u.first, v.first), concat(u.second, v.second)}, c * d);
  return out;
}

const char* which_name(Which w) {
  switch (w) {
    case Which::UL: return "ul";
    case Which::ULWeak: return "ulweak";
    case Which::ULie: return "ulie";
  }
  return "?";
}

Which parse_which(const std::string& s) {
  if (s == "ul") return Which::UL;
  if (s == "ulweak") return Which::ULWeak;
  if (s == "ulie") return Which::ULie;
  throw std::invalid_argument("unknown presentation '" + s + "' (ul|ulweak|ulie)");
}

PresentedAlgebra build_presentation(const AlgebraPtr& a, Which which, int cutoff) {
  PresentedAlgebra p;
  p.which = which;
  p.field = a->field();
  p.algebra = a;
  p.cutoff = cutoff;
  const int n = static_cast<int>(a->dim());
  const auto& names = a->basis_names();
  const FieldSpec& f = a->field();
  const Scalar one = f.one();
  auto push = [&](NcPoly rel, std::string name) {
    if (rel.empty()) return;
    p.relations.push_back(std::move(rel));
    p.relation_names.push_back(std::move(name));
  };
  if (which == Which::ULie) {
    if (!is_lie(*a)) throw std::invalid_argument("U_lie needs a Lie algebra (use the canonical quotient)");
    for (int i = 0; i < n; ++i) p.generators.push_back("bar_" + names[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        NcPoly rel = nc_word({i, j}, one);
        add_term(rel, {j, i}, -one);
        for (int k = 0; k < n; ++k) add_term(rel, {k}, -a->c(i, j, k));
        push(std::move(rel), "lie(" + names[static_cast<std::size_t>(i)] + "," +
                                 names[static_cast<std::size_t>(j)] + ")");
      }
  } else {
    for (int i = 0; i < n; ++i) p.generators.push_back("l_" + names[static_cast<std::size_t>(i)]);
    for (int i = 0; i < n; ++i) p.generators.push_back("r_" + names[static_cast<std::size_t>(i)]);
    const auto L = [](int i) { return i; };
    const auto R = [n](int i) { return n + i; };
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const std::string pair = "(" + names[static_cast<std::size_t>(i)] + "," +
                                 names[static_cast<std::size_t>(j)] + ")";
        NcPoly llm = nc_word({L(i), L(j)}, one);
        add_term(llm, {L(j), L(i)}, -one);
        for (int k = 0; k < n; ++k) add_term(llm, {L(k)}, -a->c(i, j, k));
        push(std::move(llm), "llm" + pair);
        NcPoly lml = nc_word({L(i), R(j)}, one);
        add_term(lml, {R(j), L(i)}, -one);
        for (int k = 0; k < n; ++k) add_term(lml, {R(k)}, -a->c(i, j, k));
        push(std::move(lml), "lml" + pair);
        if (which == Which::UL) {
          NcPoly zd = nc_word({R(i), L(j)}, one);
          add_term(zd, {R(i), R(j)}, one);
          push(std::move(zd), "zd" + pair);
        }
      }
  }
  fill_ideal(p);
  return p;
}

PresentedAlgebra free_presentation(const FieldSpec& f, int generators, int cutoff) {
  PresentedAlgebra p;
  p.field = f;
  p.cutoff = cutoff;
  for (int i = 0; i < generators; ++i) p.generators.push_back("g" + std::to_string(i));
  return p;
}

std::vector<Index> filtered_dims(const PresentedAlgebra& p, int d) {
  if (d > p.cutoff) throw std::invalid_argument("filtered_dims: degree exceeds cutoff");
  std::vector<Index> free_dims;
  Index slice = 1, total = 0;
  for (int k = 0; k <= d; ++k) {
    total += slice;
    free_dims.push_back(total);
    slice *= p.num_generators();
  }
  std::vector<Index> out;
  for (int k = 0; k <= d; ++k) {
    Index in_ideal = 0;
    for (const auto& [lead, row] : p.ideal.rows())
      if (static_cast<int>(lead.size()) <= k) ++in_ideal;
    out.push_back(free_dims[static_cast<std::size_t>(k)] - in_ideal);
  }
  return out;
}

Index degree_one_primitive_dim(const PresentedAlgebra& p) {
  Index deg1 = 0;
  for (const auto& [lead, row] : p.ideal.rows())
    if (lead.size() == 1) ++deg1;
  return p.num_generators() - deg1;
}

NcPoly apply_hom(const AlgebraHom& h, const NcPoly& p) {
  NcPoly out;
  for (const auto& [w, c] : p) {
    NcPoly term = nc_word({}, c);
    for (int g : w) {
      if (g < 0 || static_cast<std::size_t>(g) >= h.images.size())
        throw std::invalid_argument("apply_hom: generator out of range");
      term = nc_mul(term, h.images[static_cast<std::size_t>(g)]);
    }
    out = nc_add(out, term, Scalar(1));
  }
  return out;
}

bool verify_hom(const AlgebraHom& h) {
  if (!h.source || !h.target) throw std::invalid_argument("verify_hom: missing endpoints");
  if (static_cast<int>(h.images.size()) != h.source->num_generators())
    throw std::invalid_argument("verify_hom: need one image per generator");
  for (const auto& img : h.images)
    if (nc_degree(img) > 1) throw std::invalid_argument("verify_hom: image of degree > 1");
  for (const auto& rel : h.source->relations)
    if (!h.target->in_ideal(apply_hom(h, rel))) return false;
  return true;
}

EnvelopeMaps build_envelopes(const AlgebraPtr& a, int cutoff) {
  CanonicalLie lie = canonical_lie(*a);
  auto lie_ptr = share(lie.lie);
  return {build_presentation(a, Which::UL, cutoff), build_presentation(a, Which::ULWeak, cutoff),
          build_presentation(lie_ptr, Which::ULie, cutoff), std::move(lie)};
}

namespace {

NcPoly projected(const EnvelopeMaps& e, int i, const Scalar& sign) {
  std::vector<std::pair<int, Scalar>> terms;
  const MatrixX& proj = e.lie.projection.matrix;
  for (Index k = 0; k < proj.rows(); ++k) terms.emplace_back(static_cast<int>(k), sign * proj(k, i));
  return linear(terms);
}

}  // namespace

AlgebraHom make_d0(const EnvelopeMaps& e) {
  AlgebraHom h{"d0", &e.ul, &e.ulie, {}};
  const int n = static_cast<int>(e.ul.algebra->dim());
  for (int i = 0; i < n; ++i) h.images.push_back(projected(e, i, Scalar(1)));
  for (int i = 0; i < n; ++i) h.images.push_back(NcPoly{});
  return h;
}

AlgebraHom make_d1(const EnvelopeMaps& e) {
  AlgebraHom h{"d1", &e.ul, &e.ulie, {}};
  const int n = static_cast<int>(e.ul.algebra->dim());
  for (int i = 0; i < n; ++i) h.images.push_back(projected(e, i, Scalar(1)));
  for (int i = 0; i < n; ++i) h.images.push_back(projected(e, i, Scalar(-1)));
  return h;
}

AlgebraHom make_s0(const EnvelopeMaps& e) {
  AlgebraHom h{"s0", &e.ulie, &e.ul, {}};
  for (Index c : e.lie.kernel.free_columns())
    h.images.push_back(nc_word({static_cast<int>(c)}, Scalar(1)));
  return h;
}

AlgebraHom make_omega(const EnvelopeMaps& e) {
  AlgebraHom h{"omega", &e.ulweak, &e.ul, {}};
  for (int g = 0; g < e.ulweak.num_generators(); ++g) h.images.push_back(nc_word({g}, Scalar(1)));
  return h;
}

bool kernel_products_vanish(const PresentedAlgebra& p) {
  if (p.which == Which::ULie) throw std::invalid_argument("kernel products need UL or UL_weak");
  const int n = static_cast<int>(p.algebra->dim());
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      NcPoly q = nc_word({n + x, y}, Scalar(1));
      add_term(q, {n + x, n + y}, Scalar(1));
      if (!p.in_ideal(q)) return false;
    }
  return true;
}

SectionIdentities check_section_identities(const EnvelopeMaps& e) {
  SectionIdentities s;
  AlgebraHom d0 = make_d0(e), d1 = make_d1(e), s0 = make_s0(e);
  s.d0s0 = s.d1s0 = true;
  for (int g = 0; g < e.ulie.num_generators(); ++g) {
    NcPoly x = nc_word({g}, Scalar(1));
    NcPoly lifted = apply_hom(s0, x);
    if (!e.ulie.in_ideal(nc_add(apply_hom(d0, lifted), x, Scalar(-1)))) s.d0s0 = false;
    if (!e.ulie.in_ideal(nc_add(apply_hom(d1, lifted), x, Scalar(-1)))) s.d1s0 = false;
  }
  s.kernel_product = kernel_products_vanish(e.ul);
  return s;
}

HopfData primitive_hopf_data(const PresentedAlgebra& p) {
  HopfData h;
  for (int g = 0; g < p.num_generators(); ++g) {
    TensorPoly d;
    add_term(d, WordPair{Word{g}, Word{}}, Scalar(1));
    add_term(d, WordPair{Word{}, Word{g}}, Scalar(1));
    h.delta.push_back(std::move(d));
    h.counit.push_back(p.field.zero());
    h.antipode.push_back(nc_word({g}, Scalar(-1)));
  }
  return h;
}

HopfReport hopf_check(const PresentedAlgebra& p, const HopfData& h) {
  if (p.which == Which::UL)
    throw std::invalid_argument("hopf_check: UL is only an augmented algebra; use UL_weak");
  const auto g = static_cast<std::size_t>(p.num_generators());
  if (h.delta.size() != g || h.counit.size() != g || h.antipode.size() != g)
    throw std::invalid_argument("hopf_check: data must cover every generator");
  HopfReport rep;
  rep.counit = rep.coideal = rep.antipode = true;

  // J (x) T + T (x) J inside total degree <= 2
  SparseEchelon<WordPair, PairOrder> jt;
  for (const auto& [lead, row] : p.ideal.rows()) {
    if (lead.size() > 2) continue;
    const std::size_t room = 2 - lead.size();
    for (std::size_t k = 0; k <= room; ++k)
      for (const auto& w : words_of_length(static_cast<int>(g), k)) {
        TensorPoly left, right;
        for (const auto& [u, c] : row) {
          add_term(left, WordPair{u, w}, c);
          add_term(right, WordPair{w, u}, c);
        }
        jt.insert(left);
        jt.insert(right);
      }
  }

  for (const auto& rel : p.relations) {
    Scalar eps = p.field.zero();
    TensorPoly delta;
    NcPoly anti;
    for (const auto& [w, c] : rel) {
      Scalar e = c;
      TensorPoly d;
      add_term(d, WordPair{Word{}, Word{}}, c);
      NcPoly s = nc_word({}, c);
      for (int x : w) {
        e *= h.counit[static_cast<std::size_t>(x)];
        d = tp_mul(d, h.delta[static_cast<std::size_t>(x)]);
        s = nc_mul(h.antipode[static_cast<std::size_t>(x)], s);  // anti-multiplicative
      }
      eps += e;
      for (const auto& [k, v] : d) add_term(delta, k, v);
      anti = nc_add(anti, s, Scalar(1));
    }
    if (!eps.is_zero()) rep.counit = false;
    if (!jt.contains(delta)) rep.coideal = false;
    if (!p.in_ideal(anti)) rep.antipode = false;
  }
  return rep;
}

HopfReport hopf_check(const PresentedAlgebra& p) { return hopf_check(p, primitive_hopf_data(p)); }

VectorX act(const PresentedAlgebra& p, const Word& w, const Bimodule& m, const VectorX& v) {
  if (p.which == Which::ULie) throw std::invalid_argument("act: U_lie does not act on bimodules");
  if (m.algebra_ptr() != p.algebra && !(m.algebra() == *p.algebra))
    throw std::invalid_argument("act: bimodule over a different algebra");
  auto rep = axiom_report(m);
  if (p.which == Which::ULWeak && !rep.weak()) throw std::invalid_argument("act: bimodule is not weak");
  if (p.which == Which::UL && !rep.full()) throw std::invalid_argument("act: bimodule is not full");
  const int n = static_cast<int>(m.algebra_dim());
  VectorX out = v;
  for (auto it = w.rbegin(); it != w.rend(); ++it)
    out = *it < n ? VectorX(m.lambda(*it) * out) : VectorX(m.rho(*it - n) * out);
  return out;
}

VectorX act(const PresentedAlgebra& p, const NcPoly& q, const Bimodule& m, const VectorX& v) {
  VectorX out = VectorX::Constant(v.size(), m.field().zero());
  for (const auto& [w, c] : q) out += c * act(p, w, m, v);
  return out;
}

std::string poly_to_string(const PresentedAlgebra& p, const NcPoly& q) {
  if (q.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = q.rbegin(); it != q.rend(); ++it) {
    const auto& [w, c] = *it;
    os << (first ? "" : " + ") << "(" << c << ")";
    for (int g : w) os << "*" << p.generators[static_cast<std::size_t>(g)];
    first = false;
  }
  return os.str();
}

}  // namespace leibniz
