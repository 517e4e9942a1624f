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

#include "leibniz/groth.hpp"

#include <algorithm>
#include <cctype>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "leibniz/tensor.hpp"

namespace leibniz {

Label Label::weighted(Kind k, std::vector<Scalar> w) {
  Label l;
  l.kind = k;
  l.tag = Tag::Weight;
  l.weight = std::move(w);
  return l;
}

Label Label::integral(Kind k, long long n) {
  Label l;
  l.kind = k;
  l.tag = Tag::Int;
  l.n = n;
  return l;
}

Label Label::nested(Kind k, Label inner) {
  Label l;
  l.kind = k;
  l.tag = Tag::Nested;
  l.inner = std::make_shared<const Label>(std::move(inner));
  return l;
}

std::string Label::tag_string() const {
  switch (tag) {
    case Tag::None:
      return "";
    case Tag::Int:
      return std::to_string(n);
    case Tag::Nested:
      return inner->to_string();
    case Tag::Weight: {
      std::string s;
      for (std::size_t i = 0; i < weight.size(); ++i) s += (i ? "," : "") + weight[i].to_string();
      return s;
    }
  }
  return "";
}

std::string Label::to_string() const {
  switch (kind) {
    case Kind::Unit:
      return "U";
    case Kind::Plain:
      return "P(" + tag_string() + ")";
    case Kind::Sym:
      return "S(" + tag_string() + ")";
    case Kind::Anti:
      return "A(" + tag_string() + ")";
  }
  return "?";
}

int compare(const Label& a, const Label& b) {
  if (a.kind != b.kind) return a.kind < b.kind ? -1 : 1;
  if (a.tag != b.tag) return a.tag < b.tag ? -1 : 1;
  switch (a.tag) {
    case Label::Tag::None:
      return 0;
    case Label::Tag::Int:
      return a.n < b.n ? -1 : a.n > b.n ? 1 : 0;
    case Label::Tag::Nested:
      return compare(*a.inner, *b.inner);
    case Label::Tag::Weight:
      if (a.weight.size() != b.weight.size()) return a.weight.size() < b.weight.size() ? -1 : 1;
      for (std::size_t i = 0; i < a.weight.size(); ++i) {
        if (a.weight[i] < b.weight[i]) return -1;
        if (b.weight[i] < a.weight[i]) return 1;
      }
      return 0;
  }
  return 0;
}

GrElement gr_label(const Label& l, long long c) {
  GrElement g;
  if (c != 0) g.emplace(l, c);
  return g;
}

GrElement gr_unit() { return gr_label(Label{}); }

GrElement gr_add(const GrElement& a, const GrElement& b, long long scale) {
  GrElement out = a;
  for (const auto& [l, c] : b) {
    auto [it, fresh] = out.emplace(l, scale * c);
    if (!fresh) it->second += scale * c;
    if (it->second == 0) out.erase(it);
  }
  return out;
}

long long gr_coeff(const GrElement& a, const Label& l) {
  auto it = a.find(l);
  return it == a.end() ? 0 : it->second;
}

std::string gr_to_string(const GrElement& a) {
  if (a.empty()) return "0";
  // P, S, A terms with tags descending, then the unit
  std::vector<std::pair<Label, long long>> terms(a.rbegin(), a.rend());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& x, const auto& y) {
    const auto rank = [](Label::Kind k) { return k == Label::Kind::Unit ? 4 : static_cast<int>(k); };
    return rank(x.first.kind) < rank(y.first.kind);
  });
  std::string s;
  bool first = true;
  for (const auto& [l, c] : terms) {
    long long m = c;
    if (!first) {
      s += m < 0 ? " - " : " + ";
      m = m < 0 ? -m : m;
    } else if (m < 0) {
      s += "-";
      m = -m;
    }
    if (m != 1) s += std::to_string(m);
    s += l.to_string();
    first = false;
  }
  return s;
}

GrElement FusionRule::mul(const Label& a, const Label& b) const {
  if (!owns(a)) throw std::invalid_argument("label " + a.to_string() + " is foreign to rule " + name());
  if (!owns(b)) throw std::invalid_argument("label " + b.to_string() + " is foreign to rule " + name());
  if (a.is_unit()) return gr_label(b);
  if (b.is_unit()) return gr_label(a);
  return mul_nonunit(a, b);
}

std::vector<long long> clebsch_gordan(long long m, long long n) {
  if (m < 0 || n < 0) throw std::invalid_argument("clebsch_gordan: negative highest weight");
  std::vector<long long> out;
  for (long long w = m + n; w >= (m > n ? m - n : n - m); w -= 2) out.push_back(w);
  return out;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

long long parse_int_tag(std::string_view tag) {
  tag = trim(tag);
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(std::string(tag), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != tag.size()) throw std::invalid_argument("bad integer tag '" + std::string(tag) + "'");
  if (v < 0) throw std::invalid_argument("negative highest weight " + std::string(tag));
  return v;
}

std::vector<Scalar> parse_weight_tag(std::string_view tag, const FieldSpec& f, int k) {
  std::vector<Scalar> w;
  std::size_t start = 0;
  while (true) {
    auto comma = tag.find(',', start);
    w.push_back(f.parse_scalar(trim(tag.substr(start, comma - start))));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (static_cast<int>(w.size()) != k)
    throw std::invalid_argument("weight tag '" + std::string(tag) + "' needs " + std::to_string(k) + " entries");
  return w;
}

bool all_zero(const std::vector<Scalar>& w) {
  return std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
}

std::vector<std::vector<Scalar>> weight_box(const FieldSpec& f, int k, int r) {
  std::set<std::vector<Scalar>> seen;
  std::vector<long long> digits(static_cast<std::size_t>(k), -r);
  while (true) {
    std::vector<Scalar> w;
    for (long long d : digits) w.push_back(f.from_int(d));
    if (!all_zero(w)) seen.insert(w);
    std::size_t i = 0;
    while (i < digits.size() && digits[i] == r) digits[i++] = -r;
    if (i == digits.size()) break;
    ++digits[i];
  }
  return {seen.begin(), seen.end()};
}

bool weight_owned(const Label& l, const FieldSpec& f, int k) {
  if (l.tag != Label::Tag::Weight || static_cast<int>(l.weight.size()) != k || all_zero(l.weight)) return false;
  for (const auto& s : l.weight) {
    if (f.is_rational() ? s.is_residue() : s.modulus() != f.p) return false;
  }
  return true;
}

std::vector<Scalar> add_weights(const std::vector<Scalar>& a, const std::vector<Scalar>& b) {
  std::vector<Scalar> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

class IntegerRule final : public FusionRule {
 public:
  std::string name() const override { return "z"; }
  bool owns(const Label& l) const override { return l.is_unit(); }
  GrElement mul_nonunit(const Label&, const Label&) const override { return {}; }
  std::vector<Label> window(int) const override { return {Label{}}; }
  Label parse_label(Label::Kind, std::string_view tag) const override {
    throw std::invalid_argument("rule z has no label with tag '" + std::string(tag) + "'");
  }
};

class GroupRule final : public FusionRule {
 public:
  GroupRule(FieldSpec f, int k) : f_(f), k_(k) {}
  std::string name() const override { return "group:" + std::to_string(k_); }
  bool owns(const Label& l) const override {
    return l.is_unit() || (l.kind == Label::Kind::Plain && weight_owned(l, f_, k_));
  }
  GrElement mul_nonunit(const Label& a, const Label& b) const override {
    auto w = add_weights(a.weight, b.weight);
    return all_zero(w) ? gr_unit() : gr_label(Label::weighted(Label::Kind::Plain, std::move(w)));
  }
  std::vector<Label> window(int bound) const override {
    std::vector<Label> out{Label{}};
    for (auto& w : weight_box(f_, k_, bound < 0 ? 2 : bound))
      out.push_back(Label::weighted(Label::Kind::Plain, std::move(w)));
    return out;
  }
  Label parse_label(Label::Kind kind, std::string_view tag) const override {
    if (kind != Label::Kind::Plain) throw std::invalid_argument("rule " + name() + " only has P(...) labels");
    auto w = parse_weight_tag(tag, f_, k_);
    return all_zero(w) ? Label{} : Label::weighted(kind, std::move(w));
  }

 private:
  FieldSpec f_;
  int k_;
};

class ZtRule final : public FusionRule {
 public:
  std::string name() const override { return "zt"; }
  bool owns(const Label& l) const override {
    return l.is_unit() || (l.kind == Label::Kind::Plain && l.tag == Label::Tag::Int && l.n >= 1);
  }
  GrElement mul_nonunit(const Label& a, const Label& b) const override {
    GrElement out;
    for (long long w : clebsch_gordan(a.n, b.n))
      out = gr_add(out, w == 0 ? gr_unit() : gr_label(Label::integral(Label::Kind::Plain, w)));
    return out;
  }
  std::vector<Label> window(int bound) const override {
    std::vector<Label> out{Label{}};
    for (long long n = 1; n <= (bound < 0 ? 6 : bound); ++n) out.push_back(Label::integral(Label::Kind::Plain, n));
    return out;
  }
  Label parse_label(Label::Kind kind, std::string_view tag) const override {
    if (kind != Label::Kind::Plain) throw std::invalid_argument("rule zt only has P(...) labels");
    const long long n = parse_int_tag(tag);
    return n == 0 ? Label{} : Label::integral(kind, n);
  }
};

bool sided(Label::Kind k) { return k == Label::Kind::Sym || k == Label::Kind::Anti; }
bool sided(const Label& l) { return sided(l.kind); }

class WeightRule final : public FusionRule {
 public:
  WeightRule(FieldSpec f, int k) : f_(f), k_(k) {}
  std::string name() const override { return "weight:" + std::to_string(k_); }
  bool owns(const Label& l) const override { return l.is_unit() || (sided(l) && weight_owned(l, f_, k_)); }
  GrElement mul_nonunit(const Label& a, const Label& b) const override {
    if (a.kind != b.kind) return {};
    auto w = add_weights(a.weight, b.weight);
    return all_zero(w) ? gr_unit() : gr_label(Label::weighted(a.kind, std::move(w)));
  }
  std::vector<Label> window(int bound) const override {
    std::vector<Label> out{Label{}};
    const auto box = weight_box(f_, k_, bound < 0 ? 2 : bound);
    for (auto kind : {Label::Kind::Sym, Label::Kind::Anti})
      for (const auto& w : box) out.push_back(Label::weighted(kind, w));
    return out;
  }
  Label parse_label(Label::Kind kind, std::string_view tag) const override {
    if (!sided(kind)) throw std::invalid_argument("rule " + name() + " has S(...) and A(...) labels");
    auto w = parse_weight_tag(tag, f_, k_);
    return all_zero(w) ? Label{} : Label::weighted(kind, std::move(w));
  }
  std::optional<std::pair<RulePtr, RulePtr>> star_factors() const override {
    return std::make_pair(group_rule(f_, k_), group_rule(f_, k_));
  }

 private:
  FieldSpec f_;
  int k_;
};

class Sl2Rule final : public FusionRule {
 public:
  std::string name() const override { return "sl2"; }
  bool owns(const Label& l) const override {
    return l.is_unit() || (sided(l) && l.tag == Label::Tag::Int && l.n >= 1);
  }
  GrElement mul_nonunit(const Label& a, const Label& b) const override {
    if (a.kind != b.kind) return {};
    GrElement out;
    for (long long w : clebsch_gordan(a.n, b.n))
      out = gr_add(out, w == 0 ? gr_unit() : gr_label(Label::integral(a.kind, w)));
    return out;
  }
  std::vector<Label> window(int bound) const override {
    std::vector<Label> out{Label{}};
    for (auto kind : {Label::Kind::Sym, Label::Kind::Anti})
      for (long long n = 1; n <= (bound < 0 ? 6 : bound); ++n) out.push_back(Label::integral(kind, n));
    return out;
  }
  Label parse_label(Label::Kind kind, std::string_view tag) const override {
    if (kind != Label::Kind::Sym && kind != Label::Kind::Anti)
      throw std::invalid_argument("rule sl2 has S(...) and A(...) labels");
    const long long n = parse_int_tag(tag);
    return n == 0 ? Label{} : Label::integral(kind, n);
  }
  std::optional<std::pair<RulePtr, RulePtr>> star_factors() const override {
    return std::make_pair(zt_rule(), zt_rule());
  }
};

Label parse_label_text(const FusionRule& r, std::string_view text);

class StarRule final : public FusionRule {
 public:
  StarRule(RulePtr a, RulePtr b) : a_(std::move(a)), b_(std::move(b)) {}
  std::string name() const override { return "star:" + a_->name() + "," + b_->name(); }

  bool owns(const Label& l) const override {
    if (l.is_unit()) return true;
    if (!sided(l)) return false;
    const Label u = unwrap(l);
    return !u.is_unit() && side(l.kind).owns(u);
  }
  GrElement mul_nonunit(const Label& a, const Label& b) const override {
    if (a.kind != b.kind) return {};
    GrElement out;
    for (const auto& [l, c] : side(a.kind).mul(unwrap(a), unwrap(b)))
      out = gr_add(out, gr_label(l.is_unit() ? Label{} : wrap(l, a.kind), c));
    return out;
  }
  std::vector<Label> window(int bound) const override {
    std::vector<Label> out{Label{}};
    for (auto kind : {Label::Kind::Sym, Label::Kind::Anti})
      for (const auto& l : side(kind).window(bound))
        if (!l.is_unit()) out.push_back(wrap(l, kind));
    return out;
  }
  Label parse_label(Label::Kind kind, std::string_view tag) const override {
    if (!sided(kind)) throw std::invalid_argument("star rules have S(...) and A(...) labels");
    const auto t = trim(tag);
    const bool labelled = t == "U" || (t.size() > 2 && std::isalpha(static_cast<unsigned char>(t[0])) && t[1] == '(');
    const Label inner = labelled ? parse_label_text(side(kind), t) : side(kind).parse_label(Label::Kind::Plain, t);
    return inner.is_unit() ? Label{} : wrap(inner, kind);
  }
  std::optional<std::pair<RulePtr, RulePtr>> star_factors() const override { return std::make_pair(a_, b_); }

 private:
  const FusionRule& side(Label::Kind k) const { return k == Label::Kind::Sym ? *a_ : *b_; }

  static Label wrap(const Label& l, Label::Kind kind) {
    if (l.kind != Label::Kind::Plain) return Label::nested(kind, l);
    Label out = l;
    out.kind = kind;
    return out;
  }
  static Label unwrap(const Label& l) {
    if (l.tag == Label::Tag::Nested) return *l.inner;
    Label out = l;
    out.kind = Label::Kind::Plain;
    return out;
  }

  RulePtr a_, b_;
};

std::runtime_error parse_error(std::string_view what, std::size_t pos) {
  return std::runtime_error("parse error at position " + std::to_string(pos) + ": " + std::string(what));
}

Label::Kind kind_of(char c) {
  switch (c) {
    case 'P':
      return Label::Kind::Plain;
    case 'S':
      return Label::Kind::Sym;
    case 'A':
      return Label::Kind::Anti;
    default:
      return Label::Kind::Unit;
  }
}

Label parse_label_text(const FusionRule& r, std::string_view text) {
  text = trim(text);
  if (text == "U") return Label{};
  if (text.size() < 3 || kind_of(text[0]) == Label::Kind::Unit || text[1] != '(' || text.back() != ')')
    throw std::invalid_argument("bad label '" + std::string(text) + "'");
  return r.parse_label(kind_of(text[0]), text.substr(2, text.size() - 3));
}

}  // namespace

RulePtr integer_rule() { return std::make_shared<IntegerRule>(); }

RulePtr group_rule(const FieldSpec& f, int k) {
  if (k < 0) throw std::invalid_argument("group rule needs k >= 0");
  return std::make_shared<GroupRule>(f, k);
}

RulePtr zt_rule() { return std::make_shared<ZtRule>(); }

RulePtr weight_rule(const FieldSpec& f, int k) {
  if (k < 0) throw std::invalid_argument("weight rule needs k >= 0");
  return std::make_shared<WeightRule>(f, k);
}

RulePtr sl2_rule() { return std::make_shared<Sl2Rule>(); }

RulePtr star_product(RulePtr a, RulePtr b) {
  if (!a || !b) throw std::invalid_argument("star_product: null rule");
  return std::make_shared<StarRule>(std::move(a), std::move(b));
}

RulePtr parse_rule(std::string_view text, const FieldSpec& f) {
  text = trim(text);
  auto count = [&](std::string_view prefix) {
    const auto rest = std::string(text.substr(prefix.size()));
    std::size_t used = 0;
    int k = -1;
    try {
      k = std::stoi(rest, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != rest.size() || k < 0) throw std::invalid_argument("bad rule '" + std::string(text) + "'");
    return k;
  };
  if (text == "z") return integer_rule();
  if (text == "zt") return zt_rule();
  if (text == "sl2") return sl2_rule();
  if (text.rfind("group:", 0) == 0) return group_rule(f, count("group:"));
  if (text.rfind("weight:", 0) == 0) return weight_rule(f, count("weight:"));
  if (text.rfind("star:", 0) == 0) {
    const auto rest = text.substr(5);
    const auto comma = rest.find(',');
    if (comma == std::string_view::npos) throw std::invalid_argument("star rule needs star:<a>,<b>");
    return star_product(parse_rule(rest.substr(0, comma), f), parse_rule(rest.substr(comma + 1), f));
  }
  throw std::invalid_argument("unknown rule '" + std::string(text) + "' (z|zt|group:k|weight:k|sl2|star:a,b)");
}

GrElement gr_mul(const FusionRule& r, const GrElement& a, const GrElement& b) {
  GrElement out;
  for (const auto& [la, ca] : a)
    for (const auto& [lb, cb] : b) out = gr_add(out, r.mul(la, lb), ca * cb);
  return out;
}

GrElement parse_gr_element(const FusionRule& r, std::string_view text) {
  GrElement out;
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (i == text.size()) throw parse_error("empty expression", i);
  if (text.substr(i) == "0") return out;
  bool first = true;
  while (true) {
    skip();
    if (i == text.size()) break;
    long long sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw parse_error("expected '+' or '-'", i);
    }
    long long coeff = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      coeff = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) coeff = coeff * 10 + (text[i++] - '0');
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        skip();
      }
    }
    const std::size_t start = i;
    if (i == text.size()) throw parse_error("expected a label", i);
    if (text[i] == 'U') {
      ++i;
    } else if (kind_of(text[i]) != Label::Kind::Unit && i + 1 < text.size() && text[i + 1] == '(') {
      int depth = 0;
      ++i;
      do {
        if (text[i] == '(') ++depth;
        if (text[i] == ')') --depth;
        ++i;
      } while (i < text.size() && depth > 0);
      if (depth != 0) throw parse_error("unbalanced parentheses", start);
    } else {
      throw parse_error("expected U, P(..), S(..) or A(..)", i);
    }
    Label l;
    try {
      l = parse_label_text(r, text.substr(start, i - start));
    } catch (const std::exception& e) {
      throw parse_error(e.what(), start);
    }
    if (!r.owns(l)) throw parse_error("label " + l.to_string() + " is foreign to rule " + r.name(), start);
    out = gr_add(out, gr_label(l, sign * coeff));
    first = false;
  }
  return out;
}

const char* identity_name(Identity id) {
  switch (id) {
    case Identity::Commutative:
      return "commutative";
    case Identity::Associative:
      return "associative";
    case Identity::Alternative:
      return "alternative";
    case Identity::Jordan:
      return "jordan";
    case Identity::PowerAssociative:
      return "power_associative";
  }
  return "?";
}

const std::vector<Identity>& all_identities() {
  static const std::vector<Identity> ids{Identity::Commutative, Identity::Associative, Identity::Alternative,
                                         Identity::Jordan, Identity::PowerAssociative};
  return ids;
}

namespace {

std::size_t arity(Identity id) {
  switch (id) {
    case Identity::Associative:
      return 3;
    case Identity::PowerAssociative:
      return 1;
    default:
      return 2;
  }
}

}  // namespace

std::pair<GrElement, GrElement> identity_sides(const FusionRule& r, Identity id,
                                               const std::vector<GrElement>& args) {
  if (args.size() != arity(id)) throw std::invalid_argument(std::string(identity_name(id)) + ": wrong number of arguments");
  auto m = [&](const GrElement& a, const GrElement& b) { return gr_mul(r, a, b); };
  const GrElement& u = args[0];
  switch (id) {
    case Identity::Commutative:
      return {m(u, args[1]), m(args[1], u)};
    case Identity::Associative:
      return {m(m(u, args[1]), args[2]), m(u, m(args[1], args[2]))};
    case Identity::Alternative:
      return {m(m(u, u), args[1]), m(u, m(u, args[1]))};
    case Identity::Jordan: {
      const GrElement u2 = m(u, u);
      return {m(m(u2, args[1]), u), m(u2, m(args[1], u))};
    }
    case Identity::PowerAssociative: {
      const GrElement u2 = m(u, u);
      return {m(u2, u2), m(m(u2, u), u)};
    }
  }
  return {};
}

Verdict check_identity(const FusionRule& r, Identity id, const std::vector<Label>& window, int trials,
                       std::uint64_t seed) {
  if (window.empty()) throw std::invalid_argument("identity check needs a non-empty window");
  for (const auto& l : window)
    if (!r.owns(l)) throw std::invalid_argument("window label " + l.to_string() + " is foreign to rule " + r.name());
  Verdict v;
  v.identity = id;
  auto test = [&](std::vector<GrElement> args) {
    ++v.tests;
    auto [lhs, rhs] = identity_sides(r, id, args);
    if (lhs == rhs) return false;
    v.holds = false;
    v.witness = Counterexample{std::move(args), std::move(lhs), std::move(rhs)};
    return true;
  };
  const std::size_t n = window.size();
  const std::size_t k = arity(id);

  // labels in every slot
  std::vector<std::size_t> idx(k, 0);
  while (true) {
    std::vector<GrElement> args;
    for (auto i : idx) args.push_back(gr_label(window[i]));
    if (test(std::move(args))) return v;
    std::size_t s = k;
    while (s > 0 && ++idx[s - 1] == n) idx[--s] = 0;
    if (s == 0) break;
  }
  // sums of two labels in the first slot (three for power associativity)
  if (k <= 2) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        const GrElement u = gr_add(gr_label(window[i]), gr_label(window[j]));
        if (k == 1) {
          if (test({u})) return v;
        } else {
          for (std::size_t l = 0; l < n; ++l)
            if (test({u, gr_label(window[l])})) return v;
        }
      }
  }
  if (k == 1) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::size_t l = j + 1; l < n; ++l)
          if (test({gr_add(gr_add(gr_label(window[i]), gr_label(window[j])), gr_label(window[l]))})) return v;
  }
  std::mt19937_64 rng(seed);
  auto random_element = [&] {
    const std::size_t terms = 1 + rng() % std::min<std::size_t>(6, n);
    GrElement g;
    for (std::size_t t = 0; t < terms; ++t)
      g = gr_add(g, gr_label(window[rng() % n], static_cast<long long>(rng() % 7) - 3));
    return g;
  };
  for (int t = 0; t < trials; ++t) {
    std::vector<GrElement> args;
    for (std::size_t s = 0; s < k; ++s) args.push_back(random_element());
    if (test(std::move(args))) return v;
  }
  return v;
}

std::vector<Verdict> identity_checkers(const FusionRule& r, const std::vector<Label>& window, int trials,
                                       std::uint64_t seed) {
  std::vector<Verdict> out;
  for (auto id : all_identities()) out.push_back(check_identity(r, id, window, trials, seed));
  return out;
}

bool CriterionScan::fires(char clause) const {
  return std::any_of(hits.begin(), hits.end(), [&](const CriterionHit& h) { return h.clause == clause; });
}

bool CriterionScan::all_confirmed() const {
  return std::all_of(hits.begin(), hits.end(), [](const CriterionHit& h) { return h.confirmed; });
}

CriterionScan criterion_scan(const FusionRule& r, const std::vector<Label>& window) {
  if (!r.star_factors()) throw std::invalid_argument("criterion_scan: rule " + r.name() + " is not a star product");
  const Label one;
  auto m = [&](const GrElement& a, const GrElement& b) { return gr_mul(r, a, b); };
  CriterionScan scan;
  for (bool swapped : {false, true}) {
    const auto ka = swapped ? Label::Kind::Anti : Label::Kind::Sym;
    const auto kb = swapped ? Label::Kind::Sym : Label::Kind::Anti;
    std::vector<Label> as, bs;
    for (const auto& l : window) {
      if (!r.owns(l)) throw std::invalid_argument("window label " + l.to_string() + " is foreign to rule " + r.name());
      if (l.kind == ka) as.push_back(l);
      if (l.kind == kb) bs.push_back(l);
    }
    auto record = [&](char clause, const Label& a, const Label& a2, const Label& b, GrElement lhs, GrElement rhs) {
      CriterionHit h{clause, swapped, a, a2, b, std::move(lhs), std::move(rhs), false};
      h.confirmed = h.lhs != h.rhs;
      scan.hits.push_back(std::move(h));
    };
    if (!bs.empty()) {
      const GrElement b = gr_label(bs.front());
      // (a): (a a') b = n b but a (a' b) = 0
      bool found = false;
      for (std::size_t i = 0; i < as.size() && !found; ++i)
        for (std::size_t j = i; j < as.size() && !found; ++j)
          if (gr_coeff(r.mul(as[i], as[j]), one) != 0) {
            const GrElement a = gr_label(as[i]), a2 = gr_label(as[j]);
            record('a', as[i], as[j], bs.front(), m(m(a, a2), b), m(a, m(a2, b)));
            found = true;
          }
      // (b): (a a) b vs a (a b)
      for (const auto& l : as)
        if (gr_coeff(r.mul(l, l), one) != 0) {
          const GrElement a = gr_label(l);
          record('b', l, l, bs.front(), m(m(a, a), b), m(a, m(a, b)));
          break;
        }
    }
    // (c): a^2 has a non-unit term, b^2 has a unit term; (a^2 b) b vs a^2 (b b)
    const Label* ca = nullptr;
    for (const auto& l : as) {
      const auto sq = r.mul(l, l);
      if (std::any_of(sq.begin(), sq.end(), [](const auto& t) { return !t.first.is_unit(); })) {
        ca = &l;
        break;
      }
    }
    const Label* cb = nullptr;
    for (const auto& l : bs)
      if (gr_coeff(r.mul(l, l), one) != 0) {
        cb = &l;
        break;
      }
    if (ca && cb) {
      const GrElement a = gr_label(*ca), b = gr_label(*cb), a2 = m(a, a);
      record('c', *ca, *ca, *cb, m(m(a2, b), b), m(a2, m(b, b)));
    }
  }
  return scan;
}

Registry parse_registry(std::string_view s) {
  if (s == "weight") return Registry::Weight;
  if (s == "sl2") return Registry::Sl2;
  throw std::invalid_argument("unknown registry '" + std::string(s) + "' (weight|sl2)");
}

namespace {

std::vector<Index> weight_coordinates(const LeibnizAlgebra& a) {
  return products_and_series(a).product_span.free_columns();
}

}  // namespace

RulePtr registry_rule(const LeibnizAlgebra& a, Registry reg) {
  if (reg == Registry::Sl2) {
    if (!has_sl2_head(a)) throw std::invalid_argument("sl2 registry needs an algebra with an sl2 head");
    return sl2_rule();
  }
  return weight_rule(a.field(), static_cast<int>(weight_coordinates(a).size()));
}

GrElement class_of_bimodule(const Bimodule& m, Registry reg, std::uint64_t seed) {
  if (!axiom_report(m).full()) throw std::invalid_argument("class_of_bimodule: input is not a full bimodule");
  if (reg == Registry::Sl2 && !has_sl2_head(m.algebra()))
    throw std::invalid_argument("sl2 registry needs an algebra with an sl2 head");
  const auto rep = chop(m, seed);
  if (!rep.certified)
    throw std::runtime_error("class_of_bimodule: composition series (" + rep.strategy + ") is uncertified");
  const auto coords = weight_coordinates(m.algebra());
  GrElement out;
  for (const auto& f : rep.factors) {
    const auto kind = f.symmetric ? Label::Kind::Sym : Label::Kind::Anti;
    if (!f.symmetric && !f.anti_symmetric)
      throw std::runtime_error("class_of_bimodule: factor is neither symmetric nor anti-symmetric");
    Label l;
    if (reg == Registry::Weight) {
      if (f.module.dim() != 1) throw std::runtime_error("class_of_bimodule: factor of dim > 1 in weight registry");
      std::vector<Scalar> w;
      for (Index c : coords) w.push_back(f.left_weights[static_cast<std::size_t>(c)]);
      if (!all_zero(w)) l = Label::weighted(kind, std::move(w));
    } else {
      if (!f.highest_weight) throw std::runtime_error("class_of_bimodule: factor without a highest weight");
      if (*f.highest_weight != 0) l = Label::integral(kind, *f.highest_weight);
    }
    out = gr_add(out, gr_label(l));
  }
  return out;
}

bool RingCheck::ok() const {
  return !pairs.empty() && std::all_of(pairs.begin(), pairs.end(), [](const PairCheck& p) { return p.ok; });
}

RingCheck verify_ring_vs_modules(const FusionRule& r, Registry reg,
                                 const std::vector<std::pair<Bimodule, Bimodule>>& pairs) {
  RingCheck rc;
  for (const auto& [m, n] : pairs) {
    const GrElement cm = class_of_bimodule(m, reg), cn = class_of_bimodule(n, reg);
    auto irreducible = [](const GrElement& g) { return g.size() == 1 && g.begin()->second == 1; };
    if (!irreducible(cm) || !irreducible(cn))
      throw std::invalid_argument("verify_ring_vs_modules: inputs must be irreducible");
    PairCheck pc;
    pc.product = gr_mul(r, cm, cn);
    pc.bar = class_of_bimodule(trunc_bar(m, n), reg);
    pc.under = class_of_bimodule(trunc_under(m, n), reg);
    pc.ok = pc.product == pc.bar && pc.bar == pc.under;
    rc.pairs.push_back(std::move(pc));
  }
  return rc;
}

}  // namespace leibniz
