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

#ifndef LEIBNIZ_GROTH_HPP
#define LEIBNIZ_GROTH_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "leibniz/bimodule.hpp"

namespace leibniz {

// Class of an irreducible object. Plain labels belong to the rings fed into
// star_product; Sym/Anti label the two sides of a star product.
struct Label {
  enum class Kind { Unit, Plain, Sym, Anti };
  enum class Tag { None, Weight, Int, Nested };

  Kind kind = Kind::Unit;
  Tag tag = Tag::None;
  std::vector<Scalar> weight;
  long long n = 0;
  std::shared_ptr<const Label> inner;

  static Label weighted(Kind k, std::vector<Scalar> w);
  static Label integral(Kind k, long long n);
  static Label nested(Kind k, Label inner);

  bool is_unit() const { return kind == Kind::Unit; }
  std::string tag_string() const;
  std::string to_string() const;
};

int compare(const Label& a, const Label& b);
inline bool operator<(const Label& a, const Label& b) { return compare(a, b) < 0; }
inline bool operator==(const Label& a, const Label& b) { return compare(a, b) == 0; }
inline bool operator!=(const Label& a, const Label& b) { return compare(a, b) != 0; }

// Integer combination of labels, zero coefficients absent.
using GrElement = std::map<Label, long long>;

GrElement gr_label(const Label& l, long long c = 1);
GrElement gr_unit();
GrElement gr_add(const GrElement& a, const GrElement& b, long long scale = 1);
long long gr_coeff(const GrElement& a, const Label& l);
std::string gr_to_string(const GrElement& a);

class FusionRule;
using RulePtr = std::shared_ptr<const FusionRule>;

class FusionRule {
 public:
  virtual ~FusionRule() = default;
  virtual std::string name() const = 0;
  virtual bool owns(const Label& l) const = 0;
  // product of two owned non-unit labels
  virtual GrElement mul_nonunit(const Label& a, const Label& b) const = 0;
  // bound < 0 selects the default window
  virtual std::vector<Label> window(int bound = -1) const = 0;
  // label of the given kind from the text between the parentheses
  virtual Label parse_label(Label::Kind kind, std::string_view tag) const = 0;
  // the factors A, B when the rule is a star product A (*) B
  virtual std::optional<std::pair<RulePtr, RulePtr>> star_factors() const { return std::nullopt; }

  Label unit() const { return Label{}; }
  // throws std::invalid_argument on foreign labels
  GrElement mul(const Label& a, const Label& b) const;
};

// Integers: the unit alone.
RulePtr integer_rule();
// Group ring Z[F^k] on labels P(w).
RulePtr group_rule(const FieldSpec& f, int k);
// Z[t] as Gr(sl2) on labels P(n), n >= 1.
RulePtr zt_rule();
// Gr^bi of a Leibniz algebra whose Lie quotient has k-dimensional weight space.
RulePtr weight_rule(const FieldSpec& f, int k);
RulePtr sl2_rule();
RulePtr star_product(RulePtr a, RulePtr b);
// z | zt | group:k | weight:k | sl2 | star:<a>,<b>
RulePtr parse_rule(std::string_view text, const FieldSpec& f);

// Highest weights of L(m) (x) L(n), descending.
std::vector<long long> clebsch_gordan(long long m, long long n);

GrElement gr_mul(const FusionRule& r, const GrElement& a, const GrElement& b);

// Terms like "2S(1) - A(1,-1) + 3U". Positions in errors are 0-based.
GrElement parse_gr_element(const FusionRule& r, std::string_view text);

enum class Identity { Commutative, Associative, Alternative, Jordan, PowerAssociative };
const char* identity_name(Identity id);
const std::vector<Identity>& all_identities();

struct Counterexample {
  std::vector<GrElement> args;
  GrElement lhs, rhs;
};

struct Verdict {
  Identity identity = Identity::Commutative;
  bool holds = true;
  std::size_t tests = 0;
  std::optional<Counterexample> witness;
};

// Both sides of an identity: uv|vu, (uv)w|u(vw), (uu)v|u(uv), (u^2 v)u|u^2(vu),
// u^2 u^2|(u^2 u)u.
std::pair<GrElement, GrElement> identity_sides(const FusionRule& r, Identity id,
                                               const std::vector<GrElement>& args);

// Labels of the window first, then sums of two labels in the first slot
// (arity <= 2; also three for power associativity), then `trials` random
// combinations with coefficients in [-3, 3].
Verdict check_identity(const FusionRule& r, Identity id, const std::vector<Label>& window,
                       int trials, std::uint64_t seed);
std::vector<Verdict> identity_checkers(const FusionRule& r, const std::vector<Label>& window,
                                       int trials, std::uint64_t seed);

struct CriterionHit {
  char clause = 'a';
  bool swapped = false;  // roles of A and B exchanged
  Label a, a2, b;        // a2 only for clause (a)
  GrElement lhs, rhs;    // replay of the counterexample expression
  bool confirmed = false;
};

struct CriterionScan {
  std::vector<CriterionHit> hits;  // first hit per clause and orientation
  bool fires(char clause) const;
  bool all_confirmed() const;
};

// Throws std::invalid_argument unless the rule is a star product.
CriterionScan criterion_scan(const FusionRule& r, const std::vector<Label>& window);

enum class Registry { Weight, Sl2 };
Registry parse_registry(std::string_view s);

// weight: weight_rule(F, dim L/LL); sl2: sl2_rule.
RulePtr registry_rule(const LeibnizAlgebra& a, Registry reg);

// Refuses non-full input and uncertified composition series.
GrElement class_of_bimodule(const Bimodule& m, Registry reg, std::uint64_t seed = 0);

struct PairCheck {
  GrElement product, bar, under;
  bool ok = false;
};

struct RingCheck {
  std::vector<PairCheck> pairs;
  bool ok() const;
};

RingCheck verify_ring_vs_modules(const FusionRule& r, Registry reg,
                                 const std::vector<std::pair<Bimodule, Bimodule>>& pairs);

}  // namespace leibniz

#endif  // LEIBNIZ_GROTH_HPP
