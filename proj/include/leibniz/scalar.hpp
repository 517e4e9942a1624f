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

#ifndef LEIBNIZ_SCALAR_HPP
#define LEIBNIZ_SCALAR_HPP

#include <gmpxx.h>

#include <Eigen/Core>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace leibniz {

class Scalar;

// Ground field: the rationals or a prime field F_p.
struct FieldSpec {
  enum class Kind { Rationals, PrimeField };

  Kind kind = Kind::Rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }
  static FieldSpec prime(std::uint64_t p);
  // "Q" or "Fp:<p>"
  static FieldSpec parse(std::string_view text);

  bool is_rational() const { return kind == Kind::Rationals; }
  std::uint32_t characteristic() const { return is_rational() ? 0 : p; }
  std::string to_string() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long v) const;
  Scalar from_rational(const mpq_class& q) const;
  Scalar parse_scalar(std::string_view text) const;
  // checks that s lives in this field (unbound integer constants are coerced)
  Scalar coerce(const Scalar& s) const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
    return a.kind == b.kind && a.p == b.p;
  }
};

bool is_prime(std::uint64_t n);

// Exact scalar. A value with modulus 0 is a rational; rationals built from
// plain integers adapt to F_p when combined with a residue, which lets Eigen
// use Scalar(0) and Scalar(1) regardless of the field.
class Scalar {
 public:
  Scalar() = default;
  Scalar(int v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Scalar(long long v) : q_(static_cast<long>(v)) {}  // NOLINT
  explicit Scalar(const mpq_class& q) : q_(q) { q_.canonicalize(); }
  static Scalar residue(std::uint64_t r, std::uint32_t p);

  std::uint32_t modulus() const { return p_; }
  bool is_residue() const { return p_ != 0; }
  const mpq_class& rational() const;
  std::uint64_t residue_value() const { return r_; }

  bool is_zero() const { return p_ ? r_ == 0 : sgn(q_) == 0; }
  bool is_one() const { return p_ ? r_ == 1 : q_ == 1; }
  Scalar inverse() const;
  std::string to_string() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  // total order used for map keys; not compatible with field structure
  friend bool operator<(const Scalar& a, const Scalar& b);
  friend bool operator>(const Scalar& a, const Scalar& b) { return b < a; }
  friend bool operator<=(const Scalar& a, const Scalar& b) { return !(b < a); }
  friend bool operator>=(const Scalar& a, const Scalar& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Scalar& s);

 private:
  // brings a and b to a common modulus (throws on mismatch)
  static void unify(Scalar& a, Scalar& b);
  void to_residue(std::uint32_t p);

  mpq_class q_;
  std::uint64_t r_ = 0;
  std::uint32_t p_ = 0;
};

inline Scalar abs(const Scalar& s) { return s; }

}  // namespace leibniz

namespace Eigen {

template <>
struct NumTraits<leibniz::Scalar> : GenericNumTraits<leibniz::Scalar> {
  typedef leibniz::Scalar Real;
  typedef leibniz::Scalar NonInteger;
  typedef leibniz::Scalar Nested;
  typedef leibniz::Scalar Literal;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 8,
    MulCost = 16
  };
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

namespace leibniz {

using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
using RowVectorX = Eigen::Matrix<Scalar, 1, Eigen::Dynamic>;

}  // namespace leibniz

#endif  // LEIBNIZ_SCALAR_HPP
