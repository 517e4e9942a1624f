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

#include "leibniz/scalar.hpp"

#include <charconv>
#include <ostream>

namespace leibniz {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t reduce_mpz(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p > 0xFFFFFFFFull || !is_prime(p))
    throw std::invalid_argument("modulus " + std::to_string(p) +
                                " is not a supported prime");
  FieldSpec f;
  f.kind = Kind::PrimeField;
  f.p = static_cast<std::uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q") return rationals();
  if (text.substr(0, 3) == "Fp:") {
    std::uint64_t p = 0;
    auto body = text.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size())
      throw std::invalid_argument("bad field '" + std::string(text) + "'");
    return prime(p);
  }
  throw std::invalid_argument("bad field '" + std::string(text) +
                              "' (expected Q or Fp:<p>)");
}

std::string FieldSpec::to_string() const {
  return is_rational() ? "Q" : "Fp:" + std::to_string(p);
}

Scalar FieldSpec::zero() const { return from_int(0); }
Scalar FieldSpec::one() const { return from_int(1); }

Scalar FieldSpec::from_int(long long v) const {
  if (is_rational()) return Scalar(v);
  long long r = v % static_cast<long long>(p);
  if (r < 0) r += p;
  return Scalar::residue(static_cast<std::uint64_t>(r), p);
}

Scalar FieldSpec::from_rational(const mpq_class& q) const {
  return coerce(Scalar(q));
}

Scalar FieldSpec::coerce(const Scalar& s) const {
  if (is_rational()) {
    if (s.is_residue())
      throw std::domain_error("residue " + s.to_string() + " used over Q");
    return s;
  }
  if (s.is_residue()) {
    if (s.modulus() != p) throw std::domain_error("mixed moduli");
    return s;
  }
  Scalar z = Scalar::residue(0, p);
  return z + s;
}

Scalar FieldSpec::parse_scalar(std::string_view text) const {
  std::string t(text);
  if (t.empty()) throw std::invalid_argument("empty scalar");
  if (is_rational()) {
    mpq_class q;
    auto slash = t.find('/');
    try {
      if (slash == std::string::npos) {
        q = mpq_class(mpz_class(t, 10));
      } else {
        mpz_class num(t.substr(0, slash), 10);
        mpz_class den(t.substr(slash + 1), 10);
        if (den == 0) throw std::invalid_argument("zero denominator");
        q = mpq_class(num, den);
      }
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("bad rational '" + t + "': " + e.what());
    }
    return Scalar(q);
  }
  for (char c : t)
    if (c < '0' || c > '9')
      throw std::invalid_argument("bad residue '" + t + "'");
  mpz_class z(t, 10);
  if (z >= p) throw std::invalid_argument("residue '" + t + "' out of range");
  return Scalar::residue(z.get_ui(), p);
}

Scalar Scalar::residue(std::uint64_t r, std::uint32_t p) {
  Scalar s;
  s.p_ = p;
  s.r_ = r % p;
  return s;
}

const mpq_class& Scalar::rational() const {
  if (p_) throw std::domain_error("residue has no rational value");
  return q_;
}

void Scalar::to_residue(std::uint32_t p) {
  std::uint64_t num = reduce_mpz(q_.get_num(), p);
  std::uint64_t den = reduce_mpz(q_.get_den(), p);
  if (den == 0)
    throw std::domain_error("denominator of " + q_.get_str() +
                            " vanishes mod " + std::to_string(p));
  r_ = mulmod(num, powmod(den, p - 2, p), p);
  p_ = p;
  q_ = 0;
}

void Scalar::unify(Scalar& a, Scalar& b) {
  if (a.p_ == b.p_) return;
  if (a.p_ == 0) {
    a.to_residue(b.p_);
  } else if (b.p_ == 0) {
    b.to_residue(a.p_);
  } else {
    throw std::domain_error("scalars from different prime fields");
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (p_ == o.p_) {
    if (p_) {
      r_ += o.r_;
      if (r_ >= p_) r_ -= p_;
    } else {
      q_ += o.q_;
    }
    return *this;
  }
  Scalar b = o;
  unify(*this, b);
  return *this += b;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  if (p_ == o.p_) {
    if (p_) {
      r_ = r_ >= o.r_ ? r_ - o.r_ : r_ + p_ - o.r_;
    } else {
      q_ -= o.q_;
    }
    return *this;
  }
  Scalar b = o;
  unify(*this, b);
  return *this -= b;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (p_ == o.p_) {
    if (p_) {
      r_ = mulmod(r_, o.r_, p_);
    } else {
      q_ *= o.q_;
    }
    return *this;
  }
  Scalar b = o;
  unify(*this, b);
  return *this *= b;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (p_ != o.p_) {
    Scalar b = o;
    unify(*this, b);
    return *this /= b;
  }
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (p_) {
    s.r_ = r_ ? p_ - r_ : 0;
  } else {
    s.q_ = -q_;
  }
  return s;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (p_) return residue(powmod(r_, p_ - 2, p_), p_);
  return Scalar(mpq_class(1) / q_);
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ ? a.r_ == b.r_ : a.q_ == b.q_;
  Scalar x = a, y = b;
  Scalar::unify(x, y);
  return x == y;
}

bool operator<(const Scalar& a, const Scalar& b) {
  if (a.p_ == b.p_) return a.p_ ? a.r_ < b.r_ : a.q_ < b.q_;
  Scalar x = a, y = b;
  Scalar::unify(x, y);
  return x < y;
}

std::string Scalar::to_string() const {
  return p_ ? std::to_string(r_) : q_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) {
  return os << s.to_string();
}

}  // namespace leibniz
