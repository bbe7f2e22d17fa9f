// Copyright 2026 The hellycert Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HELLYCERT_RATIONAL_HPP
#define HELLYCERT_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace hellycert {

/// Raised for contract violations reported by library operations.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Integer = mpz_class;

/**
 * Exact rational number in canonical form.
 *
 * The denominator is always positive, numerator and denominator are coprime,
 * and zero is stored as 0/1. Every constructor canonicalizes.
 */
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  Rational(const Integer& v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  Rational(const Integer& num, const Integer& den) {
    if (den == 0) throw Error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(Integer(s));
      return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw Error("malformed rational '" + s + "'");
    }
  }

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Integer floor() const {
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }
  Integer ceil() const {
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
    return r;
  }

  std::string str() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Canonical rational p/q; throws on q == 0.
inline Rational rational_make(const Integer& p, const Integer& q) { return Rational(p, q); }

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// Dense rational vector; points and normals both live here.
using RVec = std::vector<Rational>;

inline RVec zeros(std::size_t n) { return RVec(n, Rational(0)); }

inline RVec unit_vector(std::size_t n, std::size_t i) {
  RVec e = zeros(n);
  e.at(i) = 1;
  return e;
}

inline Rational dot(const RVec& a, const RVec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  mpq_class s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i].raw() * b[i].raw();
  return Rational(s);
}

inline bool is_zero(const RVec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

inline bool is_integral(const RVec& v) {
  for (const auto& x : v)
    if (!x.is_integer()) return false;
  return true;
}

inline RVec operator+(RVec a, const RVec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

inline RVec operator-(RVec a, const RVec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

inline RVec operator-(RVec a) {
  for (auto& x : a) x = -x;
  return a;
}

inline RVec operator*(const Rational& s, RVec a) {
  for (auto& x : a) x *= s;
  return a;
}

inline Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

/**
 * Positive scale factor s such that s*v is a primitive integer vector
 * (integer entries with gcd 1). Returns 1 for the zero vector.
 */
inline Rational primitive_scale(const RVec& v) {
  Integer l = 1;
  for (const auto& x : v) l = lcm(l, x.den());
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x.num() * (l / x.den()));
  if (g == 0) return Rational(1);
  return Rational(l, g);
}

inline std::string to_string(const RVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].str();
  }
  return s + ")";
}

}  // namespace hellycert

#endif  // HELLYCERT_RATIONAL_HPP
