#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace comat {

using BigInt = boost::multiprecision::cpp_int;

/// Error type for violated preconditions and malformed algebraic data.
struct algebra_error : std::runtime_error {
  explicit algebra_error(const std::string& what) : std::runtime_error(what) {}
};

/// Ground field tag: p == 0 is the rationals, otherwise the prime field F_p.
struct Field {
  std::int64_t p = 0;

  bool is_rational() const { return p == 0; }
  friend bool operator==(const Field&, const Field&) = default;
  std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
};

inline Field field_q() { return Field{0}; }
inline Field field_fp(std::int64_t p) {
  if (p < 2) throw algebra_error("field_fp: modulus must be >= 2");
  return Field{p};
}

/// Exact field element: reduced num/den over Q, residue in [0,p) over F_p.
/// All arithmetic is exact; mixing elements of different fields throws.
class Scalar {
 public:
  Scalar() = default;  // zero over Q

  static Scalar zero(Field f) { return Scalar(f, 0, 1); }
  static Scalar one(Field f) { return Scalar(f, 1, 1); }
  static Scalar of(Field f, std::int64_t n) { return Scalar(f, BigInt(n), 1); }
  static Scalar rational(BigInt num, BigInt den) {
    return Scalar(field_q(), std::move(num), std::move(den));
  }
  static Scalar residue(std::int64_t p, BigInt v) {
    return Scalar(field_fp(p), std::move(v), 1);
  }

  Scalar(Field f, BigInt num, BigInt den) : field_(f), num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  const Field& field() const { return field_; }
  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }

  Scalar operator-() const { return Scalar(field_, -num_, den_); }
  Scalar operator+(const Scalar& o) const {
    check_field(o);
    return Scalar(field_, num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  Scalar operator-(const Scalar& o) const { return *this + (-o); }
  Scalar operator*(const Scalar& o) const {
    check_field(o);
    return Scalar(field_, num_ * o.num_, den_ * o.den_);
  }
  Scalar operator/(const Scalar& o) const { return *this * o.inverse(); }
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  Scalar inverse() const {
    if (is_zero()) throw algebra_error("Scalar: division by zero");
    if (field_.is_rational()) return Scalar(field_, den_, num_);
    return Scalar(field_, mod_inverse(num_, field_.p), 1);
  }

  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.field_ == b.field_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Total order used for deterministic pivoting and canonical maps.
  friend bool operator<(const Scalar& a, const Scalar& b) {
    a.check_field(b);
    return a.num_ * b.den_ < b.num_ * a.den_;
  }

  std::string str() const {
    if (field_.is_rational() && den_ != 1) return num_.str() + "/" + den_.str();
    return num_.str();
  }

 private:
  void check_field(const Scalar& o) const {
    if (!(field_ == o.field_)) throw algebra_error("Scalar: mixed fields " + field_.name() + " and " + o.field_.name());
  }

  void normalize() {
    if (den_ == 0) throw algebra_error("Scalar: zero denominator");
    if (field_.is_rational()) {
      if (den_ < 0) { num_ = -num_; den_ = -den_; }
      BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
      if (g > 1) { num_ /= g; den_ /= g; }
      if (num_ == 0) den_ = 1;
    } else {
      if (den_ != 1) {  // fold a rational-style input into the residue
        num_ *= mod_inverse(((den_ % field_.p) + field_.p) % field_.p, field_.p);
        den_ = 1;
      }
      num_ %= field_.p;
      if (num_ < 0) num_ += field_.p;
    }
  }

  static BigInt mod_inverse(BigInt a, std::int64_t p) {
    a %= p;
    if (a < 0) a += p;
    if (a == 0) throw algebra_error("Scalar: division by zero in F_p");
    // extended Euclid
    BigInt r0 = p, r1 = a, s0 = 0, s1 = 1;
    while (r1 != 0) {
      BigInt q = r0 / r1;
      BigInt r2 = r0 - q * r1;
      BigInt s2 = s0 - q * s1;
      r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw algebra_error("Scalar: modulus is not prime");
    s0 %= p;
    if (s0 < 0) s0 += p;
    return s0;
  }

  Field field_{};
  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace comat
