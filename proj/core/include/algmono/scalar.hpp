#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace algmono {

/// Coefficient field: the rationals (modulus 0) or a prime field F_p.
class FieldSpec {
 public:
  constexpr FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec(); }
  /// Throws std::invalid_argument unless p is prime.
  static FieldSpec prime(std::uint32_t p);
  /// Accepts "Q", "QQ", "F2", "F_3", "GF(5)".
  static FieldSpec parse(const std::string& text);

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  std::string name() const;

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  friend class Scalar;
  explicit constexpr FieldSpec(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n);

/// Element of Q or of F_p. A scalar built without a field (modulus 0, integral
/// value) is promoted on contact with an F_p scalar, so integer literals can be
/// mixed freely with field elements.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  static Scalar in(FieldSpec field, long v);
  static Scalar in(FieldSpec field, const mpq_class& q);
  /// Parses "3", "-2/5".
  static Scalar parse(const std::string& text, FieldSpec field = {});

  std::uint32_t modulus() const { return p_; }
  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Valid only when modulus() == 0.
  const mpq_class& rational() const { return q_; }
  /// Valid only when modulus() != 0.
  std::uint64_t residue() const { return r_; }

  /// Image of this scalar in `field`; throws std::domain_error when a
  /// denominator vanishes mod p.
  Scalar to(FieldSpec field) const;

  Scalar inverse() const;
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string str() const;

 private:
  void promote_to(std::uint32_t p);
  static std::uint32_t common_modulus(const Scalar& a, const Scalar& b);

  mpq_class q_{0};
  std::uint64_t r_ = 0;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace algmono
