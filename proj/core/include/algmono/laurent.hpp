#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "algmono/scalar.hpp"

namespace algmono {

/// Element of k[t, t^-1], stored as t^offset * (c_0 + c_1 t + ... + c_w t^w)
/// with c_0 != 0 and c_w != 0. The zero polynomial has no coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long c) : LaurentPoly(Scalar(c)) {}  // NOLINT(google-explicit-constructor)
  LaurentPoly(Scalar c);                            // NOLINT(google-explicit-constructor)
  LaurentPoly(long offset, std::vector<Scalar> coeffs);

  static LaurentPoly monomial(Scalar c, long exponent);
  /// t^k - 1 over the given field.
  static LaurentPoly t_power_minus_one(long k, FieldSpec field = {});
  /// t - 1.
  static LaurentPoly t_minus_one(FieldSpec field = {}) { return t_power_minus_one(1, field); }
  /// Integer coefficient list starting at t^offset (e.g. {1, -1, 1} for t^2 - t + 1).
  static LaurentPoly from_ints(const std::vector<long>& coeffs, long offset = 0, FieldSpec field = {});

  bool is_zero() const { return coeffs_.empty(); }
  /// Units of the Laurent ring are exactly c t^k.
  bool is_unit() const { return coeffs_.size() == 1; }
  bool is_one() const { return is_unit() && offset_ == 0 && coeffs_[0].is_one(); }
  /// Euclidean size: max exponent - min exponent. Undefined (-1) for zero.
  long width() const { return static_cast<long>(coeffs_.size()) - 1; }
  long offset() const { return offset_; }
  long top_exponent() const { return offset_ + width(); }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }
  /// Coefficient of t^e (zero outside the support).
  Scalar coeff(long e) const;
  const Scalar& leading() const { return coeffs_.back(); }
  const Scalar& trailing() const { return coeffs_.front(); }
  std::uint32_t modulus() const;

  LaurentPoly to(FieldSpec field) const;
  LaurentPoly shifted(long k) const;  // t^k * this
  Scalar evaluate(const Scalar& x) const;

  /// Monic associate with offset 0; units map to 1, zero stays zero.
  LaurentPoly normalized() const;
  /// The unit u with this == u * normalized().
  LaurentPoly unit_part() const;
  /// For a unit c t^k, returns c^-1 t^-k.
  LaurentPoly unit_inverse() const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b);

  /// Human-readable form, e.g. "t^2 - t + 1", "t^-1 + 2".
  std::string str(const std::string& var = "t") const;
  /// Coefficients in ascending powers of t, as strings.
  std::vector<std::string> coeff_strings() const;

 private:
  void canonicalize();

  long offset_ = 0;
  std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p);

struct DivMod {
  LaurentPoly quotient;
  LaurentPoly remainder;
};

/// a = q b + r with r == 0 or width(r) < width(b). Throws std::domain_error for b == 0.
DivMod laurent_divmod(const LaurentPoly& a, const LaurentPoly& b);

bool divides(const LaurentPoly& divisor, const LaurentPoly& a);
/// Quotient a / b; throws std::domain_error if the division is not exact.
LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b);

/// Normalized gcd (monic, offset 0).
LaurentPoly gcd(LaurentPoly a, LaurentPoly b);

/// Multiplicity of (t - 1) as a factor of f != 0, by repeated exact division.
int t_minus_one_valuation(const LaurentPoly& f);

/// Rational content of f over Q (positive gcd of numerators over lcm of
/// denominators); 1 for F_p polynomials and for zero.
mpq_class rational_content(const LaurentPoly& f);

}  // namespace algmono
