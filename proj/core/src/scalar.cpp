#include "algmono/scalar.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace algmono {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint32_t p) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  return FieldSpec(p);
}

FieldSpec FieldSpec::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)) && c != '_' && c != '(' && c != ')') s += c;
  if (s == "Q" || s == "QQ") return rationals();
  std::string digits;
  if (s.size() > 1 && s[0] == 'F') digits = s.substr(1);
  else if (s.size() > 2 && s.compare(0, 2, "GF") == 0) digits = s.substr(2);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw std::invalid_argument("unknown field '" + text + "' (expected Q or F<p>)");
  return prime(static_cast<std::uint32_t>(std::stoul(digits)));
}

std::string FieldSpec::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

namespace {

std::uint64_t reduce_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return r.get_ui();
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint32_t p) {
  if (a % p == 0) throw std::domain_error("division by zero in F" + std::to_string(p));
  // Fermat.
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

Scalar Scalar::in(FieldSpec field, long v) { return Scalar(v).to(field); }

Scalar Scalar::in(FieldSpec field, const mpq_class& q) { return Scalar(q).to(field); }

Scalar Scalar::parse(const std::string& text, FieldSpec field) {
  mpq_class q;
  try {
    std::string s = text;
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("");
    if (q.get_den() == 0) throw std::invalid_argument("");
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  q.canonicalize();
  return Scalar(q).to(field);
}

FieldSpec Scalar::field() const { return FieldSpec(p_); }

bool Scalar::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }

bool Scalar::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

Scalar Scalar::to(FieldSpec field) const {
  std::uint32_t p = field.characteristic();
  if (p == p_) return *this;
  if (p_ != 0) throw std::logic_error("cannot move a scalar between F" + std::to_string(p_) + " and " + field.name());
  Scalar out = *this;
  out.promote_to(p);
  return out;
}

void Scalar::promote_to(std::uint32_t p) {
  if (p == p_ || p == 0) return;
  if (p_ != 0) throw std::logic_error("mixed prime fields F" + std::to_string(p_) + " and F" + std::to_string(p));
  std::uint64_t den = reduce_mod(q_.get_den(), p);
  if (den == 0) throw std::domain_error("denominator of " + q_.get_str() + " vanishes in F" + std::to_string(p));
  r_ = reduce_mod(q_.get_num(), p) * inverse_mod(den, p) % p;
  q_ = 0;
  p_ = p;
}

std::uint32_t Scalar::common_modulus(const Scalar& a, const Scalar& b) {
  if (a.p_ != 0 && b.p_ != 0 && a.p_ != b.p_)
    throw std::logic_error("mixed prime fields F" + std::to_string(a.p_) + " and F" + std::to_string(b.p_));
  return std::max(a.p_, b.p_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  Scalar out = *this;
  if (p_ == 0) out.q_ = 1 / q_;
  else out.r_ = inverse_mod(r_, p_);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (p_ == 0) out.q_ = -q_;
  else out.r_ = (p_ - r_) % p_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    q_ += o.q_;
    return *this;
  }
  promote_to(p);
  Scalar other = o.to(field());
  r_ = (r_ + other.r_) % p;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  std::uint32_t p = common_modulus(*this, o);
  if (p == 0) {
    q_ *= o.q_;
    return *this;
  }
  promote_to(p);
  Scalar other = o.to(field());
  r_ = r_ * other.r_ % p;
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

bool operator==(const Scalar& a, const Scalar& b) {
  std::uint32_t p = Scalar::common_modulus(a, b);
  if (p == 0) return a.q_ == b.q_;
  Scalar x = a, y = b;
  x.promote_to(p);
  y.promote_to(p);
  return x.r_ == y.r_;
}

std::string Scalar::str() const { return p_ == 0 ? q_.get_str() : std::to_string(r_); }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace algmono
