#include "algmono/laurent.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace algmono {

LaurentPoly::LaurentPoly(Scalar c) {
  if (!c.is_zero()) coeffs_.push_back(std::move(c));
}

LaurentPoly::LaurentPoly(long offset, std::vector<Scalar> coeffs) : offset_(offset), coeffs_(std::move(coeffs)) {
  canonicalize();
}

LaurentPoly LaurentPoly::monomial(Scalar c, long exponent) {
  LaurentPoly p(std::move(c));
  if (!p.is_zero()) p.offset_ = exponent;
  return p;
}

LaurentPoly LaurentPoly::t_power_minus_one(long k, FieldSpec field) {
  return monomial(Scalar::in(field, 1), k) - LaurentPoly(Scalar::in(field, 1));
}

LaurentPoly LaurentPoly::from_ints(const std::vector<long>& coeffs, long offset, FieldSpec field) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(Scalar::in(field, v));
  return LaurentPoly(offset, std::move(c));
}

void LaurentPoly::canonicalize() {
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const Scalar& s) { return !s.is_zero(); });
  if (first == coeffs_.end()) {
    coeffs_.clear();
    offset_ = 0;
    return;
  }
  offset_ += first - coeffs_.begin();
  coeffs_.erase(coeffs_.begin(), first);
  while (coeffs_.back().is_zero()) coeffs_.pop_back();
}

Scalar LaurentPoly::coeff(long e) const {
  if (is_zero()) return Scalar(0);
  if (e < offset_ || e > top_exponent()) return Scalar::in(coeffs_[0].field(), 0);
  return coeffs_[static_cast<std::size_t>(e - offset_)];
}

std::uint32_t LaurentPoly::modulus() const { return is_zero() ? 0 : coeffs_[0].modulus(); }

LaurentPoly LaurentPoly::to(FieldSpec field) const {
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const auto& s : coeffs_) c.push_back(s.to(field));
  return LaurentPoly(offset_, std::move(c));
}

LaurentPoly LaurentPoly::shifted(long k) const {
  LaurentPoly out = *this;
  if (!out.is_zero()) out.offset_ += k;
  return out;
}

Scalar LaurentPoly::evaluate(const Scalar& x) const {
  if (is_zero()) return Scalar(0);
  Scalar acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  Scalar power(1);
  long e = offset_;
  Scalar base = e >= 0 ? x : x.inverse();
  for (long i = 0; i < (e >= 0 ? e : -e); ++i) power *= base;
  return acc * power;
}

LaurentPoly LaurentPoly::normalized() const {
  if (is_zero()) return {};
  Scalar inv = leading().inverse();
  std::vector<Scalar> c;
  c.reserve(coeffs_.size());
  for (const auto& s : coeffs_) c.push_back(s * inv);
  return LaurentPoly(0, std::move(c));
}

LaurentPoly LaurentPoly::unit_part() const {
  if (is_zero()) throw std::domain_error("unit part of zero polynomial");
  return monomial(leading(), offset_);
}

LaurentPoly LaurentPoly::unit_inverse() const {
  if (!is_unit()) throw std::domain_error("not a unit: " + str());
  return monomial(coeffs_[0].inverse(), -offset_);
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out = *this;
  for (auto& s : out.coeffs_) s = -s;
  return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  long lo = std::min(offset_, o.offset_);
  long hi = std::max(top_exponent(), o.top_exponent());
  std::vector<Scalar> c(static_cast<std::size_t>(hi - lo + 1), Scalar(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[static_cast<std::size_t>(offset_ - lo) + i] += coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[static_cast<std::size_t>(o.offset_ - lo) + i] += o.coeffs_[i];
  offset_ = lo;
  coeffs_ = std::move(c);
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Scalar> c(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.offset_ + b.offset_, std::move(c));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
  return a.offset_ == b.offset_ && a.coeffs_ == b.coeffs_;
}

std::string LaurentPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long e = top_exponent(); e >= offset_; --e) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(e - offset_)];
    if (c.is_zero()) continue;
    bool negative = c.modulus() == 0 && c.rational() < 0;
    Scalar mag = negative ? -c : c;
    if (first) os << (negative ? "-" : "");
    else os << (negative ? " - " : " + ");
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (!mag.is_one()) os << mag;
    os << var;
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

std::vector<std::string> LaurentPoly::coeff_strings() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(c.str());
  return out;
}

std::ostream& operator<<(std::ostream& os, const LaurentPoly& p) { return os << p.str(); }

DivMod laurent_divmod(const LaurentPoly& a, const LaurentPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  // Divide the offset-0 parts as ordinary polynomials, then restore the shifts:
  // a = t^oa a', b = t^ob b', a' = q' b' + r'  =>  a = t^(oa-ob) q' b + t^oa r'.
  const auto& bc = b.coeffs();
  std::vector<Scalar> rem = a.coeffs();
  const long db = b.width();
  const long da = a.width();
  if (da < db) return {LaurentPoly(), a};
  std::vector<Scalar> quot(static_cast<std::size_t>(da - db + 1), Scalar(0));
  Scalar lead_inv = b.leading().inverse();
  for (long k = da - db; k >= 0; --k) {
    const Scalar& top = rem[static_cast<std::size_t>(k + db)];
    if (top.is_zero()) continue;
    Scalar q = top * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    for (long j = 0; j <= db; ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {LaurentPoly(a.offset() - b.offset(), std::move(quot)), LaurentPoly(a.offset(), std::move(rem))};
}

bool divides(const LaurentPoly& divisor, const LaurentPoly& a) {
  if (divisor.is_zero()) return a.is_zero();
  return laurent_divmod(a, divisor).remainder.is_zero();
}

LaurentPoly exact_divide(const LaurentPoly& a, const LaurentPoly& b) {
  auto [q, r] = laurent_divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("inexact division of " + a.str() + " by " + b.str());
  return q;
}

LaurentPoly gcd(LaurentPoly a, LaurentPoly b) {
  while (!b.is_zero()) {
    LaurentPoly r = laurent_divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.normalized();
}

int t_minus_one_valuation(const LaurentPoly& f) {
  if (f.is_zero()) throw std::domain_error("(t-1)-valuation of zero");
  const LaurentPoly d = LaurentPoly::t_minus_one(f.coeffs()[0].field());
  int v = 0;
  LaurentPoly g = f;
  for (;;) {
    auto [q, r] = laurent_divmod(g, d);
    if (!r.is_zero()) return v;
    g = std::move(q);
    ++v;
  }
}

mpq_class rational_content(const LaurentPoly& f) {
  if (f.is_zero() || f.modulus() != 0) return 1;
  mpz_class num = 0, den = 1;
  for (const auto& c : f.coeffs()) {
    const mpq_class& q = c.rational();
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), q.get_num().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den().get_mpz_t());
  }
  mpq_class out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace algmono
