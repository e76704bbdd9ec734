#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

#include "measkit/error.hpp"

namespace measkit {

using Rational = mpq_class;
using Integer = mpz_class;

// Parses "p/q" or "p" (optional sign). Throws ParseError.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);

/// Extended real number over exact rationals: -inf, a finite rational, or
/// +inf. Finite values are kept in lowest terms.
class XReal {
 public:
  enum class Kind : std::uint8_t { NegInf, Finite, PosInf };

  XReal() = default;
  XReal(const Rational& v) : value_(v) { value_.canonicalize(); }
  template <std::integral T>
  XReal(T v) : value_(static_cast<long>(v)) {}

  static XReal pos_inf() { return XReal(Kind::PosInf); }
  static XReal neg_inf() { return XReal(Kind::NegInf); }
  static XReal ratio(long num, long den);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::Finite; }
  bool is_pos_inf() const { return kind_ == Kind::PosInf; }
  bool is_neg_inf() const { return kind_ == Kind::NegInf; }
  bool is_zero() const { return is_finite() && sgn(value_) == 0; }
  int sign() const;

  // Throws PreconditionFailed for an infinite value.
  const Rational& value() const;

  /// "p/q" in lowest terms, "p" when q = 1, "inf", "-inf".
  std::string to_string() const;
  /// Inverse of to_string; also accepts "+inf".
  static XReal parse(std::string_view text);

  friend bool operator==(const XReal& a, const XReal& b);
  friend std::strong_ordering operator<=>(const XReal& a, const XReal& b);

 private:
  explicit XReal(Kind k) : kind_(k) {}

  Kind kind_ = Kind::Finite;
  Rational value_;
};

// a + b following the standard convention; UndefinedSum for inf + (-inf).
XReal add_checked(const XReal& a, const XReal& b);
// Total variant where inf + (-inf) = 0.
XReal add_total_zero(const XReal& a, const XReal& b);
XReal sub_checked(const XReal& a, const XReal& b);
// Multiplication with the measure-theory rule 0 * (+-inf) = 0.
XReal mul_mt(const XReal& a, const XReal& b);
XReal neg(const XReal& a);
XReal abs(const XReal& a);
std::strong_ordering cmp(const XReal& a, const XReal& b);
const XReal& min(const XReal& a, const XReal& b);
const XReal& max(const XReal& a, const XReal& b);

// a^b for a >= 0 with 0^0 = inf^0 = 1^(+-inf) = 1. Rational bases take
// integer exponents only; other finite pairs throw UnsupportedExponent.
XReal pow_mt(const XReal& a, const XReal& b);

// a / b on the nonnegative half-line: 1/0 = inf, 1/inf = 0, and the
// products inf/inf = 0/0 = 0.
XReal div_nonneg_mt(const XReal& a, const XReal& b);

// Exact sum of nonnegative terms; NegativeTerm if any is < 0.
XReal sum_nonneg(std::span<const XReal> terms);

inline XReal operator+(const XReal& a, const XReal& b) { return add_checked(a, b); }
inline XReal operator-(const XReal& a, const XReal& b) { return sub_checked(a, b); }
inline XReal operator*(const XReal& a, const XReal& b) { return mul_mt(a, b); }
inline XReal operator-(const XReal& a) { return neg(a); }

// Approximate decimal rendering with k fractional digits, prefixed with "~"
// unless exact. Infinite values render as "inf"/"-inf".
std::string to_decimal(const XReal& a, int digits);

// Returns k when r == 2^-k (k >= 0), otherwise -1.
int dyadic_exponent(const Rational& r);

}  // namespace measkit
