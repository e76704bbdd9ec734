#include "measkit/xreal.hpp"

#include <cctype>
#include <climits>

namespace measkit {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    fail(ErrorCode::ParseError, "malformed rational '" + std::string(text) + "'");
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) fail(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
  Rational r(negative ? Integer(-n) : n, d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

XReal XReal::ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return XReal(r);
}

int XReal::sign() const {
  switch (kind_) {
    case Kind::NegInf: return -1;
    case Kind::PosInf: return 1;
    case Kind::Finite: return sgn(value_);
  }
  return 0;
}

const Rational& XReal::value() const {
  if (!is_finite()) fail(ErrorCode::PreconditionFailed, "value() of an infinite XReal");
  return value_;
}

std::string XReal::to_string() const {
  switch (kind_) {
    case Kind::NegInf: return "-inf";
    case Kind::PosInf: return "inf";
    case Kind::Finite: return measkit::to_string(value_);
  }
  return {};
}

XReal XReal::parse(std::string_view text) {
  if (text == "inf" || text == "+inf") return pos_inf();
  if (text == "-inf") return neg_inf();
  return XReal(parse_rational(text));
}

bool operator==(const XReal& a, const XReal& b) {
  if (a.kind_ != b.kind_) return false;
  return !a.is_finite() || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const XReal& a, const XReal& b) {
  if (a.kind_ != b.kind_) return a.kind_ <=> b.kind_;
  if (!a.is_finite()) return std::strong_ordering::equal;
  int c = ::cmp(a.value_, b.value_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

XReal add_checked(const XReal& a, const XReal& b) {
  if (a.is_finite() && b.is_finite()) return XReal(Rational(a.value() + b.value()));
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
    fail(ErrorCode::UndefinedSum, "inf + (-inf)");
  return a.is_finite() ? b : a;
}

XReal add_total_zero(const XReal& a, const XReal& b) {
  if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf())) return XReal();
  return add_checked(a, b);
}

XReal sub_checked(const XReal& a, const XReal& b) { return add_checked(a, neg(b)); }

XReal mul_mt(const XReal& a, const XReal& b) {
  if (a.is_zero() || b.is_zero()) return XReal();
  if (a.is_finite() && b.is_finite()) return XReal(Rational(a.value() * b.value()));
  return a.sign() * b.sign() > 0 ? XReal::pos_inf() : XReal::neg_inf();
}

XReal neg(const XReal& a) {
  if (a.is_pos_inf()) return XReal::neg_inf();
  if (a.is_neg_inf()) return XReal::pos_inf();
  return XReal(Rational(-a.value()));
}

XReal abs(const XReal& a) { return a.sign() < 0 ? neg(a) : a; }

std::strong_ordering cmp(const XReal& a, const XReal& b) { return a <=> b; }

const XReal& min(const XReal& a, const XReal& b) { return b < a ? b : a; }
const XReal& max(const XReal& a, const XReal& b) { return a < b ? b : a; }

XReal pow_mt(const XReal& a, const XReal& b) {
  if (a.sign() < 0) fail(ErrorCode::PreconditionFailed, "pow_mt base " + a.to_string() + " < 0");
  const XReal one(1);
  if (b.is_zero() || a == one) return one;
  if (!b.is_finite()) {
    bool below_one = a < one;
    if (b.is_pos_inf()) return below_one ? XReal() : XReal::pos_inf();
    return below_one ? XReal::pos_inf() : XReal();
  }
  if (a.is_zero()) return b.sign() > 0 ? XReal() : XReal::pos_inf();
  if (a.is_pos_inf()) return b.sign() > 0 ? XReal::pos_inf() : XReal();
  const Rational& e = b.value();
  if (e.get_den() != 1)
    fail(ErrorCode::UnsupportedExponent,
         a.to_string() + "^" + b.to_string() + " is not an exact rational power");
  Integer magnitude = ::abs(e.get_num());
  if (!magnitude.fits_ulong_p())
    fail(ErrorCode::UnsupportedExponent, "exponent " + b.to_string() + " too large");
  unsigned long k = magnitude.get_ui();
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), a.value().get_num_mpz_t(), k);
  mpz_pow_ui(den.get_mpz_t(), a.value().get_den_mpz_t(), k);
  Rational r = e > 0 ? Rational(num, den) : Rational(den, num);
  r.canonicalize();
  return XReal(r);
}

XReal div_nonneg_mt(const XReal& a, const XReal& b) {
  if (a.sign() < 0 || b.sign() < 0)
    fail(ErrorCode::PreconditionFailed, "div_nonneg_mt on negative operand");
  XReal inverse;
  if (b.is_zero())
    inverse = XReal::pos_inf();
  else if (b.is_pos_inf())
    inverse = XReal();
  else
    inverse = XReal(Rational(1 / b.value()));
  return mul_mt(a, inverse);
}

XReal sum_nonneg(std::span<const XReal> terms) {
  Rational acc;
  bool infinite = false;
  for (const XReal& t : terms) {
    if (t.sign() < 0) fail(ErrorCode::NegativeTerm, "term " + t.to_string() + " < 0");
    if (t.is_pos_inf())
      infinite = true;
    else
      acc += t.value();
  }
  return infinite ? XReal::pos_inf() : XReal(acc);
}

std::string to_decimal(const XReal& a, int digits) {
  if (!a.is_finite()) return a.to_string();
  const Rational& v = a.value();
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits < 0 ? 0 : digits));
  Integer num = ::abs(v.get_num()) * scale;
  Integer q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), v.get_den_mpz_t());
  std::string s = q.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (sgn(v) < 0) s.insert(0, "-");
  if (r != 0) s.insert(0, "~");
  return s;
}

int dyadic_exponent(const Rational& r) {
  if (r.get_num() != 1) return -1;
  const Integer& d = r.get_den();
  if (mpz_popcount(d.get_mpz_t()) != 1) return -1;
  return static_cast<int>(mpz_scan1(d.get_mpz_t(), 0));
}

}  // namespace measkit
