#include "caplab/rational.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "caplab/error.hpp"

namespace caplab {

namespace mp = boost::multiprecision;

const char* to_string(Ordering ordering) {
  switch (ordering) {
    case Ordering::Less: return "Less";
    case Ordering::Equal: return "Equal";
    case Ordering::Greater: return "Greater";
  }
  return "?";
}

Rational::Rational(std::int64_t value) : value_(value) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  value_ = den < 0 ? mp::cpp_rational(-num, -den) : mp::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view digits, std::size_t offset) {
    if (digits.empty()) throw ParseError("expected digits in rational '" + std::string(text) + "'", offset);
    for (std::size_t i = 0; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) {
        throw ParseError("unexpected character '" + std::string(1, digits[i]) +
                             "' in rational '" + std::string(text) + "'",
                         offset + i);
      }
    }
    return BigInt(std::string(digits));
  };

  std::size_t start = 0;
  bool negative = false;
  if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    start = 1;
  }
  const auto slash = text.find('/', start);
  BigInt num = parse_int(text.substr(start, slash == std::string_view::npos ? std::string_view::npos : slash - start), start);
  BigInt den = 1;
  if (slash != std::string_view::npos) {
    den = parse_int(text.substr(slash + 1), slash + 1);
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "zero denominator in rational '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(num, den);
}

BigInt Rational::num() const { return mp::numerator(value_); }
BigInt Rational::den() const { return mp::denominator(value_); }

int Rational::sign() const { return value_.sign(); }

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

Rational Rational::reciprocal() const { return Rational(1) / *this; }

BigInt Rational::floor() const {
  const BigInt n = num();
  const BigInt d = den();
  BigInt q = n / d;  // truncates toward zero
  if (n % d != 0 && n < 0) q -= 1;
  return q;
}

BigInt Rational::ceil() const { return -(-*this).floor(); }

double Rational::to_double() const { return value_.convert_to<double>(); }

std::string Rational::str() const {
  if (is_integer()) return num().str();
  return num().str() + "/" + den().str();
}

Rational operator+(const Rational& x, const Rational& y) { return Rational(x.value_ + y.value_); }
Rational operator-(const Rational& x, const Rational& y) { return Rational(x.value_ - y.value_); }
Rational operator*(const Rational& x, const Rational& y) { return Rational(x.value_ * y.value_); }
Rational operator-(const Rational& x) { return Rational(-x.value_); }

Rational operator/(const Rational& x, const Rational& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by zero");
  return Rational(x.value_ / y.value_);
}

std::strong_ordering operator<=>(const Rational& x, const Rational& y) {
  const int c = x.value_.compare(y.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordering compare(const Rational& x, const Rational& y) {
  const auto c = x <=> y;
  if (c < 0) return Ordering::Less;
  if (c > 0) return Ordering::Greater;
  return Ordering::Equal;
}

Rational min(const Rational& x, const Rational& y) { return y < x ? y : x; }
Rational max(const Rational& x, const Rational& y) { return x < y ? y : x; }

Ordering cmp_rational_sqrt(const Rational& q, const Rational& r) {
  require(r.sign() >= 0, "cmp_rational_sqrt: radicand must be nonnegative");
  if (q.sign() < 0) return Ordering::Less;
  return compare(q.square(), r);
}

Ordering cmp_sqrt_combination(const Rational& s, const Rational& t, const Rational& u) {
  require(s.sign() >= 0 && t.sign() >= 0 && u.sign() >= 0,
          "cmp_sqrt_combination: arguments must be nonnegative");
  const Rational d = s - t - u;
  if (d.sign() < 0) return Ordering::Less;
  return compare(d.square(), Rational(4) * t * u);
}

double PiRational::to_double() const { return coeff_.to_double() * std::numbers::pi; }

std::string PiRational::str() const { return coeff_.str() + "·π"; }

std::string PiRational::decimal() const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", to_double());
  return buf;
}

std::string PiRational::render() const { return str() + " (" + decimal() + ")"; }

}  // namespace caplab
