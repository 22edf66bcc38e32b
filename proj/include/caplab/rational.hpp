#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace caplab {

using BigInt = boost::multiprecision::cpp_int;

enum class Ordering { Less = -1, Equal = 0, Greater = 1 };

const char* to_string(Ordering ordering);

/// Exact rational number in lowest terms with a positive denominator.
///
/// Numerator and denominator are arbitrary precision; no operation rounds.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t value);  // NOLINT: integers convert implicitly
  Rational(const BigInt& num, const BigInt& den);

  /// Accepts "p", "-p" and "p/q" (q > 0 after sign normalization).
  static Rational parse(std::string_view text);

  BigInt num() const;
  BigInt den() const;

  int sign() const;
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }

  Rational abs() const;
  Rational square() const { return *this * *this; }
  Rational reciprocal() const;
  BigInt floor() const;
  BigInt ceil() const;

  double to_double() const;
  std::string str() const;

  friend Rational operator+(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x, const Rational& y);
  friend Rational operator*(const Rational& x, const Rational& y);
  friend Rational operator/(const Rational& x, const Rational& y);
  friend Rational operator-(const Rational& x);

  Rational& operator+=(const Rational& y) { return *this = *this + y; }
  Rational& operator-=(const Rational& y) { return *this = *this - y; }
  Rational& operator*=(const Rational& y) { return *this = *this * y; }
  Rational& operator/=(const Rational& y) { return *this = *this / y; }

  friend bool operator==(const Rational& x, const Rational& y) {
    return x.value_ == y.value_;
  }
  friend std::strong_ordering operator<=>(const Rational& x,
                                          const Rational& y);

 private:
  explicit Rational(boost::multiprecision::cpp_rational value)
      : value_(std::move(value)) {}

  boost::multiprecision::cpp_rational value_;
};

Ordering compare(const Rational& x, const Rational& y);

Rational min(const Rational& x, const Rational& y);
Rational max(const Rational& x, const Rational& y);

/// Sign of q - sqrt(r) for r >= 0, decided without floating point.
Ordering cmp_rational_sqrt(const Rational& q, const Rational& r);

/// Sign of sqrt(s) - (sqrt(t) + sqrt(u)) for s, t, u >= 0.
///
/// sqrt(s) >= sqrt(t) + sqrt(u) iff d = s - t - u >= 0 and d^2 >= 4tu, with
/// equality exactly when d >= 0 and d^2 = 4tu.
Ordering cmp_sqrt_combination(const Rational& s, const Rational& t,
                              const Rational& u);

/// A value stored as an exact rational multiple of pi.
class PiRational {
 public:
  PiRational() = default;
  explicit PiRational(Rational coeff) : coeff_(std::move(coeff)) {}

  const Rational& coeff() const { return coeff_; }
  double to_double() const;

  /// "p/q·π", or "p·π" for integral coefficients.
  std::string str() const;
  /// 12 significant digits.
  std::string decimal() const;
  /// str() followed by the decimal in parentheses.
  std::string render() const;

  friend PiRational operator+(const PiRational& x, const PiRational& y) {
    return PiRational(x.coeff_ + y.coeff_);
  }
  friend bool operator==(const PiRational& x, const PiRational& y) = default;
  friend std::strong_ordering operator<=>(const PiRational& x,
                                          const PiRational& y) {
    return x.coeff_ <=> y.coeff_;
  }

 private:
  Rational coeff_;
};

}  // namespace caplab
