#include "caplab/literal.hpp"

#include <cctype>

#include "caplab/error.hpp"

namespace caplab {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  DomainSpec parse() {
    DomainSpec domain = domain_();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return domain;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::string token = pos_ < text_.size() ? "'" + std::string(1, text_[pos_]) + "'" : "end of input";
    throw ParseError(what + " at position " + std::to_string(pos_) + " (found " + token + ") in '" +
                         std::string(text_) + "'",
                     pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Rational rational() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '/')) ++pos_;
    if (pos_ == start) fail("expected a rational");
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const ParseError& e) {
      pos_ = start + e.position();
      fail("malformed rational");
    } catch (const Error&) {
      pos_ = start;
      fail("rational with zero denominator");
    }
  }

  Rational positive_rational(const char* what) {
    const std::size_t start = (skip_space(), pos_);
    Rational r = rational();
    if (r.sign() <= 0) {
      pos_ = start;
      fail(std::string(what) + " must be positive");
    }
    return r;
  }

  Ellipsoid ellipsoid_args() {
    expect('(');
    Rational a = positive_rational("ellipsoid radius");
    expect(',');
    Rational b = positive_rational("ellipsoid radius");
    expect(')');
    return Ellipsoid::make(std::move(a), std::move(b));
  }

  DomainSpec domain_() {
    skip_space();
    const std::size_t start = pos_;
    const std::string name = identifier();
    if (name == "E") return DomainSpec{ellipsoid_args()};
    if (name == "P") {
      expect('(');
      Rational a = positive_rational("polydisk radius");
      expect(',');
      Rational b = positive_rational("polydisk radius");
      expect(')');
      return DomainSpec::polydisk(std::move(a), std::move(b));
    }
    if (name == "sum") {
      expect('(');
      Ellipsoid first = summand();
      expect(',');
      Ellipsoid second = summand();
      expect(')');
      return DomainSpec::sum(std::move(first), std::move(second));
    }
    if (name == "prod") {
      expect('(');
      const std::size_t inner_start = (skip_space(), pos_);
      DomainSpec inner = domain_();
      if (std::holds_alternative<ProductWithBall>(inner.shape)) {
        pos_ = inner_start;
        fail("products with a ball may not be nested");
      }
      expect(',');
      const std::size_t m_start = (skip_space(), pos_);
      const Rational m = rational();
      if (!m.is_integer() || m.sign() <= 0 || m > Rational(1'000'000)) {
        pos_ = m_start;
        fail("ball dimension must be a positive integer");
      }
      expect(',');
      Rational radius = positive_rational("ball radius");
      expect(')');
      return DomainSpec::product(std::move(inner), static_cast<std::uint32_t>(m.num()), std::move(radius));
    }
    pos_ = start;
    fail(name.empty() ? "expected a domain" : "unknown domain '" + name + "'");
  }

  Ellipsoid summand() {
    skip_space();
    const std::size_t start = pos_;
    if (identifier() != "E") {
      pos_ = start;
      fail("sum() takes two ellipsoids");
    }
    return ellipsoid_args();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

DomainSpec parse_domain(std::string_view text) { return Parser(text).parse(); }

std::string format_ellipsoid(const Ellipsoid& e) { return "E(" + e.a.str() + "," + e.b.str() + ")"; }

std::string format_domain(const DomainSpec& domain) {
  return std::visit(
      [](const auto& shape) -> std::string {
        using T = std::decay_t<decltype(shape)>;
        if constexpr (std::is_same_v<T, Ellipsoid>) {
          return format_ellipsoid(shape);
        } else if constexpr (std::is_same_v<T, Polydisk>) {
          return "P(" + shape.a.str() + "," + shape.b.str() + ")";
        } else if constexpr (std::is_same_v<T, EllipsoidPair>) {
          return "sum(" + format_ellipsoid(shape.first) + "," + format_ellipsoid(shape.second) + ")";
        } else {
          return "prod(" + format_domain(*shape.inner) + "," + std::to_string(shape.m) + "," + shape.radius.str() + ")";
        }
      },
      domain.shape);
}

}  // namespace caplab
