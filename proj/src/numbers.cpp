#include "bog/numbers.hpp"

#include <cctype>
#include <stdexcept>

#include "bog/errors.hpp"

namespace bog {

Integer numerator(const Rational& q) {
  return boost::multiprecision::numerator(q);
}

Integer denominator(const Rational& q) {
  return boost::multiprecision::denominator(q);
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  Integer r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

Integer floor(const Rational& q) {
  return floor_div(numerator(q), denominator(q));
}

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

std::string to_string(const Integer& z) { return z.str(); }

std::string to_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

namespace {

std::optional<Integer> parse_integer(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (start == text.size()) return std::nullopt;
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
  }
  std::string digits(text.substr(start));
  Integer value(digits);
  return text[0] == '-' ? Integer(-value) : value;
}

}  // namespace

std::optional<Rational> parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto z = parse_integer(text);
    if (!z) return std::nullopt;
    return Rational(*z);
  }
  auto num = parse_integer(text.substr(0, slash));
  auto den = parse_integer(text.substr(slash + 1));
  if (!num || !den || *den <= 0 || text[slash + 1] == '+') return std::nullopt;
  return Rational(*num, *den);
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer x = abs(a), y = abs(b);
  while (y != 0) {
    Integer r = x % y;
    x = y;
    y = r;
  }
  return x;
}

Integer lcm(const Integer& a, const Integer& b) {
  if (a == 0 || b == 0) return 0;
  return abs(a / gcd(a, b) * b);
}

ExtendedGcd extended_gcd(const Integer& a, const Integer& b) {
  Integer old_r = a, r = b;
  Integer old_s = 1, s = 0;
  Integer old_t = 0, t = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, old_s, old_t};
}

std::uint64_t Count::value() const {
  if (infinite_) throw std::logic_error("Count::value() called on infinity");
  return value_;
}

Count Count::operator+(const Count& other) const {
  if (infinite_ || other.infinite_) return infinity();
  return Count(value_ + other.value_);
}

Count Count::operator*(const Count& other) const {
  if ((infinite_ && other.is_finite() && other.value_ == 0) ||
      (other.infinite_ && is_finite() && value_ == 0)) {
    return Count(0);
  }
  if (infinite_ || other.infinite_) return infinity();
  return Count(value_ * other.value_);
}

std::string Count::to_string() const {
  return infinite_ ? "inf" : std::to_string(value_);
}

ExtRational ExtRational::from_count(const Count& c) {
  if (c.is_infinite()) return infinity();
  return ExtRational(Rational(c.value()));
}

const Rational& ExtRational::value() const {
  if (infinite_) throw std::logic_error("ExtRational::value() on infinity");
  return value_;
}

ExtRational ExtRational::operator+(const ExtRational& other) const {
  if (infinite_ || other.infinite_) return infinity();
  return ExtRational(value_ + other.value_);
}

ExtRational ExtRational::operator-(const ExtRational& other) const {
  if (other.infinite_) {
    throw Error(ErrorCode::IndeterminateInfinity,
                infinite_ ? "indeterminate expression inf - inf"
                          : "subtracting an infinite free dimension");
  }
  if (infinite_) return infinity();
  return ExtRational(value_ - other.value_);
}

bool operator<(const ExtRational& a, const ExtRational& b) {
  if (a.infinite_) return false;
  if (b.infinite_) return true;
  return a.value_ < b.value_;
}

std::string ExtRational::to_string() const {
  return infinite_ ? "inf" : bog::to_string(value_);
}

}  // namespace bog
