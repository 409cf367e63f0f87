#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <boost/multiprecision/gmp.hpp>

namespace bog {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

Integer numerator(const Rational& q);
Integer denominator(const Rational& q);

/// Floor of a rational as an integer.
Integer floor(const Rational& q);

/// Fractional part in [0, 1).
Rational frac(const Rational& q);

/// Renders `p/q`, or `p` when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

/// Accepts `p`, `-p`, `p/q`. Returns nullopt on malformed input.
std::optional<Rational> parse_rational(std::string_view text);

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Extended gcd: returns g >= 0 with g = x*a + y*b.
struct ExtendedGcd {
  Integer g, x, y;
};
ExtendedGcd extended_gcd(const Integer& a, const Integer& b);

/// Rounds a/b to the nearest integer(s); returns the floor quotient.
Integer floor_div(const Integer& a, const Integer& b);

/// An element of N ∪ {∞}. Multiplicities, dimensions and ranks use this type;
/// arithmetic absorbs ∞.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::uint64_t value) : value_(value) {}  // NOLINT
  static constexpr Count infinity() {
    Count c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// Finite value; calling on ∞ is a logic error.
  std::uint64_t value() const;

  Count operator+(const Count& other) const;
  Count operator*(const Count& other) const;
  Count& operator+=(const Count& other) { return *this = *this + other; }

  friend constexpr bool operator==(const Count& a, const Count& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr std::strong_ordering operator<=>(const Count& a,
                                                    const Count& b) {
    if (a.infinite_ || b.infinite_) {
      return static_cast<int>(a.infinite_) <=> static_cast<int>(b.infinite_);
    }
    return a.value_ <=> b.value_;
  }

  std::string to_string() const;

 private:
  std::uint64_t value_ = 0;
  bool infinite_ = false;
};

/// A rational number or +∞.
class ExtRational {
 public:
  ExtRational() = default;
  ExtRational(Rational value) : value_(std::move(value)) {}  // NOLINT
  ExtRational(long value) : value_(value) {}                 // NOLINT
  static ExtRational infinity() {
    ExtRational r;
    r.infinite_ = true;
    return r;
  }
  static ExtRational from_count(const Count& c);

  bool is_infinite() const { return infinite_; }
  const Rational& value() const;

  ExtRational operator+(const ExtRational& other) const;
  /// Throws IndeterminateInfinity on ∞ - ∞ and on finite - ∞.
  ExtRational operator-(const ExtRational& other) const;

  friend bool operator==(const ExtRational& a, const ExtRational& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend bool operator<(const ExtRational& a, const ExtRational& b);

  std::string to_string() const;

 private:
  Rational value_{0};
  bool infinite_ = false;
};

}  // namespace bog
