#pragma once

#include <compare>
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace hallfrac {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;

/// Exact rational number p/q, always stored reduced with q > 0.
/// Zero is 0/1. Negative values are representable; domain operations
/// that need nu >= 0 reject them.
class Fraction {
 public:
  Fraction() : num_(0), den_(1) {}

  template <std::integral I>
  Fraction(I n) : num_(n), den_(1) {}  // NOLINT(google-explicit-constructor)

  /// Reduces p/q; throws Error(ZeroDenominator) when q == 0.
  Fraction(BigInt p, BigInt q);

  const BigInt& numerator() const noexcept { return num_; }
  const BigInt& denominator() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  bool is_negative() const noexcept { return num_ < 0; }
  bool is_zero() const noexcept { return num_ == 0; }

  /// Largest integer <= value.
  BigInt floor() const;

  double to_double() const;

  Fraction operator-() const;

  friend Fraction operator+(const Fraction& a, const Fraction& b);
  friend Fraction operator-(const Fraction& a, const Fraction& b);
  friend Fraction operator*(const Fraction& a, const Fraction& b);
  /// Throws Error(ZeroDenominator) on division by zero.
  friend Fraction operator/(const Fraction& a, const Fraction& b);

  friend bool operator==(const Fraction& a, const Fraction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

 private:
  struct Reduced {};
  Fraction(BigInt p, BigInt q, Reduced) : num_(std::move(p)), den_(std::move(q)) {}

  BigInt num_;
  BigInt den_;
};

/// p/q in lowest terms with positive denominator.
Fraction reduce(const BigInt& p, const BigInt& q);

/// (p1+p2)/(q1+q2), reduced. No adjacency requirement.
Fraction mediant(const Fraction& a, const Fraction& b);

/// Accepts [+-]digits[/digits] with no whitespace. Throws Error(ParseError)
/// on anything else, including a zero denominator.
Fraction parse_fraction(std::string_view text);

enum class FractionStyle {
  Plain,  ///< integers as "n"
  Table,  ///< integers as "n/1"
};

std::string format(const Fraction& f, FractionStyle style = FractionStyle::Plain);

std::ostream& operator<<(std::ostream& os, const Fraction& f);

}  // namespace hallfrac
