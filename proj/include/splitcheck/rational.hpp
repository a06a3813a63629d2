#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace splitcheck::algebra {

using Integer = boost::multiprecision::cpp_int;

// Exact rational number, always in lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& numerator, const Integer& denominator);

  Integer numerator() const;
  Integer denominator() const;

  bool is_zero() const { return value_ == 0; }
  int sign() const { return value_.sign(); }

  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // "num/den", denominator always printed.
  std::string to_string() const;
  double to_double() const;

 private:
  using Value = boost::multiprecision::cpp_rational;
  explicit Rational(Value v) : value_(std::move(v)) {}
  Value value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace splitcheck::algebra
