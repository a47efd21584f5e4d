#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "latknot/lattice.hpp"

namespace latknot {

/// Exact rational number over arbitrary-precision integers. Always stored in
/// lowest terms with a positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(BigInt numerator, BigInt denominator = 1);  // NOLINT(google-explicit-constructor)
  Rational(Coord numerator, Coord denominator = 1)     // NOLINT(google-explicit-constructor)
      : Rational(BigInt(numerator), BigInt(denominator)) {}
  Rational(int numerator) : Rational(BigInt(numerator), BigInt(1)) {}  // NOLINT

  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }
  bool is_integer() const { return den_ == 1; }

  /// "a" when the denominator is 1, otherwise "a/b".
  std::string to_string() const;
  /// Always "a/b".
  std::string to_fraction_string() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const { return Rational(-num_, den_); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

 private:
  BigInt num_ = 0;
  BigInt den_ = 1;
};

}  // namespace latknot
