#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace logmmp {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Serializes as "p/q", or "p" when q = 1. Only the numerator carries a sign.
class Rat {
 public:
  Rat() = default;
  Rat(long value);  // NOLINT(google-explicit-constructor)
  Rat(long numerator, long denominator);
  Rat(const mpz_class& numerator, const mpz_class& denominator);
  explicit Rat(mpq_class value);

  /// Parses "p/q" or "p". Throws std::invalid_argument on malformed input
  /// and std::domain_error on a zero denominator.
  static Rat parse(std::string_view text);

  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }
  const mpq_class& raw() const { return value_; }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  /// Numerator as a machine integer; requires is_integer() and a value that fits.
  std::int64_t to_int64() const;

  std::string str() const;

  Rat operator-() const;
  Rat& operator+=(const Rat& rhs);
  Rat& operator-=(const Rat& rhs);
  Rat& operator*=(const Rat& rhs);
  Rat& operator/=(const Rat& rhs);  // throws std::domain_error when rhs == 0

  friend Rat operator+(Rat lhs, const Rat& rhs) { return lhs += rhs; }
  friend Rat operator-(Rat lhs, const Rat& rhs) { return lhs -= rhs; }
  friend Rat operator*(Rat lhs, const Rat& rhs) { return lhs *= rhs; }
  friend Rat operator/(Rat lhs, const Rat& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rat& lhs, const Rat& rhs) { return lhs.value_ == rhs.value_; }
  friend std::strong_ordering operator<=>(const Rat& lhs, const Rat& rhs);

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

/// Binomial coefficient n choose 2 as a Rat.
inline Rat choose2(long n) { return Rat(n * (n - 1) / 2); }

}  // namespace logmmp
