#pragma once

// Exact integers and rationals (GMP) plus an owning MPFR value with explicit
// precision. Everything downstream builds on these three types.

#include <gmpxx.h>
#include <mpfr.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace gcf_forge {

using BigInteger = mpz_class;
/// Always canonical: lowest terms, positive denominator. gmpxx keeps that
/// invariant for arithmetic results; use make_rational() for num/den pairs.
using BigRational = mpq_class;

BigRational make_rational(const BigInteger& numerator, const BigInteger& denominator);

/// Parses "p", "-p" or "p/q" (decimal integers). Throws Error{InvalidInput}.
BigRational parse_rational(std::string_view text);

/// Always "p/q", including "/1" for integers.
std::string to_fraction_string(const BigRational& q);

BigInteger factorial(unsigned long n);

/// (2m)! / (m!)^2.
BigInteger central_binomial(unsigned long m);

class PrecisionReal {
 public:
  /// Zero at the given precision.
  explicit PrecisionReal(mpfr_prec_t precision_bits);
  PrecisionReal(long value, mpfr_prec_t precision_bits);
  ~PrecisionReal();

  PrecisionReal(const PrecisionReal& other);
  PrecisionReal(PrecisionReal&& other) noexcept;
  PrecisionReal& operator=(const PrecisionReal& other);
  PrecisionReal& operator=(PrecisionReal&& other) noexcept;

  /// Parses decimal text such as "0.8105", "-1.5e-3". Throws Error{InvalidInput}.
  static PrecisionReal from_string(std::string_view text, mpfr_prec_t precision_bits);
  static PrecisionReal pi(mpfr_prec_t precision_bits);

  /// Builds a value by letting `fill` write into a fresh mpfr_t of the given precision.
  template <class Fill>
  static PrecisionReal compute(mpfr_prec_t precision_bits, Fill&& fill) {
    PrecisionReal result(precision_bits);
    fill(result.value_);
    return result;
  }

  mpfr_prec_t precision_bits() const { return mpfr_get_prec(value_); }
  mpfr_srcptr get() const { return value_; }

  bool is_zero() const { return mpfr_zero_p(value_) != 0; }
  int sign() const { return mpfr_sgn(value_); }
  double to_double() const { return mpfr_get_d(value_, MPFR_RNDN); }

  /// Same value rounded to a different precision.
  PrecisionReal with_precision(mpfr_prec_t precision_bits) const;

  /// Human preview with the given number of significant digits.
  std::string to_decimal(int significant_digits) const;

  /// Shortest decimal text that parses back to exactly this value at this precision.
  std::string to_round_trip_string() const;

  friend PrecisionReal operator+(const PrecisionReal& x, const PrecisionReal& y);
  friend PrecisionReal operator-(const PrecisionReal& x, const PrecisionReal& y);
  friend PrecisionReal operator*(const PrecisionReal& x, const PrecisionReal& y);
  friend PrecisionReal operator/(const PrecisionReal& x, const PrecisionReal& y);
  friend PrecisionReal operator-(const PrecisionReal& x);

  friend bool operator==(const PrecisionReal& x, const PrecisionReal& y);
  friend std::partial_ordering operator<=>(const PrecisionReal& x, const PrecisionReal& y);

 private:
  mpfr_t value_;
};

PrecisionReal abs(const PrecisionReal& x);
PrecisionReal sqrt(const PrecisionReal& x);
PrecisionReal pow(const PrecisionReal& x, long exponent);

/// Correctly rounded: |result - q| <= 2^(-precision_bits) * |q|. Requires precision_bits >= 8.
PrecisionReal rational_to_real(const BigRational& q, mpfr_prec_t precision_bits);

/// |x - y| <= 10^-digits * max(1, |y|). Throws InsufficientPrecision when
/// either operand carries fewer than 4*digits bits.
bool agree_to_digits(const PrecisionReal& x, const PrecisionReal& y, int digits);

/// Largest D in [0, cap] with agree_to_digits(x, y, D); cap must be supported by
/// both precisions. Returns 0 when even one digit disagrees.
int matched_digits(const PrecisionReal& x, const PrecisionReal& y, int cap);

/// Guard bits added on top of 4 bits per decimal digit. Default 64,
/// overridden by GCF_FORGE_PRECISION_BITS when set to a nonnegative integer.
mpfr_prec_t guard_bits();

/// digits * 4 + guard_bits().
mpfr_prec_t working_precision_bits(int digits);

}  // namespace gcf_forge
