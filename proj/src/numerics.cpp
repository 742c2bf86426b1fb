#include "gcf_forge/numerics.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>

#include "gcf_forge/error.hpp"

namespace gcf_forge {

BigRational make_rational(const BigInteger& numerator, const BigInteger& denominator) {
  if (denominator == 0) {
    throw Error(ErrorCode::DivisionByZero, "rational with zero denominator");
  }
  BigRational q(numerator, denominator);
  q.canonicalize();
  return q;
}

namespace {

bool is_decimal_integer(std::string_view text) {
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) text.remove_prefix(1);
  return !text.empty() &&
         std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
}

BigInteger parse_integer(std::string_view text) {
  if (!is_decimal_integer(text)) {
    throw Error(ErrorCode::InvalidInput, "not an integer: '" + std::string(text) + "'");
  }
  if (text.front() == '+') text.remove_prefix(1);
  return BigInteger(std::string(text), 10);
}

}  // namespace

BigRational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return BigRational(parse_integer(text));
  const BigInteger den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw Error(ErrorCode::InvalidInput, "zero denominator in '" + std::string(text) + "'");
  return make_rational(parse_integer(text.substr(0, slash)), den);
}

std::string to_fraction_string(const BigRational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigInteger factorial(unsigned long n) {
  BigInteger result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInteger central_binomial(unsigned long m) {
  BigInteger result;
  mpz_bin_uiui(result.get_mpz_t(), 2 * m, m);
  return result;
}

// ---------------------------------------------------------------------------
// PrecisionReal

PrecisionReal::PrecisionReal(mpfr_prec_t precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_zero(value_, 1);
}

PrecisionReal::PrecisionReal(long value, mpfr_prec_t precision_bits) {
  mpfr_init2(value_, precision_bits);
  mpfr_set_si(value_, value, MPFR_RNDN);
}

PrecisionReal::~PrecisionReal() { mpfr_clear(value_); }

PrecisionReal::PrecisionReal(const PrecisionReal& other) {
  mpfr_init2(value_, other.precision_bits());
  mpfr_set(value_, other.value_, MPFR_RNDN);
}

PrecisionReal::PrecisionReal(PrecisionReal&& other) noexcept {
  mpfr_init2(value_, MPFR_PREC_MIN);
  mpfr_swap(value_, other.value_);
}

PrecisionReal& PrecisionReal::operator=(const PrecisionReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, other.precision_bits());
    mpfr_set(value_, other.value_, MPFR_RNDN);
  }
  return *this;
}

PrecisionReal& PrecisionReal::operator=(PrecisionReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

PrecisionReal PrecisionReal::from_string(std::string_view text, mpfr_prec_t precision_bits) {
  PrecisionReal result(precision_bits);
  const std::string owned(text);
  if (owned.empty() || mpfr_set_str(result.value_, owned.c_str(), 10, MPFR_RNDN) != 0) {
    throw Error(ErrorCode::InvalidInput, "not a decimal number: '" + owned + "'");
  }
  return result;
}

PrecisionReal PrecisionReal::pi(mpfr_prec_t precision_bits) {
  PrecisionReal result(precision_bits);
  mpfr_const_pi(result.value_, MPFR_RNDN);
  return result;
}

PrecisionReal PrecisionReal::with_precision(mpfr_prec_t precision_bits) const {
  PrecisionReal result(precision_bits);
  mpfr_set(result.value_, value_, MPFR_RNDN);
  return result;
}

std::string PrecisionReal::to_decimal(int significant_digits) const {
  char* buffer = nullptr;
  mpfr_asprintf(&buffer, "%.*Rg", std::max(significant_digits, 1), value_);
  std::string text(buffer);
  mpfr_free_str(buffer);
  return text;
}

std::string PrecisionReal::to_round_trip_string() const {
  if (mpfr_zero_p(value_)) return "0";
  mpfr_exp_t exponent = 0;
  char* digits = mpfr_get_str(nullptr, &exponent, 10, 0, value_, MPFR_RNDN);
  std::string mantissa(digits);
  mpfr_free_str(digits);
  std::string sign;
  if (mantissa.front() == '-') {
    sign = "-";
    mantissa.erase(0, 1);
  }
  while (mantissa.size() > 1 && mantissa.back() == '0') mantissa.pop_back();
  // mpfr_get_str yields 0.DIGITS * 10^exponent.
  std::string text = sign + mantissa.substr(0, 1);
  if (mantissa.size() > 1) text += "." + mantissa.substr(1);
  const long shown_exponent = static_cast<long>(exponent) - 1;
  if (shown_exponent != 0) text += "e" + std::to_string(shown_exponent);
  return text;
}

namespace {

mpfr_prec_t joint_precision(const PrecisionReal& x, const PrecisionReal& y) {
  return std::max(x.precision_bits(), y.precision_bits());
}

}  // namespace

PrecisionReal operator+(const PrecisionReal& x, const PrecisionReal& y) {
  PrecisionReal result(joint_precision(x, y));
  mpfr_add(result.value_, x.value_, y.value_, MPFR_RNDN);
  return result;
}

PrecisionReal operator-(const PrecisionReal& x, const PrecisionReal& y) {
  PrecisionReal result(joint_precision(x, y));
  mpfr_sub(result.value_, x.value_, y.value_, MPFR_RNDN);
  return result;
}

PrecisionReal operator*(const PrecisionReal& x, const PrecisionReal& y) {
  PrecisionReal result(joint_precision(x, y));
  mpfr_mul(result.value_, x.value_, y.value_, MPFR_RNDN);
  return result;
}

PrecisionReal operator/(const PrecisionReal& x, const PrecisionReal& y) {
  if (y.is_zero()) throw Error(ErrorCode::DivisionByZero, "real division by zero");
  PrecisionReal result(joint_precision(x, y));
  mpfr_div(result.value_, x.value_, y.value_, MPFR_RNDN);
  return result;
}

PrecisionReal operator-(const PrecisionReal& x) {
  PrecisionReal result(x.precision_bits());
  mpfr_neg(result.value_, x.value_, MPFR_RNDN);
  return result;
}

bool operator==(const PrecisionReal& x, const PrecisionReal& y) {
  return mpfr_equal_p(x.value_, y.value_) != 0;
}

std::partial_ordering operator<=>(const PrecisionReal& x, const PrecisionReal& y) {
  if (mpfr_unordered_p(x.value_, y.value_)) return std::partial_ordering::unordered;
  const int cmp = mpfr_cmp(x.value_, y.value_);
  if (cmp < 0) return std::partial_ordering::less;
  if (cmp > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

PrecisionReal abs(const PrecisionReal& x) { return x.sign() < 0 ? -x : x; }

PrecisionReal sqrt(const PrecisionReal& x) {
  if (x.sign() < 0) throw Error(ErrorCode::NegativeSqrt, "square root of a negative value");
  return PrecisionReal::compute(x.precision_bits(),
                                [&](mpfr_ptr out) { mpfr_sqrt(out, x.get(), MPFR_RNDN); });
}

PrecisionReal pow(const PrecisionReal& x, long exponent) {
  if (exponent < 0 && x.is_zero()) {
    throw Error(ErrorCode::DivisionByZero, "zero raised to a negative power");
  }
  return PrecisionReal::compute(
      x.precision_bits(), [&](mpfr_ptr out) { mpfr_pow_si(out, x.get(), exponent, MPFR_RNDN); });
}

PrecisionReal rational_to_real(const BigRational& q, mpfr_prec_t precision_bits) {
  if (precision_bits < 8) {
    throw Error(ErrorCode::Precondition, "precision must be at least 8 bits");
  }
  return PrecisionReal::compute(
      precision_bits, [&](mpfr_ptr out) { mpfr_set_q(out, q.get_mpq_t(), MPFR_RNDN); });
}

namespace {

// 10^-digits * max(1, |y|) at the joint precision.
PrecisionReal tolerance(const PrecisionReal& y, int digits, mpfr_prec_t bits) {
  PrecisionReal scale = abs(y).with_precision(bits);
  if (scale < PrecisionReal(1, bits)) scale = PrecisionReal(1, bits);
  PrecisionReal ten(10, bits);
  return scale * pow(ten, -static_cast<long>(digits));
}

}  // namespace

bool agree_to_digits(const PrecisionReal& x, const PrecisionReal& y, int digits) {
  if (digits < 1) throw Error(ErrorCode::Precondition, "digits must be positive");
  const mpfr_prec_t needed = static_cast<mpfr_prec_t>(digits) * 4;
  if (x.precision_bits() < needed || y.precision_bits() < needed) {
    throw Error(ErrorCode::InsufficientPrecision,
                "comparison to " + std::to_string(digits) + " digits needs " +
                    std::to_string(needed) + " bits per operand");
  }
  const mpfr_prec_t bits = joint_precision(x, y) + 16;
  const PrecisionReal gap = abs(x.with_precision(bits) - y.with_precision(bits));
  return gap <= tolerance(y, digits, bits);
}

int matched_digits(const PrecisionReal& x, const PrecisionReal& y, int cap) {
  cap = std::min<long>(cap, std::min(x.precision_bits(), y.precision_bits()) / 4);
  if (cap < 1) return 0;
  const mpfr_prec_t bits = joint_precision(x, y) + 16;
  const PrecisionReal gap = abs(x.with_precision(bits) - y.with_precision(bits));
  if (gap.is_zero()) return cap;
  PrecisionReal scale = abs(y).with_precision(bits);
  if (scale < PrecisionReal(1, bits)) scale = PrecisionReal(1, bits);
  const PrecisionReal relative = gap / scale;
  const PrecisionReal log_relative = PrecisionReal::compute(
      53, [&](mpfr_ptr out) { mpfr_log10(out, relative.get(), MPFR_RNDN); });
  long estimate = static_cast<long>(-log_relative.to_double());
  estimate = std::clamp<long>(estimate, 0, cap);
  // Settle the floor exactly; the logarithm only seeds the search.
  while (estimate < cap && agree_to_digits(x, y, static_cast<int>(estimate) + 1)) ++estimate;
  while (estimate > 0 && !agree_to_digits(x, y, static_cast<int>(estimate))) --estimate;
  return static_cast<int>(estimate);
}

mpfr_prec_t guard_bits() {
  if (const char* env = std::getenv("GCF_FORGE_PRECISION_BITS")) {
    const std::string_view text(env);
    long value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec == std::errc() && end == text.data() + text.size() && value >= 0) {
      return static_cast<mpfr_prec_t>(value);
    }
  }
  return 64;
}

mpfr_prec_t working_precision_bits(int digits) {
  return static_cast<mpfr_prec_t>(std::max(digits, 2)) * 4 + guard_bits();
}

}  // namespace gcf_forge
