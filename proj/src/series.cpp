#include "gcf_forge/series.hpp"

#include <algorithm>

#include "gcf_forge/error.hpp"

namespace gcf_forge {

TermStream::TermStream(Coupling coupling) : coupling_(std::move(coupling)) {
  if (coupling_.d.is_zero()) {
    throw Error(ErrorCode::ZeroDenominatorFactor, "d is identically zero (d(1) = 0)");
  }
  const auto roots = integer_roots_at_least(coupling_.d, 1);
  if (!roots.empty()) {
    throw Error(ErrorCode::ZeroDenominatorFactor, "d(" + roots.front().get_str() + ") = 0");
  }
  denominator_ = evaluate(coupling_.d, 1);
}

void TermStream::advance() {
  ++k_;
  numerator_ *= evaluate(coupling_.c, k_);
  denominator_ *= evaluate(coupling_.d, k_ + 1);
}

std::vector<BigRational> terms(const Coupling& coupling, long count) {
  TermStream stream(coupling);
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(std::max(count, 0L)));
  for (long k = 0; k < count; ++k) {
    if (k > 0) stream.advance();
    out.push_back(stream.current());
  }
  return out;
}

std::vector<BigRational> partial_sums(const Coupling& coupling, long count) {
  std::vector<BigRational> sums = terms(coupling, count);
  for (std::size_t i = 1; i < sums.size(); ++i) sums[i] += sums[i - 1];
  return sums;
}

const char* to_string(Convergence classification) {
  switch (classification) {
    case Convergence::Convergent: return "convergent";
    case Convergence::Divergent: return "divergent";
    case Convergence::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

BigRational RatioCertificate::at(long k) const {
  const BigRational index(k);
  const BigRational den = denominator(index);
  if (den == 0) throw Error(ErrorCode::DivisionByZero, "ratio has a pole at k = " + std::to_string(k));
  return numerator(index) / den;
}

RatioCertificate ratio_certificate(const Coupling& coupling) {
  RatioCertificate certificate;
  certificate.numerator = shift(coupling.c, 1);
  certificate.denominator = shift(coupling.d, 2);
  const int num_degree = certificate.numerator.degree();
  const int den_degree = certificate.denominator.degree();
  if (certificate.denominator.is_zero() || num_degree > den_degree) {
    certificate.rho = std::nullopt;
  } else if (num_degree < den_degree) {
    certificate.rho = BigRational(0);
  } else {
    certificate.rho = BigRational(abs(certificate.numerator.leading() / certificate.denominator.leading()));
  }
  if (!certificate.rho || *certificate.rho > 1) {
    certificate.classification = Convergence::Divergent;
  } else if (*certificate.rho < 1) {
    certificate.classification = Convergence::Convergent;
  } else {
    certificate.classification = Convergence::Inconclusive;
  }
  return certificate;
}

namespace {

BigInteger ceil_of(const BigRational& q) {
  BigInteger result;
  mpz_cdiv_q(result.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return result;
}

bool ratio_within(const RatioCertificate& certificate, long k, const BigRational& threshold) {
  const BigRational index(k);
  const BigRational den = certificate.denominator(index);
  if (den == 0) return false;
  return abs(certificate.numerator(index)) <= threshold * abs(den);
}

}  // namespace

long certified_ratio_index(const RatioCertificate& certificate, const BigRational& threshold) {
  if (!certificate.rho || threshold <= *certificate.rho) {
    throw Error(ErrorCode::Precondition, "ratio threshold must exceed the finite limit rho");
  }
  const Polynomial& num = certificate.numerator;
  const Polynomial& den = certificate.denominator;
  // Past every root of num, den and G the signs are frozen, where
  // G(k) = sgn(num) num(k) - threshold sgn(den) den(k) has a negative leading
  // coefficient; there |num| <= threshold |den| holds identically.
  BigRational bound = cauchy_root_bound(den);
  if (!num.is_zero()) {
    const BigRational num_sign = num.leading() < 0 ? -1 : 1;
    const BigRational den_sign = den.leading() < 0 ? -1 : 1;
    const Polynomial g = num_sign * num - BigRational(threshold * den_sign) * den;
    bound = std::max({bound, cauchy_root_bound(num), cauchy_root_bound(g)});
  }
  BigInteger start = ceil_of(bound);
  if (start < 0) start = 0;
  if (!start.fits_slong_p()) throw Error(ErrorCode::Unsupported, "ratio certification index too large");
  long k = start.get_si();
  // Walk down to the smallest index from which the bound holds throughout.
  while (k > 0 && ratio_within(certificate, k - 1, threshold)) --k;
  return k;
}

namespace {

constexpr long kMaxSeriesTerms = 1'000'000;

BigRational ten_to_minus(int digits) {
  BigInteger power;
  mpz_ui_pow_ui(power.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return make_rational(1, power);
}

// Bits for a final conversion error of at most 2^-bits |s| <= 10^-digits / 2.
mpfr_prec_t conversion_bits(const BigRational& s, int digits) {
  const BigInteger magnitude = ceil_of(abs(s));
  const auto extra = static_cast<mpfr_prec_t>(mpz_sizeinbase(magnitude.get_mpz_t(), 2));
  return working_precision_bits(digits) + extra;
}

}  // namespace

SeriesSum sum_to_precision(const Coupling& coupling, int digits) {
  if (digits < 1) throw Error(ErrorCode::Precondition, "digits must be positive");
  const RatioCertificate certificate = ratio_certificate(coupling);
  if (certificate.classification != Convergence::Convergent) {
    throw Error(ErrorCode::NotConvergent,
                std::string("ratio test is ") + to_string(certificate.classification) +
                    (certificate.rho ? " (rho = " + certificate.rho->get_str() + ")" : " (rho = infinity)"));
  }
  const BigRational rho_bar = (*certificate.rho + 1) / 2;
  const long certified_from = certified_ratio_index(certificate, rho_bar);
  const BigRational tail_factor = rho_bar / (1 - rho_bar);
  const BigRational half_tolerance = ten_to_minus(digits) / 2;

  TermStream stream(coupling);
  BigRational sum = 0;
  BigRational tail = 0;
  for (long n = 0;; ++n) {
    if (n >= kMaxSeriesTerms) throw Error(ErrorCode::Unsupported, "series needs more than 10^6 terms");
    if (n > 0) stream.advance();
    const BigRational t = stream.current();
    sum += t;
    if (t == 0) break;  // a root of c: every later term vanishes
    if (n >= certified_from) {
      tail = abs(t) * tail_factor;
      if (tail <= half_tolerance) break;
    }
  }
  const long used = stream.index() + 1;
  return SeriesSum{rational_to_real(sum, conversion_bits(sum, digits)), used, sum, tail, certified_from};
}

PrecisionReal central_binomial_sum(const BigRational& z, int digits) {
  if (z < 0 || z >= 4) throw Error(ErrorCode::OutOfDomain, "z must satisfy 0 <= z < 4, got " + z.get_str());
  if (digits < 1) throw Error(ErrorCode::Precondition, "digits must be positive");
  if (z == 0) return PrecisionReal(working_precision_bits(digits));
  // s_{m+1} / s_m = z m^2 / (2 (m+1)(2m+1)) < z/4 <= (z+4)/8 < 1 for every m >= 1.
  const BigRational majorant = (z + 4) / 8;
  const BigRational tail_factor = majorant / (1 - majorant);
  const BigRational half_tolerance = ten_to_minus(digits) / 2;
  BigRational sum = 0;
  BigRational z_power = 1;
  for (unsigned long m = 1;; ++m) {
    if (m >= static_cast<unsigned long>(kMaxSeriesTerms)) {
      throw Error(ErrorCode::Unsupported, "series needs more than 10^6 terms");
    }
    z_power *= z;
    const BigRational term = z_power / BigRational(BigInteger(m * m) * central_binomial(m));
    sum += term;
    if (term * tail_factor <= half_tolerance) break;
  }
  return rational_to_real(sum, conversion_bits(sum, digits));
}

}  // namespace gcf_forge
