#include "gcf_forge/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>

#include "gcf_forge/error.hpp"

namespace gcf_forge {

Polynomial::Polynomial(std::vector<BigRational> coefficients)
    : coefficients_(std::move(coefficients)) {
  trim();
}

void Polynomial::trim() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Polynomial Polynomial::constant(const BigRational& value) { return Polynomial({value}); }

Polynomial Polynomial::monomial(const BigRational& coefficient, int degree) {
  std::vector<BigRational> coefficients(static_cast<std::size_t>(degree) + 1);
  coefficients.back() = coefficient;
  return Polynomial(std::move(coefficients));
}

Polynomial Polynomial::variable() { return monomial(1, 1); }

Polynomial Polynomial::linear_factor(const BigRational& root) {
  return Polynomial({BigRational(-root), BigRational(1)});
}

BigRational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(k)];
}

BigRational Polynomial::leading() const { return is_zero() ? BigRational(0) : coefficients_.back(); }

BigRational Polynomial::operator()(const BigRational& n) const {
  BigRational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * n + *it;
  return acc;
}

Polynomial Polynomial::shift(const BigRational& k) const {
  // Horner in the polynomial ring: q = (...(a_d (n+k) + a_{d-1})(n+k) + ...).
  const Polynomial step({k, BigRational(1)});
  Polynomial acc;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * step + Polynomial::constant(*it);
  }
  return acc;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "zero polynomial has no monic form");
  return BigRational(1 / leading()) * *this;
}

std::pair<Polynomial, BigRational> Polynomial::divide_linear(const BigRational& root) const {
  if (is_zero()) return {Polynomial(), BigRational(0)};
  std::vector<BigRational> quotient(coefficients_.size() - 1);
  BigRational carry = 0;
  for (std::size_t i = coefficients_.size(); i-- > 0;) {
    carry = carry * root + coefficients_[i];
    if (i > 0) quotient[i - 1] = carry;
  }
  return {Polynomial(std::move(quotient)), carry};
}

namespace {

std::string term_body(std::string_view variable, int degree) {
  if (degree == 0) return "";
  if (degree == 1) return std::string(variable);
  return std::string(variable) + "^" + std::to_string(degree);
}

}  // namespace

std::string Polynomial::to_string(std::string_view variable) const {
  if (is_zero()) return "0";
  std::string text;
  for (int k = degree(); k >= 0; --k) {
    const BigRational& a = coefficients_[static_cast<std::size_t>(k)];
    if (a == 0) continue;
    const bool negative = a < 0;
    const BigRational magnitude = abs(a);
    if (text.empty()) {
      if (negative) text += "-";
    } else {
      text += negative ? " - " : " + ";
    }
    if (k == 0) {
      text += magnitude.get_str();
    } else if (magnitude == 1) {
      text += term_body(variable, k);
    } else {
      text += magnitude.get_str() + "*" + term_body(variable, k);
    }
  }
  return text;
}

Polynomial operator+(const Polynomial& p, const Polynomial& q) {
  std::vector<BigRational> sum(std::max(p.coefficients_.size(), q.coefficients_.size()));
  for (std::size_t i = 0; i < p.coefficients_.size(); ++i) sum[i] += p.coefficients_[i];
  for (std::size_t i = 0; i < q.coefficients_.size(); ++i) sum[i] += q.coefficients_[i];
  return Polynomial(std::move(sum));
}

Polynomial operator-(const Polynomial& p) { return BigRational(-1) * p; }

Polynomial operator-(const Polynomial& p, const Polynomial& q) { return p + (-q); }

Polynomial operator*(const Polynomial& p, const Polynomial& q) {
  if (p.is_zero() || q.is_zero()) return Polynomial();
  std::vector<BigRational> product(p.coefficients_.size() + q.coefficients_.size() - 1);
  for (std::size_t i = 0; i < p.coefficients_.size(); ++i) {
    for (std::size_t j = 0; j < q.coefficients_.size(); ++j) {
      product[i + j] += p.coefficients_[i] * q.coefficients_[j];
    }
  }
  return Polynomial(std::move(product));
}

Polynomial operator*(const BigRational& s, const Polynomial& p) {
  std::vector<BigRational> scaled(p.coefficients_);
  for (auto& a : scaled) a *= s;
  return Polynomial(std::move(scaled));
}

BigRational evaluate(const Polynomial& p, const BigInteger& n) { return p(BigRational(n)); }

Polynomial shift(const Polynomial& p, long k) { return p.shift(BigRational(k)); }

Polynomial power(const Polynomial& p, unsigned exponent) {
  Polynomial result = Polynomial::constant(1);
  for (unsigned i = 0; i < exponent; ++i) result = result * p;
  return result;
}

bool coefficient_less(const Polynomial& p, const Polynomial& q) {
  const auto& a = p.coefficients();
  const auto& b = q.coefficients();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const BigRational& x, const BigRational& y) { return x < y; });
}

Polynomial FactoredPolynomial::reconstruct() const {
  Polynomial result = Polynomial::constant(scale());
  for (const auto& factor : factors) {
    result = result * power(factor.polynomial(), static_cast<unsigned>(factor.multiplicity));
  }
  if (residual) result = result * *residual;
  return result;
}

namespace {

constexpr std::uint64_t kDivisorSearchLimit = std::uint64_t{1} << 46;

std::vector<BigInteger> positive_divisors(const BigInteger& value) {
  const BigInteger magnitude = abs(value);
  if (magnitude >= BigInteger(std::to_string(kDivisorSearchLimit))) {
    throw Error(ErrorCode::Unsupported,
                "rational-root search needs divisors of " + magnitude.get_str() +
                    ", which exceeds the trial-division limit of 2^46");
  }
  const std::uint64_t n = std::stoull(magnitude.get_str());
  std::vector<std::uint64_t> small;
  std::vector<std::uint64_t> large;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      small.push_back(d);
      if (d != n / d) large.push_back(n / d);
    }
  }
  std::vector<BigInteger> divisors;
  for (auto d : small) divisors.emplace_back(std::to_string(d));
  for (auto it = large.rbegin(); it != large.rend(); ++it) divisors.emplace_back(std::to_string(*it));
  return divisors;
}

// Integer coefficients with gcd 1 and the same roots as p.
std::vector<BigInteger> primitive_integer_form(const Polynomial& p) {
  BigInteger denominator_lcm = 1;
  for (const auto& a : p.coefficients()) {
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), a.get_den().get_mpz_t());
  }
  std::vector<BigInteger> integers;
  BigInteger content = 0;
  for (const auto& a : p.coefficients()) {
    BigInteger value = a.get_num() * (denominator_lcm / a.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), value.get_mpz_t());
    integers.push_back(std::move(value));
  }
  for (auto& value : integers) value /= content;
  return integers;
}

}  // namespace

FactoredPolynomial factor_rational(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "cannot factor the zero polynomial");

  FactoredPolynomial result;
  result.sign = p.leading() < 0 ? -1 : 1;
  result.content = abs(p.leading());

  Polynomial remaining = p.monic();

  int zero_multiplicity = 0;
  while (remaining.degree() > 0 && remaining.coefficient(0) == 0) {
    remaining = remaining.divide_linear(0).first;
    ++zero_multiplicity;
  }
  if (zero_multiplicity > 0) result.factors.push_back({BigRational(0), zero_multiplicity});

  if (remaining.degree() >= 1) {
    const auto integers = primitive_integer_form(remaining);
    const auto numerators = positive_divisors(integers.front());
    const auto denominators = positive_divisors(integers.back());

    std::set<BigRational> candidates;
    for (const auto& num : numerators) {
      for (const auto& den : denominators) {
        const BigRational r = make_rational(num, den);
        candidates.insert(r);
        candidates.insert(-r);
      }
    }
    for (const auto& root : candidates) {
      int multiplicity = 0;
      while (remaining.degree() >= 1) {
        auto [quotient, remainder] = remaining.divide_linear(root);
        if (remainder != 0) break;
        remaining = std::move(quotient);
        ++multiplicity;
      }
      if (multiplicity > 0) result.factors.push_back({root, multiplicity});
    }
  }

  std::sort(result.factors.begin(), result.factors.end(),
            [](const LinearFactor& x, const LinearFactor& y) { return x.root < y.root; });
  if (remaining.degree() >= 1) result.residual = remaining;
  return result;
}

std::vector<BigInteger> integer_roots_at_least(const Polynomial& p, const BigInteger& from) {
  std::vector<BigInteger> roots;
  for (const auto& factor : factor_rational(p).factors) {
    if (factor.root.get_den() == 1 && factor.root.get_num() >= from) {
      roots.push_back(factor.root.get_num());
    }
  }
  return roots;
}

BigRational cauchy_root_bound(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root bound of the zero polynomial");
  BigRational largest = 0;
  const BigRational lead = p.leading();
  for (int k = 0; k < p.degree(); ++k) largest = std::max(largest, BigRational(abs(p.coefficient(k) / lead)));
  return 1 + largest;
}

}  // namespace gcf_forge

namespace gcf_forge {

bool positive_on_positive_integers(const Polynomial& p) {
  if (p.is_zero() || p.leading() < 0) return false;
  const BigRational bound = cauchy_root_bound(p);
  BigInteger last;
  mpz_cdiv_q(last.get_mpz_t(), bound.get_num().get_mpz_t(), bound.get_den().get_mpz_t());
  for (BigInteger n = 1; n <= last; ++n) {
    if (evaluate(p, n) <= 0) return false;
  }
  return true;
}

}  // namespace gcf_forge
