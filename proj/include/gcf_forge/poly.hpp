#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gcf_forge/numerics.hpp"

namespace gcf_forge {

/// Dense univariate polynomial in n over Q, lowest degree first. Trailing
/// zeros are stripped on construction, so equal polynomials compare equal.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<BigRational> coefficients);

  static Polynomial constant(const BigRational& value);
  static Polynomial monomial(const BigRational& coefficient, int degree);
  /// The polynomial n.
  static Polynomial variable();
  /// The monic linear factor n - root.
  static Polynomial linear_factor(const BigRational& root);

  const std::vector<BigRational>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  /// Coefficient of n^k; zero past the degree.
  BigRational coefficient(int k) const;
  /// Zero for the zero polynomial.
  BigRational leading() const;

  BigRational operator()(const BigRational& n) const;

  /// q with q(n) = p(n + k).
  Polynomial shift(const BigRational& k) const;
  Polynomial monic() const;

  /// Quotient and remainder of division by the linear factor n - root.
  std::pair<Polynomial, BigRational> divide_linear(const BigRational& root) const;

  /// Text in the input grammar, e.g. "2*n^2 - n".
  std::string to_string(std::string_view variable = "n") const;

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator-(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const Polynomial& p, const Polynomial& q);
  friend Polynomial operator*(const BigRational& s, const Polynomial& p);
  friend Polynomial operator-(const Polynomial& p);
  friend bool operator==(const Polynomial& p, const Polynomial& q) = default;

 private:
  void trim();

  std::vector<BigRational> coefficients_;
};

BigRational evaluate(const Polynomial& p, const BigInteger& n);
Polynomial shift(const Polynomial& p, long k);
Polynomial power(const Polynomial& p, unsigned exponent);

/// Lexicographic on coefficient lists, lowest degree first; shorter first on ties.
bool coefficient_less(const Polynomial& p, const Polynomial& q);

struct LinearFactor {
  BigRational root;  // factor is n - root
  int multiplicity = 0;

  Polynomial polynomial() const { return Polynomial::linear_factor(root); }
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// p = sign * content * prod (n - root_i)^mult_i * residual.
struct FactoredPolynomial {
  BigRational content;  // |leading coefficient|
  int sign = 1;
  std::vector<LinearFactor> factors;  // ascending by root
  std::optional<Polynomial> residual;  // monic, no rational roots, degree >= 2

  /// Signed content, i.e. the leading coefficient of the factored polynomial.
  BigRational scale() const { return sign < 0 ? BigRational(-content) : content; }
  Polynomial reconstruct() const;
};

/// Extracts every rational root with multiplicity (rational-root theorem on
/// the primitive integer form); the nonlinear remainder is kept whole.
/// Throws ZeroPolynomial for p = 0.
FactoredPolynomial factor_rational(const Polynomial& p);

/// Integer roots r >= from of a nonzero polynomial, ascending.
std::vector<BigInteger> integer_roots_at_least(const Polynomial& p, const BigInteger& from);

/// 1 + max |a_i / a_deg|; every real root lies strictly inside (-bound, bound).
BigRational cauchy_root_bound(const Polynomial& p);

}  // namespace gcf_forge

namespace gcf_forge {

/// True iff p(n) > 0 for every integer n >= 1. Exact: beyond the Cauchy
/// bound the sign is that of the leading coefficient, below it each integer
/// is evaluated.
bool positive_on_positive_integers(const Polynomial& p);

}  // namespace gcf_forge
