#include "gcf_forge/factorize.hpp"

#include <algorithm>
#include <optional>
#include <utility>

#include "gcf_forge/error.hpp"

namespace gcf_forge {

namespace {

struct Scalars {
  BigRational u;
  BigRational v;
};

std::optional<BigRational> rational_sqrt(const BigRational& q) {
  if (q < 0) return std::nullopt;
  if (mpz_perfect_square_p(q.get_num().get_mpz_t()) == 0 ||
      mpz_perfect_square_p(q.get_den().get_mpz_t()) == 0) {
    return std::nullopt;
  }
  BigInteger num;
  BigInteger den;
  mpz_sqrt(num.get_mpz_t(), q.get_num().get_mpz_t());
  mpz_sqrt(den.get_mpz_t(), q.get_den().get_mpz_t());
  return make_rational(num, den);
}

// Rational roots of alpha x^2 + beta x + gamma = 0 with alpha != 0.
std::vector<BigRational> quadratic_roots(const BigRational& alpha, const BigRational& beta,
                                         const BigRational& gamma) {
  const BigRational discriminant = beta * beta - 4 * alpha * gamma;
  const auto root = rational_sqrt(discriminant);
  if (!root) return {};
  std::vector<BigRational> roots{BigRational((-beta + *root) / (2 * alpha))};
  if (*root != 0) roots.emplace_back((-beta - *root) / (2 * alpha));
  return roots;
}

// Solves u P(n) + v Q(n) = B(n) coefficient-wise together with u v = product.
// P, Q are nonzero, so the 2-unknown system has rank 1 or 2.
std::vector<Scalars> solve_scalars(const Polynomial& p, const Polynomial& q, const Polynomial& b,
                                   const BigRational& product) {
  const int top = std::max({p.degree(), q.degree(), b.degree()});
  struct Row {
    BigRational p, q, b;
  };
  std::vector<Row> rows;
  for (int k = 0; k <= top; ++k) rows.push_back({p.coefficient(k), q.coefficient(k), b.coefficient(k)});

  auto satisfies_all = [&](const Scalars& s) {
    return std::all_of(rows.begin(), rows.end(),
                       [&](const Row& r) { return r.p * s.u + r.q * s.v == r.b; });
  };

  // Two independent equations pin (u, v) down; substitute into the rest.
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      const BigRational det = rows[i].p * rows[j].q - rows[j].p * rows[i].q;
      if (det == 0) continue;
      Scalars s{BigRational((rows[i].b * rows[j].q - rows[j].b * rows[i].q) / det),
                BigRational((rows[i].p * rows[j].b - rows[j].p * rows[i].b) / det)};
      if (satisfies_all(s) && s.u * s.v == product) return {s};
      return {};
    }
  }

  // Rank 1: every equation is a multiple of one nonzero row r.p u + r.q v = r.b,
  // and u v = product closes the system as a quadratic.
  const auto pivot = std::find_if(rows.begin(), rows.end(),
                                  [](const Row& r) { return r.p != 0 || r.q != 0; });
  if (pivot == rows.end()) return {};
  std::vector<Scalars> candidates;
  if (pivot->q != 0) {
    // v = (b - p u) / q  =>  p u^2 - b u + q * product = 0
    if (pivot->p == 0) {
      const BigRational v = pivot->b / pivot->q;
      if (v != 0) candidates.push_back({BigRational(product / v), v});
    } else {
      for (const auto& u : quadratic_roots(pivot->p, -pivot->b, pivot->q * product)) {
        candidates.push_back({u, BigRational((pivot->b - pivot->p * u) / pivot->q)});
      }
    }
  } else {
    const BigRational u = pivot->b / pivot->p;
    if (u != 0) candidates.push_back({u, BigRational(product / u)});
  }
  std::vector<Scalars> solutions;
  for (const auto& s : candidates) {
    if (satisfies_all(s) && s.u * s.v == product) solutions.push_back(s);
  }
  return solutions;
}

// Every way to split the multiset of linear factors into (P, Q).
void enumerate_splits(const std::vector<LinearFactor>& factors, std::size_t index, Polynomial p,
                      Polynomial q, std::vector<std::pair<Polynomial, Polynomial>>& out) {
  if (index == factors.size()) {
    out.emplace_back(std::move(p), std::move(q));
    return;
  }
  const auto& factor = factors[index];
  const Polynomial linear = factor.polynomial();
  for (int to_p = 0; to_p <= factor.multiplicity; ++to_p) {
    enumerate_splits(factors, index + 1, p * power(linear, static_cast<unsigned>(to_p)),
                     q * power(linear, static_cast<unsigned>(factor.multiplicity - to_p)), out);
  }
}

bool coupling_less(const Coupling& x, const Coupling& y) {
  if (x.c.degree() != y.c.degree()) return x.c.degree() < y.c.degree();
  if (x.c != y.c) return coefficient_less(x.c, y.c);
  return coefficient_less(x.d, y.d);
}

}  // namespace

std::vector<Coupling> find_couplings(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero()) {
    throw Error(ErrorCode::ZeroPartialNumerator, "partial numerator polynomial a is identically zero");
  }
  const Polynomial minus_a = -a;
  const FactoredPolynomial factored = factor_rational(minus_a);
  const BigRational product = factored.scale();

  std::vector<std::pair<Polynomial, Polynomial>> splits;
  enumerate_splits(factored.factors, 0, Polynomial::constant(1), Polynomial::constant(1), splits);
  if (factored.residual) {
    std::vector<std::pair<Polynomial, Polynomial>> with_residual;
    for (const auto& [p, q] : splits) {
      with_residual.emplace_back(p * *factored.residual, q);
      with_residual.emplace_back(p, q * *factored.residual);
    }
    splits = std::move(with_residual);
  }

  std::vector<Coupling> couplings;
  for (const auto& [p, q] : splits) {
    // c = u P, d = v Q with u P(n) + v Q(n+1) = b(n).
    for (const auto& s : solve_scalars(p, shift(q, 1), b, product)) {
      Coupling candidate{s.u * p, s.v * q};
      if (verify_coupling(a, b, candidate) &&
          std::find(couplings.begin(), couplings.end(), candidate) == couplings.end()) {
        couplings.push_back(std::move(candidate));
      }
    }
  }
  std::sort(couplings.begin(), couplings.end(), coupling_less);
  return couplings;
}

bool verify_coupling(const Polynomial& a, const Polynomial& b, const Coupling& coupling) {
  return coupling.c + shift(coupling.d, 1) == b && coupling.c * coupling.d == -a;
}

}  // namespace gcf_forge
