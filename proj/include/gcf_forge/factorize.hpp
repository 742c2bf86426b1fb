#pragma once

#include <vector>

#include "gcf_forge/poly.hpp"

namespace gcf_forge {

/// Polynomials with c(n) + d(n+1) = b(n) and c(n) d(n) = -a(n); they split
/// the three-term recurrence into
///   y_n - d(n+1) y_{n-1} = c(n) (y_{n-1} - d(n) y_{n-2}).
struct Coupling {
  Polynomial c;
  Polynomial d;

  friend bool operator==(const Coupling&, const Coupling&) = default;
};

/// All couplings reachable by distributing the rational-root factors of -a
/// (and any irreducible residual, kept whole) between c and d. An empty
/// result means none exist within that linear-split search space; it is not
/// a proof that no polynomial coupling exists. Sorted by (deg c, coefficients
/// of c). Throws ZeroPartialNumerator if a = 0.
std::vector<Coupling> find_couplings(const Polynomial& a, const Polynomial& b);

/// Exact canonical-form check of both identities.
bool verify_coupling(const Polynomial& a, const Polynomial& b, const Coupling& coupling);

}  // namespace gcf_forge
