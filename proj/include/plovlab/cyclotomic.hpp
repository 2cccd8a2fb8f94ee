#pragma once

#include <optional>

#include "plovlab/poly.hpp"

namespace plovlab {

long euler_phi(long k);

/// The k-th cyclotomic polynomial Φ_k (k ≥ 1), computed as ∏_{e|k} (x^e − 1)^{μ(k/e)}.
/// Results are memoized; safe to call concurrently.
const QPoly& cyclotomic_poly(long k);

/// Largest k that can satisfy φ(k) ≤ deg. Uses φ(k) ≥ sqrt(k/2), so k ≤ 2·deg² is enough.
constexpr long cyclotomic_search_bound(long deg) { return 2 * deg * deg; }

/// Returns k when q = Φ_k, otherwise nullopt.
/// q must be monic with integer coefficients (PreconditionError otherwise); irreducibility is the caller's job.
std::optional<long> cyclotomic_order(const QPoly& q);

}  // namespace plovlab
