#pragma once

#include <optional>
#include <span>
#include <vector>

#include "plovlab/model.hpp"
#include "plovlab/poly.hpp"

namespace plovlab {

/// Execution policy for the data-parallel kernels. Both paths return identical values.
enum class Exec { serial, parallel };

/// Reads PLOVLAB_THREADS and forwards it to OpenMP when set.
void configure_threads_from_env();
int max_threads();

/// All nondecreasing tuples of length `size` over {0, …, n_items−1}, in lexicographic order.
std::vector<std::vector<int>> multisets(int n_items, int size);
/// size! / ∏ multiplicities! for a sorted tuple.
mpz_class multinomial_weight(const std::vector<int>& sorted_tuple);

/// I((Σ_j coeffs[j]·classes[j])^power, fixed…) as a polynomial, with power + |fixed| = d.
/// Expands over multisets of term indices with multinomial weights.
QPoly expand_power(const IntersectionModel& model, std::span<const QPoly> coeffs, std::span<const ClassVec> classes,
                   int power, std::span<const ClassVec> fixed, Exec exec = Exec::parallel);

/// Reference expansion over all ordered tuples (no symmetry reduction, serial). Test/bench only.
QPoly expand_power_reference(const IntersectionModel& model, std::span<const QPoly> coeffs,
                             std::span<const ClassVec> classes, int power, std::span<const ClassVec> fixed);

/// I(v, …, v) for each v.
std::vector<Rational> self_intersections(const IntersectionModel& model, std::span<const ClassVec> vs,
                                         Exec exec = Exec::parallel);

/// First basis multiset γ (lexicographic) with I(prefix…, b_γ) ≠ 0, or nullopt when the product of
/// the prefix classes is numerically trivial.
std::optional<std::vector<int>> find_nonzero_pairing(const IntersectionModel& model, std::span<const ClassVec> prefix,
                                                     Exec exec = Exec::parallel);
inline bool numerically_trivial(const IntersectionModel& model, std::span<const ClassVec> prefix,
                                Exec exec = Exec::parallel) {
  return !find_nonzero_pairing(model, prefix, exec).has_value();
}

/// Pairing values I(prefix…, b_γ) for every basis multiset γ of the complementary size.
std::vector<Rational> pairing_vector(const IntersectionModel& model, std::span<const ClassVec> prefix,
                                     Exec exec = Exec::parallel);

/// First basis multiset γ with I(F·prefix…, b_γ) ≠ I(prefix…, b_γ), or nullopt.
/// Compares the prefix product with its image under F at numerical-equivalence level.
std::optional<std::vector<int>> find_invariance_failure(const IntersectionModel& model, const RatMatrix& f,
                                                        std::span<const ClassVec> prefix, Exec exec = Exec::parallel);

/// First basis d-multiset where I(F b…) ≠ I(b…), scanning at most `cap` multisets (all when the total
/// is below the cap, otherwise a deterministic stride through them). Second member: number checked.
std::pair<std::optional<std::vector<int>>, long> find_preservation_failure(const IntersectionModel& model,
                                                                           const RatMatrix& f, long cap,
                                                                           Exec exec = Exec::parallel);

}  // namespace plovlab
