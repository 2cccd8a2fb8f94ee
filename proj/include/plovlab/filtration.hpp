#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plovlab/builders.hpp"
#include "plovlab/kernels.hpp"
#include "plovlab/model.hpp"

namespace plovlab {

enum class Origin { user, canonical };
const char* to_string(Origin p);

/// Classes M₁..M_d whose partial products L_i = M₁⋯M_i define the filtration.
struct QuasiNefSeq {
  std::vector<ClassVec> classes;
  std::vector<Origin> origin;
};

struct Candidate {
  ClassVec value;
  std::string tag;                       // "N^4ω", "N_4ω", "N_3ω", …
  bool invariant = false;                // G·c = c with G the unipotent reduction
  std::optional<Positivity> positivity;  // torus models only
};

/// N^{2i}ω for 1 ≤ 2i < k, then N^kω, N_kω and N_{k−1}ω. Empty when k = 0.
std::vector<Candidate> canonical_candidates(const IntersectionModel& model, const AutoAction& action);

/// Greedy sequence: M_{i+1} = N^p ω with p maximal such that L_i·N^p ω ≢ 0.
QuasiNefSeq canonical_sequence(const IntersectionModel& model, const AutoAction& action);

struct PrefixCheck {
  int index = 0;                          // i, for L_i = M₁⋯M_i
  bool nonzero = false;                   // L_i ≢ 0
  std::vector<int> nonzero_witness;       // basis multiset with nonzero pairing
  bool invariant = false;                 // G·L_i ≡ L_i
  std::vector<int> invariance_witness;    // basis multiset where the pairings differ
  std::optional<Positivity> positivity;   // torus proxy for M_i
};

struct VerificationReport {
  std::vector<PrefixCheck> prefixes;
  bool passed = false;       // every L_i ≢ 0 and invariant
  std::string nef_status;    // "assumed", "semidefinite-proxy" or "unverified"
  std::string note;
};

/// Checks L_i ≢ 0 and G-invariance of L_i at numerical-equivalence level for i = 1..d.
/// Cone membership of L_i is not decidable here; torus models classify each M_i as a proxy.
VerificationReport verify_quasi_nef(const IntersectionModel& model, const AutoAction& action, const QuasiNefSeq& seq,
                                    Exec exec = Exec::parallel);

using Subspace = std::vector<ClassVec>;

struct FiltrationData {
  std::vector<Subspace> f;           // F_0..F_d
  std::vector<Subspace> fp;          // F'_1..F'_d at index i−1
  std::vector<bool> jumps;           // F'_i ≠ F_{i−1}, index i−1
  std::vector<int> s_sequence;       // from powers of N = G − Id
  std::vector<int> s_sequence_inverse;  // from powers of N' = G⁻¹ − Id
  int r = 0;
  int k = 0;
  bool chain_ok = false;             // F_{i−1} ⊆ F'_i ⊆ F_i and dim(F'_i/F_{i−1}) ≤ 1
  bool equal_prefix_ok = true;       // F'_j = F_{j−1} for j ≤ m−1 when M₁ = … = M_m
  bool vanprod_ok = true;            // L_j η_{j+1}⋯η_p ≡ C·L_p and ·η ≡ 0 for η ∈ F_p

  bool k_matches() const { return k == 2 * r; }
};

/// Subspaces F_i = {α : L_i α ≡ 0} and F'_i by the jump criterion L_{i−1} M_i² ≡ 0, the s-sequence
/// of N and of N', and the derived consistency checks. Throws PreconditionError when the sequence
/// does not verify and IntegrityError naming the power and index on inconsistent memberships.
FiltrationData filtration_spaces(const IntersectionModel& model, const AutoAction& action, const QuasiNefSeq& seq,
                                 Exec exec = Exec::parallel);

struct Diagnostic {
  std::string tag;
  std::string statement;
  bool applicable = true;
  bool passed = true;
};

struct DiagnosticsReport {
  ModelKind kind = ModelKind::geometric;
  std::vector<Diagnostic> items;
  bool passed() const;
};

/// Vanishing predicates on the unipotent reduction:
///   vanish-kk1: N_k(ω)^i N_{k−1}(ω)^j ≡ 0 whenever 2i + 2j > 2d − k,
///   vanish-n2: (N²ω)^{d−1} ≡ 0 when k = 2 and d ≥ 3,
///   equiv-sigma: products of m classes from {N^kω, N_kω, N_{k−1}ω} are all ≢ 0 and of m + 1 all ≡ 0,
///   where m is the largest power with (N^kω)^m ≢ 0.
DiagnosticsReport vanishing_diagnostics(const IntersectionModel& model, const AutoAction& action,
                                        Exec exec = Exec::parallel);

/// Subspace helpers.
bool subspace_contains(const Subspace& basis, const ClassVec& v);
int subspace_dim(const Subspace& basis);

}  // namespace plovlab
