#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

#include "plovlab/kernels.hpp"
#include "plovlab/model.hpp"

namespace plovlab {

/// Raised when the action is not quasi-unipotent, so the growth degree is infinite.
class InfinitePlov : public std::runtime_error {
 public:
  explicit InfinitePlov(QPoly witness);
  const QPoly& witness() const { return witness_; }

 private:
  QPoly witness_;
};

/// Certifies quasi-unipotence and returns the unipotent reduction of F. For torus models the
/// H^{1,0} matrix is certified first so that a failure reports its characteristic factor.
/// Throws InfinitePlov carrying the non-cyclotomic factor.
UnipotentCert reduce(const IntersectionModel& model, const AutoAction& action);

/// Class-valued polynomial Δₙ = Σⱼ C(n+1, j+1)·cⱼ. terms[j] = cⱼ for j = 0..top, terms[top] ≠ 0.
struct DeltaPoly {
  std::vector<ClassVec> terms;

  int top() const { return static_cast<int>(terms.size()) - 1; }
  /// Coefficient polynomials C(n+1, j+1) in n, one per term.
  std::vector<QPoly> coefficients() const;
  ClassVec at(long n) const;
};

/// Terms N^j ω of the one-sided orbit sum Σ_{i=0}^n (Id+N)^i ω.
DeltaPoly delta_poly(const RatMatrix& nilpotent, const ClassVec& omega);
/// Terms N_j ω = (N^j + N'^j) ω of the two-sided sum Σ_{i=0}^n ((Id+N)^i + (Id+N')^i) ω.
DeltaPoly delta_poly_two_sided(const RatMatrix& nilpotent, const RatMatrix& nilpotent_inv, const ClassVec& omega);

struct GrowthReport {
  long order_m = 1;
  int k = 0;
  int plov = 0;
  int gkdim = 0;
  QPoly p;                             // I(Δₙ^d)
  std::vector<int> partial_degrees;    // deg I(Δₙ^i ω^{d−i}), i = 1..d
  std::vector<int> primed_degrees;     // deg I(Δ'ₙ^i ω^{d−i}), i = 1..d
  int plov_two_sided = 0;
  int d_pol = 0;
  int d_pol_bound = 0;                 // k·⌊d/2⌋
  QPoly oracle_p;
  bool oracle_agreed = false;

  bool ladder_strict() const;
  bool primed_ladder_strict() const;
};

/// Full growth computation on the unipotent reduction. Throws InfinitePlov.
GrowthReport plov(const IntersectionModel& model, const AutoAction& action, Exec exec = Exec::parallel);

/// Closed-form P(n) = I(Δₙ^d) for the unipotent reduction.
QPoly plov_polynomial(const IntersectionModel& model, const AutoAction& action, Exec exec = Exec::parallel);

/// Degree of I(Δ'ₙ^d) with Δ'ₙ = Σ_{i=0}^n ((f^i)* + (f^{−i})*) ω.
int plov_two_sided(const IntersectionModel& model, const AutoAction& action, Exec exec = Exec::parallel);

struct OracleResult {
  QPoly closed_form;
  QPoly interpolated;
  int samples = 0;
  bool agreed = false;
};

/// Samples sₙ = I(vₙ^d), vₙ = Σ_{i=0}^n G^i ω for G = F^M and n = 0..d(k+1)+1, then interpolates.
OracleResult oracle_plov(const IntersectionModel& model, const AutoAction& action, Exec exec = Exec::parallel);

struct DPolResult {
  int degree = 0;
  int bound = 0;  // k·⌊d/2⌋
  QPoly poly;     // I((G^n ω + G^{−n} ω)^d)
  bool within_bound() const { return degree <= bound; }
};
DPolResult d_pol(const IntersectionModel& model, const AutoAction& action, Exec exec = Exec::parallel);

/// [1, I(Δ₀^d)/d!, …, I(Δ_{n_max−1}^d)/d!] with Δ_m = Σ_{i=0}^m F^i ω for the action itself.
/// Torus models only. Throws PreconditionError naming m when Δ_{m−1} is not positive, and
/// IntegrityError when an entry is not a positive integer.
std::vector<Rational> hilbert_sequence(const IntersectionModel& model, const AutoAction& action, int n_max);

/// Degree of m ↦ seq[m] for m ≥ 1, read from the interpolant of all but the last point and
/// confirmed by the last one. nullopt when the samples do not determine the degree.
std::optional<int> fitted_degree(const std::vector<Rational>& seq);

/// Least n ≤ n_cap with Δₙ(f, L) = Σ_{i=0}^n F^i L positive. Torus models only.
std::optional<long> f_ample_witness(const IntersectionModel& model, const AutoAction& action, const ClassVec& l,
                                    long n_cap);

/// Entry P_{d−i,d−j}(n) of Ω = Σ_q C(n+1, q+1) N^q(b_dd) for the single-block torus.
struct DeglcEntry {
  int i = 0;
  int j = 0;
  int degree = 0;
  Rational leading;
  int expected_degree = 0;
  Rational expected_leading;
  bool passed() const { return degree == expected_degree && leading == expected_leading; }
};

struct DeglcReport {
  int d = 0;
  std::vector<DeglcEntry> entries;
  int top_degree = 0;          // deg I(Ω^d)
  Rational top_coefficient;    // coefficient of n^{d²} in I(Ω^d)
  Rational expected_top;       // d!·det(1/((i+j+1)·i!·j!))
  bool passed() const;
};

/// Degree and leading-coefficient diagnostic on the single-Jordan-block torus of dimension d.
DeglcReport deglc_diagnostic(int d);

/// det(1/((i+j+1)·i!·j!))_{0≤i,j<d} computed by elimination.
Rational cauchy_matrix_det(int d);
/// ∏_{p=0}^{d−1} p! / ∏_{p=d}^{2d−1} p!
Rational cauchy_closed_form(int d);

}  // namespace plovlab
