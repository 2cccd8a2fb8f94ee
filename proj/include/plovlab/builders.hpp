#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "plovlab/model.hpp"

namespace plovlab {

using ModelWithAction = std::pair<IntersectionModel, AutoAction>;

/// Complex torus E^d with f* on H^{1,0} given by an integer matrix A with |det A| = 1.
/// Row p of A lists the image of dz_p: f*(dz_p) = Σ_i A(p,i) dz_i, so the
/// single Jordan block f*dz_j = dz_j + dz_{j−1} is lower bidiagonal. On H^{1,1} this gives
/// F = Aᵀ ⊗ Aᵀ acting on coordinates of the basis b_{ij} = e_i ∧ ē_j. ω = Σ b_{ii}.
ModelWithAction build_torus(const RatMatrix& h10);

/// Lower-bidiagonal unipotent Jordan block of size n (ones on the diagonal and subdiagonal).
RatMatrix jordan_block(int n);
/// Block-diagonal sum of Jordan blocks with the given sizes.
RatMatrix jordan_matrix(const std::vector<int>& sizes);

/// Product model on V₁ ⊕ V₂ (no Künneth cross terms); F = F₁ ⊕ F₂, ω = ω₁ ⊕ ω₂.
ModelWithAction build_product(const IntersectionModel& m1, const AutoAction& a1, const IntersectionModel& m2,
                              const AutoAction& a2);

/// Hyper-Kähler type model of dimension 2·half_dim from a quadratic form q of signature (1, h−1).
/// Throws PreconditionError on a wrong signature, c ≤ 0 or q(ω,ω) ≤ 0.
IntersectionModel build_fujiki(const RatMatrix& q, const Rational& c, int half_dim, const ClassVec& omega);

/// N^q(b_dd) compared against Σ_{i+j≤q} (q; i, j, q−i−j) b_{(d−q+i)(d−q+j)} for the single-Jordan-block torus.
struct PascalCheck {
  int q = 0;
  bool passed = false;
  ClassVec computed;
  ClassVec expected;
};
PascalCheck pascal_check(const IntersectionModel& torus, const AutoAction& action, int q);

enum class Positivity { positive, semidefinite, indefinite };
const char* to_string(Positivity p);

/// Classifies the symmetric coefficient matrix (c_ij) of a torus class. "indefinite" covers every
/// class that is not positive semidefinite. Throws PreconditionError for non-torus models or
/// non-symmetric coefficient matrices.
Positivity torus_positivity(const IntersectionModel& torus, const ClassVec& c);
RatMatrix torus_coefficients(const IntersectionModel& torus, const ClassVec& c);
ClassVec torus_class(const RatMatrix& coefficients);

/// Explicit tensor of a torus form computed from the permutation-pair definition.
SparseTensorForm export_sparse_torus(int d);

struct ValidationCheck {
  std::string name;
  bool passed = true;
  std::string detail;
  std::vector<int> witness;  // basis multiset on failure
};

struct ValidationReport {
  std::vector<ValidationCheck> checks;
  bool passed() const;
};

/// Structural checks: evaluator symmetry (structural forms), I-preservation over basis d-multisets,
/// I(ω^d) > 0, |det A| = 1 for tori. Quasi-unipotence is not checked here.
ValidationReport validate(const IntersectionModel& model, const AutoAction& action);

}  // namespace plovlab
