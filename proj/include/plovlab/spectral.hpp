#pragma once

#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "plovlab/matrix.hpp"

namespace plovlab {

class CertificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct QuasiUnipotent {
  long order = 1;                                  // least M with F^M unipotent
  std::vector<std::pair<long, int>> cyclotomic_factors;  // (k, multiplicity of Φ_k)
};

struct NotQuasiUnipotent {
  QPoly witness;  // factor of the characteristic polynomial that is not a product of cyclotomics
};

using QuasiUnipotenceResult = std::variant<QuasiUnipotent, NotQuasiUnipotent>;

/// Splits off every cyclotomic factor of det(xI − F). F must be square and invertible.
/// Throws DimensionError (non-square) or CertificationError (singular).
QuasiUnipotenceResult certify_quasi_unipotent(const RatMatrix& f);

/// Unipotent reduction data for F^M.
struct UnipotentCert {
  long order_m = 1;
  RatMatrix nilpotent;               // N = F^M − Id
  int k = 0;                         // largest j with N^j ≠ 0
  std::vector<int> jordan_partition; // block sizes of F^M, descending
  std::vector<int> rank_sequence;    // rank(N^j) for j = 0..k+1
  bool k_even() const { return k % 2 == 0; }
};

/// Throws CertificationError when F^M is not unipotent.
UnipotentCert unipotent_structure(const RatMatrix& f, long order_m);

/// certify_quasi_unipotent followed by unipotent_structure; throws CertificationError with the
/// witness in the message when F is not quasi-unipotent.
UnipotentCert certify(const RatMatrix& f);

/// Jordan block sizes (descending) from a rank sequence rank(N^0), rank(N^1), ..., ending at 0.
std::vector<int> partition_from_ranks(const std::vector<int>& ranks);

}  // namespace plovlab
