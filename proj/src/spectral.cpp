#include "plovlab/spectral.hpp"

#include <numeric>

#include "plovlab/cyclotomic.hpp"

namespace plovlab {

QuasiUnipotenceResult certify_quasi_unipotent(const RatMatrix& f) {
  if (!f.is_square()) throw DimensionError("quasi-unipotence test needs a square matrix");
  if (determinant(f).is_zero()) throw CertificationError("singular matrix cannot be an automorphism action");
  const long h = f.rows();
  QPoly rest = char_poly(f);
  // A product of cyclotomics has integer coefficients, so a non-integral χ is already a witness.
  if (!rest.has_integer_coefficients()) return NotQuasiUnipotent{rest};

  QuasiUnipotent out;
  for (long k = 1; k <= cyclotomic_search_bound(h) && rest.degree() > 0; ++k) {
    if (euler_phi(k) > rest.degree()) continue;
    const QPoly& phi = cyclotomic_poly(k);
    int mult = 0;
    while (rest.degree() >= phi.degree()) {
      auto [q, r] = rest.divmod(phi);
      if (!r.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    if (mult > 0) {
      out.cyclotomic_factors.emplace_back(k, mult);
      out.order = std::lcm(out.order, k);
    }
  }
  if (rest.degree() > 0) return NotQuasiUnipotent{rest};
  return out;
}

std::vector<int> partition_from_ranks(const std::vector<int>& ranks) {
  // at_least[j] = #blocks of size ≥ j = rank(N^{j-1}) − rank(N^j)
  std::vector<int> at_least(ranks.size() + 1, 0);
  for (std::size_t j = 1; j < ranks.size(); ++j) at_least[j] = ranks[j - 1] - ranks[j];
  std::vector<int> parts;
  for (std::size_t j = ranks.size(); j-- > 1;) {
    int exactly = at_least[j] - at_least[j + 1];
    for (int t = 0; t < exactly; ++t) parts.push_back(static_cast<int>(j));
  }
  return parts;
}

UnipotentCert unipotent_structure(const RatMatrix& f, long order_m) {
  if (!f.is_square()) throw DimensionError("unipotent structure needs a square matrix");
  if (order_m < 1) throw PreconditionError("unipotent order must be positive");
  const int h = f.rows();
  UnipotentCert cert;
  cert.order_m = order_m;
  cert.nilpotent = pow(f, order_m) - RatMatrix::identity(h);
  cert.rank_sequence.push_back(h);
  RatMatrix power = RatMatrix::identity(h);
  for (int j = 1; j <= h; ++j) {
    power = power * cert.nilpotent;
    int r = rank(power);
    cert.rank_sequence.push_back(r);
    if (r == 0) break;
  }
  if (cert.rank_sequence.back() != 0) {
    throw CertificationError("F^" + std::to_string(order_m) + " is not unipotent");
  }
  cert.k = static_cast<int>(cert.rank_sequence.size()) - 2;
  cert.jordan_partition = partition_from_ranks(cert.rank_sequence);
  return cert;
}

UnipotentCert certify(const RatMatrix& f) {
  auto result = certify_quasi_unipotent(f);
  if (auto* no = std::get_if<NotQuasiUnipotent>(&result)) {
    throw CertificationError("not quasi-unipotent; witness " + no->witness.to_string("x"));
  }
  return unipotent_structure(f, std::get<QuasiUnipotent>(result).order);
}

}  // namespace plovlab
