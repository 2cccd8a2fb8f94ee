#include "plovlab/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace plovlab {

long euler_phi(long k) {
  long result = k;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    while (k % p == 0) k /= p;
    result -= result / p;
  }
  if (k > 1) result -= result / k;
  return result;
}

namespace {

int mobius(long k) {
  int sign = 1;
  for (long p = 2; p * p <= k; ++p) {
    if (k % p) continue;
    k /= p;
    if (k % p == 0) return 0;
    sign = -sign;
  }
  if (k > 1) sign = -sign;
  return sign;
}

QPoly x_pow_minus_one(long e) {
  std::vector<Rational> c(static_cast<std::size_t>(e) + 1);
  c.front() = -1;
  c.back() = 1;
  return QPoly(std::move(c));
}

QPoly compute_cyclotomic(long k) {
  QPoly num = QPoly::constant(1);
  QPoly den = QPoly::constant(1);
  for (long e = 1; e <= k; ++e) {
    if (k % e) continue;
    int mu = mobius(k / e);
    if (mu == 1) num = num * x_pow_minus_one(e);
    if (mu == -1) den = den * x_pow_minus_one(e);
  }
  return num.divmod(den).first;
}

}  // namespace

const QPoly& cyclotomic_poly(long k) {
  if (k < 1) throw PreconditionError("cyclotomic index must be positive");
  static std::mutex mu;
  static std::map<long, std::unique_ptr<QPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[k];
  if (!slot) slot = std::make_unique<QPoly>(compute_cyclotomic(k));
  return *slot;
}

std::optional<long> cyclotomic_order(const QPoly& q) {
  if (!q.is_monic() || !q.has_integer_coefficients()) {
    throw PreconditionError("cyclotomic_order expects a monic integer polynomial, got " + q.to_string("x"));
  }
  const long deg = q.degree();
  for (long k = 1; k <= cyclotomic_search_bound(deg); ++k) {
    if (euler_phi(k) != deg) continue;
    if (cyclotomic_poly(k) == q) return k;
  }
  return std::nullopt;
}

}  // namespace plovlab
