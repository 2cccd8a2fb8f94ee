#include "plovlab/growth.hpp"

#include <utility>

#include "plovlab/builders.hpp"

namespace plovlab {

InfinitePlov::InfinitePlov(QPoly witness)
    : std::runtime_error("not quasi-unipotent; Plov = ∞; witness " + witness.to_string("x")),
      witness_(std::move(witness)) {}

UnipotentCert reduce(const IntersectionModel& model, const AutoAction& action) {
  if (action.cert) return *action.cert;
  if (model.is_torus() && model.h10_matrix()) {
    auto r = certify_quasi_unipotent(*model.h10_matrix());
    if (auto* no = std::get_if<NotQuasiUnipotent>(&r)) throw InfinitePlov(no->witness);
  }
  auto r = certify_quasi_unipotent(action.matrix);
  if (auto* no = std::get_if<NotQuasiUnipotent>(&r)) throw InfinitePlov(no->witness);
  return unipotent_structure(action.matrix, std::get<QuasiUnipotent>(r).order);
}

std::vector<QPoly> DeltaPoly::coefficients() const {
  std::vector<QPoly> out;
  for (int j = 0; j <= top(); ++j) out.push_back(binomial_poly(j + 1, 1));
  return out;
}

ClassVec DeltaPoly::at(long n) const {
  if (terms.empty()) return {};
  ClassVec out(terms.front().size());
  for (int j = 0; j <= top(); ++j) out += Rational(binomial(n + 1, j + 1)) * terms[static_cast<std::size_t>(j)];
  return out;
}

DeltaPoly delta_poly(const RatMatrix& nilpotent, const ClassVec& omega) {
  DeltaPoly dp;
  ClassVec cur = omega;
  while (!cur.is_zero()) {
    dp.terms.push_back(cur);
    if (static_cast<int>(dp.terms.size()) > nilpotent.rows() + 1) {
      throw CertificationError("operator is not nilpotent on the orbit of the class");
    }
    cur = nilpotent * cur;
  }
  return dp;
}

DeltaPoly delta_poly_two_sided(const RatMatrix& nilpotent, const RatMatrix& nilpotent_inv, const ClassVec& omega) {
  DeltaPoly dp;
  ClassVec a = omega;
  ClassVec b = omega;
  while (!a.is_zero() || !b.is_zero()) {
    dp.terms.push_back(a + b);
    if (static_cast<int>(dp.terms.size()) > nilpotent.rows() + 1) {
      throw CertificationError("operator is not nilpotent on the orbit of the class");
    }
    a = nilpotent * a;
    b = nilpotent_inv * b;
  }
  while (!dp.terms.empty() && dp.terms.back().is_zero()) dp.terms.pop_back();
  return dp;
}

namespace {

struct Reduced {
  UnipotentCert cert;
  RatMatrix g;
  RatMatrix n;
  RatMatrix n_inv;
};

Reduced reduced(const IntersectionModel& model, const AutoAction& action) {
  if (action.matrix.rows() != model.h() || action.matrix.cols() != model.h()) {
    throw DimensionError("action matrix does not match the model");
  }
  Reduced r{reduce(model, action), {}, {}, {}};
  r.n = r.cert.nilpotent;
  const RatMatrix id = RatMatrix::identity(model.h());
  r.g = id + r.n;
  r.n_inv = inverse(r.g) - id;
  return r;
}

QPoly expand_with(const IntersectionModel& model, const std::vector<QPoly>& coeffs, const DeltaPoly& dp, int power,
                  Exec exec) {
  std::vector<ClassVec> fixed(static_cast<std::size_t>(model.complex_dim() - power), model.kahler());
  return expand_power(model, coeffs, dp.terms, power, fixed, exec);
}

std::vector<int> ladder(const IntersectionModel& model, const DeltaPoly& dp, const QPoly& top, Exec exec) {
  const auto coeffs = dp.coefficients();
  std::vector<int> out;
  for (int i = 1; i < model.complex_dim(); ++i) out.push_back(expand_with(model, coeffs, dp, i, exec).degree());
  out.push_back(top.degree());
  return out;
}

OracleResult oracle_from(const IntersectionModel& model, const Reduced& r, QPoly closed_form, Exec exec) {
  OracleResult out;
  out.closed_form = std::move(closed_form);
  out.samples = model.complex_dim() * (r.cert.k + 1) + 2;
  std::vector<ClassVec> sums;
  ClassVec cur = model.kahler();
  ClassVec acc = cur;
  for (int n = 0; n < out.samples; ++n) {
    sums.push_back(acc);
    cur = r.g * cur;
    acc += cur;
  }
  const auto values = self_intersections(model, sums, exec);
  std::vector<std::pair<long, Rational>> points;
  for (int n = 0; n < out.samples; ++n) points.emplace_back(n, values[static_cast<std::size_t>(n)]);
  out.interpolated = interpolate(points);
  out.agreed = out.interpolated == out.closed_form;
  return out;
}

DPolResult d_pol_from(const IntersectionModel& model, const Reduced& r, Exec exec) {
  DeltaPoly dp = delta_poly_two_sided(r.n, r.n_inv, model.kahler());
  std::vector<QPoly> coeffs;
  for (int j = 0; j <= dp.top(); ++j) coeffs.push_back(binomial_poly(j, 0));
  DPolResult out;
  out.poly = expand_power(model, coeffs, dp.terms, model.complex_dim(), {}, exec);
  out.degree = out.poly.degree();
  out.bound = r.cert.k * (model.complex_dim() / 2);
  return out;
}

}  // namespace

bool GrowthReport::ladder_strict() const {
  int prev = 0;
  for (int deg : partial_degrees) {
    if (deg <= prev) return false;
    prev = deg;
  }
  return true;
}

bool GrowthReport::primed_ladder_strict() const {
  int prev = 0;
  for (int deg : primed_degrees) {
    if (deg <= prev) return false;
    prev = deg;
  }
  return true;
}

GrowthReport plov(const IntersectionModel& model, const AutoAction& action, Exec exec) {
  const Reduced r = reduced(model, action);
  const int d = model.complex_dim();
  GrowthReport rep;
  rep.order_m = r.cert.order_m;
  rep.k = r.cert.k;

  const DeltaPoly dp = delta_poly(r.n, model.kahler());
  rep.p = expand_with(model, dp.coefficients(), dp, d, exec);
  rep.plov = rep.p.degree();
  rep.gkdim = rep.plov + 1;
  rep.partial_degrees = ladder(model, dp, rep.p, exec);

  const DeltaPoly tp = delta_poly_two_sided(r.n, r.n_inv, model.kahler());
  const QPoly p2 = expand_with(model, tp.coefficients(), tp, d, exec);
  rep.plov_two_sided = p2.degree();
  rep.primed_degrees = ladder(model, tp, p2, exec);

  const DPolResult dpol = d_pol_from(model, r, exec);
  rep.d_pol = dpol.degree;
  rep.d_pol_bound = dpol.bound;

  OracleResult oracle = oracle_from(model, r, rep.p, exec);
  rep.oracle_p = std::move(oracle.interpolated);
  rep.oracle_agreed = oracle.agreed;
  return rep;
}

QPoly plov_polynomial(const IntersectionModel& model, const AutoAction& action, Exec exec) {
  const Reduced r = reduced(model, action);
  const DeltaPoly dp = delta_poly(r.n, model.kahler());
  return expand_with(model, dp.coefficients(), dp, model.complex_dim(), exec);
}

int plov_two_sided(const IntersectionModel& model, const AutoAction& action, Exec exec) {
  const Reduced r = reduced(model, action);
  const DeltaPoly tp = delta_poly_two_sided(r.n, r.n_inv, model.kahler());
  return expand_with(model, tp.coefficients(), tp, model.complex_dim(), exec).degree();
}

OracleResult oracle_plov(const IntersectionModel& model, const AutoAction& action, Exec exec) {
  const Reduced r = reduced(model, action);
  const DeltaPoly dp = delta_poly(r.n, model.kahler());
  return oracle_from(model, r, expand_with(model, dp.coefficients(), dp, model.complex_dim(), exec), exec);
}

DPolResult d_pol(const IntersectionModel& model, const AutoAction& action, Exec exec) {
  return d_pol_from(model, reduced(model, action), exec);
}

std::vector<Rational> hilbert_sequence(const IntersectionModel& model, const AutoAction& action, int n_max) {
  if (!model.is_torus()) throw PreconditionError("Hilbert sequence is only available on torus models");
  if (n_max < 0) throw PreconditionError("n_max must be non-negative");
  const Rational dfact(factorial(model.complex_dim()));
  std::vector<Rational> seq{Rational(1)};
  ClassVec cur = model.kahler();
  ClassVec delta = cur;
  for (int m = 1; m <= n_max; ++m) {
    if (torus_positivity(model, delta) != Positivity::positive) {
      throw PreconditionError("Δ_{m−1} is not positive at m = " + std::to_string(m) + "; h⁰ = χ is not guaranteed");
    }
    Rational v = model.self_intersection(delta) / dfact;
    if (!v.is_integer() || v.sign() <= 0) {
      throw IntegrityError("dim B_" + std::to_string(m) + " = " + v.to_string() + " is not a positive integer");
    }
    seq.push_back(std::move(v));
    cur = action.matrix * cur;
    delta += cur;
  }
  return seq;
}

std::optional<int> fitted_degree(const std::vector<Rational>& seq) {
  if (seq.size() < 3) return std::nullopt;
  std::vector<std::pair<long, Rational>> points;
  for (std::size_t m = 1; m + 1 < seq.size(); ++m) points.emplace_back(static_cast<long>(m), seq[m]);
  const QPoly fit = interpolate(points);
  const auto last = static_cast<long>(seq.size() - 1);
  if (fit(Rational(last)) != seq.back() || fit.is_zero()) return std::nullopt;
  return fit.degree();
}

std::optional<long> f_ample_witness(const IntersectionModel& model, const AutoAction& action, const ClassVec& l,
                                    long n_cap) {
  if (!model.is_torus()) throw PreconditionError("ampleness is only decidable on torus models");
  ClassVec cur = l;
  ClassVec delta = l;
  for (long n = 0; n <= n_cap; ++n) {
    if (torus_positivity(model, delta) == Positivity::positive) return n;
    cur = action.matrix * cur;
    delta += cur;
  }
  return std::nullopt;
}

bool DeglcReport::passed() const {
  for (const auto& e : entries) {
    if (!e.passed()) return false;
  }
  return top_degree == d * d && top_coefficient == expected_top;
}

DeglcReport deglc_diagnostic(int d) {
  if (d < 1 || d > 4) throw PreconditionError("degree diagnostic is provided for 1 ≤ d ≤ 4");
  auto [model, action] = build_torus(jordan_block(d));
  const RatMatrix n = action.matrix - RatMatrix::identity(model.h());
  std::vector<ClassVec> terms;
  std::vector<QPoly> coeffs;
  ClassVec cur = model.basis_class((d - 1) * d + (d - 1));
  for (int q = 0; q <= 2 * d - 2; ++q) {
    terms.push_back(cur);
    coeffs.push_back(binomial_poly(q + 1, 1));
    cur = n * cur;
  }
  DeglcReport rep;
  rep.d = d;
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      const auto idx = static_cast<std::size_t>((d - 1 - i) * d + (d - 1 - j));
      QPoly entry;
      for (std::size_t q = 0; q < terms.size(); ++q) entry += coeffs[q] * terms[q][idx];
      DeglcEntry e;
      e.i = i;
      e.j = j;
      e.degree = entry.degree();
      e.leading = entry.leading();
      e.expected_degree = i + j + 1;
      e.expected_leading = Rational(binomial(i + j, i)) / Rational(factorial(i + j + 1));
      rep.entries.push_back(std::move(e));
    }
  }
  const QPoly top = expand_power(model, coeffs, terms, d, {});
  rep.top_degree = top.degree();
  rep.top_coefficient = top.coeff(d * d);
  rep.expected_top = Rational(factorial(d)) * cauchy_matrix_det(d);
  return rep;
}

Rational cauchy_matrix_det(int d) {
  RatMatrix m(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) m(i, j) = Rational(1) / Rational(mpz_class((i + j + 1) * factorial(i) * factorial(j)));
  }
  return determinant(m);
}

Rational cauchy_closed_form(int d) {
  mpz_class num = 1;
  mpz_class den = 1;
  for (int p = 0; p < d; ++p) num *= factorial(p);
  for (int p = d; p < 2 * d; ++p) den *= factorial(p);
  return Rational(num, den);
}

}  // namespace plovlab
