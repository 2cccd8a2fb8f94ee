#include "plovlab/builders.hpp"

#include <algorithm>
#include <memory>
#include <numeric>
#include <random>
#include <sstream>

#include "plovlab/kernels.hpp"

namespace plovlab {

namespace {

std::string torus_label(int i, int j, int d) {
  std::ostringstream os;
  os << "b" << i + 1;
  if (d > 9) os << ",";
  os << j + 1;
  return os.str();
}

int permutation_sign(const std::vector<int>& p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) sign = -sign;
  return sign;
}

}  // namespace

RatMatrix jordan_block(int n) {
  RatMatrix a = RatMatrix::identity(n);
  for (int p = 1; p < n; ++p) a(p, p - 1) = 1;
  return a;
}

RatMatrix jordan_matrix(const std::vector<int>& sizes) {
  RatMatrix a(0, 0);
  for (int s : sizes) a = direct_sum(a, jordan_block(s));
  return a;
}

ModelWithAction build_torus(const RatMatrix& h10) {
  if (!h10.is_square() || h10.rows() < 1) throw DimensionError("torus action on H^{1,0} must be square");
  if (!h10.is_integer()) throw PreconditionError("torus action on H^{1,0} must be an integer matrix");
  const Rational det = determinant(h10);
  if (det != Rational(1) && det != Rational(-1)) {
    throw PreconditionError("torus action rejected: |det A| = " + (det.sign() < 0 ? -det : det).to_string() +
                            " ≠ 1");
  }
  const int d = h10.rows();
  std::vector<std::string> labels;
  ClassVec omega(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) labels.push_back(torus_label(i, j, d));
    omega[static_cast<std::size_t>(i * d + i)] = 1;
  }
  IntersectionModel model(d, std::move(labels), TorusForm{d}, std::move(omega), ModelKind::geometric);
  model.set_h10_matrix(h10);
  const RatMatrix at = h10.transpose();
  return {std::move(model), AutoAction(kron(at, at))};
}

ModelWithAction build_product(const IntersectionModel& m1, const AutoAction& a1, const IntersectionModel& m2,
                              const AutoAction& a2) {
  if (a1.matrix.rows() != m1.h() || a2.matrix.rows() != m2.h()) {
    throw DimensionError("product factors: action does not match model");
  }
  std::vector<std::string> labels;
  for (const auto& l : m1.labels()) labels.push_back("1:" + l);
  for (const auto& l : m2.labels()) labels.push_back("2:" + l);
  std::vector<Rational> omega = m1.kahler().coords();
  omega.insert(omega.end(), m2.kahler().coords().begin(), m2.kahler().coords().end());
  ProductForm form{std::make_shared<const IntersectionModel>(m1), std::make_shared<const IntersectionModel>(m2)};
  ModelKind kind = (m1.kind() == ModelKind::geometric && m2.kind() == ModelKind::geometric) ? ModelKind::geometric
                                                                                             : ModelKind::synthetic;
  IntersectionModel model(m1.complex_dim() + m2.complex_dim(), std::move(labels), std::move(form),
                          ClassVec(std::move(omega)), kind);
  return {std::move(model), AutoAction(direct_sum(a1.matrix, a2.matrix))};
}

IntersectionModel build_fujiki(const RatMatrix& q, const Rational& c, int half_dim, const ClassVec& omega) {
  if (!q.is_square()) throw DimensionError("quadratic form must be square");
  if (!(q == q.transpose())) throw PreconditionError("quadratic form must be symmetric");
  if (half_dim < 1) throw PreconditionError("half dimension must be positive");
  if (c.sign() <= 0) throw PreconditionError("Fujiki constant must be positive");
  const int h = q.rows();
  Inertia in = inertia(q);
  if (in.positive != 1 || in.negative != h - 1) {
    throw PreconditionError("quadratic form must have signature (1, " + std::to_string(h - 1) + "), got (" +
                            std::to_string(in.positive) + ", " + std::to_string(in.negative) + ")");
  }
  if (static_cast<int>(omega.size()) != h) throw DimensionError("distinguished class has wrong length");
  auto qw = q.apply(omega.coords());
  Rational qq;
  for (int i = 0; i < h; ++i) qq += qw[static_cast<std::size_t>(i)] * omega[static_cast<std::size_t>(i)];
  if (qq.sign() <= 0) throw PreconditionError("q(ω, ω) must be positive");
  std::vector<std::string> labels;
  for (int i = 0; i < h; ++i) labels.push_back("x" + std::to_string(i + 1));
  return IntersectionModel(2 * half_dim, std::move(labels), FujikiForm{q, c, half_dim}, omega, ModelKind::geometric);
}

PascalCheck pascal_check(const IntersectionModel& torus, const AutoAction& action, int q) {
  if (!torus.is_torus() || !torus.h10_matrix()) throw PreconditionError("pascal check needs a torus model");
  const int d = torus.complex_dim();
  if (!(*torus.h10_matrix() == jordan_block(d))) {
    throw PreconditionError("pascal check needs a single unipotent Jordan block on H^{1,0}");
  }
  const RatMatrix n = action.matrix - RatMatrix::identity(torus.h());
  PascalCheck out;
  out.q = q;
  out.computed = torus.basis_class((d - 1) * d + (d - 1));
  for (int t = 0; t < q; ++t) out.computed = n * out.computed;
  out.expected = torus.zero_class();
  for (int i = 0; i <= q; ++i) {
    for (int j = 0; i + j <= q; ++j) {
      // 1-based indices d−q+i, d−q+j; out-of-range terms vanish.
      const int row = d - q + i;
      const int col = d - q + j;
      if (row < 1 || row > d || col < 1 || col > d) continue;
      mpz_class tri = factorial(q) / (factorial(i) * factorial(j) * factorial(q - i - j));
      out.expected[static_cast<std::size_t>((row - 1) * d + (col - 1))] += Rational(tri);
    }
  }
  out.passed = out.computed == out.expected;
  return out;
}

const char* to_string(Positivity p) {
  switch (p) {
    case Positivity::positive:
      return "positive";
    case Positivity::semidefinite:
      return "semidefinite";
    case Positivity::indefinite:
      return "indefinite";
  }
  return "?";
}

RatMatrix torus_coefficients(const IntersectionModel& torus, const ClassVec& c) {
  if (!torus.is_torus()) throw PreconditionError("positivity classification is only available on torus models");
  const int d = torus.complex_dim();
  if (static_cast<int>(c.size()) != d * d) throw DimensionError("class has wrong length");
  RatMatrix m(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = c[static_cast<std::size_t>(i * d + j)];
  return m;
}

ClassVec torus_class(const RatMatrix& coefficients) {
  const int d = coefficients.rows();
  ClassVec c(static_cast<std::size_t>(d * d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) c[static_cast<std::size_t>(i * d + j)] = coefficients(i, j);
  return c;
}

Positivity torus_positivity(const IntersectionModel& torus, const ClassVec& c) {
  RatMatrix m = torus_coefficients(torus, c);
  if (!(m == m.transpose())) throw PreconditionError("coefficient matrix of the class is not symmetric");
  Inertia in = inertia(m);
  if (in.positive == m.rows()) return Positivity::positive;
  if (in.negative == 0) return Positivity::semidefinite;
  return Positivity::indefinite;
}

SparseTensorForm export_sparse_torus(int d) {
  SparseTensorForm t;
  std::vector<int> sigma(static_cast<std::size_t>(d));
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<int> tau(static_cast<std::size_t>(d));
    std::iota(tau.begin(), tau.end(), 0);
    const int s_sigma = permutation_sign(sigma);
    do {
      std::vector<int> idx(static_cast<std::size_t>(d));
      for (int l = 0; l < d; ++l) idx[static_cast<std::size_t>(l)] = sigma[static_cast<std::size_t>(l)] * d + tau[static_cast<std::size_t>(l)];
      std::sort(idx.begin(), idx.end());
      t.entries[idx] = Rational(s_sigma * permutation_sign(tau));
    } while (std::next_permutation(tau.begin(), tau.end()));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return t;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

namespace {

constexpr long kPreservationCap = 200000;
constexpr int kSymmetrySamples = 12;

ValidationCheck symmetry_check(const IntersectionModel& model) {
  ValidationCheck check{"symmetry", true, "", {}};
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<int> coef(-3, 3);
  const int d = model.complex_dim();
  for (int s = 0; s < kSymmetrySamples && check.passed; ++s) {
    std::vector<ClassVec> args;
    for (int l = 0; l < d; ++l) {
      ClassVec c = model.zero_class();
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = coef(rng);
      args.push_back(std::move(c));
    }
    const Rational base = model.eval(args);
    std::vector<int> perm(static_cast<std::size_t>(d));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ClassVec> shuffled;
    for (int p : perm) shuffled.push_back(args[static_cast<std::size_t>(p)]);
    if (model.eval(shuffled) != base) {
      check.passed = false;
      check.detail = "value changes under argument permutation (sample " + std::to_string(s) + ")";
      check.witness = perm;
    }
  }
  if (check.passed) check.detail = std::to_string(kSymmetrySamples) + " random permutation samples agree";
  return check;
}

}  // namespace

ValidationReport validate(const IntersectionModel& model, const AutoAction& action) {
  ValidationReport report;
  if (!std::holds_alternative<SparseTensorForm>(model.form())) report.checks.push_back(symmetry_check(model));

  ValidationCheck vol{"volume-positive", true, "", {}};
  Rational v = model.self_intersection(model.kahler());
  vol.passed = v.sign() > 0;
  vol.detail = "I(ω^d) = " + v.to_string();
  report.checks.push_back(vol);

  ValidationCheck pres{"preserves-form", true, "", {}};
  if (action.matrix.rows() != model.h() || action.matrix.cols() != model.h()) {
    pres.passed = false;
    pres.detail = "action matrix is " + std::to_string(action.matrix.rows()) + "x" +
                  std::to_string(action.matrix.cols()) + ", model has h = " + std::to_string(model.h());
  } else if (determinant(action.matrix).is_zero()) {
    pres.passed = false;
    pres.detail = "action matrix is singular";
  } else {
    auto [fail, checked] = find_preservation_failure(model, action.matrix, kPreservationCap);
    pres.passed = !fail.has_value();
    pres.detail = std::to_string(checked) + " basis multisets checked";
    if (fail) pres.witness = *fail;
  }
  report.checks.push_back(pres);

  if (model.is_torus() && model.h10_matrix()) {
    ValidationCheck det{"torus-det", true, "", {}};
    Rational dt = determinant(*model.h10_matrix());
    det.passed = dt == Rational(1) || dt == Rational(-1);
    det.detail = "det A = " + dt.to_string();
    report.checks.push_back(det);
  }
  return report;
}

}  // namespace plovlab
