#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "plovlab/builders.hpp"
#include "plovlab/gallery.hpp"

using namespace plovlab;

namespace {

ClassVec random_class(std::size_t h, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> dist(lo, hi);
  ClassVec c(h);
  for (std::size_t i = 0; i < h; ++i) c[i] = Rational(dist(rng));
  return c;
}

ClassVec torus_basis(int d, int i, int j) { return ClassVec::basis(static_cast<std::size_t>(d * d), static_cast<std::size_t>(i * d + j)); }

/// Random symmetric positive semidefinite coefficient matrix BᵀB.
RatMatrix random_psd(int d, std::mt19937_64& rng) {
  const RatMatrix b = oracle::random_int_matrix(d, d, rng, -2, 2);
  return b.transpose() * b;
}

}  // namespace

TEST_CASE("torus form: worked values") {
  auto [m2, a2] = build_torus(RatMatrix::identity(2));
  CHECK(m2.eval({torus_basis(2, 0, 0), torus_basis(2, 1, 1)}) == Rational(1));
  CHECK(m2.eval({torus_basis(2, 0, 1), torus_basis(2, 1, 0)}) == Rational(-1));
  CHECK(m2.labels() == std::vector<std::string>{"b11", "b12", "b21", "b22"});
  for (int d = 1; d <= 5; ++d) {
    auto [m, a] = build_torus(RatMatrix::identity(d));
    CHECK(m.self_intersection(m.kahler()) == Rational(factorial(d)));
  }
  auto [m3, a3] = build_torus(RatMatrix::identity(3));
  CHECK(m3.self_intersection(m3.kahler()) == Rational(6));
  std::mt19937_64 rng(31);
  CHECK(m3.eval({m3.zero_class(), random_class(9, rng), random_class(9, rng)}).is_zero());
  CHECK_THROWS_AS(m3.eval({m3.kahler(), m3.kahler()}), DimensionError);
}

TEST_CASE("torus labels use a separator past nine") {
  auto [m, a] = build_torus(RatMatrix::identity(10));
  CHECK(m.labels()[1] == "b1,2");
  CHECK(m.labels()[99] == "b10,10");
}

TEST_CASE("build_torus on the E² Jordan block") {
  auto [model, action] = build_torus(RatMatrix{{1, 0}, {1, 1}});
  CHECK(model.h() == 4);
  CHECK(validate(model, action).passed());
  const RatMatrix n = action.matrix - RatMatrix::identity(4);
  const ClassVec w = model.kahler();
  // Nω = b₁₁ + b₁₂ + b₂₁, N²ω = 2b₁₁, N³ω = 0 by direct application.
  const ClassVec n1 = oracle::apply(n, w);
  const ClassVec n2 = oracle::apply(n, n1);
  CHECK(n1 == torus_basis(2, 0, 0) + torus_basis(2, 0, 1) + torus_basis(2, 1, 0));
  CHECK(n2 == Rational(2) * torus_basis(2, 0, 0));
  CHECK(oracle::apply(n, n2).is_zero());
  CHECK(n * w == n1);
}

TEST_CASE("build_torus with the identity gives the identity action") {
  auto [model, action] = build_torus(RatMatrix::identity(3));
  CHECK(action.matrix == RatMatrix::identity(9));
  CHECK(certify(action.matrix).k == 0);
}

TEST_CASE("build_torus rejects non-automorphisms") {
  CHECK_THROWS_AS(build_torus(RatMatrix{{2, 0}, {0, 1}}), PreconditionError);
  CHECK_THROWS_AS(build_torus(RatMatrix{{Rational(1) / Rational(2), 0}, {0, 2}}), PreconditionError);
  CHECK_THROWS_AS(build_torus(RatMatrix(2, 3)), DimensionError);
  // det = 1 but not quasi-unipotent: accepted here, rejected later by certification.
  auto [model, action] = build_torus(RatMatrix{{2, 1}, {1, 1}});
  CHECK(validate(model, action).passed());
}

TEST_CASE("pascal pyramid identity for single blocks") {
  for (int d = 3; d <= 4; ++d) {
    auto [model, action] = build_torus(jordan_block(d));
    const RatMatrix n = action.matrix - RatMatrix::identity(d * d);
    ClassVec v = torus_basis(d, d - 1, d - 1);
    for (int q = 0; q <= 2 * d - 2; ++q) {
      // Trinomial expansion written out independently: q!/(i! j! (q−i−j)!) on b_{(d−q+i)(d−q+j)}.
      ClassVec expected(static_cast<std::size_t>(d * d));
      for (int i = 0; i <= q; ++i) {
        for (int j = 0; i + j <= q; ++j) {
          const int r = d - 1 - q + i;
          const int c = d - 1 - q + j;
          if (r < 0 || c < 0) continue;
          const Rational tri = Rational(factorial(q)) / Rational(mpz_class(factorial(i) * factorial(j) * factorial(q - i - j)));
          expected[static_cast<std::size_t>(r * d + c)] += tri;
        }
      }
      CHECK(v == expected);
      const PascalCheck pc = pascal_check(model, action, q);
      CHECK(pc.passed);
      CHECK(pc.computed == v);
      v = oracle::apply(n, v);
    }
  }
  auto [m21, a21] = build_torus(jordan_matrix({2, 1}));
  CHECK_THROWS_AS(pascal_check(m21, a21, 1), PreconditionError);
}

TEST_CASE("dual path: structural torus evaluator, exported tensor and permutation oracle agree") {
  std::mt19937_64 rng(32);
  for (int d = 1; d <= 4; ++d) {
    auto [torus, action] = build_torus(RatMatrix::identity(d));
    const IntersectionModel sparse(d, torus.labels(), export_sparse_torus(d), torus.kahler(), ModelKind::synthetic);
    for (int t = 0; t < 6; ++t) {
      std::vector<ClassVec> cs;
      for (int l = 0; l < d; ++l) cs.push_back(random_class(static_cast<std::size_t>(d * d), rng));
      const Rational expected = oracle::torus_form(d, cs);
      CHECK(torus.eval(cs) == expected);
      CHECK(sparse.eval(cs) == expected);
    }
  }
}

TEST_CASE("property: evaluation is symmetric on every model kind") {
  std::mt19937_64 rng(33);
  std::vector<IntersectionModel> models;
  models.push_back(build_torus(jordan_block(3)).first);
  models.push_back(gallery_entry("product-j2xj2").build().first);
  models.push_back(gallery_entry("fujiki-parabolic-d2").build().first);
  models.push_back(IntersectionModel(3, build_torus(RatMatrix::identity(3)).first.labels(), export_sparse_torus(3),
                                     build_torus(RatMatrix::identity(3)).first.kahler(), ModelKind::synthetic));
  for (const auto& m : models) {
    for (int t = 0; t < 8; ++t) {
      std::vector<ClassVec> cs;
      for (int l = 0; l < m.complex_dim(); ++l) cs.push_back(random_class(static_cast<std::size_t>(m.h()), rng));
      const Rational base = m.eval(cs);
      std::shuffle(cs.begin(), cs.end(), rng);
      CHECK(m.eval(cs) == base);
    }
  }
}

TEST_CASE("property: multilinearity in the first slot") {
  std::mt19937_64 rng(34);
  auto [m, a] = build_torus(jordan_block(3));
  for (int t = 0; t < 6; ++t) {
    const ClassVec x = random_class(9, rng), y = random_class(9, rng), u = random_class(9, rng), v = random_class(9, rng);
    CHECK(m.eval({x + Rational(3) * y, u, v}) == m.eval({x, u, v}) + Rational(3) * m.eval({y, u, v}));
  }
}

TEST_CASE("product models") {
  auto [e1, a1] = build_torus(RatMatrix::identity(1));
  auto [prod, ap] = build_product(e1, a1, e1, a1);
  CHECK(prod.complex_dim() == 2);
  CHECK(prod.self_intersection(prod.kahler()) == Rational(2));
  CHECK(prod.labels() == std::vector<std::string>{"1:b11", "2:b11"});
  // On diagonal classes x·b₁₁ + y·b₂₂ of E² the product form agrees with the torus form.
  auto [e2, a2] = build_torus(RatMatrix::identity(2));
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<int> dist(-4, 4);
  for (int t = 0; t < 10; ++t) {
    const Rational x1(dist(rng)), y1(dist(rng)), x2(dist(rng)), y2(dist(rng));
    const ClassVec p1(std::vector<Rational>{x1, y1}), p2(std::vector<Rational>{x2, y2});
    const ClassVec t1 = x1 * torus_basis(2, 0, 0) + y1 * torus_basis(2, 1, 1);
    const ClassVec t2 = x2 * torus_basis(2, 0, 0) + y2 * torus_basis(2, 1, 1);
    CHECK(prod.eval({p1, p2}) == e2.eval({t1, t2}));
  }
  auto [pj, aj] = gallery_entry("product-j2xj2").build();
  CHECK(validate(pj, aj).passed());
  CHECK(pj.kind() == ModelKind::geometric);
}

TEST_CASE("Fujiki models") {
  const IntersectionModel m = build_fujiki(fujiki_lattice(), Rational(1), 1, ClassVec(std::vector<Rational>{1, 0, 1}));
  CHECK(m.complex_dim() == 2);
  CHECK(m.self_intersection(m.kahler()) == Rational(2));
  CHECK(m.labels() == std::vector<std::string>{"x1", "x2", "x3"});
  // Parabolic isometry: (F − I)²v = u ≠ 0, (F − I)³ = 0.
  const RatMatrix n = fujiki_parabolic() - RatMatrix::identity(3);
  CHECK(oracle::apply(n * n, ClassVec::basis(3, 2)) == ClassVec::basis(3, 0));
  CHECK((n * n * n).is_zero());
  CHECK(certify(fujiki_parabolic()).k == 2);
  CHECK(validate(m, AutoAction(fujiki_parabolic())).passed());
  CHECK(validate(m, AutoAction(fujiki_finite())).passed());
}

TEST_CASE("property: Fujiki relation I(x,…,x) = c·q(x)^{d'}") {
  std::mt19937_64 rng(36);
  const Rational c = Rational(3) / Rational(2);
  const ClassVec omega(std::vector<Rational>{1, 0, 1});
  for (int half = 1; half <= 3; ++half) {
    const IntersectionModel m = build_fujiki(fujiki_lattice(), c, half, omega);
    for (int t = 0; t < 6; ++t) {
      const ClassVec x = random_class(3, rng);
      Rational expected = c;
      for (int i = 0; i < half; ++i) expected *= oracle::bilinear(fujiki_lattice(), x, x);
      CHECK(m.self_intersection(x) == expected);
    }
  }
}

TEST_CASE("Fujiki builder rejects bad input") {
  const ClassVec omega(std::vector<Rational>{1, 0, 1});
  CHECK_THROWS_AS(build_fujiki(RatMatrix::identity(3), Rational(1), 1, omega), PreconditionError);
  CHECK_THROWS_AS(build_fujiki(fujiki_lattice(), Rational(0), 1, omega), PreconditionError);
  CHECK_THROWS_AS(build_fujiki(fujiki_lattice(), Rational(1), 1, ClassVec(std::vector<Rational>{0, 1, 0})),
                  PreconditionError);
  CHECK_THROWS_AS(build_fujiki(RatMatrix{{0, 1, 0}, {0, -1, 0}, {1, 0, 0}}, Rational(1), 1, omega), PreconditionError);
}

TEST_CASE("validate reports a corrupted tensor entry with a witness") {
  auto [torus, action] = build_torus(RatMatrix{{1, 0}, {1, 1}});
  SparseTensorForm form = export_sparse_torus(2);
  form.entries[{0, 3}] = Rational(3);  // b₁₁·b₂₂ changed from 1
  const IntersectionModel bad(2, torus.labels(), form, torus.kahler(), ModelKind::synthetic);
  const ValidationReport rep = validate(bad, action);
  CHECK_FALSE(rep.passed());
  const auto it = std::find_if(rep.checks.begin(), rep.checks.end(), [](const auto& c) { return c.name == "preserves-form"; });
  REQUIRE(it != rep.checks.end());
  CHECK_FALSE(it->passed);
  REQUIRE(it->witness.size() == 2);
  std::vector<ClassVec> args;
  for (int i : it->witness) args.push_back(bad.basis_class(i));
  std::vector<ClassVec> moved;
  for (const auto& c : args) moved.push_back(oracle::apply(action.matrix, c));
  CHECK(bad.eval(moved) != bad.eval(args));
}

TEST_CASE("validate passes on every gallery model") {
  for (const auto& e : gallery()) {
    auto [model, action] = e.build();
    CAPTURE(e.name);
    CHECK(validate(model, action).passed());
  }
}

TEST_CASE("torus_positivity: worked examples") {
  auto [model, action] = build_torus(RatMatrix{{1, 0}, {1, 1}});
  CHECK(torus_positivity(model, model.kahler()) == Positivity::positive);
  CHECK(torus_positivity(model, Rational(2) * torus_basis(2, 0, 0)) == Positivity::semidefinite);
  CHECK(torus_positivity(model, torus_basis(2, 0, 0) - torus_basis(2, 1, 1)) == Positivity::indefinite);
  CHECK_THROWS_AS(torus_positivity(model, torus_basis(2, 0, 1)), PreconditionError);
  auto [fm, fa] = gallery_entry("fujiki-parabolic-d1").build();
  CHECK_THROWS_AS(torus_positivity(fm, fm.kahler()), PreconditionError);
  CHECK(std::string(to_string(Positivity::semidefinite)) == "semidefinite");
  CHECK(torus_class(torus_coefficients(model, model.kahler())) == model.kahler());
}

TEST_CASE("property: I-preservation on random basis tuples for gallery actions") {
  std::mt19937_64 rng(37);
  for (const auto& e : gallery()) {
    auto [model, action] = e.build();
    if (model.h() > 16) continue;
    std::uniform_int_distribution<int> idx(0, model.h() - 1);
    for (int t = 0; t < 5; ++t) {
      std::vector<ClassVec> args, moved;
      for (int l = 0; l < model.complex_dim(); ++l) {
        args.push_back(model.basis_class(idx(rng)));
        moved.push_back(oracle::apply(action.matrix, args.back()));
      }
      CHECK(model.eval(moved) == model.eval(args));
    }
  }
}

TEST_CASE("property: nef monotonicity on torus models") {
  std::mt19937_64 rng(38);
  for (int d = 2; d <= 3; ++d) {
    auto [model, action] = build_torus(RatMatrix::identity(d));
    for (int t = 0; t < 10; ++t) {
      std::vector<ClassVec> small, large;
      for (int l = 0; l < d; ++l) {
        const RatMatrix base = random_psd(d, rng);
        small.push_back(torus_class(base));
        large.push_back(torus_class(base + random_psd(d, rng)));
      }
      CHECK(model.eval(large) >= model.eval(small));
      CHECK(model.eval(small) >= Rational(0));
    }
  }
}

TEST_CASE("with_kahler validates the new class") {
  auto [model, action] = build_torus(RatMatrix::identity(2));
  CHECK(model.with_kahler(Rational(2) * model.kahler()).self_intersection(Rational(2) * model.kahler()) == Rational(8));
  CHECK_THROWS_AS(model.with_kahler(torus_basis(2, 0, 0)), PreconditionError);
}
