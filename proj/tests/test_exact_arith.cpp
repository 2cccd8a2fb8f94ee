#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "plovlab/cyclotomic.hpp"
#include "plovlab/matrix.hpp"
#include "plovlab/poly.hpp"
#include "plovlab/rational.hpp"

using namespace plovlab;

namespace {

QPoly random_poly(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> dist(-6, 6);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.emplace_back(Rational(dist(rng)) / Rational(1 + (i % 3)));
  if (c.back().is_zero()) c.back() = Rational(1);
  return QPoly(c);
}

}  // namespace

TEST_CASE("rational stays in lowest terms with a positive denominator") {
  const Rational r(mpz_class(6), mpz_class(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(mpz_class(8), mpz_class(4)).to_string() == "2");
  CHECK(Rational::parse("10/-4") == Rational(mpz_class(-5), mpz_class(2)));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK_THROWS_AS(Rational::parse("1/0"), PreconditionError);
  CHECK_THROWS_AS(Rational::parse("one"), PreconditionError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational third = Rational(1) / Rational(3);
  CHECK(third + third + third == Rational(1));
  CHECK(Rational(2) / Rational(6) == third);
  CHECK(third * Rational(3) == Rational(1));
  CHECK(third < Rational(1) / Rational(2));
  mpz_class big = 1;
  for (int i = 0; i < 40; ++i) big *= 1000003;
  const Rational x(big, big + 1);
  CHECK((Rational(1) - x) * Rational(mpz_class(big + 1)) == Rational(1));
}

TEST_CASE("binomials and factorials") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("polynomial degree conventions and printing") {
  CHECK(QPoly().degree() == QPoly::kZeroDegree);
  CHECK(QPoly({0, 0}).is_zero());
  const QPoly p({1, -3, 1});
  CHECK(p.degree() == 2);
  CHECK(p.to_string("x") == "x^2 - 3*x + 1");
  CHECK(p(Rational(2)) == Rational(-1));
}

TEST_CASE("property: deg(p·q) = deg p + deg q") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    std::uniform_int_distribution<int> deg(0, 6);
    const QPoly a = random_poly(rng, deg(rng));
    const QPoly b = random_poly(rng, deg(rng));
    CHECK((a * b).degree() == a.degree() + b.degree());
  }
}

TEST_CASE("property: division with remainder reconstructs the dividend") {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 30; ++t) {
    const QPoly a = random_poly(rng, 7);
    const QPoly b = random_poly(rng, 3);
    const auto [q, r] = a.divmod(b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());
  }
}

TEST_CASE("binomial_poly matches integer binomials") {
  for (int m = 0; m <= 5; ++m) {
    for (int shift = -1; shift <= 2; ++shift) {
      const QPoly p = binomial_poly(m, shift);
      CHECK(p.degree() == m);
      for (long n = 0; n <= 8; ++n) {
        if (n + shift >= 0) CHECK(p(Rational(n)) == Rational(binomial(n + shift, m)));
      }
      // Polynomial extension below zero: C(−1, m) = (−1)^m.
      CHECK(p(Rational(-1 - shift)) == Rational(m % 2 == 0 ? 1 : -1));
    }
  }
}

TEST_CASE("interpolate: worked examples") {
  const std::vector<std::pair<long, Rational>> ones{{0, 1}, {1, 1}, {2, 1}};
  CHECK(interpolate(ones) == QPoly::constant(1));
  const std::vector<std::pair<long, Rational>> squares{{0, 0}, {1, 1}, {2, 4}, {3, 9}};
  CHECK(interpolate(squares) == QPoly::monomial(1, 2));
  // Vandermonde solve by hand: a + b·n + c·n² through (0,0),(1,1),(2,3) gives a = 0, b + c = 1,
  // 2b + 4c = 3, so b = c = 1/2.
  const std::vector<std::pair<long, Rational>> tri{{0, 0}, {1, 1}, {2, 3}};
  const Rational half = Rational(1) / Rational(2);
  CHECK(interpolate(tri) == QPoly({0, half, half}));
  const std::vector<std::pair<long, Rational>> dup{{1, 0}, {1, 2}};
  CHECK_THROWS_AS(interpolate(dup), PreconditionError);
  CHECK_THROWS_AS(interpolate(std::vector<std::pair<long, Rational>>{}), PreconditionError);
}

TEST_CASE("property: interpolate inverts evaluation") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 20; ++t) {
    const QPoly p = random_poly(rng, 6);
    std::vector<std::pair<long, Rational>> pts;
    for (long x = -3; x <= 5; ++x) pts.emplace_back(x, p(Rational(x)));
    CHECK(interpolate(pts) == p);
  }
}

TEST_CASE("char_poly: worked examples") {
  CHECK(char_poly(RatMatrix{{1, 1}, {0, 1}}) == QPoly({1, -2, 1}));
  CHECK(char_poly(RatMatrix::identity(3)) == QPoly({-1, 3, -3, 1}));
  CHECK(char_poly(RatMatrix{{2, 1}, {1, 1}}) == QPoly({1, -3, 1}));
  CHECK_THROWS_AS(char_poly(RatMatrix(2, 3)), DimensionError);
}

TEST_CASE("property: Cayley-Hamilton and det(xI - M) at sample points") {
  std::mt19937_64 rng(14);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + t % 5;
    const RatMatrix m = oracle::random_int_matrix(n, n, rng, -4, 4);
    const QPoly p = char_poly(m);
    CHECK(p.degree() == n);
    CHECK(p.is_monic());
    CHECK(eval_at(p, m).is_zero());
    for (int x = -2; x <= 2; ++x) {
      const RatMatrix shifted = Rational(x) * RatMatrix::identity(n) - m;
      CHECK(p(Rational(x)) == determinant(shifted));
    }
  }
}

TEST_CASE("rank_and_nullspace: worked examples") {
  const RankNullspace zero = rank_and_nullspace(RatMatrix(2, 2));
  CHECK(zero.rank == 0);
  CHECK(zero.kernel.size() == 2);
  for (int d = 1; d <= 4; ++d) {
    const RankNullspace id = rank_and_nullspace(RatMatrix::identity(d));
    CHECK(id.rank == d);
    CHECK(id.kernel.empty());
  }
  const RankNullspace ones = rank_and_nullspace(RatMatrix{{1, 1}, {1, 1}});
  CHECK(ones.rank == 1);
  REQUIRE(ones.kernel.size() == 1);
  CHECK(ones.kernel[0][0] == -ones.kernel[0][1]);
  CHECK(!ones.kernel[0][0].is_zero());
}

TEST_CASE("property: rank plus nullity equals columns, kernel vectors are annihilated") {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 30; ++t) {
    const int rows = 1 + t % 4;
    const int cols = 1 + (t / 4) % 5;
    RatMatrix m = oracle::random_int_matrix(rows, cols, rng, -2, 2);
    if (t % 3 == 0 && rows > 1) {
      for (int c = 0; c < cols; ++c) m(rows - 1, c) = m(0, c) * Rational(2);
    }
    const RankNullspace rn = rank_and_nullspace(m);
    CHECK(rn.rank + static_cast<int>(rn.kernel.size()) == cols);
    CHECK(rn.rank == oracle::plain_rank(m));
    for (const auto& v : rn.kernel) {
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
    }
  }
}

TEST_CASE("property: rank of powers is non-increasing and stabilizes") {
  std::mt19937_64 rng(16);
  for (int t = 0; t < 15; ++t) {
    RatMatrix m = oracle::random_int_matrix(4, 4, rng, -1, 1);
    int prev = rank(RatMatrix::identity(4));
    RatMatrix p = RatMatrix::identity(4);
    for (int k = 1; k <= 6; ++k) {
      p = p * m;
      const int r = rank(p);
      CHECK(r <= prev);
      prev = r;
    }
    CHECK(rank(p * m) == prev);
  }
}

TEST_CASE("determinant, inverse and inertia") {
  const RatMatrix a{{2, 1}, {1, 1}};
  CHECK(determinant(a) == Rational(1));
  CHECK(inverse(a) * a == RatMatrix::identity(2));
  CHECK_THROWS_AS(inverse(RatMatrix{{1, 2}, {2, 4}}), std::domain_error);
  const Inertia in = inertia(RatMatrix{{0, 0, 1}, {0, -1, 0}, {1, 0, 0}});
  CHECK(in.positive == 1);
  CHECK(in.negative == 2);
  CHECK(in.zero == 0);
  CHECK_THROWS_AS(inertia(RatMatrix{{1, 2}, {0, 1}}), PreconditionError);
  CHECK(kron(RatMatrix{{1, 2}}, RatMatrix{{1}, {3}}) == RatMatrix{{1, 2}, {3, 6}});
  CHECK(direct_sum(RatMatrix(0, 0), RatMatrix{{5}}) == RatMatrix{{5}});
}

TEST_CASE("cyclotomic_order: worked examples") {
  CHECK(cyclotomic_order(QPoly({-1, 1})) == 1L);
  CHECK(cyclotomic_order(QPoly({1, 0, 1})) == 4L);
  const QPoly golden({1, -3, 1});
  CHECK_FALSE(cyclotomic_order(golden).has_value());
  // Independent oracle: the discriminant 9 − 4 = 5 is positive, so both roots are real; a real root
  // of modulus one would be ±1, and golden(1) = −1, golden(−1) = 5 are both nonzero.
  CHECK(golden(Rational(1)) != Rational(0));
  CHECK(golden(Rational(-1)) != Rational(0));
  CHECK_THROWS_AS(cyclotomic_order(QPoly({1, 2})), PreconditionError);
  CHECK_THROWS_AS(cyclotomic_order(QPoly({Rational(1) / Rational(2), 1})), PreconditionError);
}

TEST_CASE("property: every Φ_k is recognized with its own index") {
  for (long k = 1; k <= 60; ++k) {
    const QPoly& phi = cyclotomic_poly(k);
    CHECK(phi.degree() == euler_phi(k));
    CHECK(cyclotomic_order(phi) == k);
  }
  CHECK(cyclotomic_search_bound(4) == 32);
}

TEST_CASE("property: x^n − 1 is the product of Φ_e over divisors e of n") {
  for (long n = 1; n <= 24; ++n) {
    QPoly prod = QPoly::constant(1);
    for (long e = 1; e <= n; ++e) {
      if (n % e == 0) prod = prod * cyclotomic_poly(e);
    }
    CHECK(prod == QPoly::monomial(1, static_cast<int>(n)) - QPoly::constant(1));
  }
}
