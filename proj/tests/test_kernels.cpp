#include <doctest.h>

#include <random>

#include "plovlab/builders.hpp"
#include "plovlab/gallery.hpp"
#include "plovlab/growth.hpp"
#include "plovlab/kernels.hpp"

using namespace plovlab;

TEST_CASE("multisets enumerate sorted tuples in lexicographic order") {
  const auto ms = multisets(3, 2);
  CHECK(ms == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {0, 2}, {1, 1}, {1, 2}, {2, 2}});
  for (int n = 1; n <= 5; ++n) {
    for (int s = 0; s <= 4; ++s) CHECK(static_cast<long>(multisets(n, s).size()) == binomial(n + s - 1, s));
  }
  CHECK(multinomial_weight({0, 0, 1}) == 3);
  CHECK(multinomial_weight({0, 1, 2}) == 6);
  CHECK(multinomial_weight({}) == 1);
}

TEST_CASE("serial, parallel and reference expansions agree") {
  for (const char* name : {"torus-jordan-d2", "torus-jordan-d3", "torus-j21", "fujiki-parabolic-d1", "product-j2xj2"}) {
    CAPTURE(name);
    auto [model, action] = gallery_entry(name).build();
    const UnipotentCert cert = certify(action.matrix);
    const DeltaPoly dp = delta_poly(cert.nilpotent, model.kahler());
    const auto coeffs = dp.coefficients();
    const int d = model.complex_dim();
    const QPoly serial = expand_power(model, coeffs, dp.terms, d, {}, Exec::serial);
    const QPoly parallel = expand_power(model, coeffs, dp.terms, d, {}, Exec::parallel);
    CHECK(serial == parallel);
    if (d <= 3) CHECK(serial == expand_power_reference(model, coeffs, dp.terms, d, {}));
    const std::vector<ClassVec> fixed{model.kahler()};
    const QPoly partial_s = expand_power(model, coeffs, dp.terms, d - 1, fixed, Exec::serial);
    CHECK(partial_s == expand_power(model, coeffs, dp.terms, d - 1, fixed, Exec::parallel));
    CHECK(partial_s == expand_power_reference(model, coeffs, dp.terms, d - 1, fixed));
  }
}

TEST_CASE("pairing sweeps agree across execution policies") {
  std::mt19937_64 rng(41);
  for (const char* name : {"torus-jordan-d3", "torus-j31", "fujiki-parabolic-d2"}) {
    CAPTURE(name);
    auto [model, action] = gallery_entry(name).build();
    const UnipotentCert cert = certify(action.matrix);
    std::vector<ClassVec> prefix{cert.nilpotent * model.kahler()};
    CHECK(pairing_vector(model, prefix, Exec::serial) == pairing_vector(model, prefix, Exec::parallel));
    CHECK(find_nonzero_pairing(model, prefix, Exec::serial) == find_nonzero_pairing(model, prefix, Exec::parallel));
    CHECK(find_invariance_failure(model, action.matrix, prefix, Exec::serial) ==
          find_invariance_failure(model, action.matrix, prefix, Exec::parallel));
    std::vector<ClassVec> vs;
    std::uniform_int_distribution<int> dist(-2, 2);
    for (int t = 0; t < 7; ++t) {
      ClassVec c(static_cast<std::size_t>(model.h()));
      for (std::size_t i = 0; i < c.size(); ++i) c[i] = Rational(dist(rng));
      vs.push_back(c);
    }
    const auto si = self_intersections(model, vs, Exec::serial);
    CHECK(si == self_intersections(model, vs, Exec::parallel));
    for (std::size_t i = 0; i < vs.size(); ++i) CHECK(si[i] == model.self_intersection(vs[i]));
  }
}

TEST_CASE("numerical triviality and the first nonzero pairing") {
  auto [model, action] = build_torus(jordan_block(2));
  const ClassVec n2 = Rational(2) * model.basis_class(0);
  const std::vector<ClassVec> sq{n2, n2};
  CHECK(numerically_trivial(model, sq));
  const std::vector<ClassVec> one{n2};
  const auto w = find_nonzero_pairing(model, one);
  REQUIRE(w.has_value());
  CHECK(*w == std::vector<int>{3});  // I(2b₁₁, b₂₂) = 2
  const auto pv = pairing_vector(model, one);
  CHECK(pv.size() == 4);
  CHECK(pv[3] == Rational(2));
}

TEST_CASE("preservation sweep finds the planted failure and respects the cap") {
  auto [model, action] = build_torus(jordan_block(3));
  const auto [ok, checked] = find_preservation_failure(model, action.matrix, 1000000);
  CHECK_FALSE(ok.has_value());
  CHECK(checked == binomial(9 + 3 - 1, 3));
  const auto [ok2, checked2] = find_preservation_failure(model, action.matrix, 50);
  CHECK_FALSE(ok2.has_value());
  CHECK(checked2 <= 50);
  RatMatrix bad = action.matrix;
  bad(0, 0) = Rational(2);
  CHECK(find_preservation_failure(model, bad, 1000000, Exec::serial).first ==
        find_preservation_failure(model, bad, 1000000, Exec::parallel).first);
  CHECK(find_preservation_failure(model, bad, 1000000).first.has_value());
}
