#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "plovlab/builders.hpp"
#include "plovlab/filtration.hpp"
#include "plovlab/gallery.hpp"
#include "plovlab/kernels.hpp"

using namespace plovlab;

namespace {

QuasiNefSeq user_seq(std::vector<ClassVec> classes) {
  QuasiNefSeq s;
  s.origin.assign(classes.size(), Origin::user);
  s.classes = std::move(classes);
  return s;
}

ClassVec b(int d, int i, int j) { return ClassVec::basis(static_cast<std::size_t>(d * d), static_cast<std::size_t>(i * d + j)); }

/// Rows I(L, b_a, γ…) over basis multisets γ, one row per basis index a; evaluated with model.eval.
RatMatrix pairing_matrix(const IntersectionModel& model, const std::vector<ClassVec>& prefix) {
  const int rest = model.complex_dim() - static_cast<int>(prefix.size()) - 1;
  const auto gammas = multisets(model.h(), rest);
  RatMatrix m(static_cast<int>(gammas.size()), model.h());
  for (std::size_t g = 0; g < gammas.size(); ++g) {
    for (int a = 0; a < model.h(); ++a) {
      std::vector<ClassVec> args = prefix;
      args.push_back(model.basis_class(a));
      for (int idx : gammas[g]) args.push_back(model.basis_class(idx));
      m(static_cast<int>(g), a) = model.eval(args);
    }
  }
  return m;
}

bool strictly_decreasing(const std::vector<int>& s) {
  for (std::size_t i = 1; i < s.size(); ++i) {
    if (s[i] >= s[i - 1]) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("E² Jordan with (N²ω, ω)") {
  auto [model, action] = build_torus(jordan_block(2));
  const QuasiNefSeq seq = user_seq({Rational(2) * b(2, 0, 0), model.kahler()});
  const VerificationReport ver = verify_quasi_nef(model, action, seq);
  CHECK(ver.passed);
  CHECK(ver.nef_status == "semidefinite-proxy");
  // L₁ = 2b₁₁ pairs to 2 with ω.
  CHECK(model.eval({Rational(2) * b(2, 0, 0), model.kahler()}) == Rational(2));

  const FiltrationData f = filtration_spaces(model, action, seq);
  REQUIRE(f.f.size() == 3);
  CHECK(subspace_dim(f.f[0]) == 0);
  CHECK(subspace_dim(f.f[1]) == 3);
  for (const auto& v : {b(2, 0, 0), b(2, 0, 1), b(2, 1, 0)}) CHECK(subspace_contains(f.f[1], v));
  CHECK_FALSE(subspace_contains(f.f[1], b(2, 1, 1)));
  CHECK(subspace_dim(f.fp[0]) == 1);
  CHECK(subspace_contains(f.fp[0], b(2, 0, 0)));
  // Jump criterion at i = 1: I(b₁₁, b₁₁) = 0.
  CHECK(model.eval({b(2, 0, 0), b(2, 0, 0)}).is_zero());
  CHECK(f.s_sequence == std::vector<int>{1});
  CHECK(f.r == 1);
  CHECK(f.k == 2);
  CHECK(f.k_matches());
}

TEST_CASE("a non-invariant first class is reported with a witness") {
  auto [model, action] = build_torus(jordan_block(2));
  const QuasiNefSeq seq = user_seq({b(2, 1, 1), model.kahler()});
  const VerificationReport ver = verify_quasi_nef(model, action, seq);
  CHECK_FALSE(ver.passed);
  REQUIRE(!ver.prefixes.empty());
  const PrefixCheck& p = ver.prefixes.front();
  CHECK_FALSE(p.invariant);
  REQUIRE(p.invariance_witness.size() == 1);
  // Direct pairing mismatch on the witness.
  const ClassVec gamma = model.basis_class(p.invariance_witness[0]);
  const ClassVec m1 = seq.classes[0];
  CHECK(model.eval({oracle::apply(action.matrix, m1), gamma}) != model.eval({m1, gamma}));
  CHECK_THROWS_AS(filtration_spaces(model, action, seq), PreconditionError);
}

TEST_CASE("identity action with Mᵢ = ω") {
  auto [model, action] = build_torus(RatMatrix::identity(3));
  const QuasiNefSeq seq = user_seq({model.kahler(), model.kahler(), model.kahler()});
  CHECK(verify_quasi_nef(model, action, seq).passed);
  const FiltrationData f = filtration_spaces(model, action, seq);
  CHECK(f.r == 0);
  CHECK(f.s_sequence.empty());
  CHECK(f.chain_ok);
  CHECK(f.equal_prefix_ok);
  CHECK(canonical_candidates(model, action).empty());
  const DiagnosticsReport diag = vanishing_diagnostics(model, action);
  CHECK(diag.passed());
}

TEST_CASE("canonical candidates") {
  auto [e2, a2] = build_torus(jordan_block(2));
  const auto c2 = canonical_candidates(e2, a2);
  REQUIRE(!c2.empty());
  CHECK(c2.front().tag == "N^2ω");
  CHECK(c2.front().value == Rational(2) * b(2, 0, 0));
  CHECK(c2.front().invariant);
  CHECK(c2.front().positivity == Positivity::semidefinite);

  auto [e3, a3] = build_torus(jordan_block(3));
  const auto c3 = canonical_candidates(e3, a3);
  const auto n4 = std::find_if(c3.begin(), c3.end(), [](const Candidate& c) { return c.tag == "N^4ω"; });
  REQUIRE(n4 != c3.end());
  CHECK(n4->invariant);
  CHECK(n4->positivity == Positivity::semidefinite);
  CHECK(oracle::apply(a3.matrix, n4->value) == n4->value);
}

TEST_CASE("E³ Jordan canonical filtration") {
  auto [model, action] = build_torus(jordan_block(3));
  const QuasiNefSeq seq = canonical_sequence(model, action);
  CHECK(seq.classes.size() == 3);
  const VerificationReport ver = verify_quasi_nef(model, action, seq);
  CHECK(ver.passed);
  const FiltrationData f = filtration_spaces(model, action, seq);
  CHECK(f.chain_ok);
  CHECK(f.k == 4);
  CHECK(f.r == 2);
  CHECK(f.k_matches());
  CHECK(strictly_decreasing(f.s_sequence));
  CHECK(f.s_sequence == f.s_sequence_inverse);
  for (int i = 1; i <= 3; ++i) {
    const int jump = subspace_dim(f.fp[static_cast<std::size_t>(i - 1)]) - subspace_dim(f.f[static_cast<std::size_t>(i - 1)]);
    CHECK(jump >= 0);
    CHECK(jump <= 1);
  }
}

TEST_CASE("property: F_i is the annihilator of L_i computed from direct pairings") {
  for (const char* name : {"torus-jordan-d2", "torus-jordan-d3", "torus-j21", "fujiki-parabolic-d1", "identity-d3"}) {
    CAPTURE(name);
    auto [model, action] = gallery_entry(name).build();
    const QuasiNefSeq seq = canonical_sequence(model, action);
    const FiltrationData f = filtration_spaces(model, action, seq);
    for (int i = 1; i < model.complex_dim(); ++i) {
      const std::vector<ClassVec> prefix(seq.classes.begin(), seq.classes.begin() + i);
      const RatMatrix pm = pairing_matrix(model, prefix);
      CHECK(subspace_dim(f.f[static_cast<std::size_t>(i)]) == model.h() - oracle::plain_rank(pm));
      for (const auto& v : f.f[static_cast<std::size_t>(i)]) {
        for (const auto& x : pm.apply(v.coords())) CHECK(x.is_zero());
      }
    }
    CHECK(subspace_dim(f.f.back()) == model.h());
  }
}

TEST_CASE("property: filtration invariants on every gallery model") {
  for (const auto& e : gallery()) {
    auto [model, action] = e.build();
    if (model.h() > 16) continue;
    CAPTURE(e.name);
    const QuasiNefSeq seq = canonical_sequence(model, action);
    const VerificationReport ver = verify_quasi_nef(model, action, seq);
    REQUIRE(ver.passed);
    const FiltrationData f = filtration_spaces(model, action, seq);
    CHECK(f.chain_ok);
    CHECK(f.equal_prefix_ok);
    CHECK(f.vanprod_ok);
    CHECK(strictly_decreasing(f.s_sequence));
    CHECK(f.s_sequence == f.s_sequence_inverse);
    for (int s : f.s_sequence) {
      CHECK(s >= 1);
      CHECK(s <= model.complex_dim() - 1);
    }
    if (!model.is_product() && f.k > 0) CHECK(f.k_matches());
    for (std::size_t i = 0; i < f.fp.size(); ++i) {
      for (const auto& v : f.f[i]) CHECK(subspace_contains(f.fp[i], v));
      for (const auto& v : f.fp[i]) CHECK(subspace_contains(f.f[i + 1], v));
    }
  }
}

TEST_CASE("equal prefixes give F'_j = F_{j−1}") {
  auto [model, action] = build_torus(jordan_matrix({2, 1, 1}));
  // Invariant semidefinite classes diag(0,0,1,1) and diag(1,0,1,1) in coefficient form.
  RatMatrix cx(4, 4);
  cx(2, 2) = 1;
  cx(3, 3) = 1;
  RatMatrix cy = cx;
  cy(0, 0) = 1;
  const ClassVec x = torus_class(cx);
  const ClassVec y = torus_class(cy);
  CHECK(oracle::apply(action.matrix, x) == x);
  CHECK(oracle::apply(action.matrix, y) == y);
  const QuasiNefSeq seq = user_seq({x, x, y, model.kahler()});
  REQUIRE(verify_quasi_nef(model, action, seq).passed);
  const FiltrationData f = filtration_spaces(model, action, seq);
  CHECK(f.equal_prefix_ok);
  CHECK(f.chain_ok);
  CHECK(subspace_dim(f.fp[0]) == subspace_dim(f.f[0]));
  for (const auto& v : f.fp[0]) CHECK(subspace_contains(f.f[0], v));
}

TEST_CASE("vanishing diagnostics") {
  auto [e3, a3] = build_torus(jordan_block(3));
  const DiagnosticsReport r3 = vanishing_diagnostics(e3, a3);
  CHECK(r3.passed());
  const auto kk1 = std::count_if(r3.items.begin(), r3.items.end(),
                                 [](const Diagnostic& d) { return d.tag == "vanish-kk1" && d.applicable; });
  CHECK(kk1 > 0);
  // Direct check of one instance: N₄(ω)·N₃(ω) ≡ 0 on E³ (2i + 2j = 4 > 2).
  const auto cand = canonical_candidates(e3, a3);
  const auto nk = std::find_if(cand.begin(), cand.end(), [](const Candidate& c) { return c.tag == "N_4ω"; });
  const auto nk1 = std::find_if(cand.begin(), cand.end(), [](const Candidate& c) { return c.tag == "N_3ω"; });
  REQUIRE(nk != cand.end());
  REQUIRE(nk1 != cand.end());
  for (int g = 0; g < 9; ++g) CHECK(e3.eval({nk->value, nk1->value, e3.basis_class(g)}).is_zero());

  auto [e4, a4] = gallery_entry("torus-j211").build();
  const DiagnosticsReport r4 = vanishing_diagnostics(e4, a4);
  CHECK(r4.passed());
  const auto n2 = std::find_if(r4.items.begin(), r4.items.end(), [](const Diagnostic& d) { return d.tag == "vanish-n2"; });
  REQUIRE(n2 != r4.items.end());
  CHECK(n2->applicable);
  CHECK(n2->passed);
  // (N²ω)³ paired with every basis class vanishes.
  const UnipotentCert cert = certify(a4.matrix);
  const ClassVec n2w = cert.nilpotent * (cert.nilpotent * e4.kahler());
  for (int g = 0; g < 16; ++g) CHECK(e4.eval({n2w, n2w, n2w, e4.basis_class(g)}).is_zero());

  for (const char* name : {"torus-jordan-d2", "fujiki-parabolic-d1", "fujiki-parabolic-d2", "torus-j22"}) {
    CAPTURE(name);
    auto [m, a] = gallery_entry(name).build();
    CHECK(vanishing_diagnostics(m, a).passed());
  }
}
