#include "plovlab/filtration.hpp"

#include <algorithm>
#include <set>

#include "plovlab/growth.hpp"

namespace plovlab {

const char* to_string(Origin p) { return p == Origin::user ? "user" : "canonical"; }

namespace {

struct Unipotent {
  UnipotentCert cert;
  RatMatrix g;
  RatMatrix n_inv;
};

Unipotent unipotent_of(const IntersectionModel& model, const AutoAction& action) {
  Unipotent u{reduce(model, action), {}, {}};
  const RatMatrix id = RatMatrix::identity(model.h());
  u.g = id + u.cert.nilpotent;
  u.n_inv = inverse(u.g) - id;
  return u;
}

std::string power_tag(const char* op, int p) { return std::string(op) + std::to_string(p) + "ω"; }

std::optional<Positivity> proxy_positivity(const IntersectionModel& model, const ClassVec& c) {
  if (!model.is_torus()) return std::nullopt;
  try {
    return torus_positivity(model, c);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
}

RatMatrix rows_matrix(const std::vector<ClassVec>& rows, int cols) {
  RatMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < cols; ++c) m(static_cast<int>(r), c) = rows[r][static_cast<std::size_t>(c)];
  return m;
}

Subspace basis_of(const IntersectionModel& model, const std::vector<ClassVec>& vectors) {
  // Row-reduce the spanning set and keep an independent subset, in input order.
  Subspace out;
  int current = 0;
  for (const auto& v : vectors) {
    out.push_back(v);
    int r = rank(rows_matrix(out, model.h()));
    if (r == current) {
      out.pop_back();
    } else {
      current = r;
    }
  }
  return out;
}

Subspace nullspace_space(const IntersectionModel& model, std::span<const ClassVec> prefix, Exec exec) {
  const int h = model.h();
  std::vector<std::vector<Rational>> columns;
  for (int a = 0; a < h; ++a) {
    std::vector<ClassVec> args(prefix.begin(), prefix.end());
    args.push_back(model.basis_class(a));
    columns.push_back(pairing_vector(model, args, exec));
  }
  std::set<std::vector<Rational>> rows;
  const std::size_t count = columns.empty() ? 0 : columns.front().size();
  for (std::size_t g = 0; g < count; ++g) {
    std::vector<Rational> row(static_cast<std::size_t>(h));
    bool zero = true;
    for (int a = 0; a < h; ++a) {
      row[static_cast<std::size_t>(a)] = columns[static_cast<std::size_t>(a)][g];
      zero = zero && row[static_cast<std::size_t>(a)].is_zero();
    }
    if (!zero) rows.insert(std::move(row));
  }
  RatMatrix m(static_cast<int>(rows.size()), h);
  int r = 0;
  for (const auto& row : rows) {
    for (int a = 0; a < h; ++a) m(r, a) = row[static_cast<std::size_t>(a)];
    ++r;
  }
  Subspace out;
  if (rows.empty()) {
    for (int a = 0; a < h; ++a) out.push_back(model.basis_class(a));
    return out;
  }
  for (auto& v : rank_and_nullspace(m).kernel) out.emplace_back(std::move(v));
  return out;
}

bool contains_all(const Subspace& big, const Subspace& small) {
  for (const auto& v : small) {
    if (!subspace_contains(big, v)) return false;
  }
  return true;
}

int level(const std::vector<Subspace>& f, const ClassVec& v) {
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (subspace_contains(f[i], v)) return static_cast<int>(i);
  }
  return static_cast<int>(f.size());
}

std::vector<int> s_sequence_for(const RatMatrix& n, const ClassVec& omega, const std::vector<Subspace>& f,
                                const std::vector<Subspace>& fp, int d, const std::string& op) {
  std::vector<int> s;
  ClassVec odd = n * omega;
  for (int j = 1; !odd.is_zero(); ++j) {
    const ClassVec even = n * odd;
    const int p_odd = 2 * j - 1;
    const int p_even = 2 * j;
    const int lev = level(f, odd);
    auto fail = [&](int power, const std::string& what) {
      throw IntegrityError("filtration integrity: " + power_tag(op.c_str(), power) + " " + what +
                           " (power " + std::to_string(power) + ", index " + std::to_string(lev) + ")");
    };
    if (lev < 1 || lev > d - 1) fail(p_odd, "lies in F_" + std::to_string(lev) + ", outside [1, d−1]");
    if (subspace_contains(fp[static_cast<std::size_t>(lev - 1)], odd)) fail(p_odd, "∈ F'_" + std::to_string(lev));
    if (!subspace_contains(fp[static_cast<std::size_t>(lev - 1)], even)) {
      fail(p_even, "∉ F'_" + std::to_string(lev));
    }
    if (subspace_contains(f[static_cast<std::size_t>(lev - 1)], even)) {
      fail(p_even, "∈ F_" + std::to_string(lev - 1));
    }
    if (!s.empty() && lev >= s.back()) fail(p_odd, "breaks the strict decrease of the s-sequence");
    s.push_back(lev);
    odd = n * even;
  }
  return s;
}

ClassVec sum_of(const IntersectionModel& model, const Subspace& basis) {
  ClassVec out = model.zero_class();
  for (const auto& v : basis) out += v;
  return out;
}

bool proportional(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  std::size_t t = 0;
  while (t < b.size() && b[t].is_zero()) ++t;
  if (t == b.size()) return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
  const Rational c = a[t] / b[t];
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != c * b[i]) return false;
  }
  return true;
}

bool vanprod_holds(const IntersectionModel& model, const QuasiNefSeq& seq, const FiltrationData& data, Exec exec) {
  const int d = model.complex_dim();
  std::vector<ClassVec> eta;
  for (const auto& sp : data.fp) eta.push_back(sum_of(model, sp));
  for (int p = 1; p <= d; ++p) {
    std::vector<ClassVec> lp(seq.classes.begin(), seq.classes.begin() + p);
    const auto target = pairing_vector(model, lp, exec);
    const ClassVec eta_f = sum_of(model, data.f[static_cast<std::size_t>(p)]);
    for (int j = 1; j <= p; ++j) {
      std::vector<ClassVec> prod(seq.classes.begin(), seq.classes.begin() + j);
      for (int t = j + 1; t <= p; ++t) prod.push_back(eta[static_cast<std::size_t>(t - 1)]);
      if (!proportional(pairing_vector(model, prod, exec), target)) return false;
      if (p < d) {
        prod.push_back(eta_f);
        if (!numerically_trivial(model, prod, exec)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool subspace_contains(const Subspace& basis, const ClassVec& v) {
  if (v.is_zero()) return true;
  if (basis.empty()) return false;
  const int cols = static_cast<int>(v.size());
  std::vector<ClassVec> rows = basis;
  const int r = rank(rows_matrix(rows, cols));
  rows.push_back(v);
  return rank(rows_matrix(rows, cols)) == r;
}

int subspace_dim(const Subspace& basis) {
  if (basis.empty()) return 0;
  return rank(rows_matrix(basis, static_cast<int>(basis.front().size())));
}

std::vector<Candidate> canonical_candidates(const IntersectionModel& model, const AutoAction& action) {
  const Unipotent u = unipotent_of(model, action);
  const int k = u.cert.k;
  std::vector<Candidate> out;
  if (k == 0) return out;
  const RatMatrix& n = u.cert.nilpotent;
  std::vector<ClassVec> pw{model.kahler()};
  std::vector<ClassVec> pw_inv{model.kahler()};
  for (int p = 1; p <= k; ++p) {
    pw.push_back(n * pw.back());
    pw_inv.push_back(u.n_inv * pw_inv.back());
  }
  auto add = [&](ClassVec c, std::string tag) {
    Candidate cand;
    cand.invariant = u.g * c == c;
    cand.positivity = proxy_positivity(model, c);
    cand.value = std::move(c);
    cand.tag = std::move(tag);
    out.push_back(std::move(cand));
  };
  for (int p = 2; p < k; p += 2) add(pw[static_cast<std::size_t>(p)], power_tag("N^", p));
  add(pw[static_cast<std::size_t>(k)], power_tag("N^", k));
  add(pw[static_cast<std::size_t>(k)] + pw_inv[static_cast<std::size_t>(k)], power_tag("N_", k));
  add(pw[static_cast<std::size_t>(k - 1)] + pw_inv[static_cast<std::size_t>(k - 1)], power_tag("N_", k - 1));
  return out;
}

QuasiNefSeq canonical_sequence(const IntersectionModel& model, const AutoAction& action) {
  const Unipotent u = unipotent_of(model, action);
  const DeltaPoly dp = delta_poly(u.cert.nilpotent, model.kahler());
  QuasiNefSeq seq;
  for (int i = 0; i < model.complex_dim(); ++i) {
    bool found = false;
    for (int p = dp.top(); p >= 0 && !found; --p) {
      std::vector<ClassVec> prefix = seq.classes;
      prefix.push_back(dp.terms[static_cast<std::size_t>(p)]);
      if (!numerically_trivial(model, prefix)) {
        seq.classes.push_back(dp.terms[static_cast<std::size_t>(p)]);
        seq.origin.push_back(Origin::canonical);
        found = true;
      }
    }
    if (!found) {
      throw PreconditionError("no class N^p ω extends L_" + std::to_string(i) + " to a nonzero product");
    }
  }
  return seq;
}

VerificationReport verify_quasi_nef(const IntersectionModel& model, const AutoAction& action, const QuasiNefSeq& seq,
                                    Exec exec) {
  const int d = model.complex_dim();
  if (static_cast<int>(seq.classes.size()) != d) {
    throw DimensionError("quasi-nef sequence needs " + std::to_string(d) + " classes");
  }
  const Unipotent u = unipotent_of(model, action);
  VerificationReport rep;
  rep.passed = true;
  bool proxy_ok = true;
  for (int i = 1; i <= d; ++i) {
    std::span<const ClassVec> prefix(seq.classes.data(), static_cast<std::size_t>(i));
    PrefixCheck pc;
    pc.index = i;
    if (auto w = find_nonzero_pairing(model, prefix, exec)) {
      pc.nonzero = true;
      pc.nonzero_witness = *w;
    }
    if (auto w = find_invariance_failure(model, u.g, prefix, exec)) {
      pc.invariance_witness = *w;
    } else {
      pc.invariant = true;
    }
    pc.positivity = proxy_positivity(model, seq.classes[static_cast<std::size_t>(i - 1)]);
    if (model.is_torus() && (!pc.positivity || *pc.positivity == Positivity::indefinite)) proxy_ok = false;
    rep.passed = rep.passed && pc.nonzero && pc.invariant;
    rep.prefixes.push_back(std::move(pc));
  }
  if (!model.is_torus()) {
    rep.nef_status = "assumed";
  } else {
    rep.nef_status = proxy_ok ? "semidefinite-proxy" : "unverified";
  }
  rep.note = "invariance of L_i checked up to numerical equivalence under the unipotent reduction G = F^M";
  return rep;
}

FiltrationData filtration_spaces(const IntersectionModel& model, const AutoAction& action, const QuasiNefSeq& seq,
                                 Exec exec) {
  const VerificationReport ver = verify_quasi_nef(model, action, seq, exec);
  if (!ver.passed) throw PreconditionError("quasi-nef sequence does not verify");
  const Unipotent u = unipotent_of(model, action);
  const int d = model.complex_dim();
  FiltrationData data;
  data.k = u.cert.k;

  for (int i = 0; i < d; ++i) {
    std::span<const ClassVec> prefix(seq.classes.data(), static_cast<std::size_t>(i));
    data.f.push_back(nullspace_space(model, prefix, exec));
  }
  Subspace all;
  for (int a = 0; a < model.h(); ++a) all.push_back(model.basis_class(a));
  data.f.push_back(std::move(all));

  for (int i = 1; i <= d; ++i) {
    const ClassVec& mi = seq.classes[static_cast<std::size_t>(i - 1)];
    bool jump = true;  // L_{d−1} M_d² has degree d + 1 and vanishes
    if (i < d) {
      std::vector<ClassVec> prefix(seq.classes.begin(), seq.classes.begin() + (i - 1));
      prefix.push_back(mi);
      prefix.push_back(mi);
      jump = numerically_trivial(model, prefix, exec);
    }
    Subspace fpi = data.f[static_cast<std::size_t>(i - 1)];
    if (jump) {
      fpi.push_back(mi);
      fpi = basis_of(model, fpi);
    }
    data.jumps.push_back(jump);
    data.fp.push_back(std::move(fpi));
  }

  data.chain_ok = true;
  for (int i = 1; i <= d; ++i) {
    const Subspace& prev = data.f[static_cast<std::size_t>(i - 1)];
    const Subspace& mid = data.fp[static_cast<std::size_t>(i - 1)];
    const Subspace& cur = data.f[static_cast<std::size_t>(i)];
    const int gap = subspace_dim(mid) - subspace_dim(prev);
    if (!contains_all(mid, prev) || !contains_all(cur, mid) || gap < 0 || gap > 1) data.chain_ok = false;
  }

  data.s_sequence = s_sequence_for(u.cert.nilpotent, model.kahler(), data.f, data.fp, d, "N^");
  data.s_sequence_inverse = s_sequence_for(u.n_inv, model.kahler(), data.f, data.fp, d, "N'^");
  if (data.s_sequence != data.s_sequence_inverse) {
    throw IntegrityError("filtration integrity: s-sequences of F and F⁻¹ differ");
  }
  data.r = static_cast<int>(data.s_sequence.size());

  int m = 1;
  while (m < d && seq.classes[static_cast<std::size_t>(m)] == seq.classes.front()) ++m;
  for (int j = 1; j <= m - 1; ++j) {
    if (data.jumps[static_cast<std::size_t>(j - 1)]) data.equal_prefix_ok = false;
  }

  data.vanprod_ok = vanprod_holds(model, seq, data, exec);
  return data;
}

bool DiagnosticsReport::passed() const {
  return std::all_of(items.begin(), items.end(), [](const Diagnostic& x) { return !x.applicable || x.passed; });
}

DiagnosticsReport vanishing_diagnostics(const IntersectionModel& model, const AutoAction& action, Exec exec) {
  const Unipotent u = unipotent_of(model, action);
  const int d = model.complex_dim();
  const int k = u.cert.k;
  DiagnosticsReport rep;
  rep.kind = model.kind();

  if (k == 0) {
    rep.items.push_back({"vanish-kk1", "k = 0: no N_k, N_{k−1} products", false, true});
    rep.items.push_back({"vanish-n2", "k = 0", false, true});
    rep.items.push_back({"equiv-sigma", "k = 0", false, true});
    return rep;
  }
  const RatMatrix& n = u.cert.nilpotent;
  std::vector<ClassVec> pw{model.kahler()};
  std::vector<ClassVec> pw_inv{model.kahler()};
  for (int p = 1; p <= k; ++p) {
    pw.push_back(n * pw.back());
    pw_inv.push_back(u.n_inv * pw_inv.back());
  }
  const ClassVec nk_plain = pw[static_cast<std::size_t>(k)];
  const ClassVec nk = nk_plain + pw_inv[static_cast<std::size_t>(k)];
  const ClassVec nk1 = pw[static_cast<std::size_t>(k - 1)] + pw_inv[static_cast<std::size_t>(k - 1)];

  for (int i = 0; i <= d; ++i) {
    for (int j = 0; i + j <= d; ++j) {
      if (i + j == 0 || 2 * i + 2 * j <= 2 * d - k) continue;
      std::vector<ClassVec> prefix(static_cast<std::size_t>(i), nk);
      prefix.insert(prefix.end(), static_cast<std::size_t>(j), nk1);
      Diagnostic item;
      item.tag = "vanish-kk1";
      item.statement = "N_" + std::to_string(k) + "(ω)^" + std::to_string(i) + " N_" + std::to_string(k - 1) + "(ω)^" +
                       std::to_string(j) + " ≡ 0 since 2i+2j = " + std::to_string(2 * i + 2 * j) + " > 2d−k = " +
                       std::to_string(2 * d - k);
      item.passed = numerically_trivial(model, prefix, exec);
      rep.items.push_back(std::move(item));
    }
  }

  Diagnostic n2;
  n2.tag = "vanish-n2";
  if (k == 2 && d >= 3) {
    std::vector<ClassVec> prefix(static_cast<std::size_t>(d - 1), pw[2]);
    n2.statement = "(N²ω)^" + std::to_string(d - 1) + " ≡ 0";
    n2.passed = numerically_trivial(model, prefix, exec);
  } else {
    n2.applicable = false;
    n2.statement = "needs k = 2 and d ≥ 3";
  }
  rep.items.push_back(std::move(n2));

  int m = 0;
  while (m < d) {
    std::vector<ClassVec> prefix(static_cast<std::size_t>(m + 1), nk_plain);
    if (numerically_trivial(model, prefix, exec)) break;
    ++m;
  }
  const std::vector<ClassVec> sigma{nk_plain, nk, nk1};
  Diagnostic eq;
  eq.tag = "equiv-sigma";
  eq.statement = "products of " + std::to_string(m) + " classes from {N^kω, N_kω, N_{k−1}ω} are ≢ 0";
  for (const auto& ms : multisets(3, m)) {
    std::vector<ClassVec> prefix;
    for (int t : ms) prefix.push_back(sigma[static_cast<std::size_t>(t)]);
    if (numerically_trivial(model, prefix, exec)) eq.passed = false;
  }
  if (m + 1 <= d) {
    eq.statement += " and of " + std::to_string(m + 1) + " are ≡ 0";
    for (const auto& ms : multisets(3, m + 1)) {
      std::vector<ClassVec> prefix;
      for (int t : ms) prefix.push_back(sigma[static_cast<std::size_t>(t)]);
      if (!numerically_trivial(model, prefix, exec)) eq.passed = false;
    }
  }
  rep.items.push_back(std::move(eq));
  return rep;
}

}  // namespace plovlab
