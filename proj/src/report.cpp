#include "plovlab/report.hpp"

#include <sstream>

namespace plovlab {

ordered_json to_json(const Rational& r) { return r.to_string(); }

ordered_json to_json(const QPoly& p) {
  ordered_json out = ordered_json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.to_string());
  return out;
}

ordered_json to_json(const ClassVec& c) {
  ordered_json out = ordered_json::array();
  for (const auto& x : c.coords()) out.push_back(x.to_string());
  return out;
}

ordered_json to_json(const Subspace& s) {
  ordered_json out = ordered_json::array();
  for (const auto& v : s) out.push_back(to_json(v));
  return out;
}

ordered_json to_json(const UnipotentCert& cert, bool include_k) {
  ordered_json out;
  out["order_m"] = cert.order_m;
  if (include_k) {
    out["k"] = cert.k;
    out["k_even"] = cert.k_even();
  }
  out["jordan_partition"] = cert.jordan_partition;
  out["rank_sequence"] = cert.rank_sequence;
  return out;
}

ordered_json to_json(const GrowthReport& g) {
  ordered_json out;
  out["order_m"] = g.order_m;
  out["P"] = g.p.to_string();
  out["P_coefficients"] = to_json(g.p);
  out["P_leading"] = g.p.leading().to_string();
  out["partial_degrees"] = g.partial_degrees;
  out["primed_degrees"] = g.primed_degrees;
  out["ladder_strict"] = g.ladder_strict();
  out["primed_ladder_strict"] = g.primed_ladder_strict();
  out["plov_two_sided"] = g.plov_two_sided;
  out["d_pol"] = g.d_pol;
  out["d_pol_bound"] = g.d_pol_bound;
  out["d_pol_within_bound"] = g.d_pol <= g.d_pol_bound;
  out["oracle_agreed"] = g.oracle_agreed;
  return out;
}

ordered_json to_json(const BoundCheck& c) {
  ordered_json out;
  out["tag"] = c.tag;
  out["statement"] = c.statement;
  out["lhs"] = c.lhs;
  out["rhs"] = c.rhs;
  out["relation"] = c.relation;
  if (c.status == CheckStatus::pass || c.status == CheckStatus::fail) {
    out["pass"] = c.status == CheckStatus::pass;
  } else {
    out["pass"] = nullptr;
  }
  out["status"] = to_string(c.status);
  return out;
}

ordered_json to_json(const ValidationReport& v) {
  ordered_json out = ordered_json::array();
  for (const auto& c : v.checks) {
    ordered_json item;
    item["name"] = c.name;
    item["pass"] = c.passed;
    item["detail"] = c.detail;
    if (!c.witness.empty()) item["witness"] = c.witness;
    out.push_back(std::move(item));
  }
  return out;
}

ordered_json to_json(const OracleResult& o) {
  ordered_json out;
  out["samples"] = o.samples;
  out["closed_form"] = o.closed_form.to_string();
  out["interpolated"] = o.interpolated.to_string();
  out["agreed"] = o.agreed;
  return out;
}

ordered_json to_json(const VerificationReport& v) {
  ordered_json out;
  out["passed"] = v.passed;
  out["nef_status"] = v.nef_status;
  out["note"] = v.note;
  ordered_json steps = ordered_json::array();
  for (const auto& p : v.prefixes) {
    ordered_json s;
    s["i"] = p.index;
    s["nonzero"] = p.nonzero;
    if (p.nonzero) s["nonzero_witness"] = p.nonzero_witness;
    s["invariant"] = p.invariant;
    if (!p.invariant) s["invariance_witness"] = p.invariance_witness;
    if (p.positivity) s["positivity"] = to_string(*p.positivity);
    steps.push_back(std::move(s));
  }
  out["prefixes"] = std::move(steps);
  return out;
}

ordered_json to_json(const FiltrationData& f) {
  ordered_json out;
  ordered_json dims = ordered_json::array();
  for (const auto& s : f.f) dims.push_back(subspace_dim(s));
  ordered_json pdims = ordered_json::array();
  for (const auto& s : f.fp) pdims.push_back(subspace_dim(s));
  out["F_dims"] = std::move(dims);
  out["Fp_dims"] = std::move(pdims);
  ordered_json jumps = ordered_json::array();
  for (bool b : f.jumps) jumps.push_back(b);
  out["jumps"] = std::move(jumps);
  out["s_sequence"] = f.s_sequence;
  out["s_sequence_inverse"] = f.s_sequence_inverse;
  out["r"] = f.r;
  out["k"] = f.k;
  out["k_equals_2r"] = f.k_matches();
  out["chain_ok"] = f.chain_ok;
  out["equal_prefix_ok"] = f.equal_prefix_ok;
  out["vanprod_ok"] = f.vanprod_ok;
  ordered_json fb = ordered_json::array();
  for (const auto& s : f.f) fb.push_back(to_json(s));
  ordered_json fpb = ordered_json::array();
  for (const auto& s : f.fp) fpb.push_back(to_json(s));
  out["F_bases"] = std::move(fb);
  out["Fp_bases"] = std::move(fpb);
  return out;
}

ordered_json to_json(const DiagnosticsReport& d) {
  ordered_json out;
  out["passed"] = d.passed();
  ordered_json items = ordered_json::array();
  for (const auto& it : d.items) {
    ordered_json x;
    x["tag"] = it.tag;
    x["statement"] = it.statement;
    if (it.applicable) {
      x["pass"] = it.passed;
      if (!it.passed && d.kind == ModelKind::synthetic) x["finding"] = "hypothesis-violation";
    } else {
      x["pass"] = nullptr;
    }
    items.push_back(std::move(x));
  }
  out["items"] = std::move(items);
  return out;
}

const char* model_type(const IntersectionModel& model) {
  if (model.is_torus()) return "torus";
  if (model.is_fujiki()) return "fujiki";
  if (model.is_product()) return "product";
  return "explicit";
}

const char* to_string(ModelKind kind) { return kind == ModelKind::geometric ? "geometric" : "synthetic"; }

ordered_json analysis_json(const IntersectionModel& model, const BoundReport& bounds, const GrowthReport& growth,
                           const ValidationReport& validation) {
  ordered_json out;
  out["d"] = bounds.d;
  if (bounds.k) {
    out["k"] = *bounds.k;
  } else {
    out["k"] = nullptr;
  }
  out["plov"] = bounds.plov;
  out["gkdim"] = bounds.gkdim;
  ordered_json checks = ordered_json::array();
  for (const auto& c : bounds.checks) {
    ordered_json j = to_json(c);
    if (c.status == CheckStatus::fail && bounds.kind == ModelKind::synthetic) j["finding"] = "hypothesis-violation";
    checks.push_back(std::move(j));
  }
  out["checks"] = std::move(checks);
  ordered_json m;
  m["type"] = model_type(model);
  m["kind"] = to_string(model.kind());
  m["h"] = model.h();
  m["labels"] = model.labels();
  m["kahler"] = to_json(model.kahler());
  out["model"] = std::move(m);
  out["growth"] = to_json(growth);
  out["validation"] = to_json(validation);
  return out;
}

std::string hilbert_csv(const std::vector<Rational>& seq) {
  std::ostringstream os;
  os << "m,dim\n";
  for (std::size_t m = 0; m < seq.size(); ++m) os << m << "," << seq[m].to_string() << "\n";
  return os.str();
}

}  // namespace plovlab
