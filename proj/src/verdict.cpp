#include "plovlab/verdict.hpp"

#include <algorithm>

namespace plovlab {

const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass:
      return "pass";
    case CheckStatus::fail:
      return "fail";
    case CheckStatus::not_applicable:
      return "not-applicable";
    case CheckStatus::informational:
      return "informational";
  }
  return "?";
}

std::vector<BoundCheck> BoundReport::failures() const {
  std::vector<BoundCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out),
               [](const BoundCheck& c) { return c.status == CheckStatus::fail; });
  return out;
}

int torus_square_sum(const RatMatrix& h10) {
  const UnipotentCert cert = certify(h10);
  int total = 0;
  for (int b : cert.jordan_partition) total += b * b;
  return total;
}

namespace {

CheckStatus verdict(bool holds) { return holds ? CheckStatus::pass : CheckStatus::fail; }

BoundCheck le(std::string tag, std::string statement, long lhs, long rhs) {
  return {std::move(tag), std::move(statement), std::to_string(lhs), "<=", std::to_string(rhs), verdict(lhs <= rhs)};
}

BoundCheck eq(std::string tag, std::string statement, long lhs, long rhs) {
  return {std::move(tag), std::move(statement), std::to_string(lhs), "==", std::to_string(rhs), verdict(lhs == rhs)};
}

BoundCheck skipped(std::string tag, std::string statement, std::string reason) {
  return {std::move(tag), std::move(statement) + " [" + std::move(reason) + "]", "", "", "",
          CheckStatus::not_applicable};
}

}  // namespace

BoundReport bound_report(const IntersectionModel& model, const AutoAction&, const GrowthReport& growth) {
  BoundReport rep;
  rep.d = model.complex_dim();
  rep.plov = growth.plov;
  rep.gkdim = growth.gkdim;
  rep.order_m = growth.order_m;
  rep.kind = model.kind();
  if (!model.is_product()) rep.k = growth.k;
  const long d = rep.d;
  const long p = rep.plov;
  auto& c = rep.checks;

  if (rep.k) {
    const long k = *rep.k;
    c.push_back(eq("k-even", "k mod 2 == 0", k % 2, 0));
    c.push_back(le("k-bound", "k <= 2(d-1)", k, 2 * (d - 1)));
    c.push_back(le("keeler-lower", "d + k <= plov", d + k, p));
    c.push_back(le("keeler-upper", "plov <= k(d-1) + d", p, k * (d - 1) + d));
    if (d >= 3 && k > 0) {
      c.push_back(le("uniform", "plov <= k(d-1) + d - 2", p, k * (d - 1) + d - 2));
    } else {
      c.push_back(skipped("uniform", "plov <= k(d-1) + d - 2", "needs d >= 3 and k > 0"));
    }
    c.push_back(le("thm-lb", "d + 2k - 2 <= plov", d + 2 * k - 2, p));
    if (k == 0) {
      c.push_back(eq("k-zero", "plov == d", p, d));
    } else {
      c.push_back(skipped("k-zero", "plov == d", "needs k = 0"));
    }
    if (d == 3 && k > 0) {
      c.push_back(eq("d3-formula", "plov == 2k + 1", p, 2 * k + 1));
    } else {
      c.push_back(skipped("d3-formula", "plov == 2k + 1", "needs d = 3 and k > 0"));
    }
  } else {
    for (const char* tag : {"k-even", "k-bound", "keeler-lower", "keeler-upper", "uniform", "thm-lb", "k-zero",
                            "d3-formula"}) {
      c.push_back(skipped(tag, "depends on k", "k is not reported for product carriers"));
    }
  }

  c.push_back(le("keeler-dim", "plov <= 2d^2 - 3d + 2", p, 2 * d * d - 3 * d + 2));
  if (d >= 4) {
    c.push_back(le("uniform-d4", "plov <= 2d^2 - 3d - 2", p, 2 * d * d - 3 * d - 2));
  } else {
    c.push_back(skipped("uniform-d4", "plov <= 2d^2 - 3d - 2", "needs d >= 4"));
  }
  {
    const long upper = d <= 3 ? d * d : 2 * d * d - 3 * d - 2;
    BoundCheck b{"uniform-dim", "d <= plov <= (d <= 3 ? d^2 : 2d^2 - 3d - 2)", std::to_string(p), "in",
                 "[" + std::to_string(d) + ", " + std::to_string(upper) + "]", verdict(d <= p && p <= upper)};
    c.push_back(std::move(b));
  }
  if (d == 3) {
    BoundCheck b{"d3-values", "plov in {3, 5, 9}", std::to_string(p), "in", "{3, 5, 9}",
                 verdict(p == 3 || p == 5 || p == 9)};
    c.push_back(std::move(b));
  } else {
    c.push_back(skipped("d3-values", "plov in {3, 5, 9}", "needs d = 3"));
  }
  if (model.is_torus() && model.h10_matrix()) {
    c.push_back(eq("torus-formula", "plov == sum of squared Jordan block sizes of A", p,
                   torus_square_sum(*model.h10_matrix())));
  } else {
    c.push_back(skipped("torus-formula", "plov == sum of squared Jordan block sizes of A", "torus models only"));
  }
  c.push_back(eq("gkdim", "gkdim == plov + 1", rep.gkdim, p + 1));
  {
    BoundCheck b{"plov-le-d2", std::string("plov <= d^2 (open question; ") + (p <= d * d ? "holds" : "does not hold") +
                                   " here)",
                 std::to_string(p), "<=", std::to_string(d * d), CheckStatus::informational};
    c.push_back(std::move(b));
  }
  return rep;
}

BoundReport bound_report(const IntersectionModel& model, const AutoAction& action) {
  return bound_report(model, action, plov(model, action));
}

}  // namespace plovlab
