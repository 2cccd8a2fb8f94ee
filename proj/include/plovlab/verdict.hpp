#pragma once

#include <optional>
#include <string>
#include <vector>

#include "plovlab/growth.hpp"
#include "plovlab/model.hpp"

namespace plovlab {

enum class CheckStatus { pass, fail, not_applicable, informational };
const char* to_string(CheckStatus s);

/// One instantiated inequality, both sides evaluated. relation is "<=", "==" or "in".
struct BoundCheck {
  std::string tag;
  std::string statement;
  std::string lhs;
  std::string relation;
  std::string rhs;
  CheckStatus status = CheckStatus::not_applicable;
};

struct BoundReport {
  int d = 0;
  std::optional<int> k;  // absent for product models
  long order_m = 1;
  int plov = 0;
  int gkdim = 0;
  ModelKind kind = ModelKind::geometric;
  std::vector<BoundCheck> checks;

  std::vector<BoundCheck> failures() const;
  bool all_applicable_pass() const { return failures().empty(); }
};

/// Evaluates every bound that applies to (d, k, Plov). For torus models the closed formula
/// Plov = Σ kᵢ² is checked against the Jordan partition of the unipotent part of A on H^{1,0}.
BoundReport bound_report(const IntersectionModel& model, const AutoAction& action, const GrowthReport& growth);
/// Computes the growth report first. Throws InfinitePlov.
BoundReport bound_report(const IntersectionModel& model, const AutoAction& action);

/// Σ kᵢ² over the Jordan partition of the unipotent reduction of a torus H^{1,0} matrix.
int torus_square_sum(const RatMatrix& h10);

}  // namespace plovlab
