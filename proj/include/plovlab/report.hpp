#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "plovlab/builders.hpp"
#include "plovlab/filtration.hpp"
#include "plovlab/growth.hpp"
#include "plovlab/verdict.hpp"

namespace plovlab {

using ordered_json = nlohmann::ordered_json;

ordered_json to_json(const Rational& r);
ordered_json to_json(const QPoly& p);  // coefficient strings, lowest power first
ordered_json to_json(const ClassVec& c);
ordered_json to_json(const Subspace& s);
ordered_json to_json(const UnipotentCert& cert, bool include_k);
ordered_json to_json(const GrowthReport& g);
ordered_json to_json(const BoundCheck& c);
ordered_json to_json(const ValidationReport& v);
ordered_json to_json(const OracleResult& o);
ordered_json to_json(const VerificationReport& v);
ordered_json to_json(const FiltrationData& f);
ordered_json to_json(const DiagnosticsReport& d);

/// Top-level analysis report: d, k, plov, gkdim and the checks first, then the supporting sections.
ordered_json analysis_json(const IntersectionModel& model, const BoundReport& bounds, const GrowthReport& growth,
                           const ValidationReport& validation);

const char* model_type(const IntersectionModel& model);
const char* to_string(ModelKind kind);

/// "m,dim" header followed by one row per entry.
std::string hilbert_csv(const std::vector<Rational>& seq);

}  // namespace plovlab
