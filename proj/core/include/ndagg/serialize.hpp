#pragma once

// JSON views of results. Numbers keep full double precision; labels come
// from the problem.

#include <nlohmann/json.hpp>

#include "ndagg/mcgdm.hpp"
#include "ndagg/ndim_agg.hpp"
#include "ndagg/report.hpp"
#include "ndagg/semivector.hpp"

namespace ndagg {

nlohmann::json toJson(const NDimInterval& x);
nlohmann::json toJson(const Witness& w);
nlohmann::json toJson(const CompatibilityReport& r);
nlohmann::json toJson(const OrderCompatibility& c);
nlohmann::json toJson(const Classification& c);
nlohmann::json toJson(const MwProperties& p);
nlohmann::json toJson(const CollectiveMatrix& c);
nlohmann::json toJson(const Annotation& a);

// {"worstToBest", "bestToWorst", "ties", "text"} with alternative labels.
nlohmann::json rankingJson(const Ranking& r, const DecisionProblem& problem);

// {"alternatives", "scores", "ranking", "annotations", "order", "aggregator"}.
nlohmann::json rankResponse(const PipelineResult& result, const DecisionProblem& problem);

// {"alternatives", "criteria", "collective"}.
nlohmann::json collectiveResponse(const CollectiveMatrix& c, const DecisionProblem& problem);

nlohmann::json toJson(const SensitivityReport& s, const DecisionProblem& problem);

}  // namespace ndagg
