#pragma once

// Operations shared by the CLI and the HTTP service. Each returns the JSON
// document both front ends emit, so their outputs agree value for value.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "ndagg/mcgdm.hpp"
#include "ndagg/orders.hpp"
#include "ndagg/sampling.hpp"

namespace ndagg::app {

// kDefaultSeed unless NDAGG_SEED holds an unsigned integer.
std::uint64_t defaultSeed();

// Request-size limits for compute operations.
inline constexpr std::size_t kMaxSide = 64;
inline constexpr std::size_t kMaxTrials = 100000;

// Throws ValidationError when p, m or n exceeds kMaxSide.
void enforceSizeGuard(const DecisionProblem& problem);
void enforceTrialGuard(std::size_t samples, const std::string& path = "samples");

nlohmann::json rankDocument(const DecisionProblem& problem, const SamplingConfig& cfg);
nlohmann::json scoreDocument(const DecisionProblem& problem, const SamplingConfig& cfg);
nlohmann::json collectiveDocument(const DecisionProblem& problem);
nlohmann::json sensitivityDocument(const DecisionProblem& problem, const std::vector<Edit>& edits,
                                   const SamplingConfig& cfg);

// {"order", "admissibility":[...], "compatibility":{"SV8","SV9"}, "holds"}.
nlohmann::json checkOrderDocument(const AdmissibleOrderSpec& spec, const SamplingConfig& cfg);

// {"dimension", "semifield":[closure, WF1..WF5], "semivector":[closure,
// SV1..SV7], "compatibility":{"SV8","SV9"} for `order`, "holds"}.
nlohmann::json checkAxiomsDocument(std::size_t n, const AdmissibleOrderSpec& order,
                                   const SamplingConfig& cfg);

// {"aggregator", "order", "arity", "classification":{...},
// "idempotentIffAverage":{...}, "warnings":[...]}. Arity comes from the
// descriptor's omega or components when `arity` is absent.
nlohmann::json classifyDocument(const nlohmann::json& aggregator, const AdmissibleOrderSpec& order,
                                std::optional<std::size_t> arity, const SamplingConfig& cfg);

// Registered order kinds and aggregator families with their parameters.
nlohmann::json catalogDocument();

// Reads "edits" as strings or objects.
std::vector<Edit> parseEdits(const nlohmann::json& edits);

}  // namespace ndagg::app
