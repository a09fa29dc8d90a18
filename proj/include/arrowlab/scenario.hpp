#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "arrowlab/errors.hpp"

namespace arrowlab {

inline constexpr const char* kToolName = "arrowlab";
inline constexpr const char* kToolVersion = "0.1.0";

/// Malformed scenario or envelope; `what()` names the offending location.
class ScenarioError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Command-line overrides applied on top of the scenario file.
struct RunOverrides {
  std::optional<std::string> mode;
  std::optional<std::uint64_t> budget;
  std::optional<int> jobs;
  std::optional<bool> deterministic;
  std::optional<int> k;
  std::optional<std::string> variant;
};

struct RunResult {
  nlohmann::json envelope;
  int exit_code = 0;  // 0 holds/pass, 1 fails/fail, 2 inconclusive
};

/// Commands that accept a scenario of the given kind.
std::string command_for_kind(const std::string& kind);

/// Validates and executes a scenario. Throws ScenarioError on schema
/// violations and DomainError on invalid queries.
RunResult run_scenario(nlohmann::json scenario, const RunOverrides& overrides = {});

/// 64-bit FNV-1a of the compact serialization, as 16 hex digits.
std::string scenario_hash(const nlohmann::json& scenario);

/// Envelope without the wall-clock field, serialized.
std::string reproducible_payload(const nlohmann::json& envelope);

struct Revalidation {
  bool valid = false;
  std::string reason;
};

/// Re-checks a certificate with the naive validators; no coloring search.
Revalidation revalidate(const nlohmann::json& envelope);

/// Deterministic text summary of an envelope.
std::string report(const nlohmann::json& envelope);

/// Seed for randomized sampling: ARROWLAB_SEED if set, otherwise 0.
std::uint64_t sampling_seed();

}  // namespace arrowlab
