#pragma once

#include <nlohmann/json.hpp>

#include "edgeideal/homology.hpp"
#include "edgeideal/invariants.hpp"
#include "edgeideal/theorems.hpp"

namespace edgeideal {

inline constexpr const char* kSchema = "edge-ideal-lab/1";

/// Object keys are sorted, so dumps are byte-stable for equal inputs.
nlohmann::json to_json(const Report& r);
nlohmann::json to_json(const BettiVector& b);
nlohmann::json to_json(const PrimeSet& p);
/// Aggregated (i, j, beta_ij) triples; with `detail`, also every (i, W, beta).
nlohmann::json to_json(const BettiTable& t, bool detail);
nlohmann::json to_json(const FerrersInvariants& f);
/// Elapsed time is only included when `timing` is set.
nlohmann::json to_json(const VerificationResult& r, bool timing);

/// Two-space indented dump with a trailing newline.
std::string dump(const nlohmann::json& j);

}  // namespace edgeideal
