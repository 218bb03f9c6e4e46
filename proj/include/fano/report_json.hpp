#pragma once

#include <string>

#include "json.hpp"

#include "fano/invariants.hpp"

namespace fano {

// JSON schema: {"n": int, "degrees": [int], "k": int, "r": int, "delta": int,
// "hypothesis_ok": bool, "hypothesis_reason": string, "degree": string,
// "genus": string|null, "canonical_coefficient": int, "oracle_checked": bool,
// "elapsed_ms": number (only when include_timing)}. Degree and genus are
// decimal strings: they routinely exceed every native number range.
nlohmann::ordered_json report_to_json(const InvariantsReport& report, bool include_timing);
InvariantsReport report_from_json(const nlohmann::json& j);

std::string render_text(const InvariantsReport& report, bool include_timing);

}  // namespace fano
