#pragma once

#include <string>

#include "difflin/verifier.hpp"

namespace difflin {

// {config, checks, summary} with sorted keys. Wall times appear only when
// timings is set, so the default output is byte-identical across runs.
std::string report_json(const CheckReport& rep, bool timings = false);

std::string report_text(const CheckReport& rep, bool timings = false);

}  // namespace difflin
