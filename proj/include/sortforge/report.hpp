#pragma once

// Text and JSON renderings of check reports. Both are deterministic for a
// given config unless `timings` is set, which adds elapsed times.

#include <span>
#include <string>

#include "sortforge/check_report.hpp"
#include "sortforge/corpus.hpp"

namespace sortforge {

std::string render_text(std::span<const CheckReport> reports, bool timings = false);
std::string render_json(std::span<const CheckReport> reports, const CorpusConfig& config,
                        bool timings = false);

/// 0 when every report is pass or expected-fail-confirmed, else 1.
int exit_code(std::span<const CheckReport> reports);

}  // namespace sortforge
