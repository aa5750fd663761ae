#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sortforge {

enum class Status { pass, fail, expected_fail_confirmed };

std::string_view to_string(Status s);

/// Outcome of one law or invariant check over a corpus.
struct CheckReport {
  std::string law_id;
  Status status = Status::pass;
  std::uint64_t cases_run = 0;
  /// First failing case as `name=value; name=value`, values in the
  /// canonical text format (see text_format.hpp).
  std::optional<std::string> witness;
  std::optional<std::string> note;
  std::chrono::nanoseconds elapsed{0};
};

using WitnessFields = std::vector<std::pair<std::string, std::string>>;

std::string format_witness(const WitnessFields& fields);
/// Inverse of format_witness. Throws ParseError on malformed input.
WitnessFields parse_witness(std::string_view text);

}  // namespace sortforge
