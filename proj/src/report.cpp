#include "sortforge/report.hpp"

#include <json.hpp>
#include <sstream>

namespace sortforge {

std::string render_text(std::span<const CheckReport> reports, bool timings) {
  std::ostringstream out;
  std::size_t passed = 0, confirmed = 0, failed = 0;
  for (const CheckReport& r : reports) {
    out << to_string(r.status) << ' ' << r.law_id << " cases=" << r.cases_run;
    if (timings) out << " elapsed_ms=" << r.elapsed.count() / 1'000'000;
    if (r.witness) out << " witness: " << *r.witness;
    if (r.note) out << " (" << *r.note << ')';
    out << '\n';
    switch (r.status) {
      case Status::pass: ++passed; break;
      case Status::expected_fail_confirmed: ++confirmed; break;
      case Status::fail: ++failed; break;
    }
  }
  out << reports.size() << " laws: " << passed << " pass, " << confirmed
      << " expected-fail-confirmed, " << failed << " fail\n";
  return out.str();
}

std::string render_json(std::span<const CheckReport> reports, const CorpusConfig& config,
                        bool timings) {
  nlohmann::ordered_json doc;
  doc["config"] = {{"max_len", config.max_len},
                   {"alphabet_size", config.alphabet_size},
                   {"random_cases", config.random_cases},
                   {"max_random_len", config.max_random_len},
                   {"seed", config.seed}};
  auto& list = doc["reports"] = nlohmann::ordered_json::array();
  for (const CheckReport& r : reports) {
    nlohmann::ordered_json entry;
    entry["law_id"] = r.law_id;
    entry["status"] = std::string(to_string(r.status));
    entry["cases_run"] = r.cases_run;
    entry["witness"] = r.witness ? nlohmann::ordered_json(*r.witness) : nullptr;
    if (r.note) entry["note"] = *r.note;
    if (timings) entry["elapsed_ns"] = r.elapsed.count();
    list.push_back(std::move(entry));
  }
  doc["exit_code"] = exit_code(reports);
  return doc.dump(2) + "\n";
}

int exit_code(std::span<const CheckReport> reports) {
  for (const CheckReport& r : reports)
    if (r.status == Status::fail) return 1;
  return 0;
}

}  // namespace sortforge
