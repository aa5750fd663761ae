#pragma once

#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sortforge/check_report.hpp"
#include "sortforge/corpus.hpp"

namespace sortforge {

/// Whether a law is expected to hold on its corpus, or expected to have a
/// counterexample (the report is then expected-fail-confirmed).
enum class Expectation { holds, counterexample };

struct Law {
  std::string id;
  std::string description;
  Expectation expect = Expectation::holds;
  /// Raw outcome: pass, or fail with the first witness in corpus order.
  std::function<CheckReport(const CorpusConfig&)> run;
  /// Re-executes one witness; true when the case still violates the law.
  std::function<bool(const WitnessFields&)> violates;
};

class UnknownLawError : public std::invalid_argument {
 public:
  explicit UnknownLawError(const std::string& id) : std::invalid_argument("unknown law: " + id) {}
};

/// All registered laws, in report order.
const std::vector<Law>& law_catalog();
/// Throws UnknownLawError.
const Law& find_law(std::string_view id);

/// Runs one law and maps its raw outcome through its expectation.
CheckReport run_law(const Law& law, const CorpusConfig& config);

/// One report per selected law, in catalog order. An empty selection runs
/// every law. Throws UnknownLawError before running anything.
std::vector<CheckReport> run_checks(const CorpusConfig& config,
                                    std::span<const std::string> selection = {});

/// Replays a report's witness; true when the failure reproduces.
bool replay_witness(const Law& law, const std::string& witness);

/// Exhaustive search for a tl2-universal counterexample over node trees
/// with up to `max_nodes` nodes, for container "heap" or "bst". A witness
/// is confirmed only if the tree also breaks the container's invariant.
CheckReport find_counterexample(std::string_view container, std::size_t max_nodes,
                                std::size_t alphabet_size = 4);

}  // namespace sortforge
