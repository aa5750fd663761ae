#include <algorithm>
#include <stdexcept>

#include "law_builder.hpp"
#include "sortforge/generic_sort.hpp"
#include "sortforge/heapsort_heap.hpp"
#include "sortforge/laws.hpp"
#include "sortforge/quicksort_bst.hpp"

namespace sortforge {

namespace laws {

void for_lemma_trees(const CorpusConfig& config, const NodeTreeVisitor& visit) {
  const KeyList keys = alphabet(config.alphabet_size);
  if (!each_node_tree(kLemmaTreeNodes, keys, visit)) return;
  const auto lists = random_lists(config.seed ^ 0x7472656573ULL, kLemmaRandomCases,
                                  kLemmaRandomLen, random_key_bound(config.alphabet_size));
  for (std::size_t i = 0; i < lists.size(); ++i) {
    NodeTree t = i % 2 == 0 ? build_h(lists[i]) : build_bst(lists[i]);
    if (!visit(t)) return;
  }
}

std::vector<KeyPredicate> predicate_family(std::size_t alphabet_size) {
  const auto k_max = static_cast<Key>(alphabet_size);
  std::vector<KeyPredicate> out;
  for (Key k : {Key{0}, k_max / 2, k_max}) {
    out.push_back(KeyPredicate::less_than(k));
    out.push_back(KeyPredicate::at_most(k));
    out.push_back(KeyPredicate::greater_than(k));
    out.push_back(KeyPredicate::at_least(k));
  }
  return out;
}

}  // namespace laws

const std::vector<Law>& law_catalog() {
  static const std::vector<Law> catalog = [] {
    std::vector<Law> out;
    laws::register_list_laws(out);
    laws::register_tree_laws(out);
    laws::register_sort_laws(out);
    laws::register_invariant_laws(out);
    return out;
  }();
  return catalog;
}

const Law& find_law(std::string_view id) {
  for (const Law& law : law_catalog())
    if (law.id == id) return law;
  throw UnknownLawError(std::string(id));
}

CheckReport run_law(const Law& law, const CorpusConfig& config) {
  detail::Stopwatch clock;
  CheckReport report = law.run(config);
  report.law_id = law.id;
  report.elapsed = clock.elapsed();
  if (law.expect == Expectation::counterexample) {
    if (report.status == Status::fail) {
      report.status = Status::expected_fail_confirmed;
    } else {
      report.status = Status::fail;
      report.note = "expected a counterexample, none found in " +
                    std::to_string(report.cases_run) + " cases";
    }
  }
  return report;
}

std::vector<CheckReport> run_checks(const CorpusConfig& config,
                                    std::span<const std::string> selection) {
  for (const std::string& id : selection) find_law(id);
  std::vector<CheckReport> reports;
  for (const Law& law : law_catalog()) {
    bool chosen = selection.empty() ||
                  std::find(selection.begin(), selection.end(), law.id) != selection.end();
    if (chosen) reports.push_back(run_law(law, config));
  }
  return reports;
}

bool replay_witness(const Law& law, const std::string& witness) {
  return law.violates(parse_witness(witness));
}

CheckReport find_counterexample(std::string_view container, std::size_t max_nodes,
                                std::size_t alphabet_size) {
  ContainerSpec<NodeTree> spec;
  bool (*invariant)(const NodeTree&) = nullptr;
  if (container == "heap") {
    spec = heap_spec();
    invariant = is_heap;
  } else if (container == "bst") {
    spec = bst_spec();
    invariant = is_bst;
  } else {
    throw std::invalid_argument("unknown container \"" + std::string(container) +
                                "\" (expected heap or bst)");
  }
  if (max_nodes < 1) throw std::invalid_argument("max-nodes must be at least 1");

  std::vector<NodeTree> trees;
  const KeyList keys = alphabet(alphabet_size);
  each_node_tree(max_nodes, keys, [&](const NodeTree& t) {
    trees.push_back(t);
    return true;
  });
  CheckReport report = check_tl2_universal<NodeTree>(spec, trees, keys);
  if (report.status == Status::pass) {
    report.note = "no counterexample with up to " + std::to_string(max_nodes) + " nodes";
    report.status = Status::fail;
    return report;
  }
  NodeTree witness = parse_node_tree(parse_witness(*report.witness).at(1).second);
  if (invariant(witness)) {
    report.status = Status::fail;
    report.note = "witness satisfies the " + spec.name + " invariant";
  } else {
    report.status = Status::expected_fail_confirmed;
    report.note = "witness tree violates the " + spec.name + " invariant";
  }
  return report;
}

}  // namespace sortforge
