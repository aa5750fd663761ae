#pragma once

// Internal helpers for declaring laws over typed cases.

#include <array>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sortforge/check_report.hpp"
#include "sortforge/corpus.hpp"
#include "sortforge/invariants.hpp"
#include "sortforge/laws.hpp"
#include "sortforge/text_format.hpp"

namespace sortforge::laws {

template <class T>
struct Codec;

template <>
struct Codec<Key> {
  static std::string render(Key k) { return sortforge::render(k); }
  static Key parse(const std::string& s) { return parse_key(s); }
};

template <>
struct Codec<KeyList> {
  static std::string render(const KeyList& l) { return sortforge::render(l); }
  static KeyList parse(const std::string& s) { return parse_key_list(s); }
};

template <>
struct Codec<NodeTree> {
  static std::string render(const NodeTree& t) { return sortforge::render(t); }
  static NodeTree parse(const std::string& s) { return parse_node_tree(s); }
};

template <>
struct Codec<LeafTree> {
  static std::string render(const LeafTree& t) { return sortforge::render(t); }
  static LeafTree parse(const std::string& s) { return parse_leaf_tree(s); }
};

template <>
struct Codec<KeyPredicate> {
  static std::string render(const KeyPredicate& p) { return p.name; }
  static KeyPredicate parse(const std::string& s) { return KeyPredicate::parse(s); }
};

template <>
struct Codec<std::string> {
  static std::string render(const std::string& s) { return s; }
  static std::string parse(const std::string& s) { return s; }
};

template <class... Ts>
using Sink = std::function<bool(const Ts&...)>;

template <class... Ts>
using Enumerator = std::function<void(const CorpusConfig&, const Sink<Ts...>&)>;

template <class... Ts>
using CasePredicate = std::function<bool(const Ts&...)>;

template <class... Ts>
CasePredicate<Ts...> always() {
  return [](const Ts&...) { return true; };
}

template <class... Ts>
struct LawSpec {
  std::string id;
  std::string description;
  Expectation expect = Expectation::holds;
  std::array<std::string, sizeof...(Ts)> names;
  Enumerator<Ts...> cases;
  /// Cases outside the precondition are skipped and not counted.
  CasePredicate<Ts...> pre = always<Ts...>();
  CasePredicate<Ts...> body;
};

template <class... Ts, std::size_t... I>
std::string render_case(const std::array<std::string, sizeof...(Ts)>& names,
                        std::index_sequence<I...>, const Ts&... values) {
  return format_witness({{names[I], Codec<Ts>::render(values)}...});
}

template <class... Ts, std::size_t... I>
std::tuple<Ts...> parse_case(const std::array<std::string, sizeof...(Ts)>& names,
                             const WitnessFields& fields, std::index_sequence<I...>) {
  auto lookup = [&fields](const std::string& name) -> const std::string& {
    for (const auto& [k, v] : fields)
      if (k == name) return v;
    throw ParseError("witness is missing field \"" + name + "\"");
  };
  return std::tuple<Ts...>{Codec<Ts>::parse(lookup(names[I]))...};
}

template <class... Ts>
Law make_law(LawSpec<Ts...> spec) {
  auto shared = std::make_shared<const LawSpec<Ts...>>(std::move(spec));
  Law law;
  law.id = shared->id;
  law.description = shared->description;
  law.expect = shared->expect;
  law.run = [shared](const CorpusConfig& config) {
    CheckReport report;
    report.law_id = shared->id;
    shared->cases(config, Sink<Ts...>([&](const Ts&... values) {
                    if (!shared->pre(values...)) return true;
                    ++report.cases_run;
                    if (shared->body(values...)) return true;
                    report.status = Status::fail;
                    report.witness = render_case<Ts...>(shared->names, std::index_sequence_for<Ts...>{},
                                                        values...);
                    return false;
                  }));
    return report;
  };
  law.violates = [shared](const WitnessFields& fields) {
    auto values = parse_case<Ts...>(shared->names, fields, std::index_sequence_for<Ts...>{});
    return std::apply(shared->pre, values) && !std::apply(shared->body, values);
  };
  return law;
}

// Corpus helpers shared by the law files.

/// Exhaustive lists followed by the seeded random lists of the config.
template <class F>
void for_list_corpus(const CorpusConfig& config, F&& visit) {
  if (!each_list(config.max_len, config.alphabet_size, visit)) return;
  for (const KeyList& l : random_lists(config.seed, config.random_cases, config.max_random_len,
                                       random_key_bound(config.alphabet_size)))
    if (!visit(l)) return;
}

inline constexpr std::size_t kLemmaListLen = 6;
inline constexpr std::size_t kLemmaTreeNodes = 5;
inline constexpr std::size_t kLemmaRandomCases = 1000;
inline constexpr std::size_t kLemmaRandomLen = 12;

/// Lists of length <= 6 over the alphabet, then 10^3 random lists.
template <class F>
void for_lemma_lists(const CorpusConfig& config, F&& visit) {
  if (!each_list(kLemmaListLen, config.alphabet_size, visit)) return;
  for (const KeyList& l : random_lists(config.seed ^ 0x6c656d6d61ULL, kLemmaRandomCases,
                                       kLemmaRandomLen, random_key_bound(config.alphabet_size)))
    if (!visit(l)) return;
}

/// Trees with <= 5 nodes over the alphabet; then 10^3 random trees, half
/// of them built by heap insertion and half by BST insertion so that the
/// invariant-guarded lemmas see larger qualifying trees.
void for_lemma_trees(const CorpusConfig& config, const NodeTreeVisitor& visit);

/// Sections (<k) (<=k) (>k) (>=k) for k in {0, K/2, K}.
std::vector<KeyPredicate> predicate_family(std::size_t alphabet_size);

void register_list_laws(std::vector<Law>& out);
void register_tree_laws(std::vector<Law>& out);
void register_sort_laws(std::vector<Law>& out);
void register_invariant_laws(std::vector<Law>& out);

}  // namespace sortforge::laws
