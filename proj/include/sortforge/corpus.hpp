#pragma once

// Deterministic test corpora.
//
// Exhaustive corpora are visited in a fixed canonical order, which is the
// order in which "first witness" is defined:
//   lists       shortlex: by length, then lexicographically by key
//   node trees  by node count; then by left-subtree size, root key, left
//               subtree (recursively canonical), right subtree
//   leaf trees  by leaf count; then by left leaf count, left, right
// Visitors return false to stop the enumeration early; the enumerators
// return false when that happened.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "sortforge/trees.hpp"

namespace sortforge {

struct CorpusConfig {
  std::size_t max_len = 8;
  std::size_t alphabet_size = 4;
  std::size_t random_cases = 10'000;
  std::size_t max_random_len = 256;
  std::uint64_t seed = 0;

  /// Defaults, with the seed taken from SORTFORGE_SEED when set.
  static CorpusConfig from_env();
};

/// SplitMix64 (Steele, Lea, Flood): state += 0x9E3779B97F4A7C15, then the
/// 0xBF58476D1CE4E5B9 / 0x94D049BB133111EB finaliser.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

/// Parses a decimal u64 seed; throws std::invalid_argument otherwise.
std::uint64_t parse_seed(const char* text);

using ListVisitor = std::function<bool(const KeyList&)>;
using NodeTreeVisitor = std::function<bool(const NodeTree&)>;
using LeafTreeVisitor = std::function<bool(const LeafTree&)>;

/// Keys 0 .. alphabet_size-1.
KeyList alphabet(std::size_t alphabet_size);

/// Sum of alphabet_size^k for k = 0..max_len.
std::uint64_t exhaustive_list_count(std::size_t max_len, std::size_t alphabet_size);

bool each_list(std::size_t max_len, std::size_t alphabet_size, const ListVisitor& visit);

/// Upper bound (exclusive) of keys in random lists: 2 * alphabet_size^2.
Key random_key_bound(std::size_t alphabet_size);

/// `count` lists with length uniform in [0, max_len] and keys uniform in
/// [0, key_bound).
std::vector<KeyList> random_lists(std::uint64_t seed, std::size_t count, std::size_t max_len,
                                  Key key_bound);

/// Exhaustive lists (config.max_len, config.alphabet_size) followed by
/// config.random_cases random lists.
std::vector<KeyList> list_corpus(const CorpusConfig& config);

bool each_node_tree_of_size(std::size_t nodes, std::span<const Key> keys,
                            const NodeTreeVisitor& visit);
/// Every tree with 0..max_nodes nodes.
bool each_node_tree(std::size_t max_nodes, std::span<const Key> keys, const NodeTreeVisitor& visit);

bool each_leaf_tree_of_size(std::size_t leaves, std::span<const std::optional<Key>> payloads,
                            const LeafTreeVisitor& visit);
/// Every tree with 1..max_leaves leaves.
bool each_leaf_tree(std::size_t max_leaves, std::span<const std::optional<Key>> payloads,
                    const LeafTreeVisitor& visit);

/// Nothing followed by every key of the alphabet.
std::vector<std::optional<Key>> leaf_payloads(std::size_t alphabet_size);

/// Same shape, keys replaced by (pre-order index mod alphabet_size).
NodeTree relabel_preorder(const NodeTree& t, std::size_t alphabet_size);
/// Same shape, leaves replaced by (left-to-right index mod alphabet_size).
LeafTree relabel_leaves(const LeafTree& t, std::size_t alphabet_size);

/// Random shape with `nodes` nodes, keys uniform in [0, key_bound).
NodeTree random_node_tree(SplitMix64& rng, std::size_t nodes, Key key_bound);

}  // namespace sortforge
