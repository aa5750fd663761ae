#include "sortforge/corpus.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <stdexcept>
#include <string>

namespace sortforge {

CorpusConfig CorpusConfig::from_env() {
  CorpusConfig config;
  if (const char* env = std::getenv("SORTFORGE_SEED"); env != nullptr && *env != '\0')
    config.seed = parse_seed(env);
  return config;
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t v = next();
  while (v >= limit) v = next();
  return v % bound;
}

std::uint64_t parse_seed(const char* text) {
  std::uint64_t value = 0;
  const char* end = text + std::strlen(text);
  auto [ptr, ec] = std::from_chars(text, end, value);
  if (ec != std::errc() || ptr != end || ptr == text)
    throw std::invalid_argument(std::string("invalid seed \"") + text + "\" (expected decimal u64)");
  return value;
}

KeyList alphabet(std::size_t alphabet_size) {
  KeyList keys(alphabet_size);
  for (std::size_t i = 0; i < alphabet_size; ++i) keys[i] = static_cast<Key>(i);
  return keys;
}

std::uint64_t exhaustive_list_count(std::size_t max_len, std::size_t alphabet_size) {
  std::uint64_t total = 0;
  std::uint64_t power = 1;
  for (std::size_t k = 0; k <= max_len; ++k) {
    total += power;
    power *= alphabet_size;
  }
  return total;
}

bool each_list(std::size_t max_len, std::size_t alphabet_size, const ListVisitor& visit) {
  for (std::size_t len = 0; len <= max_len; ++len) {
    KeyList l(len, 0);
    while (true) {
      if (!visit(l)) return false;
      // Odometer increment, last position fastest.
      std::size_t i = len;
      while (i > 0 && l[i - 1] == static_cast<Key>(alphabet_size) - 1) l[--i] = 0;
      if (i == 0) break;
      ++l[i - 1];
    }
    if (alphabet_size == 0) break;
  }
  return true;
}

Key random_key_bound(std::size_t alphabet_size) {
  return static_cast<Key>(2 * alphabet_size * alphabet_size);
}

std::vector<KeyList> random_lists(std::uint64_t seed, std::size_t count, std::size_t max_len,
                                  Key key_bound) {
  SplitMix64 rng(seed);
  std::vector<KeyList> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    KeyList l(rng.below(max_len + 1));
    for (Key& k : l) k = static_cast<Key>(rng.below(static_cast<std::uint64_t>(key_bound)));
    out.push_back(std::move(l));
  }
  return out;
}

std::vector<KeyList> list_corpus(const CorpusConfig& config) {
  std::vector<KeyList> out;
  out.reserve(exhaustive_list_count(config.max_len, config.alphabet_size) + config.random_cases);
  each_list(config.max_len, config.alphabet_size, [&out](const KeyList& l) {
    out.push_back(l);
    return true;
  });
  auto random = random_lists(config.seed, config.random_cases, config.max_random_len,
                             random_key_bound(config.alphabet_size));
  for (auto& l : random) out.push_back(std::move(l));
  return out;
}

bool each_node_tree_of_size(std::size_t nodes, std::span<const Key> keys,
                            const NodeTreeVisitor& visit) {
  if (nodes == 0) return visit(NodeTree{});
  for (std::size_t left = 0; left < nodes; ++left) {
    for (Key key : keys) {
      bool go = each_node_tree_of_size(left, keys, [&](const NodeTree& l) {
        return each_node_tree_of_size(nodes - 1 - left, keys, [&](const NodeTree& r) {
          return visit(NodeTree::node(key, l, r));
        });
      });
      if (!go) return false;
    }
  }
  return true;
}

bool each_node_tree(std::size_t max_nodes, std::span<const Key> keys, const NodeTreeVisitor& visit) {
  for (std::size_t n = 0; n <= max_nodes; ++n)
    if (!each_node_tree_of_size(n, keys, visit)) return false;
  return true;
}

bool each_leaf_tree_of_size(std::size_t leaves, std::span<const std::optional<Key>> payloads,
                            const LeafTreeVisitor& visit) {
  if (leaves == 0) return true;
  if (leaves == 1) {
    for (const auto& p : payloads)
      if (!visit(LeafTree::leaf(p))) return false;
    return true;
  }
  for (std::size_t left = 1; left < leaves; ++left) {
    bool go = each_leaf_tree_of_size(left, payloads, [&](const LeafTree& l) {
      return each_leaf_tree_of_size(leaves - left, payloads, [&](const LeafTree& r) {
        return visit(LeafTree::branch(l, r));
      });
    });
    if (!go) return false;
  }
  return true;
}

bool each_leaf_tree(std::size_t max_leaves, std::span<const std::optional<Key>> payloads,
                    const LeafTreeVisitor& visit) {
  for (std::size_t n = 1; n <= max_leaves; ++n)
    if (!each_leaf_tree_of_size(n, payloads, visit)) return false;
  return true;
}

std::vector<std::optional<Key>> leaf_payloads(std::size_t alphabet_size) {
  std::vector<std::optional<Key>> out{std::nullopt};
  for (Key k : alphabet(alphabet_size)) out.emplace_back(k);
  return out;
}

namespace {

// Corpus trees are small; plain recursion is fine here.
NodeTree relabel_node(const NodeTree& t, std::size_t alphabet_size, std::size_t& counter) {
  if (t.empty()) return {};
  Key k = static_cast<Key>(counter++ % alphabet_size);
  NodeTree l = relabel_node(t.left(), alphabet_size, counter);
  NodeTree r = relabel_node(t.right(), alphabet_size, counter);
  return NodeTree::node(k, std::move(l), std::move(r));
}

LeafTree relabel_leaf(const LeafTree& t, std::size_t alphabet_size, std::size_t& counter) {
  if (t.is_leaf()) return LeafTree::leaf(static_cast<Key>(counter++ % alphabet_size));
  LeafTree l = relabel_leaf(t.left(), alphabet_size, counter);
  LeafTree r = relabel_leaf(t.right(), alphabet_size, counter);
  return LeafTree::branch(std::move(l), std::move(r));
}

}  // namespace

NodeTree relabel_preorder(const NodeTree& t, std::size_t alphabet_size) {
  std::size_t counter = 0;
  return relabel_node(t, alphabet_size, counter);
}

LeafTree relabel_leaves(const LeafTree& t, std::size_t alphabet_size) {
  std::size_t counter = 0;
  return relabel_leaf(t, alphabet_size, counter);
}

NodeTree random_node_tree(SplitMix64& rng, std::size_t nodes, Key key_bound) {
  if (nodes == 0) return {};
  std::size_t left = rng.below(nodes);
  Key k = static_cast<Key>(rng.below(static_cast<std::uint64_t>(key_bound)));
  NodeTree l = random_node_tree(rng, left, key_bound);
  NodeTree r = random_node_tree(rng, nodes - 1 - left, key_bound);
  return NodeTree::node(k, std::move(l), std::move(r));
}

}  // namespace sortforge
