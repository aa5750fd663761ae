#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

namespace sortforge {

using Key = std::int64_t;
using KeyList = std::vector<Key>;

/// Node-labelled binary tree: `Empty | Node key left right`.
///
/// Immutable value with shared structure; copying is O(1). Equality,
/// size, height and destruction use explicit work stacks, so degenerate
/// trees of height ~10^5 are fine.
class NodeTree {
 public:
  NodeTree() = default;

  static NodeTree node(Key key, NodeTree left, NodeTree right);
  static NodeTree leaf(Key key) { return node(key, {}, {}); }

  bool empty() const noexcept { return node_ == nullptr; }

  // Precondition for the accessors below: !empty().
  Key key() const noexcept;
  const NodeTree& left() const noexcept;
  const NodeTree& right() const noexcept;

  std::size_t size() const;
  std::size_t height() const;

  friend bool operator==(const NodeTree& a, const NodeTree& b);
  friend bool operator!=(const NodeTree& a, const NodeTree& b) { return !(a == b); }

 private:
  struct Node;
  std::shared_ptr<Node> node_;
};

struct NodeTree::Node {
  Key key;
  NodeTree left;
  NodeTree right;
  Node(Key k, NodeTree l, NodeTree r) : key(k), left(std::move(l)), right(std::move(r)) {}
  ~Node();
  static bool needs_detach(const std::shared_ptr<Node>& child);
};

inline Key NodeTree::key() const noexcept { return node_->key; }
inline const NodeTree& NodeTree::left() const noexcept { return node_->left; }
inline const NodeTree& NodeTree::right() const noexcept { return node_->right; }

/// Leaf-labelled binary tree: `Leaf (Maybe key) | Branch left right`.
///
/// A default-constructed LeafTree is `Leaf Nothing`, the empty container.
class LeafTree {
 public:
  LeafTree() = default;

  static LeafTree leaf(std::optional<Key> payload);
  static LeafTree branch(LeafTree left, LeafTree right);

  bool is_leaf() const noexcept;

  // Valid when is_leaf().
  std::optional<Key> payload() const noexcept;

  // Valid when !is_leaf().
  const LeafTree& left() const noexcept;
  const LeafTree& right() const noexcept;

  std::size_t leaf_count() const;
  /// Leaf = 0, Branch = 1 + max of children.
  std::size_t height() const;

  friend bool operator==(const LeafTree& a, const LeafTree& b);
  friend bool operator!=(const LeafTree& a, const LeafTree& b) { return !(a == b); }

 private:
  struct Node;
  std::shared_ptr<Node> node_;
};

struct LeafTree::Node {
  bool is_leaf = true;
  std::optional<Key> payload;
  LeafTree left;
  LeafTree right;
  ~Node();
  static bool needs_detach(const std::shared_ptr<Node>& child);
};

inline bool LeafTree::is_leaf() const noexcept { return node_ == nullptr || node_->is_leaf; }
inline std::optional<Key> LeafTree::payload() const noexcept {
  if (node_ == nullptr) return std::nullopt;
  return node_->payload;
}
inline const LeafTree& LeafTree::left() const noexcept { return node_->left; }
inline const LeafTree& LeafTree::right() const noexcept { return node_->right; }

}  // namespace sortforge
