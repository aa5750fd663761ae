#include "sortforge/trees.hpp"

#include <algorithm>
#include <utility>

namespace sortforge {

// A child that would die with its parent and still has children of its own.
bool NodeTree::Node::needs_detach(const std::shared_ptr<Node>& child) {
  return child && child.use_count() == 1 && (child->left.node_ || child->right.node_);
}

bool LeafTree::Node::needs_detach(const std::shared_ptr<Node>& child) {
  return child && child.use_count() == 1 && (child->left.node_ || child->right.node_);
}

// Children are detached onto a local stack before the node dies. A child
// whose count drops to zero here has its own children detached first, so
// teardown of a deep spine never recurses.
NodeTree::Node::~Node() {
  if (!needs_detach(left.node_) && !needs_detach(right.node_)) return;
  std::vector<std::shared_ptr<Node>> pending;
  pending.push_back(std::move(left.node_));
  pending.push_back(std::move(right.node_));
  while (!pending.empty()) {
    std::shared_ptr<Node> n = std::move(pending.back());
    pending.pop_back();
    if (n && n.use_count() == 1) {
      pending.push_back(std::move(n->left.node_));
      pending.push_back(std::move(n->right.node_));
    }
  }
}

NodeTree NodeTree::node(Key key, NodeTree left, NodeTree right) {
  NodeTree t;
  t.node_ = std::make_shared<Node>(key, std::move(left), std::move(right));
  return t;
}

std::size_t NodeTree::size() const {
  std::size_t count = 0;
  std::vector<const NodeTree*> work{this};
  while (!work.empty()) {
    const NodeTree* t = work.back();
    work.pop_back();
    if (t->empty()) continue;
    ++count;
    work.push_back(&t->left());
    work.push_back(&t->right());
  }
  return count;
}

std::size_t NodeTree::height() const {
  std::size_t best = 0;
  std::vector<std::pair<const NodeTree*, std::size_t>> work{{this, 0}};
  while (!work.empty()) {
    auto [t, depth] = work.back();
    work.pop_back();
    if (t->empty()) {
      best = std::max(best, depth);
      continue;
    }
    work.emplace_back(&t->left(), depth + 1);
    work.emplace_back(&t->right(), depth + 1);
  }
  return best;
}

bool operator==(const NodeTree& a, const NodeTree& b) {
  std::vector<std::pair<const NodeTree*, const NodeTree*>> work{{&a, &b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->empty() || y->empty()) return false;
    if (x->key() != y->key()) return false;
    work.emplace_back(&x->left(), &y->left());
    work.emplace_back(&x->right(), &y->right());
  }
  return true;
}

LeafTree::Node::~Node() {
  if (!needs_detach(left.node_) && !needs_detach(right.node_)) return;
  std::vector<std::shared_ptr<Node>> pending;
  pending.push_back(std::move(left.node_));
  pending.push_back(std::move(right.node_));
  while (!pending.empty()) {
    std::shared_ptr<Node> n = std::move(pending.back());
    pending.pop_back();
    if (n && n.use_count() == 1) {
      pending.push_back(std::move(n->left.node_));
      pending.push_back(std::move(n->right.node_));
    }
  }
}

LeafTree LeafTree::leaf(std::optional<Key> payload) {
  LeafTree t;
  if (payload) {
    t.node_ = std::make_shared<Node>();
    t.node_->payload = payload;
  }
  return t;
}

LeafTree LeafTree::branch(LeafTree left, LeafTree right) {
  LeafTree t;
  t.node_ = std::make_shared<Node>();
  t.node_->is_leaf = false;
  t.node_->left = std::move(left);
  t.node_->right = std::move(right);
  return t;
}

std::size_t LeafTree::leaf_count() const {
  std::size_t count = 0;
  std::vector<const LeafTree*> work{this};
  while (!work.empty()) {
    const LeafTree* t = work.back();
    work.pop_back();
    if (t->is_leaf()) {
      ++count;
      continue;
    }
    work.push_back(&t->left());
    work.push_back(&t->right());
  }
  return count;
}

std::size_t LeafTree::height() const {
  std::size_t best = 0;
  std::vector<std::pair<const LeafTree*, std::size_t>> work{{this, 0}};
  while (!work.empty()) {
    auto [t, depth] = work.back();
    work.pop_back();
    if (t->is_leaf()) {
      best = std::max(best, depth);
      continue;
    }
    work.emplace_back(&t->left(), depth + 1);
    work.emplace_back(&t->right(), depth + 1);
  }
  return best;
}

bool operator==(const LeafTree& a, const LeafTree& b) {
  std::vector<std::pair<const LeafTree*, const LeafTree*>> work{{&a, &b}};
  while (!work.empty()) {
    auto [x, y] = work.back();
    work.pop_back();
    if (x->node_ == y->node_) continue;
    if (x->is_leaf() != y->is_leaf()) return false;
    if (x->is_leaf()) {
      if (x->payload() != y->payload()) return false;
      continue;
    }
    work.emplace_back(&x->left(), &y->left());
    work.emplace_back(&x->right(), &y->right());
  }
  return true;
}

}  // namespace sortforge
