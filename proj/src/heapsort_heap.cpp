#include "sortforge/heapsort_heap.hpp"

#include <algorithm>
#include <utility>
#include <vector>

#include "sortforge/ordered_lists.hpp"

namespace sortforge {

NodeTree ist_h(Key x, const NodeTree& t) {
  // Each level keeps one key and moves its old left subtree to the right;
  // the other key continues down the old right subtree.
  thread_local std::vector<std::pair<Key, const NodeTree*>> path;
  path.clear();
  const NodeTree* cur = &t;
  while (!cur->empty()) {
    Key y = cur->key();
    if (x < y) {
      path.emplace_back(x, &cur->left());
      x = y;
    } else {
      path.emplace_back(y, &cur->left());
    }
    cur = &cur->right();
  }
  NodeTree result = NodeTree::leaf(x);
  for (auto it = path.rbegin(); it != path.rend(); ++it)
    result = NodeTree::node(it->first, std::move(result), *it->second);
  return result;
}

KeyList h2list(const NodeTree& t) {
  return fold_node_tree(
      [](Key x, KeyList l, KeyList r) {
        KeyList merged = merge(l, r);
        merged.insert(merged.begin(), x);
        return merged;
      },
      KeyList{}, t);
}

NodeTree build_h(const KeyList& l) {
  NodeTree acc;
  for (auto it = l.rbegin(); it != l.rend(); ++it) acc = ist_h(*it, acc);
  return acc;
}

std::tuple<Key, KeyList, KeyList> haux(Key x, const KeyList& l) {
  // Evaluate the recurrence from the right end. Both parts are kept
  // reversed so that consing onto the front is a push_back.
  if (l.empty()) return {x, {}, {}};
  Key m = l.back();
  KeyList a_rev;
  KeyList b_rev;
  a_rev.reserve(l.size() / 2 + 1);
  b_rev.reserve(l.size() / 2 + 1);
  auto step = [&](Key head) {
    // (m, a, b) -> (min, max:b, a)
    std::swap(a_rev, b_rev);
    if (head < m) {
      a_rev.push_back(m);
      m = head;
    } else {
      a_rev.push_back(head);
    }
  };
  for (std::size_t i = l.size() - 1; i-- > 0;) step(l[i]);
  step(x);
  std::reverse(a_rev.begin(), a_rev.end());
  std::reverse(b_rev.begin(), b_rev.end());
  return {m, std::move(a_rev), std::move(b_rev)};
}

std::tuple<Key, KeyList, KeyList> haux_recursive(Key x, const KeyList& l) {
  if (l.empty()) return {x, {}, {}};
  KeyList tail(l.begin() + 1, l.end());
  auto [z, left, right] = haux_recursive(l.front(), tail);
  KeyList first = right;
  first.insert(first.begin(), x < z ? z : x);
  return {x < z ? x : z, std::move(first), std::move(left)};
}

CoalgStepNode<KeyList> hsort_coalgebra(const KeyList& l) {
  if (l.empty()) return Stop{};
  auto [m, a, b] = haux(l.front(), KeyList(l.begin() + 1, l.end()));
  return NodeSplit<KeyList>{m, std::move(a), std::move(b)};
}

NodeTree unfold_hsort(const KeyList& l) { return unfold_node_tree(hsort_coalgebra, l); }

KeyList hsort_hylo(const KeyList& l) {
  return hylo_node_tree(
      [](Key x, KeyList a, KeyList b) {
        KeyList merged = merge(a, b);
        merged.insert(merged.begin(), x);
        return merged;
      },
      KeyList{}, hsort_coalgebra, l);
}

KeyList hsort_deforested(const KeyList& l) {
  if (l.empty()) return {};
  auto [y, a, b] = haux(l.front(), KeyList(l.begin() + 1, l.end()));
  KeyList rest = merge(hsort_deforested(a), hsort_deforested(b));
  KeyList out;
  out.reserve(rest.size() + 1);
  out.push_back(y);
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

bool is_balanced_node_tree(const NodeTree& t) {
  struct Frame {
    const NodeTree* tree;
    bool expanded;
  };
  std::vector<Frame> work{{&t, false}};
  std::vector<std::size_t> heights;
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    if (f.tree->empty()) {
      heights.push_back(0);
    } else if (!f.expanded) {
      work.push_back({f.tree, true});
      work.push_back({&f.tree->right(), false});
      work.push_back({&f.tree->left(), false});
    } else {
      std::size_t r = heights.back();
      heights.pop_back();
      std::size_t l = heights.back();
      heights.pop_back();
      if (l < r || l - r > 1) return false;
      heights.push_back(l + 1);
    }
  }
  return true;
}

}  // namespace sortforge
