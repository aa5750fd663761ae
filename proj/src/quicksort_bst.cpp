#include "sortforge/quicksort_bst.hpp"

#include <algorithm>
#include <variant>
#include <vector>

namespace sortforge {

NodeTree ist_bst(Key x, const NodeTree& t) {
  struct Step {
    const NodeTree* node;
    bool went_left;
  };
  thread_local std::vector<Step> path;
  path.clear();
  const NodeTree* cur = &t;
  while (!cur->empty()) {
    bool left = x < cur->key();
    path.push_back({cur, left});
    cur = left ? &cur->left() : &cur->right();
  }
  NodeTree result = NodeTree::leaf(x);
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    const NodeTree& n = *it->node;
    result = it->went_left ? NodeTree::node(n.key(), std::move(result), n.right())
                           : NodeTree::node(n.key(), n.left(), std::move(result));
  }
  return result;
}

KeyList bst2list(const NodeTree& t) {
  return fold_node_tree(
      [](Key x, KeyList l, KeyList r) {
        l.push_back(x);
        l.insert(l.end(), r.begin(), r.end());
        return l;
      },
      KeyList{}, t);
}

NodeTree b_acc(const KeyList& xs, NodeTree t) {
  for (Key x : xs) t = ist_bst(x, t);
  return t;
}

NodeTree build_bst(const KeyList& l) { return b_acc(l, NodeTree{}); }

namespace {

// Stable two-way split; sizes are counted first so each side is allocated once.
template <class Left>
std::pair<KeyList, KeyList> split_by(std::span<const Key> l, Left goes_left) {
  const auto n_left = static_cast<std::size_t>(std::count_if(l.begin(), l.end(), goes_left));
  std::pair<KeyList, KeyList> out{KeyList(n_left), KeyList(l.size() - n_left)};
  std::partition_copy(l.begin(), l.end(), out.first.begin(), out.second.begin(), goes_left);
  return out;
}

}  // namespace

std::pair<KeyList, KeyList> qaux(Key x, std::span<const Key> l) {
  return split_by(l, [x](Key h) { return h <= x; });
}

std::pair<KeyList, KeyList> partition_strict(Key x, std::span<const Key> l) {
  return split_by(l, [x](Key h) { return h < x; });
}

CoalgStepNode<KeyList> qsort_coalgebra(const KeyList& l) {
  if (l.empty()) return Stop{};
  auto [a, b] = partition_strict(l.front(), std::span(l).subspan(1));
  return NodeSplit<KeyList>{l.front(), std::move(a), std::move(b)};
}

CoalgStepNode<KeyList> qsort_coalgebra_ties_left(const KeyList& l) {
  if (l.empty()) return Stop{};
  auto [a, b] = qaux(l.front(), std::span(l).subspan(1));
  return NodeSplit<KeyList>{l.front(), std::move(a), std::move(b)};
}

NodeTree unfold_qsort(const KeyList& l) { return unfold_node_tree(qsort_coalgebra, l); }

KeyList qsort_hylo(const KeyList& l) {
  return hylo_node_tree(
      [](Key x, KeyList a, KeyList b) {
        a.push_back(x);
        a.insert(a.end(), b.begin(), b.end());
        return a;
      },
      KeyList{}, qsort_coalgebra, l);
}

KeyList qsort_deforested(const KeyList& l) {
  // Pending work in output order: a sublist still to sort, or a pivot to emit.
  std::vector<std::variant<KeyList, Key>> work;
  work.emplace_back(l);
  KeyList out;
  out.reserve(l.size());
  while (!work.empty()) {
    auto item = std::move(work.back());
    work.pop_back();
    if (auto* pivot = std::get_if<Key>(&item)) {
      out.push_back(*pivot);
      continue;
    }
    KeyList& xs = std::get<KeyList>(item);
    if (xs.empty()) continue;
    Key x = xs.front();
    auto [below, above] = qaux(x, std::span(xs).subspan(1));
    work.emplace_back(std::move(above));
    work.emplace_back(std::in_place_type<Key>, x);
    work.emplace_back(std::move(below));
  }
  return out;
}

}  // namespace sortforge
