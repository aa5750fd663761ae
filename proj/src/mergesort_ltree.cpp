#include "sortforge/mergesort_ltree.hpp"

#include <vector>

#include "sortforge/ordered_lists.hpp"

namespace sortforge {

LeafTree ist_lt(Key x, const LeafTree& t) {
  // Walk the right spine; each Branch l r becomes Branch (ist_lt x r) l.
  thread_local std::vector<const LeafTree*> swapped;
  swapped.clear();
  const LeafTree* cur = &t;
  while (!cur->is_leaf()) {
    swapped.push_back(&cur->left());
    cur = &cur->right();
  }
  LeafTree result = cur->payload() ? LeafTree::branch(LeafTree::leaf(x), *cur) : LeafTree::leaf(x);
  for (auto it = swapped.rbegin(); it != swapped.rend(); ++it)
    result = LeafTree::branch(std::move(result), **it);
  return result;
}

LeafTree ist_lt_para(Key x, const LeafTree& t) {
  return para_leaf_tree(
      [](const LeafTree& l, LeafTree, const LeafTree&, LeafTree r_inserted) {
        return LeafTree::branch(std::move(r_inserted), l);
      },
      [x](std::optional<Key> p) {
        return p ? LeafTree::branch(LeafTree::leaf(x), LeafTree::leaf(*p)) : LeafTree::leaf(x);
      },
      t);
}

KeyList lt2list(const LeafTree& t) {
  return fold_leaf_tree([](KeyList l, KeyList r) { return merge(l, r); },
                        [](std::optional<Key> p) { return p ? KeyList{*p} : KeyList{}; }, t);
}

LeafTree build_lt(const KeyList& l) {
  LeafTree acc;
  for (auto it = l.rbegin(); it != l.rend(); ++it) acc = ist_lt(*it, acc);
  return acc;
}

std::pair<KeyList, KeyList> maux(const KeyList& l) {
  std::pair<KeyList, KeyList> out;
  out.first.reserve((l.size() + 1) / 2);
  out.second.reserve(l.size() / 2);
  for (std::size_t i = 0; i < l.size(); ++i) (i % 2 == 0 ? out.first : out.second).push_back(l[i]);
  return out;
}

CoalgStepLeaf<KeyList> msort_coalgebra(const KeyList& l) {
  if (l.empty()) return Done{std::nullopt};
  if (l.size() == 1) return Done{l.front()};
  auto [a, b] = maux(l);
  return LeafSplit<KeyList>{std::move(a), std::move(b)};
}

LeafTree unfold_msort(const KeyList& l) { return unfold_leaf_tree(msort_coalgebra, l); }

KeyList msort_hylo(const KeyList& l) {
  return hylo_leaf_tree([](KeyList a, KeyList b) { return merge(a, b); },
                        [](std::optional<Key> p) { return p ? KeyList{*p} : KeyList{}; },
                        msort_coalgebra, l);
}

KeyList msort_deforested(const KeyList& l) {
  if (l.size() <= 1) return l;
  auto [a, b] = maux(l);
  return merge(msort_deforested(a), msort_deforested(b));
}

bool is_balanced_lt(const LeafTree& t) {
  // Post-order heights; any branch outside {0,1} fails.
  struct Frame {
    const LeafTree* tree;
    bool expanded;
  };
  std::vector<Frame> work{{&t, false}};
  std::vector<std::size_t> heights;
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    if (f.tree->is_leaf()) {
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
