#include <limits>
#include <doctest.h>

#include "sortforge/heapsort_heap.hpp"
#include "sortforge/mergesort_ltree.hpp"
#include "sortforge/ordered_lists.hpp"
#include "sortforge/quicksort_bst.hpp"
#include "sortforge/recursion.hpp"

using namespace sortforge;

namespace {

NodeTree N(Key k, NodeTree l = {}, NodeTree r = {}) { return NodeTree::node(k, l, r); }
LeafTree L(Key k) { return LeafTree::leaf(k); }
LeafTree B(LeafTree l, LeafTree r) { return LeafTree::branch(l, r); }

KeyList singleton_or_empty(std::optional<Key> p) { return p ? KeyList{*p} : KeyList{}; }

NodeTree right_spine(std::size_t n) {
  NodeTree t;
  for (std::size_t i = n; i > 0; --i) t = N(static_cast<Key>(i), {}, t);
  return t;
}

}  // namespace

TEST_CASE("fold_node_tree") {
  auto count = [](Key, std::size_t l, std::size_t r) { return 1 + l + r; };
  CHECK(fold_node_tree(count, std::size_t{0}, NodeTree{}) == 0);

  auto heap_step = [](Key x, KeyList l, KeyList r) {
    KeyList out{x};
    KeyList m = merge(l, r);
    out.insert(out.end(), m.begin(), m.end());
    return out;
  };
  NodeTree t = N(1, N(3), N(2));
  CHECK(fold_node_tree(heap_step, KeyList{}, t) == KeyList{1, 2, 3});
  CHECK(fold_node_tree(heap_step, KeyList{}, t) == h2list(t));

  auto max3 = [](Key x, Key l, Key r) { return std::max({x, l, r}); };
  CHECK(fold_node_tree(max3, std::numeric_limits<Key>::min(), N(5)) == 5);
}

TEST_CASE("unfold_node_tree") {
  auto stop = [](const KeyList&) -> CoalgStepNode<KeyList> { return Stop{}; };
  CHECK(unfold_node_tree(stop, KeyList{1, 2}) == NodeTree{});
  CHECK(unfold_node_tree(hsort_coalgebra, KeyList{3, 1, 2}) == N(1, N(3), N(2)));
  CHECK(unfold_node_tree(hsort_coalgebra, KeyList{3, 1, 2}) == build_h({3, 1, 2}));
  CHECK(unfold_node_tree(hsort_coalgebra, KeyList{}) == NodeTree{});
}

TEST_CASE("unfold diverges past the depth limit") {
  auto forever = [](const int& s) -> CoalgStepNode<int> { return NodeSplit<int>{0, s + 1, s + 1}; };
  CHECK_THROWS_AS(unfold_node_tree(forever, 0, 1000), DivergenceError);
  auto leafy = [](const int& s) -> CoalgStepLeaf<int> { return LeafSplit<int>{s, s}; };
  try {
    unfold_leaf_tree(leafy, 0, 50);
    FAIL("expected divergence");
  } catch (const DivergenceError& e) {
    CHECK(e.depth() == 51);
  }
  // Exactly at the limit is fine.
  auto chain = [](const int& s) -> CoalgStepNode<int> {
    if (s == 0) return Stop{};
    return NodeSplit<int>{s, s - 1, 0};
  };
  CHECK(unfold_node_tree(chain, 10, 10).height() == 10);
  CHECK_THROWS_AS(unfold_node_tree(chain, 11, 10), DivergenceError);
}

TEST_CASE("fold_leaf_tree") {
  auto merge2 = [](KeyList a, KeyList b) { return merge(a, b); };
  CHECK(fold_leaf_tree(merge2, singleton_or_empty, LeafTree{}) == KeyList{});
  CHECK(fold_leaf_tree(merge2, singleton_or_empty, B(L(2), L(1))) == KeyList{1, 2});
  auto leaves = [](std::size_t a, std::size_t b) { return a + b; };
  auto one = [](std::optional<Key>) { return std::size_t{1}; };
  CHECK(fold_leaf_tree(leaves, one, B(L(1), B(L(2), L(3)))) == 3);
}

TEST_CASE("unfold_leaf_tree") {
  CHECK(unfold_leaf_tree(msort_coalgebra, KeyList{}) == LeafTree{});
  CHECK(unfold_leaf_tree(msort_coalgebra, KeyList{7}) == L(7));
  CHECK(unfold_leaf_tree(msort_coalgebra, KeyList{1, 2, 3}) == B(B(L(1), L(3)), L(2)));
  CHECK(unfold_leaf_tree(msort_coalgebra, KeyList{1, 2, 3}) == build_lt({1, 2, 3}));
}

TEST_CASE("para_leaf_tree") {
  auto zero = [](std::optional<Key>) { return 0; };
  auto one = [](const LeafTree&, int, const LeafTree&, int) { return 1; };
  CHECK(para_leaf_tree(one, zero, LeafTree{}) == 0);
  CHECK(ist_lt_para(5, LeafTree{}) == L(5));
  CHECK(ist_lt_para(5, B(L(1), L(2))) == B(B(L(5), L(2)), L(1)));
  CHECK(ist_lt_para(5, B(L(1), L(2))) == ist_lt(5, B(L(1), L(2))));

  // The branch receives the untouched subtrees.
  auto left_size = [](const LeafTree& l, int, const LeafTree&, int) {
    return static_cast<int>(l.leaf_count());
  };
  CHECK(para_leaf_tree(left_size, zero, B(B(L(1), L(2)), L(3))) == 2);
}

TEST_CASE("hylomorphisms") {
  auto merge2 = [](KeyList a, KeyList b) { return merge(a, b); };
  CHECK(hylo_leaf_tree(merge2, singleton_or_empty, msort_coalgebra, KeyList{2, 1}) ==
        lt2list(unfold_msort({2, 1})));
  CHECK(hylo_leaf_tree(merge2, singleton_or_empty, msort_coalgebra, KeyList{2, 1}) == KeyList{1, 2});

  auto heap_step = [](Key x, KeyList l, KeyList r) {
    KeyList out{x};
    KeyList m = merge(l, r);
    out.insert(out.end(), m.begin(), m.end());
    return out;
  };
  CHECK(hylo_node_tree(heap_step, KeyList{}, hsort_coalgebra, KeyList{}) == KeyList{});

  auto inorder = [](Key x, KeyList l, KeyList r) {
    l.push_back(x);
    l.insert(l.end(), r.begin(), r.end());
    return l;
  };
  CHECK(hylo_node_tree(inorder, KeyList{}, qsort_coalgebra, KeyList{2, 1, 3}) == KeyList{1, 2, 3});
  CHECK(hylo_node_tree(inorder, KeyList{}, qsort_coalgebra, KeyList{2, 1, 3}) ==
        fold_node_tree(inorder, KeyList{}, unfold_qsort({2, 1, 3})));
}

TEST_CASE("deep trees") {
  constexpr std::size_t n = 200'000;
  NodeTree spine = right_spine(n);
  CHECK(spine.size() == n);
  CHECK(spine.height() == n);
  NodeTree copy = right_spine(n);
  CHECK(spine == copy);
  auto count = [](Key, std::size_t l, std::size_t r) { return 1 + l + r; };
  CHECK(fold_node_tree(count, std::size_t{0}, spine) == n);

  LeafTree leafy = L(0);
  for (std::size_t i = 1; i < n; ++i) leafy = B(L(static_cast<Key>(i)), leafy);
  CHECK(leafy.leaf_count() == n);
  CHECK(leafy.height() == n - 1);
  // Destruction of both happens here without recursion.
}

TEST_CASE("structural equality") {
  CHECK(N(1, N(2)) != N(1, {}, N(2)));
  CHECK(N(1, N(2)) == N(1, N(2)));
  CHECK(N(1) != N(2));
  CHECK(LeafTree{} == LeafTree::leaf(std::nullopt));
  CHECK(LeafTree{} != L(0));
  CHECK(B(L(1), L(2)) != B(L(2), L(1)));
}
