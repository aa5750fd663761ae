#include "sortforge/generic_sort.hpp"

#include "sortforge/heapsort_heap.hpp"
#include "sortforge/invariants.hpp"
#include "sortforge/mergesort_ltree.hpp"
#include "sortforge/quicksort_bst.hpp"

namespace sortforge {

namespace {

template <class T>
bool structurally_equal(const T& a, const T& b) {
  return a == b;
}

std::string render_node(const NodeTree& t) { return render(t); }
std::string render_leaf(const LeafTree& t) { return render(t); }

}  // namespace

ContainerSpec<LeafTree> leaf_tree_spec() {
  return {"ltree", LeafTree{}, ist_lt, lt2list, structurally_equal<LeafTree>, render_leaf};
}

ContainerSpec<NodeTree> heap_spec() {
  return {"heap", NodeTree{}, ist_h, h2list, structurally_equal<NodeTree>, render_node};
}

ContainerSpec<NodeTree> bst_spec() {
  return {"bst", NodeTree{}, ist_bst, bst2list, structurally_equal<NodeTree>, render_node};
}

ContainerSpec<NodeTree> heap_bt_spec() {
  return {"heap-bt2list", NodeTree{}, ist_h, bt2list, structurally_equal<NodeTree>, render_node};
}

ContainerSpec<NodeTree> bst_bt_spec() {
  return {"bst-bt2list", NodeTree{}, ist_bst, bt2list, structurally_equal<NodeTree>, render_node};
}

}  // namespace sortforge
