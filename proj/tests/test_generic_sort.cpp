#include <doctest.h>

#include <algorithm>

#include "sortforge/corpus.hpp"
#include "sortforge/generic_sort.hpp"
#include "sortforge/invariants.hpp"

using namespace sortforge;

namespace {

KeyList sorted_copy(KeyList l) {
  std::sort(l.begin(), l.end());
  return l;
}

std::vector<NodeTree> node_trees(std::size_t max_nodes) {
  std::vector<NodeTree> out;
  const KeyList keys{0, 1, 2, 3};
  each_node_tree(max_nodes, keys, [&](const NodeTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

}  // namespace

TEST_CASE("isort_container") {
  CHECK(isort_container(leaf_tree_spec(), {}) == KeyList{});
  CHECK(isort_container(heap_spec(), {}) == KeyList{});
  CHECK(isort_container(leaf_tree_spec(), {2, 1}) == KeyList{1, 2});
  CHECK(isort_container(heap_spec(), {3, 1, 2}) == KeyList{1, 2, 3});
  CHECK(isort_container(bst_spec(), {3, 1, 2}) == KeyList{1, 2, 3});
}

TEST_CASE("isort_container_acc") {
  CHECK(isort_container_acc(bst_spec(), {}) == KeyList{});
  CHECK(isort_container_acc(bst_spec(), {2, 1, 3}) == KeyList{1, 2, 3});
  CHECK(isort_container_acc(leaf_tree_spec(), {4, 4}) == KeyList{4, 4});
}

TEST_CASE("both builds sort, for every shipped spec") {
  for (const KeyList& l : random_lists(11, 300, 60, 16)) {
    const KeyList want = sorted_copy(l);
    REQUIRE(isort_container(leaf_tree_spec(), l) == want);
    REQUIRE(isort_container_acc(leaf_tree_spec(), l) == want);
    REQUIRE(isort_container(heap_spec(), l) == want);
    REQUIRE(isort_container_acc(heap_spec(), l) == want);
    REQUIRE(isort_container(bst_spec(), l) == want);
    REQUIRE(isort_container_acc(bst_spec(), l) == want);
  }
}

TEST_CASE("right and left builds differ structurally") {
  // Only list-level agreement is claimed.
  auto spec = bst_spec();
  CHECK_FALSE(spec.equal(build_right_to_left(spec, {1, 2}), build_left_to_right(spec, {1, 2})));
}

TEST_CASE("check_tl1") {
  CHECK(check_tl1(leaf_tree_spec()).status == Status::pass);
  CHECK(check_tl1(heap_spec()).status == Status::pass);
  CHECK(check_tl1(bst_spec()).status == Status::pass);

  auto broken = heap_spec();
  broken.name = "broken";
  broken.to_list = [](const NodeTree&) { return KeyList{0}; };
  CheckReport r = check_tl1(broken);
  CHECK(r.status == Status::fail);
  CHECK(r.law_id == "tl1:broken");
  REQUIRE(r.witness);
  CHECK(*r.witness == "c=.; to_list=[0]");
}

TEST_CASE("check_tl2_universal") {
  std::vector<LeafTree> leaves;
  const auto payloads = leaf_payloads(4);
  each_leaf_tree(4, payloads, [&](const LeafTree& t) {
    leaves.push_back(t);
    return true;
  });
  const KeyList keys{0, 1, 2, 3};
  CHECK(check_tl2_universal<LeafTree>(leaf_tree_spec(), leaves, keys).status == Status::pass);

  const auto trees = node_trees(4);
  CheckReport heap = check_tl2_universal<NodeTree>(heap_spec(), trees, keys);
  REQUIRE(heap.status == Status::fail);
  auto fields = parse_witness(*heap.witness);
  CHECK_FALSE(is_heap(parse_node_tree(fields.at(1).second)));

  CheckReport bst = check_tl2_universal<NodeTree>(bst_spec(), trees, keys);
  REQUIRE(bst.status == Status::fail);
  CHECK_FALSE(is_bst(parse_node_tree(parse_witness(*bst.witness).at(1).second)));

  CheckReport vacuous = check_tl2_universal<NodeTree>(heap_spec(), {}, keys);
  CHECK(vacuous.status == Status::pass);
  CHECK(vacuous.cases_run == 0);
}

TEST_CASE("check_tl3_reachable") {
  std::vector<KeyList> lists;
  each_list(5, 4, [&](const KeyList& l) {
    lists.push_back(l);
    return true;
  });
  const KeyList keys{0, 1, 2, 3};
  CHECK(check_tl3_reachable(heap_spec(), std::span<const KeyList>(lists), keys).status == Status::pass);
  CHECK(check_tl3_reachable(bst_spec(), std::span<const KeyList>(lists), keys).status == Status::pass);
  CHECK(check_tl3_reachable(leaf_tree_spec(), std::span<const KeyList>(lists), keys).status ==
        Status::pass);

  // xs = []: reduces to to_list(ist(x, empty)) == [x].
  auto spec = heap_spec();
  CHECK(spec.to_list(spec.ist(2, spec.empty)) == KeyList{2});
}
