#include <doctest.h>

#include "sortforge/invariants.hpp"
#include "sortforge/text_format.hpp"

using namespace sortforge;

namespace {

NodeTree N(Key k, NodeTree l = {}, NodeTree r = {}) { return NodeTree::node(k, l, r); }

}  // namespace

TEST_CASE("all_list") {
  auto below5 = KeyPredicate::less_than(5);
  CHECK(all_list(below5, {}));
  CHECK(all_list(below5, {1, 4}));
  CHECK_FALSE(all_list(below5, {1, 7}));
}

TEST_CASE("all_tree") {
  const NodeTree t = N(3, N(1));
  CHECK(all_tree(KeyPredicate::at_least(1), {}));
  CHECK(all_tree(KeyPredicate::at_least(1), t));
  CHECK_FALSE(all_tree(KeyPredicate::at_least(2), t));
}

TEST_CASE("is_bst") {
  CHECK(is_bst({}));
  CHECK(is_bst(N(2, N(1), N(2))));
  CHECK_FALSE(is_bst(N(1, N(2))));
  CHECK_FALSE(is_bst(N(2, N(2))));              // ties may not go left
  CHECK_FALSE(is_bst(N(5, N(1, {}, N(7)))));    // deep violation
}

TEST_CASE("is_heap") {
  CHECK(is_heap({}));
  CHECK(is_heap(N(1, N(3), N(2))));
  CHECK_FALSE(is_heap(N(2, N(1))));
  CHECK(is_heap(N(1, {}, N(1, N(4)))));          // no shape constraint
}

TEST_CASE("bt2list") {
  CHECK(bt2list({}) == KeyList{});
  CHECK(bt2list(N(2, N(3), N(1))) == KeyList{1, 2, 3});
  CHECK(bt2list(N(5)) == KeyList{5});
}

TEST_CASE("KeyPredicate names round-trip") {
  for (const auto& p : {KeyPredicate::less_than(-2), KeyPredicate::at_most(3),
                        KeyPredicate::greater_than(0), KeyPredicate::at_least(7)}) {
    KeyPredicate q = KeyPredicate::parse(p.name);
    CHECK(q.name == p.name);
    for (Key k = -4; k < 10; ++k) CHECK(q(k) == p(k));
  }
  CHECK(KeyPredicate::less_than(2).name == "(<2)");
  CHECK(KeyPredicate::at_least(2)(2));
  CHECK_FALSE(KeyPredicate::greater_than(2)(2));
  CHECK_THROWS(KeyPredicate::parse("(=2)"));
  CHECK_THROWS(KeyPredicate::parse("<2"));
}
