#include <limits>
#include <doctest.h>

#include "sortforge/check_report.hpp"
#include "sortforge/corpus.hpp"
#include "sortforge/text_format.hpp"

using namespace sortforge;

namespace {

NodeTree N(Key k, NodeTree l = {}, NodeTree r = {}) { return NodeTree::node(k, l, r); }

}  // namespace

TEST_CASE("render") {
  CHECK(render(Key{-3}) == "-3");
  CHECK(render(KeyList{}) == "[]");
  CHECK(render(KeyList{1, 2, 3}) == "[1,2,3]");
  CHECK(render(NodeTree{}) == ".");
  CHECK(render(N(1, N(3), N(2))) == "(1 (3 . .) (2 . .))");
  CHECK(render(LeafTree{}) == "_");
  CHECK(render(LeafTree::branch(LeafTree::branch(LeafTree::leaf(1), LeafTree::leaf(3)),
                                LeafTree::leaf(2))) == "{{1 3} 2}");
}

TEST_CASE("parse inverts render") {
  CHECK(parse_key("-9223372036854775808") == std::numeric_limits<Key>::min());
  CHECK(parse_key_list("[ 1, -2 ,3]") == KeyList{1, -2, 3});
  CHECK(parse_node_tree("(1 (3 . .) (2 . .))") == N(1, N(3), N(2)));
  CHECK(parse_leaf_tree("{_ 4}") == LeafTree::branch(LeafTree{}, LeafTree::leaf(4)));

  const KeyList keys{-1, 0, 7};
  each_node_tree(4, keys, [](const NodeTree& t) {
    REQUIRE(parse_node_tree(render(t)) == t);
    return true;
  });
  const auto payloads = leaf_payloads(3);
  each_leaf_tree(4, payloads, [](const LeafTree& t) {
    REQUIRE(parse_leaf_tree(render(t)) == t);
    return true;
  });
  for (const KeyList& l : random_lists(3, 100, 20, 1000)) REQUIRE(parse_key_list(render(l)) == l);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_key("1.5"), ParseError);
  CHECK_THROWS_AS(parse_key("99999999999999999999"), ParseError);
  CHECK_THROWS_AS(parse_key_list("[1,]"), ParseError);
  CHECK_THROWS_AS(parse_key_list("[1"), ParseError);
  CHECK_THROWS_AS(parse_node_tree("(1 . )"), ParseError);
  CHECK_THROWS_AS(parse_node_tree("(1 . .) ."), ParseError);
  CHECK_THROWS_AS(parse_leaf_tree("{1}"), ParseError);
  CHECK_THROWS_AS(parse_leaf_tree(""), ParseError);
}

TEST_CASE("witness fields") {
  const WitnessFields fields{{"x", "1"}, {"c", "(1 . (0 . .))"}};
  const std::string text = format_witness(fields);
  CHECK(text == "x=1; c=(1 . (0 . .))");
  CHECK(parse_witness(text) == fields);
  CHECK_THROWS_AS(parse_witness("x"), ParseError);
}
