#include "sortforge/invariants.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sortforge/ordered_lists.hpp"
#include "sortforge/recursion.hpp"
#include "sortforge/text_format.hpp"

namespace sortforge {

KeyPredicate KeyPredicate::less_than(Key k) {
  return {"(<" + std::to_string(k) + ")", [k](Key y) { return y < k; }};
}

KeyPredicate KeyPredicate::at_most(Key k) {
  return {"(<=" + std::to_string(k) + ")", [k](Key y) { return y <= k; }};
}

KeyPredicate KeyPredicate::greater_than(Key k) {
  return {"(>" + std::to_string(k) + ")", [k](Key y) { return y > k; }};
}

KeyPredicate KeyPredicate::at_least(Key k) {
  return {"(>=" + std::to_string(k) + ")", [k](Key y) { return y >= k; }};
}

KeyPredicate KeyPredicate::parse(const std::string& name) {
  if (name.size() < 4 || name.front() != '(' || name.back() != ')')
    throw ParseError("malformed predicate \"" + name + "\"");
  std::string body = name.substr(1, name.size() - 2);
  for (auto [op, make] : {std::pair{"<=", &KeyPredicate::at_most},
                          std::pair{">=", &KeyPredicate::at_least},
                          std::pair{"<", &KeyPredicate::less_than},
                          std::pair{">", &KeyPredicate::greater_than}}) {
    std::string prefix = op;
    if (body.rfind(prefix, 0) == 0) return make(parse_key(body.substr(prefix.size())));
  }
  throw ParseError("unknown predicate operator in \"" + name + "\"");
}

bool all_list(const KeyPredicate& p, const KeyList& l) {
  return std::all_of(l.begin(), l.end(), [&p](Key k) { return p(k); });
}

bool all_tree(const KeyPredicate& p, const NodeTree& t) {
  std::vector<const NodeTree*> work{&t};
  while (!work.empty()) {
    const NodeTree* n = work.back();
    work.pop_back();
    if (n->empty()) continue;
    if (!p(n->key())) return false;
    work.push_back(&n->left());
    work.push_back(&n->right());
  }
  return true;
}

bool is_bst(const NodeTree& t) {
  // Each key must lie in [low, high) inherited from its ancestors.
  struct Frame {
    const NodeTree* tree;
    std::optional<Key> low;
    std::optional<Key> high;
  };
  std::vector<Frame> work{{&t, std::nullopt, std::nullopt}};
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    if (f.tree->empty()) continue;
    Key k = f.tree->key();
    if (f.low && k < *f.low) return false;
    if (f.high && k >= *f.high) return false;
    work.push_back({&f.tree->left(), f.low, k});
    work.push_back({&f.tree->right(), k, f.high});
  }
  return true;
}

bool is_heap(const NodeTree& t) {
  std::vector<const NodeTree*> work{&t};
  while (!work.empty()) {
    const NodeTree* n = work.back();
    work.pop_back();
    if (n->empty()) continue;
    for (const NodeTree* child : {&n->left(), &n->right()}) {
      if (child->empty()) continue;
      if (child->key() < n->key()) return false;
      work.push_back(child);
    }
  }
  return true;
}

KeyList bt2list(const NodeTree& t) {
  return fold_node_tree([](Key x, KeyList l, KeyList r) { return merge(KeyList{x}, merge(l, r)); },
                        KeyList{}, t);
}

}  // namespace sortforge
