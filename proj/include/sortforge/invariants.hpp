#pragma once

#include <functional>
#include <string>

#include "sortforge/trees.hpp"

namespace sortforge {

/// A named, pure predicate on keys. The name is the section it stands
/// for, e.g. "(<2)" holds for keys below 2.
struct KeyPredicate {
  std::string name;
  std::function<bool(Key)> test;

  bool operator()(Key k) const { return test(k); }

  static KeyPredicate less_than(Key k);
  static KeyPredicate at_most(Key k);
  static KeyPredicate greater_than(Key k);
  static KeyPredicate at_least(Key k);
  /// Accepts the names produced above: (<k) (<=k) (>k) (>=k).
  static KeyPredicate parse(const std::string& name);
};

bool all_list(const KeyPredicate& p, const KeyList& l);
bool all_tree(const KeyPredicate& p, const NodeTree& t);

/// Left subtree keys < node key <= right subtree keys, at every node.
bool is_bst(const NodeTree& t);

/// Every key <= all keys below it (min-heap order, no shape constraint).
bool is_heap(const NodeTree& t);

/// Order-oblivious conversion, fold with `[x] merge (l merge r)`. Always
/// sorted, whatever the tree.
KeyList bt2list(const NodeTree& t);

}  // namespace sortforge
