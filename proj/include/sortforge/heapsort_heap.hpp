#pragma once

#include <tuple>

#include "sortforge/recursion.hpp"
#include "sortforge/trees.hpp"

namespace sortforge {

/// Heap insertion with subtree swap:
///   ist_h x Empty = Node x Empty Empty
///   ist_h x (Node y l r) | x < y     = Node x (ist_h y r) l
///                        | otherwise = Node y (ist_h x r) l
NodeTree ist_h(Key x, const NodeTree& t);

/// Fold with `x : (l merge r)`. Sorted when the tree is a heap.
KeyList h2list(const NodeTree& t);

/// foldr ist_h Empty.
NodeTree build_h(const KeyList& l);

/// Minimum of x:l plus the remaining elements split in two, with the
/// alternating swap of the recurrence
///   haux x []     = (x, [], [])
///   haux x (y:ys) = if x < m then (x, m:b, a) else (m, x:b, a)
///                   where (m, a, b) = haux y ys
std::tuple<Key, KeyList, KeyList> haux(Key x, const KeyList& l);

/// Literal recursive transcription of the cons-style presentation
/// `let (z,l,r) = haux y ys in if x<z then (x,z:r,l) else (z,x:r,l)`.
/// Recursion depth is |l|; meant for cross-checking haux on short lists.
std::tuple<Key, KeyList, KeyList> haux_recursive(Key x, const KeyList& l);

CoalgStepNode<KeyList> hsort_coalgebra(const KeyList& l);

NodeTree unfold_hsort(const KeyList& l);
KeyList hsort_hylo(const KeyList& l);
KeyList hsort_deforested(const KeyList& l);

/// left height - right height in {0, 1} at every node (Empty has height 0).
bool is_balanced_node_tree(const NodeTree& t);

}  // namespace sortforge
