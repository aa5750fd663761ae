#pragma once

#include <span>
#include <utility>

#include "sortforge/recursion.hpp"
#include "sortforge/trees.hpp"

namespace sortforge {

/// Unbalanced BST insertion; ties go right.
///   ist_bst x Empty = Node x Empty Empty
///   ist_bst x (Node y l r) | x < y     = Node y (ist_bst x l) r
///                          | otherwise = Node y l (ist_bst x r)
NodeTree ist_bst(Key x, const NodeTree& t);

/// In-order traversal as a fold with `l ++ (x : r)`.
KeyList bst2list(const NodeTree& t);

/// Inserts the elements of `xs` into `t` from left to right.
NodeTree b_acc(const KeyList& xs, NodeTree t);

/// b_acc(l, Empty).
NodeTree build_bst(const KeyList& l);

/// Order-preserving partition around a pivot, ties to the left:
/// (elements <= x, elements > x). This is the partition of the deforested
/// quicksort.
std::pair<KeyList, KeyList> qaux(Key x, std::span<const Key> l);

/// Order-preserving partition matching ist_bst's tie rule:
/// (elements < x, elements >= x).
std::pair<KeyList, KeyList> partition_strict(Key x, std::span<const Key> l);

/// Pivot coalgebra over partition_strict: [] -> Stop,
/// x:xs -> Split(x, below, at-or-above).
CoalgStepNode<KeyList> qsort_coalgebra(const KeyList& l);

/// Pivot coalgebra over qaux (ties left). Does not reproduce build_bst on
/// inputs with duplicates; kept so the mismatch can be checked.
CoalgStepNode<KeyList> qsort_coalgebra_ties_left(const KeyList& l);

NodeTree unfold_qsort(const KeyList& l);
KeyList qsort_hylo(const KeyList& l);
/// `qsort l ++ x : qsort r` with (l, r) = qaux x xs, on an explicit stack.
KeyList qsort_deforested(const KeyList& l);

}  // namespace sortforge
