#pragma once

#include "sortforge/trees.hpp"

namespace sortforge {

/// Sorted-list merge (the monoid operator). On equal heads the element of
/// `a` comes first. Total on unsorted input, where it simply follows its
/// clauses; the result is only guaranteed sorted when both inputs are.
KeyList merge(const KeyList& a, const KeyList& b);

/// insert(x, l) == merge({x}, l): x lands before any equal element of l.
KeyList insert(Key x, const KeyList& l);

/// Insertion sort, `foldr insert []`. The reference semantics every other
/// pipeline is compared against.
KeyList isort(const KeyList& l);

bool is_sorted(const KeyList& l);

}  // namespace sortforge
