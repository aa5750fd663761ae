#pragma once

#include <utility>

#include "sortforge/recursion.hpp"
#include "sortforge/trees.hpp"

namespace sortforge {

/// Insert into a leaf tree, swapping subtrees on the way down:
///   ist_lt x (Leaf Nothing)  = Leaf x
///   ist_lt x (Leaf y)        = Branch (Leaf x) (Leaf y)
///   ist_lt x (Branch l r)    = Branch (ist_lt x r) l
LeafTree ist_lt(Key x, const LeafTree& t);

/// The istLT paramorphism algebra for a fixed x; para_leaf_tree with it
/// agrees with ist_lt(x, .).
LeafTree ist_lt_para(Key x, const LeafTree& t);

KeyList lt2list(const LeafTree& t);

/// foldr ist_lt (Leaf Nothing).
LeafTree build_lt(const KeyList& l);

/// Alternating split: even positions first, odd positions second.
std::pair<KeyList, KeyList> maux(const KeyList& l);

/// The merge-sort coalgebra: [] -> Done Nothing, [x] -> Done x,
/// otherwise Split over maux.
CoalgStepLeaf<KeyList> msort_coalgebra(const KeyList& l);

LeafTree unfold_msort(const KeyList& l);
KeyList msort_hylo(const KeyList& l);
KeyList msort_deforested(const KeyList& l);

/// left height - right height in {0, 1} at every branch.
bool is_balanced_lt(const LeafTree& t);

}  // namespace sortforge
