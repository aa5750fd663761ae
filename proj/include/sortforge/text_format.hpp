#pragma once

// Canonical text forms used in witnesses, reports and the Python bindings.
//
//   key       decimal int64, e.g. -3
//   KeyList   [1,2,3]         ([] when empty)
//   NodeTree  .               Empty
//             (k L R)         Node k L R,  e.g. (1 (3 . .) (2 . .))
//   LeafTree  _               Leaf Nothing
//             k               Leaf (Just k)
//             {L R}           Branch L R,  e.g. {{1 3} 2}

#include <stdexcept>
#include <string>
#include <string_view>

#include "sortforge/trees.hpp"

namespace sortforge {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string render(Key k);
std::string render(const KeyList& l);
std::string render(const NodeTree& t);
std::string render(const LeafTree& t);

Key parse_key(std::string_view text);
KeyList parse_key_list(std::string_view text);
NodeTree parse_node_tree(std::string_view text);
LeafTree parse_leaf_tree(std::string_view text);

}  // namespace sortforge
