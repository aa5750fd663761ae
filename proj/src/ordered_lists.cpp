#include "sortforge/ordered_lists.hpp"

#include <algorithm>

namespace sortforge {

KeyList merge(const KeyList& a, const KeyList& b) {
  KeyList out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i <= *j) {
      out.push_back(*i++);
    } else {
      out.push_back(*j++);
    }
  }
  out.insert(out.end(), i, a.end());
  out.insert(out.end(), j, b.end());
  return out;
}

KeyList insert(Key x, const KeyList& l) { return merge(KeyList{x}, l); }

KeyList isort(const KeyList& l) {
  KeyList acc;
  for (auto it = l.rbegin(); it != l.rend(); ++it) acc = insert(*it, acc);
  return acc;
}

bool is_sorted(const KeyList& l) {
  return std::adjacent_find(l.begin(), l.end(), [](Key a, Key b) { return a > b; }) == l.end();
}

}  // namespace sortforge
