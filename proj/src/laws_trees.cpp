#include <cstdint>
#include <functional>
#include <map>

#include "law_builder.hpp"
#include "sortforge/heapsort_heap.hpp"
#include "sortforge/mergesort_ltree.hpp"
#include "sortforge/ordered_lists.hpp"
#include "sortforge/quicksort_bst.hpp"
#include "sortforge/recursion.hpp"

namespace sortforge::laws {

namespace {

constexpr std::size_t kRoundTripMax = 10;
constexpr std::size_t kRoundTripLabelled = 5;
constexpr std::size_t kParaMaxLeaves = 15;
constexpr std::size_t kDeepInput = 100'000;

CoalgStepNode<NodeTree> node_structure(const NodeTree& t) {
  if (t.empty()) return Stop{};
  return NodeSplit<NodeTree>{t.key(), t.left(), t.right()};
}

CoalgStepLeaf<LeafTree> leaf_structure(const LeafTree& t) {
  if (t.is_leaf()) return Done{t.payload()};
  return LeafSplit<LeafTree>{t.left(), t.right()};
}

// Node-tree algebras used by the sorts, written out here independently.
KeyList heap_alg(Key x, KeyList l, KeyList r) {
  KeyList out{x};
  KeyList m = merge(l, r);
  out.insert(out.end(), m.begin(), m.end());
  return out;
}

KeyList inorder_alg(Key x, KeyList l, KeyList r) {
  l.push_back(x);
  l.insert(l.end(), r.begin(), r.end());
  return l;
}

KeyList oblivious_alg(Key x, KeyList l, KeyList r) { return merge({x}, merge(l, r)); }

KeyList leaf_alg(std::optional<Key> p) { return p ? KeyList{*p} : KeyList{}; }
KeyList branch_alg(KeyList l, KeyList r) { return merge(l, r); }

// A cheap, order- and shape-sensitive algebra: leaf count plus a
// non-commutative hash of the tree.
using Shape = std::pair<std::uint64_t, std::uint64_t>;

Shape shape_leaf(std::optional<Key> p) {
  return {1, p ? static_cast<std::uint64_t>(*p) * 0x9E3779B97F4A7C15ULL + 3 : 1};
}

Shape shape_branch(Shape l, Shape r) {
  std::uint64_t h = l.second * 0xBF58476D1CE4E5B9ULL ^ (r.second + 0x94D049BB133111EBULL);
  return {l.first + r.first, h ^ (h >> 29)};
}

using NodeAlg = KeyList (*)(Key, KeyList, KeyList);
using NodeCoalg = CoalgStepNode<KeyList> (*)(const KeyList&);

struct HyloPair {
  std::string name;
  std::function<bool(const KeyList&)> agree;
};

std::vector<HyloPair> hylo_pairs() {
  const std::vector<std::pair<std::string, NodeAlg>> algebras{
      {"h2list", heap_alg}, {"bst2list", inorder_alg}, {"bt2list", oblivious_alg}};
  const std::vector<std::pair<std::string, NodeCoalg>> coalgebras{
      {"hsort", hsort_coalgebra},
      {"qsort", qsort_coalgebra},
      {"qsort-ties-left", qsort_coalgebra_ties_left}};
  std::vector<HyloPair> out;
  out.push_back({"lt2list/msort", [](const KeyList& l) {
                   return hylo_leaf_tree(branch_alg, leaf_alg, msort_coalgebra, l) ==
                          fold_leaf_tree(branch_alg, leaf_alg,
                                         unfold_leaf_tree(msort_coalgebra, l));
                 }});
  for (const auto& [an, alg] : algebras)
    for (const auto& [cn, coalg] : coalgebras)
      out.push_back({an + "/" + cn, [alg = alg, coalg = coalg](const KeyList& l) {
                       return hylo_node_tree(alg, KeyList{}, coalg, l) ==
                              fold_node_tree(alg, KeyList{}, unfold_node_tree(coalg, l));
                     }});
  return out;
}

const std::vector<HyloPair>& pairs() {
  static const std::vector<HyloPair> p = hylo_pairs();
  return p;
}

KeyList deep_input(const std::string& kind, std::size_t n) {
  KeyList l(n);
  if (kind == "ascending") {
    for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<Key>(i);
  } else if (kind == "descending") {
    for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<Key>(n - i);
  } else if (kind == "random") {
    SplitMix64 rng(n);
    for (Key& k : l) k = static_cast<Key>(rng.next() >> 1);
  } else {
    throw ParseError("unknown input kind \"" + kind + "\"");
  }
  return l;
}

bool survives(const std::string& coalgebra, const KeyList& l) {
  try {
    if (coalgebra == "msort") return unfold_msort(l).leaf_count() == std::max<std::size_t>(l.size(), 1);
    if (coalgebra == "hsort") return unfold_hsort(l).size() == l.size();
    if (coalgebra == "qsort") return unfold_qsort(l).size() == l.size();
    if (coalgebra == "qsort-ties-left")
      return unfold_node_tree(qsort_coalgebra_ties_left, l).size() == l.size();
    if (coalgebra == "structural") {
      // A right spine of height |l|, unfolded from itself.
      NodeTree spine;
      for (auto it = l.rbegin(); it != l.rend(); ++it) spine = NodeTree::node(*it, {}, spine);
      return unfold_node_tree(node_structure, spine) == spine;
    }
  } catch (const DivergenceError&) {
    return false;
  }
  throw ParseError("unknown coalgebra \"" + coalgebra + "\"");
}

}  // namespace

void register_tree_laws(std::vector<Law>& out) {
  out.push_back(make_law(LawSpec<NodeTree>{
      .id = "roundtrip:node-tree",
      .description = "unfolding the structural coalgebra of t rebuilds t (every shape <= 10 nodes, "
                     "all labellings <= 5 nodes)",
      .names = {"t"},
      .cases =
          [](const CorpusConfig& config, const Sink<NodeTree>& sink) {
            const KeyList zero{0};
            bool go = each_node_tree(kRoundTripMax, zero, [&](const NodeTree& shape) {
              return sink(relabel_preorder(shape, config.alphabet_size));
            });
            if (!go) return;
            const KeyList keys = alphabet(config.alphabet_size);
            each_node_tree(kRoundTripLabelled, keys, sink);
          },
      .body = [](const NodeTree& t) { return unfold_node_tree(node_structure, t) == t; },
  }));

  out.push_back(make_law(LawSpec<LeafTree>{
      .id = "roundtrip:leaf-tree",
      .description = "unfolding the structural coalgebra of t rebuilds t (every shape <= 10 leaves, "
                     "all payloads <= 5 leaves)",
      .names = {"t"},
      .cases =
          [](const CorpusConfig& config, const Sink<LeafTree>& sink) {
            const std::vector<std::optional<Key>> zero{Key{0}};
            bool go = each_leaf_tree(kRoundTripMax, zero, [&](const LeafTree& shape) {
              return sink(relabel_leaves(shape, config.alphabet_size));
            });
            if (!go) return;
            const auto payloads = leaf_payloads(config.alphabet_size);
            each_leaf_tree(kRoundTripLabelled, payloads, sink);
          },
      .body = [](const LeafTree& t) { return unfold_leaf_tree(leaf_structure, t) == t; },
  }));

  out.push_back(make_law(LawSpec<std::string, KeyList>{
      .id = "hylo:composition",
      .description = "hylo(alg, coalg, l) == fold(alg, unfold(coalg, l)) for every algebra and "
                     "coalgebra pair, exhaustive lists",
      .names = {"pair", "l"},
      .cases =
          [](const CorpusConfig& config, const Sink<std::string, KeyList>& sink) {
            for (const auto& p : pairs()) {
              bool go = each_list(config.max_len, config.alphabet_size,
                                  [&](const KeyList& l) { return sink(p.name, l); });
              if (!go) return;
            }
          },
      .body =
          [](const std::string& name, const KeyList& l) {
            for (const auto& p : pairs())
              if (p.name == name) return p.agree(l);
            throw ParseError("unknown algebra/coalgebra pair \"" + name + "\"");
          },
  }));

  out.push_back(make_law(LawSpec<LeafTree>{
      .id = "para:subsumes-fold",
      .description = "fold(f, g, t) == para((l,l',r,r') -> f(l',r'), g, t), every shape <= 15 leaves",
      .names = {"t"},
      .cases =
          [](const CorpusConfig&, const Sink<LeafTree>& sink) {
            const std::vector<std::optional<Key>> one{Key{1}};
            each_leaf_tree(kParaMaxLeaves, one, sink);
          },
      .body =
          [](const LeafTree& t) {
            auto para = para_leaf_tree(
                [](const LeafTree&, Shape l, const LeafTree&, Shape r) {
                  return shape_branch(l, r);
                },
                shape_leaf, t);
            return fold_leaf_tree(shape_branch, shape_leaf, t) == para;
          },
  }));

  out.push_back(make_law(LawSpec<std::string, std::string, Key>{
      .id = "depth-bound:large-input",
      .description = "no coalgebra hits the depth limit on inputs of length 10^5",
      .names = {"coalgebra", "input", "n"},
      .cases =
          [](const CorpusConfig&, const Sink<std::string, std::string, Key>& sink) {
            const auto n = static_cast<Key>(kDeepInput);
            const std::vector<std::pair<std::string, std::string>> runs{
                {"msort", "ascending"},     {"msort", "descending"}, {"msort", "random"},
                {"hsort", "ascending"},     {"hsort", "descending"}, {"hsort", "random"},
                {"qsort", "random"},        {"qsort", "ascending"},  {"qsort-ties-left", "random"},
                {"structural", "ascending"}};
            for (const auto& [coalgebra, input] : runs)
              if (!sink(coalgebra, input, n)) return;
          },
      .body =
          [](const std::string& coalgebra, const std::string& input, Key n) {
            if (n < 0) throw ParseError("negative length");
            return survives(coalgebra, deep_input(input, static_cast<std::size_t>(n)));
          },
  }));
}

}  // namespace sortforge::laws
