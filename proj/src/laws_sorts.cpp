#include <algorithm>
#include <tuple>

#include "law_builder.hpp"
#include "sortforge/generic_sort.hpp"
#include "sortforge/heapsort_heap.hpp"
#include "sortforge/mergesort_ltree.hpp"
#include "sortforge/ordered_lists.hpp"
#include "sortforge/quicksort_bst.hpp"

namespace sortforge::laws {

namespace {

constexpr std::size_t kTl2LeafMax = 5;
constexpr std::size_t kTl2NodeMax = 4;
constexpr std::size_t kBaccTreeMax = 4;
constexpr std::size_t kBaccListMax = 5;

template <class C>
struct ContainerCodec;

template <>
struct ContainerCodec<LeafTree> {
  static LeafTree parse(const std::string& s) { return parse_leaf_tree(s); }
};

template <>
struct ContainerCodec<NodeTree> {
  static NodeTree parse(const std::string& s) { return parse_node_tree(s); }
};

const std::string& field(const WitnessFields& fields, const std::string& name) {
  for (const auto& [k, v] : fields)
    if (k == name) return v;
  throw ParseError("witness is missing field \"" + name + "\"");
}

template <class C>
Law tl1_law(ContainerSpec<C> spec) {
  Law law;
  law.id = "tl1:" + spec.name;
  law.description = "to_list(empty) == [] for the " + spec.name + " container";
  law.run = [spec](const CorpusConfig&) { return check_tl1(spec); };
  law.violates = [spec](const WitnessFields&) { return !spec.to_list(spec.empty).empty(); };
  return law;
}

template <class C>
Law tl2_law(ContainerSpec<C> spec, std::function<std::vector<C>(const CorpusConfig&)> corpus,
            Expectation expect, std::string corpus_text) {
  Law law;
  law.id = "tl2-universal:" + spec.name;
  law.description = "to_list(ist(x, c)) == insert(x, to_list(c)) for every " + corpus_text;
  law.expect = expect;
  law.run = [spec, corpus](const CorpusConfig& config) {
    const std::vector<C> containers = corpus(config);
    const KeyList keys = alphabet(config.alphabet_size);
    return check_tl2_universal<C>(spec, containers, keys);
  };
  law.violates = [spec](const WitnessFields& fields) {
    const Key x = parse_key(field(fields, "x"));
    const C c = ContainerCodec<C>::parse(field(fields, "c"));
    return spec.to_list(spec.ist(x, c)) != insert(x, spec.to_list(c));
  };
  return law;
}

template <class C>
Law tl3_law(ContainerSpec<C> spec) {
  Law law;
  law.id = "tl3-reachable:" + spec.name;
  law.description = "tl2 restricted to containers built from xs, full list corpus";
  law.run = [spec](const CorpusConfig& config) {
    const std::vector<KeyList> lists = list_corpus(config);
    const KeyList keys = alphabet(config.alphabet_size);
    return check_tl3_reachable<C>(spec, lists, keys);
  };
  law.violates = [spec](const WitnessFields& fields) {
    const Key x = parse_key(field(fields, "x"));
    const C built = build_right_to_left(spec, parse_key_list(field(fields, "xs")));
    return spec.to_list(spec.ist(x, built)) != insert(x, spec.to_list(built));
  };
  return law;
}

template <class C>
Law scheme_law(ContainerSpec<C> spec) {
  return make_law(LawSpec<KeyList>{
      .id = "scheme:" + spec.name,
      .description = "isort_container == isort == isort_container_acc, full list corpus",
      .names = {"l"},
      .cases = [](const CorpusConfig& config,
                  const Sink<KeyList>& sink) { for_list_corpus(config, sink); },
      .body =
          [spec](const KeyList& l) {
            const KeyList want = isort(l);
            return isort_container(spec, l) == want && isort_container_acc(spec, l) == want;
          },
  });
}

Enumerator<KeyList> list_cases() {
  return [](const CorpusConfig& config, const Sink<KeyList>& sink) {
    for_list_corpus(config, sink);
  };
}

// Small node trees with every labelling, each paired with every key.
Enumerator<Key, NodeTree> tree_key_cases() {
  return [](const CorpusConfig& config, const Sink<Key, NodeTree>& sink) {
    const KeyList keys = alphabet(config.alphabet_size);
    each_node_tree(kLemmaTreeNodes, keys, [&](const NodeTree& t) {
      for (Key x : keys)
        if (!sink(x, t)) return false;
      return true;
    });
  };
}

std::vector<NodeTree> node_trees(const CorpusConfig& config) {
  std::vector<NodeTree> out;
  const KeyList keys = alphabet(config.alphabet_size);
  each_node_tree(kTl2NodeMax, keys, [&](const NodeTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

std::vector<LeafTree> leaf_trees(const CorpusConfig& config) {
  std::vector<LeafTree> out;
  const auto payloads = leaf_payloads(config.alphabet_size);
  each_leaf_tree(kTl2LeafMax, payloads, [&](const LeafTree& t) {
    out.push_back(t);
    return true;
  });
  return out;
}

void register_generic(std::vector<Law>& out) {
  out.push_back(tl1_law(leaf_tree_spec()));
  out.push_back(tl1_law(heap_spec()));
  out.push_back(tl1_law(bst_spec()));

  out.push_back(tl2_law<LeafTree>(leaf_tree_spec(), leaf_trees, Expectation::holds,
                                  "leaf tree with <= 5 leaves"));
  out.push_back(tl2_law<NodeTree>(heap_spec(), node_trees, Expectation::counterexample,
                                  "node tree with <= 4 nodes (a non-heap breaks it)"));
  out.push_back(tl2_law<NodeTree>(bst_spec(), node_trees, Expectation::counterexample,
                                  "node tree with <= 4 nodes (a non-BST breaks it)"));
  out.push_back(tl2_law<NodeTree>(heap_bt_spec(), node_trees, Expectation::holds,
                                  "node tree with <= 4 nodes"));
  out.push_back(tl2_law<NodeTree>(bst_bt_spec(), node_trees, Expectation::holds,
                                  "node tree with <= 4 nodes"));

  out.push_back(tl3_law(leaf_tree_spec()));
  out.push_back(tl3_law(heap_spec()));
  out.push_back(tl3_law(bst_spec()));

  out.push_back(scheme_law(leaf_tree_spec()));
  out.push_back(scheme_law(heap_spec()));
  out.push_back(scheme_law(bst_spec()));
}

void register_msort(std::vector<Law>& out) {
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "build-equiv:msort",
      .description = "build_lt(l) == unfold_msort(l) structurally",
      .names = {"l"},
      .cases = list_cases(),
      .body = [](const KeyList& l) { return build_lt(l) == unfold_msort(l); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "balance:ltree",
      .description = "left height - right height in {0,1} at every branch of build_lt(l)",
      .names = {"l"},
      .cases = list_cases(),
      .body = [](const KeyList& l) { return is_balanced_lt(build_lt(l)); },
  }));
  out.push_back(make_law(LawSpec<Key, LeafTree>{
      .id = "para-form:ist-lt",
      .description = "ist_lt(x, t) == its paramorphism form, leaf trees <= 5 leaves",
      .names = {"x", "t"},
      .cases =
          [](const CorpusConfig& config, const Sink<Key, LeafTree>& sink) {
            const KeyList keys = alphabet(config.alphabet_size);
            const auto payloads = leaf_payloads(config.alphabet_size);
            each_leaf_tree(kTl2LeafMax, payloads, [&](const LeafTree& t) {
              for (Key x : keys)
                if (!sink(x, t)) return false;
              return true;
            });
          },
      .body = [](Key x, const LeafTree& t) { return ist_lt(x, t) == ist_lt_para(x, t); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "end-to-end:msort",
      .description = "lt2list(build_lt l) == lt2list(unfold_msort l) == msort_hylo == "
                     "msort_deforested == isort",
      .names = {"l"},
      .cases = list_cases(),
      .body =
          [](const KeyList& l) {
            const KeyList want = isort(l);
            return lt2list(build_lt(l)) == want && lt2list(unfold_msort(l)) == want &&
                   msort_hylo(l) == want && msort_deforested(l) == want;
          },
  }));
}

void register_hsort(std::vector<Law>& out) {
  out.push_back(make_law(LawSpec<Key, NodeTree>{
      .id = "heap:preservation",
      .description = "HEAP(t) implies HEAP(ist_h(x, t)), trees <= 5 nodes",
      .names = {"x", "t"},
      .cases = tree_key_cases(),
      .pre = [](const Key&, const NodeTree& t) { return is_heap(t); },
      .body = [](Key x, const NodeTree& t) { return is_heap(ist_h(x, t)); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "heap:build",
      .description = "HEAP(build_h(l))",
      .names = {"l"},
      .cases = list_cases(),
      .body = [](const KeyList& l) { return is_heap(build_h(l)); },
  }));
  out.push_back(make_law(LawSpec<Key, NodeTree>{
      .id = "homomorphism-restricted:heap",
      .description = "HEAP(t) implies insert(x, h2list t) == h2list(ist_h(x, t)), trees <= 5 nodes",
      .names = {"x", "t"},
      .cases = tree_key_cases(),
      .pre = [](const Key&, const NodeTree& t) { return is_heap(t); },
      .body = [](Key x, const NodeTree& t) { return insert(x, h2list(t)) == h2list(ist_h(x, t)); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "build-equiv:hsort",
      .description = "build_h(l) == unfold_hsort(l) structurally",
      .names = {"l"},
      .cases = list_cases(),
      .body = [](const KeyList& l) { return build_h(l) == unfold_hsort(l); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "balance:heap",
      .description = "left height - right height in {0,1} at every node of build_h(l)",
      .names = {"l"},
      .cases = list_cases(),
      .body = [](const KeyList& l) { return is_balanced_node_tree(build_h(l)); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "end-to-end:hsort",
      .description = "h2list(build_h l) == h2list(unfold_hsort l) == hsort_hylo == "
                     "hsort_deforested == isort",
      .names = {"l"},
      .cases = list_cases(),
      .body =
          [](const KeyList& l) {
            const KeyList want = isort(l);
            return h2list(build_h(l)) == want && h2list(unfold_hsort(l)) == want &&
                   hsort_hylo(l) == want && hsort_deforested(l) == want;
          },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "haux:forms-agree",
      .description = "the (m,a,b) and (z,l,r) presentations of haux agree on x:xs",
      .names = {"l"},
      .cases = list_cases(),
      .pre = [](const KeyList& l) { return !l.empty(); },
      .body =
          [](const KeyList& l) {
            const KeyList tail(l.begin() + 1, l.end());
            return haux(l.front(), tail) == haux_recursive(l.front(), tail);
          },
  }));
}

void register_qsort(std::vector<Law>& out) {
  out.push_back(make_law(LawSpec<Key, NodeTree>{
      .id = "bst:preservation",
      .description = "BST(t) implies BST(ist_bst(x, t)), trees <= 5 nodes",
      .names = {"x", "t"},
      .cases = tree_key_cases(),
      .pre = [](const Key&, const NodeTree& t) { return is_bst(t); },
      .body = [](Key x, const NodeTree& t) { return is_bst(ist_bst(x, t)); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "bst:build",
      .description = "BST(build_bst(l))",
      .names = {"l"},
      .cases = list_cases(),
      .body = [](const KeyList& l) { return is_bst(build_bst(l)); },
  }));
  out.push_back(make_law(LawSpec<Key, NodeTree>{
      .id = "homomorphism-restricted:bst",
      .description =
          "BST(t) implies insert(x, bst2list t) == bst2list(ist_bst(x, t)), trees <= 5 nodes",
      .names = {"x", "t"},
      .cases = tree_key_cases(),
      .pre = [](const Key&, const NodeTree& t) { return is_bst(t); },
      .body =
          [](Key x, const NodeTree& t) { return insert(x, bst2list(t)) == bst2list(ist_bst(x, t)); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "build-equiv:qsort",
      .description = "build_bst(l) == unfold_qsort(l) structurally (partition: < left, >= right)",
      .names = {"l"},
      .cases = list_cases(),
      .body = [](const KeyList& l) { return build_bst(l) == unfold_qsort(l); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "build-equiv:qsort-ties-left",
      .description = "build_bst(l) == unfold over qaux (<= left); breaks on duplicates",
      .expect = Expectation::counterexample,
      .names = {"l"},
      .cases = list_cases(),
      .body =
          [](const KeyList& l) {
            return build_bst(l) == unfold_node_tree(qsort_coalgebra_ties_left, l);
          },
  }));
  out.push_back(make_law(LawSpec<KeyList, NodeTree>{
      .id = "bacc:strengthened",
      .description = "b_acc(xs, Node x l r) == Node x (b_acc a l) (b_acc b r), (a, b) the "
                     "partition of xs around x; trees <= 4 nodes, lists <= 5",
      .names = {"xs", "t"},
      .cases =
          [](const CorpusConfig& config, const Sink<KeyList, NodeTree>& sink) {
            const KeyList keys = alphabet(config.alphabet_size);
            std::vector<NodeTree> trees;
            each_node_tree(kBaccTreeMax, keys, [&](const NodeTree& t) {
              if (!t.empty()) trees.push_back(t);
              return true;
            });
            for (const NodeTree& t : trees) {
              bool go = each_list(kBaccListMax, config.alphabet_size,
                                  [&](const KeyList& xs) { return sink(xs, t); });
              if (!go) return;
            }
          },
      .pre = [](const KeyList&, const NodeTree& t) { return !t.empty(); },
      .body =
          [](const KeyList& xs, const NodeTree& t) {
            auto [a, b] = partition_strict(t.key(), xs);
            return b_acc(xs, t) == NodeTree::node(t.key(), b_acc(a, t.left()), b_acc(b, t.right()));
          },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "end-to-end:qsort",
      .description = "bst2list(build_bst l) == bst2list(unfold_qsort l) == qsort_hylo == "
                     "qsort_deforested == isort",
      .names = {"l"},
      .cases = list_cases(),
      .body =
          [](const KeyList& l) {
            const KeyList want = isort(l);
            return bst2list(build_bst(l)) == want && bst2list(unfold_qsort(l)) == want &&
                   qsort_hylo(l) == want && qsort_deforested(l) == want;
          },
  }));
}

}  // namespace

void register_sort_laws(std::vector<Law>& out) {
  register_generic(out);
  register_msort(out);
  register_hsort(out);
  register_qsort(out);
}

}  // namespace sortforge::laws
