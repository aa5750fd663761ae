#include <algorithm>

#include "law_builder.hpp"
#include "sortforge/heapsort_heap.hpp"
#include "sortforge/ordered_lists.hpp"
#include "sortforge/quicksort_bst.hpp"

namespace sortforge::laws {

namespace {

KeyList concat(KeyList a, const KeyList& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

KeyList cons(Key x, const KeyList& l) {
  KeyList out{x};
  out.insert(out.end(), l.begin(), l.end());
  return out;
}

// Keys worth trying against a case: the alphabet, widened to one past the
// largest key that occurs in it.
KeyList keys_around(const CorpusConfig& config, Key largest) {
  const Key top = std::max<Key>(static_cast<Key>(config.alphabet_size), largest + 2);
  KeyList keys;
  for (Key k = 0; k < top; ++k) keys.push_back(k);
  return keys;
}

Key largest_in(const KeyList& l) { return l.empty() ? 0 : *std::max_element(l.begin(), l.end()); }

Key largest_in(const NodeTree& t) {
  Key m = 0;
  for (Key k : bst2list(t)) m = std::max(m, k);
  return m;
}

// Every split l = l1 ++ l2 of every lemma list.
Enumerator<KeyList, KeyList> split_cases() {
  return [](const CorpusConfig& config, const Sink<KeyList, KeyList>& sink) {
    for_lemma_lists(config, [&](const KeyList& l) {
      for (std::size_t i = 0; i <= l.size(); ++i) {
        KeyList l1(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i));
        KeyList l2(l.begin() + static_cast<std::ptrdiff_t>(i), l.end());
        if (!sink(l1, l2)) return false;
      }
      return true;
    });
  };
}

// (x, l1, l2) over every split and every key around the list.
Enumerator<Key, KeyList, KeyList> key_split_cases() {
  return [](const CorpusConfig& config, const Sink<Key, KeyList, KeyList>& sink) {
    for_lemma_lists(config, [&](const KeyList& l) {
      const KeyList keys = keys_around(config, largest_in(l));
      for (std::size_t i = 0; i <= l.size(); ++i) {
        KeyList l1(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i));
        KeyList l2(l.begin() + static_cast<std::ptrdiff_t>(i), l.end());
        for (Key x : keys)
          if (!sink(x, l1, l2)) return false;
      }
      return true;
    });
  };
}

Enumerator<Key, KeyList> key_list_cases() {
  return [](const CorpusConfig& config, const Sink<Key, KeyList>& sink) {
    for_lemma_lists(config, [&](const KeyList& l) {
      for (Key x : keys_around(config, largest_in(l)))
        if (!sink(x, l)) return false;
      return true;
    });
  };
}

// (x, l1, y, l2) with y an element of a lemma list and l1, l2 its sides.
Enumerator<Key, KeyList, Key, KeyList> pivot_cases() {
  return [](const CorpusConfig& config, const Sink<Key, KeyList, Key, KeyList>& sink) {
    for_lemma_lists(config, [&](const KeyList& l) {
      const KeyList keys = keys_around(config, largest_in(l));
      for (std::size_t i = 0; i < l.size(); ++i) {
        KeyList l1(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(i));
        KeyList l2(l.begin() + static_cast<std::ptrdiff_t>(i) + 1, l.end());
        for (Key x : keys)
          if (!sink(x, l1, l[i], l2)) return false;
      }
      return true;
    });
  };
}

Enumerator<KeyPredicate, KeyList, KeyList> predicate_split_cases() {
  return [](const CorpusConfig& config, const Sink<KeyPredicate, KeyList, KeyList>& sink) {
    const auto family = predicate_family(config.alphabet_size);
    split_cases()(config, [&](const KeyList& l1, const KeyList& l2) {
      for (const auto& p : family)
        if (!sink(p, l1, l2)) return false;
      return true;
    });
  };
}

Enumerator<KeyPredicate, NodeTree> predicate_tree_cases() {
  return [](const CorpusConfig& config, const Sink<KeyPredicate, NodeTree>& sink) {
    const auto family = predicate_family(config.alphabet_size);
    for_lemma_trees(config, [&](const NodeTree& t) {
      for (const auto& p : family)
        if (!sink(p, t)) return false;
      return true;
    });
  };
}

Enumerator<KeyPredicate, Key, NodeTree> predicate_key_tree_cases() {
  return [](const CorpusConfig& config, const Sink<KeyPredicate, Key, NodeTree>& sink) {
    const auto family = predicate_family(config.alphabet_size);
    for_lemma_trees(config, [&](const NodeTree& t) {
      const KeyList keys = keys_around(config, largest_in(t));
      for (const auto& p : family)
        for (Key x : keys)
          if (!sink(p, x, t)) return false;
      return true;
    });
  };
}

Enumerator<NodeTree> tree_cases() {
  return [](const CorpusConfig& config, const Sink<NodeTree>& sink) {
    for_lemma_trees(config, sink);
  };
}

// p implies q on every key the corpora can produce, and one either side.
bool implies_pointwise(const KeyPredicate& p, const KeyPredicate& q, Key bound) {
  for (Key k = -1; k <= bound; ++k)
    if (p(k) && !q(k)) return false;
  return true;
}

void register_app_props(std::vector<Law>& out) {
  const auto app1_body = [](Key x, const KeyList& l1, Key y, const KeyList& l2) {
    return insert(x, concat(concat(l1, {y}), l2)) == concat(concat(insert(x, l1), {y}), l2);
  };
  out.push_back(make_law(LawSpec<Key, KeyList, Key, KeyList>{
      .id = "app-props:1",
      .description = "x < y implies insert(x, l1 ++ [y] ++ l2) == insert(x, l1) ++ [y] ++ l2, "
                     "sorted l1 ++ [y] ++ l2",
      .names = {"x", "l1", "y", "l2"},
      .cases = pivot_cases(),
      .pre =
          [](const Key& x, const KeyList& l1, const Key& y, const KeyList& l2) {
            return x < y && is_sorted(concat(concat(l1, {y}), l2));
          },
      .body = app1_body,
  }));
  out.push_back(make_law(LawSpec<Key, KeyList, Key, KeyList>{
      .id = "app-props:1-unsorted",
      .description = "app-props:1 without the sortedness hypothesis",
      .names = {"x", "l1", "y", "l2"},
      .cases = pivot_cases(),
      .pre = [](const Key& x, const KeyList&, const Key& y, const KeyList&) { return x < y; },
      .body = app1_body,
  }));

  const auto app2_body = [](Key x, const KeyList& l1, const KeyList& l2) {
    return insert(x, concat(l1, l2)) == concat(l1, insert(x, l2));
  };
  out.push_back(make_law(LawSpec<Key, KeyList, KeyList>{
      .id = "app-props:2",
      .description = "AllL(<=x, l1) implies insert(x, l1 ++ l2) == l1 ++ insert(x, l2), "
                     "sorted l1 ++ l2",
      .names = {"x", "l1", "l2"},
      .cases = key_split_cases(),
      .pre =
          [](const Key& x, const KeyList& l1, const KeyList& l2) {
            return all_list(KeyPredicate::at_most(x), l1) && is_sorted(concat(l1, l2));
          },
      .body = app2_body,
  }));
  out.push_back(make_law(LawSpec<Key, KeyList, KeyList>{
      .id = "app-props:2-unsorted",
      .description = "app-props:2 without the sortedness hypothesis",
      .expect = Expectation::counterexample,
      .names = {"x", "l1", "l2"},
      .cases = key_split_cases(),
      .pre =
          [](const Key& x, const KeyList& l1, const KeyList&) {
            return all_list(KeyPredicate::at_most(x), l1);
          },
      .body = app2_body,
  }));

  out.push_back(make_law(LawSpec<KeyPredicate, KeyPredicate, KeyList>{
      .id = "app-props:3",
      .description = "p implies q pointwise, so AllL(p, l) implies AllL(q, l)",
      .names = {"p", "q", "l"},
      .cases =
          [](const CorpusConfig& config, const Sink<KeyPredicate, KeyPredicate, KeyList>& sink) {
            const auto family = predicate_family(config.alphabet_size);
            const Key bound = random_key_bound(config.alphabet_size);
            std::vector<std::pair<KeyPredicate, KeyPredicate>> implications;
            for (const auto& p : family)
              for (const auto& q : family)
                if (implies_pointwise(p, q, bound)) implications.emplace_back(p, q);
            for_lemma_lists(config, [&](const KeyList& l) {
              for (const auto& [p, q] : implications)
                if (!sink(p, q, l)) return false;
              return true;
            });
          },
      .pre = [](const KeyPredicate& p, const KeyPredicate&,
                const KeyList& l) { return all_list(p, l); },
      .body = [](const KeyPredicate&, const KeyPredicate& q,
                 const KeyList& l) { return all_list(q, l); },
  }));

  out.push_back(make_law(LawSpec<KeyPredicate, KeyList, KeyList>{
      .id = "app-props:4",
      .description = "AllL(p, l1 ++ l2) iff AllL(p, l1) and AllL(p, l2)",
      .names = {"p", "l1", "l2"},
      .cases = predicate_split_cases(),
      .body =
          [](const KeyPredicate& p, const KeyList& l1, const KeyList& l2) {
            return all_list(p, concat(l1, l2)) == (all_list(p, l1) && all_list(p, l2));
          },
  }));

  const auto app5_body = [](Key x, const KeyList& l1) { return insert(x, l1) == cons(x, l1); };
  out.push_back(make_law(LawSpec<Key, KeyList>{
      .id = "app-props:5-as-printed",
      .description = "AllL(<x, l1) implies insert(x, l1) == x : l1, sorted l1",
      .expect = Expectation::counterexample,
      .names = {"x", "l1"},
      .cases = key_list_cases(),
      .pre =
          [](const Key& x, const KeyList& l1) {
            return all_list(KeyPredicate::less_than(x), l1) && is_sorted(l1);
          },
      .body = app5_body,
  }));
  out.push_back(make_law(LawSpec<Key, KeyList>{
      .id = "app-props:5-corrected",
      .description = "AllL(>=x, l1) implies insert(x, l1) == x : l1, sorted l1",
      .names = {"x", "l1"},
      .cases = key_list_cases(),
      .pre =
          [](const Key& x, const KeyList& l1) {
            return all_list(KeyPredicate::at_least(x), l1) && is_sorted(l1);
          },
      .body = app5_body,
  }));
}

void register_all_t_props(std::vector<Law>& out) {
  out.push_back(make_law(LawSpec<KeyPredicate, NodeTree>{
      .id = "allT-props:1",
      .description = "AllT(p, t) implies AllL(p, bst2list t)",
      .names = {"p", "t"},
      .cases = predicate_tree_cases(),
      .pre = [](const KeyPredicate& p, const NodeTree& t) { return all_tree(p, t); },
      .body = [](const KeyPredicate& p, const NodeTree& t) { return all_list(p, bst2list(t)); },
  }));
  out.push_back(make_law(LawSpec<KeyPredicate, NodeTree>{
      .id = "allT-props:2",
      .description = "AllT(p, t) implies AllL(p, h2list t)",
      .names = {"p", "t"},
      .cases = predicate_tree_cases(),
      .pre = [](const KeyPredicate& p, const NodeTree& t) { return all_tree(p, t); },
      .body = [](const KeyPredicate& p, const NodeTree& t) { return all_list(p, h2list(t)); },
  }));
  out.push_back(make_law(LawSpec<KeyPredicate, Key, NodeTree>{
      .id = "allT-props:3",
      .description = "p(x) and AllT(p, t) imply AllT(p, ist_bst(x, t))",
      .names = {"p", "x", "t"},
      .cases = predicate_key_tree_cases(),
      .pre = [](const KeyPredicate& p, const Key& x,
                const NodeTree& t) { return p(x) && all_tree(p, t); },
      .body = [](const KeyPredicate& p, Key x,
                 const NodeTree& t) { return all_tree(p, ist_bst(x, t)); },
  }));
  out.push_back(make_law(LawSpec<KeyPredicate, Key, NodeTree>{
      .id = "allT-props:4",
      .description = "p(x) and AllT(p, t) imply AllT(p, ist_h(x, t))",
      .names = {"p", "x", "t"},
      .cases = predicate_key_tree_cases(),
      .pre = [](const KeyPredicate& p, const Key& x,
                const NodeTree& t) { return p(x) && all_tree(p, t); },
      .body = [](const KeyPredicate& p, Key x,
                 const NodeTree& t) { return all_tree(p, ist_h(x, t)); },
  }));
}

void register_facts_odot(std::vector<Law>& out) {
  out.push_back(make_law(LawSpec<Key, KeyList>{
      .id = "facts-odot:1",
      .description = "AllL(>=x, l1) implies [x] merge l1 == x : l1",
      .names = {"x", "l1"},
      .cases = key_list_cases(),
      .pre = [](const Key& x,
                const KeyList& l1) { return all_list(KeyPredicate::at_least(x), l1); },
      .body = [](Key x, const KeyList& l1) { return merge({x}, l1) == cons(x, l1); },
  }));

  const auto odot2_body = [](Key x, const KeyList& l1, const KeyList& l2) {
    return merge(l1, cons(x, l2)) == concat(l1, cons(x, l2));
  };
  out.push_back(make_law(LawSpec<Key, KeyList, KeyList>{
      .id = "facts-odot:2",
      .description = "AllL(<x, l1) implies l1 merge (x : l2) == l1 ++ (x : l2), sorted operands",
      .names = {"x", "l1", "l2"},
      .cases = key_split_cases(),
      .pre =
          [](const Key& x, const KeyList& l1, const KeyList& l2) {
            return all_list(KeyPredicate::less_than(x), l1) && is_sorted(l1) &&
                   is_sorted(cons(x, l2));
          },
      .body = odot2_body,
  }));
  out.push_back(make_law(LawSpec<Key, KeyList, KeyList>{
      .id = "facts-odot:2-unsorted",
      .description = "facts-odot:2 without the sortedness hypothesis",
      .names = {"x", "l1", "l2"},
      .cases = key_split_cases(),
      .pre = [](const Key& x, const KeyList& l1,
                const KeyList&) { return all_list(KeyPredicate::less_than(x), l1); },
      .body = odot2_body,
  }));
  out.push_back(make_law(LawSpec<KeyPredicate, KeyList, KeyList>{
      .id = "facts-odot:3",
      .description = "AllL(p, l1) and AllL(p, l2) imply AllL(p, l1 merge l2)",
      .names = {"p", "l1", "l2"},
      .cases = predicate_split_cases(),
      .pre = [](const KeyPredicate& p, const KeyList& l1,
                const KeyList& l2) { return all_list(p, l1) && all_list(p, l2); },
      .body = [](const KeyPredicate& p, const KeyList& l1,
                 const KeyList& l2) { return all_list(p, merge(l1, l2)); },
  }));
}

void register_refinements(std::vector<Law>& out) {
  out.push_back(make_law(LawSpec<NodeTree>{
      .id = "bt2list:heap-refine",
      .description = "HEAP(t) implies bt2list(t) == h2list(t)",
      .names = {"t"},
      .cases = tree_cases(),
      .pre = [](const NodeTree& t) { return is_heap(t); },
      .body = [](const NodeTree& t) { return bt2list(t) == h2list(t); },
  }));
  out.push_back(make_law(LawSpec<NodeTree>{
      .id = "bt2list:bst-refine",
      .description = "BST(t) implies bt2list(t) == bst2list(t)",
      .names = {"t"},
      .cases = tree_cases(),
      .pre = [](const NodeTree& t) { return is_bst(t); },
      .body = [](const NodeTree& t) { return bt2list(t) == bst2list(t); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "isort-prime:heap",
      .description = "bt2list(build_h l) == isort(l)",
      .names = {"l"},
      .cases = [](const CorpusConfig& config,
                  const Sink<KeyList>& sink) { for_list_corpus(config, sink); },
      .body = [](const KeyList& l) { return bt2list(build_h(l)) == isort(l); },
  }));
  out.push_back(make_law(LawSpec<KeyList>{
      .id = "isort-prime:bst",
      .description = "bt2list(build_bst l) == isort(l)",
      .names = {"l"},
      .cases = [](const CorpusConfig& config,
                  const Sink<KeyList>& sink) { for_list_corpus(config, sink); },
      .body = [](const KeyList& l) { return bt2list(build_bst(l)) == isort(l); },
  }));
}

}  // namespace

void register_invariant_laws(std::vector<Law>& out) {
  register_app_props(out);
  register_all_t_props(out);
  register_facts_odot(out);
  register_refinements(out);
}

}  // namespace sortforge::laws
