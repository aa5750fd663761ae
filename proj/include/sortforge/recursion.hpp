#pragma once

// Fold, unfold, paramorphism and hylomorphism over NodeTree and LeafTree.
//
// Every operator runs on an explicit work stack: recursion depth is bounded
// by heap memory, not by the C++ call stack. Unfolds and hylos additionally
// enforce a seed-depth limit so that a coalgebra that never reaches its stop
// case is reported instead of looping forever.

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "sortforge/trees.hpp"

namespace sortforge {

inline constexpr std::size_t kDefaultDepthLimit = 1'000'000;

class DivergenceError : public std::runtime_error {
 public:
  explicit DivergenceError(std::size_t depth)
      : std::runtime_error("unfold exceeded the depth limit at seed depth " + std::to_string(depth) +
                           " (coalgebra is not well-founded on this seed)"),
        depth_(depth) {}

  std::size_t depth() const noexcept { return depth_; }

 private:
  std::size_t depth_;
};

// Result of a node-tree coalgebra: Stop, or Split(key, left seed, right seed).
struct Stop {
  friend bool operator==(const Stop&, const Stop&) = default;
};

template <class Seed>
struct NodeSplit {
  Key key;
  Seed left;
  Seed right;
};

template <class Seed>
using CoalgStepNode = std::variant<Stop, NodeSplit<Seed>>;

// Result of a leaf-tree coalgebra: Done(payload), or Split(left, right).
struct Done {
  std::optional<Key> payload;
};

template <class Seed>
struct LeafSplit {
  Seed left;
  Seed right;
};

template <class Seed>
using CoalgStepLeaf = std::variant<Done, LeafSplit<Seed>>;

template <class Step, class Acc>
Acc fold_node_tree(Step&& step, const Acc& base, const NodeTree& tree) {
  struct Frame {
    const NodeTree* tree;
    bool expanded;
  };
  std::vector<Frame> work{{&tree, false}};
  std::vector<Acc> results;
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    if (f.tree->empty()) {
      results.push_back(base);
    } else if (!f.expanded) {
      work.push_back({f.tree, true});
      work.push_back({&f.tree->right(), false});
      work.push_back({&f.tree->left(), false});
    } else {
      Acc r = std::move(results.back());
      results.pop_back();
      Acc l = std::move(results.back());
      results.pop_back();
      results.push_back(std::invoke(step, f.tree->key(), std::move(l), std::move(r)));
    }
  }
  return std::move(results.back());
}

template <class Branch, class LeafFn>
auto fold_leaf_tree(Branch&& branch, LeafFn&& leaf, const LeafTree& tree) {
  using Acc = std::decay_t<std::invoke_result_t<LeafFn&, std::optional<Key>>>;
  struct Frame {
    const LeafTree* tree;
    bool expanded;
  };
  std::vector<Frame> work{{&tree, false}};
  std::vector<Acc> results;
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    if (f.tree->is_leaf()) {
      results.push_back(std::invoke(leaf, f.tree->payload()));
    } else if (!f.expanded) {
      work.push_back({f.tree, true});
      work.push_back({&f.tree->right(), false});
      work.push_back({&f.tree->left(), false});
    } else {
      Acc r = std::move(results.back());
      results.pop_back();
      Acc l = std::move(results.back());
      results.pop_back();
      results.push_back(std::invoke(branch, std::move(l), std::move(r)));
    }
  }
  return Acc(std::move(results.back()));
}

/// Primitive recursion on leaf trees: `branch` receives each untouched
/// subtree next to its recursive result, `branch(l, para(l), r, para(r))`.
template <class Branch, class LeafFn>
auto para_leaf_tree(Branch&& branch, LeafFn&& leaf, const LeafTree& tree) {
  using Acc = std::decay_t<std::invoke_result_t<LeafFn&, std::optional<Key>>>;
  struct Frame {
    const LeafTree* tree;
    bool expanded;
  };
  std::vector<Frame> work{{&tree, false}};
  std::vector<Acc> results;
  while (!work.empty()) {
    Frame f = work.back();
    work.pop_back();
    if (f.tree->is_leaf()) {
      results.push_back(std::invoke(leaf, f.tree->payload()));
    } else if (!f.expanded) {
      work.push_back({f.tree, true});
      work.push_back({&f.tree->right(), false});
      work.push_back({&f.tree->left(), false});
    } else {
      Acc r = std::move(results.back());
      results.pop_back();
      Acc l = std::move(results.back());
      results.pop_back();
      results.push_back(
          std::invoke(branch, f.tree->left(), std::move(l), f.tree->right(), std::move(r)));
    }
  }
  return Acc(std::move(results.back()));
}

namespace detail {

// Shared driver for unfold and hylo on node trees. `stop()` yields the
// value for a Stop step and `combine(key, l, r)` assembles a Split step.
template <class Result, class Seed, class Coalg, class StopFn, class Combine>
Result drive_node(Coalg& coalg, Seed seed, std::size_t depth_limit, StopFn& stop,
                  Combine& combine) {
  struct Expand {
    Seed seed;
    std::size_t depth;
  };
  struct Build {
    Key key;
  };
  std::vector<std::variant<Expand, Build>> work;
  work.push_back(Expand{std::move(seed), 0});
  std::vector<Result> results;
  while (!work.empty()) {
    auto item = std::move(work.back());
    work.pop_back();
    if (auto* build = std::get_if<Build>(&item)) {
      Result r = std::move(results.back());
      results.pop_back();
      Result l = std::move(results.back());
      results.pop_back();
      results.push_back(combine(build->key, std::move(l), std::move(r)));
      continue;
    }
    auto& expand = std::get<Expand>(item);
    if (expand.depth > depth_limit) throw DivergenceError(expand.depth);
    CoalgStepNode<Seed> step = std::invoke(coalg, std::as_const(expand.seed));
    if (std::holds_alternative<Stop>(step)) {
      results.push_back(stop());
      continue;
    }
    auto& split = std::get<NodeSplit<Seed>>(step);
    work.push_back(Build{split.key});
    work.push_back(Expand{std::move(split.right), expand.depth + 1});
    work.push_back(Expand{std::move(split.left), expand.depth + 1});
  }
  return std::move(results.back());
}

template <class Result, class Seed, class Coalg, class DoneFn, class Combine>
Result drive_leaf(Coalg& coalg, Seed seed, std::size_t depth_limit, DoneFn& done,
                  Combine& combine) {
  struct Expand {
    Seed seed;
    std::size_t depth;
  };
  struct Build {};
  std::vector<std::variant<Expand, Build>> work;
  work.push_back(Expand{std::move(seed), 0});
  std::vector<Result> results;
  while (!work.empty()) {
    auto item = std::move(work.back());
    work.pop_back();
    if (std::holds_alternative<Build>(item)) {
      Result r = std::move(results.back());
      results.pop_back();
      Result l = std::move(results.back());
      results.pop_back();
      results.push_back(combine(std::move(l), std::move(r)));
      continue;
    }
    auto& expand = std::get<Expand>(item);
    if (expand.depth > depth_limit) throw DivergenceError(expand.depth);
    CoalgStepLeaf<Seed> step = std::invoke(coalg, std::as_const(expand.seed));
    if (auto* d = std::get_if<Done>(&step)) {
      results.push_back(done(d->payload));
      continue;
    }
    auto& split = std::get<LeafSplit<Seed>>(step);
    work.push_back(Build{});
    work.push_back(Expand{std::move(split.right), expand.depth + 1});
    work.push_back(Expand{std::move(split.left), expand.depth + 1});
  }
  return std::move(results.back());
}

}  // namespace detail

template <class Seed, class Coalg>
NodeTree unfold_node_tree(Coalg&& coalg, Seed seed, std::size_t depth_limit = kDefaultDepthLimit) {
  auto stop = [] { return NodeTree{}; };
  auto combine = [](Key k, NodeTree l, NodeTree r) {
    return NodeTree::node(k, std::move(l), std::move(r));
  };
  return detail::drive_node<NodeTree>(coalg, std::move(seed), depth_limit, stop, combine);
}

template <class Seed, class Coalg>
LeafTree unfold_leaf_tree(Coalg&& coalg, Seed seed, std::size_t depth_limit = kDefaultDepthLimit) {
  auto done = [](std::optional<Key> p) { return LeafTree::leaf(p); };
  auto combine = [](LeafTree l, LeafTree r) { return LeafTree::branch(std::move(l), std::move(r)); };
  return detail::drive_leaf<LeafTree>(coalg, std::move(seed), depth_limit, done, combine);
}

/// fold_node_tree(step, base, unfold_node_tree(coalg, seed)) without
/// building the intermediate tree.
template <class Step, class Acc, class Seed, class Coalg>
Acc hylo_node_tree(Step&& step, const Acc& base, Coalg&& coalg, Seed seed,
                   std::size_t depth_limit = kDefaultDepthLimit) {
  auto stop = [&base] { return base; };
  auto combine = [&step](Key k, Acc l, Acc r) {
    return std::invoke(step, k, std::move(l), std::move(r));
  };
  return detail::drive_node<Acc>(coalg, std::move(seed), depth_limit, stop, combine);
}

/// fold_leaf_tree(branch, leaf, unfold_leaf_tree(coalg, seed)) without
/// building the intermediate tree.
template <class Branch, class LeafFn, class Seed, class Coalg>
auto hylo_leaf_tree(Branch&& branch, LeafFn&& leaf, Coalg&& coalg, Seed seed,
                    std::size_t depth_limit = kDefaultDepthLimit) {
  using Acc = std::decay_t<std::invoke_result_t<LeafFn&, std::optional<Key>>>;
  auto done = [&leaf](std::optional<Key> p) -> Acc { return std::invoke(leaf, p); };
  auto combine = [&branch](Acc l, Acc r) -> Acc {
    return std::invoke(branch, std::move(l), std::move(r));
  };
  return detail::drive_leaf<Acc>(coalg, std::move(seed), depth_limit, done, combine);
}

}  // namespace sortforge
