#pragma once

// Sorting by insertion into a container: build a container by repeated
// insertion, then convert it to a list. The three correctness conditions
// are exposed as runnable checks:
//
//   tl1  to_list(empty) == []
//   tl2  to_list(ist(x, c)) == insert(x, to_list(c))       for every c
//   tl3  the tl2 equation restricted to containers built from a list
//
// tl1 together with tl2 or tl3 makes isort_container equal to isort.

#include <chrono>
#include <functional>
#include <span>
#include <string>

#include "sortforge/check_report.hpp"
#include "sortforge/ordered_lists.hpp"
#include "sortforge/text_format.hpp"
#include "sortforge/trees.hpp"

namespace sortforge {

template <class Container>
struct ContainerSpec {
  std::string name;
  Container empty;
  std::function<Container(Key, const Container&)> ist;
  std::function<KeyList(const Container&)> to_list;
  std::function<bool(const Container&, const Container&)> equal;
  /// Canonical text form, used when reporting witnesses.
  std::function<std::string(const Container&)> render;
};

/// Right-to-left build: `foldr ist empty l`.
template <class C>
C build_right_to_left(const ContainerSpec<C>& spec, const KeyList& l) {
  C acc = spec.empty;
  for (auto it = l.rbegin(); it != l.rend(); ++it) acc = spec.ist(*it, acc);
  return acc;
}

/// Left-to-right build through an accumulator.
template <class C>
C build_left_to_right(const ContainerSpec<C>& spec, const KeyList& l) {
  C acc = spec.empty;
  for (Key x : l) acc = spec.ist(x, acc);
  return acc;
}

template <class C>
KeyList isort_container(const ContainerSpec<C>& spec, const KeyList& l) {
  return spec.to_list(build_right_to_left(spec, l));
}

// The higher-order `foldr ist' id` form applied to the empty container is
// exactly the left-to-right accumulating loop.
template <class C>
KeyList isort_container_acc(const ContainerSpec<C>& spec, const KeyList& l) {
  return spec.to_list(build_left_to_right(spec, l));
}

namespace detail {

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  std::chrono::nanoseconds elapsed() const {
    return std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() -
                                                                start);
  }
};

}  // namespace detail

template <class C>
CheckReport check_tl1(const ContainerSpec<C>& spec) {
  detail::Stopwatch clock;
  CheckReport report;
  report.law_id = "tl1:" + spec.name;
  report.cases_run = 1;
  KeyList got = spec.to_list(spec.empty);
  if (!got.empty()) {
    report.status = Status::fail;
    report.witness = format_witness({{"c", spec.render(spec.empty)}, {"to_list", render(got)}});
  }
  report.elapsed = clock.elapsed();
  return report;
}

/// Containers are visited in order and, for each, every key in order; the
/// first failing (c, x) is the witness.
template <class C>
CheckReport check_tl2_universal(const ContainerSpec<C>& spec, std::span<const C> containers,
                                std::span<const Key> keys) {
  detail::Stopwatch clock;
  CheckReport report;
  report.law_id = "tl2-universal:" + spec.name;
  for (const C& c : containers) {
    const KeyList before = spec.to_list(c);
    for (Key x : keys) {
      ++report.cases_run;
      if (spec.to_list(spec.ist(x, c)) != insert(x, before)) {
        report.status = Status::fail;
        report.witness = format_witness({{"x", render(x)}, {"c", spec.render(c)}});
        report.elapsed = clock.elapsed();
        return report;
      }
    }
  }
  report.elapsed = clock.elapsed();
  return report;
}

/// tl3 for every (xs, x): the container is `foldr ist empty xs`.
template <class C>
CheckReport check_tl3_reachable(const ContainerSpec<C>& spec, std::span<const KeyList> lists,
                                std::span<const Key> keys) {
  detail::Stopwatch clock;
  CheckReport report;
  report.law_id = "tl3-reachable:" + spec.name;
  for (const KeyList& xs : lists) {
    const C built = build_right_to_left(spec, xs);
    const KeyList before = spec.to_list(built);
    for (Key x : keys) {
      ++report.cases_run;
      if (spec.to_list(spec.ist(x, built)) != insert(x, before)) {
        report.status = Status::fail;
        report.witness = format_witness({{"x", render(x)}, {"xs", render(xs)}});
        report.elapsed = clock.elapsed();
        return report;
      }
    }
  }
  report.elapsed = clock.elapsed();
  return report;
}

// Shipped container instances.
ContainerSpec<LeafTree> leaf_tree_spec();
ContainerSpec<NodeTree> heap_spec();
ContainerSpec<NodeTree> bst_spec();
/// Heap and BST insertion paired with the order-oblivious bt2list.
ContainerSpec<NodeTree> heap_bt_spec();
ContainerSpec<NodeTree> bst_bt_spec();

}  // namespace sortforge
