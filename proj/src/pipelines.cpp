#include "sortforge/pipelines.hpp"

#include "sortforge/heapsort_heap.hpp"
#include "sortforge/mergesort_ltree.hpp"
#include "sortforge/ordered_lists.hpp"
#include "sortforge/quicksort_bst.hpp"

namespace sortforge {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::msort: return "msort";
    case Algorithm::hsort: return "hsort";
    case Algorithm::qsort: return "qsort";
    case Algorithm::isort: return "isort";
  }
  return "?";
}

std::string_view to_string(Variant v) {
  switch (v) {
    case Variant::spec: return "spec";
    case Variant::fold: return "fold";
    case Variant::hylo: return "hylo";
    case Variant::deforested: return "deforested";
  }
  return "?";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms)
    if (to_string(a) == name) return a;
  return std::nullopt;
}

std::optional<Variant> parse_variant(std::string_view name) {
  for (Variant v : kAllVariants)
    if (to_string(v) == name) return v;
  return std::nullopt;
}

KeyList sort_keys(Algorithm algorithm, Variant variant, const KeyList& l) {
  switch (algorithm) {
    case Algorithm::isort:
      return isort(l);
    case Algorithm::msort:
      switch (variant) {
        case Variant::spec: return lt2list(build_lt(l));
        case Variant::fold: return lt2list(unfold_msort(l));
        case Variant::hylo: return msort_hylo(l);
        case Variant::deforested: return msort_deforested(l);
      }
      break;
    case Algorithm::hsort:
      switch (variant) {
        case Variant::spec: return h2list(build_h(l));
        case Variant::fold: return h2list(unfold_hsort(l));
        case Variant::hylo: return hsort_hylo(l);
        case Variant::deforested: return hsort_deforested(l);
      }
      break;
    case Algorithm::qsort:
      switch (variant) {
        case Variant::spec: return bst2list(build_bst(l));
        case Variant::fold: return bst2list(unfold_qsort(l));
        case Variant::hylo: return qsort_hylo(l);
        case Variant::deforested: return qsort_deforested(l);
      }
      break;
  }
  return isort(l);
}

}  // namespace sortforge
