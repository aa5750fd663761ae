#pragma once

// End-to-end sorting pipelines, selectable by name.
//
//   spec        to_list(build l), the container build of each algorithm
//   fold        to_list(unfold l), the intermediate tree materialised
//   hylo        fold and unfold fused, no intermediate tree
//   deforested  the direct recursive sort
//
// isort has no intermediate structure; every variant runs the insertion
// sort itself.

#include <array>
#include <optional>
#include <string_view>

#include "sortforge/trees.hpp"

namespace sortforge {

enum class Algorithm { msort, hsort, qsort, isort };
enum class Variant { spec, fold, hylo, deforested };

inline constexpr std::array<Algorithm, 4> kAllAlgorithms{Algorithm::msort, Algorithm::hsort,
                                                         Algorithm::qsort, Algorithm::isort};
inline constexpr std::array<Variant, 4> kAllVariants{Variant::spec, Variant::fold, Variant::hylo,
                                                     Variant::deforested};

std::string_view to_string(Algorithm a);
std::string_view to_string(Variant v);
std::optional<Algorithm> parse_algorithm(std::string_view name);
std::optional<Variant> parse_variant(std::string_view name);

KeyList sort_keys(Algorithm algorithm, Variant variant, const KeyList& l);

}  // namespace sortforge
