#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sortforge/heapsort_heap.hpp"
#include "sortforge/invariants.hpp"
#include "sortforge/laws.hpp"
#include "sortforge/mergesort_ltree.hpp"
#include "sortforge/ordered_lists.hpp"
#include "sortforge/pipelines.hpp"
#include "sortforge/quicksort_bst.hpp"
#include "sortforge/report.hpp"
#include "sortforge/text_format.hpp"

namespace py = pybind11;
using namespace sortforge;

namespace {

KeyList sort_by_name(const KeyList& keys, const std::string& algorithm, const std::string& variant) {
  auto a = parse_algorithm(algorithm);
  auto v = parse_variant(variant);
  if (!a) throw py::value_error("unknown algorithm: " + algorithm);
  if (!v) throw py::value_error("unknown variant: " + variant);
  return sort_keys(*a, *v, keys);
}

std::string check_json(const std::vector<std::string>& laws, std::size_t max_len,
                       std::size_t alphabet, std::size_t random_cases, std::size_t max_random_len,
                       std::uint64_t seed) {
  CorpusConfig config;
  config.max_len = max_len;
  config.alphabet_size = alphabet;
  config.random_cases = random_cases;
  config.max_random_len = max_random_len;
  config.seed = seed;
  std::vector<CheckReport> reports;
  {
    py::gil_scoped_release release;
    reports = run_checks(config, laws);
  }
  return render_json(reports, config);
}

}  // namespace

PYBIND11_MODULE(_sortforge, m) {
  m.doc() = "sortforge core bindings";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<UnknownLawError>(m, "UnknownLawError", PyExc_KeyError);

  m.def("sort", &sort_by_name, py::arg("keys"), py::arg("algorithm") = "msort",
        py::arg("variant") = "deforested");
  m.def("isort", &isort, py::arg("keys"));
  m.def("merge", &merge, py::arg("a"), py::arg("b"));

  m.def("build_lt", [](const KeyList& l) { return render(build_lt(l)); }, py::arg("keys"));
  m.def("build_h", [](const KeyList& l) { return render(build_h(l)); }, py::arg("keys"));
  m.def("build_bst", [](const KeyList& l) { return render(build_bst(l)); }, py::arg("keys"));
  m.def("is_heap", [](const std::string& t) { return is_heap(parse_node_tree(t)); }, py::arg("tree"));
  m.def("is_bst", [](const std::string& t) { return is_bst(parse_node_tree(t)); }, py::arg("tree"));

  m.def("law_ids", [] {
    std::vector<std::string> ids;
    for (const Law& law : law_catalog()) ids.push_back(law.id);
    return ids;
  });
  m.def("check_json", &check_json, py::arg("laws"), py::arg("max_len"), py::arg("alphabet"),
        py::arg("random_cases"), py::arg("max_random_len"), py::arg("seed"));
  m.def("replay", [](const std::string& law, const std::string& witness) {
    return replay_witness(find_law(law), witness);
  }, py::arg("law"), py::arg("witness"));
  m.def("counterexample", [](const std::string& container, std::size_t max_nodes) {
    CheckReport r = find_counterexample(container, max_nodes);
    return py::make_tuple(std::string(to_string(r.status)), r.witness);
  }, py::arg("container"), py::arg("max_nodes") = 4);
}
