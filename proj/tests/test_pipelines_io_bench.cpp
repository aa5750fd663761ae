#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "sortforge/bench.hpp"
#include "sortforge/corpus.hpp"
#include "sortforge/key_io.hpp"
#include "sortforge/pipelines.hpp"

using namespace sortforge;
using std::chrono::nanoseconds;

TEST_CASE("every pipeline sorts") {
  auto lists = random_lists(21, 200, 100, 20);
  lists.push_back({});
  for (const KeyList& l : lists) {
    KeyList want = l;
    std::stable_sort(want.begin(), want.end());
    for (Algorithm a : kAllAlgorithms)
      for (Variant v : kAllVariants) REQUIRE(sort_keys(a, v, l) == want);
  }
}

TEST_CASE("names") {
  for (Algorithm a : kAllAlgorithms) CHECK(parse_algorithm(to_string(a)) == a);
  for (Variant v : kAllVariants) CHECK(parse_variant(to_string(v)) == v);
  CHECK_FALSE(parse_algorithm("bogosort"));
  CHECK_FALSE(parse_variant(""));
}

TEST_CASE("read_keys") {
  std::istringstream ok("3\n-1\n9223372036854775807");
  CHECK(read_keys(ok) == KeyList{3, -1, 9223372036854775807LL});
  std::istringstream empty("");
  CHECK(read_keys(empty).empty());

  auto bad_line = [](const std::string& text) {
    std::istringstream in(text);
    try {
      read_keys(in);
    } catch (const KeyFormatError& e) {
      return e.line();
    }
    return std::size_t{0};
  };
  CHECK(bad_line("1\nx\n") == 2);
  CHECK(bad_line("1\n2\n\n") == 3);
  CHECK(bad_line("+1\n") == 1);
  CHECK(bad_line("01\n") == 1);
  CHECK(bad_line("-0\n") == 1);
  CHECK(bad_line("1 \n") == 1);
  CHECK(bad_line("1\n9223372036854775808\n") == 2);
}

TEST_CASE("write_keys") {
  std::ostringstream out;
  write_keys(out, {1, -2});
  CHECK(out.str() == "1\n-2\n");
  std::ostringstream none;
  write_keys(none, {});
  CHECK(none.str().empty());
}

TEST_CASE("median") {
  CHECK(median({nanoseconds(5), nanoseconds(1), nanoseconds(3)}) == nanoseconds(3));
  CHECK(median({nanoseconds(4), nanoseconds(1), nanoseconds(3), nanoseconds(2)}) ==
        nanoseconds(2));
}

TEST_CASE("bench") {
  CHECK(bench_input(BenchInput::sorted, 4, 0) == KeyList{0, 1, 2, 3});
  CHECK(bench_input(BenchInput::random, 100, 3) == bench_input(BenchInput::random, 100, 3));

  BenchConfig config;
  config.sizes = {16, 32};
  config.algorithms = {Algorithm::msort};
  config.variants = {Variant::hylo, Variant::deforested};
  auto records = run_bench(config);
  CHECK(records.size() == 2 * 2 * 3);
  auto csv = bench_csv(records);
  CHECK(csv.rfind("algorithm,variant,n,rep,nanos\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 13);
  CHECK(summarize(records).size() == 4);
  CHECK(bench_json(records).find("\"medians\"") != std::string::npos);

  config.reps = 2;
  CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
  config.reps = 3;
  config.sizes.clear();
  CHECK_THROWS_AS(run_bench(config), std::invalid_argument);
}
