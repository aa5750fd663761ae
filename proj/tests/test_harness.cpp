#include <doctest.h>

#include <set>

#include "sortforge/laws.hpp"
#include "sortforge/report.hpp"

using namespace sortforge;

namespace {

CorpusConfig small_config() {
  CorpusConfig c;
  c.max_len = 4;
  c.alphabet_size = 3;
  c.random_cases = 50;
  c.max_random_len = 20;
  c.seed = 7;
  return c;
}

}  // namespace

TEST_CASE("catalog ids are unique and findable") {
  std::set<std::string> ids;
  for (const Law& law : law_catalog()) {
    CHECK(ids.insert(law.id).second);
    CHECK(&find_law(law.id) == &law);
  }
  CHECK(ids.size() >= 50);
  CHECK_THROWS_AS(find_law("no-such-law"), UnknownLawError);
  const std::vector<std::string> bad{"merge:monoid", "nope"};
  CHECK_THROWS_AS(run_checks(small_config(), bad), UnknownLawError);
}

TEST_CASE("expectation mapping") {
  Law holds_but_expected_to_fail{
      .id = "probe",
      .description = "",
      .expect = Expectation::counterexample,
      .run = [](const CorpusConfig&) { return CheckReport{.cases_run = 3}; },
      .violates = [](const WitnessFields&) { return false; },
  };
  CheckReport r = run_law(holds_but_expected_to_fail, small_config());
  CHECK(r.status == Status::fail);
  REQUIRE(r.note);
  CHECK(r.law_id == "probe");

  Law fails_as_expected = holds_but_expected_to_fail;
  fails_as_expected.run = [](const CorpusConfig&) {
    return CheckReport{.status = Status::fail, .cases_run = 1, .witness = "l=[0]"};
  };
  CHECK(run_law(fails_as_expected, small_config()).status == Status::expected_fail_confirmed);

  Law plain_fail = fails_as_expected;
  plain_fail.expect = Expectation::holds;
  CHECK(run_law(plain_fail, small_config()).status == Status::fail);
}

TEST_CASE("known counterexamples are found and replay") {
  const std::vector<std::string> ids{"build-equiv:qsort-ties-left", "app-props:2-unsorted",
                                     "app-props:5-as-printed", "tl2-universal:heap",
                                     "tl2-universal:bst"};
  for (const std::string& id : ids) {
    CAPTURE(id);
    const Law& law = find_law(id);
    CHECK(law.expect == Expectation::counterexample);
    CheckReport r = run_law(law, small_config());
    CHECK(r.status == Status::expected_fail_confirmed);
    REQUIRE(r.witness);
    CHECK(replay_witness(law, *r.witness));
  }
  CHECK(run_law(find_law("build-equiv:qsort-ties-left"), small_config()).witness == "l=[0,0]");
  CHECK_FALSE(replay_witness(find_law("build-equiv:qsort-ties-left"), "l=[1,0]"));
  CHECK_FALSE(replay_witness(find_law("merge:commutative"), "a=[0,1]; b=[1]"));
}

TEST_CASE("find_counterexample") {
  CheckReport heap = find_counterexample("heap", 4);
  CHECK(heap.status == Status::expected_fail_confirmed);
  CHECK(heap.witness == "x=0; c=(1 . (0 . .))");
  CheckReport bst = find_counterexample("bst", 4);
  CHECK(bst.status == Status::expected_fail_confirmed);
  CHECK(bst.witness == "x=1; c=(1 . (0 . .))");

  // One-node trees are always heaps and BSTs.
  CHECK(find_counterexample("heap", 1).status == Status::fail);
  CHECK(find_counterexample("bst", 1).status == Status::fail);
  CHECK_THROWS_AS(find_counterexample("list", 4), std::invalid_argument);
  CHECK_THROWS_AS(find_counterexample("heap", 0), std::invalid_argument);
}

TEST_CASE("small-config run is deterministic") {
  const std::vector<std::string> ids{"merge:commutative", "isort:sorted-permutation",
                                     "build-equiv:qsort-ties-left", "end-to-end:msort"};
  auto a = run_checks(small_config(), ids);
  auto b = run_checks(small_config(), ids);
  REQUIRE(a.size() == ids.size());
  CHECK(render_json(a, small_config()) == render_json(b, small_config()));
  CHECK(render_text(a) == render_text(b));
  CHECK(exit_code(a) == 0);
  CHECK(render_json(a, small_config()).find("elapsed_ns") == std::string::npos);
  CHECK(render_json(a, small_config(), true).find("elapsed_ns") != std::string::npos);

  a[0].status = Status::fail;
  CHECK(exit_code(a) == 1);
}
