#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "sortforge/bench.hpp"
#include "sortforge/key_io.hpp"
#include "sortforge/laws.hpp"
#include "sortforge/pipelines.hpp"
#include "sortforge/report.hpp"
#include "sortforge/text_format.hpp"

namespace {

using namespace sortforge;

constexpr int kUsage = 2;

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

struct CheckOptions {
  std::string laws;
  bool all = false;
  bool list = false;
  std::string format = "text";
  bool timings = false;
  CorpusConfig config;
};

struct SortOptions {
  std::string algorithm;
  std::string variant;
  std::string input;
  std::string output;
};

struct BenchOptions {
  std::string sizes;
  std::size_t reps = 3;
  std::uint64_t seed = 0;
  std::string format = "csv";
  std::string out;
  std::string algorithms = "msort,hsort,qsort,isort";
  std::string variants = "spec,fold,hylo,deforested";
  std::string input = "random";
};

struct CounterexampleOptions {
  std::string law = "tl2-universal";
  std::string container;
  std::size_t max_nodes = 4;
  std::size_t alphabet = 4;
  std::string format = "text";
};

struct ReplayOptions {
  std::string law;
  std::string witness;
};

int run_check(const CheckOptions& o) {
  if (o.list) {
    for (const Law& law : law_catalog())
      std::cout << law.id << (law.expect == Expectation::counterexample ? " [expect-counterexample]" : "")
                << "  " << law.description << '\n';
    return 0;
  }
  if (o.all && !o.laws.empty()) {
    std::cerr << "error: --laws and --all are mutually exclusive\n";
    return kUsage;
  }
  if (!o.all && o.laws.empty()) {
    std::cerr << "error: pass --all or --laws L1,L2,...\n";
    return kUsage;
  }
  const std::vector<std::string> selection = o.all ? std::vector<std::string>{} : split_csv(o.laws);
  std::vector<CheckReport> reports;
  try {
    reports = run_checks(o.config, selection);
  } catch (const UnknownLawError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (o.format == "json")
    std::cout << render_json(reports, o.config, o.timings);
  else
    std::cout << render_text(reports, o.timings);
  return exit_code(reports);
}

int run_sort(const SortOptions& o) {
  auto algorithm = parse_algorithm(o.algorithm);
  auto variant = parse_variant(o.variant);
  if (!algorithm || !variant) {
    std::cerr << "error: unknown algorithm or variant\n";
    return kUsage;
  }
  KeyList keys;
  try {
    if (o.input.empty() || o.input == "-") {
      keys = read_keys(std::cin);
    } else {
      std::ifstream in(o.input);
      if (!in) {
        std::cerr << "error: cannot open " << o.input << '\n';
        return kUsage;
      }
      keys = read_keys(in);
    }
  } catch (const KeyFormatError& e) {
    std::cerr << "error: " << (o.input.empty() ? "<stdin>" : o.input) << ": " << e.what() << '\n';
    return kUsage;
  }
  const KeyList sorted = sort_keys(*algorithm, *variant, keys);
  if (o.output.empty() || o.output == "-") {
    write_keys(std::cout, sorted);
  } else {
    std::ofstream out(o.output);
    if (!out) {
      std::cerr << "error: cannot write " << o.output << '\n';
      return kUsage;
    }
    write_keys(out, sorted);
  }
  return 0;
}

int run_bench_cmd(const BenchOptions& o) {
  BenchConfig config;
  config.reps = o.reps;
  config.seed = o.seed;
  config.algorithms.clear();
  config.variants.clear();
  try {
    for (const auto& s : split_csv(o.sizes)) config.sizes.push_back(std::stoull(s));
  } catch (const std::exception&) {
    std::cerr << "error: --sizes must be a comma-separated list of integers\n";
    return kUsage;
  }
  for (const auto& name : split_csv(o.algorithms)) {
    auto a = parse_algorithm(name);
    if (!a) {
      std::cerr << "error: unknown algorithm " << name << '\n';
      return kUsage;
    }
    config.algorithms.push_back(*a);
  }
  for (const auto& name : split_csv(o.variants)) {
    auto v = parse_variant(name);
    if (!v) {
      std::cerr << "error: unknown variant " << name << '\n';
      return kUsage;
    }
    config.variants.push_back(*v);
  }
  config.input = o.input == "sorted" ? BenchInput::sorted : BenchInput::random;
  std::vector<BenchRecord> records;
  try {
    records = run_bench(config);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  for (const BenchRecord& r : records)
    if (r.error) std::cerr << "error: " << to_string(r.algorithm) << '/' << to_string(r.variant) << ": " << *r.error << '\n';
  for (const BenchSummary& s : summarize(records))
    if (s.cv > kNoisyCv)
      std::cerr << "warning: " << to_string(s.algorithm) << '/' << to_string(s.variant) << " n=" << s.n
                << " varies by " << static_cast<int>(s.cv * 100) << "% across reps\n";
  const std::string text = o.format == "json" ? bench_json(records) : bench_csv(records);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.out);
    if (!out) {
      std::cerr << "error: cannot write " << o.out << '\n';
      return kUsage;
    }
    out << text;
  }
  return 0;
}

int run_counterexample(const CounterexampleOptions& o) {
  if (o.law != "tl2-universal") {
    std::cerr << "error: counterexample search supports --law tl2-universal only\n";
    return kUsage;
  }
  CheckReport report;
  try {
    report = find_counterexample(o.container, o.max_nodes, o.alphabet);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  const std::vector<CheckReport> reports{report};
  CorpusConfig config;
  config.alphabet_size = o.alphabet;
  std::cout << (o.format == "json" ? render_json(reports, config) : render_text(reports));
  return exit_code(reports);
}

int run_replay(const ReplayOptions& o) {
  try {
    const Law& law = find_law(o.law);
    const bool reproduced = replay_witness(law, o.witness);
    std::cout << (reproduced ? "reproduced" : "not reproduced") << ' ' << law.id << '\n';
    return reproduced ? 0 : 1;
  } catch (const UnknownLawError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: bad witness: " << e.what() << '\n';
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sortforge: sorting by derivation, laws and benchmarks"};
  app.require_subcommand(1);

  CorpusConfig defaults;
  try {
    defaults = CorpusConfig::from_env();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: SORTFORGE_SEED: " << e.what() << '\n';
    return kUsage;
  }

  CheckOptions check;
  check.config = defaults;
  auto* c = app.add_subcommand("check", "run law and invariant checks");
  c->add_option("--laws", check.laws, "comma-separated law ids");
  c->add_flag("--all", check.all, "run every law");
  c->add_flag("--list", check.list, "list law ids and exit");
  c->add_option("--max-len", check.config.max_len, "exhaustive list length");
  c->add_option("--alphabet", check.config.alphabet_size, "keys 0..K-1")->check(CLI::PositiveNumber);
  c->add_option("--random-cases", check.config.random_cases);
  c->add_option("--max-random-len", check.config.max_random_len);
  c->add_option("--seed", check.config.seed);
  c->add_option("--format", check.format)->check(CLI::IsMember({"text", "json"}));
  c->add_flag("--timings", check.timings, "include elapsed times");

  SortOptions sort;
  auto* s = app.add_subcommand("sort", "sort keys, one per line");
  s->add_option("--algorithm", sort.algorithm)->required()->check(CLI::IsMember({"msort", "hsort", "qsort", "isort"}));
  s->add_option("--variant", sort.variant)->required()->check(CLI::IsMember({"spec", "fold", "hylo", "deforested"}));
  s->add_option("--input", sort.input);
  s->add_option("--output", sort.output);

  BenchOptions bench;
  bench.seed = defaults.seed;
  auto* b = app.add_subcommand("bench", "time the pipelines");
  b->add_option("--sizes", bench.sizes, "comma-separated list lengths")->required();
  b->add_option("--reps", bench.reps)->check(CLI::Range(std::size_t{3}, std::size_t{1000000}));
  b->add_option("--seed", bench.seed);
  b->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "json"}));
  b->add_option("--out", bench.out);
  b->add_option("--algorithms", bench.algorithms);
  b->add_option("--variants", bench.variants);
  b->add_option("--input", bench.input)->check(CLI::IsMember({"random", "sorted"}));

  CounterexampleOptions cx;
  auto* x = app.add_subcommand("counterexample", "search for a tl2 counterexample");
  x->add_option("--law", cx.law);
  x->add_option("--container", cx.container)->required()->check(CLI::IsMember({"heap", "bst"}));
  x->add_option("--max-nodes", cx.max_nodes)->check(CLI::PositiveNumber);
  x->add_option("--alphabet", cx.alphabet)->check(CLI::PositiveNumber);
  x->add_option("--format", cx.format)->check(CLI::IsMember({"text", "json"}));

  ReplayOptions replay;
  auto* r = app.add_subcommand("replay", "re-run one witness of a law");
  r->add_option("--law", replay.law)->required();
  r->add_option("--witness", replay.witness)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (c->parsed()) return run_check(check);
  if (s->parsed()) return run_sort(sort);
  if (b->parsed()) return run_bench_cmd(bench);
  if (x->parsed()) return run_counterexample(cx);
  if (r->parsed()) return run_replay(replay);
  return kUsage;
}
