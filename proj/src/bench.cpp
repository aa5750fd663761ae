#include "sortforge/bench.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <new>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <tuple>

#include "sortforge/corpus.hpp"

namespace sortforge {

KeyList bench_input(BenchInput kind, std::size_t n, std::uint64_t seed) {
  KeyList l(n);
  if (kind == BenchInput::sorted) {
    for (std::size_t i = 0; i < n; ++i) l[i] = static_cast<Key>(i);
    return l;
  }
  SplitMix64 rng(seed ^ n);
  for (Key& k : l) k = static_cast<Key>(rng.next());
  return l;
}

std::vector<BenchRecord> run_bench(const BenchConfig& config) {
  if (config.sizes.empty()) throw std::invalid_argument("bench needs at least one size");
  if (config.reps < 3) throw std::invalid_argument("bench needs at least 3 reps");
  std::vector<BenchRecord> records;
  volatile std::size_t sink = 0;
  for (Algorithm a : config.algorithms) {
    for (Variant v : config.variants) {
      for (std::size_t n : config.sizes) {
        for (std::size_t rep = 0; rep < config.reps; ++rep) {
          BenchRecord record{a, v, n, rep, std::chrono::nanoseconds(0), std::nullopt};
          try {
            const KeyList input = bench_input(config.input, n, config.seed);
            auto start = std::chrono::steady_clock::now();
            KeyList out = sort_keys(a, v, input);
            auto stop = std::chrono::steady_clock::now();
            sink = sink + out.size();
            record.nanos = std::max(std::chrono::nanoseconds(1),
                                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start));
          } catch (const std::bad_alloc&) {
            record.error = "allocation failed at n=" + std::to_string(n);
          }
          records.push_back(std::move(record));
        }
      }
    }
  }
  return records;
}

std::chrono::nanoseconds median(std::vector<std::chrono::nanoseconds> sample) {
  if (sample.empty()) throw std::invalid_argument("median of an empty sample");
  std::sort(sample.begin(), sample.end());
  const std::size_t mid = sample.size() / 2;
  if (sample.size() % 2 == 1) return sample[mid];
  return (sample[mid - 1] + sample[mid]) / 2;
}

std::vector<BenchSummary> summarize(const std::vector<BenchRecord>& records) {
  std::vector<std::tuple<Algorithm, Variant, std::size_t>> order;
  std::map<std::tuple<Algorithm, Variant, std::size_t>, std::vector<std::chrono::nanoseconds>>
      groups;
  for (const BenchRecord& r : records) {
    auto key = std::make_tuple(r.algorithm, r.variant, r.n);
    if (!groups.contains(key)) order.push_back(key);
    auto& g = groups[key];
    if (!r.error) g.push_back(r.nanos);
  }
  std::vector<BenchSummary> out;
  for (const auto& key : order) {
    const auto& sample = groups[key];
    if (sample.empty()) continue;
    BenchSummary s{std::get<0>(key), std::get<1>(key), std::get<2>(key), median(sample)};
    double mean = 0;
    for (auto d : sample) mean += static_cast<double>(d.count());
    mean /= static_cast<double>(sample.size());
    double var = 0;
    for (auto d : sample) var += std::pow(static_cast<double>(d.count()) - mean, 2);
    var /= static_cast<double>(sample.size());
    s.cv = mean > 0 ? std::sqrt(var) / mean : 0.0;
    out.push_back(s);
  }
  return out;
}

std::string bench_csv(const std::vector<BenchRecord>& records) {
  std::ostringstream out;
  out << "algorithm,variant,n,rep,nanos\n";
  for (const BenchRecord& r : records) {
    out << to_string(r.algorithm) << ',' << to_string(r.variant) << ',' << r.n << ',' << r.rep
        << ',';
    if (r.error)
      out << "error";
    else
      out << r.nanos.count();
    out << '\n';
  }
  return out.str();
}

std::string bench_json(const std::vector<BenchRecord>& records) {
  nlohmann::ordered_json doc;
  auto& recs = doc["records"] = nlohmann::ordered_json::array();
  for (const BenchRecord& r : records) {
    nlohmann::ordered_json e{{"algorithm", to_string(r.algorithm)},
                             {"variant", to_string(r.variant)},
                             {"n", r.n},
                             {"rep", r.rep}};
    if (r.error)
      e["error"] = *r.error;
    else
      e["nanos"] = r.nanos.count();
    recs.push_back(std::move(e));
  }
  auto& meds = doc["medians"] = nlohmann::ordered_json::array();
  for (const BenchSummary& s : summarize(records))
    meds.push_back({{"algorithm", to_string(s.algorithm)},
                    {"variant", to_string(s.variant)},
                    {"n", s.n},
                    {"median_nanos", s.median.count()},
                    {"cv", s.cv},
                    {"noisy", s.cv > kNoisyCv}});
  return doc.dump(2) + "\n";
}

}  // namespace sortforge
