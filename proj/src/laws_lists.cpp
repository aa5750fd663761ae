#include <algorithm>

#include "law_builder.hpp"
#include "sortforge/ordered_lists.hpp"

namespace sortforge::laws {

namespace {

constexpr std::size_t kMonoidTotalLen = 12;

// Sorted lists over the alphabet, bucketed by length 0..max_len.
std::vector<std::vector<KeyList>> sorted_lists_by_length(std::size_t max_len,
                                                         std::size_t alphabet_size) {
  std::vector<std::vector<KeyList>> buckets(max_len + 1);
  // Non-decreasing sequences, generated in lexicographic order per length.
  for (std::size_t len = 0; len <= max_len; ++len) {
    if (alphabet_size == 0) {
      if (len == 0) buckets[0].push_back({});
      continue;
    }
    KeyList l(len, 0);
    while (true) {
      buckets[len].push_back(l);
      std::size_t i = len;
      while (i > 0 && l[i - 1] == static_cast<Key>(alphabet_size) - 1) --i;
      if (i == 0) break;
      Key next = l[i - 1] + 1;
      std::fill(l.begin() + static_cast<std::ptrdiff_t>(i) - 1, l.end(), next);
    }
  }
  return buckets;
}

}  // namespace

void register_list_laws(std::vector<Law>& out) {
  out.push_back(make_law(LawSpec<KeyList, KeyList, KeyList>{
      .id = "merge:monoid",
      .description = "merge is associative with [] as unit, sorted a,b,c with |a|+|b|+|c| <= 12",
      .names = {"a", "b", "c"},
      .cases =
          [](const CorpusConfig& config, const Sink<KeyList, KeyList, KeyList>& sink) {
            auto buckets = sorted_lists_by_length(kMonoidTotalLen, config.alphabet_size);
            for (std::size_t la = 0; la <= kMonoidTotalLen; ++la)
              for (std::size_t lb = 0; la + lb <= kMonoidTotalLen; ++lb)
                for (std::size_t lc = 0; la + lb + lc <= kMonoidTotalLen; ++lc)
                  for (const auto& a : buckets[la])
                    for (const auto& b : buckets[lb])
                      for (const auto& c : buckets[lc])
                        if (!sink(a, b, c)) return;
          },
      .body =
          [](const KeyList& a, const KeyList& b, const KeyList& c) {
            return merge(a, merge(b, c)) == merge(merge(a, b), c) && merge({}, a) == a &&
                   merge(a, {}) == a;
          },
  }));

  out.push_back(make_law(LawSpec<KeyList, KeyList>{
      .id = "merge:commutative",
      .description = "merge(a,b) == merge(b,a) for sorted a,b with |a|+|b| <= 12",
      .names = {"a", "b"},
      .cases =
          [](const CorpusConfig& config, const Sink<KeyList, KeyList>& sink) {
            auto buckets = sorted_lists_by_length(kMonoidTotalLen, config.alphabet_size);
            for (std::size_t la = 0; la <= kMonoidTotalLen; ++la)
              for (std::size_t lb = 0; la + lb <= kMonoidTotalLen; ++lb)
                for (const auto& a : buckets[la])
                  for (const auto& b : buckets[lb])
                    if (!sink(a, b)) return;
          },
      .body = [](const KeyList& a, const KeyList& b) { return merge(a, b) == merge(b, a); },
  }));

  out.push_back(make_law(LawSpec<Key, KeyList>{
      .id = "insert:merge-singleton",
      .description = "insert(x, l) == merge([x], l), is sorted, and has length |l|+1",
      .names = {"x", "l"},
      .cases =
          [](const CorpusConfig& config, const Sink<Key, KeyList>& sink) {
            const KeyList keys = alphabet(config.alphabet_size);
            each_list(config.max_len, config.alphabet_size, [&](const KeyList& l) {
              if (!is_sorted(l)) return true;
              for (Key x : keys)
                if (!sink(x, l)) return false;
              return true;
            });
          },
      .body =
          [](Key x, const KeyList& l) {
            KeyList got = insert(x, l);
            return got == merge({x}, l) && is_sorted(got) && got.size() == l.size() + 1;
          },
  }));

  out.push_back(make_law(LawSpec<KeyList>{
      .id = "isort:sorted-permutation",
      .description = "isort(l) is sorted and a permutation of l (reference: std::sort)",
      .names = {"l"},
      .cases = [](const CorpusConfig& config,
                  const Sink<KeyList>& sink) { for_list_corpus(config, sink); },
      .body =
          [](const KeyList& l) {
            KeyList got = isort(l);
            KeyList want = l;
            std::sort(want.begin(), want.end());
            KeyList got_sorted = got;
            std::sort(got_sorted.begin(), got_sorted.end());
            return is_sorted(got) && got_sorted == want;
          },
  }));
}

}  // namespace sortforge::laws
