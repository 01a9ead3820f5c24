#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "downest/word.hpp"

namespace downest {

// Calls yield for every ascending-order double occurrence word of size n,
// exactly once, in lexicographic order. A prefix is extended either by
// closing a currently open letter or by opening the next unused one, so
// first occurrences appear in increasing order and every prefix completes.
void enumerate_ascending(int n, const std::function<void(const Word&)>& yield);

std::vector<Word> all_ascending_words(int n);

// (2n−1)!! — the number of ascending-order double occurrence words of
// size n. n = 0 gives the empty product, 1.
std::uint64_t double_factorial_odd(int n);

// One tally row: how many size-n words have each nesting index.
struct TallyRow {
  int size = 0;
  std::map<int, std::uint64_t> counts;  // nesting index → count

  std::uint64_t total() const;

  friend bool operator==(const TallyRow&, const TallyRow&) = default;
};

class TallyTable {
 public:
  void set_row(TallyRow row);
  const TallyRow* row(int size) const;
  const std::map<int, TallyRow>& rows() const { return rows_; }
  std::string to_csv() const;  // header "size,ni,count", sorted by (size, ni)

 private:
  std::map<int, TallyRow> rows_;
};

// Exact nesting-index tally over all ascending words of size n. The
// generation tree is split into subtrees by fixing the first few choices;
// workers claim subtrees from a shared counter and keep private NI caches,
// so the result is identical for any worker count. workers <= 0 means one
// per available hardware thread.
TallyRow tally_nesting(int n, int workers = 0);

// Minimal word size observed for each nesting index, with the quantities
// the conjecture talks about: s = number of non-zero squares below the
// index. Reported for comparison, not asserted.
struct MinSizeEntry {
  int ni = 0;
  int min_size = 0;
  int squares = 0;           // s
  int ni_minus_squares = 0;  // n − s
  int ni_plus_squares = 0;   // n + s

  friend bool operator==(const MinSizeEntry&, const MinSizeEntry&) = default;
};

// Tallies sizes 1..size_cap until every index 1..max_ni has appeared.
// Throws if the cap is exceeded before that happens.
std::vector<MinSizeEntry> min_size_for_ni(int max_ni, int size_cap = 8,
                                          int workers = 0);

// Uniformly random double occurrence word of the given size (letters
// 1..size in a shuffled arrangement; not necessarily ascending).
Word random_dow(int size, std::mt19937_64& rng);

}  // namespace downest
