#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "downest/patterns.hpp"

namespace downest {

// Memo table mapping canonical words to their exact nesting index. Not
// synchronized: use one per thread, or guard access externally.
class NiCache {
 public:
  static std::string key_of(const std::vector<Letter>& canonical);

  std::optional<int> lookup(std::string_view key) const;
  void store(std::string key, int value);

  std::size_t size() const { return map_.size(); }
  void merge_from(const NiCache& other);

  // Text format: a "downest-ni-cache 1" header line, then one
  // "<comma-joined letters> <index>" line per entry. save emits entries in
  // sorted order so the file is byte-stable.
  void load(std::istream& in);
  void save(std::ostream& out) const;

 private:
  struct Hash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };
  std::unordered_map<std::string, int, Hash, std::equal_to<>> map_;
};

struct NestingResult {
  int index = 0;
  ReductionTrace witness;  // validates, and has exactly `index` steps
};

// Exact minimum number of reduction operations taking w to ε.
int nesting_index_value(const Word& w, NiCache& cache);

// Exact nesting index plus a witness reduction of that length. The witness
// is deterministic: operation 1 is preferred, then letter removals ordered
// by the canonical form of the resulting word.
NestingResult nesting_index(const Word& w, NiCache& cache);
NestingResult nesting_index(const Word& w);  // thread-local cache

// True iff iterating operation 1 alone reaches ε. ε itself qualifies.
bool is_one_reducible(const Word& w);

// Same predicate, decided by pattern containment instead: true iff none of
// 123213, 123132, 121323 is inherent in w.
bool is_one_reducible_via_pattern(const Word& w);

// True iff NI(w) <= NI(w - a) + 1 for every letter a of w. Requires w != ε.
bool verify_letter_removal_bound(const Word& w, NiCache& cache);
bool verify_letter_removal_bound(const Word& w);

}  // namespace downest
