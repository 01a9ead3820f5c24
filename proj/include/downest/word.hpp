#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace downest {

// Letters are dense 1-based integer ids, assigned in first-occurrence order
// at parse time. Display symbols for the original tokens live in a shared
// name table; words built programmatically have no table and display their
// ids in decimal.
using Letter = int;

using NameTable = std::vector<std::string>;

// A contiguous range of positions inside a word.
struct OccurrenceSpan {
  int start = 0;
  int length = 0;

  int end() const { return start + length; }

  friend bool operator==(const OccurrenceSpan&, const OccurrenceSpan&) = default;
};

// A finite sequence of letters. A word is double occurrence when every
// distinct letter appears exactly twice; validate_dow checks that. The empty
// word is written ε throughout.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Letter> letters,
                std::shared_ptr<const NameTable> names = nullptr);

  int length() const { return static_cast<int>(letters_.size()); }
  int size() const;  // number of distinct letters
  bool empty() const { return letters_.empty(); }

  Letter operator[](int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<Letter>& letters() const { return letters_; }
  const std::shared_ptr<const NameTable>& names() const { return names_; }

  bool contains(Letter a) const;

  // Display symbol for a letter: the original token when known, the decimal
  // id otherwise.
  std::string symbol(Letter a) const;
  std::string to_tokens() const;
  // One character per letter; throws std::invalid_argument when a symbol is
  // wider than one character.
  std::string to_compact() const;
  // Compact when every symbol is a single character, tokens otherwise.
  // ε renders as the empty string.
  std::string str() const;

  // Equality and ordering look at letter ids only, never at display names.
  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_;
  }
  friend bool operator<(const Word& a, const Word& b) {
    return a.letters_ < b.letters_;
  }

 private:
  std::vector<Letter> letters_;
  std::shared_ptr<const NameTable> names_;
};

enum class WordFormat { compact, tokens, auto_detect };

// compact: one alphanumeric character per letter. tokens: whitespace-separated
// alphanumeric tokens. auto_detect picks tokens when the (trimmed) text
// contains whitespace. Letters are normalized to dense ids by first
// occurrence; original tokens are kept for display.
Word parse_word(std::string_view text, WordFormat format = WordFormat::auto_detect);

// True iff every distinct letter occurs exactly twice. ε is valid.
bool validate_dow(const Word& w);

// True iff the word equals its own ascending relabeling.
bool is_ascending(const Word& w);

// The unique relabeling whose first occurrences read 1, 2, 3, ... from the
// left. Idempotent; drops display names.
Word ascending_relabel(const Word& w);

Word reverse(const Word& w);

// Equal up to reversal, compared after ascending relabeling of each side.
bool reverse_equivalent(const Word& a, const Word& b);

// The lexicographically smaller of ascending_relabel(w) and
// ascending_relabel(reverse(w)). Identical for reverse-equivalent inputs,
// which makes it the memoization key for nesting-index searches.
Word canonical_form(const Word& w);

// The segment of w addressed by span, as a word of its own.
Word segment(const Word& w, OccurrenceSpan span);

// Deletes the segment at span. The segment must itself be a double
// occurrence word; throws std::invalid_argument otherwise.
Word subword_removal(const Word& w, OccurrenceSpan span);

// Deletes several pairwise-disjoint double occurrence segments. The result
// does not depend on removal order.
Word set_removal(const Word& w, std::vector<OccurrenceSpan> spans);

// Deletes both occurrences of a letter. Throws std::invalid_argument when
// the letter does not occur exactly twice.
Word letter_removal(const Word& w, Letter a);

// True iff some (not necessarily contiguous) subsequence of w relabels to
// pattern. The pattern must be in ascending order.
bool is_inherent(const Word& pattern, const Word& w);

namespace detail {

// Raw-sequence versions of ascending_relabel and canonical_form, used by the
// nesting-index search to skip Word construction in its inner loop.
std::vector<Letter> ascending_vec(const std::vector<Letter>& letters);
std::vector<Letter> canonical_vec(const std::vector<Letter>& letters);

}  // namespace detail

}  // namespace downest
