#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "downest/enumeration.hpp"
#include "downest/word.hpp"

using namespace downest;

namespace {

Word W(const char* text) { return parse_word(text, WordFormat::auto_detect); }

// Brute-force sparse-subword oracle: try every index subset of w with the
// pattern's length and compare ascending forms.
bool inherent_oracle(const Word& pattern, const Word& w) {
  int k = pattern.length();
  int n = w.length();
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    std::vector<Letter> sub;
    sub.reserve(static_cast<std::size_t>(k));
    for (int i : idx) sub.push_back(w[i]);
    if (ascending_relabel(Word(sub)) == pattern) return true;
    // next combination
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

TEST_CASE("parse_word handles both formats") {
  Word w = parse_word("1212", WordFormat::compact);
  CHECK(w.letters() == std::vector<Letter>{1, 2, 1, 2});

  Word tokens = parse_word("12 7 12 7", WordFormat::tokens);
  CHECK(tokens.letters() == std::vector<Letter>{1, 2, 1, 2});
  CHECK(tokens.symbol(1) == "12");
  CHECK(tokens.symbol(2) == "7");
  CHECK(tokens.to_tokens() == "12 7 12 7");

  CHECK(parse_word("", WordFormat::auto_detect).empty());
  CHECK(parse_word("  ", WordFormat::auto_detect).empty());

  // auto picks tokens when whitespace is present
  CHECK(W("1 2 1 2") == W("1212"));

  CHECK_THROWS_AS(parse_word("12-12", WordFormat::compact),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_word("a! b b a!", WordFormat::tokens),
                  std::invalid_argument);
}

TEST_CASE("words display with their original symbols") {
  Word w = W("abba");
  CHECK(w.letters() == std::vector<Letter>{1, 2, 2, 1});
  CHECK(w.str() == "abba");
  CHECK(w.to_compact() == "abba");

  Word wide = W("10 20 20 10");
  CHECK(wide.str() == "10 20 20 10");
  CHECK_THROWS_AS(wide.to_compact(), std::invalid_argument);

  // programmatic words display as decimal ids
  CHECK(Word({1, 2, 2, 1}).str() == "1221");
}

TEST_CASE("validate_dow") {
  CHECK(validate_dow(W("1212")));
  CHECK_FALSE(validate_dow(Word({1, 2, 1})));
  CHECK(validate_dow(Word()));
  CHECK_FALSE(validate_dow(Word({1, 1, 1, 1})));
}

TEST_CASE("ascending_relabel") {
  CHECK(ascending_relabel(Word({3, 1, 3, 2, 1, 2})) ==
        Word({1, 2, 1, 3, 2, 3}));
  CHECK(ascending_relabel(W("1212")) == W("1212"));
  CHECK(ascending_relabel(Word({2, 1, 2, 1})) == W("1212"));
  CHECK(ascending_relabel(Word()).empty());

  SUBCASE("idempotent and label-invariant") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      Word w = random_dow(5, rng);
      Word asc = ascending_relabel(w);
      CHECK(ascending_relabel(asc) == asc);
      CHECK(is_ascending(asc));
      // relabel w by an arbitrary injective map: shift every id by 3
      std::vector<Letter> shifted;
      for (Letter a : w.letters()) shifted.push_back(a + 3);
      CHECK(ascending_relabel(Word(std::move(shifted))) == asc);
    }
  }
}

TEST_CASE("reverse is an involution") {
  CHECK(downest::reverse(W("123321")) == W("123321"));
  CHECK(downest::reverse(W("1212")) == Word({2, 1, 2, 1}));
  CHECK(downest::reverse(Word()).empty());

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Word w = random_dow(6, rng);
    CHECK(downest::reverse(downest::reverse(w)) == w);
  }
}

TEST_CASE("reverse_equivalent") {
  CHECK(reverse_equivalent(W("1212"), Word({2, 1, 2, 1})));
  CHECK(reverse_equivalent(W("123321"), W("123321")));
  CHECK_FALSE(reverse_equivalent(W("121323"), W("123213")));
  // different alphabets, same shape
  CHECK(reverse_equivalent(W("abba"), W("1221")));
}

TEST_CASE("canonical_form") {
  CHECK(canonical_form(Word({2, 1, 2, 1})) == W("1212"));
  CHECK(canonical_form(W("123321")) == W("123321"));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    Word w = random_dow(3 + trial % 5, rng);
    CHECK(canonical_form(w) == canonical_form(downest::reverse(w)));
    CHECK(is_ascending(canonical_form(w)));
  }
}

TEST_CASE("subword_removal deletes a double occurrence segment") {
  Word w = W("1123234554");
  CHECK(subword_removal(w, {6, 4}).str() == "112323");
  CHECK(subword_removal(subword_removal(w, {6, 4}), {0, 2}).str() == "2323");
  CHECK(subword_removal(w, {3, 0}) == w);

  // segment 232 is not a double occurrence word
  CHECK_THROWS_AS(subword_removal(w, {2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(subword_removal(w, {8, 4}), std::invalid_argument);

  SUBCASE("length drops by the span and the result stays valid") {
    std::mt19937_64 rng(17);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
      Word v = random_dow(5, rng);
      for (int start = 0; start < v.length(); ++start)
        for (int len = 2; start + len <= v.length(); len += 2) {
          OccurrenceSpan span{start, len};
          if (!validate_dow(segment(v, span))) continue;
          Word reduced = subword_removal(v, span);
          CHECK(reduced.length() == v.length() - len);
          CHECK(validate_dow(reduced));
          ++checked;
        }
    }
    CHECK(checked > 100);  // the sweep actually exercised removals
  }
}

TEST_CASE("set_removal is order independent") {
  Word w = W("1123234554");
  CHECK(set_removal(w, {{0, 2}, {6, 4}}).str() == "2323");
  CHECK(set_removal(w, {{6, 4}, {0, 2}}).str() == "2323");
  CHECK(set_removal(W("123324564561"), {{1, 4}, {5, 6}}).str() == "11");
  CHECK(set_removal(w, {}) == w);

  CHECK_THROWS_AS(set_removal(w, {{0, 4}, {2, 4}}), std::invalid_argument);

  SUBCASE("any permutation of manual removals gives the same word") {
    // oracle: remove spans one at a time in permutation order, shifting
    // later spans left past the deleted ones
    Word v = W("112233445566");
    std::vector<OccurrenceSpan> spans = {{0, 2}, {4, 2}, {8, 2}};
    Word expected = set_removal(v, spans);
    std::vector<int> order = {0, 1, 2};
    do {
      Word current = v;
      std::vector<OccurrenceSpan> left(spans);
      for (int pick : order) {
        OccurrenceSpan target = left[static_cast<std::size_t>(pick)];
        current = subword_removal(current, target);
        for (auto& s : left)
          if (s.start > target.start) s.start -= target.length;
      }
      CHECK(current == expected);
    } while (std::next_permutation(order.begin(), order.end()));
  }
}

TEST_CASE("letter_removal") {
  CHECK(letter_removal(W("1123234554"), 3).str() == "11224554");
  CHECK(letter_removal(W("123324564561"), 1).str() == "2332456456");
  CHECK(letter_removal(W("11"), 1).empty());
  CHECK_THROWS_AS(letter_removal(W("11"), 2), std::invalid_argument);
  CHECK_THROWS_AS(letter_removal(Word({1, 1, 1, 1}), 1),
                  std::invalid_argument);
}

TEST_CASE("segment extracts a contiguous piece") {
  Word w = W("1233214545");
  CHECK(segment(w, {0, 6}).str() == "123321");
  CHECK(segment(w, {6, 4}).str() == "4545");
  CHECK(segment(w, {4, 0}).empty());
  CHECK_THROWS_AS(segment(w, {8, 4}), std::invalid_argument);
}

TEST_CASE("is_inherent finds sparse subwords") {
  CHECK(is_inherent(W("121323"), W("121323")));
  CHECK_FALSE(is_inherent(W("123213"), W("121323")));
  CHECK(is_inherent(W("11"), W("1212")));
  CHECK(is_inherent(W("11"), W("123321")));
  CHECK_FALSE(is_inherent(W("11"), Word()));
  CHECK(is_inherent(Word(), W("1212")));

  // the pattern must be in ascending order
  CHECK_THROWS_AS(is_inherent(Word({2, 1, 2, 1}), W("1212")),
                  std::invalid_argument);

  SUBCASE("agrees with the brute-force oracle") {
    std::vector<Word> patterns = {W("1212"),   W("1122"),   W("1221"),
                                  W("123213"), W("123132"), W("121323"),
                                  W("121212")};
    // frozen check for one long word; then randomized cross-checks
    CHECK(is_inherent(W("121212"), W("123324564561")) ==
          inherent_oracle(W("121212"), W("123324564561")));

    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
      Word w = random_dow(4 + trial % 2, rng);
      for (const Word& p : patterns)
        CHECK(is_inherent(p, w) == inherent_oracle(p, w));
    }
  }
}
