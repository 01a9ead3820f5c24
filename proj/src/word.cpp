#include "downest/word.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>
#include <unordered_map>
#include <utility>

namespace downest {

namespace {

bool all_alnum(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) != 0;
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

Word from_tokens(const std::vector<std::string>& tokens) {
  std::vector<Letter> letters;
  letters.reserve(tokens.size());
  auto names = std::make_shared<NameTable>();
  std::unordered_map<std::string, Letter> ids;
  for (const auto& tok : tokens) {
    auto [it, fresh] = ids.try_emplace(tok, static_cast<Letter>(ids.size()) + 1);
    if (fresh) names->push_back(tok);
    letters.push_back(it->second);
  }
  return Word(std::move(letters), std::move(names));
}

}  // namespace

Word::Word(std::vector<Letter> letters, std::shared_ptr<const NameTable> names)
    : letters_(std::move(letters)), names_(std::move(names)) {
  for (Letter a : letters_) {
    if (a < 1) throw std::invalid_argument("Word: letter ids must be >= 1");
  }
}

int Word::size() const {
  std::vector<Letter> seen(letters_);
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  return static_cast<int>(seen.size());
}

bool Word::contains(Letter a) const {
  return std::find(letters_.begin(), letters_.end(), a) != letters_.end();
}

std::string Word::symbol(Letter a) const {
  if (names_ && a >= 1 && a <= static_cast<Letter>(names_->size()))
    return (*names_)[static_cast<std::size_t>(a - 1)];
  return std::to_string(a);
}

std::string Word::to_tokens() const {
  std::string out;
  for (int i = 0; i < length(); ++i) {
    if (i > 0) out += ' ';
    out += symbol(letters_[i]);
  }
  return out;
}

std::string Word::to_compact() const {
  std::string out;
  for (Letter a : letters_) {
    std::string s = symbol(a);
    if (s.size() != 1)
      throw std::invalid_argument("to_compact: symbol '" + s +
                                  "' is not a single character");
    out += s;
  }
  return out;
}

std::string Word::str() const {
  for (Letter a : letters_)
    if (symbol(a).size() != 1) return to_tokens();
  return to_compact();
}

Word parse_word(std::string_view text, WordFormat format) {
  std::string_view body = trim(text);
  if (body.empty()) return Word();

  if (format == WordFormat::auto_detect) {
    bool has_space = std::any_of(body.begin(), body.end(), [](unsigned char c) {
      return std::isspace(c) != 0;
    });
    format = has_space ? WordFormat::tokens : WordFormat::compact;
  }

  std::vector<std::string> tokens;
  if (format == WordFormat::compact) {
    for (char c : body) {
      if (!std::isalnum(static_cast<unsigned char>(c)))
        throw std::invalid_argument(std::string("parse_word: invalid character '") +
                                    c + "' in compact input");
      tokens.emplace_back(1, c);
    }
  } else {
    std::size_t i = 0;
    while (i < body.size()) {
      while (i < body.size() && std::isspace(static_cast<unsigned char>(body[i])))
        ++i;
      std::size_t j = i;
      while (j < body.size() && !std::isspace(static_cast<unsigned char>(body[j])))
        ++j;
      if (j > i) {
        std::string tok(body.substr(i, j - i));
        if (!all_alnum(tok))
          throw std::invalid_argument("parse_word: invalid token '" + tok + "'");
        tokens.push_back(std::move(tok));
      }
      i = j;
    }
  }
  return from_tokens(tokens);
}

bool validate_dow(const Word& w) {
  std::unordered_map<Letter, int> counts;
  for (Letter a : w.letters()) ++counts[a];
  for (const auto& [letter, count] : counts)
    if (count != 2) return false;
  return true;
}

namespace detail {

std::vector<Letter> ascending_vec(const std::vector<Letter>& letters) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  Letter max_id = 0;
  for (Letter a : letters) max_id = std::max(max_id, a);
  std::vector<Letter> relabel(static_cast<std::size_t>(max_id) + 1, 0);
  Letter next = 0;
  for (Letter a : letters) {
    Letter& slot = relabel[static_cast<std::size_t>(a)];
    if (slot == 0) slot = ++next;
    out.push_back(slot);
  }
  return out;
}

std::vector<Letter> canonical_vec(const std::vector<Letter>& letters) {
  std::vector<Letter> fwd = ascending_vec(letters);
  std::vector<Letter> rev(letters.rbegin(), letters.rend());
  std::vector<Letter> bwd = ascending_vec(rev);
  return fwd <= bwd ? fwd : bwd;
}

}  // namespace detail

Word ascending_relabel(const Word& w) {
  return Word(detail::ascending_vec(w.letters()));
}

bool is_ascending(const Word& w) { return ascending_relabel(w) == w; }

Word reverse(const Word& w) {
  std::vector<Letter> out(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(out), w.names());
}

bool reverse_equivalent(const Word& a, const Word& b) {
  Word lhs = ascending_relabel(a);
  return lhs == ascending_relabel(b) || lhs == ascending_relabel(reverse(b));
}

Word canonical_form(const Word& w) {
  return Word(detail::canonical_vec(w.letters()));
}

namespace {

void check_span(const Word& w, OccurrenceSpan span) {
  if (span.start < 0 || span.length < 0 || span.end() > w.length())
    throw std::invalid_argument("span out of bounds");
}

bool segment_is_dow(const std::vector<Letter>& letters, OccurrenceSpan span) {
  std::unordered_map<Letter, int> counts;
  for (int i = span.start; i < span.end(); ++i) ++counts[letters[i]];
  for (const auto& [letter, count] : counts)
    if (count != 2) return false;
  return true;
}

}  // namespace

Word segment(const Word& w, OccurrenceSpan span) {
  check_span(w, span);
  std::vector<Letter> out(w.letters().begin() + span.start,
                          w.letters().begin() + span.end());
  return Word(std::move(out), w.names());
}

Word subword_removal(const Word& w, OccurrenceSpan span) {
  check_span(w, span);
  if (!segment_is_dow(w.letters(), span))
    throw std::invalid_argument(
        "subword_removal: segment is not a double occurrence word");
  std::vector<Letter> out(w.letters());
  out.erase(out.begin() + span.start, out.begin() + span.end());
  return Word(std::move(out), w.names());
}

Word set_removal(const Word& w, std::vector<OccurrenceSpan> spans) {
  std::sort(spans.begin(), spans.end(),
            [](const OccurrenceSpan& a, const OccurrenceSpan& b) {
              return a.start < b.start;
            });
  for (std::size_t i = 0; i < spans.size(); ++i) {
    check_span(w, spans[i]);
    if (i + 1 < spans.size() && spans[i].end() > spans[i + 1].start)
      throw std::invalid_argument("set_removal: overlapping spans");
  }
  // Right-to-left so earlier starts stay valid.
  Word out = w;
  for (auto it = spans.rbegin(); it != spans.rend(); ++it)
    out = subword_removal(out, *it);
  return out;
}

Word letter_removal(const Word& w, Letter a) {
  int count = static_cast<int>(
      std::count(w.letters().begin(), w.letters().end(), a));
  if (count != 2)
    throw std::invalid_argument("letter_removal: letter " + w.symbol(a) +
                                " occurs " + std::to_string(count) +
                                " times, expected 2");
  std::vector<Letter> out;
  out.reserve(w.letters().size() - 2);
  for (Letter x : w.letters())
    if (x != a) out.push_back(x);
  return Word(std::move(out), w.names());
}

namespace {

// Backtracking subsequence match: bind pattern letters to word letters
// injectively, scanning left to right.
bool match_from(const std::vector<Letter>& pattern, const std::vector<Letter>& word,
                std::size_t pi, std::size_t wi,
                std::unordered_map<Letter, Letter>& bound,
                std::vector<bool>& used) {
  if (pi == pattern.size()) return true;
  if (pattern.size() - pi > word.size() - wi) return false;
  for (std::size_t k = wi; k + (pattern.size() - pi) <= word.size(); ++k) {
    Letter pl = pattern[pi];
    Letter wl = word[k];
    auto it = bound.find(pl);
    if (it != bound.end()) {
      if (it->second != wl) continue;
      if (match_from(pattern, word, pi + 1, k + 1, bound, used)) return true;
    } else {
      if (used[static_cast<std::size_t>(wl)]) continue;
      bound.emplace(pl, wl);
      used[static_cast<std::size_t>(wl)] = true;
      if (match_from(pattern, word, pi + 1, k + 1, bound, used)) return true;
      bound.erase(pl);
      used[static_cast<std::size_t>(wl)] = false;
    }
  }
  return false;
}

}  // namespace

bool is_inherent(const Word& pattern, const Word& w) {
  if (!is_ascending(pattern))
    throw std::invalid_argument("is_inherent: pattern not in ascending order");
  if (pattern.empty()) return true;
  if (w.empty()) return false;
  Letter max_letter = *std::max_element(w.letters().begin(), w.letters().end());
  std::unordered_map<Letter, Letter> bound;
  std::vector<bool> used(static_cast<std::size_t>(max_letter) + 1, false);
  return match_from(pattern.letters(), w.letters(), 0, 0, bound, used);
}

}  // namespace downest
