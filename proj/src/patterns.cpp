#include "downest/patterns.hpp"

#include <algorithm>
#include <stdexcept>

namespace downest {

std::string_view to_string(SubwordKind kind) {
  switch (kind) {
    case SubwordKind::Repeat: return "repeat";
    case SubwordKind::Return: return "return";
    case SubwordKind::Both: return "both";
  }
  return "?";
}

namespace {

// Both predicates on a segment [start, start+len) without materializing it.
bool segment_is_repeat(const std::vector<Letter>& w, int start, int len) {
  if (len < 2 || len % 2 != 0) return false;
  int half = len / 2;
  for (int i = 0; i < half; ++i)
    if (w[start + i] != w[start + half + i]) return false;
  for (int i = 0; i < half; ++i)
    for (int j = i + 1; j < half; ++j)
      if (w[start + i] == w[start + j]) return false;
  return true;
}

bool segment_is_return(const std::vector<Letter>& w, int start, int len) {
  if (len < 2 || len % 2 != 0) return false;
  int half = len / 2;
  for (int i = 0; i < half; ++i)
    if (w[start + i] != w[start + len - 1 - i]) return false;
  for (int i = 0; i < half; ++i)
    for (int j = i + 1; j < half; ++j)
      if (w[start + i] == w[start + j]) return false;
  return true;
}

SubwordKind segment_kind(const std::vector<Letter>& w, int start, int len) {
  bool rep = segment_is_repeat(w, start, len);
  bool ret = segment_is_return(w, start, len);
  if (rep && ret) return SubwordKind::Both;
  return rep ? SubwordKind::Repeat : SubwordKind::Return;
}

}  // namespace

bool is_repeat_word(const Word& w) {
  return segment_is_repeat(w.letters(), 0, w.length());
}

bool is_return_word(const Word& w) {
  return segment_is_return(w.letters(), 0, w.length());
}

namespace detail {

std::vector<OccurrenceSpan> maximal_spans(const std::vector<Letter>& letters) {
  int n = static_cast<int>(letters.size());
  std::vector<OccurrenceSpan> found;

  // Longest segments first: anything inside an accepted segment cannot be
  // maximal, so it is skipped without testing.
  for (int len = n - n % 2; len >= 2; len -= 2) {
    for (int start = 0; start + len <= n; ++start) {
      bool covered = false;
      for (const auto& s : found) {
        if (s.start <= start && start + len <= s.end()) {
          covered = true;
          break;
        }
      }
      if (covered) continue;
      if (segment_is_repeat(letters, start, len) ||
          segment_is_return(letters, start, len)) {
        found.push_back({start, len});
      }
    }
  }

  std::sort(found.begin(), found.end(),
            [](const OccurrenceSpan& a, const OccurrenceSpan& b) {
              return a.start < b.start;
            });
  for (std::size_t i = 0; i + 1 < found.size(); ++i) {
    if (found[i].end() > found[i + 1].start)
      throw std::logic_error("maximal_spans: spans overlap");
  }
  return found;
}

}  // namespace detail

std::vector<MaximalSubword> maximal_subwords(const Word& w) {
  std::vector<MaximalSubword> out;
  for (OccurrenceSpan s : detail::maximal_spans(w.letters()))
    out.push_back({s, segment_kind(w.letters(), s.start, s.length)});
  return out;
}

std::optional<Op1Result> reduce_op1(const Word& w) {
  std::vector<MaximalSubword> removed = maximal_subwords(w);
  if (removed.empty()) return std::nullopt;
  std::vector<OccurrenceSpan> spans;
  spans.reserve(removed.size());
  for (const auto& m : removed) spans.push_back(m.span);
  return Op1Result{set_removal(w, std::move(spans)), std::move(removed)};
}

Word reduce_op2(const Word& w, Letter a) { return letter_removal(w, a); }

std::optional<std::string> trace_error(const ReductionTrace& t) {
  Word current = t.initial;
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const TraceStep& step = t.steps[i];
    std::string where = "step " + std::to_string(i + 1) + ": ";
    if (step.op == ReductionOp::Op1) {
      std::vector<MaximalSubword> expected = maximal_subwords(current);
      if (expected.empty())
        return where + "operation 1 inapplicable: no maximal subword";
      if (step.removed != expected)
        return where + "recorded spans are not the maximal subwords of " +
               current.str();
      std::vector<OccurrenceSpan> spans;
      for (const auto& m : expected) spans.push_back(m.span);
      Word next = set_removal(current, std::move(spans));
      // Recorded words are compared as written: a step parsed back from a
      // report must validate even though its internal ids differ.
      if (next.to_tokens() != step.word.to_tokens())
        return where + "word does not match the operation 1 result";
      current = std::move(next);
    } else {
      if (!current.contains(step.letter))
        return where + "letter " + current.symbol(step.letter) + " not in " +
               current.str();
      Word next = letter_removal(current, step.letter);
      if (next.to_tokens() != step.word.to_tokens())
        return where + "word does not match the letter removal result";
      current = std::move(next);
    }
  }
  if (!current.empty())
    return "final word is " + current.str() + ", not ε";
  return std::nullopt;
}

bool validate_trace(const ReductionTrace& t) { return !trace_error(t); }

}  // namespace downest
