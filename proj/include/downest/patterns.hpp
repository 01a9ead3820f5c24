#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "downest/word.hpp"

namespace downest {

// A segment of the form a1..an a1..an is a repeat word, a1..an an..a1 a
// return word. A two-letter segment aa is both at once.
enum class SubwordKind { Repeat, Return, Both };

std::string_view to_string(SubwordKind kind);

struct MaximalSubword {
  OccurrenceSpan span;
  SubwordKind kind = SubwordKind::Both;

  friend bool operator==(const MaximalSubword&, const MaximalSubword&) = default;
};

bool is_repeat_word(const Word& w);
bool is_return_word(const Word& w);

namespace detail {

// Maximal repeat/return spans of a raw letter sequence, sorted by start.
// Shared with the nesting-index search, which works on bare sequences.
std::vector<OccurrenceSpan> maximal_spans(const std::vector<Letter>& letters);

}  // namespace detail

// Every repeat/return segment not contained in a strictly larger one, sorted
// by start position. The results are always pairwise disjoint; a violation
// would be a bug and throws std::logic_error.
std::vector<MaximalSubword> maximal_subwords(const Word& w);

struct Op1Result {
  Word word;
  std::vector<MaximalSubword> removed;
};

// Reduction operation 1: delete all maximal subwords at once. nullopt when
// the word has none (the caller must fall back to a letter removal).
std::optional<Op1Result> reduce_op1(const Word& w);

// Reduction operation 2: delete both occurrences of one letter.
Word reduce_op2(const Word& w, Letter a);

enum class ReductionOp { Op1, Op2 };

struct TraceStep {
  ReductionOp op = ReductionOp::Op1;
  std::vector<MaximalSubword> removed;  // Op1: the spans taken out
  Letter letter = 0;                    // Op2: the letter taken out
  Word word;                            // word after the step
};

// A run of reduction operations. A complete reduction ends at ε.
struct ReductionTrace {
  Word initial;
  std::vector<TraceStep> steps;

  const Word& final_word() const {
    return steps.empty() ? initial : steps.back().word;
  }
};

// nullopt when every step follows from its predecessor by the recorded
// operation and the trace ends at ε; otherwise a description of the first
// violation.
std::optional<std::string> trace_error(const ReductionTrace& t);

bool validate_trace(const ReductionTrace& t);

}  // namespace downest
