#include "downest/nesting.hpp"

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace downest {

std::string NiCache::key_of(const std::vector<Letter>& canonical) {
  std::string key;
  key.reserve(canonical.size());
  for (Letter a : canonical) {
    if (a < 1 || a > 255)
      throw std::invalid_argument("NiCache: letter id out of byte range");
    key.push_back(static_cast<char>(a));
  }
  return key;
}

std::optional<int> NiCache::lookup(std::string_view key) const {
  auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void NiCache::store(std::string key, int value) {
  map_.emplace(std::move(key), value);
}

void NiCache::merge_from(const NiCache& other) {
  for (const auto& [key, value] : other.map_) map_.emplace(key, value);
}

void NiCache::load(std::istream& in) {
  std::string header;
  if (!std::getline(in, header) || header != "downest-ni-cache 1")
    throw std::runtime_error("NiCache: unrecognized cache header");
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::size_t sep = line.find(' ');
    if (sep == std::string::npos)
      throw std::runtime_error("NiCache: malformed line '" + line + "'");
    std::string key;
    std::size_t pos = 0;
    while (pos < sep) {
      std::size_t comma = line.find(',', pos);
      if (comma == std::string::npos || comma > sep) comma = sep;
      int a = std::stoi(line.substr(pos, comma - pos));
      if (a < 1 || a > 255)
        throw std::runtime_error("NiCache: letter out of range in '" + line + "'");
      key.push_back(static_cast<char>(a));
      pos = comma + 1;
    }
    int value = std::stoi(line.substr(sep + 1));
    if (value < 0)
      throw std::runtime_error("NiCache: negative index in '" + line + "'");
    map_.emplace(std::move(key), value);
  }
}

void NiCache::save(std::ostream& out) const {
  std::vector<const std::string*> keys;
  keys.reserve(map_.size());
  for (const auto& [key, value] : map_) keys.push_back(&key);
  std::sort(keys.begin(), keys.end(),
            [](const std::string* a, const std::string* b) { return *a < *b; });
  out << "downest-ni-cache 1\n";
  for (const std::string* key : keys) {
    for (std::size_t i = 0; i < key->size(); ++i) {
      if (i > 0) out << ',';
      out << static_cast<int>(static_cast<unsigned char>((*key)[i]));
    }
    out << ' ' << map_.find(*key)->second << '\n';
  }
}

namespace {

std::vector<Letter> remove_spans(const std::vector<Letter>& seq,
                                 const std::vector<OccurrenceSpan>& spans) {
  std::vector<Letter> out;
  out.reserve(seq.size());
  std::size_t s = 0;
  for (std::size_t i = 0; i < seq.size();) {
    if (s < spans.size() && static_cast<int>(i) == spans[s].start) {
      i += static_cast<std::size_t>(spans[s].length);
      ++s;
    } else {
      out.push_back(seq[i++]);
    }
  }
  return out;
}

std::vector<Letter> remove_letter(const std::vector<Letter>& seq, Letter a) {
  std::vector<Letter> out;
  out.reserve(seq.size() - 2);
  for (Letter x : seq)
    if (x != a) out.push_back(x);
  return out;
}

// Exact nesting index of a canonical double occurrence word. Memoized
// recursion over the removal DAG: the successors of u are the operation 1
// result (when applicable) and u - a for each letter a, all canonicalized.
// Every successor is strictly shorter, and a word of size n reaches at most
// 2^n canonical states, so the recursion is exact at desk scale without any
// heuristic pruning. Two shortcuts are free: a successor ε means index 1,
// and once a successor of index 1 is seen nothing can beat 1 + 1.
int solve(const std::vector<Letter>& canon, NiCache& cache) {
  if (canon.empty()) return 0;
  if (canon.size() == 2) return 1;  // aa

  std::string key = NiCache::key_of(canon);
  if (auto hit = cache.lookup(key)) return *hit;

  int best = std::numeric_limits<int>::max();

  std::vector<OccurrenceSpan> spans = detail::maximal_spans(canon);
  if (!spans.empty()) {
    std::vector<Letter> child = remove_spans(canon, spans);
    if (child.empty()) {
      cache.store(std::move(key), 1);
      return 1;
    }
    best = solve(detail::canonical_vec(child), cache) + 1;
  }

  if (best > 2) {
    // canon is in ascending form, so its letters are exactly 1..size.
    Letter n = static_cast<Letter>(canon.size() / 2);
    std::vector<std::vector<Letter>> kids;
    kids.reserve(static_cast<std::size_t>(n));
    for (Letter a = 1; a <= n; ++a)
      kids.push_back(detail::canonical_vec(remove_letter(canon, a)));
    std::sort(kids.begin(), kids.end());
    kids.erase(std::unique(kids.begin(), kids.end()), kids.end());
    for (const auto& kid : kids) {
      int v = solve(kid, cache) + 1;
      if (v < best) best = v;
      if (best == 2) break;
    }
  }

  cache.store(std::move(key), best);
  return best;
}

void require_dow(const Word& w, const char* who) {
  if (!validate_dow(w))
    throw std::invalid_argument(std::string(who) +
                                ": not a double occurrence word");
}

std::vector<Letter> distinct_letters(const Word& w) {
  std::vector<Letter> out(w.letters());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

int nesting_index_value(const Word& w, NiCache& cache) {
  require_dow(w, "nesting_index");
  return solve(detail::canonical_vec(w.letters()), cache);
}

NestingResult nesting_index(const Word& w, NiCache& cache) {
  int index = nesting_index_value(w, cache);

  auto ni_of = [&cache](const Word& u) {
    return solve(detail::canonical_vec(u.letters()), cache);
  };

  // Walk a minimal reduction: at each word pick the first successor whose
  // index is one less, preferring operation 1, then letter removals ordered
  // by the canonical form of the result (letter id breaks ties).
  ReductionTrace trace;
  trace.initial = w;
  Word current = w;
  while (!current.empty()) {
    int target = ni_of(current) - 1;
    if (auto op1 = reduce_op1(current); op1 && ni_of(op1->word) == target) {
      trace.steps.push_back(
          {ReductionOp::Op1, std::move(op1->removed), 0, op1->word});
      current = trace.steps.back().word;
      continue;
    }
    struct Candidate {
      std::vector<Letter> canon;
      Letter letter;
      Word word;
    };
    std::vector<Candidate> candidates;
    for (Letter a : distinct_letters(current)) {
      Word next = letter_removal(current, a);
      candidates.push_back({detail::canonical_vec(next.letters()), a, next});
    }
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) {
                return std::tie(a.canon, a.letter) < std::tie(b.canon, b.letter);
              });
    bool advanced = false;
    for (auto& c : candidates) {
      if (solve(c.canon, cache) == target) {
        trace.steps.push_back({ReductionOp::Op2, {}, c.letter, c.word});
        current = trace.steps.back().word;
        advanced = true;
        break;
      }
    }
    if (!advanced)
      throw std::logic_error("nesting_index: no successor matches the index");
  }
  return {index, std::move(trace)};
}

NestingResult nesting_index(const Word& w) {
  thread_local NiCache cache;
  return nesting_index(w, cache);
}

bool is_one_reducible(const Word& w) {
  require_dow(w, "is_one_reducible");
  Word current = w;
  while (!current.empty()) {
    auto op1 = reduce_op1(current);
    if (!op1) return false;
    current = std::move(op1->word);
  }
  return true;
}

bool is_one_reducible_via_pattern(const Word& w) {
  require_dow(w, "is_one_reducible_via_pattern");
  static const std::vector<Word> forbidden = {
      Word({1, 2, 3, 2, 1, 3}),   // 123213
      Word({1, 2, 3, 1, 3, 2}),   // 123132
      Word({1, 2, 1, 3, 2, 3}),   // 121323
  };
  for (const Word& pattern : forbidden)
    if (is_inherent(pattern, w)) return false;
  return true;
}

bool verify_letter_removal_bound(const Word& w, NiCache& cache) {
  require_dow(w, "verify_letter_removal_bound");
  if (w.empty())
    throw std::invalid_argument("verify_letter_removal_bound: ε input");
  int ni = nesting_index_value(w, cache);
  for (Letter a : distinct_letters(w)) {
    int reduced = nesting_index_value(letter_removal(w, a), cache);
    if (ni > reduced + 1) return false;
  }
  return true;
}

bool verify_letter_removal_bound(const Word& w) {
  NiCache cache;
  return verify_letter_removal_bound(w, cache);
}

}  // namespace downest
