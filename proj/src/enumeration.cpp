#include "downest/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "downest/nesting.hpp"

namespace downest {

namespace {

// Partial generation state: the sequence so far, the letters still open
// (kept ascending — letters open in increasing order), and the next letter
// that has never been used.
struct GenState {
  std::vector<Letter> seq;
  std::vector<Letter> open;
  Letter next_unused = 1;
};

// At each step the candidates, in ascending numeric order, are: close any
// open letter, then open next_unused. Depth-first in that order makes the
// stream lexicographic.
template <class Fn>
void extend(GenState& st, int n, int stop_length, Fn& sink) {
  if (static_cast<int>(st.seq.size()) == stop_length) {
    sink(st);
    return;
  }
  for (std::size_t i = 0; i < st.open.size(); ++i) {
    Letter a = st.open[i];
    st.open.erase(st.open.begin() + static_cast<std::ptrdiff_t>(i));
    st.seq.push_back(a);
    extend(st, n, stop_length, sink);
    st.seq.pop_back();
    st.open.insert(st.open.begin() + static_cast<std::ptrdiff_t>(i), a);
  }
  if (st.next_unused <= n) {
    st.open.push_back(st.next_unused);
    st.seq.push_back(st.next_unused);
    ++st.next_unused;
    extend(st, n, stop_length, sink);
    --st.next_unused;
    st.seq.pop_back();
    st.open.pop_back();
  }
}

}  // namespace

void enumerate_ascending(int n,
                         const std::function<void(const Word&)>& yield) {
  if (n < 0) throw std::invalid_argument("enumerate_ascending: negative size");
  GenState st;
  auto sink = [&yield](const GenState& s) { yield(Word(s.seq)); };
  extend(st, n, 2 * n, sink);
}

std::vector<Word> all_ascending_words(int n) {
  std::vector<Word> out;
  out.reserve(double_factorial_odd(n));
  enumerate_ascending(n, [&out](const Word& w) { out.push_back(w); });
  return out;
}

std::uint64_t double_factorial_odd(int n) {
  if (n < 0) throw std::invalid_argument("double_factorial_odd: negative n");
  std::uint64_t product = 1;
  for (int k = 3; k <= 2 * n - 1; k += 2) product *= static_cast<std::uint64_t>(k);
  return product;
}

std::uint64_t TallyRow::total() const {
  std::uint64_t sum = 0;
  for (const auto& [ni, count] : counts) sum += count;
  return sum;
}

void TallyTable::set_row(TallyRow row) {
  int size = row.size;
  rows_[size] = std::move(row);
}

const TallyRow* TallyTable::row(int size) const {
  auto it = rows_.find(size);
  return it == rows_.end() ? nullptr : &it->second;
}

std::string TallyTable::to_csv() const {
  std::ostringstream out;
  out << "size,ni,count\n";
  for (const auto& [size, row] : rows_)
    for (const auto& [ni, count] : row.counts)
      out << size << ',' << ni << ',' << count << '\n';
  return out.str();
}

TallyRow tally_nesting(int n, int workers) {
  if (n < 1) throw std::invalid_argument("tally_nesting: size must be >= 1");
  if (workers <= 0) {
    unsigned hw = std::thread::hardware_concurrency();
    workers = hw == 0 ? 1 : static_cast<int>(hw);
  }

  // Split the generation tree at a fixed depth; each partial state is one
  // unit of work. Shallow trees (small n) run in this thread.
  constexpr int kSplitDepth = 6;
  if (workers == 1 || 2 * n <= kSplitDepth) {
    TallyRow row;
    row.size = n;
    NiCache cache;
    GenState st;
    auto sink = [&row, &cache](const GenState& s) {
      row.counts[nesting_index_value(Word(s.seq), cache)] += 1;
    };
    extend(st, n, 2 * n, sink);
    return row;
  }

  std::vector<GenState> prefixes;
  {
    GenState st;
    auto sink = [&prefixes](const GenState& s) { prefixes.push_back(s); };
    extend(st, n, kSplitDepth, sink);
  }

  std::atomic<std::size_t> next{0};
  std::vector<TallyRow> partial(static_cast<std::size_t>(workers));
  auto run = [&](std::size_t slot) {
    TallyRow local;
    local.size = n;
    NiCache cache;
    auto sink = [&local, &cache](const GenState& s) {
      local.counts[nesting_index_value(Word(s.seq), cache)] += 1;
    };
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= prefixes.size()) break;
      GenState st = prefixes[i];
      extend(st, n, 2 * n, sink);
    }
    partial[slot] = std::move(local);
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers - 1));
  for (int t = 1; t < workers; ++t)
    pool.emplace_back(run, static_cast<std::size_t>(t));
  run(0);
  for (std::thread& t : pool) t.join();

  TallyRow row;
  row.size = n;
  for (const TallyRow& local : partial)
    for (const auto& [ni, count] : local.counts) row.counts[ni] += count;
  return row;
}

std::vector<MinSizeEntry> min_size_for_ni(int max_ni, int size_cap,
                                          int workers) {
  if (max_ni < 1)
    throw std::invalid_argument("min_size_for_ni: max_ni must be >= 1");
  if (size_cap < 1 || size_cap > 9)
    throw std::invalid_argument("min_size_for_ni: size cap out of range");

  std::map<int, int> first_size;
  for (int size = 1;
       size <= size_cap && static_cast<int>(first_size.size()) < max_ni;
       ++size) {
    TallyRow row = tally_nesting(size, workers);
    for (const auto& [ni, count] : row.counts)
      if (ni <= max_ni && count > 0) first_size.try_emplace(ni, size);
  }
  if (static_cast<int>(first_size.size()) < max_ni)
    throw std::invalid_argument(
        "min_size_for_ni: size cap " + std::to_string(size_cap) +
        " too small to reach nesting index " + std::to_string(max_ni));

  std::vector<MinSizeEntry> out;
  out.reserve(static_cast<std::size_t>(max_ni));
  for (int ni = 1; ni <= max_ni; ++ni) {
    int s = 0;
    for (int k = 1; k * k < ni; ++k) ++s;
    out.push_back({ni, first_size.at(ni), s, ni - s, ni + s});
  }
  return out;
}

Word random_dow(int size, std::mt19937_64& rng) {
  if (size < 0) throw std::invalid_argument("random_dow: negative size");
  std::vector<Letter> v;
  v.reserve(2 * static_cast<std::size_t>(size));
  for (Letter a = 1; a <= size; ++a) {
    v.push_back(a);
    v.push_back(a);
  }
  // Fisher–Yates with rng() modulo: the bias is ~2⁻⁶⁰ for these lengths
  // and the sequence is identical across standard libraries.
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(rng() % i);
    std::swap(v[i - 1], v[j]);
  }
  return Word(std::move(v));
}

}  // namespace downest
