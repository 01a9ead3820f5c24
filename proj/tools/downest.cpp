// downest — reductions and nesting index for double occurrence words.
//
// Exit codes: 0 success, 2 input error, 3 inapplicable operation,
// 4 verification counterexample.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "downest/diagrams.hpp"
#include "downest/enumeration.hpp"
#include "downest/nesting.hpp"
#include "downest/patterns.hpp"
#include "downest/serialize.hpp"
#include "downest/word.hpp"

namespace {

using namespace downest;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInapplicable = 3;
constexpr int kExitCounterexample = 4;

std::string display(const Word& w) { return w.empty() ? "ε" : w.str(); }

WordFormat format_from_name(const std::string& name) {
  if (name == "compact") return WordFormat::compact;
  if (name == "tokens") return WordFormat::tokens;
  if (name == "auto") return WordFormat::auto_detect;
  throw std::invalid_argument("unknown format '" + name +
                              "' (expected compact, tokens, or auto)");
}

// Parse and insist on a double occurrence word, naming the offender.
Word read_dow(const std::string& text, const std::string& format) {
  Word w = parse_word(text, format_from_name(format));
  if (!validate_dow(w)) {
    std::map<Letter, int> counts;
    for (Letter a : w.letters()) ++counts[a];
    for (const auto& [letter, count] : counts)
      if (count != 2)
        throw std::invalid_argument("'" + w.symbol(letter) + "' occurs " +
                                    std::to_string(count) +
                                    " time(s), expected exactly 2");
  }
  return w;
}

std::optional<Letter> find_letter(const Word& w, const std::string& token) {
  for (Letter a : w.letters())
    if (w.symbol(a) == token) return a;
  return std::nullopt;
}

std::string describe_removed(const Word& before,
                             const std::vector<MaximalSubword>& removed) {
  std::string out;
  for (std::size_t i = 0; i < removed.size(); ++i) {
    if (i > 0) out += ", ";
    out += segment(before, removed[i].span).str();
    out += '@';
    out += std::to_string(removed[i].span.start);
  }
  return out;
}

void print_witness(std::ostream& out, const ReductionTrace& trace) {
  if (trace.steps.empty()) {
    out << "witness: ε\n";
    return;
  }
  out << "witness:\n";
  Word prev = trace.initial;
  for (const TraceStep& step : trace.steps) {
    if (step.op == ReductionOp::Op1)
      out << "  op 1 removes " << describe_removed(prev, step.removed);
    else
      out << "  op 2 removes " << prev.symbol(step.letter);
    out << " -> " << display(step.word) << "\n";
    prev = step.word;
  }
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOptions {
  std::string text;
  std::string format = "auto";
  bool json = false;
};

int cmd_analyze(const AnalyzeOptions& opt, NiCache& cache) {
  Word w = read_dow(opt.text, opt.format);
  Word asc = ascending_relabel(w);
  std::vector<MaximalSubword> maximal = maximal_subwords(w);
  bool one_red = is_one_reducible(w);
  std::optional<C12Witness> c12 = contains_c12(w);
  NestingResult result = nesting_index(w, cache);

  // The report must be internally consistent; a violation is a bug.
  if (one_red == c12.has_value())
    throw std::logic_error("analyze: one-reducibility disagrees with the "
                           "forbidden-configuration witness");
  if (static_cast<int>(result.witness.steps.size()) != result.index ||
      !validate_trace(result.witness))
    throw std::logic_error("analyze: witness does not validate");

  if (opt.json) {
    nlohmann::json report{
        {"word", display(w)},
        {"letters", to_json(w)},
        {"ascending", display(asc)},
        {"size", w.size()},
        {"length", w.length()},
        {"one_reducible", one_red},
        {"nesting_index", result.index},
        {"witness", to_json(result.witness)},
    };
    nlohmann::json subwords = nlohmann::json::array();
    for (const MaximalSubword& m : maximal) subwords.push_back(to_json(m));
    report["maximal_subwords"] = std::move(subwords);
    if (c12)
      report["c12_witness"] = nlohmann::json{{"x", w.symbol(c12->x)},
                                             {"y", w.symbol(c12->y)},
                                             {"z", w.symbol(c12->z)}};
    else
      report["c12_witness"] = nullptr;
    std::cout << report.dump(2) << "\n";
    return kExitOk;
  }

  std::cout << "word: " << display(w) << "\n";
  std::cout << "ascending: " << display(asc) << "\n";
  std::cout << "size: " << w.size() << "\n";
  std::cout << "length: " << w.length() << "\n";
  std::cout << "maximal subwords: ";
  if (maximal.empty()) {
    std::cout << "none\n";
  } else {
    for (std::size_t i = 0; i < maximal.size(); ++i) {
      if (i > 0) std::cout << ", ";
      std::cout << segment(w, maximal[i].span).str() << '@'
                << maximal[i].span.start << " ("
                << to_string(maximal[i].kind) << ")";
    }
    std::cout << "\n";
  }
  std::cout << "one-reducible: " << (one_red ? "yes" : "no") << "\n";
  if (c12)
    std::cout << "c12 witness: {" << w.symbol(c12->x) << ", "
              << w.symbol(c12->y) << ", " << w.symbol(c12->z) << "} (center "
              << w.symbol(c12->y) << ")\n";
  else
    std::cout << "c12 witness: none\n";
  std::cout << "nesting index: " << result.index << "\n";
  print_witness(std::cout, result.witness);
  return kExitOk;
}

// ----------------------------------------------------------------- reduce

struct ReduceOptions {
  std::string text;
  std::string format = "auto";
  std::string op;      // "1" or "2:<letter>"
  std::string remove;  // comma list of start:len spans or segment texts
  bool all = false;
};

std::vector<OccurrenceSpan> parse_removals(const Word& w,
                                           const std::string& request) {
  std::vector<OccurrenceSpan> spans;
  std::size_t pos = 0;
  while (pos <= request.size()) {
    std::size_t comma = request.find(',', pos);
    std::string item = request.substr(
        pos, comma == std::string::npos ? std::string::npos : comma - pos);
    pos = comma == std::string::npos ? request.size() + 1 : comma + 1;
    if (item.empty()) continue;

    std::size_t colon = item.find(':');
    if (colon != std::string::npos) {
      int start = std::stoi(item.substr(0, colon));
      int length = std::stoi(item.substr(colon + 1));
      spans.push_back({start, length});
      continue;
    }

    // A segment given by its text; it must occur exactly once.
    Word needle = parse_word(item, WordFormat::auto_detect);
    int n = needle.length();
    if (n == 0 || n > w.length())
      throw std::invalid_argument("segment '" + item + "' not found");
    std::vector<int> hits;
    for (int i = 0; i + n <= w.length(); ++i) {
      bool match = true;
      for (int k = 0; k < n; ++k)
        if (w.symbol(w[i + k]) != needle.symbol(needle[k])) {
          match = false;
          break;
        }
      if (match) hits.push_back(i);
    }
    if (hits.empty())
      throw std::invalid_argument("segment '" + item + "' not found");
    if (hits.size() > 1)
      throw std::invalid_argument("segment '" + item + "' occurs " +
                                  std::to_string(hits.size()) +
                                  " times; use start:len to pick one");
    spans.push_back({hits.front(), n});
  }
  return spans;
}

int cmd_reduce(const ReduceOptions& opt) {
  Word w = read_dow(opt.text, opt.format);
  int chosen = (opt.op.empty() ? 0 : 1) + (opt.all ? 1 : 0) +
               (opt.remove.empty() ? 0 : 1);
  if (chosen != 1)
    throw std::invalid_argument(
        "choose exactly one of --op, --all, --remove");

  if (opt.all) {
    std::cout << display(w) << "\n";
    Word current = w;
    while (!current.empty()) {
      auto op1 = reduce_op1(current);
      if (!op1) break;
      current = std::move(op1->word);
      std::cout << display(current) << "\n";
    }
    return kExitOk;
  }

  if (!opt.remove.empty()) {
    Word result = set_removal(w, parse_removals(w, opt.remove));
    std::cout << display(result) << "\n";
    return kExitOk;
  }

  if (opt.op == "1") {
    auto op1 = reduce_op1(w);
    if (!op1) {
      std::cerr << "operation 1 inapplicable: no maximal subword\n";
      return kExitInapplicable;
    }
    std::cout << display(op1->word) << "\n";
    return kExitOk;
  }
  if (opt.op.rfind("2:", 0) == 0) {
    std::string token = opt.op.substr(2);
    std::optional<Letter> a = find_letter(w, token);
    if (!a)
      throw std::invalid_argument("unknown letter '" + token + "'");
    std::cout << display(reduce_op2(w, *a)) << "\n";
    return kExitOk;
  }
  throw std::invalid_argument("bad --op value '" + opt.op +
                              "' (expected 1 or 2:<letter>)");
}

// ------------------------------------------------------------------ tally

struct TallyOptions {
  int size = 0;
  int workers = 0;
  std::string csv_path;
  bool allow_long = false;
  bool json = false;
};

int cmd_tally(const TallyOptions& opt) {
  if (opt.size < 1)
    throw std::invalid_argument("--size must be at least 1");
  if (opt.size > 9)
    throw std::invalid_argument("size " + std::to_string(opt.size) +
                                " is not supported (maximum 9)");
  if (opt.size > 7 && !opt.allow_long)
    throw std::invalid_argument("size " + std::to_string(opt.size) +
                                " is a long run; pass --allow-long");

  TallyRow row = tally_nesting(opt.size, opt.workers);
  TallyTable table;
  table.set_row(row);
  std::string csv = table.to_csv();

  if (opt.json)
    std::cout << to_json(row).dump(2) << "\n";
  else
    std::cout << csv;

  if (!opt.csv_path.empty()) {
    std::ofstream out(opt.csv_path);
    if (!out)
      throw std::invalid_argument("cannot write to '" + opt.csv_path + "'");
    out << csv;
  }
  return kExitOk;
}

// --------------------------------------------------------------- generate

struct GenerateOptions {
  std::string family;
  int n = 0;
  int m = 0;
};

int cmd_generate(const GenerateOptions& opt) {
  Word w;
  if (opt.family == "repeat") {
    w = make_repeat(opt.n);
  } else if (opt.family == "return") {
    w = make_return(opt.n);
  } else if (opt.family == "grid") {
    w = make_grid(opt.n, opt.m == 0 ? opt.n : opt.m);
  } else if (opt.family == "w1") {
    w = make_w1(opt.n);
  } else if (opt.family == "w2") {
    w = make_w2(opt.n);
  } else {
    throw std::invalid_argument("unknown family '" + opt.family + "'");
  }
  std::cout << w.to_tokens() << "\n";
  return kExitOk;
}

// ----------------------------------------------------------------- export

struct ExportOptions {
  std::string text;
  std::string format = "auto";
  std::string what;
  bool dot = false;
  bool json = false;
  std::string out_path;
};

int cmd_export(const ExportOptions& opt) {
  if (opt.dot && opt.json)
    throw std::invalid_argument("choose one of --dot, --json");
  Word w = read_dow(opt.text, opt.format);

  std::string payload;
  if (opt.what == "chords") {
    ChordDiagram d = chord_diagram(w);
    payload = opt.dot ? to_dot(d) : to_json(d).dump(2) + "\n";
  } else if (opt.what == "circle") {
    CircleGraph g = circle_graph(w);
    payload = opt.dot ? to_dot(g) : to_json(g).dump(2) + "\n";
  } else {
    throw std::invalid_argument("unknown --what '" + opt.what +
                                "' (expected chords or circle)");
  }

  if (opt.out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(opt.out_path);
    if (!out)
      throw std::invalid_argument("cannot write to '" + opt.out_path + "'");
    out << payload;
  }
  return kExitOk;
}

// ----------------------------------------------------------------- verify

struct VerifyOptions {
  std::string suite;
  int max_size = 5;
  int n = 0;
  int m = 0;
  int samples = 200;
  std::uint64_t seed = 1729;
  int max_ni = 5;
  int size_cap = 7;
  int workers = 0;
};

int suite_theorem_c12(const VerifyOptions& opt) {
  if (opt.max_size > 6)
    throw std::invalid_argument("--max-size above 6 is not exhaustive-scale");
  std::cout << "suite theorem-c12: one-reducibility, the forbidden "
               "three-chord configuration, and the three inherent words "
               "must agree\n";
  std::uint64_t checked = 0;
  for (int n = 0; n <= opt.max_size; ++n) {
    bool bad = false;
    Word offender;
    enumerate_ascending(n, [&](const Word& w) {
      if (bad) return;
      bool reducible = is_one_reducible(w);
      bool no_c12 = !contains_c12(w).has_value();
      bool pattern_free = is_one_reducible_via_pattern(w);
      ++checked;
      if (reducible != no_c12 || reducible != pattern_free) {
        bad = true;
        offender = w;
      }
    });
    if (bad) {
      std::cout << "counterexample: " << display(offender) << "\n";
      return kExitCounterexample;
    }
  }
  std::cout << "pass: " << checked << " words, size <= " << opt.max_size
            << "\n";
  return kExitOk;
}

int suite_lemma_bound(const VerifyOptions& opt, NiCache& cache) {
  if (opt.max_size > 6)
    throw std::invalid_argument("--max-size above 6 is not exhaustive-scale");
  std::cout << "suite lemma-bound: removing a letter lowers the nesting "
               "index by at most one\n";
  std::uint64_t checked = 0;
  for (int n = 1; n <= opt.max_size; ++n) {
    bool bad = false;
    Word offender;
    enumerate_ascending(n, [&](const Word& w) {
      if (bad) return;
      ++checked;
      if (!verify_letter_removal_bound(w, cache)) {
        bad = true;
        offender = w;
      }
    });
    if (bad) {
      std::cout << "counterexample: " << display(offender) << "\n";
      return kExitCounterexample;
    }
  }
  std::cout << "pass: " << checked << " words, size <= " << opt.max_size
            << "\n";
  return kExitOk;
}

int suite_cnm(const VerifyOptions& opt, NiCache& cache) {
  int n = opt.n == 0 ? 2 : opt.n;
  int m = opt.m == 0 ? n : opt.m;
  std::cout << "suite cnm: the complete-bipartite crossing pattern forces "
               "nesting index >= n+1\n";

  Word grid = make_grid(n, m);
  auto witness = contains_cnm(grid, n, m);
  if (!witness) {
    std::cout << "counterexample: grid(" << n << "," << m << ") = "
              << display(grid) << " has no crossing-pattern witness\n";
    return kExitCounterexample;
  }
  int ni = nesting_index_value(grid, cache);
  std::cout << "grid(" << n << "," << m << ") = " << display(grid)
            << ": witness found, nesting index " << ni << "\n";
  if (ni < n + 1) {
    std::cout << "counterexample: nesting index " << ni << " < " << (n + 1)
              << "\n";
    return kExitCounterexample;
  }

  if (n + m <= opt.max_size) {
    std::uint64_t checked = 0;
    for (int size = n + m; size <= opt.max_size; ++size) {
      bool bad = false;
      Word offender;
      enumerate_ascending(size, [&](const Word& w) {
        if (bad) return;
        if (!contains_cnm(w, n, m)) return;
        ++checked;
        if (nesting_index_value(w, cache) < n + 1) {
          bad = true;
          offender = w;
        }
      });
      if (bad) {
        std::cout << "counterexample: " << display(offender) << "\n";
        return kExitCounterexample;
      }
    }
    std::cout << "pass: bound holds on grid(" << n << "," << m << ") and "
              << checked << " witnessed words of size <= " << opt.max_size
              << "\n";
  } else {
    std::cout << "pass: bound holds on grid(" << n << "," << m
              << ") (exhaustive sweep skipped: n+m exceeds --max-size)\n";
  }
  return kExitOk;
}

int suite_families(const VerifyOptions& opt, NiCache& cache) {
  int upto = opt.n == 0 ? 4 : opt.n;
  if (upto > 10)
    throw std::invalid_argument("--n above 10 is out of desk scale");
  std::cout << "suite families: w1(n) and w2(n) share a circle graph while "
               "their nesting indices differ by n-1\n";
  for (int k = 1; k <= upto; ++k) {
    Word w1 = make_w1(k);
    Word w2 = make_w2(k);
    int ni1 = nesting_index_value(w1, cache);
    int ni2 = nesting_index_value(w2, cache);
    bool iso = graphs_isomorphic(circle_graph(w1), circle_graph(w2));
    std::cout << "n=" << k << ": NI(w1)=" << ni1 << " NI(w2)=" << ni2
              << " circle graphs " << (iso ? "isomorphic" : "DIFFER") << "\n";
    if (ni1 != k || ni2 != 1 || !iso) {
      std::cout << "counterexample at n=" << k << "\n";
      return kExitCounterexample;
    }
  }
  std::cout << "pass: n = 1.." << upto << "\n";
  return kExitOk;
}

int suite_reverse_invariance(const VerifyOptions& opt, NiCache& cache) {
  if (opt.max_size > 6)
    throw std::invalid_argument("--max-size above 6 is not exhaustive-scale");
  std::cout << "suite reverse-invariance: a word and its reverse have the "
               "same nesting index\n";
  std::uint64_t checked = 0;
  for (int n = 0; n <= opt.max_size; ++n) {
    bool bad = false;
    Word offender;
    enumerate_ascending(n, [&](const Word& w) {
      if (bad) return;
      ++checked;
      if (nesting_index_value(w, cache) !=
          nesting_index_value(downest::reverse(w), cache)) {
        bad = true;
        offender = w;
      }
    });
    if (bad) {
      std::cout << "counterexample: " << display(offender) << "\n";
      return kExitCounterexample;
    }
  }
  std::mt19937_64 rng(opt.seed);
  for (int i = 0; i < opt.samples; ++i) {
    int size = 6 + i % 3;
    Word w = random_dow(size, rng);
    ++checked;
    if (nesting_index_value(w, cache) !=
        nesting_index_value(downest::reverse(w), cache)) {
      std::cout << "counterexample: " << display(w) << "\n";
      return kExitCounterexample;
    }
  }
  std::cout << "pass: " << checked << " words (exhaustive size <= "
            << opt.max_size << ", " << opt.samples
            << " random of sizes 6-8, seed " << opt.seed << ")\n";
  return kExitOk;
}

int suite_conjecture(const VerifyOptions& opt) {
  std::cout << "suite conjecture: minimal observed word size per nesting "
               "index, next to the conjectured quantities\n";
  std::vector<MinSizeEntry> entries =
      min_size_for_ni(opt.max_ni, opt.size_cap, opt.workers);
  std::cout << "ni  min_size  s  ni-s  ni+s\n";
  for (const MinSizeEntry& e : entries)
    std::cout << e.ni << "   " << e.min_size << "         " << e.squares
              << "  " << e.ni_minus_squares << "     " << e.ni_plus_squares
              << "\n";
  std::cout << "reported for comparison; nothing is asserted\n";
  return kExitOk;
}

int cmd_verify(const VerifyOptions& opt, NiCache& cache) {
  if (opt.suite == "theorem-c12") return suite_theorem_c12(opt);
  if (opt.suite == "lemma-bound") return suite_lemma_bound(opt, cache);
  if (opt.suite == "cnm") return suite_cnm(opt, cache);
  if (opt.suite == "families") return suite_families(opt, cache);
  if (opt.suite == "reverse-invariance")
    return suite_reverse_invariance(opt, cache);
  if (opt.suite == "conjecture") return suite_conjecture(opt);
  throw std::invalid_argument("unknown suite '" + opt.suite + "'");
}

// ------------------------------------------------------------ persistence

struct PersistentCache {
  NiCache cache;
  std::string path;

  PersistentCache() {
    const char* env = std::getenv("DOWNEST_CACHE");
    if (env != nullptr && *env != '\0') path = env;
    if (path.empty()) return;
    std::ifstream in(path);
    if (!in) return;  // fresh cache; the save below creates the file
    try {
      cache.load(in);
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring cache file '" << path
                << "': " << e.what() << "\n";
      cache = NiCache();
    }
  }

  void save() {
    if (path.empty()) return;
    std::ofstream out(path);
    if (!out) {
      std::cerr << "warning: cannot write cache file '" << path << "'\n";
      return;
    }
    cache.save(out);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reductions and nesting index for double occurrence words"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_opt;
  CLI::App* analyze = app.add_subcommand(
      "analyze", "full report: maximal subwords, reducibility, nesting index");
  analyze->add_option("word", analyze_opt.text, "the word to analyze")
      ->required();
  analyze->add_option("--format", analyze_opt.format,
                      "input format: compact, tokens, or auto");
  analyze->add_flag("--json", analyze_opt.json, "emit the report as JSON");

  ReduceOptions reduce_opt;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "apply one reduction operation (or iterate to fixpoint)");
  reduce->add_option("word", reduce_opt.text, "the word to reduce")
      ->required();
  reduce->add_option("--format", reduce_opt.format,
                     "input format: compact, tokens, or auto");
  reduce->add_option("--op", reduce_opt.op,
                     "1 (all maximal subwords) or 2:<letter>");
  reduce->add_flag("--all", reduce_opt.all,
                   "iterate operation 1 to a fixpoint, printing each stage");
  reduce->add_option("--remove", reduce_opt.remove,
                     "comma list of subwords to delete, each start:len or "
                     "the segment text");

  TallyOptions tally_opt;
  CLI::App* tally = app.add_subcommand(
      "tally", "count words of one size by nesting index");
  tally->add_option("--size", tally_opt.size, "word size to enumerate")
      ->required();
  tally->add_option("--workers", tally_opt.workers,
                    "worker threads (default: available parallelism)");
  tally->add_option("--csv", tally_opt.csv_path, "also write the CSV here");
  tally->add_flag("--allow-long", tally_opt.allow_long,
                  "permit sizes 8 and 9 (seconds to minutes)");
  tally->add_flag("--json", tally_opt.json, "print JSON instead of CSV");

  GenerateOptions generate_opt;
  CLI::App* generate =
      app.add_subcommand("generate", "emit a word from a named family");
  generate
      ->add_option("--family", generate_opt.family,
                   "repeat, return, grid, w1, or w2")
      ->required();
  generate->add_option("--n", generate_opt.n, "family parameter")->required();
  generate->add_option("--m", generate_opt.m,
                       "second grid parameter (default: n)");

  ExportOptions export_opt;
  CLI::App* exporter = app.add_subcommand(
      "export", "emit the chord diagram or circle graph of a word");
  exporter->add_option("word", export_opt.text, "the word to export")
      ->required();
  exporter->add_option("--format", export_opt.format,
                       "input format: compact, tokens, or auto");
  exporter
      ->add_option("--what", export_opt.what, "chords or circle")
      ->required();
  exporter->add_flag("--dot", export_opt.dot, "emit DOT");
  exporter->add_flag("--json", export_opt.json, "emit JSON (default)");
  exporter->add_option("--out", export_opt.out_path,
                       "write to this file instead of stdout");

  VerifyOptions verify_opt;
  CLI::App* verify =
      app.add_subcommand("verify", "run a verification suite");
  verify
      ->add_option("--suite", verify_opt.suite,
                   "theorem-c12, lemma-bound, cnm, families, "
                   "reverse-invariance, or conjecture")
      ->required();
  verify->add_option("--max-size", verify_opt.max_size,
                     "exhaustive sweep bound (max 6)");
  verify->add_option("--n", verify_opt.n, "family / pattern parameter");
  verify->add_option("--m", verify_opt.m, "second pattern parameter");
  verify->add_option("--samples", verify_opt.samples,
                     "random samples for randomized suites");
  verify->add_option("--seed", verify_opt.seed, "random seed");
  verify->add_option("--max-ni", verify_opt.max_ni,
                     "conjecture: largest nesting index to locate");
  verify->add_option("--size-cap", verify_opt.size_cap,
                     "conjecture: largest size to tally");
  verify->add_option("--workers", verify_opt.workers,
                     "conjecture: tally worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (analyze->parsed() || verify->parsed()) {
      PersistentCache persistent;
      int rc = analyze->parsed() ? cmd_analyze(analyze_opt, persistent.cache)
                                 : cmd_verify(verify_opt, persistent.cache);
      persistent.save();
      return rc;
    }
    if (reduce->parsed()) return cmd_reduce(reduce_opt);
    if (tally->parsed()) return cmd_tally(tally_opt);
    if (generate->parsed()) return cmd_generate(generate_opt);
    if (exporter->parsed()) return cmd_export(export_opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return kExitInput;
}
