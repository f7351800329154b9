#include "sylvester/exact.hpp"

#include <atomic>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

#include "sylvester/errors.hpp"

namespace sylvester {

namespace {

constexpr int kQuadLetters = 6;

// Trie of reduced prefixes of w0 in S_4. A node knows the current left-to-
// right order of the four local strands; crossing local strands (p, q) moves
// to the child for letter 1 + (position of the left one).
class QuadAutomaton {
 public:
  static constexpr std::uint8_t kNone = 0xFF;

  QuadAutomaton() {
    nodes_.push_back({{0, 1, 2, 3}, {}, -1});
    std::map<std::vector<int>, std::uint8_t> index{{{}, 0}};
    for (std::size_t k = 0; k < nodes_.size(); ++k) {
      for (int p = 0; p < 4; ++p) {
        for (int q = p + 1; q < 4; ++q) {
          const auto order = nodes_[k].order;
          int pos_p = 0, pos_q = 0;
          for (int s = 0; s < 4; ++s) {
            if (order[s] == p) pos_p = s;
            if (order[s] == q) pos_q = s;
          }
          std::uint8_t target = kNone;
          if (pos_q == pos_p + 1) {
            std::vector<int> word = nodes_[k].word;
            word.push_back(pos_p + 1);
            auto [it, inserted] = index.try_emplace(word, static_cast<std::uint8_t>(nodes_.size()));
            if (inserted) {
              Node child{order, word, -1};
              std::swap(child.order[pos_p], child.order[pos_q]);
              if (static_cast<int>(word.size()) == kQuadLetters)
                child.cls = static_cast<int>(classify(ReducedWord{4, word}));
              nodes_.push_back(std::move(child));
            }
            target = it->second;
          }
          transitions_.resize(nodes_.size() * 6, kNone);
          transitions_[k * 6 + pair_id(p, q)] = target;
        }
      }
    }
    transitions_.resize(nodes_.size() * 6, kNone);
  }

  static int pair_id(int p, int q) {
    static constexpr int ids[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
    return ids[p][q];
  }

  std::uint8_t step(std::uint8_t node, int pair) const { return transitions_[node * 6u + pair]; }
  int terminal_class(std::uint8_t node) const { return nodes_[node].cls; }

 private:
  struct Node {
    std::array<int, 4> order;
    std::vector<int> word;
    int cls;
  };
  std::vector<Node> nodes_;
  std::vector<std::uint8_t> transitions_;
};

const QuadAutomaton& automaton() {
  static const QuadAutomaton a;
  return a;
}

// Depth-first counter below a prefix. Keeps one automaton state per 4-subset
// and per-class counts of subsets whose induced word is already complete.
class PrefixCounter {
 public:
  explicit PrefixCounter(int n)
      : n_(n), full_(long_word_length(n)), perm_(static_cast<std::size_t>(n)) {
    const auto subsets = all_subsets(n, 4);
    subsets_ = subsets.size();
    offsets_.assign(static_cast<std::size_t>((n + 1) * (n + 1) + 1), 0);
    std::vector<std::vector<Update>> by_pair(static_cast<std::size_t>((n + 1) * (n + 1)));
    for (std::size_t s = 0; s < subsets.size(); ++s) {
      const auto v = subsets[s].values();
      for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q)
          by_pair[v[p] * (n + 1) + v[q]].push_back(
              {static_cast<std::uint16_t>(s), static_cast<std::uint8_t>(QuadAutomaton::pair_id(p, q))});
    }
    for (std::size_t k = 0; k < by_pair.size(); ++k) {
      offsets_[k] = updates_.size();
      updates_.insert(updates_.end(), by_pair[k].begin(), by_pair[k].end());
    }
    offsets_[by_pair.size()] = updates_.size();
    states_.assign(static_cast<std::size_t>(full_ + 1) * subsets_, 0);
    counts_.assign(static_cast<std::size_t>(full_ + 1), {});
  }

  CountFragment run(const ReducedWord& prefix) {
    if (prefix.n != n_ || static_cast<int>(prefix.size()) > full_)
      throw InvalidPrefix("prefix does not fit S_" + std::to_string(n_));
    fragment_ = CountFragment{};
    fragment_.histogram.assign(subsets_ + 1, 0);
    for (int p = 0; p < n_; ++p) perm_[p] = p + 1;
    std::fill(states_.begin(), states_.begin() + static_cast<std::ptrdiff_t>(subsets_), 0);
    counts_[0] = {};
    int depth = 0;
    for (int letter : prefix.letters) {
      if (letter < 1 || letter >= n_ || perm_[letter - 1] > perm_[letter])
        throw InvalidPrefix("'" + to_string(prefix) + "' is not a reduced prefix");
      cross(depth, letter);
      std::swap(perm_[letter - 1], perm_[letter]);
      ++depth;
    }
    descend(depth);
    return std::move(fragment_);
  }

 private:
  struct Update {
    std::uint16_t subset;
    std::uint8_t pair;
  };

  // Fills level depth+1 from level depth for the crossing at `letter`.
  void cross(int depth, int letter) {
    const auto& fsa = automaton();
    const std::uint8_t* from = &states_[static_cast<std::size_t>(depth) * subsets_];
    std::uint8_t* to = &states_[static_cast<std::size_t>(depth + 1) * subsets_];
    std::copy(from, from + subsets_, to);
    auto& counts = counts_[depth + 1];
    counts = counts_[depth];
    const int a = perm_[letter - 1];
    const int b = perm_[letter];
    const std::size_t key = static_cast<std::size_t>(a * (n_ + 1) + b);
    for (std::size_t u = offsets_[key]; u < offsets_[key + 1]; ++u) {
      const std::uint8_t next = fsa.step(to[updates_[u].subset], updates_[u].pair);
      to[updates_[u].subset] = next;
      const int cls = fsa.terminal_class(next);
      if (cls >= 0) ++counts[cls];
    }
  }

  void descend(int depth) {
    if (depth == full_) {
      const auto& counts = counts_[depth];
      ++fragment_.words;
      for (int c = 0; c < 4; ++c) fragment_.class_pairs[c] += counts[c];
      ++fragment_.histogram[counts[0]];
      return;
    }
    for (int letter = 1; letter < n_; ++letter) {
      if (perm_[letter - 1] > perm_[letter]) continue;
      cross(depth, letter);
      std::swap(perm_[letter - 1], perm_[letter]);
      descend(depth + 1);
      std::swap(perm_[letter - 1], perm_[letter]);
    }
  }

  int n_;
  int full_;
  std::vector<int> perm_;
  std::size_t subsets_ = 0;
  std::vector<std::size_t> offsets_;
  std::vector<Update> updates_;
  std::vector<std::uint8_t> states_;
  std::vector<std::array<std::uint32_t, 4>> counts_;
  CountFragment fragment_;
};

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_add_overflow(a, b, &out)) throw ResourceLimit("64-bit fragment counter overflow");
  return out;
}

std::uint64_t parse_u64(std::string_view text) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    throw CheckpointMismatch("corrupt checkpoint field '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t end = text.find(sep, start);
    out.push_back(text.substr(start, end == std::string_view::npos ? end : end - start));
    if (end == std::string_view::npos) return out;
    start = end + 1;
  }
}

}  // namespace

void CountFragment::merge(const CountFragment& other) {
  words = checked_add(words, other.words);
  for (int c = 0; c < 4; ++c) class_pairs[c] = checked_add(class_pairs[c], other.class_pairs[c]);
  if (histogram.size() < other.histogram.size()) histogram.resize(other.histogram.size(), 0);
  for (std::size_t k = 0; k < other.histogram.size(); ++k)
    histogram[k] = checked_add(histogram[k], other.histogram[k]);
}

std::pair<BigInt, BigInt> PairCountReport::probability() const {
  if (total_pairs == 0) return {0, 1};
  const BigInt g = boost::multiprecision::gcd(reentrant_pairs, total_pairs);
  return {reentrant_pairs / g, total_pairs / g};
}

std::string prefix_key(const ReducedWord& prefix) {
  return prefix.letters.empty() ? std::string(".") : to_string(prefix);
}

std::string Checkpoint::header(int n, int depth) {
  return "#sylvester-ckpt v1 n=" + std::to_string(n) + " depth=" + std::to_string(depth);
}

std::string Checkpoint::record(const std::string& key, const CountFragment& f) {
  std::ostringstream out;
  out << key << '\t' << f.words << '\t' << f.class_pairs[0] << '\t' << f.class_pairs[1] << '\t'
      << f.class_pairs[2] << '\t' << f.class_pairs[3] << '\t';
  bool first = true;
  for (std::size_t k = 0; k < f.histogram.size(); ++k) {
    if (f.histogram[k] == 0) continue;
    out << (first ? "" : ",") << k << ':' << f.histogram[k];
    first = false;
  }
  return out.str();
}

std::optional<Checkpoint> Checkpoint::load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  if (text.empty()) return std::nullopt;

  Checkpoint ck;
  std::size_t start = 0;
  bool have_header = false;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    if (end == std::string::npos) break;  // torn final line
    const std::string_view line(text.data() + start, end - start);
    start = end + 1;
    ck.valid_bytes = start;
    if (!have_header) {
      int n = 0, depth = 0;
      if (std::sscanf(std::string(line).c_str(), "#sylvester-ckpt v1 n=%d depth=%d", &n, &depth) != 2)
        throw CheckpointMismatch("missing checkpoint header in " + path.string());
      ck.n = n;
      ck.prefix_depth = depth;
      have_header = true;
      continue;
    }
    if (line.empty()) continue;
    const auto fields = split(line, '\t');
    if (fields.size() != 6 && fields.size() != 7)
      throw CheckpointMismatch("checkpoint record has " + std::to_string(fields.size()) + " fields");
    CountFragment f;
    f.words = parse_u64(fields[1]);
    for (int c = 0; c < 4; ++c) f.class_pairs[c] = parse_u64(fields[2 + c]);
    if (fields.size() == 7) {
      f.histogram.assign(static_cast<std::size_t>(ck.n * (ck.n - 1) * (ck.n - 2) * (ck.n - 3) / 24 + 1), 0);
      if (!fields[6].empty()) {
        for (auto entry : split(fields[6], ',')) {
          const auto kv = split(entry, ':');
          if (kv.size() != 2) throw CheckpointMismatch("corrupt histogram entry");
          const auto k = parse_u64(kv[0]);
          if (k >= f.histogram.size()) throw CheckpointMismatch("histogram key out of range");
          f.histogram[k] = parse_u64(kv[1]);
        }
      }
    } else {
      ck.histograms_present = false;
    }
    ck.completed[std::string(fields[0])] = std::move(f);
  }
  if (!have_header) return std::nullopt;
  return ck;
}

CountFragment count_prefix(int n, const ReducedWord& prefix) {
  PrefixCounter counter(n);
  return counter.run(prefix);
}

int default_prefix_depth(int n, int workers) {
  const std::size_t target = 8u * static_cast<std::size_t>(std::max(workers, 1));
  const int full = long_word_length(n);
  for (int depth = 0; depth < full; ++depth)
    if (reduced_prefixes(n, depth).size() >= target) return depth;
  return full;
}

PairCountReport exact_probability(int n, const ExactOptions& options) {
  if (n < 4) throw InvalidArgument("exact_probability needs n >= 4");
  const int workers = std::max(options.workers, 1);
  const int full = long_word_length(n);
  const BigInt subsets_per_word = BigInt(n) * (n - 1) * (n - 2) * (n - 3) / 24;
  const BigInt words_total = count_reduced_words(n);
  const BigInt predicted = words_total * subsets_per_word;
  if (predicted.convert_to<double>() > options.work_budget)
    throw ResourceLimit("n=" + std::to_string(n) + " needs " + predicted.str() +
                        " pair evaluations, budget is " + std::to_string(options.work_budget));

  std::optional<Checkpoint> ck;
  if (options.checkpoint) ck = Checkpoint::load(*options.checkpoint);
  int depth = 0;
  if (ck) {
    if (ck->n != n)
      throw CheckpointMismatch("checkpoint is for n=" + std::to_string(ck->n));
    if (options.prefix_depth && *options.prefix_depth != ck->prefix_depth)
      throw CheckpointMismatch("checkpoint depth " + std::to_string(ck->prefix_depth) +
                               " differs from requested " + std::to_string(*options.prefix_depth));
    depth = ck->prefix_depth;
  } else {
    depth = options.prefix_depth.value_or(default_prefix_depth(n, workers));
  }
  if (depth < 0 || depth > full) throw InvalidArgument("prefix depth out of range");

  const auto prefixes = reduced_prefixes(n, depth);
  std::vector<std::string> keys;
  keys.reserve(prefixes.size());
  for (const auto& p : prefixes) keys.push_back(prefix_key(p));

  std::vector<std::optional<CountFragment>> results(prefixes.size());
  std::vector<std::size_t> pending;
  {
    std::map<std::string, std::size_t> slot;
    for (std::size_t k = 0; k < keys.size(); ++k) slot[keys[k]] = k;
    if (ck) {
      for (auto& [key, f] : ck->completed) {
        auto it = slot.find(key);
        if (it == slot.end()) throw CheckpointMismatch("unknown prefix '" + key + "' in checkpoint");
        results[it->second] = f;
      }
    }
    for (std::size_t k = 0; k < results.size(); ++k)
      if (!results[k]) pending.push_back(k);
  }

  std::ofstream log;
  if (options.checkpoint) {
    if (ck) {
      std::filesystem::resize_file(*options.checkpoint, ck->valid_bytes);
      log.open(*options.checkpoint, std::ios::app | std::ios::binary);
    } else {
      log.open(*options.checkpoint, std::ios::trunc | std::ios::binary);
      log << Checkpoint::header(n, depth) << '\n' << std::flush;
    }
    if (!log) throw ResourceLimit("cannot write checkpoint " + options.checkpoint->string());
  }

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex io;
  std::size_t completed = prefixes.size() - pending.size();
  std::exception_ptr failure;

  auto work = [&] {
    PrefixCounter counter(n);
    while (!stop.load()) {
      const std::size_t j = next.fetch_add(1);
      if (j >= pending.size()) return;
      const std::size_t k = pending[j];
      try {
        CountFragment f = counter.run(prefixes[k]);
        std::lock_guard lock(io);
        if (log.is_open()) log << Checkpoint::record(keys[k], f) << '\n' << std::flush;
        results[k] = std::move(f);
        ++completed;
        if (options.on_progress && !options.on_progress(completed)) stop = true;
      } catch (...) {
        std::lock_guard lock(io);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int threads = std::min<int>(workers, static_cast<int>(std::max<std::size_t>(pending.size(), 1)));
    for (int t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);
  for (const auto& r : results)
    if (!r) throw Interrupted("run stopped with " + std::to_string(completed) + " of " +
                              std::to_string(prefixes.size()) + " prefixes complete");

  PairCountReport report;
  report.n = n;
  report.histogram_complete = !ck || ck->histograms_present;
  for (const auto& r : results) {
    report.total_words += r->words;
    for (int c = 0; c < 4; ++c) report.class_pairs[c] += r->class_pairs[c];
    for (std::size_t k = 0; k < r->histogram.size(); ++k)
      if (r->histogram[k] != 0) report.per_word_histogram[static_cast<int>(k)] += r->histogram[k];
  }
  report.reentrant_pairs = report.class_pairs[0];
  report.total_pairs = report.total_words * subsets_per_word;
  if (!report.histogram_complete) report.per_word_histogram.clear();
  return report;
}

std::array<BigInt, 4> class_pair_counts(int n, const ExactOptions& options) {
  return exact_probability(n, options).class_pairs;
}

std::string report_csv(const PairCountReport& r) {
  const auto [num, den] = r.probability();
  std::string out =
      "n,total_words,total_pairs,reentrant_pairs,c1_pairs,c2_pairs,c3_pairs,probability_num,"
      "probability_den\n";
  out += std::to_string(r.n) + ',' + r.total_words.str() + ',' + r.total_pairs.str() + ',' +
         r.reentrant_pairs.str() + ',' + r.class_pairs[1].str() + ',' + r.class_pairs[2].str() + ',' +
         r.class_pairs[3].str() + ',' + num.str() + ',' + den.str() + '\n';
  return out;
}

}  // namespace sylvester
