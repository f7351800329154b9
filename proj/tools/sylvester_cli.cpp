// sylvester: command-line front end for the reduced-word four-point engines.
//
// Exit codes: 0 success, 2 usage or validation error, 3 resource or
// checkpoint error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "sylvester/core.hpp"
#include "sylvester/errors.hpp"
#include "sylvester/exact.hpp"
#include "sylvester/geometry.hpp"
#include "sylvester/montecarlo.hpp"
#include "sylvester/restriction.hpp"

namespace {

using namespace sylvester;

int default_workers() {
  if (const char* env = std::getenv("SYLVESTER_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

// "-" selects stdout. Returns the stream that summary lines should use.
std::ostream& emit(const std::string& out_path, const std::string& payload) {
  if (out_path.empty()) return std::cout;
  if (out_path == "-") {
    std::cout << payload << std::flush;
    return std::cerr;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw ResourceLimit("cannot write " + out_path);
  file << payload;
  return std::cout;
}

struct Args {
  int n = 4;
  int workers = default_workers();
  std::uint64_t trials = 100000;
  std::uint64_t seed = 0;
  std::string checkpoint;
  std::string out;
  std::string word;
  std::string subset;
  std::string region = "square";
  std::string points;
  double angle = 0.0;
  std::optional<int> depth;
  double budget = 1e11;
};

int run_count(const Args& a) {
  std::cout << count_reduced_words(a.n).str() << '\n';
  return 0;
}

int run_exact(const Args& a) {
  ExactOptions options;
  options.workers = a.workers;
  options.prefix_depth = a.depth;
  options.work_budget = a.budget;
  if (!a.checkpoint.empty()) options.checkpoint = a.checkpoint;
  const PairCountReport report = exact_probability(a.n, options);
  std::ostream& log = emit(a.out, report_csv(report));
  const auto [num, den] = report.probability();
  log << "probability=" << num.str() << '/' << den.str() << '\n';
  log << "reentrant_pairs=" << report.reentrant_pairs.str() << " total_pairs=" << report.total_pairs.str()
      << " total_words=" << report.total_words.str() << '\n';
  log << "classes";
  for (QuadClass c : kQuadClasses) log << ' ' << to_string(c) << '=' << report.class_pairs[static_cast<int>(c)].str();
  log << '\n';
  if (report.histogram_complete) {
    log << "histogram";
    for (const auto& [k, count] : report.per_word_histogram) log << ' ' << k << ':' << count.str();
    log << '\n';
  }
  return 0;
}

int run_sample(const Args& a) {
  const SampleReport report = monte_carlo_probability(a.n, a.trials, a.seed, a.workers);
  std::ostream& log = a.out.empty() ? std::cout : emit(a.out, sample_csv(report));
  const Estimate e = report.reentrant();
  log << "n=" << a.n << " trials=" << a.trials << " seed=" << a.seed << " reentrant=" << e.successes
      << " estimate=" << format_fixed(e.mean(), 6) << " stderr=" << format_fixed(e.standard_error(), 6) << '\n';
  return 0;
}

int run_restrict(const Args& a) {
  const ReducedWord word = parse_word(a.n, a.word);
  const WireSubset subset = WireSubset::parse(a.n, a.subset);
  const ReducedWord v = restrict(word, subset);
  std::cout << to_string(v);
  if (v.n == 4) {
    const QuadClass c = classify(v);
    std::cout << " class=" << to_string(c) << " reentrant=" << (c == QuadClass::Reentrant ? "true" : "false");
  }
  std::cout << '\n';
  return 0;
}

int run_classify(const Args& a) {
  const ReducedWord v = parse_full_word(a.word);
  std::cout << to_string(classify(v)) << '\n';
  return 0;
}

int run_geometry(const Args& a) {
  const Region region = Region::from_name(a.region);
  if (a.n == 4) {
    const ClassHistogram h = estimate_f4(region, a.trials, a.seed, a.workers);
    std::ostream& log = a.out.empty() ? std::cout : emit(a.out, histogram_csv(h));
    if (a.out.empty()) std::cout << histogram_csv(h);
    const Estimate via_phi{h.trials, h.reentrant()};
    const Estimate via_hull = sylvester_probability_mc(region, a.trials, a.seed, a.workers);
    log << "region=" << a.region << " trials=" << a.trials << " reentrant=" << format_fixed(via_phi.mean(), 6)
        << " stderr=" << format_fixed(via_phi.standard_error(), 6)
        << " hull_test=" << format_fixed(via_hull.mean(), 6) << '\n';
    return 0;
  }
  const Estimate e = geometric_restriction_probability(region, a.n, a.trials, a.seed, a.workers);
  std::cout << "region=" << a.region << " n=" << a.n << " trials=" << a.trials
            << " restriction_reentrant=" << format_fixed(e.mean(), 6)
            << " stderr=" << format_fixed(e.standard_error(), 6) << '\n';
  return 0;
}

int run_phi(const Args& a) {
  std::ifstream in(a.points);
  if (!in) throw ParseError("cannot read " + a.points);
  const PointConfig config = read_point_config(in, a.angle);
  const ReducedWord w = phi(config);
  std::cout << to_string(w);
  if (w.n == 4) std::cout << " class=" << to_string(classify(w));
  std::cout << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reduced words of the long word, restriction to four strands, and Sylvester's four-point problem"};
  app.require_subcommand(1);
  Args a;

  auto positive = CLI::PositiveNumber;

  auto* count = app.add_subcommand("count", "Print the number of reduced words for w0 in S_n");
  count->add_option("--n", a.n, "Number of strands")->required()->check(positive);

  auto* exact = app.add_subcommand("exact", "Exhaustive pair count over all reduced words and 4-subsets");
  exact->add_option("--n", a.n, "Number of strands")->required()->check(CLI::Range(4, 64));
  exact->add_option("--workers", a.workers, "Worker threads (default: $SYLVESTER_WORKERS or all cores)")->check(positive);
  exact->add_option("--checkpoint", a.checkpoint, "Checkpoint file to write and resume from");
  exact->add_option("--depth", a.depth, "Prefix split depth")->check(CLI::NonNegativeNumber);
  exact->add_option("--budget", a.budget, "Maximum pair evaluations before refusing the run");
  exact->add_option("--out", a.out, "Write the report CSV here ('-' for stdout)");

  auto* sample = app.add_subcommand("sample", "Monte Carlo estimate over uniform words and 4-subsets");
  sample->add_option("--n", a.n, "Number of strands")->required()->check(CLI::Range(4, 64));
  sample->add_option("--trials", a.trials, "Number of trials")->check(positive);
  sample->add_option("--seed", a.seed, "Random seed (default 0)");
  sample->add_option("--workers", a.workers, "Worker threads")->check(positive);
  sample->add_option("--out", a.out, "Write the per-class CSV here ('-' for stdout)");

  auto* restr = app.add_subcommand("restrict", "Restrict a word for w0 to a subset of strands");
  restr->add_option("--n", a.n, "Number of strands")->required()->check(positive);
  restr->add_option("--word", a.word, "Reduced word, e.g. 1213214321")->required();
  restr->add_option("--subset", a.subset, "Strands, e.g. 1,2,3,4")->required();

  auto* geometry = app.add_subcommand("geometry", "Monte Carlo over uniformly sampled points in a region");
  geometry->add_option("--region", a.region, "square, disk or triangle");
  geometry->add_option("--n", a.n, "Points per sample")->check(CLI::Range(4, 64));
  geometry->add_option("--trials", a.trials, "Number of trials")->check(positive);
  geometry->add_option("--seed", a.seed, "Random seed (default 0)");
  geometry->add_option("--workers", a.workers, "Worker threads")->check(positive);
  geometry->add_option("--out", a.out, "Write the class histogram CSV here ('-' for stdout)");

  auto* classify_cmd = app.add_subcommand("classify", "Class of a reduced word for w0 in S_4");
  classify_cmd->add_option("--word", a.word, "Word such as 212321")->required();

  auto* phi_cmd = app.add_subcommand("phi", "Sweep word of an explicit point set");
  phi_cmd->add_option("--points", a.points, "File with one 'x y' pair per line")->required();
  phi_cmd->add_option("--angle", a.angle, "Direction of the reference line in radians");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*count) return run_count(a);
    if (*exact) return run_exact(a);
    if (*sample) return run_sample(a);
    if (*restr) return run_restrict(a);
    if (*geometry) return run_geometry(a);
    if (*classify_cmd) return run_classify(a);
    if (*phi_cmd) return run_phi(a);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return e.category() == ErrorCategory::Validation ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 2;
}
