// optic — apply pass pipelines to program files, run fold queries, and
// execute the law suites.
//
// Exit codes: 0 success, 1 parse/decode/law failure, 2 usage error.
// Results go to stdout; diagnostics go to stderr.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "optic/minilang/codec.hpp"
#include "optic/minilang/plate.hpp"
#include "optic/sexpr.hpp"
#include "optic/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

int fail_usage(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitUsage;
}

int fail_input(const std::string& message) {
  std::cerr << "error: " << message << "\n";
  return kExitFailure;
}

std::optional<std::string> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::string> split_csv(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  out.push_back(cur);
  return out;
}

struct LoadedTerm {
  optic::Val encoded;
  optic::minilang::Sort sort;
};

// Parses and sort-checks the input file; reports failures on stderr.
std::optional<LoadedTerm> load_term(const std::string& path, const std::string& root_override,
                                    int& exit_code) {
  using namespace optic;
  using namespace optic::minilang;

  auto text = read_file(path);
  if (!text) {
    exit_code = fail_input("cannot read " + path);
    return std::nullopt;
  }
  Val parsed;
  try {
    parsed = parse_sexpr(*text);
  } catch (const ParseError& e) {
    exit_code = fail_input(path + ": parse error at byte " + std::to_string(e.offset()) + ": " +
                           e.what());
    return std::nullopt;
  }

  Sort sort;
  if (!root_override.empty()) {
    auto s = sort_from_name(root_override);
    if (!s) {
      exit_code = fail_usage("unknown root sort: " + root_override);
      return std::nullopt;
    }
    sort = *s;
  } else {
    auto s = infer_sort(parsed);
    if (!s) {
      exit_code = fail_input(path + ": cannot infer root sort from head symbol");
      return std::nullopt;
    }
    sort = *s;
  }

  try {
    Term term = decode(parsed, sort);
    return LoadedTerm{encode(term), sort};
  } catch (const DecodeError& e) {
    exit_code = fail_input(path + ": " + e.what());
    return std::nullopt;
  }
}

int cmd_run(const std::string& input, const std::string& passes_csv, const std::string& root,
            const std::string& output) {
  using namespace optic;
  using namespace optic::minilang;

  // Resolve every pass name before touching the input.
  std::vector<std::string> passes = split_csv(passes_csv);
  for (const auto& p : passes) {
    if (p != "rename" && p != "constfold") return fail_usage("unknown pass: " + p);
  }

  int exit_code = kExitOk;
  auto loaded = load_term(input, root, exit_code);
  if (!loaded) return exit_code;

  Val term = loaded->encoded;
  for (const auto& p : passes) {
    term = p == "rename" ? rename_pass(term, loaded->sort) : constfold_pass(term, loaded->sort);
  }

  std::string rendered = print_sexpr(term) + "\n";
  if (output.empty()) {
    std::cout << rendered;
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) return fail_input("cannot write " + output);
    out << rendered;
  }
  return kExitOk;
}

int cmd_stats(const std::string& input, const std::string& fold, const std::string& root) {
  using namespace optic;
  using namespace optic::minilang;

  if (fold != "vars" && fold != "count") return fail_usage("unknown fold: " + fold);

  int exit_code = kExitOk;
  auto loaded = load_term(input, root, exit_code);
  if (!loaded) return exit_code;

  if (fold == "vars") {
    for (const auto& name : collect_vars_fold(loaded->encoded, loaded->sort)) {
      std::cout << name << "\n";
    }
  } else {
    std::cout << count_nodes_fold(loaded->encoded, loaded->sort) << "\n";
  }
  return kExitOk;
}

int cmd_laws(const std::string& suite, int size, bool broken_fixture) {
  using namespace optic;

  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end()) {
    return fail_usage("unknown suite: " + suite);
  }
  if (size < 1 || size > 6) return fail_usage("--size must be between 1 and 6");

  SuiteOptions opts;
  opts.term_size = size;
  opts.broken_fixture = broken_fixture;

  auto results = run_suite(suite, opts);
  std::size_t failures = 0;
  for (const auto& r : results) {
    std::cout << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.checked << " cases)";
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
    if (!r.passed) ++failures;
  }
  std::cout << results.size() - failures << "/" << results.size() << " laws passed\n";
  return failures == 0 ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic-traversal optics with executable law oracles"};
  app.require_subcommand(1);

  std::string run_input, run_passes, run_root, run_output;
  CLI::App* run = app.add_subcommand("run", "apply a pass pipeline to a program file");
  run->add_option("--pass", run_passes, "comma-separated passes (rename, constfold)")->required();
  run->add_option("--root", run_root, "root sort (stm|expr|var|typ); default inferred");
  run->add_option("-o,--output", run_output, "output path; default stdout");
  run->add_option("input", run_input, "input file")->required();

  std::string stats_input, stats_fold, stats_root;
  CLI::App* stats = app.add_subcommand("stats", "run a fold query over a program file");
  stats->add_option("--fold", stats_fold, "vars | count")->required();
  stats->add_option("--root", stats_root, "root sort (stm|expr|var|typ); default inferred");
  stats->add_option("input", stats_input, "input file")->required();

  std::string laws_suite = "all";
  int laws_size = 5;
  bool laws_broken = false;
  CLI::App* laws = app.add_subcommand("laws", "run the law suites");
  laws->add_option("--suite", laws_suite, "store|lens|cartesian|biplate|vl|multiplate|all");
  laws->add_option("--size", laws_size, "term-size bound for term-based suites (1..6)");
  laws->add_flag("--broken-fixture", laws_broken,
                 "also assert a known-unlawful lens as lawful (demonstrates reporting)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    std::cout << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (run->parsed()) return cmd_run(run_input, run_passes, run_root, run_output);
    if (stats->parsed()) return cmd_stats(stats_input, stats_fold, stats_root);
    if (laws->parsed()) return cmd_laws(laws_suite, laws_size, laws_broken);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return fail_usage("no subcommand given");
}
