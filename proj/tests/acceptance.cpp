// Acceptance suite: one check per shipped guarantee, one line per check.
// Exits non-zero if any fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "optic/minilang/codec.hpp"
#include "optic/minilang/plate.hpp"
#include "optic/suites.hpp"
#include "optic/vanlaarhoven.hpp"

using namespace optic;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int index, const std::string& title, bool ok, const std::string& note) {
  std::printf("[%s] criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", index, title.c_str(),
              note.empty() ? "" : " -- ", note.c_str());
  if (!ok) ++g_failures;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool subset_passes(const std::vector<LawResult>& results, const std::string& prefix,
                   std::string& note) {
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& r : results) {
    if (r.name.rfind(prefix, 0) != 0) continue;
    checked += r.checked;
    if (!r.passed) {
      ok = false;
      note = r.name + ": " + r.detail;
    }
  }
  if (ok) note = std::to_string(checked) + " instances";
  return ok;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct CliRun {
  int exit_code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::string& args) {
  fs::path dir = fs::temp_directory_path() / "optic-acceptance";
  fs::create_directories(dir);
  fs::path out_path = dir / "stdout.txt";
  fs::path err_path = dir / "stderr.txt";
  std::string cmd = std::string("\"") + OPTIC_CLI_PATH + "\" " + args + " > " +
                    out_path.string() + " 2> " + err_path.string();
  int status = std::system(cmd.c_str());
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out_path), slurp(err_path)};
}

void criterion_1_store_coherence() {
  auto t0 = std::chrono::steady_clock::now();
  auto results = store_suite();
  double dt = seconds_since(t0);
  std::string note;
  bool ok = subset_passes(results, "store.comonad", note);
  std::size_t stores = enumerate_stores().size();
  ok = ok && stores == 24 && dt < 1.0;
  std::ostringstream n;
  n << stores << " stores, " << note << ", " << dt << "s";
  report(1, "store comonad coherence, exhaustive and under a second", ok, n.str());
}

void criterion_2_lens_equivalence() {
  auto results = lens_suite({});
  std::string note;
  bool ok = all_passed(results) && lens_candidates().size() >= 100;
  for (const auto& r : results) {
    if (r.name == "lens.verdict-agreement") note = r.detail;
    if (!r.passed) note = r.name + ": " + r.detail;
  }
  report(2, "lens law equivalence on the candidate set, plus the worked fixture", ok, note);
}

void criterion_3_cartesian_laws() {
  auto t0 = std::chrono::steady_clock::now();
  auto results = cartesian_suite();
  double dt = seconds_since(t0);
  std::string note_comonad, note_applicative;
  bool ok = subset_passes(results, "cartesian.comonad", note_comonad) &&
            subset_passes(results, "cartesian.applicative", note_applicative) && dt < 10.0;
  std::ostringstream n;
  n << note_comonad << " comonad, " << note_applicative << " applicative, " << dt << "s";
  report(3, "cartesian store comonad and applicative laws, dimension <= 2", ok, n.str());
}

void criterion_4_normal_form() {
  auto results = cartesian_suite();
  std::string note_round, note_slices, note_single;
  bool ok = subset_passes(results, "cartesian.normalform", note_round) &&
            subset_passes(results, "cartesian.stores", note_slices) &&
            subset_passes(results, "cartesian.singlestore", note_single);
  report(4, "normal-form round trips and axis slices through dimension 3", ok,
         note_round + ", " + note_slices);
}

void criterion_5_isomorphisms() {
  auto results = vanlaarhoven_suite({});
  std::string note_store, note_cartesian;
  bool ok = subset_passes(results, "vl.store-iso", note_store) &&
            subset_passes(results, "vl.cartesian-iso", note_cartesian);
  report(5, "representation isomorphisms, both directions at every registered context", ok,
         note_store + " store side, " + note_cartesian + " cartesian side");
}

void criterion_6_bridging() {
  auto results = vanlaarhoven_suite({});
  std::string note;
  bool ok = subset_passes(results, "vl.laws.bridge-agreement", note);
  report(6, "comonadic and monoidal law verdicts agree on every candidate", ok, note);
}

void criterion_7_multiplate_laws() {
  auto results = multiplate_suite({});
  bool ok = true;
  std::string note;
  for (const auto& r : results) {
    if (r.name == "multiplate.laws.minilang") {
      ok = ok && r.passed;
      note = r.detail;
    }
    if (r.name == "multiplate.laws.corrupted-detected") {
      ok = ok && r.passed && !r.detail.empty();
      note += "; corrupted witness: " + r.detail;
    }
  }
  report(7, "multiplate laws over the exhaustive term universe", ok, note);
}

void criterion_8_headline() {
  using namespace optic::minilang;
  auto results = multiplate_suite({});
  std::string note_rename, note_folds;
  bool ok = subset_passes(results, "multiplate.rename-matches-naive", note_rename) &&
            subset_passes(results, "multiplate.folds-match-oracles", note_folds);

  // Recompute the fixture values through the direct oracles.
  StmPtr p0 = p0_program();
  ok = ok && equal(rename_pass(p0), naive_rename(p0));
  ok = ok && oracle_collect_vars(Term{p0}).size() == 4;
  ok = ok && oracle_count_nodes(Term{p0}) == 13;
  ok = ok && collect_vars_fold(encode(p0), Sort::Stm).size() == 4;
  ok = ok && count_nodes_fold(encode(p0), Sort::Stm) == 13;
  report(8, "generic rename equals the naive recursion; folds match brute force", ok,
         note_rename + "; " + note_folds + "; P0 gives 4 vars and 13 nodes");
}

void criterion_9_cli() {
  auto t0 = std::chrono::steady_clock::now();
  CliRun laws = run_cli("laws --suite all");
  double dt = seconds_since(t0);
  bool ok = laws.exit_code == 0 && dt < 60.0;
  std::ostringstream note;
  note << "laws --suite all exit " << laws.exit_code << " in " << dt << "s";

  fs::path data = fs::path(OPTIC_DATA_DIR);
  CliRun rename = run_cli("run --pass rename " + (data / "P0.sexp").string());
  bool golden = rename.exit_code == 0 && rename.out == slurp(data / "P0.renamed.golden");
  ok = ok && golden;
  if (!golden) note << "; golden rename mismatch";

  // Error paths with the documented codes.
  fs::path dir = fs::temp_directory_path() / "optic-acceptance";
  fs::create_directories(dir);
  {
    std::ofstream f(dir / "broken.sexp");
    f << "(SBlock";
  }
  {
    std::ofstream f(dir / "badnode.sexp");
    f << "(SBlock (SNope))";
  }
  CliRun parse_err = run_cli("run --pass rename " + (dir / "broken.sexp").string());
  CliRun decode_err = run_cli("run --pass rename " + (dir / "badnode.sexp").string());
  CliRun usage_err = run_cli("run --pass nonsense " + (data / "P0.sexp").string());
  CliRun suite_err = run_cli("laws --suite nonsense");
  bool codes = parse_err.exit_code == 1 && decode_err.exit_code == 1 &&
               usage_err.exit_code == 2 && suite_err.exit_code == 2 &&
               parse_err.out.empty() && decode_err.out.empty();
  ok = ok && codes;
  if (!codes) {
    note << "; exit codes were " << parse_err.exit_code << "/" << decode_err.exit_code << "/"
         << usage_err.exit_code << "/" << suite_err.exit_code;
  }
  report(9, "command-line pipeline: law run, golden rename, error codes", ok, note.str());
}

}  // namespace

int main() {
  criterion_1_store_coherence();
  criterion_2_lens_equivalence();
  criterion_3_cartesian_laws();
  criterion_4_normal_form();
  criterion_5_isomorphisms();
  criterion_6_bridging();
  criterion_7_multiplate_laws();
  criterion_8_headline();
  criterion_9_cli();
  if (g_failures) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
