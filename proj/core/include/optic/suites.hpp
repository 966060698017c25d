// suites.hpp
// Named law suites over small finite universes, shared by the command-line
// front end, the unit tests and the acceptance run.  Every suite enumerates
// deterministically and reports the first failing instance.

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "optic/cartesian.hpp"
#include "optic/store.hpp"
#include "optic/vanlaarhoven.hpp"

namespace optic {

struct LawResult {
  std::string name;
  bool passed = false;
  std::size_t checked = 0;
  std::string detail;  // counterexample on failure, occasional note on success
};

struct SuiteOptions {
  int term_size = 5;            // node-count bound for term-based suites (1..6)
  bool broken_fixture = false;  // lens suite: also assert a known-unlawful lens as lawful
};

// --- small universes and enumerations ---

const std::vector<Val>& universe_a2();  // {a0, a1}
const std::vector<Val>& universe_b3();  // {b0, b1, b2}

// Two-field records (b from B3, flag from {0,1}); the lens candidates act on these.
const std::vector<Val>& universe_records();
Val make_record(const Val& b, std::int64_t flag);
Val record_b(const Val& r);
std::int64_t record_flag(const Val& r);

// All 8 peek tables x 3 positions over B3 x A2.
std::vector<Val> enumerate_stores();

// Exhaustive through dimension 2 (2 + 24 + 4608 values over B3 x A2); at
// dimension 3 a deterministic canonical family, since full tables grow as
// |A|^(|B|^n).
std::vector<Val> enumerate_cartesian_stores(int max_dim);

// --- lens candidates ---

struct LensCandidate {
  std::string name;
  Lens lens;
};

// 160 getter/setter combinations over the record universe; a handful are
// lawful, the rest break one law or another.
std::vector<LensCandidate> lens_candidates();

Lens field_b_lens();         // lawful: reads and replaces the record's b field
Lens setter_ignoring_lens(); // unlawful: setter keeps the old b
Biplate duplicating_biplate();  // unlawful: references one element twice

// --- suites ---

std::vector<LawResult> store_suite();
std::vector<LawResult> lens_suite(const SuiteOptions& opts = {});
std::vector<LawResult> cartesian_suite();
std::vector<LawResult> biplate_suite(const SuiteOptions& opts = {});
std::vector<LawResult> vanlaarhoven_suite(const SuiteOptions& opts = {});
std::vector<LawResult> multiplate_suite(const SuiteOptions& opts = {});

const std::vector<std::string>& suite_names();  // store lens cartesian biplate vl multiplate all
std::vector<LawResult> run_suite(std::string_view name, const SuiteOptions& opts = {});
bool all_passed(const std::vector<LawResult>& results);

}  // namespace optic
