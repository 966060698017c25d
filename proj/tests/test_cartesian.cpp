#include <doctest.h>

#include "optic/cartesian.hpp"
#include "optic/minilang/codec.hpp"
#include "optic/minilang/plate.hpp"
#include "optic/suites.hpp"

using namespace optic;

namespace {

Val b(int i) { return Val::sym("b" + std::to_string(i)); }
Val a(int i) { return Val::sym("a" + std::to_string(i)); }

Val table_b3(const Val& v0, const Val& v1, const Val& v2) {
  return Val::table({{b(0), v0}, {b(1), v1}, {b(2), v2}});
}

}  // namespace

TEST_CASE("extract on units and one-dimensional stores") {
  CHECK(cs_extract(Val::cs_unit(a(0))) == a(0));
  Val one = Val::cs_battery(Val::cs_unit(table_b3(a(0), a(1), a(0))), b(1));
  CHECK(cs_extract(one) == a(1));
}

TEST_CASE("dimension counts battery wrappers") {
  CHECK(cs_dimension(Val::cs_unit(a(0))) == 0);
  Val one = Val::cs_battery(Val::cs_unit(table_b3(a(0), a(1), a(0))), b(0));
  CHECK(cs_dimension(one) == 1);

  // pure then two applications of one-dimensional function stores: dimension 2.
  Val curried_swap = Val::fn([](const Val& x) {
    return Val::fn([x](const Val& y) { return Val::list({x, y}); });
  });
  Val fn_row = table_b3(curried_swap, curried_swap, curried_swap);
  Val f1 = Val::cs_battery(Val::cs_unit(fn_row), b(0));
  Val arg = Val::cs_battery(Val::cs_unit(table_b3(a(0), a(1), a(0))), b(1));
  // f1 is 1-dimensional and holds 2-argument cells; applying one argument
  // store at a time adds its dimension each time.
  Val once = cs_ap(f1, arg);
  CHECK(cs_dimension(once) == 2);
}

TEST_CASE("single_store embeds a store as one dimension") {
  Val s = Val::store(table_b3(a(1), a(0), a(0)), b(1));
  Val cs = single_store(s);
  CHECK(cs_dimension(cs) == 1);
  CHECK(cs_positions(cs) == std::vector<Val>{b(1)});
  CHECK(cs_extract(cs) == store_extract(s));
  std::vector<Val> back = cs_stores(cs);
  REQUIRE(back.size() == 1);
  CHECK(deep_equal_on(back[0], s, universe_b3()));
}

TEST_CASE("strip_dimension, expanded by hand") {
  CHECK_FALSE(strip_dimension(Val::cs_unit(a(0))).has_value());

  Val peek = table_b3(a(0), a(1), a(0));
  Val one = Val::cs_battery(Val::cs_unit(peek), b(2));
  auto stripped = strip_dimension(one);
  REQUIRE(stripped.has_value());
  CHECK(stripped->first == Val::store(peek, b(2)));
  CHECK(stripped->second == Val::cs_unit(a(0)));  // peek applied at b2

  for (const Val& s : enumerate_cartesian_stores(3)) {
    if (cs_dimension(s) == 0) continue;
    auto step = strip_dimension(s);
    REQUIRE(step.has_value());
    CHECK(cs_dimension(step->second) == cs_dimension(s) - 1);
  }
}

TEST_CASE("stores of a unit are empty; slices share the extract") {
  CHECK(cs_stores(Val::cs_unit(a(0))).empty());
  for (const Val& s : enumerate_cartesian_stores(2)) {
    if (cs_dimension(s) != 2) continue;
    std::vector<Val> slices = cs_stores(s);
    REQUIRE(slices.size() == 2);
    for (const Val& sl : slices) {
      CHECK(store_extract(sl) == cs_extract(s));
    }
  }
}

TEST_CASE("normal form: units and one battery") {
  NormalForm nf0 = to_normal_form(Val::cs_unit(a(1)), universe_b3());
  CHECK(nf0.positions.empty());
  CHECK(nf0.peek == Val::table({{Val::list({}), a(1)}}));
  CHECK(from_normal_form(nf0) == Val::cs_unit(a(1)));

  Val peek = table_b3(a(0), a(1), a(0));
  Val one = Val::cs_battery(Val::cs_unit(peek), b(1));
  NormalForm nf1 = to_normal_form(one, universe_b3());
  CHECK(nf1.positions == std::vector<Val>{b(1)});
  for (const Val& bb : universe_b3()) {
    CHECK(nf1.peek.call(Val::list({bb})) == apply_val(peek, bb));
  }
  CHECK(from_normal_form(nf1) == one);
}

TEST_CASE("extract distributes over ap, against the coordinate oracle") {
  std::vector<Val> fn_stores;  // 1-dim stores of element endofunctions
  Val swap = Val::table({{a(0), a(1)}, {a(1), a(0)}});
  Val keep = Val::table({{a(0), a(0)}, {a(1), a(1)}});
  fn_stores.push_back(Val::cs_battery(Val::cs_unit(table_b3(swap, keep, swap)), b(0)));
  fn_stores.push_back(Val::cs_unit(swap));
  for (const Val& f : fn_stores) {
    for (const Val& x : enumerate_cartesian_stores(2)) {
      Val combined = cs_ap(f, x);
      CHECK(cs_extract(combined) == apply_val(cs_extract(f), cs_extract(x)));
      CHECK(cs_dimension(combined) == cs_dimension(f) + cs_dimension(x));
    }
  }
}

TEST_CASE("identity biplate references the whole value") {
  Val x = Val::sym("payload");
  Val ref = id_biplate().run(x);
  CHECK(cs_dimension(ref) == 1);
  CHECK(cs_positions(ref) == std::vector<Val>{x});
  CHECK(cs_extract(ref) == x);
}

TEST_CASE("children of the worked expression, in reading order") {
  using namespace optic::minilang;
  Val e = encode(eadd(evar("x"), eint(1)));
  Val cs = expr_children_biplate().run(e);
  CHECK(cs_dimension(cs) == 2);
  std::vector<Val> kids = cs_positions(cs);
  REQUIRE(kids.size() == 2);
  CHECK(kids[0] == encode(evar("x")));
  CHECK(kids[1] == encode(eint(1)));
  CHECK(cs_extract(cs) == e);

  // Setting both children through the peek rebuilds the node.
  std::vector<Val> coords{encode(eint(7)), encode(eint(8))};
  CHECK(cs_peek_at(cs, coords) == encode(eadd(eint(7), eint(8))));
}

TEST_CASE("biplate law checker verdicts") {
  CHECK(check_biplate_laws(id_biplate(), universe_b3()).ok);
  CHECK(check_biplate_laws(lens_biplate(field_b_lens()), universe_records()).ok);

  Verdict dup = check_biplate_laws(duplicating_biplate(), universe_b3());
  CHECK_FALSE(dup.ok);
  CHECK_FALSE(dup.counterexample.empty());

  std::vector<Val> empty;
  CHECK(check_biplate_laws(duplicating_biplate(), empty).ok);  // vacuous
}

TEST_CASE("cartesian suite passes end to end") {
  for (const auto& r : cartesian_suite()) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("biplate suite passes end to end") {
  for (const auto& r : biplate_suite({})) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}
