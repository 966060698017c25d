#include <doctest.h>

#include "optic/effects.hpp"
#include "optic/suites.hpp"

using namespace optic;

namespace {

Val int_list(std::initializer_list<std::int64_t> xs) {
  std::vector<Val> out;
  for (auto x : xs) out.push_back(Val::integer(x));
  return Val::list(std::move(out));
}

// Small container universes per context, for law checking.
std::vector<Val> containers_of(const EffectContext& k, const std::vector<Val>& elements) {
  if (k.name() == "Id") return elements;
  if (k.name() == "Maybe") {
    std::vector<Val> out{maybe_nothing()};
    for (const Val& e : elements) out.push_back(maybe_just(e));
    return out;
  }
  if (k.name().starts_with("Const(list")) {
    std::vector<Val> out{Val::list({})};
    for (const Val& e : elements) {
      out.push_back(Val::list({e}));
      out.push_back(Val::list({e, elements.front()}));
    }
    return out;
  }
  if (k.name().starts_with("Const(sum)") || k.name().starts_with("Const(max)")) {
    return {Val::integer(0), Val::integer(1), Val::integer(2)};
  }
  if (k.name() == "Store") {
    std::vector<Val> out;
    for (const Val& pos : universe_b3()) {
      TableEntries entries;
      for (std::size_t i = 0; i < universe_b3().size(); ++i) {
        entries.emplace_back(universe_b3()[i], elements[i % elements.size()]);
      }
      out.push_back(Val::store(Val::table(std::move(entries)), pos));
    }
    return out;
  }
  if (k.name() == "CartesianStore") {
    std::vector<Val> out;
    for (const Val& e : elements) out.push_back(Val::cs_unit(e));
    TableEntries entries;
    for (std::size_t i = 0; i < universe_b3().size(); ++i) {
      entries.emplace_back(universe_b3()[i], elements[i % elements.size()]);
    }
    Val row = Val::table(std::move(entries));
    for (const Val& pos : universe_b3()) {
      out.push_back(Val::cs_battery(Val::cs_unit(row), pos));
    }
    return out;
  }
  if (k.name().starts_with("Compose(")) {
    // Handled by the dedicated Compose tests below.
    return {};
  }
  return {};
}

}  // namespace

TEST_CASE("monoid laws on sampled elements") {
  struct Case {
    Monoid m;
    std::vector<Val> elements;
  };
  std::vector<Case> cases{
      {Monoid::list(), {Val::list({}), int_list({1}), int_list({1, 2})}},
      {Monoid::sum(), {Val::integer(0), Val::integer(3), Val::integer(-2)}},
      {Monoid::max(), {Val::integer(0), Val::integer(5), Val::integer(-7)}},
      {Monoid::first(), {Val::list({}), Val::list({Val::sym("p")}), Val::list({Val::sym("q")})}},
  };
  for (const auto& c : cases) {
    CAPTURE(c.m.name());
    for (const Val& x : c.elements) {
      CHECK(c.m.combine(c.m.identity(), x) == x);
      CHECK(c.m.combine(x, c.m.identity()) == x);
      for (const Val& y : c.elements) {
        for (const Val& z : c.elements) {
          CHECK(c.m.combine(c.m.combine(x, y), z) == c.m.combine(x, c.m.combine(y, z)));
        }
      }
    }
  }
}

TEST_CASE("traverse_list at the identity context is element-wise map") {
  EffectContext id = EffectContext::identity();
  Val out = traverse_list(
      id, [](const Val& x) { return Val::integer(x.int_value() + 1); }, int_list({1, 2}));
  CHECK(out == int_list({2, 3}));
}

TEST_CASE("traverse_list at a constant context is the left-to-right fold") {
  EffectContext sum = EffectContext::constant(Monoid::sum());
  Val xs = int_list({1, 2, 3});
  Val got = traverse_list(sum, [](const Val& x) { return x; }, xs);
  // Independent oracle: a plain loop.
  std::int64_t want = 0;
  for (const Val& x : xs.items()) want += x.int_value();
  CHECK(got == Val::integer(want));
  CHECK(want == 6);

  // Left-to-right ordering is observable at the list monoid.
  EffectContext list = EffectContext::constant(Monoid::list());
  Val order = traverse_list(list, [](const Val& x) { return Val::list({x}); }, xs);
  CHECK(order == xs);
}

TEST_CASE("traverse_list of the empty list is pure") {
  for (const EffectContext& k :
       {EffectContext::identity(), EffectContext::constant(Monoid::list()),
        EffectContext::cartesian_store(), EffectContext::maybe()}) {
    CAPTURE(k.name());
    Val got = traverse_list(k, [&k](const Val& x) { return k.pure(x); }, Val::list({}));
    CHECK(got == k.pure(Val::list({})));
  }
}

TEST_CASE("lift_w agrees with map on the store comonad") {
  EffectContext w = EffectContext::store();
  const auto& b3 = universe_b3();
  for (const Val& s : enumerate_stores()) {
    Val via_lift = lift_w(w, [](const Val& a) { return Val::list({a}); }, s);
    Val via_map = store_map([](const Val& a) { return Val::list({a}); }, s);
    CHECK(deep_equal_on(via_lift, via_map, b3));

    // Identity-shaped f leaves the container unchanged.
    CHECK(deep_equal_on(lift_w(w, [](const Val& a) { return a; }, s), s, b3));

    // And with f = extract over a duplicated store, both routes give back the
    // element table of the original.
    Val dup = store_duplicate(s);
    Val via_lift_extract = lift_w(w, [&w](const Val& inner) { return w.extract(inner); }, dup);
    Val via_map_extract = store_map([&w](const Val& inner) { return w.extract(inner); }, dup);
    CHECK(deep_equal_on(via_lift_extract, via_map_extract, b3));
    CHECK(deep_equal_on(via_lift_extract, s, b3));
  }
}

TEST_CASE("lift_w with a constant function fills every cell") {
  EffectContext w = EffectContext::store();
  Val c = Val::sym("c");
  for (const Val& s : enumerate_stores()) {
    Val got = lift_w(w, [c](const Val&) { return c; }, s);
    for (const Val& b : universe_b3()) {
      CHECK(apply_val(got.store_peek(), b) == c);
    }
    CHECK(got.store_pos() == s.store_pos());
  }
}

TEST_CASE("functor laws at every registered context") {
  const auto& a2 = universe_a2();
  std::vector<EffectContext> contexts{
      EffectContext::identity(),
      EffectContext::constant(Monoid::list()),
      EffectContext::constant(Monoid::sum()),
      EffectContext::constant(Monoid::max()),
      EffectContext::store(),
      EffectContext::cartesian_store(),
      EffectContext::maybe(),
  };
  // All four endofunctions of the two-point universe, as tables.
  std::vector<Val> fns;
  for (std::size_t mask = 0; mask < 4; ++mask) {
    TableEntries e;
    for (std::size_t i = 0; i < a2.size(); ++i) e.emplace_back(a2[i], a2[(mask >> i) & 1]);
    fns.push_back(Val::table(std::move(e)));
  }
  // Plus a pair that moves between the two universes.
  const auto& b3 = universe_b3();
  std::vector<Val> a_to_b;
  for (std::size_t shift = 0; shift < 2; ++shift) {
    TableEntries e;
    for (std::size_t i = 0; i < a2.size(); ++i) e.emplace_back(a2[i], b3[(i + shift) % b3.size()]);
    a_to_b.push_back(Val::table(std::move(e)));
  }
  std::vector<Val> b_to_a;
  for (std::size_t shift = 0; shift < 2; ++shift) {
    TableEntries e;
    for (std::size_t i = 0; i < b3.size(); ++i) e.emplace_back(b3[i], a2[(i + shift) % a2.size()]);
    b_to_a.push_back(Val::table(std::move(e)));
  }
  for (const EffectContext& k : contexts) {
    CAPTURE(k.name());
    for (const Val& c : containers_of(k, a2)) {
      CHECK(deep_equal_on(k.map([](const Val& x) { return x; }, c), c, universe_b3()));
      for (const Val& f : fns) {
        for (const Val& g : fns) {
          Val lhs = k.map([&](const Val& x) { return apply_val(f, apply_val(g, x)); }, c);
          Val rhs = k.map([&](const Val& x) { return apply_val(f, x); },
                          k.map([&](const Val& x) { return apply_val(g, x); }, c));
          CHECK(deep_equal_on(lhs, rhs, universe_b3()));
        }
      }
      for (const Val& g : a_to_b) {
        for (const Val& f : b_to_a) {
          Val lhs = k.map([&](const Val& x) { return apply_val(f, apply_val(g, x)); }, c);
          Val rhs = k.map([&](const Val& x) { return apply_val(f, x); },
                          k.map([&](const Val& x) { return apply_val(g, x); }, c));
          CHECK(deep_equal_on(lhs, rhs, universe_b3()));
        }
      }
    }
  }
}

TEST_CASE("functor laws at composed registered contexts") {
  const auto& a2 = universe_a2();
  std::vector<Val> fns;
  for (std::size_t mask = 0; mask < 4; ++mask) {
    TableEntries e;
    for (std::size_t i = 0; i < a2.size(); ++i) e.emplace_back(a2[i], a2[(mask >> i) & 1]);
    fns.push_back(Val::table(std::move(e)));
  }
  std::vector<std::pair<EffectContext, EffectContext>> pairs{
      {EffectContext::constant(Monoid::list()), EffectContext::constant(Monoid::sum())},
      {EffectContext::store(), EffectContext::constant(Monoid::list())},
      {EffectContext::cartesian_store(), EffectContext::identity()},
      {EffectContext::maybe(), EffectContext::store()},
      {EffectContext::store(), EffectContext::store()},
  };
  for (const auto& [outer, inner] : pairs) {
    EffectContext k = EffectContext::compose(outer, inner);
    CAPTURE(k.name());
    // Outer containers whose elements are inner containers.
    std::vector<Val> nested = containers_of(outer, containers_of(inner, a2));
    for (const Val& c : nested) {
      CHECK(deep_equal_on(k.map([](const Val& x) { return x; }, c), c, universe_b3()));
      for (const Val& f : fns) {
        for (const Val& g : fns) {
          Val lhs = k.map([&](const Val& x) { return apply_val(f, apply_val(g, x)); }, c);
          Val rhs = k.map([&](const Val& x) { return apply_val(f, x); },
                          k.map([&](const Val& x) { return apply_val(g, x); }, c));
          CHECK(deep_equal_on(lhs, rhs, universe_b3()));
        }
      }
    }
  }
}

TEST_CASE("applicative laws at Id, Const and Maybe") {
  const auto& a2 = universe_a2();
  std::vector<Val> fns;
  for (std::size_t mask = 0; mask < 4; ++mask) {
    TableEntries e;
    for (std::size_t i = 0; i < a2.size(); ++i) e.emplace_back(a2[i], a2[(mask >> i) & 1]);
    fns.push_back(Val::table(std::move(e)));
  }
  Val compose2 = Val::fn([](const Val& g) {
    return Val::fn([g](const Val& h) { return compose_val(g, h); });
  });
  for (const EffectContext& k :
       {EffectContext::identity(), EffectContext::constant(Monoid::list()),
        EffectContext::constant(Monoid::sum()), EffectContext::maybe()}) {
    CAPTURE(k.name());
    std::vector<Val> values = containers_of(k, a2);
    std::vector<Val> fn_containers = containers_of(k, fns);
    Val idcell = Val::fn([](const Val& x) { return x; });
    for (const Val& v : values) {
      CHECK(k.ap(k.pure(idcell), v) == v);  // identity
    }
    for (const Val& f : fns) {
      for (const Val& x : a2) {
        CHECK(k.ap(k.pure(f), k.pure(x)) == k.pure(apply_val(f, x)));  // homomorphism
      }
    }
    for (const Val& u : fn_containers) {
      for (const Val& y : a2) {
        Val applyY = Val::fn([y](const Val& g) { return apply_val(g, y); });
        CHECK(k.ap(u, k.pure(y)) == k.ap(k.pure(applyY), u));  // interchange
      }
    }
    for (const Val& u : fn_containers) {
      for (const Val& v : fn_containers) {
        for (const Val& w : values) {
          Val lhs = k.ap(k.ap(k.ap(k.pure(compose2), u), v), w);
          CHECK(lhs == k.ap(u, k.ap(v, w)));  // composition
        }
      }
    }
  }
}

TEST_CASE("constant-list ap is concatenation, exhaustively to length 3") {
  EffectContext k = EffectContext::constant(Monoid::list());
  std::vector<Val> carriers;
  std::vector<Val> alphabet{Val::sym("p"), Val::sym("q")};
  // All lists of length <= 3 over a two-symbol alphabet: 15 carriers.
  carriers.push_back(Val::list({}));
  for (std::size_t len = 1; len <= 3; ++len) {
    for (std::size_t code = 0; code < (1u << len); ++code) {
      std::vector<Val> items;
      for (std::size_t i = 0; i < len; ++i) items.push_back(alphabet[(code >> i) & 1]);
      carriers.push_back(Val::list(std::move(items)));
    }
  }
  CHECK(carriers.size() == 15);
  for (const Val& f : carriers) {
    for (const Val& x : carriers) {
      std::vector<Val> want = f.items();
      want.insert(want.end(), x.items().begin(), x.items().end());
      CHECK(k.ap(f, x) == Val::list(want));
    }
  }
}

TEST_CASE("composing with the identity context changes nothing") {
  const auto& a2 = universe_a2();
  for (const EffectContext& k :
       {EffectContext::constant(Monoid::list()), EffectContext::maybe(),
        EffectContext::cartesian_store()}) {
    CAPTURE(k.name());
    EffectContext id_k = EffectContext::compose(EffectContext::identity(), k);
    EffectContext k_id = EffectContext::compose(k, EffectContext::identity());
    for (const Val& c : containers_of(k, a2)) {
      Val mapped = k.map([](const Val& x) { return Val::list({x}); }, c);
      CHECK(deep_equal_on(id_k.map([](const Val& x) { return Val::list({x}); }, c), mapped,
                          universe_b3()));
      CHECK(deep_equal_on(k_id.map([](const Val& x) { return Val::list({x}); }, c), mapped,
                          universe_b3()));
    }
    for (const Val& x : a2) {
      CHECK(deep_equal_on(id_k.pure(x), k.pure(x), universe_b3()));
      CHECK(deep_equal_on(k_id.pure(x), k.pure(x), universe_b3()));
    }
    // ap agrees as well: wrap a value and a function into containers and
    // apply through each route.
    Val lift = Val::fn([](const Val& x) { return Val::list({x}); });
    for (const Val& x : a2) {
      Val want = k.ap(k.pure(lift), k.pure(x));
      CHECK(deep_equal_on(id_k.ap(id_k.pure(lift), id_k.pure(x)), want, universe_b3()));
      CHECK(deep_equal_on(k_id.ap(k_id.pure(lift), k_id.pure(x)), want, universe_b3()));
    }
  }
}

TEST_CASE("capability gates") {
  CHECK_THROWS_AS(EffectContext::store().pure(Val::sym("a0")), CapabilityError);
  CHECK_THROWS_AS(EffectContext::constant(Monoid::sum()).extract(Val::integer(1)),
                  CapabilityError);
  CHECK_THROWS_AS(EffectContext::maybe().extract(maybe_just(Val::integer(1))), CapabilityError);
  CHECK_THROWS_AS(EffectContext::cartesian_store().join(Val::cs_unit(Val::sym("a0"))),
                  CapabilityError);
  CHECK(EffectContext::identity().has_monad());
  CHECK(EffectContext::identity().has_comonad());
}

TEST_CASE("comonad coherence for the identity context") {
  EffectContext id = EffectContext::identity();
  for (const Val& x : universe_a2()) {
    CHECK(id.extract(id.duplicate(x)) == x);
    CHECK(id.map([&](const Val& w) { return id.extract(w); }, id.duplicate(x)) == x);
  }
}
