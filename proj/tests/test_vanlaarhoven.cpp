#include <doctest.h>

#include "optic/minilang/codec.hpp"
#include "optic/minilang/plate.hpp"
#include "optic/suites.hpp"
#include "optic/vanlaarhoven.hpp"

using namespace optic;

namespace {

Val b(int i) { return Val::sym("b" + std::to_string(i)); }
Val a(int i) { return Val::sym("a" + std::to_string(i)); }

Coalgebra lens_coalgebra(const Lens& l) {
  return {EffectContext::store(), [l](const Val& x) { return l.run(x); }};
}

}  // namespace

TEST_CASE("coalgMap with the identity transformation changes nothing") {
  Coalgebra c = lens_coalgebra(field_b_lens());
  Coalgebra mapped = coalg_map(identity_nat(EffectContext::store()), c);
  for (const Val& r : universe_records()) {
    CHECK(deep_equal_on(mapped.run(r), c.run(r), universe_b3()));
  }
}

TEST_CASE("coalgMap extract on a lawful lens gives the identity coalgebra") {
  Coalgebra c = lens_coalgebra(field_b_lens());
  Coalgebra collapsed = coalg_map(extract_nat(EffectContext::store()), c);
  CHECK(collapsed.ctx.name() == "Id");
  for (const Val& r : universe_records()) {
    CHECK(collapsed.run(r) == r);
  }
}

TEST_CASE("coalgMap pure embeds the identity coalgebra") {
  EffectContext list = EffectContext::constant(Monoid::list());
  Coalgebra embedded = coalg_map(pure_nat(list), id_coalg());
  for (const Val& r : universe_records()) {
    CHECK(embedded.run(r) == list.pure(r));
  }
}

TEST_CASE("idCoalg and composeCoalg form the monoidal structure") {
  CHECK(id_coalg().run(Val::sym("x")) == Val::sym("x"));

  // Unit: composing with idCoalg only adds a transparent identity layer.
  Coalgebra c = lens_coalgebra(field_b_lens());
  Coalgebra left = compose_coalg(id_coalg(), c);
  for (const Val& r : universe_records()) {
    CHECK(deep_equal_on(left.run(r), c.run(r), universe_b3()));
  }

  // Two store coalgebras: the composite is the nested-store table, expanded
  // pointwise here as the oracle.
  Coalgebra c1 = lens_coalgebra(field_b_lens());
  Coalgebra c2 = lens_coalgebra(field_b_lens());
  Coalgebra both = compose_coalg(c1, c2);
  CHECK(both.ctx.name() == "Compose(Store,Store)");
  for (const Val& r : universe_records()) {
    Val outer = both.run(r);
    Val direct = c1.run(r);
    CHECK(outer.store_pos() == direct.store_pos());
    for (const Val& v : universe_b3()) {
      Val inner_expected = c2.run(apply_val(direct.store_peek(), v));
      CHECK(deep_equal_on(apply_val(outer.store_peek(), v), inner_expected, universe_b3()));
    }
  }
}

TEST_CASE("store body instantiations") {
  Val peek = Val::table({{b(0), a(0)}, {b(1), a(1)}, {b(2), a(0)}});
  Val s = Val::store(peek, b(1));
  PolyBody y = store_to_poly(s);

  // Identity context with the identity coalgebra: the extract.
  Val at_id = y(EffectContext::identity(), [](const Val& x) { return x; });
  CHECK(at_id == store_extract(s));

  // Constant list context with the singleton embedding: the position.
  Val at_list = y(EffectContext::constant(Monoid::list()),
                  [](const Val& x) { return Val::list({x}); });
  CHECK(at_list == Val::list({b(1)}));

  CHECK(deep_equal_on(poly_to_store(y, universe_b3()), s, universe_b3()));
}

TEST_CASE("cartesian body instantiations") {
  // A unit ignores its argument and is pure at every applicative context.
  PolyBody unit_body = cs_to_poly(Val::cs_unit(a(0)));
  for (const EffectContext& k :
       {EffectContext::identity(), EffectContext::constant(Monoid::list()),
        EffectContext::cartesian_store()}) {
    CAPTURE(k.name());
    Val got = unit_body(k, [](const Val& x) { return Val::list({x}); });
    CHECK(deep_equal_on(got, k.pure(a(0)), universe_b3()));
  }

  // Counting via a constant context yields the dimension.
  for (const Val& s : enumerate_cartesian_stores(2)) {
    Val n = cs_to_poly(s)(EffectContext::constant(Monoid::sum()),
                          [](const Val&) { return Val::integer(1); });
    CHECK(n == Val::integer(cs_dimension(s)));
  }
}

TEST_CASE("modify, set and get through the polymorphic representation") {
  VlOptic ident = vl_identity();
  CHECK(vl_modify(ident, [](const Val& x) { return Val::list({x}); }, a(0)) ==
        Val::list({a(0)}));

  VlOptic phone = lens_to_vl(phone_lens());
  Val pat = pat_address();
  CHECK(vl_get(phone, pat) == Val::str("333-4444"));
  CHECK(vl_set(phone, pat, Val::str("555-6666")) == make_address("555-6666", "http://pat.com/"));

  // Folding the children of the worked expression at the list monoid lists
  // them in reading order.
  using namespace optic::minilang;
  Val e = encode(eadd(evar("x"), eint(1)));
  Val kids = vl_get_fold(expr_children_vl(), Monoid::list(),
                         [](const Val& child) { return Val::list({child}); }, e);
  CHECK(kids == Val::list({encode(evar("x")), encode(eint(1))}));
}

TEST_CASE("round trips between representations") {
  for (const Val& s : enumerate_stores()) {
    CHECK(deep_equal_on(poly_to_store(store_to_poly(s), universe_b3()), s, universe_b3()));
  }
  for (const Val& s : enumerate_cartesian_stores(1)) {
    CHECK(deep_equal_on(poly_to_cs(cs_to_poly(s), universe_b3()), s, universe_b3()));
  }

  // Lens -> polymorphic -> lens is the same accessor.
  for (const auto& cand : lens_candidates()) {
    if (!check_lens_laws(cand.lens, universe_records(), universe_b3()).ok) continue;
    Lens back = vl_to_lens(lens_to_vl(cand.lens), universe_b3());
    for (const Val& r : universe_records()) {
      CHECK(back.get(r) == cand.lens.get(r));
      for (const Val& v : universe_b3()) {
        CHECK(back.set(r, v) == cand.lens.set(r, v));
      }
    }
  }
}

TEST_CASE("naturality instances at the registered transformations") {
  std::vector<VlOptic> lawful;
  for (const auto& cand : lens_candidates()) {
    if (check_lens_laws(cand.lens, universe_records(), universe_b3()).ok) {
      lawful.push_back(lens_to_vl(cand.lens));
    }
  }
  REQUIRE(!lawful.empty());

  std::vector<Coalgebra> store_probes;
  for (const Coalgebra& p : law3_probe_coalgebras(universe_b3(), false)) {
    if (p.ctx.name() == "Store") store_probes.push_back(p);
  }
  std::vector<NatTrans> nats{extract_nat(EffectContext::store()),
                             duplicate_nat(EffectContext::store())};
  for (const VlOptic& optic : lawful) {
    for (const NatTrans& eta : nats) {
      for (const Coalgebra& c : store_probes) {
        Coalgebra lhs = coalg_map(eta, optic.transform(c));
        Coalgebra rhs = optic.transform(coalg_map(eta, c));
        for (const Val& r : universe_records()) {
          CHECK(deep_equal_on(lhs.run(r), rhs.run(r), universe_b3()));
        }
      }
    }
    // pure: Id => K, starting from the identity coalgebra.
    for (const EffectContext& k :
         {EffectContext::constant(Monoid::list()), EffectContext::cartesian_store()}) {
      NatTrans eta = pure_nat(k);
      Coalgebra lhs = coalg_map(eta, optic.transform(id_coalg()));
      Coalgebra rhs = optic.transform(coalg_map(eta, id_coalg()));
      for (const Val& r : universe_records()) {
        CHECK(deep_equal_on(lhs.run(r), rhs.run(r), universe_b3()));
      }
    }
    // A transformation lifted under an outer layer, on a composed coalgebra.
    NatTrans lifted = map_nat(EffectContext::store(), extract_nat(EffectContext::store()));
    for (const Coalgebra& c1 : store_probes) {
      for (const Coalgebra& c2 : store_probes) {
        Coalgebra c = compose_coalg(c1, c2);
        Coalgebra lhs = coalg_map(lifted, optic.transform(c));
        Coalgebra rhs = optic.transform(coalg_map(lifted, c));
        for (const Val& r : universe_records()) {
          CHECK(deep_equal_on(lhs.run(r), rhs.run(r), universe_b3()));
        }
      }
    }
  }
}

TEST_CASE("monoidal law checker verdicts") {
  std::vector<Coalgebra> probes = law3_probe_coalgebras(universe_b3(), false);

  Verdict good = check_vl_laws(lens_to_vl(field_b_lens()), universe_records(), probes,
                               universe_b3());
  CHECK(good.ok);

  Verdict bad = check_vl_laws(lens_to_vl(setter_ignoring_lens()), universe_records(), probes,
                              universe_b3());
  CHECK_FALSE(bad.ok);

  std::vector<Val> empty;
  CHECK(check_vl_laws(lens_to_vl(setter_ignoring_lens()), empty, probes, universe_b3()).ok);
}

TEST_CASE("children optic is lawful and matches its cartesian form") {
  using namespace optic::minilang;
  std::vector<Val> exprs = encoded_universes(3)[kExprSort];
  std::vector<Coalgebra> probes = law3_probe_coalgebras(exprs, true);
  CHECK(check_vl_laws(expr_children_vl(), exprs, probes, exprs).ok);

  Biplate children = expr_children_biplate();
  for (const Val& e : exprs) {
    Val via_poly = poly_to_cs(
        [&](const EffectContext& k, const ValFn& f) { return expr_children_vl().run(k, f, e); },
        exprs);
    CHECK(deep_equal_on(via_poly, children.run(e), exprs));
  }
}

TEST_CASE("van Laarhoven suite passes end to end") {
  for (const auto& r : vanlaarhoven_suite({})) {
    CAPTURE(r.name);
    CAPTURE(r.detail);
    CHECK(r.passed);
  }
}
