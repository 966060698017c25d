#include "optic/vanlaarhoven.hpp"

#include <sstream>

namespace optic {

Coalgebra id_coalg() {
  return {EffectContext::identity(), [](const Val& a) { return a; }};
}

Coalgebra compose_coalg(const Coalgebra& c1, const Coalgebra& c2) {
  return {EffectContext::compose(c1.ctx, c2.ctx),
          [c1, c2](const Val& a) { return c1.ctx.map(c2.run, c1.run(a)); }};
}

Coalgebra coalg_map(const NatTrans& eta, const Coalgebra& c) {
  return {eta.to, [fn = eta.fn, run = c.run](const Val& a) { return fn(run(a)); }};
}

PolyBody store_to_poly(const Val& store) {
  const Val peek = store.store_peek();
  const Val pos = store.store_pos();
  return [peek, pos](const EffectContext& k, const ValFn& f) {
    return k.map([peek](const Val& b) { return apply_val(peek, b); }, f(pos));
  };
}

Val poly_to_store(const PolyBody& y, std::span<const Val> universe_b) {
  Val id_table = identity_table(universe_b);
  return y(EffectContext::store(),
           [id_table](const Val& b) { return Val::store(id_table, b); });
}

PolyBody cs_to_poly(const Val& cs) {
  if (cs.is_cs_unit()) {
    Val a = cs.cs_element();
    return [a](const EffectContext& k, const ValFn&) { return k.pure(a); };
  }
  PolyBody inner = cs_to_poly(cs.cs_inner());
  Val b = cs.cs_last();
  return [inner, b](const EffectContext& k, const ValFn& f) {
    return k.ap(inner(k, f), f(b));
  };
}

Val poly_to_cs(const PolyBody& y, std::span<const Val> universe_b) {
  Val id_table = identity_table(universe_b);
  return y(EffectContext::cartesian_store(), [id_table](const Val& b) {
    return Val::cs_battery(Val::cs_unit(id_table), b);
  });
}

VlOptic lens_to_vl(const Lens& l) {
  return VlOptic(VlOptic::Demand::Functor,
                 [l](const EffectContext& k, const ValFn& f, const Val& a) {
                   return store_to_poly(l.run(a))(k, f);
                 });
}

VlOptic biplate_to_vl(const Biplate& o) {
  return VlOptic(VlOptic::Demand::Applicative,
                 [o](const EffectContext& k, const ValFn& f, const Val& a) {
                   return cs_to_poly(o.run(a))(k, f);
                 });
}

VlOptic vl_identity() {
  return VlOptic(VlOptic::Demand::Functor,
                 [](const EffectContext&, const ValFn& f, const Val& a) { return f(a); });
}

Lens vl_to_lens(const VlOptic& o, std::span<const Val> universe_b) {
  std::vector<Val> universe(universe_b.begin(), universe_b.end());
  return Lens([o, universe](const Val& a) {
    return poly_to_store([&o, &a](const EffectContext& k, const ValFn& f) { return o.run(k, f, a); },
                         universe);
  });
}

Biplate vl_to_biplate(const VlOptic& o, std::span<const Val> universe_b) {
  std::vector<Val> universe(universe_b.begin(), universe_b.end());
  return Biplate([o, universe](const Val& a) {
    return poly_to_cs([&o, &a](const EffectContext& k, const ValFn& f) { return o.run(k, f, a); },
                      universe);
  });
}

Val vl_modify(const VlOptic& o, const ValFn& f, const Val& a) {
  return o.run(EffectContext::identity(), f, a);
}

Val vl_set(const VlOptic& o, const Val& a, const Val& b) {
  return vl_modify(o, [b](const Val&) { return b; }, a);
}

Val vl_get(const VlOptic& o, const Val& a) {
  Val found = o.run(EffectContext::constant(Monoid::first()),
                    [](const Val& b) { return Val::list({b}); }, a);
  if (found.items().empty()) {
    throw std::logic_error("vl_get: optic referenced no target");
  }
  return found.items().front();
}

Val vl_get_fold(const VlOptic& o, const Monoid& m, const ValFn& embed, const Val& a) {
  return o.run(EffectContext::constant(m), embed, a);
}

Verdict check_vl_laws(const VlOptic& o, std::span<const Val> universe_a,
                      std::span<const Coalgebra> probes, std::span<const Val> eq_universe) {
  Verdict v;
  // Law: optic at Id maps the identity coalgebra to the identity coalgebra.
  for (const Val& a : universe_a) {
    ++v.checked;
    Val got = o.run(EffectContext::identity(), [](const Val& b) { return b; }, a);
    if (!deep_equal_on(got, a, eq_universe)) {
      return {false, "optic(idCoalg) = idCoalg",
              "a = " + a.to_text() + ", got " + got.to_text(), v.checked};
    }
  }
  // Law: optic distributes over coalgebra composition.
  for (const Coalgebra& c1 : probes) {
    for (const Coalgebra& c2 : probes) {
      Coalgebra composed = compose_coalg(c1, c2);
      for (const Val& a : universe_a) {
        ++v.checked;
        Val lhs = o.run(composed.ctx, composed.run, a);
        Val rhs = c1.ctx.map([&](const Val& x) { return o.run(c2.ctx, c2.run, x); },
                             o.run(c1.ctx, c1.run, a));
        if (!deep_equal_on(lhs, rhs, eq_universe)) {
          std::ostringstream msg;
          msg << "a = " << a.to_text() << ", c1 at " << c1.ctx.name() << ", c2 at "
              << c2.ctx.name();
          return {false, "optic(composeCoalg(c1,c2)) = composeCoalg(optic c1, optic c2)",
                  msg.str(), v.checked};
        }
      }
    }
  }
  return v;
}

std::vector<Coalgebra> law3_probe_coalgebras(std::span<const Val> universe_b,
                                             bool applicative_only) {
  std::vector<Coalgebra> out;
  std::vector<Val> u(universe_b.begin(), universe_b.end());

  auto rotate = [u](const Val& b) {
    for (std::size_t i = 0; i < u.size(); ++i) {
      if (u[i] == b) return u[(i + 1) % u.size()];
    }
    return b;
  };

  // Identity-context probes: plain endofunctions on the universe.
  EffectContext id = EffectContext::identity();
  out.push_back({id, [](const Val& b) { return b; }});
  out.push_back({id, rotate});

  // Constant-list probes.
  EffectContext cl = EffectContext::constant(Monoid::list());
  out.push_back({cl, [](const Val& b) { return Val::list({b}); }});
  out.push_back({cl, [](const Val&) { return Val::list({}); }});

  if (!applicative_only) {
    // Store-context probes; the identity-lens coalgebra makes the second
    // monoidal law coincide with the comonadic duplicate law.
    EffectContext st = EffectContext::store();
    Val id_table = identity_table(u);
    out.push_back({st, [id_table](const Val& b) { return Val::store(id_table, b); }});
    out.push_back({st, [id_table, rotate](const Val& b) { return Val::store(id_table, rotate(b)); }});
  }

  // Cartesian-store probes: one single-target reference, one empty reference.
  EffectContext cs = EffectContext::cartesian_store();
  Val id_table = identity_table(u);
  out.push_back({cs, [id_table](const Val& b) {
                   return Val::cs_battery(Val::cs_unit(id_table), b);
                 }});
  out.push_back({cs, [](const Val& b) { return Val::cs_unit(b); }});

  return out;
}

}  // namespace optic
