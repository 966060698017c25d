// vanlaarhoven.hpp
// Polymorphic representations of lenses and biplates.
//
// A polymorphic optic is a transformer of coalgebras: handed an effect
// context K and a coalgebra at the target sort (b -> K b), it produces the
// container for the whole structure (a -> K a).  A lens-strength optic only
// ever uses map; a biplate-strength optic also needs pure and ap.  One C++
// type covers both, so every lens-strength optic is usable wherever a
// biplate is expected, with no conversion.
//
// Universal quantification over contexts is exercised at the registered
// context set; the isomorphisms with the comonadic representations are
// checked in both directions at those instances.

#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "optic/cartesian.hpp"
#include "optic/effects.hpp"
#include "optic/store.hpp"

namespace optic {

// a -> K a at one fixed context.
struct Coalgebra {
  EffectContext ctx;
  ValFn run;
};

Coalgebra id_coalg();
Coalgebra compose_coalg(const Coalgebra& c1, const Coalgebra& c2);  // map c2 . c1
Coalgebra coalg_map(const NatTrans& eta, const Coalgebra& c);       // eta . c

// The body of a polymorphic store: forall K. (b -> K b) -> K a.
using PolyBody = std::function<Val(const EffectContext&, const ValFn&)>;

// Store B A  <->  forall Functor K. (B -> K B) -> K A
PolyBody store_to_poly(const Val& store);
Val poly_to_store(const PolyBody& y, std::span<const Val> universe_b);

// CartesianStore B A  <->  forall Applicative K. (B -> K B) -> K A
PolyBody cs_to_poly(const Val& cs);
Val poly_to_cs(const PolyBody& y, std::span<const Val> universe_b);

// forall K. (b -> K b) -> (a -> K a), as a first-class value.
class VlOptic {
public:
  enum class Demand { Functor, Applicative };

  using Body = std::function<Val(const EffectContext&, const ValFn&, const Val&)>;

  VlOptic(Demand demand, Body body) : demand_(demand), body_(std::move(body)) {}

  Demand demand() const { return demand_; }
  Val run(const EffectContext& k, const ValFn& f, const Val& a) const { return body_(k, f, a); }

  // Instantiation at one context gives back an ordinary coalgebra transformer.
  Coalgebra transform(const Coalgebra& c) const {
    return {c.ctx, [self = *this, c](const Val& a) { return self.run(c.ctx, c.run, a); }};
  }

private:
  Demand demand_;
  Body body_;
};

using VlLens = VlOptic;
using VlBiplate = VlOptic;

VlOptic lens_to_vl(const Lens& l);
VlOptic biplate_to_vl(const Biplate& o);
VlOptic vl_identity();
Lens vl_to_lens(const VlOptic& o, std::span<const Val> universe_b);
Biplate vl_to_biplate(const VlOptic& o, std::span<const Val> universe_b);

// Instantiation at the identity context: modify / set.
Val vl_modify(const VlOptic& o, const ValFn& f, const Val& a);
Val vl_set(const VlOptic& o, const Val& a, const Val& b);

// Instantiation at a constant context: get.  The plain getter reads through a
// first-value monoid (single-target optics); the fold form aggregates all
// targets through an explicit monoid.
Val vl_get(const VlOptic& o, const Val& a);
Val vl_get_fold(const VlOptic& o, const Monoid& m, const ValFn& embed, const Val& a);

// Monoidal-natural-transformation laws:
//   optic(idCoalg) = idCoalg
//   optic(composeCoalg(c1, c2)) = composeCoalg(optic(c1), optic(c2))
// quantified over `universe_a` and every ordered pair from `probes`.
// `eq_universe` drives extensional comparison of function positions.
Verdict check_vl_laws(const VlOptic& o, std::span<const Val> universe_a,
                      std::span<const Coalgebra> probes, std::span<const Val> eq_universe);

// Deterministic probe coalgebras at the registered contexts, over a finite
// index universe.  applicative_only drops the store-context probes, which a
// biplate-strength optic cannot run.
std::vector<Coalgebra> law3_probe_coalgebras(std::span<const Val> universe_b,
                                             bool applicative_only);

}  // namespace optic
