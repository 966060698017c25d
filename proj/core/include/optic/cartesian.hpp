// cartesian.hpp
// The cartesian store comonad and biplates as its coalgebras.
//
// A cartesian store is the inductive Unit/Battery value built by Val::cs_unit
// and Val::cs_battery: Unit holds one element, Battery wraps a store of
// one-argument cells around one more selectable position.  An n-dimensional
// value is equivalent to n positions plus a total peek over n coordinates;
// NormalForm materializes that equivalence for finite index universes.
//
// Position order is innermost-battery first, matching the order in which the
// applicative instance consumes arguments.  Equality in the law checkers is
// structural on dimension and positions with peeks compared pointwise.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "optic/store.hpp"
#include "optic/val.hpp"

namespace optic {

// --- comonad ---

Val cs_extract(const Val& s);
Val cs_map(const ValFn& f, const Val& s);
Val cs_duplicate(const Val& s);
Val cs_extend(const ValFn& f, const Val& s);

// --- applicative ---

Val cs_pure(const Val& a);             // Unit
Val cs_ap(const Val& f, const Val& x); // dimension(f) + dimension(x)

// --- store conversions ---

Val single_store(const Val& store);                              // dimension-1 injection
std::optional<std::pair<Val, Val>> strip_dimension(const Val& s); // (outer store, rest)
std::vector<Val> cs_stores(const Val& s);                         // iterate strip_dimension

// --- normal form ---

struct NormalForm {
  std::vector<Val> positions;  // innermost first; arity = positions.size()
  Val peek;                    // Table keyed by coordinate lists of that arity
};

NormalForm to_normal_form(const Val& s, std::span<const Val> universe_b);
Val from_normal_form(const NormalForm& n);

// --- biplates ---

class Biplate {
public:
  explicit Biplate(std::function<Val(const Val&)> run) : run_(std::move(run)) {}
  Val run(const Val& a) const { return run_(a); }

private:
  std::function<Val(const Val&)> run_;
};

Biplate id_biplate();
Biplate compose_biplate(const Biplate& outer, const Biplate& inner);
Biplate lens_biplate(const Lens& l);  // single_store . run

// Coalgebra laws of the cartesian store comonad over a finite universe.
Verdict check_biplate_laws(const Biplate& o, std::span<const Val> universe);

}  // namespace optic
