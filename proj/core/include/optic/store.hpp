// store.hpp
// The store comonad and lenses as its coalgebras.
//
// A store value pairs a total peek (Table over a finite index universe, or an
// opaque Fn for unbounded index types) with a selected position.  A lens is a
// function A -> Store B A; it is lawful exactly when it satisfies either the
// get/set laws or the comonad coalgebra laws, and check_lens_laws /
// check_coalgebra_laws decide the two formulations independently.

#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "optic/val.hpp"

namespace optic {

// --- store comonad primitives ---

Val store_extract(const Val& s);            // peek(pos)
Val store_duplicate(const Val& s);          // Store (Store peek) pos
Val store_map(const ValFn& f, const Val& s);
Val store_map_val(const Val& f, const Val& s);  // peek := f . peek for a callable f
Val store_extend(const ValFn& f, const Val& s);

// --- lenses ---

class Lens {
public:
  explicit Lens(std::function<Val(const Val&)> run) : run_(std::move(run)) {}

  Val run(const Val& a) const { return run_(a); }
  Val get(const Val& a) const { return run_(a).store_pos(); }
  Val set(const Val& a, const Val& b) const { return apply_val(run_(a).store_peek(), b); }

private:
  std::function<Val(const Val&)> run_;
};

Lens make_lens(std::function<Val(const Val&)> getter,
               std::function<Val(const Val&, const Val&)> setter);
Lens id_lens();
Lens compose_lens(const Lens& outer, const Lens& inner);  // outer: B->C, inner: A->B

// The pos-component reference of a store: a lens from Store B A to B.
Lens duplicate_lens();

// --- law checking ---

struct Verdict {
  bool ok = true;
  std::string law;            // name of the first failing law, empty if ok
  std::string counterexample; // first failing instance in enumeration order
  std::size_t checked = 0;    // quantified instances visited

  explicit operator bool() const { return ok; }
};

// get/set laws of a very well behaved lens.
Verdict check_lens_laws(const Lens& l, std::span<const Val> universe_a,
                        std::span<const Val> universe_b);

// Coalgebra laws of the store comonad: extract . l = id, map l . l = duplicate . l.
Verdict check_coalgebra_laws(const Lens& l, std::span<const Val> universe_a,
                             std::span<const Val> universe_b);

// --- the address-book fixture ---

Val make_address(const std::string& phone, const std::string& website);
std::string address_phone(const Val& address);
std::string address_website(const Val& address);
Lens phone_lens();
Val pat_address();  // phone 333-4444, website http://pat.com/

}  // namespace optic
