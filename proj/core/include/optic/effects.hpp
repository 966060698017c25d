// effects.hpp
// Effect contexts as first-class descriptors.
//
// A context describes one family of containers over Vals together with the
// capability operations it supports: map always; pure/ap for applicative
// contexts; join for monads; extract/duplicate/extend for comonads.  Using a
// missing capability throws CapabilityError.  Containers are plain Vals, so
// law checkers can enumerate and compare them like any other value.

#pragma once

#include <functional>
#include <memory>
#include <stdexcept>
#include <string>

#include "optic/monoid.hpp"
#include "optic/val.hpp"

namespace optic {

class CapabilityError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

class EffectContext {
public:
  const std::string& name() const;
  bool has_applicative() const;
  bool has_monad() const;
  bool has_comonad() const;

  Val map(const ValFn& f, const Val& c) const;
  Val pure(const Val& x) const;
  Val ap(const Val& f, const Val& x) const;
  Val join(const Val& mm) const;
  Val extract(const Val& w) const;
  Val duplicate(const Val& w) const;
  Val extend(const ValFn& f, const Val& w) const;  // map f . duplicate

  // The container is the element itself.
  static EffectContext identity();

  // The container is a monoid element; map is the identity, pure yields the
  // monoid identity and ap combines.
  static EffectContext constant(Monoid o);

  // Containers are outer-containers of inner-containers.
  static EffectContext compose(EffectContext outer, EffectContext inner);

  // Store comonad containers (functor + comonad, no pure).
  static EffectContext store();

  // Cartesian store containers (functor + comonad + applicative).
  static EffectContext cartesian_store();

  // Option-shaped monad: () is absent, (x) is present.
  static EffectContext maybe();

  friend bool operator==(const EffectContext& a, const EffectContext& b) {
    return a.name() == b.name();
  }

  struct Impl;
  explicit EffectContext(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

private:
  std::shared_ptr<const Impl> impl_;
};

// A natural transformation between contexts, used to remap coalgebras and
// plates (coalgMap / mapPlate).
struct NatTrans {
  std::string name;
  EffectContext from;
  EffectContext to;
  ValFn fn;
};

NatTrans identity_nat(const EffectContext& k);
NatTrans extract_nat(const EffectContext& w);                    // comonad w => Id
NatTrans pure_nat(const EffectContext& k);                       // Id => applicative k
NatTrans duplicate_nat(const EffectContext& w);                  // w => w . w
NatTrans join_nat(const EffectContext& m);                       // m . m => m
NatTrans map_nat(const EffectContext& outer, const NatTrans& t); // outer.F => outer.G

// Left-to-right effectful traversal of a List container.
Val traverse_list(const EffectContext& k, const ValFn& f, const Val& xs);

// extend (f . extract); equals map f for lawful comonads.
Val lift_w(const EffectContext& w, const ValFn& f, const Val& c);

Val maybe_nothing();
Val maybe_just(Val x);
bool maybe_is_just(const Val& m);
const Val& maybe_value(const Val& m);

}  // namespace optic
