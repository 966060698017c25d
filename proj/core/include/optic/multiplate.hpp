// multiplate.hpp
// Plates: one coalgebra field per sort of a mutually recursive family, all at
// a shared effect context, plus the generic traversal/fold machinery over any
// family that supplies `multiplate` (children traversal) and `mkPlate`
// (field-generic construction).
//
// The corecursive operations (map_family_m, preorder_fold, postorder_fold)
// rebuild their recursive plate on demand inside each field, so they
// terminate on finite trees under strict evaluation.

#pragma once

#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "optic/effects.hpp"
#include "optic/store.hpp"
#include "optic/val.hpp"

namespace optic {

class Plate;
class Projector;

using FieldFn = ValFn;
using FieldBuilder = std::function<FieldFn(const Projector&)>;

// The contract one type family implements: sort names, the children
// traversal, and (optionally) a custom field-generic builder.
class PlateShape {
public:
  PlateShape(std::string name, std::vector<std::string> sorts,
             std::function<Plate(const Plate&)> multiplate);

  const std::string& name() const;
  std::size_t sort_count() const;
  const std::vector<std::string>& sorts() const;
  std::size_t sort_index(std::string_view sort) const;

  Projector projector(std::size_t sort) const;
  Projector projector(std::string_view sort) const;

  // Children traversal: applies each field of p to the corresponding
  // immediate children of the input, rebuilding in p's context.
  Plate multiplate(const Plate& p) const;

  // Builds a plate by handing each field's projector to `build`.
  Plate mk_plate(const EffectContext& k, const FieldBuilder& build) const;

  friend bool operator==(const PlateShape& a, const PlateShape& b) {
    return a.impl_ == b.impl_;
  }

private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
  friend class Plate;
  friend class Projector;
};

// Selects one sort's field out of any plate of the same shape.
class Projector {
public:
  Projector(PlateShape shape, std::size_t sort) : shape_(std::move(shape)), sort_(sort) {}

  std::size_t sort() const { return sort_; }
  const std::string& sort_name() const { return shape_.sorts()[sort_]; }
  const PlateShape& shape() const { return shape_; }

  FieldFn field(const Plate& p) const;
  Val apply(const Plate& p, const Val& a) const;

private:
  PlateShape shape_;
  std::size_t sort_;
};

class Plate {
public:
  Plate(PlateShape shape, EffectContext ctx, std::vector<FieldFn> fields);

  const PlateShape& shape() const { return shape_; }
  const EffectContext& context() const { return ctx_; }

  const FieldFn& field(std::size_t sort) const;
  Val apply(std::size_t sort, const Val& a) const;
  Val apply(std::string_view sort, const Val& a) const;

  // Copy with one field overridden, e.g. purePlate { var := rename }.
  Plate with_field(std::size_t sort, FieldFn f) const;
  Plate with_field(std::string_view sort, FieldFn f) const;

private:
  PlateShape shape_;
  EffectContext ctx_;
  std::vector<FieldFn> fields_;
};

// Every field is the pure embedding; requires an applicative context.
Plate pure_plate(const PlateShape& shape, const EffectContext& k);

// purePlate at the identity context: every field is the identity function.
Plate id_plate(const PlateShape& shape);

// Field-wise eta . field; p's context must be eta.from.
Plate map_plate(const NatTrans& eta, const Plate& p);

// Field-wise: run p2's field, then map p1's field inside; context becomes
// Compose(p2.ctx, p1.ctx).
Plate compose_plate(const Plate& p1, const Plate& p2);

// Field-wise Kleisli composition at one monad, p2 first; derived as
// mapPlate join . composePlate.
Plate kleisli_compose_plate(const Plate& p1, const Plate& p2);

// Bottom-up transformation: children rebuilt before p applies to the parent.
Plate map_family_m(const Plate& p);  // any monad context
Plate map_family(const Plate& p);    // identity context only

// Field-wise monoid combine of two analyses at the same constant context,
// p1's yield on the left.
Plate append_plate(const Plate& p1, const Plate& p2);

// Whole-family folds at a constant context: combine p's yield at every node
// with all descendants' yields, node-first / node-last.
Plate preorder_fold(const Plate& p);
Plate postorder_fold(const Plate& p);

// Multiplate laws, checked pointwise per field over `universes` (one term
// universe per sort, aligned with shape.sorts()).  The second law runs over
// generically built analysis plates plus any `extra_pairs`.  Containers are
// compared structurally unless `eq_universe` is non-empty, in which case
// function positions compare extensionally over it (needed when a pair's
// context builds store-like containers).
Verdict check_multiplate_laws(const PlateShape& shape,
                              const std::vector<std::vector<Val>>& universes,
                              std::span<const std::pair<Plate, Plate>> extra_pairs = {},
                              std::span<const Val> eq_universe = {});

}  // namespace optic
