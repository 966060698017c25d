#include "optic/multiplate.hpp"

#include <sstream>

namespace optic {

struct PlateShape::Impl {
  std::string name;
  std::vector<std::string> sorts;
  std::function<Plate(const Plate&)> multiplate;
};

PlateShape::PlateShape(std::string name, std::vector<std::string> sorts,
                       std::function<Plate(const Plate&)> multiplate) {
  auto impl = std::make_shared<Impl>();
  impl->name = std::move(name);
  impl->sorts = std::move(sorts);
  impl->multiplate = std::move(multiplate);
  impl_ = std::move(impl);
}

const std::string& PlateShape::name() const { return impl_->name; }
std::size_t PlateShape::sort_count() const { return impl_->sorts.size(); }
const std::vector<std::string>& PlateShape::sorts() const { return impl_->sorts; }

std::size_t PlateShape::sort_index(std::string_view sort) const {
  for (std::size_t i = 0; i < impl_->sorts.size(); ++i) {
    if (impl_->sorts[i] == sort) return i;
  }
  throw std::logic_error("PlateShape: unknown sort " + std::string(sort));
}

Projector PlateShape::projector(std::size_t sort) const {
  if (sort >= impl_->sorts.size()) throw std::logic_error("PlateShape: sort index out of range");
  return Projector(*this, sort);
}

Projector PlateShape::projector(std::string_view sort) const {
  return Projector(*this, sort_index(sort));
}

Plate PlateShape::multiplate(const Plate& p) const {
  if (!(p.shape() == *this)) throw std::logic_error("multiplate: plate shape mismatch");
  return impl_->multiplate(p);
}

Plate PlateShape::mk_plate(const EffectContext& k, const FieldBuilder& build) const {
  std::vector<FieldFn> fields;
  fields.reserve(sort_count());
  for (std::size_t i = 0; i < sort_count(); ++i) fields.push_back(build(projector(i)));
  return Plate(*this, k, std::move(fields));
}

FieldFn Projector::field(const Plate& p) const { return p.field(sort_); }
Val Projector::apply(const Plate& p, const Val& a) const { return p.field(sort_)(a); }

Plate::Plate(PlateShape shape, EffectContext ctx, std::vector<FieldFn> fields)
    : shape_(std::move(shape)), ctx_(std::move(ctx)), fields_(std::move(fields)) {
  if (fields_.size() != shape_.sort_count()) {
    throw std::logic_error("Plate: field count does not match shape");
  }
}

const FieldFn& Plate::field(std::size_t sort) const {
  if (sort >= fields_.size()) throw std::logic_error("Plate: sort index out of range");
  return fields_[sort];
}

Val Plate::apply(std::size_t sort, const Val& a) const { return field(sort)(a); }

Val Plate::apply(std::string_view sort, const Val& a) const {
  return field(shape_.sort_index(sort))(a);
}

Plate Plate::with_field(std::size_t sort, FieldFn f) const {
  Plate out = *this;
  if (sort >= out.fields_.size()) throw std::logic_error("Plate: sort index out of range");
  out.fields_[sort] = std::move(f);
  return out;
}

Plate Plate::with_field(std::string_view sort, FieldFn f) const {
  return with_field(shape_.sort_index(sort), std::move(f));
}

Plate pure_plate(const PlateShape& shape, const EffectContext& k) {
  if (!k.has_applicative()) {
    throw CapabilityError("pure_plate: context " + k.name() + " has no pure");
  }
  return shape.mk_plate(k, [k](const Projector&) {
    return [k](const Val& a) { return k.pure(a); };
  });
}

Plate id_plate(const PlateShape& shape) {
  return pure_plate(shape, EffectContext::identity());
}

Plate map_plate(const NatTrans& eta, const Plate& p) {
  if (!(p.context() == eta.from)) {
    throw std::logic_error("map_plate: plate at " + p.context().name() +
                           " but transformation expects " + eta.from.name());
  }
  return p.shape().mk_plate(eta.to, [p, fn = eta.fn](const Projector& pr) {
    return [p, fn, pr](const Val& a) { return fn(pr.apply(p, a)); };
  });
}

Plate compose_plate(const Plate& p1, const Plate& p2) {
  if (!(p1.shape() == p2.shape())) throw std::logic_error("compose_plate: shape mismatch");
  EffectContext ctx = EffectContext::compose(p2.context(), p1.context());
  return p1.shape().mk_plate(ctx, [p1, p2](const Projector& pr) {
    return [p1, p2, pr](const Val& a) {
      return p2.context().map([p1, pr](const Val& x) { return pr.apply(p1, x); },
                              pr.apply(p2, a));
    };
  });
}

Plate kleisli_compose_plate(const Plate& p1, const Plate& p2) {
  if (!(p1.context() == p2.context())) {
    throw std::logic_error("kleisli_compose_plate: contexts differ");
  }
  if (!p1.context().has_monad()) {
    throw CapabilityError("kleisli_compose_plate: " + p1.context().name() + " is not a monad");
  }
  return map_plate(join_nat(p1.context()), compose_plate(p1, p2));
}

Plate map_family_m(const Plate& p) {
  if (!p.context().has_monad()) {
    throw CapabilityError("map_family_m: " + p.context().name() + " is not a monad");
  }
  PlateShape shape = p.shape();
  return shape.mk_plate(p.context(), [p, shape](const Projector& pr) {
    return [p, shape, pr](const Val& a) {
      // Rebuilt per application; recursion only descends into children.
      Plate rec = kleisli_compose_plate(p, shape.multiplate(map_family_m(p)));
      return pr.apply(rec, a);
    };
  });
}

Plate map_family(const Plate& p) {
  if (!(p.context() == EffectContext::identity())) {
    throw std::logic_error("map_family: plate must be at the identity context");
  }
  return map_family_m(p);
}

namespace {

// u <* v: keep u's value, combine both effects.
Val ap_left(const EffectContext& k, const Val& u, const Val& v) {
  Val keep = k.map([](const Val& x) { return Val::fn([x](const Val&) { return x; }); }, u);
  return k.ap(keep, v);
}

}  // namespace

Plate append_plate(const Plate& p1, const Plate& p2) {
  if (!(p1.context() == p2.context())) throw std::logic_error("append_plate: contexts differ");
  const EffectContext& k = p1.context();
  if (!k.has_applicative()) {
    throw CapabilityError("append_plate: " + k.name() + " is not applicative");
  }
  return p1.shape().mk_plate(k, [p1, p2, k](const Projector& pr) {
    return [p1, p2, k, pr](const Val& a) {
      return ap_left(k, pr.apply(p1, a), pr.apply(p2, a));
    };
  });
}

Plate preorder_fold(const Plate& p) {
  PlateShape shape = p.shape();
  return shape.mk_plate(p.context(), [p, shape](const Projector& pr) {
    return [p, shape, pr](const Val& a) {
      Plate rec = append_plate(p, shape.multiplate(preorder_fold(p)));
      return pr.apply(rec, a);
    };
  });
}

Plate postorder_fold(const Plate& p) {
  PlateShape shape = p.shape();
  return shape.mk_plate(p.context(), [p, shape](const Projector& pr) {
    return [p, shape, pr](const Val& a) {
      Plate rec = append_plate(shape.multiplate(postorder_fold(p)), p);
      return pr.apply(rec, a);
    };
  });
}

Verdict check_multiplate_laws(const PlateShape& shape,
                              const std::vector<std::vector<Val>>& universes,
                              std::span<const std::pair<Plate, Plate>> extra_pairs,
                              std::span<const Val> eq_universe) {
  if (universes.size() != shape.sort_count()) {
    throw std::logic_error("check_multiplate_laws: universe count does not match sorts");
  }
  auto equal = [eq_universe](const Val& l, const Val& r) {
    return eq_universe.empty() ? l == r : deep_equal_on(l, r, eq_universe);
  };
  Verdict v;

  // Law 1: multiplate idPlate = idPlate.
  Plate traversed_id = shape.multiplate(id_plate(shape));
  for (std::size_t sort = 0; sort < shape.sort_count(); ++sort) {
    for (const Val& t : universes[sort]) {
      ++v.checked;
      Val got = traversed_id.apply(sort, t);
      if (got != t) {
        return {false, "multiplate idPlate = idPlate",
                shape.sorts()[sort] + " term " + t.to_text() + " became " + got.to_text(),
                v.checked};
      }
    }
  }

  // Law 2: multiplate (composePlate p1 p2) = composePlate (multiplate p1) (multiplate p2).
  std::vector<std::pair<Plate, Plate>> pairs(extra_pairs.begin(), extra_pairs.end());
  Plate collect = shape.mk_plate(EffectContext::constant(Monoid::list()), [](const Projector&) {
    return [](const Val& a) { return Val::list({a}); };
  });
  Plate count = shape.mk_plate(EffectContext::constant(Monoid::sum()), [](const Projector&) {
    return [](const Val&) { return Val::integer(1); };
  });
  Plate ident = id_plate(shape);
  pairs.emplace_back(ident, ident);
  pairs.emplace_back(collect, ident);
  pairs.emplace_back(ident, count);
  pairs.emplace_back(collect, count);

  for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
    const auto& [p1, p2] = pairs[pi];
    Plate lhs = shape.multiplate(compose_plate(p1, p2));
    Plate rhs = compose_plate(shape.multiplate(p1), shape.multiplate(p2));
    for (std::size_t sort = 0; sort < shape.sort_count(); ++sort) {
      for (const Val& t : universes[sort]) {
        ++v.checked;
        Val l = lhs.apply(sort, t);
        Val r = rhs.apply(sort, t);
        if (!equal(l, r)) {
          std::ostringstream msg;
          msg << "pair #" << pi << " (" << p1.context().name() << ", " << p2.context().name()
              << "), " << shape.sorts()[sort] << " term " << t.to_text() << ": " << l.to_text()
              << " vs " << r.to_text();
          return {false, "multiplate (composePlate p1 p2) = composePlate ...", msg.str(),
                  v.checked};
        }
      }
    }
  }
  return v;
}

}  // namespace optic
