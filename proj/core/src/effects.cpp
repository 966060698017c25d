#include "optic/effects.hpp"

#include "optic/cartesian.hpp"
#include "optic/store.hpp"

namespace optic {

struct EffectContext::Impl {
  std::string name;
  bool applicative = false;
  bool monad = false;
  bool comonad = false;

  std::function<Val(const ValFn&, const Val&)> map;
  std::function<Val(const Val&)> pure;
  std::function<Val(const Val&, const Val&)> ap;
  std::function<Val(const Val&)> join;
  std::function<Val(const Val&)> extract;
  std::function<Val(const Val&)> duplicate;
};

const std::string& EffectContext::name() const { return impl_->name; }
bool EffectContext::has_applicative() const { return impl_->applicative; }
bool EffectContext::has_monad() const { return impl_->monad; }
bool EffectContext::has_comonad() const { return impl_->comonad; }

Val EffectContext::map(const ValFn& f, const Val& c) const { return impl_->map(f, c); }

Val EffectContext::pure(const Val& x) const {
  if (!impl_->applicative) throw CapabilityError(impl_->name + " has no pure");
  return impl_->pure(x);
}

Val EffectContext::ap(const Val& f, const Val& x) const {
  if (!impl_->applicative) throw CapabilityError(impl_->name + " has no ap");
  return impl_->ap(f, x);
}

Val EffectContext::join(const Val& mm) const {
  if (!impl_->monad) throw CapabilityError(impl_->name + " has no join");
  return impl_->join(mm);
}

Val EffectContext::extract(const Val& w) const {
  if (!impl_->comonad) throw CapabilityError(impl_->name + " has no extract");
  return impl_->extract(w);
}

Val EffectContext::duplicate(const Val& w) const {
  if (!impl_->comonad) throw CapabilityError(impl_->name + " has no duplicate");
  return impl_->duplicate(w);
}

Val EffectContext::extend(const ValFn& f, const Val& w) const { return map(f, duplicate(w)); }

EffectContext EffectContext::identity() {
  static const auto impl = [] {
    auto m = std::make_shared<Impl>();
    m->name = "Id";
    m->applicative = m->monad = m->comonad = true;
    m->map = [](const ValFn& f, const Val& c) { return f(c); };
    m->pure = [](const Val& x) { return x; };
    m->ap = [](const Val& f, const Val& x) { return apply_val(f, x); };
    m->join = [](const Val& mm) { return mm; };
    m->extract = [](const Val& w) { return w; };
    m->duplicate = [](const Val& w) { return w; };
    return std::shared_ptr<const Impl>(m);
  }();
  return EffectContext(impl);
}

EffectContext EffectContext::constant(Monoid o) {
  auto m = std::make_shared<Impl>();
  m->name = "Const(" + o.name() + ")";
  m->applicative = true;
  m->map = [](const ValFn&, const Val& c) { return c; };
  m->pure = [o](const Val&) { return o.identity(); };
  m->ap = [o](const Val& f, const Val& x) { return o.combine(f, x); };
  return EffectContext(std::shared_ptr<const Impl>(std::move(m)));
}

EffectContext EffectContext::compose(EffectContext outer, EffectContext inner) {
  auto m = std::make_shared<Impl>();
  m->name = "Compose(" + outer.name() + "," + inner.name() + ")";
  m->applicative = outer.has_applicative() && inner.has_applicative();
  // Wrappers handed to the outer context are captured by value end to end:
  // store-like outer contexts may keep them inside returned containers.
  m->map = [outer, inner](const ValFn& f, const Val& c) {
    return outer.map([inner, f](const Val& g) { return inner.map(f, g); }, c);
  };
  m->pure = [outer, inner](const Val& x) { return outer.pure(inner.pure(x)); };
  m->ap = [outer, inner](const Val& f, const Val& x) {
    Val lifted = outer.map(
        [inner](const Val& gf) {
          return Val::fn([inner, gf](const Val& gx) { return inner.ap(gf, gx); });
        },
        f);
    return outer.ap(lifted, x);
  };
  return EffectContext(std::shared_ptr<const Impl>(std::move(m)));
}

EffectContext EffectContext::store() {
  static const auto impl = [] {
    auto m = std::make_shared<Impl>();
    m->name = "Store";
    m->comonad = true;
    m->map = [](const ValFn& f, const Val& c) { return store_map(f, c); };
    m->extract = [](const Val& w) { return store_extract(w); };
    m->duplicate = [](const Val& w) { return store_duplicate(w); };
    return std::shared_ptr<const Impl>(m);
  }();
  return EffectContext(impl);
}

EffectContext EffectContext::cartesian_store() {
  static const auto impl = [] {
    auto m = std::make_shared<Impl>();
    m->name = "CartesianStore";
    m->comonad = true;
    m->applicative = true;
    m->map = [](const ValFn& f, const Val& c) { return cs_map(f, c); };
    m->pure = [](const Val& x) { return cs_pure(x); };
    m->ap = [](const Val& f, const Val& x) { return cs_ap(f, x); };
    m->extract = [](const Val& w) { return cs_extract(w); };
    m->duplicate = [](const Val& w) { return cs_duplicate(w); };
    return std::shared_ptr<const Impl>(m);
  }();
  return EffectContext(impl);
}

Val maybe_nothing() { return Val::list({}); }
Val maybe_just(Val x) { return Val::list({std::move(x)}); }
bool maybe_is_just(const Val& m) { return !m.items().empty(); }
const Val& maybe_value(const Val& m) { return m.items().front(); }

EffectContext EffectContext::maybe() {
  static const auto impl = [] {
    auto m = std::make_shared<Impl>();
    m->name = "Maybe";
    m->applicative = m->monad = true;
    m->map = [](const ValFn& f, const Val& c) {
      return maybe_is_just(c) ? maybe_just(f(maybe_value(c))) : maybe_nothing();
    };
    m->pure = [](const Val& x) { return maybe_just(x); };
    m->ap = [](const Val& f, const Val& x) {
      if (maybe_is_just(f) && maybe_is_just(x)) {
        return maybe_just(apply_val(maybe_value(f), maybe_value(x)));
      }
      return maybe_nothing();
    };
    m->join = [](const Val& mm) { return maybe_is_just(mm) ? maybe_value(mm) : maybe_nothing(); };
    return std::shared_ptr<const Impl>(m);
  }();
  return EffectContext(impl);
}

NatTrans identity_nat(const EffectContext& k) {
  return {"id", k, k, [](const Val& c) { return c; }};
}

NatTrans extract_nat(const EffectContext& w) {
  return {"extract", w, EffectContext::identity(), [w](const Val& c) { return w.extract(c); }};
}

NatTrans pure_nat(const EffectContext& k) {
  return {"pure", EffectContext::identity(), k, [k](const Val& c) { return k.pure(c); }};
}

NatTrans duplicate_nat(const EffectContext& w) {
  return {"duplicate", w, EffectContext::compose(w, w),
          [w](const Val& c) { return w.duplicate(c); }};
}

NatTrans join_nat(const EffectContext& m) {
  return {"join", EffectContext::compose(m, m), m, [m](const Val& c) { return m.join(c); }};
}

NatTrans map_nat(const EffectContext& outer, const NatTrans& t) {
  return {"map(" + t.name + ")", EffectContext::compose(outer, t.from),
          EffectContext::compose(outer, t.to),
          [outer, fn = t.fn](const Val& c) { return outer.map(fn, c); }};
}

namespace {

Val prepend(const Val& head, const Val& rest) {
  std::vector<Val> out;
  out.reserve(rest.items().size() + 1);
  out.push_back(head);
  out.insert(out.end(), rest.items().begin(), rest.items().end());
  return Val::list(std::move(out));
}

Val traverse_from(const EffectContext& k, const ValFn& f, const std::vector<Val>& xs,
                  std::size_t i) {
  if (i == xs.size()) return k.pure(Val::list({}));
  Val head = k.map(
      [](const Val& v) {
        return Val::fn([v](const Val& rest) { return prepend(v, rest); });
      },
      f(xs[i]));
  return k.ap(head, traverse_from(k, f, xs, i + 1));
}

}  // namespace

Val traverse_list(const EffectContext& k, const ValFn& f, const Val& xs) {
  return traverse_from(k, f, xs.items(), 0);
}

Val lift_w(const EffectContext& w, const ValFn& f, const Val& c) {
  return w.extend([w, f](const Val& inner) { return f(w.extract(inner)); }, c);
}

}  // namespace optic
