#include "optic/cartesian.hpp"

#include <algorithm>
#include <sstream>

namespace optic {

Val cs_extract(const Val& s) {
  if (s.is_cs_unit()) return s.cs_element();
  return apply_val(cs_extract(s.cs_inner()), s.cs_last());
}

Val cs_map(const ValFn& f, const Val& s) {
  if (s.is_cs_unit()) return Val::cs_unit(f(s.cs_element()));
  // fmap f (Battery v b) = Battery (fmap (f .) v) b
  // f is captured by value: postcompose may store the wrapper inside an
  // opaque cell that outlives this call.
  Val inner = cs_map([f](const Val& cell) { return postcompose(f, cell); }, s.cs_inner());
  return Val::cs_battery(std::move(inner), s.cs_last());
}

Val cs_duplicate(const Val& s) {
  if (s.is_cs_unit()) return Val::cs_unit(s);
  // duplicate (Battery v b) = Battery (extend Battery v) b
  Val inner = cs_extend(
      [](const Val& w) {
        return Val::fn([w](const Val& b) { return Val::cs_battery(w, b); });
      },
      s.cs_inner());
  return Val::cs_battery(std::move(inner), s.cs_last());
}

Val cs_extend(const ValFn& f, const Val& s) { return cs_map(f, cs_duplicate(s)); }

Val cs_pure(const Val& a) { return Val::cs_unit(a); }

namespace {

// (.) as a curried value; compose_val grounds through tables.
Val compose_cell() {
  return Val::fn([](const Val& g) {
    return Val::fn([g](const Val& h) { return compose_val(g, h); });
  });
}

}  // namespace

Val cs_ap(const Val& f, const Val& x) {
  if (x.is_cs_unit()) {
    // f <*> Unit a = fmap ($ a) f
    const Val a = x.cs_element();
    return cs_map([a](const Val& g) { return apply_val(g, a); }, f);
  }
  // f <*> Battery v b = Battery ((.) <*> f <*> v) b
  Val inner = cs_ap(cs_ap(cs_pure(compose_cell()), f), x.cs_inner());
  return Val::cs_battery(std::move(inner), x.cs_last());
}

Val single_store(const Val& store) {
  return Val::cs_battery(Val::cs_unit(store.store_peek()), store.store_pos());
}

std::optional<std::pair<Val, Val>> strip_dimension(const Val& s) {
  if (s.is_cs_unit()) return std::nullopt;
  const Val& v = s.cs_inner();
  const Val& b = s.cs_last();
  Val head = Val::store(cs_extract(v), b);
  Val rest = cs_map([b](const Val& cell) { return apply_val(cell, b); }, v);
  return std::make_pair(std::move(head), std::move(rest));
}

std::vector<Val> cs_stores(const Val& s) {
  std::vector<Val> out;
  Val cur = s;
  while (auto step = strip_dimension(cur)) {
    out.push_back(step->first);
    cur = step->second;
  }
  return out;
}

namespace {

void coords_product(std::span<const Val> universe, std::size_t arity,
                    std::vector<Val>& scratch, const std::function<void(std::span<const Val>)>& visit) {
  if (scratch.size() == arity) {
    visit(scratch);
    return;
  }
  for (const Val& u : universe) {
    scratch.push_back(u);
    coords_product(universe, arity, scratch, visit);
    scratch.pop_back();
  }
}

}  // namespace

NormalForm to_normal_form(const Val& s, std::span<const Val> universe_b) {
  NormalForm n;
  n.positions = cs_positions(s);
  TableEntries entries;
  std::vector<Val> scratch;
  coords_product(universe_b, n.positions.size(), scratch, [&](std::span<const Val> coords) {
    entries.emplace_back(Val::list({coords.begin(), coords.end()}), cs_peek_at(s, coords));
  });
  n.peek = Val::table(std::move(entries));
  return n;
}

namespace {

// Curried nested tables from a flat coordinate-list table: first coordinate is
// the outermost argument (it is applied first when extracting).
Val curry_flat_table(const Val& flat, std::size_t arity) {
  if (arity == 0) return flat.call(Val::list({}));
  // Group the flat entries by their first coordinate.
  std::vector<std::pair<Val, TableEntries>> groups;
  for (const auto& [key, value] : flat.entries()) {
    const auto& coords = key.items();
    Val head = coords[0];
    Val tail = Val::list({coords.begin() + 1, coords.end()});
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&head](const auto& g) { return g.first == head; });
    if (it == groups.end()) {
      groups.push_back({head, {}});
      it = groups.end() - 1;
    }
    it->second.emplace_back(std::move(tail), value);
  }
  TableEntries out;
  out.reserve(groups.size());
  for (auto& [head, sub] : groups) {
    out.emplace_back(head, curry_flat_table(Val::table(std::move(sub)), arity - 1));
  }
  return Val::table(std::move(out));
}

}  // namespace

Val from_normal_form(const NormalForm& n) {
  Val acc = Val::cs_unit(curry_flat_table(n.peek, n.positions.size()));
  for (const Val& b : n.positions) acc = Val::cs_battery(std::move(acc), b);
  return acc;
}

Biplate id_biplate() {
  return Biplate([](const Val& x) {
    return Val::cs_battery(Val::cs_unit(Val::fn([](const Val& b) { return b; })), x);
  });
}

namespace {

Val compose_biplate_walk(const Biplate& outer, const Val& s) {
  if (s.is_cs_unit()) return s;
  Val f_v = compose_biplate_walk(outer, s.cs_inner());
  return cs_ap(f_v, outer.run(s.cs_last()));
}

}  // namespace

Biplate compose_biplate(const Biplate& outer, const Biplate& inner) {
  return Biplate([outer, inner](const Val& a) { return compose_biplate_walk(outer, inner.run(a)); });
}

Biplate lens_biplate(const Lens& l) {
  return Biplate([l](const Val& a) { return single_store(l.run(a)); });
}

Verdict check_biplate_laws(const Biplate& o, std::span<const Val> universe) {
  Verdict v;
  for (const Val& a : universe) {
    ++v.checked;
    if (!deep_equal_on(cs_extract(o.run(a)), a, universe)) {
      return {false, "extract . run = id", "a = " + a.to_text(), v.checked};
    }
  }
  for (const Val& a : universe) {
    ++v.checked;
    Val oa = o.run(a);
    Val lhs = cs_map([&o](const Val& x) { return o.run(x); }, oa);
    Val rhs = cs_duplicate(oa);
    if (!deep_equal_on(lhs, rhs, universe)) {
      return {false, "map run . run = duplicate . run", "a = " + a.to_text(), v.checked};
    }
  }
  return v;
}

}  // namespace optic
