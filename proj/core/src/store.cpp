#include "optic/store.hpp"

#include <sstream>

namespace optic {

Val store_extract(const Val& s) { return apply_val(s.store_peek(), s.store_pos()); }

Val store_duplicate(const Val& s) {
  const Val peek = s.store_peek();
  // peek' b = Store peek b: ground through tables so law reports stay readable.
  Val outer_peek;
  if (peek.is_table()) {
    TableEntries out;
    out.reserve(peek.entries().size());
    for (const auto& [k, v] : peek.entries()) {
      (void)v;
      out.emplace_back(k, Val::store(peek, k));
    }
    outer_peek = Val::table(std::move(out));
  } else {
    outer_peek = Val::fn([peek](const Val& b) { return Val::store(peek, b); });
  }
  return Val::store(outer_peek, s.store_pos());
}

Val store_map(const ValFn& f, const Val& s) {
  return Val::store(postcompose(f, s.store_peek()), s.store_pos());
}

Val store_map_val(const Val& f, const Val& s) {
  return Val::store(compose_val(f, s.store_peek()), s.store_pos());
}

Val store_extend(const ValFn& f, const Val& s) { return store_map(f, store_duplicate(s)); }

Lens make_lens(std::function<Val(const Val&)> getter,
               std::function<Val(const Val&, const Val&)> setter) {
  return Lens([getter = std::move(getter), setter = std::move(setter)](const Val& a) {
    return Val::store(Val::fn([setter, a](const Val& b) { return setter(a, b); }), getter(a));
  });
}

Lens id_lens() {
  return Lens([](const Val& a) { return Val::store(Val::fn([](const Val& b) { return b; }), a); });
}

Lens compose_lens(const Lens& outer, const Lens& inner) {
  return Lens([outer, inner](const Val& a) {
    Val st = inner.run(a);
    return store_map_val(st.store_peek(), outer.run(st.store_pos()));
  });
}

Lens duplicate_lens() {
  return Lens([](const Val& s) { return store_duplicate(s); });
}

namespace {

std::string instance_text(std::initializer_list<std::pair<const char*, const Val*>> parts) {
  std::ostringstream out;
  bool sep = false;
  for (const auto& [name, v] : parts) {
    if (sep) out << ", ";
    out << name << " = " << v->to_text();
    sep = true;
  }
  return out.str();
}

}  // namespace

Verdict check_lens_laws(const Lens& l, std::span<const Val> universe_a,
                        std::span<const Val> universe_b) {
  Verdict v;
  // get l (set l s b) = b
  for (const Val& s : universe_a) {
    for (const Val& b : universe_b) {
      ++v.checked;
      if (l.get(l.set(s, b)) != b) {
        return {false, "get (set s b) = b", instance_text({{"s", &s}, {"b", &b}}), v.checked};
      }
    }
  }
  // set l s (get l s) = s
  for (const Val& s : universe_a) {
    ++v.checked;
    if (l.set(s, l.get(s)) != s) {
      return {false, "set s (get s) = s", instance_text({{"s", &s}}), v.checked};
    }
  }
  // set l (set l s b1) b2 = set l s b2
  for (const Val& s : universe_a) {
    for (const Val& b1 : universe_b) {
      for (const Val& b2 : universe_b) {
        ++v.checked;
        if (l.set(l.set(s, b1), b2) != l.set(s, b2)) {
          return {false, "set (set s b1) b2 = set s b2",
                  instance_text({{"s", &s}, {"b1", &b1}, {"b2", &b2}}), v.checked};
        }
      }
    }
  }
  return v;
}

Verdict check_coalgebra_laws(const Lens& l, std::span<const Val> universe_a,
                             std::span<const Val> universe_b) {
  Verdict v;
  // extract . l = id
  for (const Val& a : universe_a) {
    ++v.checked;
    if (!deep_equal_on(store_extract(l.run(a)), a, universe_b)) {
      return {false, "extract . run = id", instance_text({{"a", &a}}), v.checked};
    }
  }
  // map run . run = duplicate . run
  for (const Val& a : universe_a) {
    ++v.checked;
    Val la = l.run(a);
    Val lhs = store_map([&l](const Val& x) { return l.run(x); }, la);
    Val rhs = store_duplicate(la);
    if (!deep_equal_on(lhs, rhs, universe_b)) {
      return {false, "map run . run = duplicate . run", instance_text({{"a", &a}}), v.checked};
    }
  }
  return v;
}

// --- address fixture ---

namespace {
const char* kAddressTag = "Address";
}

Val make_address(const std::string& phone, const std::string& website) {
  return Val::list({Val::sym(kAddressTag), Val::str(phone), Val::str(website)});
}

std::string address_phone(const Val& address) { return address.items()[1].str_value(); }
std::string address_website(const Val& address) { return address.items()[2].str_value(); }

Lens phone_lens() {
  return make_lens([](const Val& a) { return a.items()[1]; },
                   [](const Val& a, const Val& p) {
                     return Val::list({a.items()[0], p, a.items()[2]});
                   });
}

Val pat_address() { return make_address("333-4444", "http://pat.com/"); }

}  // namespace optic
