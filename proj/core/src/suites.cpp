#include "optic/suites.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "optic/minilang/plate.hpp"
#include "optic/multiplate.hpp"

namespace optic {

namespace {

Val sym_a(int i) { return Val::sym("a" + std::to_string(i)); }
Val sym_b(int i) { return Val::sym("b" + std::to_string(i)); }

std::size_t index_in(const std::vector<Val>& u, const Val& x) {
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i] == x) return i;
  }
  throw std::logic_error("index_in: value outside universe: " + x.to_text());
}

Val rot_b(const Val& b) {
  const auto& u = universe_b3();
  return u[(index_in(u, b) + 1) % u.size()];
}
Val rot2_b(const Val& b) { return rot_b(rot_b(b)); }
Val swap01_b(const Val& b) {
  const auto& u = universe_b3();
  std::size_t i = index_in(u, b);
  if (i == 0) return u[1];
  if (i == 1) return u[0];
  return b;
}

LawResult from_verdict(std::string name, const Verdict& v) {
  LawResult r;
  r.name = std::move(name);
  r.passed = v.ok;
  r.checked = v.checked;
  if (!v.ok) r.detail = v.law + "; " + v.counterexample;
  return r;
}

LawResult make_result(std::string name, bool passed, std::size_t checked, std::string detail = "") {
  return LawResult{std::move(name), passed, checked, std::move(detail)};
}

}  // namespace

const std::vector<Val>& universe_a2() {
  static const std::vector<Val> u{sym_a(0), sym_a(1)};
  return u;
}

const std::vector<Val>& universe_b3() {
  static const std::vector<Val> u{sym_b(0), sym_b(1), sym_b(2)};
  return u;
}

Val make_record(const Val& b, std::int64_t flag) {
  return Val::list({b, Val::integer(flag)});
}
Val record_b(const Val& r) { return r.items()[0]; }
std::int64_t record_flag(const Val& r) { return r.items()[1].int_value(); }

const std::vector<Val>& universe_records() {
  static const std::vector<Val> u = [] {
    std::vector<Val> out;
    for (const Val& b : universe_b3()) {
      for (std::int64_t flag : {0, 1}) out.push_back(make_record(b, flag));
    }
    return out;
  }();
  return u;
}

std::vector<Val> enumerate_stores() {
  std::vector<Val> out;
  const auto& bs = universe_b3();
  const auto& as = universe_a2();
  // All assignments B3 -> A2.
  for (std::size_t mask = 0; mask < 8; ++mask) {
    TableEntries entries;
    for (std::size_t i = 0; i < bs.size(); ++i) {
      entries.emplace_back(bs[i], as[(mask >> i) & 1]);
    }
    Val peek = Val::table(entries);
    for (const Val& pos : bs) out.push_back(Val::store(peek, pos));
  }
  return out;
}

namespace {

// All curried tables of the given depth over B3 with A2 leaves: depth 0 gives
// the two leaf values, depth d all assignments B3 -> (depth d-1).
std::vector<Val> curried_tables(int depth) {
  if (depth == 0) return universe_a2();
  std::vector<Val> inner = curried_tables(depth - 1);
  const auto& bs = universe_b3();
  std::vector<Val> out;
  std::size_t total = 1;
  for (std::size_t i = 0; i < bs.size(); ++i) total *= inner.size();
  out.reserve(total);
  std::vector<std::size_t> pick(bs.size(), 0);
  for (;;) {
    TableEntries entries;
    for (std::size_t i = 0; i < bs.size(); ++i) entries.emplace_back(bs[i], inner[pick[i]]);
    out.push_back(Val::table(std::move(entries)));
    std::size_t i = 0;
    while (i < pick.size() && ++pick[i] == inner.size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

void position_tuples(int depth, std::vector<Val>& scratch,
                     const std::function<void(const std::vector<Val>&)>& visit) {
  if (depth == 0) {
    visit(scratch);
    return;
  }
  for (const Val& b : universe_b3()) {
    scratch.push_back(b);
    position_tuples(depth - 1, scratch, visit);
    scratch.pop_back();
  }
}

Val wrap_positions(Val curried, const std::vector<Val>& positions) {
  Val acc = Val::cs_unit(std::move(curried));
  for (const Val& b : positions) acc = Val::cs_battery(std::move(acc), b);
  return acc;
}

// A deterministic depth-3 peek family (full enumeration would be 2^27 tables).
std::vector<Val> canonical_depth3_tables() {
  const auto& bs = universe_b3();
  const auto& as = universe_a2();
  auto leaf = [&](int i) { return as[static_cast<std::size_t>(i)]; };

  auto depth2 = [&](const std::function<Val(const Val&, const Val&)>& f) {
    TableEntries outer;
    for (const Val& b1 : bs) {
      TableEntries innerEntries;
      for (const Val& b2 : bs) innerEntries.emplace_back(b2, f(b1, b2));
      outer.emplace_back(b1, Val::table(std::move(innerEntries)));
    }
    return Val::table(std::move(outer));
  };

  std::vector<Val> d2;
  d2.push_back(depth2([&](const Val&, const Val&) { return leaf(0); }));
  d2.push_back(depth2([&](const Val&, const Val&) { return leaf(1); }));
  d2.push_back(depth2([&](const Val& x, const Val& y) { return x == y ? leaf(0) : leaf(1); }));
  d2.push_back(depth2([&](const Val& x, const Val&) { return x == bs[0] ? leaf(0) : leaf(1); }));

  std::vector<Val> out;
  for (const Val& t2 : d2) {
    TableEntries entries;
    for (const Val& b : bs) entries.emplace_back(b, t2);
    out.push_back(Val::table(std::move(entries)));
  }
  // Position-dependent picks.
  TableEntries sel;
  TableEntries rsel;
  for (std::size_t i = 0; i < bs.size(); ++i) {
    sel.emplace_back(bs[i], d2[i % d2.size()]);
    rsel.emplace_back(bs[i], d2[(d2.size() - 1 - i) % d2.size()]);
  }
  out.push_back(Val::table(std::move(sel)));
  out.push_back(Val::table(std::move(rsel)));
  return out;
}

}  // namespace

std::vector<Val> enumerate_cartesian_stores(int max_dim) {
  std::vector<Val> out;
  for (int dim = 0; dim <= max_dim && dim <= 2; ++dim) {
    std::vector<Val> tables = curried_tables(dim);
    std::vector<Val> scratch;
    position_tuples(dim, scratch, [&](const std::vector<Val>& positions) {
      for (const Val& t : tables) out.push_back(wrap_positions(t, positions));
    });
  }
  if (max_dim >= 3) {
    std::vector<Val> tables = canonical_depth3_tables();
    std::vector<Val> scratch;
    position_tuples(3, scratch, [&](const std::vector<Val>& positions) {
      for (const Val& t : tables) out.push_back(wrap_positions(t, positions));
    });
  }
  return out;
}

// --- lens candidates ---

namespace {

using Getter = std::function<Val(const Val&)>;
using SetterB = std::function<Val(const Val&, const Val&)>;  // (record, b') -> new b
using SetterC = std::function<std::int64_t(const Val&, const Val&)>;  // (record, b') -> new flag

struct NamedGetter {
  const char* name;
  Getter fn;
};
struct NamedSetterB {
  const char* name;
  SetterB fn;
};
struct NamedSetterC {
  const char* name;
  SetterC fn;
};

std::vector<NamedGetter> getters() {
  return {
      {"proj", [](const Val& r) { return record_b(r); }},
      {"const0", [](const Val&) { return universe_b3()[0]; }},
      {"const1", [](const Val&) { return universe_b3()[1]; }},
      {"const2", [](const Val&) { return universe_b3()[2]; }},
      {"rot", [](const Val& r) { return rot_b(record_b(r)); }},
      {"rot2", [](const Val& r) { return rot2_b(record_b(r)); }},
      {"swap01", [](const Val& r) { return swap01_b(record_b(r)); }},
      {"mixed", [](const Val& r) {
         return record_flag(r) == 0 ? record_b(r) : rot_b(record_b(r));
       }},
  };
}

std::vector<NamedSetterB> setters_b() {
  return {
      {"replace", [](const Val&, const Val& b) { return b; }},
      {"keep", [](const Val& r, const Val&) { return record_b(r); }},
      {"rot", [](const Val&, const Val& b) { return rot_b(b); }},
      {"rot2", [](const Val&, const Val& b) { return rot2_b(b); }},
      {"const0", [](const Val&, const Val&) { return universe_b3()[0]; }},
  };
}

std::vector<NamedSetterC> setters_c() {
  return {
      {"keep", [](const Val& r, const Val&) { return record_flag(r); }},
      {"flip", [](const Val& r, const Val&) { return std::int64_t{1} - record_flag(r); }},
      {"zero", [](const Val&, const Val&) { return std::int64_t{0}; }},
      {"mark", [](const Val&, const Val& b) {
         return b == universe_b3()[0] ? std::int64_t{1} : std::int64_t{0};
       }},
  };
}

}  // namespace

std::vector<LensCandidate> lens_candidates() {
  std::vector<LensCandidate> out;
  for (const auto& g : getters()) {
    for (const auto& sb : setters_b()) {
      for (const auto& sc : setters_c()) {
        std::string name =
            std::string("get:") + g.name + "/setb:" + sb.name + "/setc:" + sc.name;
        Lens lens = make_lens(g.fn, [sbf = sb.fn, scf = sc.fn](const Val& r, const Val& b) {
          return make_record(sbf(r, b), scf(r, b));
        });
        out.push_back({std::move(name), std::move(lens)});
      }
    }
  }
  return out;
}

Lens field_b_lens() {
  return make_lens([](const Val& r) { return record_b(r); },
                   [](const Val& r, const Val& b) { return make_record(b, record_flag(r)); });
}

Lens setter_ignoring_lens() {
  return make_lens([](const Val& r) { return record_b(r); },
                   [](const Val& r, const Val&) { return r; });
}

Biplate duplicating_biplate() {
  return Biplate([](const Val& a) {
    // Two references to the same element; the second coordinate wins.
    Val cell = Val::fn([](const Val&) {
      return Val::fn([](const Val& b2) { return b2; });
    });
    return Val::cs_battery(Val::cs_battery(Val::cs_unit(cell), a), a);
  });
}

// --- store suite ---

std::vector<LawResult> store_suite() {
  std::vector<LawResult> out;
  const auto& b3 = universe_b3();
  std::vector<Val> stores = enumerate_stores();

  {
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : stores) {
      ++n;
      if (!deep_equal_on(store_extract(store_duplicate(s)), s, b3)) {
        witness = "s = " + s.to_text();
        break;
      }
    }
    out.push_back(make_result("store.comonad.extract-after-duplicate", witness.empty(), n, witness));
  }
  {
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : stores) {
      ++n;
      Val lhs = store_map([](const Val& w) { return store_extract(w); }, store_duplicate(s));
      if (!deep_equal_on(lhs, s, b3)) {
        witness = "s = " + s.to_text();
        break;
      }
    }
    out.push_back(make_result("store.comonad.map-extract-after-duplicate", witness.empty(), n, witness));
  }
  {
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : stores) {
      ++n;
      Val lhs = store_map([](const Val& w) { return store_duplicate(w); }, store_duplicate(s));
      Val rhs = store_duplicate(store_duplicate(s));
      if (!deep_equal_on(lhs, rhs, b3)) {
        witness = "s = " + s.to_text();
        break;
      }
    }
    out.push_back(make_result("store.comonad.duplicate-after-duplicate", witness.empty(), n, witness));
  }
  {
    // Functor laws for the same 24 stores, f and g over all 4 endofunctions of A2.
    std::vector<Val> fns;
    const auto& as = universe_a2();
    for (std::size_t mask = 0; mask < 4; ++mask) {
      TableEntries e;
      for (std::size_t i = 0; i < as.size(); ++i) e.emplace_back(as[i], as[(mask >> i) & 1]);
      fns.push_back(Val::table(std::move(e)));
    }
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : stores) {
      if (!deep_equal_on(store_map([](const Val& x) { return x; }, s), s, b3)) {
        witness = "map id != id at s = " + s.to_text();
        break;
      }
      ++n;
      for (const Val& f : fns) {
        for (const Val& g : fns) {
          ++n;
          Val lhs = store_map([&](const Val& x) { return apply_val(f, apply_val(g, x)); }, s);
          Val rhs = store_map([&](const Val& x) { return apply_val(f, x); },
                              store_map([&](const Val& x) { return apply_val(g, x); }, s));
          if (!deep_equal_on(lhs, rhs, b3)) {
            witness = "map (f.g) != map f . map g at s = " + s.to_text();
            break;
          }
        }
        if (!witness.empty()) break;
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("store.functor.laws", witness.empty(), n, witness));
  }
  return out;
}

// --- lens suite ---

std::vector<LawResult> lens_suite(const SuiteOptions& opts) {
  std::vector<LawResult> out;
  const auto& ua = universe_records();
  const auto& ub = universe_b3();
  std::vector<LensCandidate> candidates = lens_candidates();

  {
    std::size_t lawful = 0;
    std::size_t unlawful = 0;
    std::string witness;
    for (const auto& c : candidates) {
      Verdict direct = check_lens_laws(c.lens, ua, ub);
      Verdict coalg = check_coalgebra_laws(c.lens, ua, ub);
      if (direct.ok != coalg.ok) {
        witness = "candidate " + c.name + ": get/set verdict " +
                  (direct.ok ? "lawful" : "unlawful") + " but coalgebra verdict " +
                  (coalg.ok ? "lawful" : "unlawful");
        break;
      }
      (direct.ok ? lawful : unlawful) += 1;
    }
    std::ostringstream note;
    note << lawful << " lawful, " << unlawful << " unlawful of " << candidates.size();
    out.push_back(make_result("lens.verdict-agreement", witness.empty(), candidates.size(),
                              witness.empty() ? note.str() : witness));
    bool enough = candidates.size() >= 100 && unlawful >= 3 && lawful >= 1;
    out.push_back(make_result("lens.candidate-coverage", enough, candidates.size(), note.str()));
  }
  {
    Verdict good = check_lens_laws(field_b_lens(), ua, ub);
    out.push_back(from_verdict("lens.field-b-lawful", good));
    Verdict ignored = check_lens_laws(setter_ignoring_lens(), ua, ub);
    out.push_back(make_result("lens.setter-ignoring-detected", !ignored.ok, ignored.checked,
                              ignored.ok ? "expected a violation, found none"
                                         : ignored.law + "; " + ignored.counterexample));
  }
  {
    Val pat = pat_address();
    Lens phone = phone_lens();
    bool got = phone.get(pat) == Val::str("333-4444");
    out.push_back(make_result("lens.phone-get", got, 1,
                              got ? "" : "get returned " + phone.get(pat).to_text()));
    Val updated = phone.set(pat, Val::str("555-6666"));
    Val want = make_address("555-6666", "http://pat.com/");
    out.push_back(make_result("lens.phone-set", updated == want, 1,
                              updated == want ? "" : "set returned " + updated.to_text()));
  }
  if (opts.broken_fixture) {
    Verdict v = check_lens_laws(setter_ignoring_lens(), ua, ub);
    out.push_back(make_result("lens.broken-fixture-asserted-lawful", v.ok, v.checked,
                              v.ok ? "" : v.law + "; " + v.counterexample));
  }
  return out;
}

// --- cartesian suite ---

namespace {

// Function-valued cartesian stores for the applicative laws: cells drawn from
// the four endofunction tables of A2.
std::vector<Val> canonical_function_stores(int max_dim) {
  const auto& as = universe_a2();
  const auto& bs = universe_b3();
  std::vector<Val> fns;
  for (std::size_t mask = 0; mask < 4; ++mask) {
    TableEntries e;
    for (std::size_t i = 0; i < as.size(); ++i) e.emplace_back(as[i], as[(mask >> i) & 1]);
    fns.push_back(Val::table(std::move(e)));
  }
  std::vector<Val> out;
  for (const Val& f : fns) out.push_back(Val::cs_unit(f));
  if (max_dim >= 1) {
    // Constant rows plus one position-dependent row, at every position.
    std::vector<Val> rows;
    for (const Val& f : fns) {
      TableEntries e;
      for (const Val& b : bs) e.emplace_back(b, f);
      rows.push_back(Val::table(std::move(e)));
    }
    TableEntries mixed;
    for (std::size_t i = 0; i < bs.size(); ++i) mixed.emplace_back(bs[i], fns[i % fns.size()]);
    rows.push_back(Val::table(std::move(mixed)));
    for (const Val& row : rows) {
      for (const Val& b : bs) out.push_back(Val::cs_battery(Val::cs_unit(row), b));
    }
  }
  if (max_dim >= 2) {
    // One two-dimensional shape: constant inner rows under a mixed outer row.
    TableEntries innerRow;
    for (const Val& b : bs) innerRow.emplace_back(b, fns[1]);
    Val inner = Val::table(std::move(innerRow));
    TableEntries outer;
    for (const Val& b : bs) outer.emplace_back(b, inner);
    out.push_back(Val::cs_battery(
        Val::cs_battery(Val::cs_unit(Val::table(std::move(outer))), bs[0]), bs[1]));
  }
  return out;
}

}  // namespace

std::vector<LawResult> cartesian_suite() {
  std::vector<LawResult> out;
  const auto& b3 = universe_b3();
  const auto& a2 = universe_a2();
  std::vector<Val> stores2 = enumerate_cartesian_stores(2);

  auto check_all = [&](const char* name, const std::function<bool(const Val&)>& law) {
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : stores2) {
      ++n;
      if (!law(s)) {
        witness = "s = " + s.to_text();
        break;
      }
    }
    out.push_back(make_result(name, witness.empty(), n, witness));
  };

  check_all("cartesian.comonad.extract-after-duplicate", [&](const Val& s) {
    return deep_equal_on(cs_extract(cs_duplicate(s)), s, b3);
  });
  check_all("cartesian.comonad.map-extract-after-duplicate", [&](const Val& s) {
    Val lhs = cs_map([](const Val& w) { return cs_extract(w); }, cs_duplicate(s));
    return deep_equal_on(lhs, s, b3);
  });
  check_all("cartesian.comonad.duplicate-after-duplicate", [&](const Val& s) {
    Val lhs = cs_map([](const Val& w) { return cs_duplicate(w); }, cs_duplicate(s));
    return deep_equal_on(lhs, cs_duplicate(cs_duplicate(s)), b3);
  });
  check_all("cartesian.applicative.identity", [&](const Val& s) {
    Val idcell = Val::fn([](const Val& x) { return x; });
    return deep_equal_on(cs_ap(cs_pure(idcell), s), s, b3);
  });

  {
    // map f = pure f <*> _ over the element endofunctions.
    std::vector<Val> fn_units = canonical_function_stores(0);
    std::size_t n = 0;
    std::string witness;
    for (const Val& fu : fn_units) {
      Val f = fu.cs_element();
      for (const Val& s : stores2) {
        ++n;
        Val lhs = cs_map([&f](const Val& x) { return apply_val(f, x); }, s);
        if (!deep_equal_on(lhs, cs_ap(cs_pure(f), s), b3)) {
          witness = "f = " + f.to_text() + ", s = " + s.to_text();
          break;
        }
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("cartesian.applicative.map-agrees-with-pure-ap", witness.empty(), n,
                              witness));
  }
  {
    // Homomorphism: pure f <*> pure x = pure (f x).
    std::size_t n = 0;
    std::string witness;
    for (const Val& fu : canonical_function_stores(0)) {
      Val f = fu.cs_element();
      for (const Val& x : a2) {
        ++n;
        if (!deep_equal_on(cs_ap(cs_pure(f), cs_pure(x)), cs_pure(apply_val(f, x)), b3)) {
          witness = "f = " + f.to_text() + ", x = " + x.to_text();
          break;
        }
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("cartesian.applicative.homomorphism", witness.empty(), n, witness));
  }
  {
    // Interchange: u <*> pure y = pure ($ y) <*> u.
    std::size_t n = 0;
    std::string witness;
    for (const Val& u : canonical_function_stores(2)) {
      for (const Val& y : a2) {
        ++n;
        Val lhs = cs_ap(u, cs_pure(y));
        Val applyY = Val::fn([y](const Val& g) { return apply_val(g, y); });
        Val rhs = cs_ap(cs_pure(applyY), u);
        if (!deep_equal_on(lhs, rhs, b3)) {
          witness = "u = " + u.to_text() + ", y = " + y.to_text();
          break;
        }
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("cartesian.applicative.interchange", witness.empty(), n, witness));
  }
  {
    // Composition: pure (.) <*> u <*> v <*> w = u <*> (v <*> w).
    std::vector<Val> fn_stores = canonical_function_stores(1);
    std::vector<Val> values = enumerate_cartesian_stores(1);
    Val compose2 = Val::fn([](const Val& g) {
      return Val::fn([g](const Val& h) { return compose_val(g, h); });
    });
    std::size_t n = 0;
    std::string witness;
    for (const Val& u : fn_stores) {
      for (const Val& v : fn_stores) {
        for (const Val& w : values) {
          ++n;
          Val lhs = cs_ap(cs_ap(cs_ap(cs_pure(compose2), u), v), w);
          Val rhs = cs_ap(u, cs_ap(v, w));
          if (!deep_equal_on(lhs, rhs, b3)) {
            witness = "u = " + u.to_text() + ", v = " + v.to_text() + ", w = " + w.to_text();
            break;
          }
        }
        if (!witness.empty()) break;
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("cartesian.applicative.composition", witness.empty(), n, witness));
  }
  {
    // Dimension additivity over every tested pair.
    std::size_t n = 0;
    std::string witness;
    for (const Val& u : canonical_function_stores(2)) {
      for (const Val& w : stores2) {
        ++n;
        if (cs_dimension(cs_ap(u, w)) != cs_dimension(u) + cs_dimension(w)) {
          witness = "u = " + u.to_text() + ", w = " + w.to_text();
          break;
        }
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("cartesian.applicative.dimension-additivity", witness.empty(), n,
                              witness));
  }
  {
    // Normal-form round trips through dimension 3.
    std::vector<Val> stores3 = enumerate_cartesian_stores(3);
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : stores3) {
      ++n;
      NormalForm nf = to_normal_form(s, b3);
      if (static_cast<std::int64_t>(nf.positions.size()) != cs_dimension(s)) {
        witness = "arity mismatch at s = " + s.to_text();
        break;
      }
      Val back = from_normal_form(nf);
      if (!deep_equal_on(back, s, b3)) {
        witness = "store round trip failed at s = " + s.to_text();
        break;
      }
      NormalForm nf2 = to_normal_form(back, b3);
      if (nf2.positions != nf.positions || nf2.peek != nf.peek) {
        witness = "normal-form round trip failed at s = " + s.to_text();
        break;
      }
    }
    out.push_back(make_result("cartesian.normalform.roundtrip", witness.empty(), n, witness));
  }
  {
    // stores(): dimension-many axis slices whose extracts match.
    std::vector<Val> stores3 = enumerate_cartesian_stores(3);
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : stores3) {
      ++n;
      std::vector<Val> slices = cs_stores(s);
      auto dim = static_cast<std::size_t>(cs_dimension(s));
      if (slices.size() != dim) {
        witness = "slice count at s = " + s.to_text();
        break;
      }
      Val whole = cs_extract(s);
      std::vector<Val> positions = cs_positions(s);
      bool bad = false;
      for (std::size_t j = 0; j < slices.size() && !bad; ++j) {
        if (!deep_equal_on(store_extract(slices[j]), whole, b3)) {
          witness = "slice extract at s = " + s.to_text();
          bad = true;
          break;
        }
        // Slice j varies axis dim-1-j with the other coordinates held at the
        // selected positions.
        std::size_t axis = dim - 1 - j;
        if (slices[j].store_pos() != positions[axis]) {
          witness = "slice position at s = " + s.to_text();
          bad = true;
          break;
        }
        for (const Val& b : b3) {
          std::vector<Val> coords = positions;
          coords[axis] = b;
          if (apply_val(slices[j].store_peek(), b) != cs_peek_at(s, coords)) {
            witness = "slice peek at s = " + s.to_text() + ", axis " + std::to_string(axis);
            bad = true;
            break;
          }
        }
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("cartesian.stores.axis-slices", witness.empty(), n, witness));
  }
  {
    // single_store: dimension 1, extract preserved, unfolds back to itself.
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : enumerate_stores()) {
      ++n;
      Val cs = single_store(s);
      if (cs_dimension(cs) != 1 || !deep_equal_on(cs_extract(cs), store_extract(s), b3)) {
        witness = "s = " + s.to_text();
        break;
      }
      std::vector<Val> back = cs_stores(cs);
      if (back.size() != 1 || !deep_equal_on(back[0], s, b3)) {
        witness = "unfold at s = " + s.to_text();
        break;
      }
    }
    out.push_back(make_result("cartesian.singlestore.injection", witness.empty(), n, witness));
  }
  return out;
}

// --- biplate suite ---

namespace {

// Direct child/grandchild enumeration oracles over encoded terms.
void exprs_in_stm_oracle(const Val& s, std::vector<Val>& out);

std::vector<Val> expr_children_oracle(const Val& e) {
  std::vector<Val> out;
  const auto& items = e.items();
  const std::string& ctor = items[0].sym_name();
  if (ctor == "EAdd") {
    out.push_back(items[1]);
    out.push_back(items[2]);
  } else if (ctor == "EStm") {
    exprs_in_stm_oracle(items[1], out);
  }
  return out;
}

void exprs_in_stm_oracle(const Val& s, std::vector<Val>& out) {
  const auto& items = s.items();
  const std::string& ctor = items[0].sym_name();
  if (ctor == "SAss" || ctor == "SReturn") {
    out.push_back(items.back());
  } else if (ctor == "SBlock") {
    for (std::size_t i = 1; i < items.size(); ++i) exprs_in_stm_oracle(items[i], out);
  }
}

std::vector<Val> grandchildren_oracle(const Val& e) {
  std::vector<Val> out;
  for (const Val& c : expr_children_oracle(e)) {
    for (const Val& g : expr_children_oracle(c)) out.push_back(g);
  }
  return out;
}

}  // namespace

std::vector<LawResult> biplate_suite(const SuiteOptions& opts) {
  std::vector<LawResult> out;
  const auto& b3 = universe_b3();
  int size = std::min(opts.term_size, 4);
  std::vector<Val> exprs = minilang::encoded_universes(size)[minilang::kExprSort];
  std::vector<Val> small_exprs = minilang::encoded_universes(std::min(size, 3))[minilang::kExprSort];
  Biplate children = minilang::expr_children_biplate();

  {
    Verdict v = check_biplate_laws(id_biplate(), b3);
    out.push_back(from_verdict("biplate.laws.identity", v));
  }
  {
    Verdict v = check_biplate_laws(children, small_exprs);
    out.push_back(from_verdict("biplate.laws.children", v));
  }
  {
    Verdict v = check_biplate_laws(lens_biplate(field_b_lens()), universe_records());
    out.push_back(from_verdict("biplate.laws.lens-injection", v));
    Verdict bad = check_biplate_laws(lens_biplate(setter_ignoring_lens()), universe_records());
    out.push_back(make_result("biplate.laws.unlawful-lens-detected", !bad.ok, bad.checked,
                              bad.ok ? "expected a violation" : bad.law + "; " + bad.counterexample));
    Verdict dup = check_biplate_laws(duplicating_biplate(), b3);
    out.push_back(make_result("biplate.laws.duplicating-detected", !dup.ok, dup.checked,
                              dup.ok ? "expected a violation" : dup.law + "; " + dup.counterexample));
  }
  {
    // Category structure: identity on both sides, associativity.
    Biplate left = compose_biplate(id_biplate(), children);
    Biplate right = compose_biplate(children, id_biplate());
    Biplate assoc_l = compose_biplate(children, compose_biplate(children, children));
    Biplate assoc_r = compose_biplate(compose_biplate(children, children), children);
    std::size_t n = 0;
    std::string witness;
    for (const Val& e : small_exprs) {
      ++n;
      Val want = children.run(e);
      if (!deep_equal_on(left.run(e), want, small_exprs) ||
          !deep_equal_on(right.run(e), want, small_exprs)) {
        witness = "identity at e = " + e.to_text();
        break;
      }
      if (!deep_equal_on(assoc_l.run(e), assoc_r.run(e), small_exprs)) {
        witness = "associativity at e = " + e.to_text();
        break;
      }
    }
    out.push_back(make_result("biplate.category", witness.empty(), n, witness));
  }
  {
    // children . children references exactly the grandchildren, in order.
    Biplate twice = compose_biplate(children, children);
    std::size_t n = 0;
    std::string witness;
    for (const Val& e : exprs) {
      ++n;
      Val cs = twice.run(e);
      std::vector<Val> want = grandchildren_oracle(e);
      std::vector<Val> got = cs_positions(cs);
      if (got != want) {
        witness = "positions at e = " + e.to_text();
        break;
      }
      if (!deep_equal_on(cs_extract(cs), e, exprs)) {
        witness = "extract at e = " + e.to_text();
        break;
      }
    }
    out.push_back(make_result("biplate.grandchildren", witness.empty(), n, witness));
  }
  return out;
}

// --- van Laarhoven suite ---

namespace {

std::vector<std::pair<std::string, PolyBody>> handwritten_store_bodies() {
  std::vector<std::pair<std::string, PolyBody>> out;
  const auto& b3 = universe_b3();
  const auto& a2 = universe_a2();
  // A direct single-step body and a two-step map for each (value row, position).
  TableEntries rowEntries;
  for (std::size_t i = 0; i < b3.size(); ++i) rowEntries.emplace_back(b3[i], a2[i % a2.size()]);
  Val row = Val::table(std::move(rowEntries));
  for (const Val& pos : b3) {
    out.push_back({"direct@" + pos.to_text(),
                   [row, pos](const EffectContext& k, const ValFn& f) {
                     return k.map([row](const Val& b) { return apply_val(row, b); }, f(pos));
                   }});
    out.push_back({"two-step@" + pos.to_text(),
                   [row, pos](const EffectContext& k, const ValFn& f) {
                     Val mid = k.map([](const Val& b) { return b; }, f(pos));
                     return k.map([row](const Val& b) { return apply_val(row, b); }, mid);
                   }});
  }
  return out;
}

}  // namespace

std::vector<LawResult> vanlaarhoven_suite(const SuiteOptions& opts) {
  std::vector<LawResult> out;
  const auto& b3 = universe_b3();
  const auto& records = universe_records();

  {
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : enumerate_stores()) {
      ++n;
      Val back = poly_to_store(store_to_poly(s), b3);
      if (!deep_equal_on(back, s, b3)) {
        witness = "s = " + s.to_text();
        break;
      }
    }
    out.push_back(make_result("vl.store-iso.roundtrip", witness.empty(), n, witness));
  }
  {
    // Forward agreement at every registered context, for iso images and
    // independently written bodies.
    std::vector<Coalgebra> probes = law3_probe_coalgebras(b3, /*applicative_only=*/false);
    std::vector<std::pair<std::string, PolyBody>> bodies = handwritten_store_bodies();
    for (const Val& s : enumerate_stores()) {
      bodies.push_back({"iso@" + s.to_text(), store_to_poly(s)});
    }
    std::size_t n = 0;
    std::string witness;
    for (const auto& [name, y] : bodies) {
      PolyBody reproj = store_to_poly(poly_to_store(y, b3));
      for (const Coalgebra& probe : probes) {
        ++n;
        if (!deep_equal_on(y(probe.ctx, probe.run), reproj(probe.ctx, probe.run), b3)) {
          witness = "body " + name + " at " + probe.ctx.name();
          break;
        }
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("vl.store-iso.forward-agreement", witness.empty(), n, witness));
  }
  {
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : enumerate_cartesian_stores(2)) {
      ++n;
      Val back = poly_to_cs(cs_to_poly(s), b3);
      if (!deep_equal_on(back, s, b3)) {
        witness = "s = " + s.to_text();
        break;
      }
    }
    out.push_back(make_result("vl.cartesian-iso.roundtrip", witness.empty(), n, witness));
  }
  {
    std::vector<Coalgebra> probes = law3_probe_coalgebras(b3, /*applicative_only=*/true);
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : enumerate_cartesian_stores(2)) {
      PolyBody y = cs_to_poly(s);
      PolyBody reproj = cs_to_poly(poly_to_cs(y, b3));
      for (const Coalgebra& probe : probes) {
        ++n;
        if (!deep_equal_on(y(probe.ctx, probe.run), reproj(probe.ctx, probe.run), b3)) {
          witness = "s = " + s.to_text() + " at " + probe.ctx.name();
          break;
        }
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("vl.cartesian-iso.forward-agreement", witness.empty(), n, witness));
  }
  {
    // Instantiating at a counting constant context yields the dimension.
    EffectContext count = EffectContext::constant(Monoid::sum());
    std::size_t n = 0;
    std::string witness;
    for (const Val& s : enumerate_cartesian_stores(2)) {
      ++n;
      Val got = cs_to_poly(s)(count, [](const Val&) { return Val::integer(1); });
      if (got != Val::integer(cs_dimension(s))) {
        witness = "s = " + s.to_text() + " counted " + got.to_text();
        break;
      }
    }
    out.push_back(make_result("vl.cartesian-iso.const-counts-dimension", witness.empty(), n,
                              witness));
  }
  {
    // Bridge: comonadic coalgebra verdicts agree with the monoidal laws on
    // every lens candidate.
    std::vector<Coalgebra> probes = law3_probe_coalgebras(b3, /*applicative_only=*/false);
    std::size_t n = 0;
    std::size_t lawful = 0;
    std::string witness;
    for (const auto& c : lens_candidates()) {
      ++n;
      Verdict comonadic = check_coalgebra_laws(c.lens, records, b3);
      Verdict poly = check_vl_laws(lens_to_vl(c.lens), records, probes, b3);
      if (comonadic.ok != poly.ok) {
        witness = "candidate " + c.name + ": coalgebra " +
                  (comonadic.ok ? "lawful" : "unlawful") + ", monoidal " +
                  (poly.ok ? "lawful" : "unlawful");
        break;
      }
      if (comonadic.ok) ++lawful;
    }
    out.push_back(make_result("vl.laws.bridge-agreement", witness.empty(), n,
                              witness.empty() ? std::to_string(lawful) + " lawful candidates"
                                              : witness));
  }
  {
    // set/get via the identity and constant instantiations agree with the
    // store projections on lawful candidates.
    std::size_t n = 0;
    std::string witness;
    for (const auto& c : lens_candidates()) {
      if (!check_lens_laws(c.lens, records, b3).ok) continue;
      VlOptic vl = lens_to_vl(c.lens);
      for (const Val& r : records) {
        ++n;
        if (vl_get(vl, r) != c.lens.get(r)) {
          witness = "get disagrees at " + c.name + ", r = " + r.to_text();
          break;
        }
        for (const Val& b : b3) {
          ++n;
          if (vl_set(vl, r, b) != c.lens.set(r, b)) {
            witness = "set disagrees at " + c.name + ", r = " + r.to_text();
            break;
          }
        }
        if (!witness.empty()) break;
      }
      if (!witness.empty()) break;
    }
    out.push_back(make_result("vl.get-set-agreement", witness.empty(), n, witness));
  }
  {
    // Lawful lens bodies pass the biplate-strength checker unchanged.
    std::vector<Coalgebra> probes = law3_probe_coalgebras(b3, /*applicative_only=*/true);
    std::size_t n = 0;
    std::string witness;
    for (const auto& c : lens_candidates()) {
      if (!check_lens_laws(c.lens, records, b3).ok) continue;
      ++n;
      Verdict v = check_vl_laws(lens_to_vl(c.lens), records, probes, b3);
      if (!v.ok) {
        witness = "candidate " + c.name + ": " + v.law + "; " + v.counterexample;
        break;
      }
    }
    out.push_back(make_result("vl.lens-as-biplate", witness.empty(), n, witness));
  }
  {
    int size = std::min(opts.term_size, 3);
    std::vector<Val> exprs = minilang::encoded_universes(size)[minilang::kExprSort];
    std::vector<Coalgebra> probes = law3_probe_coalgebras(exprs, /*applicative_only=*/true);
    Verdict v = check_vl_laws(minilang::expr_children_vl(), exprs, probes, exprs);
    out.push_back(from_verdict("vl.laws.children", v));

    // The direct polymorphic children agree with the cartesian-store route.
    Biplate children = minilang::expr_children_biplate();
    std::size_t n = 0;
    std::string witness;
    for (const Val& e : exprs) {
      ++n;
      Val via_cs = poly_to_cs(
          [&](const EffectContext& k, const ValFn& f) {
            return minilang::expr_children_vl().run(k, f, e);
          },
          exprs);
      if (!deep_equal_on(via_cs, children.run(e), exprs)) {
        witness = "e = " + e.to_text();
        break;
      }
    }
    out.push_back(make_result("vl.children.routes-agree", witness.empty(), n, witness));
  }
  {
    // Unlawful transformers are rejected.
    VlOptic mistarget(VlOptic::Demand::Functor,
                      [](const EffectContext&, const ValFn& f, const Val& b) {
                        return f(rot_b(b));
                      });
    std::vector<Coalgebra> probes = law3_probe_coalgebras(b3, false);
    Verdict v1 = check_vl_laws(mistarget, b3, probes, b3);
    out.push_back(make_result("vl.laws.mistarget-detected", !v1.ok, v1.checked,
                              v1.ok ? "expected a violation" : v1.law + "; " + v1.counterexample));

    VlOptic double_apply(VlOptic::Demand::Functor,
                         [](const EffectContext& k, const ValFn& f, const Val& b) {
                           if (k.name() == "Id") return f(f(b));
                           return f(b);
                         });
    Verdict v2 = check_vl_laws(double_apply, b3, probes, b3);
    out.push_back(make_result("vl.laws.double-apply-detected", !v2.ok, v2.checked,
                              v2.ok ? "expected a violation" : v2.law + "; " + v2.counterexample));
  }
  {
    Val pat = pat_address();
    Val got = vl_get(lens_to_vl(phone_lens()), pat);
    out.push_back(make_result("vl.phone-get-transported", got == Val::str("333-4444"), 1,
                              got == Val::str("333-4444") ? "" : "got " + got.to_text()));
  }
  return out;
}

// --- multiplate suite ---

std::vector<LawResult> multiplate_suite(const SuiteOptions& opts) {
  using namespace minilang;
  std::vector<LawResult> out;
  std::vector<std::vector<Val>> universes = encoded_universes(opts.term_size);
  std::size_t term_count = 0;
  for (const auto& u : universes) term_count += u.size();

  {
    // Extra law-2 pairs that actually rewrite: rename at Id, type swap at Id.
    Plate rename = pure_plate(minilang_shape(), EffectContext::identity())
                       .with_field(kVarSort, [](const Val& v) {
                         return Val::list({Val::sym("V"), Val::str("_" + v.items()[1].str_value())});
                       });
    Plate typswap = pure_plate(minilang_shape(), EffectContext::identity())
                        .with_field(kTypSort, [](const Val& t) {
                          return Val::sym(t.sym_name() == "TInt" ? "TFloat" : "TInt");
                        });
    std::vector<std::pair<Plate, Plate>> extra{{rename, typswap}, {typswap, rename}};
    Verdict v = check_multiplate_laws(minilang_shape(), universes, extra);
    LawResult r = from_verdict("multiplate.laws.minilang", v);
    if (r.passed) r.detail = std::to_string(term_count) + " terms";
    out.push_back(std::move(r));
  }
  {
    Verdict v = check_multiplate_laws(corrupted_minilang_shape(), universes);
    out.push_back(make_result("multiplate.laws.corrupted-detected", !v.ok, v.checked,
                              v.ok ? "expected a violation" : v.law + "; " + v.counterexample));
  }
  {
    // Headline equivalence: the generic rename equals the direct recursion.
    TermUniverse u = enumerate_terms(opts.term_size);
    std::size_t n = 0;
    std::string witness;
    auto check_term = [&](const Term& t, Sort sort) {
      ++n;
      Val got = rename_pass(encode(t), sort);
      Val want = encode(naive_rename(t));
      if (got != want) {
        witness = "term " + encode(t).to_text() + ": " + got.to_text() + " vs " + want.to_text();
        return false;
      }
      return true;
    };
    bool ok = true;
    for (const auto& s : u.stms) {
      if (!(ok = check_term(Term{s}, Sort::Stm))) break;
    }
    if (ok) {
      for (const auto& e : u.exprs) {
        if (!(ok = check_term(Term{e}, Sort::Expr))) break;
      }
    }
    if (ok) {
      for (const auto& v : u.vars) {
        if (!(ok = check_term(Term{v}, Sort::Var))) break;
      }
    }
    if (ok) {
      for (const auto& t : u.typs) {
        if (!(ok = check_term(Term{t}, Sort::Typ))) break;
      }
    }
    if (ok) ok = check_term(Term{p0_program()}, Sort::Stm);
    out.push_back(make_result("multiplate.rename-matches-naive", ok, n, witness));
  }
  {
    // Folds against the direct collectors, plus the P0 spot values.
    TermUniverse u = enumerate_terms(opts.term_size);
    std::size_t n = 0;
    std::string witness;
    auto check_term = [&](const Term& t, Sort sort) {
      ++n;
      Val enc = encode(t);
      auto vars = collect_vars_fold(enc, sort);
      if (vars != oracle_collect_vars(t)) {
        witness = "collect_vars at " + enc.to_text();
        return false;
      }
      if (count_nodes_fold(enc, sort) != oracle_count_nodes(t)) {
        witness = "count_nodes at " + enc.to_text();
        return false;
      }
      return true;
    };
    bool ok = true;
    for (const auto& s : u.stms) {
      if (!(ok = check_term(Term{s}, Sort::Stm))) break;
    }
    if (ok) {
      for (const auto& e : u.exprs) {
        if (!(ok = check_term(Term{e}, Sort::Expr))) break;
      }
    }
    if (ok) {
      Val p0 = encode(p0_program());
      auto vars = collect_vars_fold(p0, Sort::Stm);
      ok = vars == std::vector<std::string>{"x", "x", "x", "x"} &&
           count_nodes_fold(p0, Sort::Stm) == 13;
      if (!ok) witness = "P0 expected 4 occurrences of x and 13 nodes";
      ++n;
    }
    out.push_back(make_result("multiplate.folds-match-oracles", ok, n, witness));
  }
  {
    // mapFamily purePlate is the identity; pre/postorder agree at sum.
    Plate pure_id = pure_plate(minilang_shape(), EffectContext::identity());
    Plate family = map_family(pure_id);
    Plate ones = minilang_shape().mk_plate(EffectContext::constant(Monoid::sum()),
                                           [](const Projector&) {
                                             return [](const Val&) { return Val::integer(1); };
                                           });
    Plate pre = preorder_fold(ones);
    Plate post = postorder_fold(ones);
    std::size_t n = 0;
    std::string witness;
    for (std::size_t sort = 0; sort < universes.size() && witness.empty(); ++sort) {
      for (const Val& t : universes[sort]) {
        ++n;
        if (family.apply(sort, t) != t) {
          witness = "mapFamily purePlate changed " + t.to_text();
          break;
        }
        if (pre.apply(sort, t) != post.apply(sort, t)) {
          witness = "pre/postorder sum disagree at " + t.to_text();
          break;
        }
      }
    }
    out.push_back(make_result("multiplate.family-and-fold-identities", witness.empty(), n, witness));
  }
  {
    // Constant folding: matches the direct recursion and is idempotent.
    TermUniverse u = enumerate_terms(opts.term_size);
    std::size_t n = 0;
    std::string witness;
    bool ok = true;
    for (const auto& e : u.exprs) {
      ++n;
      Val got = constfold_pass(encode(e), Sort::Expr);
      if (got != encode(oracle_constfold(e))) {
        witness = "constfold at " + encode(e).to_text();
        ok = false;
        break;
      }
      if (constfold_pass(got, Sort::Expr) != got) {
        witness = "constfold not idempotent at " + encode(e).to_text();
        ok = false;
        break;
      }
    }
    if (ok) {
      for (const auto& s : u.stms) {
        ++n;
        Val got = constfold_pass(encode(s), Sort::Stm);
        if (got != encode(oracle_constfold(s))) {
          witness = "constfold at " + encode(s).to_text();
          ok = false;
          break;
        }
      }
    }
    out.push_back(make_result("multiplate.constfold-oracle-and-idempotence", ok, n, witness));
  }
  return out;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"store",   "lens", "cartesian", "biplate",
                                              "vl",      "multiplate", "all"};
  return names;
}

std::vector<LawResult> run_suite(std::string_view name, const SuiteOptions& opts) {
  if (name == "store") return store_suite();
  if (name == "lens") return lens_suite(opts);
  if (name == "cartesian") return cartesian_suite();
  if (name == "biplate") return biplate_suite(opts);
  if (name == "vl") return vanlaarhoven_suite(opts);
  if (name == "multiplate") return multiplate_suite(opts);
  if (name == "all") {
    std::vector<LawResult> out;
    for (const std::string& n : suite_names()) {
      if (n == "all") continue;
      auto part = run_suite(n, opts);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown suite: " + std::string(name));
}

bool all_passed(const std::vector<LawResult>& results) {
  return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.passed; });
}

}  // namespace optic
