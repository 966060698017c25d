#include "optic/val.hpp"

#include <algorithm>
#include <sstream>

namespace optic {

struct Val::Rep {
  std::string text;                        // Sym, Str
  std::int64_t num = 0;                    // Int
  std::vector<Val> items;                  // List; Store {peek,pos}; CsUnit {elem}; CsBattery {inner,last}
  TableEntries entries;                    // Table
  std::shared_ptr<const ValFn> fn;         // Fn
};

namespace {
int kind_rank(Val::Kind k) { return static_cast<int>(k); }
}  // namespace

Val::Val() : kind_(Kind::List) {
  static const auto rep = std::make_shared<const Rep>();
  rep_ = rep;
}

Val Val::sym(std::string name) {
  Val v;
  auto rep = std::make_shared<Rep>();
  rep->text = std::move(name);
  v.kind_ = Kind::Sym;
  v.rep_ = std::move(rep);
  return v;
}

Val Val::integer(std::int64_t n) {
  Val v;
  auto rep = std::make_shared<Rep>();
  rep->num = n;
  v.kind_ = Kind::Int;
  v.rep_ = std::move(rep);
  return v;
}

Val Val::str(std::string text) {
  Val v;
  auto rep = std::make_shared<Rep>();
  rep->text = std::move(text);
  v.kind_ = Kind::Str;
  v.rep_ = std::move(rep);
  return v;
}

Val Val::list(std::vector<Val> items) {
  Val v;
  auto rep = std::make_shared<Rep>();
  rep->items = std::move(items);
  v.kind_ = Kind::List;
  v.rep_ = std::move(rep);
  return v;
}

Val Val::table(TableEntries entries) {
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (std::size_t i = 1; i < entries.size(); ++i) {
    if (entries[i - 1].first == entries[i].first) {
      throw std::logic_error("Val::table: duplicate key " + entries[i].first.to_text());
    }
  }
  Val v;
  auto rep = std::make_shared<Rep>();
  rep->entries = std::move(entries);
  v.kind_ = Kind::Table;
  v.rep_ = std::move(rep);
  return v;
}

Val Val::fn(ValFn f) {
  Val v;
  auto rep = std::make_shared<Rep>();
  rep->fn = std::make_shared<const ValFn>(std::move(f));
  v.kind_ = Kind::Fn;
  v.rep_ = std::move(rep);
  return v;
}

Val Val::store(Val peek, Val pos) {
  if (!peek.is_callable()) {
    throw std::logic_error("Val::store: peek must be a Table or Fn, got " + peek.to_text());
  }
  Val v;
  auto rep = std::make_shared<Rep>();
  rep->items = {std::move(peek), std::move(pos)};
  v.kind_ = Kind::Store;
  v.rep_ = std::move(rep);
  return v;
}

Val Val::cs_unit(Val element) {
  Val v;
  auto rep = std::make_shared<Rep>();
  rep->items = {std::move(element)};
  v.kind_ = Kind::CsUnit;
  v.rep_ = std::move(rep);
  return v;
}

Val Val::cs_battery(Val inner, Val last) {
  if (!inner.is_cs()) {
    throw std::logic_error("Val::cs_battery: inner must be a cartesian store");
  }
  Val v;
  auto rep = std::make_shared<Rep>();
  rep->items = {std::move(inner), std::move(last)};
  v.kind_ = Kind::CsBattery;
  v.rep_ = std::move(rep);
  return v;
}

namespace {
[[noreturn]] void wrong_kind(const char* what) {
  throw std::logic_error(std::string("Val: not a ") + what);
}
}  // namespace

const std::string& Val::sym_name() const {
  if (!is_sym()) wrong_kind("symbol");
  return rep_->text;
}

std::int64_t Val::int_value() const {
  if (!is_int()) wrong_kind("integer");
  return rep_->num;
}

const std::string& Val::str_value() const {
  if (!is_str()) wrong_kind("string");
  return rep_->text;
}

const std::vector<Val>& Val::items() const {
  if (!is_list()) wrong_kind("list");
  return rep_->items;
}

const TableEntries& Val::entries() const {
  if (!is_table()) wrong_kind("table");
  return rep_->entries;
}

const Val& Val::store_peek() const {
  if (!is_store()) wrong_kind("store");
  return rep_->items[0];
}

const Val& Val::store_pos() const {
  if (!is_store()) wrong_kind("store");
  return rep_->items[1];
}

const Val& Val::cs_element() const {
  if (!is_cs_unit()) wrong_kind("cartesian store unit");
  return rep_->items[0];
}

const Val& Val::cs_inner() const {
  if (!is_cs_battery()) wrong_kind("cartesian store battery");
  return rep_->items[0];
}

const Val& Val::cs_last() const {
  if (!is_cs_battery()) wrong_kind("cartesian store battery");
  return rep_->items[1];
}

Val Val::call(const Val& arg) const {
  if (is_fn()) return (*rep_->fn)(arg);
  if (is_table()) {
    const auto& es = rep_->entries;
    auto it = std::lower_bound(es.begin(), es.end(), arg, [](const auto& e, const Val& k) {
      return e.first < k;
    });
    if (it == es.end() || it->first != arg) {
      throw std::logic_error("table lookup miss: key " + arg.to_text());
    }
    return it->second;
  }
  throw std::logic_error("Val::call on non-callable " + to_text());
}

int Val::compare(const Val& a, const Val& b) {
  if (a.kind_ != b.kind_) return kind_rank(a.kind_) < kind_rank(b.kind_) ? -1 : 1;
  switch (a.kind_) {
    case Kind::Sym:
    case Kind::Str: {
      int c = a.rep_->text.compare(b.rep_->text);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case Kind::Int:
      return a.rep_->num < b.rep_->num ? -1 : (a.rep_->num > b.rep_->num ? 1 : 0);
    case Kind::Fn: {
      auto pa = a.rep_->fn.get();
      auto pb = b.rep_->fn.get();
      return pa < pb ? -1 : (pa > pb ? 1 : 0);
    }
    case Kind::Table: {
      const auto& ea = a.rep_->entries;
      const auto& eb = b.rep_->entries;
      std::size_t n = std::min(ea.size(), eb.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (int c = compare(ea[i].first, eb[i].first)) return c;
        if (int c = compare(ea[i].second, eb[i].second)) return c;
      }
      return ea.size() < eb.size() ? -1 : (ea.size() > eb.size() ? 1 : 0);
    }
    case Kind::List:
    case Kind::Store:
    case Kind::CsUnit:
    case Kind::CsBattery: {
      const auto& ia = a.rep_->items;
      const auto& ib = b.rep_->items;
      std::size_t n = std::min(ia.size(), ib.size());
      for (std::size_t i = 0; i < n; ++i) {
        if (int c = compare(ia[i], ib[i])) return c;
      }
      return ia.size() < ib.size() ? -1 : (ia.size() > ib.size() ? 1 : 0);
    }
  }
  return 0;
}

std::string Val::to_text() const {
  std::ostringstream out;
  switch (kind_) {
    case Kind::Sym:
      out << rep_->text;
      break;
    case Kind::Int:
      out << rep_->num;
      break;
    case Kind::Str: {
      out << '"';
      for (char c : rep_->text) {
        if (c == '"' || c == '\\') out << '\\';
        out << c;
      }
      out << '"';
      break;
    }
    case Kind::List: {
      out << '(';
      for (std::size_t i = 0; i < rep_->items.size(); ++i) {
        if (i) out << ' ';
        out << rep_->items[i].to_text();
      }
      out << ')';
      break;
    }
    case Kind::Table: {
      out << "#table{";
      for (std::size_t i = 0; i < rep_->entries.size(); ++i) {
        if (i) out << ' ';
        out << rep_->entries[i].first.to_text() << "=>" << rep_->entries[i].second.to_text();
      }
      out << '}';
      break;
    }
    case Kind::Fn:
      out << "#fn";
      break;
    case Kind::Store:
      out << "#store(" << rep_->items[0].to_text() << ' ' << rep_->items[1].to_text() << ')';
      break;
    case Kind::CsUnit:
      out << "#unit(" << rep_->items[0].to_text() << ')';
      break;
    case Kind::CsBattery:
      out << "#battery(" << rep_->items[0].to_text() << ' ' << rep_->items[1].to_text() << ')';
      break;
  }
  return out.str();
}

Val apply_val(const Val& f, const Val& x) { return f.call(x); }

Val compose_val(const Val& g, const Val& h) {
  if (h.is_table()) {
    TableEntries out;
    out.reserve(h.entries().size());
    for (const auto& [k, v] : h.entries()) out.emplace_back(k, apply_val(g, v));
    return Val::table(std::move(out));
  }
  if (h.is_fn()) {
    return Val::fn([g, h](const Val& x) { return apply_val(g, apply_val(h, x)); });
  }
  throw std::logic_error("compose_val: second argument not callable");
}

Val postcompose(const ValFn& f, const Val& h) {
  if (h.is_table()) {
    TableEntries out;
    out.reserve(h.entries().size());
    for (const auto& [k, v] : h.entries()) out.emplace_back(k, f(v));
    return Val::table(std::move(out));
  }
  if (h.is_fn()) {
    return Val::fn([f, h](const Val& x) { return f(apply_val(h, x)); });
  }
  throw std::logic_error("postcompose: argument not callable");
}

Val table_from_fn(std::span<const Val> domain, const ValFn& f) {
  TableEntries out;
  out.reserve(domain.size());
  for (const Val& k : domain) out.emplace_back(k, f(k));
  return Val::table(std::move(out));
}

Val identity_table(std::span<const Val> universe) {
  return table_from_fn(universe, [](const Val& x) { return x; });
}

std::int64_t cs_dimension(const Val& cs) {
  const Val* cur = &cs;
  std::int64_t n = 0;
  while (cur->is_cs_battery()) {
    ++n;
    cur = &cur->cs_inner();
  }
  if (!cur->is_cs_unit()) throw std::logic_error("cs_dimension: not a cartesian store");
  return n;
}

std::vector<Val> cs_positions(const Val& cs) {
  std::vector<Val> out;
  const Val* cur = &cs;
  while (cur->is_cs_battery()) {
    out.push_back(cur->cs_last());
    cur = &cur->cs_inner();
  }
  if (!cur->is_cs_unit()) throw std::logic_error("cs_positions: not a cartesian store");
  std::reverse(out.begin(), out.end());  // innermost battery first
  return out;
}

Val cs_peek_at(const Val& cs, std::span<const Val> coords) {
  if (cs.is_cs_unit()) {
    if (!coords.empty()) throw std::logic_error("cs_peek_at: too many coordinates");
    return cs.cs_element();
  }
  if (cs.is_cs_battery()) {
    if (coords.empty()) throw std::logic_error("cs_peek_at: too few coordinates");
    // Last coordinate belongs to the outermost battery.
    Val inner = cs_peek_at(cs.cs_inner(), coords.first(coords.size() - 1));
    return apply_val(inner, coords.back());
  }
  throw std::logic_error("cs_peek_at: not a cartesian store");
}

namespace {

bool deep_eq(const Val& a, const Val& b, std::span<const Val> universe);

bool deep_eq_fnlike(const Val& a, const Val& b, std::span<const Val> universe) {
  if (a.is_fn() && b.is_fn() && a == b) return true;  // identical callable
  for (const Val& u : universe) {
    if (!deep_eq(apply_val(a, u), apply_val(b, u), universe)) return false;
  }
  return true;
}

bool deep_eq_cs(const Val& a, const Val& b, std::span<const Val> universe) {
  std::int64_t dim = cs_dimension(a);
  if (dim != cs_dimension(b)) return false;
  auto pa = cs_positions(a);
  auto pb = cs_positions(b);
  for (std::size_t i = 0; i < pa.size(); ++i) {
    if (!deep_eq(pa[i], pb[i], universe)) return false;
  }
  // Pointwise peek comparison over universe^dim.
  std::vector<Val> coords(static_cast<std::size_t>(dim));
  std::function<bool(std::size_t)> walk = [&](std::size_t i) -> bool {
    if (i == coords.size()) {
      return deep_eq(cs_peek_at(a, coords), cs_peek_at(b, coords), universe);
    }
    for (const Val& u : universe) {
      coords[i] = u;
      if (!walk(i + 1)) return false;
    }
    return true;
  };
  return walk(0);
}

bool deep_eq(const Val& a, const Val& b, std::span<const Val> universe) {
  if (a.is_callable() && b.is_callable()) return deep_eq_fnlike(a, b, universe);
  if (a.is_store() && b.is_store()) {
    return deep_eq(a.store_pos(), b.store_pos(), universe) &&
           deep_eq_fnlike(a.store_peek(), b.store_peek(), universe);
  }
  if (a.is_cs() && b.is_cs()) return deep_eq_cs(a, b, universe);
  if (a.kind() != b.kind()) return false;
  if (a.is_list()) {
    const auto& ia = a.items();
    const auto& ib = b.items();
    if (ia.size() != ib.size()) return false;
    for (std::size_t i = 0; i < ia.size(); ++i) {
      if (!deep_eq(ia[i], ib[i], universe)) return false;
    }
    return true;
  }
  return a == b;
}

}  // namespace

bool deep_equal_on(const Val& a, const Val& b, std::span<const Val> universe) {
  return deep_eq(a, b, universe);
}

std::int64_t wrap_add(std::int64_t a, std::int64_t b) {
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
}

}  // namespace optic
