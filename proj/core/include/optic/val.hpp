// val.hpp
// The dynamic value all optics in this library operate on.
//
// Law checking needs decidable equality of function-valued data, so functions
// that live inside values (store peeks, curried battery cells) are total
// lookup tables whenever their domain is a finite universe.  Opaque callables
// exist as a value kind too; they appear transiently inside applicative
// pipelines and compare extensionally against a universe (deep_equal_on) or
// by identity (operator==).

#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace optic {

class Val;

using ValFn = std::function<Val(const Val&)>;
using TableEntries = std::vector<std::pair<Val, Val>>;

class Val {
public:
  enum class Kind : std::uint8_t {
    Sym,        // bare symbol atom
    Int,        // 64-bit signed integer
    Str,        // string atom
    List,       // ordered sequence
    Table,      // total lookup table over a finite key set, sorted by key
    Fn,         // opaque callable
    Store,      // indexed collection with a selected index: {peek, pos}
    CsUnit,     // cartesian store of dimension 0: one element
    CsBattery,  // cartesian store: inner store of one-argument cells + last index
  };

  Val();  // empty list

  static Val sym(std::string name);
  static Val integer(std::int64_t v);
  static Val str(std::string text);
  static Val list(std::vector<Val> items);
  static Val table(TableEntries entries);  // sorts; duplicate keys are a logic error
  static Val fn(ValFn f);
  static Val store(Val peek, Val pos);  // peek must be Table or Fn
  static Val cs_unit(Val element);
  static Val cs_battery(Val inner, Val last);  // inner must be a cartesian store

  Kind kind() const { return kind_; }
  bool is_sym() const { return kind_ == Kind::Sym; }
  bool is_int() const { return kind_ == Kind::Int; }
  bool is_str() const { return kind_ == Kind::Str; }
  bool is_list() const { return kind_ == Kind::List; }
  bool is_table() const { return kind_ == Kind::Table; }
  bool is_fn() const { return kind_ == Kind::Fn; }
  bool is_store() const { return kind_ == Kind::Store; }
  bool is_cs() const { return kind_ == Kind::CsUnit || kind_ == Kind::CsBattery; }
  bool is_cs_unit() const { return kind_ == Kind::CsUnit; }
  bool is_cs_battery() const { return kind_ == Kind::CsBattery; }
  bool is_callable() const { return is_table() || is_fn(); }

  const std::string& sym_name() const;
  std::int64_t int_value() const;
  const std::string& str_value() const;
  const std::vector<Val>& items() const;
  const TableEntries& entries() const;
  const Val& store_peek() const;
  const Val& store_pos() const;
  const Val& cs_element() const;  // CsUnit
  const Val& cs_inner() const;    // CsBattery
  const Val& cs_last() const;     // CsBattery

  // Fn invocation or total-table lookup; missing table key is a logic error.
  Val call(const Val& arg) const;

  // Structural comparison; Fn compares by identity.  Total order, so Vals can
  // key tables and enumerate deterministically.
  static int compare(const Val& a, const Val& b);
  friend bool operator==(const Val& a, const Val& b) { return compare(a, b) == 0; }
  friend bool operator!=(const Val& a, const Val& b) { return compare(a, b) != 0; }
  friend bool operator<(const Val& a, const Val& b) { return compare(a, b) < 0; }

  // Diagnostic rendering; every kind printable (s-expression kinds render
  // exactly as print_sexpr would).
  std::string to_text() const;

private:
  struct Rep;
  Kind kind_;
  std::shared_ptr<const Rep> rep_;
};

// f(x) for a callable value (Fn call or Table lookup).
Val apply_val(const Val& f, const Val& x);

// g after h.  When h is a Table the composite is materialized eagerly as a
// Table over h's key set; otherwise the composite stays an opaque Fn.
Val compose_val(const Val& g, const Val& h);

// Same grounding rule for a host-level function applied after a callable
// value: Table argument -> eager Table, Fn argument -> lazy Fn.
Val postcompose(const ValFn& f, const Val& h);

// Table whose keys are `domain` and whose entries are f(key).
Val table_from_fn(std::span<const Val> domain, const ValFn& f);

// Identity table over a universe.
Val identity_table(std::span<const Val> universe);

// Extensional equality: function positions (Fn or Table peeks/cells) are
// compared pointwise over `universe`, which must cover the domain of every
// function position reached.  Ground data compares structurally.
bool deep_equal_on(const Val& a, const Val& b, std::span<const Val> universe);

// Applies an n-dimensional cartesian store's curried peek to n coordinates
// (first coordinate = innermost battery position).
Val cs_peek_at(const Val& cs, std::span<const Val> coords);

std::int64_t cs_dimension(const Val& cs);

// Positions of a cartesian store, innermost first.
std::vector<Val> cs_positions(const Val& cs);

// Two's-complement wrapping add (the library's integer arithmetic).
std::int64_t wrap_add(std::int64_t a, std::int64_t b);

}  // namespace optic
