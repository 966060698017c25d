#include "optic/minilang/plate.hpp"

#include <variant>

namespace optic::minilang {

namespace {

Val rebuild1(const char* ctor, const Val& a) { return Val::list({Val::sym(ctor), a}); }
Val rebuild2(const char* ctor, const Val& a, const Val& b) {
  return Val::list({Val::sym(ctor), a, b});
}

// Children traversal over encoded terms, following the per-constructor
// applicative build:  SDecl <$> typ p t <*> var p v,  and so on.  Leaf
// constructors and the var/typ sorts come back under pure.
Plate traverse_children(const Plate& p, bool drop_block_children) {
  const EffectContext k = p.context();
  FieldFn stm_f = p.field(kStmSort);
  FieldFn expr_f = p.field(kExprSort);
  FieldFn var_f = p.field(kVarSort);
  FieldFn typ_f = p.field(kTypSort);

  FieldFn build_stm = [k, stm_f, expr_f, var_f, typ_f, drop_block_children](const Val& s) {
    const auto& items = s.items();
    const std::string& ctor = items[0].sym_name();
    if (ctor == "SDecl") {
      Val part = k.map(
          [](const Val& t2) {
            return Val::fn([t2](const Val& v2) { return rebuild2("SDecl", t2, v2); });
          },
          typ_f(items[1]));
      return k.ap(part, var_f(items[2]));
    }
    if (ctor == "SAss") {
      Val part = k.map(
          [](const Val& v2) {
            return Val::fn([v2](const Val& e2) { return rebuild2("SAss", v2, e2); });
          },
          var_f(items[1]));
      return k.ap(part, expr_f(items[2]));
    }
    if (ctor == "SBlock") {
      if (drop_block_children) return k.pure(Val::list({Val::sym("SBlock")}));
      Val children = Val::list({items.begin() + 1, items.end()});
      return k.map(
          [](const Val& kids) {
            std::vector<Val> out{Val::sym("SBlock")};
            out.insert(out.end(), kids.items().begin(), kids.items().end());
            return Val::list(std::move(out));
          },
          traverse_list(k, stm_f, children));
    }
    // SReturn
    return k.map([](const Val& e2) { return rebuild1("SReturn", e2); }, expr_f(items[1]));
  };

  FieldFn build_expr = [k, stm_f, expr_f, var_f](const Val& e) {
    const auto& items = e.items();
    const std::string& ctor = items[0].sym_name();
    if (ctor == "EStm") {
      return k.map([](const Val& s2) { return rebuild1("EStm", s2); }, stm_f(items[1]));
    }
    if (ctor == "EAdd") {
      Val part = k.map(
          [](const Val& l2) {
            return Val::fn([l2](const Val& r2) { return rebuild2("EAdd", l2, r2); });
          },
          expr_f(items[1]));
      return k.ap(part, expr_f(items[2]));
    }
    if (ctor == "EVar") {
      return k.map([](const Val& v2) { return rebuild1("EVar", v2); }, var_f(items[1]));
    }
    return k.pure(e);  // EInt
  };

  FieldFn build_var = [k](const Val& v) { return k.pure(v); };
  FieldFn build_typ = [k](const Val& t) { return k.pure(t); };

  return Plate(p.shape(), k, {build_stm, build_expr, build_var, build_typ});
}

const std::vector<std::string>& sort_names() {
  static const std::vector<std::string> names{"stm", "expr", "var", "typ"};
  return names;
}

}  // namespace

const PlateShape& minilang_shape() {
  static const PlateShape shape("minilang", sort_names(), [](const Plate& p) {
    return traverse_children(p, /*drop_block_children=*/false);
  });
  return shape;
}

const PlateShape& corrupted_minilang_shape() {
  static const PlateShape shape("minilang-dropped-blocks", sort_names(), [](const Plate& p) {
    return traverse_children(p, /*drop_block_children=*/true);
  });
  return shape;
}

std::size_t sort_index(Sort s) {
  switch (s) {
    case Sort::Stm: return kStmSort;
    case Sort::Expr: return kExprSort;
    case Sort::Var: return kVarSort;
    case Sort::Typ: return kTypSort;
  }
  throw std::logic_error("sort_index: bad sort");
}

Val rename_pass(const Val& term, Sort sort) {
  Plate renamer =
      pure_plate(minilang_shape(), EffectContext::identity())
          .with_field(kVarSort, [](const Val& v) {
            return Val::list({Val::sym("V"), Val::str("_" + v.items()[1].str_value())});
          });
  return map_family(renamer).apply(sort_index(sort), term);
}

namespace {

Val constfold_expr_field(const Val& e) {
  const auto& items = e.items();
  if (items[0].sym_name() == "EAdd") {
    const Val& l = items[1];
    const Val& r = items[2];
    if (l.items()[0].sym_name() == "EInt" && r.items()[0].sym_name() == "EInt") {
      return Val::list(
          {Val::sym("EInt"),
           Val::integer(wrap_add(l.items()[1].int_value(), r.items()[1].int_value()))});
    }
  }
  return e;
}

}  // namespace

Val constfold_pass(const Val& term, Sort sort) {
  Plate folder = pure_plate(minilang_shape(), EffectContext::identity())
                     .with_field(kExprSort, constfold_expr_field);
  return map_family(folder).apply(sort_index(sort), term);
}

std::vector<std::string> collect_vars_fold(const Val& term, Sort sort) {
  Plate yield = pure_plate(minilang_shape(), EffectContext::constant(Monoid::list()))
                    .with_field(kVarSort, [](const Val& v) { return Val::list({v.items()[1]}); });
  Val out = preorder_fold(yield).apply(sort_index(sort), term);
  std::vector<std::string> names;
  names.reserve(out.items().size());
  for (const Val& s : out.items()) names.push_back(s.str_value());
  return names;
}

std::int64_t count_nodes_fold(const Val& term, Sort sort) {
  Plate ones = minilang_shape().mk_plate(EffectContext::constant(Monoid::sum()),
                                         [](const Projector&) {
                                           return [](const Val&) { return Val::integer(1); };
                                         });
  return preorder_fold(ones).apply(sort_index(sort), term).int_value();
}

StmPtr rename_pass(const StmPtr& s) {
  return std::get<StmPtr>(decode(rename_pass(encode(s), Sort::Stm), Sort::Stm));
}
ExprPtr rename_pass(const ExprPtr& e) {
  return std::get<ExprPtr>(decode(rename_pass(encode(e), Sort::Expr), Sort::Expr));
}
StmPtr constfold_pass(const StmPtr& s) {
  return std::get<StmPtr>(decode(constfold_pass(encode(s), Sort::Stm), Sort::Stm));
}
ExprPtr constfold_pass(const ExprPtr& e) {
  return std::get<ExprPtr>(decode(constfold_pass(encode(e), Sort::Expr), Sort::Expr));
}

// --- children multireferences ---

namespace {

// One reference slot: a one-dimensional store whose cell is the identity.
Val ref_slot(const Val& e) {
  return Val::cs_battery(Val::cs_unit(Val::fn([](const Val& x) { return x; })), e);
}

Val append_slot(const Val& acc_cs, const Val& child_cs) {
  Val lifted = cs_map(
      [](const Val& lst) {
        return Val::fn([lst](const Val& s2) {
          std::vector<Val> out = lst.items();
          out.push_back(s2);
          return Val::list(std::move(out));
        });
      },
      acc_cs);
  return cs_ap(lifted, child_cs);
}

Val go_stm_cs(const Val& s) {
  const auto& items = s.items();
  const std::string& ctor = items[0].sym_name();
  if (ctor == "SAss") {
    Val v = items[1];
    return cs_map([v](const Val& e2) { return rebuild2("SAss", v, e2); }, ref_slot(items[2]));
  }
  if (ctor == "SBlock") {
    Val acc = cs_pure(Val::list({Val::sym("SBlock")}));
    for (std::size_t i = 1; i < items.size(); ++i) acc = append_slot(acc, go_stm_cs(items[i]));
    return acc;
  }
  if (ctor == "SReturn") {
    return cs_map([](const Val& e2) { return rebuild1("SReturn", e2); }, ref_slot(items[1]));
  }
  return cs_pure(s);  // SDecl: no expression descendants
}

}  // namespace

Biplate expr_children_biplate() {
  return Biplate([](const Val& e) {
    const auto& items = e.items();
    const std::string& ctor = items[0].sym_name();
    if (ctor == "EStm") {
      return cs_map([](const Val& s2) { return rebuild1("EStm", s2); }, go_stm_cs(items[1]));
    }
    if (ctor == "EAdd") {
      Val part = cs_map(
          [](const Val& l2) {
            return Val::fn([l2](const Val& r2) { return rebuild2("EAdd", l2, r2); });
          },
          ref_slot(items[1]));
      return cs_ap(part, ref_slot(items[2]));
    }
    return cs_pure(e);  // EVar, EInt
  });
}

namespace {

Val vgo_stm(const EffectContext& k, const ValFn& f, const Val& s) {
  const auto& items = s.items();
  const std::string& ctor = items[0].sym_name();
  if (ctor == "SAss") {
    Val v = items[1];
    return k.map([v](const Val& e2) { return rebuild2("SAss", v, e2); }, f(items[2]));
  }
  if (ctor == "SBlock") {
    Val children = Val::list({items.begin() + 1, items.end()});
    return k.map(
        [](const Val& kids) {
          std::vector<Val> out{Val::sym("SBlock")};
          out.insert(out.end(), kids.items().begin(), kids.items().end());
          return Val::list(std::move(out));
        },
        traverse_list(k, [&k, &f](const Val& c) { return vgo_stm(k, f, c); }, children));
  }
  if (ctor == "SReturn") {
    return k.map([](const Val& e2) { return rebuild1("SReturn", e2); }, f(items[1]));
  }
  return k.pure(s);
}

}  // namespace

VlOptic expr_children_vl() {
  return VlOptic(VlOptic::Demand::Applicative,
                 [](const EffectContext& k, const ValFn& f, const Val& e) {
                   const auto& items = e.items();
                   const std::string& ctor = items[0].sym_name();
                   if (ctor == "EStm") {
                     return k.map([](const Val& s2) { return rebuild1("EStm", s2); },
                                  vgo_stm(k, f, items[1]));
                   }
                   if (ctor == "EAdd") {
                     Val part = k.map(
                         [](const Val& l2) {
                           return Val::fn([l2](const Val& r2) { return rebuild2("EAdd", l2, r2); });
                         },
                         f(items[1]));
                     return k.ap(part, f(items[2]));
                   }
                   return k.pure(e);
                 });
}

std::vector<std::vector<Val>> encoded_universes(int max_size) {
  TermUniverse u = enumerate_terms(max_size);
  std::vector<std::vector<Val>> out(4);
  for (const auto& s : u.stms) out[kStmSort].push_back(encode(s));
  for (const auto& e : u.exprs) out[kExprSort].push_back(encode(e));
  for (const auto& v : u.vars) out[kVarSort].push_back(encode(v));
  for (const auto& t : u.typs) out[kTypSort].push_back(encode(t));
  return out;
}

}  // namespace optic::minilang
