#include "optic/minilang/codec.hpp"

#include <variant>

namespace optic::minilang {

namespace {
template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

Val head(const char* name) { return Val::sym(name); }
}  // namespace

Val encode(const Var& v) { return Val::list({head("V"), Val::str(v.name)}); }

Val encode(Typ t) { return Val::sym(t == Typ::TInt ? "TInt" : "TFloat"); }

Val encode(const StmPtr& s) {
  return std::visit(
      overloaded{
          [](const SDecl& x) { return Val::list({head("SDecl"), encode(x.typ), encode(x.var)}); },
          [](const SAss& x) { return Val::list({head("SAss"), encode(x.var), encode(x.value)}); },
          [](const SBlock& x) {
            std::vector<Val> items{head("SBlock")};
            for (const auto& c : x.stms) items.push_back(encode(c));
            return Val::list(std::move(items));
          },
          [](const SReturn& x) { return Val::list({head("SReturn"), encode(x.value)}); },
      },
      s->node());
}

Val encode(const ExprPtr& e) {
  return std::visit(
      overloaded{
          [](const EStm& x) { return Val::list({head("EStm"), encode(x.stm)}); },
          [](const EAdd& x) { return Val::list({head("EAdd"), encode(x.lhs), encode(x.rhs)}); },
          [](const EVar& x) { return Val::list({head("EVar"), encode(x.var)}); },
          [](const EInt& x) { return Val::list({head("EInt"), Val::integer(x.value)}); },
      },
      e->node());
}

Val encode(const Term& t) {
  return std::visit(overloaded{[](const auto& x) { return encode(x); }}, t);
}

namespace {

std::string child_path(const std::string& path, std::size_t i) {
  return (path == "/" ? "" : path) + "/" + std::to_string(i);
}

[[noreturn]] void fail(const std::string& message, const std::string& path) {
  throw DecodeError(message, path);
}

const std::string& node_head(const Val& v, Sort want, const std::string& path) {
  if (!v.is_list() || v.items().empty() || !v.items()[0].is_sym()) {
    fail(std::string("expected a ") + sort_name(want) + " node", path);
  }
  return v.items()[0].sym_name();
}

void check_arity(const Val& v, std::size_t want, const std::string& ctor,
                 const std::string& path) {
  if (v.items().size() != want + 1) {
    fail(ctor + " expects " + std::to_string(want) + " children, got " +
             std::to_string(v.items().size() - 1),
         path);
  }
}

StmPtr decode_stm(const Val& v, const std::string& path);
ExprPtr decode_expr(const Val& v, const std::string& path);
Var decode_var(const Val& v, const std::string& path);
Typ decode_typ(const Val& v, const std::string& path);

std::optional<Sort> constructor_sort(const std::string& ctor) {
  if (ctor == "SDecl" || ctor == "SAss" || ctor == "SBlock" || ctor == "SReturn") return Sort::Stm;
  if (ctor == "EStm" || ctor == "EAdd" || ctor == "EVar" || ctor == "EInt") return Sort::Expr;
  if (ctor == "V") return Sort::Var;
  if (ctor == "TInt" || ctor == "TFloat") return Sort::Typ;
  return std::nullopt;
}

[[noreturn]] void wrong_constructor(const std::string& ctor, Sort want, const std::string& path) {
  if (auto actual = constructor_sort(ctor)) {
    fail("constructor " + ctor + " is a " + sort_name(*actual) + ", expected " + sort_name(want),
         path);
  }
  fail("unknown constructor " + ctor + " for sort " + sort_name(want), path);
}

StmPtr decode_stm(const Val& v, const std::string& path) {
  const std::string& ctor = node_head(v, Sort::Stm, path);
  if (ctor == "SDecl") {
    check_arity(v, 2, ctor, path);
    Typ t = decode_typ(v.items()[1], child_path(path, 1));
    Var var = decode_var(v.items()[2], child_path(path, 2));
    return std::make_shared<const Stm>(SDecl{t, std::move(var)});
  }
  if (ctor == "SAss") {
    check_arity(v, 2, ctor, path);
    Var var = decode_var(v.items()[1], child_path(path, 1));
    ExprPtr e = decode_expr(v.items()[2], child_path(path, 2));
    return std::make_shared<const Stm>(SAss{std::move(var), std::move(e)});
  }
  if (ctor == "SBlock") {
    std::vector<StmPtr> stms;
    for (std::size_t i = 1; i < v.items().size(); ++i) {
      stms.push_back(decode_stm(v.items()[i], child_path(path, i)));
    }
    return std::make_shared<const Stm>(SBlock{std::move(stms)});
  }
  if (ctor == "SReturn") {
    check_arity(v, 1, ctor, path);
    return std::make_shared<const Stm>(SReturn{decode_expr(v.items()[1], child_path(path, 1))});
  }
  wrong_constructor(ctor, Sort::Stm, path);
}

ExprPtr decode_expr(const Val& v, const std::string& path) {
  const std::string& ctor = node_head(v, Sort::Expr, path);
  if (ctor == "EStm") {
    check_arity(v, 1, ctor, path);
    return std::make_shared<const Expr>(EStm{decode_stm(v.items()[1], child_path(path, 1))});
  }
  if (ctor == "EAdd") {
    check_arity(v, 2, ctor, path);
    ExprPtr l = decode_expr(v.items()[1], child_path(path, 1));
    ExprPtr r = decode_expr(v.items()[2], child_path(path, 2));
    return std::make_shared<const Expr>(EAdd{std::move(l), std::move(r)});
  }
  if (ctor == "EVar") {
    check_arity(v, 1, ctor, path);
    return std::make_shared<const Expr>(EVar{decode_var(v.items()[1], child_path(path, 1))});
  }
  if (ctor == "EInt") {
    check_arity(v, 1, ctor, path);
    const Val& n = v.items()[1];
    if (!n.is_int()) fail("EInt expects an integer literal", child_path(path, 1));
    return std::make_shared<const Expr>(EInt{n.int_value()});
  }
  wrong_constructor(ctor, Sort::Expr, path);
}

Var decode_var(const Val& v, const std::string& path) {
  const std::string& ctor = node_head(v, Sort::Var, path);
  if (ctor != "V") wrong_constructor(ctor, Sort::Var, path);
  check_arity(v, 1, ctor, path);
  const Val& name = v.items()[1];
  if (!name.is_str()) fail("V expects a string literal", child_path(path, 1));
  return Var{name.str_value()};
}

Typ decode_typ(const Val& v, const std::string& path) {
  if (v.is_sym()) {
    if (v.sym_name() == "TInt") return Typ::TInt;
    if (v.sym_name() == "TFloat") return Typ::TFloat;
    wrong_constructor(v.sym_name(), Sort::Typ, path);
  }
  fail("expected a typ symbol (TInt or TFloat)", path);
}

}  // namespace

Term decode(const Val& v, Sort sort) {
  switch (sort) {
    case Sort::Stm: return decode_stm(v, "/");
    case Sort::Expr: return decode_expr(v, "/");
    case Sort::Var: return decode_var(v, "/");
    case Sort::Typ: return decode_typ(v, "/");
  }
  throw std::logic_error("decode: bad sort");
}

std::optional<Sort> infer_sort(const Val& v) {
  if (v.is_sym()) return constructor_sort(v.sym_name());
  if (v.is_list() && !v.items().empty() && v.items()[0].is_sym()) {
    return constructor_sort(v.items()[0].sym_name());
  }
  return std::nullopt;
}

std::optional<Sort> sort_from_name(std::string_view name) {
  if (name == "stm") return Sort::Stm;
  if (name == "expr") return Sort::Expr;
  if (name == "var") return Sort::Var;
  if (name == "typ") return Sort::Typ;
  return std::nullopt;
}

}  // namespace optic::minilang
