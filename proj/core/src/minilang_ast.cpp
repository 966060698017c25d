#include "optic/minilang/ast.hpp"

#include <map>
#include <stdexcept>

#include "optic/val.hpp"

namespace optic::minilang {

namespace {
template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;
}  // namespace

StmPtr sdecl(Typ typ, std::string name) {
  return std::make_shared<const Stm>(SDecl{typ, Var{std::move(name)}});
}
StmPtr sass(std::string name, ExprPtr value) {
  return std::make_shared<const Stm>(SAss{Var{std::move(name)}, std::move(value)});
}
StmPtr sblock(std::vector<StmPtr> stms) {
  return std::make_shared<const Stm>(SBlock{std::move(stms)});
}
StmPtr sreturn(ExprPtr value) { return std::make_shared<const Stm>(SReturn{std::move(value)}); }
ExprPtr estm(StmPtr stm) { return std::make_shared<const Expr>(EStm{std::move(stm)}); }
ExprPtr eadd(ExprPtr lhs, ExprPtr rhs) {
  return std::make_shared<const Expr>(EAdd{std::move(lhs), std::move(rhs)});
}
ExprPtr evar(std::string name) { return std::make_shared<const Expr>(EVar{Var{std::move(name)}}); }
ExprPtr eint(std::int64_t value) { return std::make_shared<const Expr>(EInt{value}); }

bool operator==(const Stm& a, const Stm& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&b](const SDecl& x) {
            const auto& y = std::get<SDecl>(b.node());
            return x.typ == y.typ && x.var == y.var;
          },
          [&b](const SAss& x) {
            const auto& y = std::get<SAss>(b.node());
            return x.var == y.var && *x.value == *y.value;
          },
          [&b](const SBlock& x) {
            const auto& y = std::get<SBlock>(b.node());
            if (x.stms.size() != y.stms.size()) return false;
            for (std::size_t i = 0; i < x.stms.size(); ++i) {
              if (!(*x.stms[i] == *y.stms[i])) return false;
            }
            return true;
          },
          [&b](const SReturn& x) {
            return *x.value == *std::get<SReturn>(b.node()).value;
          },
      },
      a.node());
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      overloaded{
          [&b](const EStm& x) { return *x.stm == *std::get<EStm>(b.node()).stm; },
          [&b](const EAdd& x) {
            const auto& y = std::get<EAdd>(b.node());
            return *x.lhs == *y.lhs && *x.rhs == *y.rhs;
          },
          [&b](const EVar& x) { return x.var == std::get<EVar>(b.node()).var; },
          [&b](const EInt& x) { return x.value == std::get<EInt>(b.node()).value; },
      },
      a.node());
}

bool equal(const StmPtr& a, const StmPtr& b) { return *a == *b; }
bool equal(const ExprPtr& a, const ExprPtr& b) { return *a == *b; }

Sort term_sort(const Term& t) {
  switch (t.index()) {
    case 0: return Sort::Stm;
    case 1: return Sort::Expr;
    case 2: return Sort::Var;
    default: return Sort::Typ;
  }
}

const char* sort_name(Sort s) {
  switch (s) {
    case Sort::Stm: return "stm";
    case Sort::Expr: return "expr";
    case Sort::Var: return "var";
    case Sort::Typ: return "typ";
  }
  return "?";
}

bool term_equal(const Term& a, const Term& b) {
  if (a.index() != b.index()) return false;
  return std::visit(
      overloaded{
          [&b](const StmPtr& x) { return *x == *std::get<StmPtr>(b); },
          [&b](const ExprPtr& x) { return *x == *std::get<ExprPtr>(b); },
          [&b](const Var& x) { return x == std::get<Var>(b); },
          [&b](Typ x) { return x == std::get<Typ>(b); },
      },
      a);
}

// --- rename oracle ---

Var naive_rename(const Var& v) { return Var{"_" + v.name}; }
Typ naive_rename(Typ t) { return t; }

StmPtr naive_rename(const StmPtr& s) {
  return std::visit(
      overloaded{
          [](const SDecl& x) { return std::make_shared<const Stm>(SDecl{x.typ, naive_rename(x.var)}); },
          [](const SAss& x) {
            return std::make_shared<const Stm>(SAss{naive_rename(x.var), naive_rename(x.value)});
          },
          [](const SBlock& x) {
            std::vector<StmPtr> out;
            out.reserve(x.stms.size());
            for (const auto& c : x.stms) out.push_back(naive_rename(c));
            return std::make_shared<const Stm>(SBlock{std::move(out)});
          },
          [](const SReturn& x) {
            return std::make_shared<const Stm>(SReturn{naive_rename(x.value)});
          },
      },
      s->node());
}

ExprPtr naive_rename(const ExprPtr& e) {
  return std::visit(
      overloaded{
          [](const EStm& x) { return std::make_shared<const Expr>(EStm{naive_rename(x.stm)}); },
          [](const EAdd& x) {
            return std::make_shared<const Expr>(EAdd{naive_rename(x.lhs), naive_rename(x.rhs)});
          },
          [](const EVar& x) { return std::make_shared<const Expr>(EVar{naive_rename(x.var)}); },
          [](const EInt& x) { return std::make_shared<const Expr>(EInt{x.value}); },
      },
      e->node());
}

Term naive_rename(const Term& t) {
  return std::visit(overloaded{[](const auto& x) { return Term{naive_rename(x)}; }}, t);
}

// --- collector / counter oracles ---

namespace {

void collect_stm(const StmPtr& s, std::vector<std::string>& out);
void collect_expr(const ExprPtr& e, std::vector<std::string>& out);

void collect_stm(const StmPtr& s, std::vector<std::string>& out) {
  std::visit(overloaded{
                 [&out](const SDecl& x) { out.push_back(x.var.name); },
                 [&out](const SAss& x) {
                   out.push_back(x.var.name);
                   collect_expr(x.value, out);
                 },
                 [&out](const SBlock& x) {
                   for (const auto& c : x.stms) collect_stm(c, out);
                 },
                 [&out](const SReturn& x) { collect_expr(x.value, out); },
             },
             s->node());
}

void collect_expr(const ExprPtr& e, std::vector<std::string>& out) {
  std::visit(overloaded{
                 [&out](const EStm& x) { collect_stm(x.stm, out); },
                 [&out](const EAdd& x) {
                   collect_expr(x.lhs, out);
                   collect_expr(x.rhs, out);
                 },
                 [&out](const EVar& x) { out.push_back(x.var.name); },
                 [&out](const EInt&) {},
             },
             e->node());
}

std::int64_t count_stm(const StmPtr& s);
std::int64_t count_expr(const ExprPtr& e);

std::int64_t count_stm(const StmPtr& s) {
  return std::visit(overloaded{
                        [](const SDecl&) { return std::int64_t{3}; },  // node + typ + var
                        [](const SAss& x) { return 2 + count_expr(x.value); },
                        [](const SBlock& x) {
                          std::int64_t n = 1;
                          for (const auto& c : x.stms) n += count_stm(c);
                          return n;
                        },
                        [](const SReturn& x) { return 1 + count_expr(x.value); },
                    },
                    s->node());
}

std::int64_t count_expr(const ExprPtr& e) {
  return std::visit(overloaded{
                        [](const EStm& x) { return 1 + count_stm(x.stm); },
                        [](const EAdd& x) { return 1 + count_expr(x.lhs) + count_expr(x.rhs); },
                        [](const EVar&) { return std::int64_t{2}; },
                        [](const EInt&) { return std::int64_t{1}; },
                    },
                    e->node());
}

}  // namespace

std::vector<std::string> oracle_collect_vars(const Term& t) {
  std::vector<std::string> out;
  std::visit(overloaded{
                 [&out](const StmPtr& s) { collect_stm(s, out); },
                 [&out](const ExprPtr& e) { collect_expr(e, out); },
                 [&out](const Var& v) { out.push_back(v.name); },
                 [](Typ) {},
             },
             t);
  return out;
}

std::int64_t oracle_count_nodes(const Term& t) {
  return std::visit(overloaded{
                        [](const StmPtr& s) { return count_stm(s); },
                        [](const ExprPtr& e) { return count_expr(e); },
                        [](const Var&) { return std::int64_t{1}; },
                        [](Typ) { return std::int64_t{1}; },
                    },
                    t);
}

// --- constant folding oracle ---

ExprPtr oracle_constfold(const ExprPtr& e) {
  return std::visit(
      overloaded{
          [](const EStm& x) { return std::make_shared<const Expr>(EStm{oracle_constfold(x.stm)}); },
          [](const EAdd& x) {
            ExprPtr l = oracle_constfold(x.lhs);
            ExprPtr r = oracle_constfold(x.rhs);
            const auto* li = std::get_if<EInt>(&l->node());
            const auto* ri = std::get_if<EInt>(&r->node());
            if (li && ri) {
              return std::make_shared<const Expr>(EInt{wrap_add(li->value, ri->value)});
            }
            return std::make_shared<const Expr>(EAdd{std::move(l), std::move(r)});
          },
          [&e](const EVar&) { return e; },
          [&e](const EInt&) { return e; },
      },
      e->node());
}

StmPtr oracle_constfold(const StmPtr& s) {
  return std::visit(
      overloaded{
          [&s](const SDecl&) { return s; },
          [](const SAss& x) {
            return std::make_shared<const Stm>(SAss{x.var, oracle_constfold(x.value)});
          },
          [](const SBlock& x) {
            std::vector<StmPtr> out;
            out.reserve(x.stms.size());
            for (const auto& c : x.stms) out.push_back(oracle_constfold(c));
            return std::make_shared<const Stm>(SBlock{std::move(out)});
          },
          [](const SReturn& x) {
            return std::make_shared<const Stm>(SReturn{oracle_constfold(x.value)});
          },
      },
      s->node());
}

Term oracle_constfold(const Term& t) {
  return std::visit(overloaded{
                        [](const StmPtr& s) { return Term{oracle_constfold(s)}; },
                        [](const ExprPtr& e) { return Term{oracle_constfold(e)}; },
                        [](const Var& v) { return Term{v}; },
                        [](Typ ty) { return Term{ty}; },
                    },
                    t);
}

// --- enumeration ---

namespace {

struct Enumerator {
  std::map<int, std::vector<StmPtr>> stms;
  std::map<int, std::vector<ExprPtr>> exprs;
  std::map<int, std::vector<std::vector<StmPtr>>> stm_lists;  // by total size

  const std::vector<ExprPtr>& exprs_of(int n) {
    auto it = exprs.find(n);
    if (it != exprs.end()) return it->second;
    std::vector<ExprPtr> out;
    if (n == 1) {
      out.push_back(eint(0));
      out.push_back(eint(1));
    }
    if (n == 2) {
      out.push_back(evar("x"));
      out.push_back(evar("y"));
    }
    if (n >= 2) {
      for (const auto& s : stms_of(n - 1)) out.push_back(estm(s));
    }
    if (n >= 3) {
      for (int i = 1; i <= n - 2; ++i) {
        for (const auto& l : exprs_of(i)) {
          for (const auto& r : exprs_of(n - 1 - i)) out.push_back(eadd(l, r));
        }
      }
    }
    return exprs.emplace(n, std::move(out)).first->second;
  }

  const std::vector<StmPtr>& stms_of(int n) {
    auto it = stms.find(n);
    if (it != stms.end()) return it->second;
    std::vector<StmPtr> out;
    if (n == 3) {
      for (Typ t : {Typ::TInt, Typ::TFloat}) {
        for (const char* v : {"x", "y"}) out.push_back(sdecl(t, v));
      }
    }
    if (n >= 3) {
      for (const char* v : {"x", "y"}) {
        for (const auto& e : exprs_of(n - 2)) out.push_back(sass(v, e));
      }
    }
    if (n >= 2) {
      for (const auto& e : exprs_of(n - 1)) out.push_back(sreturn(e));
    }
    for (const auto& l : lists_of(n - 1)) out.push_back(sblock(l));
    return stms.emplace(n, std::move(out)).first->second;
  }

  const std::vector<std::vector<StmPtr>>& lists_of(int total) {
    auto it = stm_lists.find(total);
    if (it != stm_lists.end()) return it->second;
    std::vector<std::vector<StmPtr>> out;
    if (total == 0) {
      out.push_back({});
    } else {
      for (int first = 1; first <= total; ++first) {
        for (const auto& head : stms_of(first)) {
          for (const auto& tail : lists_of(total - first)) {
            std::vector<StmPtr> l;
            l.reserve(tail.size() + 1);
            l.push_back(head);
            l.insert(l.end(), tail.begin(), tail.end());
            out.push_back(std::move(l));
          }
        }
      }
    }
    return stm_lists.emplace(total, std::move(out)).first->second;
  }
};

}  // namespace

TermUniverse enumerate_terms(int max_size) {
  if (max_size < 1) throw std::invalid_argument("enumerate_terms: max_size must be positive");
  Enumerator en;
  TermUniverse u;
  for (int n = 1; n <= max_size; ++n) {
    const auto& ss = en.stms_of(n);
    u.stms.insert(u.stms.end(), ss.begin(), ss.end());
    const auto& es = en.exprs_of(n);
    u.exprs.insert(u.exprs.end(), es.begin(), es.end());
  }
  u.vars = {Var{"x"}, Var{"y"}};
  u.typs = {Typ::TInt, Typ::TFloat};
  return u;
}

StmPtr p0_program() {
  return sblock({
      sdecl(Typ::TInt, "x"),
      sass("x", eadd(evar("x"), eint(1))),
      sreturn(evar("x")),
  });
}

}  // namespace optic::minilang
