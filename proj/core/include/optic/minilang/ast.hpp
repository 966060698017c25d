// ast.hpp
// The four-sort demonstration language:
//
//   Stm  := SDecl Typ Var | SAss Var Expr | SBlock [Stm] | SReturn Expr
//   Expr := EStm Stm | EAdd Expr Expr | EVar Var | EInt Int
//   Var  := V String
//   Typ  := TInt | TFloat
//
// Trees are immutable and finite.  This header also carries the direct
// recursive oracles (rename, collectors, counters, constant folding) and the
// bounded term enumerator; none of them touch the plate machinery, so they
// can stand witness against it.

#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace optic::minilang {

enum class Typ { TInt, TFloat };

struct Var {
  std::string name;
  friend bool operator==(const Var&, const Var&) = default;
};

class Stm;
class Expr;
using StmPtr = std::shared_ptr<const Stm>;
using ExprPtr = std::shared_ptr<const Expr>;

struct SDecl {
  Typ typ;
  Var var;
};
struct SAss {
  Var var;
  ExprPtr value;
};
struct SBlock {
  std::vector<StmPtr> stms;
};
struct SReturn {
  ExprPtr value;
};

class Stm {
public:
  using Node = std::variant<SDecl, SAss, SBlock, SReturn>;
  explicit Stm(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

private:
  Node node_;
};

struct EStm {
  StmPtr stm;
};
struct EAdd {
  ExprPtr lhs;
  ExprPtr rhs;
};
struct EVar {
  Var var;
};
struct EInt {
  std::int64_t value;
};

class Expr {
public:
  using Node = std::variant<EStm, EAdd, EVar, EInt>;
  explicit Expr(Node node) : node_(std::move(node)) {}
  const Node& node() const { return node_; }

private:
  Node node_;
};

StmPtr sdecl(Typ typ, std::string name);
StmPtr sass(std::string name, ExprPtr value);
StmPtr sblock(std::vector<StmPtr> stms);
StmPtr sreturn(ExprPtr value);
ExprPtr estm(StmPtr stm);
ExprPtr eadd(ExprPtr lhs, ExprPtr rhs);
ExprPtr evar(std::string name);
ExprPtr eint(std::int64_t value);

bool operator==(const Stm& a, const Stm& b);
bool operator==(const Expr& a, const Expr& b);
bool equal(const StmPtr& a, const StmPtr& b);
bool equal(const ExprPtr& a, const ExprPtr& b);

enum class Sort { Stm, Expr, Var, Typ };
using Term = std::variant<StmPtr, ExprPtr, Var, Typ>;

Sort term_sort(const Term& t);
const char* sort_name(Sort s);
bool term_equal(const Term& a, const Term& b);

// --- direct recursive oracles ---

// Prepend an underscore to every variable name; one case per constructor.
StmPtr naive_rename(const StmPtr& s);
ExprPtr naive_rename(const ExprPtr& e);
Var naive_rename(const Var& v);
Typ naive_rename(Typ t);
Term naive_rename(const Term& t);

// Variable names in preorder.
std::vector<std::string> oracle_collect_vars(const Term& t);

// Every node of every sort counts one.
std::int64_t oracle_count_nodes(const Term& t);

// Bottom-up EAdd(EInt a, EInt b) -> EInt(a + b), wrapping on overflow.
StmPtr oracle_constfold(const StmPtr& s);
ExprPtr oracle_constfold(const ExprPtr& e);
Term oracle_constfold(const Term& t);

// --- bounded enumeration ---

// Every term whose node count (all four sorts counted) is <= max_size,
// drawing variable names from {x, y} and integer literals from {0, 1}.
struct TermUniverse {
  std::vector<StmPtr> stms;
  std::vector<ExprPtr> exprs;
  std::vector<Var> vars;
  std::vector<Typ> typs;
};
TermUniverse enumerate_terms(int max_size);

// The worked example program:
//   (SBlock (SDecl TInt (V "x"))
//           (SAss (V "x") (EAdd (EVar (V "x")) (EInt 1)))
//           (SReturn (EVar (V "x"))))
StmPtr p0_program();

}  // namespace optic::minilang
