// codec.hpp
// Between typed terms and their s-expression values:
//
//   (SDecl TInt (V "x"))   (SAss (V "x") (EAdd (EVar (V "x")) (EInt 1)))
//   (SBlock s1 ... sn)     (EInt 7)   (V "x")   TInt
//
// decode checks constructor, arity and child sorts, reporting the offending
// node by path ("/" is the root, "/2/1" the second child's first child).

#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "optic/minilang/ast.hpp"
#include "optic/val.hpp"

namespace optic::minilang {

class DecodeError : public std::runtime_error {
public:
  DecodeError(const std::string& message, std::string path)
      : std::runtime_error(message + " (at " + path + ")"), path_(std::move(path)) {}
  const std::string& path() const { return path_; }

private:
  std::string path_;
};

Val encode(const StmPtr& s);
Val encode(const ExprPtr& e);
Val encode(const Var& v);
Val encode(Typ t);
Val encode(const Term& t);

Term decode(const Val& v, Sort sort);  // throws DecodeError

// Sort of a value from its head constructor symbol.
std::optional<Sort> infer_sort(const Val& v);

std::optional<Sort> sort_from_name(std::string_view name);

}  // namespace optic::minilang
