// plate.hpp
// The four-sort language as a plate family, the demonstration passes and
// folds built from the generic machinery, and the children multireference
// fixtures used by the biplate and polymorphic-optics suites.
//
// Passes operate on encoded terms (see codec.hpp); typed convenience
// overloads wrap them for the common statement/expression cases.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "optic/cartesian.hpp"
#include "optic/minilang/ast.hpp"
#include "optic/minilang/codec.hpp"
#include "optic/multiplate.hpp"
#include "optic/vanlaarhoven.hpp"

namespace optic::minilang {

// Sort indices within the plate shape.
inline constexpr std::size_t kStmSort = 0;
inline constexpr std::size_t kExprSort = 1;
inline constexpr std::size_t kVarSort = 2;
inline constexpr std::size_t kTypSort = 3;

// The family: sorts {stm, expr, var, typ} with the children traversal that
// rebuilds each constructor around its traversed children.
const PlateShape& minilang_shape();

// Same sorts, but the traversal silently drops SBlock children; fails the
// first multiplate law and exists to exercise counterexample reporting.
const PlateShape& corrupted_minilang_shape();

std::size_t sort_index(Sort s);

// --- passes ---

Val rename_pass(const Val& term, Sort sort);
Val constfold_pass(const Val& term, Sort sort);
std::vector<std::string> collect_vars_fold(const Val& term, Sort sort);
std::int64_t count_nodes_fold(const Val& term, Sort sort);

StmPtr rename_pass(const StmPtr& s);
ExprPtr rename_pass(const ExprPtr& e);
StmPtr constfold_pass(const StmPtr& s);
ExprPtr constfold_pass(const ExprPtr& e);

// --- children multireferences (targets: expressions) ---

// Outermost expression descendants of an expression's immediate structure.
Biplate expr_children_biplate();

// The same multireference in polymorphic form, written directly against the
// context operations rather than through the cartesian store.
VlOptic expr_children_vl();

// --- bounded encoded universes, aligned with minilang_shape().sorts() ---

std::vector<std::vector<Val>> encoded_universes(int max_size);

}  // namespace optic::minilang
