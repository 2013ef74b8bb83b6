#pragma once

#include <map>
#include <string>

#include "rla/ast.hpp"

namespace rla {

/// Named-relation environment a query runs against.
using Env = std::map<std::string, Relation>;

/// Evaluates an expression: Join maps to natural_join, Union to
/// generalized_union, and the builtins to their derived operators. Operation
/// failures are rethrown as EvalError tagged with the offending
/// sub-expression.
Relation eval(const Expr& e, const Env& env);

}  // namespace rla
