#pragma once

#include <string_view>

#include "rla/ast.hpp"

namespace rla {

/// Parses one expression of the query grammar:
///
///   expr  := union ;  union := join { "|" join } ;  join := atom { "&" atom } ;
///   atom  := NAME | builtin | "(" expr ")" ;
///   builtin := project[attrs](expr) | select[preds](expr)
///            | rename[a->b, ...](expr) | minus(expr, expr)
///            | minus_literal(expr, expr) | tc[x, y](expr)
///            | tensor(expr, expr) | dee | dum | empty[attrs]
///            | rel[attrs]{(v, ...), ...} ;
///   pred  := NAME relop (NAME | literal) ;  relop := < <= > >= = != ;
///
/// Literals are integers, true/false, or double-quoted text. `#` comments run
/// to end of line. Throws ParseError with a 1-based source position.
Expr parse(std::string_view text);

}  // namespace rla
