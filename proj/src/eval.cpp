#include "rla/eval.hpp"

#include "rla/error.hpp"
#include "rla/lattice.hpp"

namespace rla {

namespace {

SymbolicRelation atom_to_symbolic(const PredicateAtom& p) {
  if (std::holds_alternative<AttributeName>(p.rhs))
    return SymbolicRelation::compare(p.lhs, p.op,
                                     std::get<AttributeName>(p.rhs));
  return SymbolicRelation::compare_const(p.lhs, p.op, std::get<Value>(p.rhs));
}

Relation eval_node(const Expr& e, const Env& env) {
  return std::visit(
      [&](const auto& node) -> Relation {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NameExpr>) {
          auto it = env.find(node.name);
          if (it == env.end())
            throw Error(ErrorCode::UnboundName,
                        "relation `" + node.name + "` is not defined");
          return it->second;
        } else if constexpr (std::is_same_v<T, LiteralExpr>) {
          return node.relation;
        } else if constexpr (std::is_same_v<T, JoinExpr>) {
          return natural_join(eval(*node.left, env), eval(*node.right, env));
        } else if constexpr (std::is_same_v<T, UnionExpr>) {
          return generalized_union(eval(*node.left, env),
                                   eval(*node.right, env));
        } else if constexpr (std::is_same_v<T, ProjectExpr>) {
          return projection(eval(*node.child, env),
                            Header(node.attrs.begin(), node.attrs.end()));
        } else if constexpr (std::is_same_v<T, SelectExpr>) {
          std::vector<SymbolicRelation> preds;
          preds.reserve(node.preds.size());
          for (const auto& p : node.preds) preds.push_back(atom_to_symbolic(p));
          return select(eval(*node.child, env), preds);
        } else if constexpr (std::is_same_v<T, RenameExpr>) {
          return rename(eval(*node.child, env), node.spec);
        } else if constexpr (std::is_same_v<T, MinusExpr>) {
          return difference(eval(*node.left, env), eval(*node.right, env));
        } else if constexpr (std::is_same_v<T, MinusLiteralExpr>) {
          return difference_literal(eval(*node.left, env),
                                    eval(*node.right, env));
        } else if constexpr (std::is_same_v<T, TcExpr>) {
          return transitive_closure(eval(*node.child, env), node.x, node.y);
        } else if constexpr (std::is_same_v<T, TensorExpr>) {
          return tensor_product(eval(*node.left, env), eval(*node.right, env));
        } else if constexpr (std::is_same_v<T, DeeExpr>) {
          return Relation::dee();
        } else if constexpr (std::is_same_v<T, DumExpr>) {
          return Relation::dum();
        } else {
          static_assert(std::is_same_v<T, EmptyExpr>);
          return Relation::empty(Header(node.attrs.begin(), node.attrs.end()));
        }
      },
      e.node());
}

}  // namespace

Relation eval(const Expr& e, const Env& env) {
  try {
    return eval_node(e, env);
  } catch (const EvalError&) {
    throw;  // already carries the innermost failing sub-expression
  } catch (const Error& err) {
    throw EvalError(err.code(), err.what(), print_expr(e));
  }
}

}  // namespace rla
