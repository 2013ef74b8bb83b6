#pragma once

#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "rla/derived.hpp"
#include "rla/relation.hpp"
#include "rla/symbolic.hpp"

namespace rla {

class Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct NameExpr {
  std::string name;
};

/// Inline relation literal: rel[x,y]{(1,2),(1,3)}.
struct LiteralExpr {
  Relation relation;
};

struct JoinExpr {
  ExprPtr left, right;
};

struct UnionExpr {
  ExprPtr left, right;
};

struct ProjectExpr {
  ExprPtr child;
  std::vector<AttributeName> attrs;  // duplicate-free
};

/// One selection atom: `attr relop attr` or `attr relop literal`.
struct PredicateAtom {
  AttributeName lhs;
  RelOp op;
  std::variant<AttributeName, Value> rhs;
};

struct SelectExpr {
  ExprPtr child;
  std::vector<PredicateAtom> preds;
};

struct RenameExpr {
  ExprPtr child;
  RenameSpec spec;
};

struct MinusExpr {
  ExprPtr left, right;
};

struct MinusLiteralExpr {
  ExprPtr left, right;
};

struct TcExpr {
  ExprPtr child;
  AttributeName x, y;
};

struct TensorExpr {
  ExprPtr left, right;
};

struct DeeExpr {};
struct DumExpr {};

struct EmptyExpr {
  std::vector<AttributeName> attrs;  // duplicate-free
};

class Expr {
 public:
  using Node =
      std::variant<NameExpr, LiteralExpr, JoinExpr, UnionExpr, ProjectExpr,
                   SelectExpr, RenameExpr, MinusExpr, MinusLiteralExpr, TcExpr,
                   TensorExpr, DeeExpr, DumExpr, EmptyExpr>;

  explicit Expr(Node node) : node_(std::move(node)) {}

  const Node& node() const noexcept { return node_; }

 private:
  Node node_;
};

ExprPtr make_expr(Expr::Node node);

/// Structural equality.
bool operator==(const Expr& a, const Expr& b);
inline bool operator!=(const Expr& a, const Expr& b) { return !(a == b); }

/// Prints an expression in the surface grammar with minimal parentheses;
/// parsing the result reproduces the tree.
std::string print_expr(const Expr& e);

}  // namespace rla
