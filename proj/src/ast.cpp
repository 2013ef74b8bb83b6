#include "rla/ast.hpp"

#include <sstream>

namespace rla {

ExprPtr make_expr(Expr::Node node) {
  return std::make_shared<const Expr>(std::move(node));
}

namespace {

bool pred_equal(const PredicateAtom& a, const PredicateAtom& b) {
  return a.lhs == b.lhs && a.op == b.op && a.rhs == b.rhs;
}

bool spec_equal(const RenameSpec& a, const RenameSpec& b) {
  if (a.pairs.size() != b.pairs.size()) return false;
  for (std::size_t i = 0; i < a.pairs.size(); ++i)
    if (a.pairs[i].from != b.pairs[i].from || a.pairs[i].to != b.pairs[i].to)
      return false;
  return true;
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node().index() != b.node().index()) return false;
  return std::visit(
      [&b](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const auto& rhs = std::get<T>(b.node());
        if constexpr (std::is_same_v<T, NameExpr>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, LiteralExpr>) {
          return lhs.relation == rhs.relation;
        } else if constexpr (std::is_same_v<T, JoinExpr> ||
                             std::is_same_v<T, UnionExpr> ||
                             std::is_same_v<T, MinusExpr> ||
                             std::is_same_v<T, MinusLiteralExpr> ||
                             std::is_same_v<T, TensorExpr>) {
          return *lhs.left == *rhs.left && *lhs.right == *rhs.right;
        } else if constexpr (std::is_same_v<T, ProjectExpr>) {
          return lhs.attrs == rhs.attrs && *lhs.child == *rhs.child;
        } else if constexpr (std::is_same_v<T, SelectExpr>) {
          if (lhs.preds.size() != rhs.preds.size()) return false;
          for (std::size_t i = 0; i < lhs.preds.size(); ++i)
            if (!pred_equal(lhs.preds[i], rhs.preds[i])) return false;
          return *lhs.child == *rhs.child;
        } else if constexpr (std::is_same_v<T, RenameExpr>) {
          return spec_equal(lhs.spec, rhs.spec) && *lhs.child == *rhs.child;
        } else if constexpr (std::is_same_v<T, TcExpr>) {
          return lhs.x == rhs.x && lhs.y == rhs.y && *lhs.child == *rhs.child;
        } else if constexpr (std::is_same_v<T, EmptyExpr>) {
          return lhs.attrs == rhs.attrs;
        } else {
          return true;  // DeeExpr / DumExpr carry no payload
        }
      },
      a.node());
}

namespace {

// Binding strength: atoms bind tightest, `&` over `|`.
enum Level { kUnion = 0, kJoin = 1, kAtom = 2 };

Level level_of(const Expr& e) {
  if (std::holds_alternative<UnionExpr>(e.node())) return kUnion;
  if (std::holds_alternative<JoinExpr>(e.node())) return kJoin;
  return kAtom;
}

void print_node(const Expr& e, std::ostream& out);

void print_child(const Expr& child, Level min_level, std::ostream& out) {
  if (level_of(child) < min_level) {
    out << '(';
    print_node(child, out);
    out << ')';
  } else {
    print_node(child, out);
  }
}

void print_attrs(const std::vector<AttributeName>& attrs, std::ostream& out) {
  for (std::size_t i = 0; i < attrs.size(); ++i) {
    if (i) out << ", ";
    out << attrs[i];
  }
}

void print_literal(const Relation& r, std::ostream& out) {
  out << "rel[";
  print_attrs({r.header().begin(), r.header().end()}, out);
  out << "]{";
  bool first_row = true;
  for (const auto& row : r.body()) {
    if (!first_row) out << ", ";
    first_row = false;
    out << '(';
    bool first_cell = true;
    for (const auto& [attr, value] : row) {
      (void)attr;
      if (!first_cell) out << ", ";
      first_cell = false;
      out << format_value(value);
    }
    out << ')';
  }
  out << '}';
}

void print_node(const Expr& e, std::ostream& out) {
  std::visit(
      [&out](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, NameExpr>) {
          out << node.name;
        } else if constexpr (std::is_same_v<T, LiteralExpr>) {
          print_literal(node.relation, out);
        } else if constexpr (std::is_same_v<T, JoinExpr>) {
          // Left-associative: the right child needs parens at equal level.
          print_child(*node.left, kJoin, out);
          out << " & ";
          print_child(*node.right, kAtom, out);
        } else if constexpr (std::is_same_v<T, UnionExpr>) {
          print_child(*node.left, kUnion, out);
          out << " | ";
          print_child(*node.right, kJoin, out);
        } else if constexpr (std::is_same_v<T, ProjectExpr>) {
          out << "project[";
          print_attrs(node.attrs, out);
          out << "](";
          print_node(*node.child, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, SelectExpr>) {
          out << "select[";
          for (std::size_t i = 0; i < node.preds.size(); ++i) {
            if (i) out << ", ";
            const auto& p = node.preds[i];
            out << p.lhs << ' ' << relop_symbol(p.op) << ' ';
            if (std::holds_alternative<AttributeName>(p.rhs))
              out << std::get<AttributeName>(p.rhs);
            else
              out << format_value(std::get<Value>(p.rhs));
          }
          out << "](";
          print_node(*node.child, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, RenameExpr>) {
          out << "rename[";
          for (std::size_t i = 0; i < node.spec.pairs.size(); ++i) {
            if (i) out << ", ";
            out << node.spec.pairs[i].from << " -> " << node.spec.pairs[i].to;
          }
          out << "](";
          print_node(*node.child, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, MinusExpr>) {
          out << "minus(";
          print_node(*node.left, out);
          out << ", ";
          print_node(*node.right, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, MinusLiteralExpr>) {
          out << "minus_literal(";
          print_node(*node.left, out);
          out << ", ";
          print_node(*node.right, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, TcExpr>) {
          out << "tc[" << node.x << ", " << node.y << "](";
          print_node(*node.child, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, TensorExpr>) {
          out << "tensor(";
          print_node(*node.left, out);
          out << ", ";
          print_node(*node.right, out);
          out << ')';
        } else if constexpr (std::is_same_v<T, DeeExpr>) {
          out << "dee";
        } else if constexpr (std::is_same_v<T, DumExpr>) {
          out << "dum";
        } else if constexpr (std::is_same_v<T, EmptyExpr>) {
          out << "empty[";
          print_attrs(node.attrs, out);
          out << ']';
        }
      },
      e.node());
}

}  // namespace

std::string print_expr(const Expr& e) {
  std::ostringstream out;
  print_node(e, out);
  return out.str();
}

}  // namespace rla
