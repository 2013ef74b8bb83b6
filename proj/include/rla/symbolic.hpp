#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rla/relation.hpp"

namespace rla {

enum class RelOp { Lt, Le, Gt, Ge, Eq, Ne };

const char* relop_symbol(RelOp op);
bool relop_is_order(RelOp op);

/// Intensional, possibly infinite relation over one or two attributes,
/// usable only inside joins. Order comparisons live on the integer domain;
/// equality and inequality apply to every value type.
class SymbolicRelation {
 public:
  enum class Kind {
    Equal,         // {(a, b) | a = b}, functional in both directions
    NotEqual,      // {(a, b) | a != b}
    Compare,       // {(a, b) | a <op> b} for an order op over integers
    CompareConst,  // {(a) | a <op> v}
  };

  /// The binary identity relation EQ(a, b).
  static SymbolicRelation equal(AttributeName a, AttributeName b);

  /// NEQ(a, b).
  static SymbolicRelation not_equal(AttributeName a, AttributeName b);

  /// a <op> b. Folds Eq/Ne onto the dedicated kinds.
  static SymbolicRelation compare(AttributeName a, RelOp op, AttributeName b);

  /// a <op> v. Order ops require an integer literal (TypeMismatch otherwise).
  static SymbolicRelation compare_const(AttributeName a, RelOp op, Value v);

  Kind kind() const noexcept { return kind_; }
  const Header& header() const noexcept { return header_; }
  const AttributeName& lhs() const noexcept { return lhs_; }
  const AttributeName& rhs() const noexcept { return rhs_; }
  RelOp op() const noexcept { return op_; }
  const Value& literal() const { return *literal_; }

  /// Readable form such as `x < y` or `x = 1`.
  std::string to_string() const;

 private:
  SymbolicRelation() = default;

  Kind kind_ = Kind::Equal;
  Header header_;
  AttributeName lhs_;
  AttributeName rhs_;
  RelOp op_ = RelOp::Eq;
  std::optional<Value> literal_;
};

/// Outcome of probing a symbolic relation with a partial binding.
struct RestrictResult {
  enum class Kind { Extend, Pass, Fail, Infinite };

  Kind kind;
  /// For Extend: each entry binds exactly the symbolic attributes that were
  /// absent from the probe. Finite by construction.
  std::vector<Tuple> extensions;

  static RestrictResult pass() { return {Kind::Pass, {}}; }
  static RestrictResult fail() { return {Kind::Fail, {}}; }
  static RestrictResult infinite() { return {Kind::Infinite, {}}; }
  static RestrictResult extend(std::vector<Tuple> exts) {
    return {Kind::Extend, std::move(exts)};
  }
};

/// Probes `sym` with a partial binding. Attributes in the probe outside
/// sym's header are ignored. Fully bound probes yield Pass or Fail; partially
/// bound ones yield Extend when the remaining attributes have a finite
/// satisfying set and Infinite otherwise.
RestrictResult restrict_symbolic(const SymbolicRelation& sym, const Tuple& probe);

/// Natural join of `a` with every symbolic relation, evaluated per tuple by
/// iterating restrict_symbolic to fixpoint. Result header is a's header
/// united with every symbolic header; the join may therefore extend the
/// header when predicates mention fresh attributes. Throws NotMaterializable
/// if some symbolic stays unresolved with an infinite extension set.
Relation join_with_symbolic(const Relation& a,
                            const std::vector<SymbolicRelation>& syms);

}  // namespace rla
