#include "rla/symbolic.hpp"

#include <deque>

#include "rla/error.hpp"

namespace rla {

const char* relop_symbol(RelOp op) {
  switch (op) {
    case RelOp::Lt: return "<";
    case RelOp::Le: return "<=";
    case RelOp::Gt: return ">";
    case RelOp::Ge: return ">=";
    case RelOp::Eq: return "=";
    case RelOp::Ne: return "!=";
  }
  return "?";
}

bool relop_is_order(RelOp op) {
  return op == RelOp::Lt || op == RelOp::Le || op == RelOp::Gt || op == RelOp::Ge;
}

namespace {

void check_distinct(const AttributeName& a, const AttributeName& b) {
  if (a == b)
    throw Error(ErrorCode::SameAttribute,
                "symbolic relation needs two distinct attributes, got `" + a + "` twice");
}

bool eval_order(const Value& lhs, RelOp op, const Value& rhs) {
  // Order predicates are relations over the integer domain; tuples carrying
  // any other type simply fall outside them.
  if (!lhs.is_int() || !rhs.is_int()) return false;
  switch (op) {
    case RelOp::Lt: return lhs.as_int() < rhs.as_int();
    case RelOp::Le: return lhs.as_int() <= rhs.as_int();
    case RelOp::Gt: return lhs.as_int() > rhs.as_int();
    case RelOp::Ge: return lhs.as_int() >= rhs.as_int();
    case RelOp::Eq: return lhs == rhs;
    case RelOp::Ne: return lhs != rhs;
  }
  return false;
}

}  // namespace

SymbolicRelation SymbolicRelation::equal(AttributeName a, AttributeName b) {
  validate_attribute_name(a);
  validate_attribute_name(b);
  check_distinct(a, b);
  SymbolicRelation s;
  s.kind_ = Kind::Equal;
  s.header_ = {a, b};
  s.lhs_ = std::move(a);
  s.rhs_ = std::move(b);
  s.op_ = RelOp::Eq;
  return s;
}

SymbolicRelation SymbolicRelation::not_equal(AttributeName a, AttributeName b) {
  validate_attribute_name(a);
  validate_attribute_name(b);
  check_distinct(a, b);
  SymbolicRelation s;
  s.kind_ = Kind::NotEqual;
  s.header_ = {a, b};
  s.lhs_ = std::move(a);
  s.rhs_ = std::move(b);
  s.op_ = RelOp::Ne;
  return s;
}

SymbolicRelation SymbolicRelation::compare(AttributeName a, RelOp op,
                                           AttributeName b) {
  if (op == RelOp::Eq) return equal(std::move(a), std::move(b));
  if (op == RelOp::Ne) return not_equal(std::move(a), std::move(b));
  validate_attribute_name(a);
  validate_attribute_name(b);
  check_distinct(a, b);
  SymbolicRelation s;
  s.kind_ = Kind::Compare;
  s.header_ = {a, b};
  s.lhs_ = std::move(a);
  s.rhs_ = std::move(b);
  s.op_ = op;
  return s;
}

SymbolicRelation SymbolicRelation::compare_const(AttributeName a, RelOp op,
                                                 Value v) {
  validate_attribute_name(a);
  if (relop_is_order(op) && !v.is_int())
    throw Error(ErrorCode::TypeMismatch,
                "order comparison against non-integer literal " + format_value(v));
  SymbolicRelation s;
  s.kind_ = Kind::CompareConst;
  s.header_ = {a};
  s.lhs_ = std::move(a);
  s.op_ = op;
  s.literal_ = std::move(v);
  return s;
}

std::string SymbolicRelation::to_string() const {
  std::string rhs = literal_ ? format_value(*literal_) : rhs_;
  return lhs_ + " " + relop_symbol(op_) + " " + rhs;
}

RestrictResult restrict_symbolic(const SymbolicRelation& sym, const Tuple& probe) {
  const auto lookup = [&probe](const AttributeName& a) -> const Value* {
    auto it = probe.find(a);
    return it == probe.end() ? nullptr : &it->second;
  };

  switch (sym.kind()) {
    case SymbolicRelation::Kind::Equal: {
      const Value* l = lookup(sym.lhs());
      const Value* r = lookup(sym.rhs());
      if (l && r) return *l == *r ? RestrictResult::pass() : RestrictResult::fail();
      if (l) return RestrictResult::extend({Tuple{{sym.rhs(), *l}}});
      if (r) return RestrictResult::extend({Tuple{{sym.lhs(), *r}}});
      return RestrictResult::infinite();
    }
    case SymbolicRelation::Kind::NotEqual: {
      const Value* l = lookup(sym.lhs());
      const Value* r = lookup(sym.rhs());
      if (l && r) return *l != *r ? RestrictResult::pass() : RestrictResult::fail();
      return RestrictResult::infinite();
    }
    case SymbolicRelation::Kind::Compare: {
      const Value* l = lookup(sym.lhs());
      const Value* r = lookup(sym.rhs());
      if (l && r)
        return eval_order(*l, sym.op(), *r) ? RestrictResult::pass()
                                            : RestrictResult::fail();
      return RestrictResult::infinite();
    }
    case SymbolicRelation::Kind::CompareConst: {
      const Value* l = lookup(sym.lhs());
      if (l) {
        bool sat = relop_is_order(sym.op())
                       ? eval_order(*l, sym.op(), sym.literal())
                       : (sym.op() == RelOp::Eq ? *l == sym.literal()
                                                : *l != sym.literal());
        return sat ? RestrictResult::pass() : RestrictResult::fail();
      }
      // a = v is the only unbound case with a finite satisfying set.
      if (sym.op() == RelOp::Eq)
        return RestrictResult::extend({Tuple{{sym.lhs(), sym.literal()}}});
      return RestrictResult::infinite();
    }
  }
  return RestrictResult::infinite();
}

Relation join_with_symbolic(const Relation& a,
                            const std::vector<SymbolicRelation>& syms) {
  Header out_header = a.header();
  for (const auto& sym : syms)
    out_header.insert(sym.header().begin(), sym.header().end());

  struct State {
    Tuple binding;
    std::vector<std::size_t> pending;
  };

  std::vector<std::size_t> all(syms.size());
  for (std::size_t i = 0; i < syms.size(); ++i) all[i] = i;

  std::set<Tuple> body;
  for (const Tuple& row : a.body()) {
    std::deque<State> work;
    work.push_back({row, all});
    while (!work.empty()) {
      State state = std::move(work.front());
      work.pop_front();

      bool dropped = false;
      bool changed = true;
      while (changed && !dropped && !state.pending.empty()) {
        changed = false;
        for (std::size_t pos = 0; pos < state.pending.size(); ++pos) {
          const std::size_t idx = state.pending[pos];
          RestrictResult r = restrict_symbolic(syms[idx], state.binding);
          if (r.kind == RestrictResult::Kind::Infinite) continue;
          if (r.kind == RestrictResult::Kind::Fail ||
              (r.kind == RestrictResult::Kind::Extend && r.extensions.empty())) {
            dropped = true;
            break;
          }
          // Pass or Extend: this symbolic is satisfied.
          state.pending.erase(state.pending.begin() +
                              static_cast<std::ptrdiff_t>(pos));
          changed = true;
          if (r.kind == RestrictResult::Kind::Pass) {
            --pos;
            continue;
          }
          // Extend: fork on the alternatives, keep the first, rescan with
          // the enlarged binding.
          for (std::size_t e = 1; e < r.extensions.size(); ++e) {
            Tuple forked = state.binding;
            forked.insert(r.extensions[e].begin(), r.extensions[e].end());
            work.push_back({std::move(forked), state.pending});
          }
          state.binding.insert(r.extensions[0].begin(), r.extensions[0].end());
          break;
        }
      }

      if (dropped) continue;
      if (!state.pending.empty())
        throw Error(ErrorCode::NotMaterializable,
                    "symbolic relation `" + syms[state.pending.front()].to_string() +
                        "` stays infinite after fixpoint");
      body.insert(state.binding);
    }
  }
  return Relation::make(std::move(out_header), std::move(body));
}

}  // namespace rla
