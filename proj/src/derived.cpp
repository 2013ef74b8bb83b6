#include "rla/derived.hpp"

#include <algorithm>

#include "rla/error.hpp"
#include "rla/lattice.hpp"

namespace rla {

namespace {

void require_binary(const Relation& r, const AttributeName& x,
                    const AttributeName& y) {
  if (r.header() != Header{x, y})
    throw Error(ErrorCode::HeaderNotBinary,
                "relation header must be exactly {" + x + "," + y + "}");
}

AttributeName fresh_name(const AttributeName& base, const Header& avoid) {
  AttributeName candidate = base + kFreshSuffix;
  while (avoid.count(candidate)) candidate += kFreshSuffix;
  return candidate;
}

void validate_rename(const Relation& a, const RenameSpec& spec) {
  Header olds, news;
  for (const auto& [from, to] : spec.pairs) {
    validate_attribute_name(to);
    if (!a.has_attribute(from))
      throw Error(ErrorCode::AttrNotInHeader,
                  "rename source `" + from + "` not in header");
    if (!olds.insert(from).second)
      throw Error(ErrorCode::RenameCollision,
                  "rename source `" + from + "` listed twice");
    if (!news.insert(to).second)
      throw Error(ErrorCode::RenameCollision,
                  "rename target `" + to + "` listed twice");
    if (a.has_attribute(to))
      throw Error(ErrorCode::RenameCollision,
                  "rename target `" + to + "` already in header");
  }
}

}  // namespace

Relation cartesian(const Relation& a, const Relation& b) {
  for (const auto& attr : a.header())
    if (b.has_attribute(attr))
      throw Error(ErrorCode::HeadersNotDisjoint,
                  "cartesian operands share attribute `" + attr + "`");
  return natural_join(a, b);
}

Relation select(const Relation& a,
                const std::vector<SymbolicRelation>& preds) {
  return kernel_project(join_with_symbolic(a, preds), a.header());
}

Relation projection(const Relation& a, const Header& attrs) {
  for (const auto& attr : attrs)
    if (!a.has_attribute(attr))
      throw Error(ErrorCode::AttrNotInHeader,
                  "projection attribute `" + attr + "` not in header");
  return generalized_union(a, Relation::empty(attrs));
}

Relation rename(const Relation& a, const RenameSpec& spec) {
  validate_rename(a, spec);
  if (spec.pairs.empty()) return a;

  std::vector<SymbolicRelation> identities;
  Header target = a.header();
  for (const auto& [from, to] : spec.pairs) {
    identities.push_back(SymbolicRelation::equal(from, to));
    target.erase(from);
    target.insert(to);
  }
  return projection(join_with_symbolic(a, identities), target);
}

Relation compose(const Relation& r, const Relation& s, const AttributeName& x,
                 const AttributeName& y) {
  require_binary(r, x, y);
  require_binary(s, x, y);

  const AttributeName mid = fresh_name(x, r.header());
  Relation left = rename(r, RenameSpec{{{y, mid}}});
  Relation right = rename(s, RenameSpec{{{x, mid}}});
  return projection(natural_join(left, right), Header{x, y});
}

Relation transitive_closure(const Relation& a, const AttributeName& x,
                            const AttributeName& y) {
  require_binary(a, x, y);

  Relation accumulated = a;
  Relation power = a;
  for (;;) {
    power = compose(power, a, x, y);
    Relation next = generalized_union(accumulated, power);
    if (relation_equal(next, accumulated)) return accumulated;
    accumulated = std::move(next);
  }
}

Relation difference(const Relation& a, const Relation& b) {
  if (a.header() != b.header())
    throw Error(ErrorCode::HeaderMismatch,
                "difference operands must share a header");
  std::set<Tuple> body;
  for (const auto& row : a.body())
    if (!b.body().count(row)) body.insert(row);
  return Relation::make(a.header(), std::move(body));
}

Relation difference_literal(const Relation& a, const Relation& b) {
  if (a.header() != b.header())
    throw Error(ErrorCode::HeaderMismatch,
                "difference operands must share a header");
  if (a.header().size() != 2)
    throw Error(ErrorCode::HeaderNotBinary,
                "the anti-join construction is defined for binary relations");

  const AttributeName x = *a.header().begin();
  const AttributeName y = *std::next(a.header().begin());
  const AttributeName xp = fresh_name(x, a.header());
  const AttributeName yp = fresh_name(y, a.header());

  Relation primed = rename(b, RenameSpec{{{x, xp}, {y, yp}}});
  Relation paired = natural_join(a, primed);

  Relation first = kernel_project(
      join_with_symbolic(paired, {SymbolicRelation::not_equal(x, xp)}),
      a.header());
  Relation second = kernel_project(
      join_with_symbolic(paired, {SymbolicRelation::not_equal(y, yp)}),
      a.header());
  return generalized_union(first, second);
}

Relation tensor_product(const Relation& a, const Relation& b) {
  if (a.header() != b.header())
    throw Error(ErrorCode::HeaderMismatch,
                "tensor operands must share a header");
  if (a.header().size() != 2)
    throw Error(ErrorCode::HeaderNotBinary,
                "tensor product is defined for binary relations");

  const AttributeName x = *a.header().begin();
  const AttributeName y = *std::next(a.header().begin());
  const Header output{"xx", "xy", "yx", "yy"};
  for (const auto& attr : output)
    if (a.has_attribute(attr))
      throw Error(ErrorCode::RenameCollision,
                  "operand header clashes with output attribute `" + attr + "`");

  const auto chain = [](const Relation& rel, const AttributeName& p,
                        const AttributeName& q, const AttributeName& r,
                        const AttributeName& s) {
    return join_with_symbolic(rel, {SymbolicRelation::equal(p, "xx"),
                                    SymbolicRelation::equal(q, "xy"),
                                    SymbolicRelation::equal(r, "yx"),
                                    SymbolicRelation::equal(s, "yy")});
  };

  Relation lifted_a = chain(a, x, x, y, y);
  Relation lifted_b = chain(b, x, y, x, y);
  return projection(generalized_union(lifted_a, lifted_b), output);
}

}  // namespace rla
