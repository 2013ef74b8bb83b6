#pragma once

#include <vector>

#include "rla/relation.hpp"
#include "rla/symbolic.hpp"

namespace rla {

struct RenamePair {
  AttributeName from;
  AttributeName to;
};

/// Renaming instruction list. Sources must be distinct attributes of the
/// relation, targets distinct and absent from the original header.
struct RenameSpec {
  std::vector<RenamePair> pairs;
};

/// Natural join of relations with disjoint headers (HeadersNotDisjoint
/// otherwise). |result| = |a| * |b|.
Relation cartesian(const Relation& a, const Relation& b);

/// Selection as a symbolic join projected back onto a's header, so the
/// classical signature-preserving contract holds even when predicates
/// mention attributes outside the relation. The raw header-extending join
/// stays available as join_with_symbolic.
Relation select(const Relation& a, const std::vector<SymbolicRelation>& preds);

/// Projection expressed through the kernel: generalized union with an empty
/// relation over `attrs`. Equals kernel_project on every input.
Relation projection(const Relation& a, const Header& attrs);

/// Renaming as joins with binary identity relations followed by projection.
/// Equals plain key relabeling.
Relation rename(const Relation& a, const RenameSpec& spec);

/// Relational composition of two binary relations over {x, y}: pairs
/// (r.x, s.y) sharing a middle value r.y = s.x.
Relation compose(const Relation& r, const Relation& s, const AttributeName& x,
                 const AttributeName& y);

/// Least fixpoint of the union of successive relation powers.
Relation transitive_closure(const Relation& a, const AttributeName& x,
                            const AttributeName& y);

/// Set difference of bodies over a common header. The correctness oracle the
/// anti-join construction is measured against.
Relation difference(const Relation& a, const Relation& b);

/// The anti-join difference construction for binary relations, evaluated
/// exactly as printed: prime b's attributes, join with NEQ on each attribute
/// in turn, project back and unite. Over-approximates true difference when a
/// shared tuple differs from some b-tuple in one column, and returns the
/// empty relation when b is empty; see difference() for the exact operator.
Relation difference_literal(const Relation& a, const Relation& b);

/// Tensor product of two binary relations via EQ chains. Operands must share
/// a two-attribute header, taken in lexicographic order as (x, y); output
/// header is always {xx, xy, yx, yy}.
Relation tensor_product(const Relation& a, const Relation& b);

}  // namespace rla
