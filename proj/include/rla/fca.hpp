#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rla/lattice.hpp"
#include "rla/relation.hpp"

namespace rla {

/// Binary object x attribute incidence table.
struct FormalContext {
  std::vector<std::string> objects;
  std::vector<std::string> attributes;
  std::set<std::pair<std::size_t, std::size_t>> incidence;  // (object, attribute)

  bool incident(std::size_t object, std::size_t attribute) const {
    return incidence.count({object, attribute}) != 0;
  }

  std::size_t object_index(const std::string& name) const;     // UnknownObject
  std::size_t attribute_index(const std::string& name) const;  // UnknownAttribute
};

/// Cross-table CSV: header row is `,attr1,attr2,...`; each following row is
/// an object name followed by `x` or empty cells.
FormalContext parse_context_csv(std::string_view text);

/// Attributes shared by every listed object; all attributes for no objects.
std::set<std::string> derive_intent(const FormalContext& ctx,
                                    const std::set<std::string>& objects);

/// Objects carrying every listed attribute; all objects for no attributes.
std::set<std::string> derive_extent(const FormalContext& ctx,
                                    const std::set<std::string>& attributes);

/// Closed (extent, intent) pair.
struct Concept {
  std::set<std::string> extent;
  std::set<std::string> intent;

  friend bool operator==(const Concept& a, const Concept& b) {
    return a.extent == b.extent && a.intent == b.intent;
  }
  friend bool operator<(const Concept& a, const Concept& b) {
    if (a.extent != b.extent) return a.extent < b.extent;
    return a.intent < b.intent;
  }
};

/// All concepts of a context ordered by extent containment, with the
/// covering relation.
struct ConceptLattice {
  FormalContext context;
  std::vector<Concept> concepts;  // sorted canonically
  /// Covering pairs (upper, lower) into `concepts`, no transitive edges.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_edges;

  bool leq(std::size_t lower, std::size_t upper) const;
};

/// Enumerates every concept by closing all attribute subsets. Guarded to at
/// most 20 attributes (TooLarge beyond).
ConceptLattice enumerate_concepts(const FormalContext& ctx);

/// Interprets a concept as a relation: header {Name} plus one boolean
/// `is<Attr>` column per intent attribute, one all-true row per extent
/// object.
Relation concept_to_relation(const FormalContext& ctx, const Concept& c);

/// DOT rendering of the Hasse diagram with reduced labeling: each attribute
/// at its maximal concept, each object at its minimal one. Output is stable
/// across runs.
std::string emit_dot(const ConceptLattice& lattice);

/// Checks the bridge between concept meets and relation joins at extent
/// level: for every concept pair, the Name column of
/// natural_join(rel(c1), rel(c2)) equals extent(c1) ∩ extent(c2), the extent
/// of the concept meet. Header growth beyond the intent union is surfaced in
/// the note, not treated as a violation.
LawReport check_bridge(const ConceptLattice& lattice);

}  // namespace rla
