#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "rla/relation.hpp"

namespace rla {

/// Natural join: header union, tuples merged where they agree on the shared
/// attributes. The lattice *join* of this algebra.
Relation natural_join(const Relation& a, const Relation& b);

/// Generalized (inner) union: both operands projected onto the common
/// attributes, then set union. The lattice *meet*.
Relation generalized_union(const Relation& a, const Relation& b);

/// A ≤ B iff B = A ⋈ B.
bool leq_by_join(const Relation& a, const Relation& b);

/// A ≤ B iff A = A ∪̄ B. Coincides with leq_by_join on every pair.
bool leq_by_union(const Relation& a, const Relation& b);

/// Outcome of property-checking one algebraic identity.
struct LawWitness {
  std::vector<Relation> operands;
  Relation lhs;
  Relation rhs;
};

struct LawReport {
  std::string law_name;
  std::size_t cases_tested = 0;
  bool holds = true;
  std::optional<LawWitness> witness;
  std::string note;
};

/// One lattice identity with its two evaluation routes.
struct LatticeLaw {
  const char* name;
  std::size_t arity;  // operands consumed from a sampled (A, B, C) triple
  Relation (*lhs)(const std::vector<Relation>&);
  Relation (*rhs)(const std::vector<Relation>&);
};

/// The eight identities: idempotence, commutativity, associativity and
/// absorption, for both operators.
const std::vector<LatticeLaw>& lattice_laws();

using RelationSampler = std::function<Relation()>;

/// Runs every lattice law against `cases` sampled triples. A report with
/// holds = false carries the first failing witness.
std::vector<LawReport> check_laws(const RelationSampler& sampler,
                                  std::size_t cases);

/// Seeded relation source for property suites: headers from a 4-attribute
/// pool, 0..6 rows, integer values 0..4. Small domains force collisions,
/// empty bodies and empty headers.
class RelationGenerator {
 public:
  explicit RelationGenerator(std::uint64_t seed) : rng_(seed) {}

  Relation operator()();

 private:
  std::uint64_t below(std::uint64_t bound);

  std::mt19937_64 rng_;
};

/// Evaluates both candidate distributive laws on one triple, keeping each
/// side in the witness:
///   first:  A ⋈ (B ∪̄ C)  vs  (A ⋈ B) ∪̄ (A ⋈ C)
///   second: A ∪̄ (B ⋈ C)  vs  (A ∪̄ B) ⋈ (A ∪̄ C)
std::pair<LawReport, LawReport> check_distributivity(const Relation& a,
                                                     const Relation& b,
                                                     const Relation& c);

/// Modular law with ⋈ as lattice join and ∪̄ as lattice meet:
///   a ≤ c  implies  a ⋈ (b ∪̄ c) = (a ⋈ b) ∪̄ c.
/// Triples that do not satisfy the premise hold vacuously.
LawReport check_modularity(const Relation& a, const Relation& b,
                           const Relation& c);

/// Finite set of relations closed under both operators.
struct LatticeClosure {
  std::vector<Relation> elements;  // sorted, duplicate-free
  std::vector<Relation> generators;
  bool truncated = false;
};

/// Closes `generators` under ⋈ and ∪̄, giving up (truncated = true) once the
/// element count exceeds `cap`. Requires cap ≥ |generators|.
LatticeClosure lattice_closure(const std::vector<Relation>& generators,
                               std::size_t cap);

/// Pentagon sublattice: bottom < low < high < top, side strictly between
/// bottom and top but incomparable to low and high, with
/// side ⋈ low = side ⋈ high = top and side ∪̄ low = side ∪̄ high = bottom.
struct PentagonWitness {
  Relation bottom;
  Relation top;
  Relation side;
  Relation low;
  Relation high;
};

/// Searches a non-truncated closure for an N5 sublattice.
std::optional<PentagonWitness> find_n5(const LatticeClosure& closure);

}  // namespace rla
