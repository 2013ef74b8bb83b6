#include "rla/lattice.hpp"

#include <algorithm>
#include <map>

#include "rla/error.hpp"

namespace rla {

namespace {

Header header_union(const Header& a, const Header& b) {
  Header out = a;
  out.insert(b.begin(), b.end());
  return out;
}

Header header_intersection(const Header& a, const Header& b) {
  Header out;
  for (const auto& attr : a)
    if (b.count(attr)) out.insert(attr);
  return out;
}

std::vector<Value> key_of(const Tuple& t, const Header& attrs) {
  std::vector<Value> key;
  key.reserve(attrs.size());
  for (const auto& a : attrs) key.push_back(t.at(a));
  return key;
}

}  // namespace

Relation natural_join(const Relation& a, const Relation& b) {
  const Header shared = header_intersection(a.header(), b.header());
  Header out_header = header_union(a.header(), b.header());

  std::map<std::vector<Value>, std::vector<const Tuple*>> index;
  for (const Tuple& t : b.body()) index[key_of(t, shared)].push_back(&t);

  std::set<Tuple> body;
  for (const Tuple& t : a.body()) {
    auto hit = index.find(key_of(t, shared));
    if (hit == index.end()) continue;
    for (const Tuple* u : hit->second) {
      Tuple merged = t;
      merged.insert(u->begin(), u->end());
      body.insert(std::move(merged));
    }
  }
  return Relation::make(std::move(out_header), std::move(body));
}

Relation generalized_union(const Relation& a, const Relation& b) {
  const Header common = header_intersection(a.header(), b.header());
  Relation pa = kernel_project(a, common);
  Relation pb = kernel_project(b, common);
  std::set<Tuple> body = pa.body();
  body.insert(pb.body().begin(), pb.body().end());
  return Relation::make(common, std::move(body));
}

bool leq_by_join(const Relation& a, const Relation& b) {
  return relation_equal(b, natural_join(a, b));
}

bool leq_by_union(const Relation& a, const Relation& b) {
  return relation_equal(a, generalized_union(a, b));
}

namespace {

using Ops = std::vector<Relation>;

const std::vector<LatticeLaw>& law_table() {
  static const std::vector<LatticeLaw> laws = {
      {"join idempotent: A & A = A", 1,
       [](const Ops& o) { return natural_join(o[0], o[0]); },
       [](const Ops& o) { return o[0]; }},
      {"union idempotent: A | A = A", 1,
       [](const Ops& o) { return generalized_union(o[0], o[0]); },
       [](const Ops& o) { return o[0]; }},
      {"join commutative: A & B = B & A", 2,
       [](const Ops& o) { return natural_join(o[0], o[1]); },
       [](const Ops& o) { return natural_join(o[1], o[0]); }},
      {"union commutative: A | B = B | A", 2,
       [](const Ops& o) { return generalized_union(o[0], o[1]); },
       [](const Ops& o) { return generalized_union(o[1], o[0]); }},
      {"join associative: A & (B & C) = (A & B) & C", 3,
       [](const Ops& o) { return natural_join(o[0], natural_join(o[1], o[2])); },
       [](const Ops& o) { return natural_join(natural_join(o[0], o[1]), o[2]); }},
      {"union associative: A | (B | C) = (A | B) | C", 3,
       [](const Ops& o) {
         return generalized_union(o[0], generalized_union(o[1], o[2]));
       },
       [](const Ops& o) {
         return generalized_union(generalized_union(o[0], o[1]), o[2]);
       }},
      {"absorption: A & (A | B) = A", 2,
       [](const Ops& o) { return natural_join(o[0], generalized_union(o[0], o[1])); },
       [](const Ops& o) { return o[0]; }},
      {"absorption: A | (A & B) = A", 2,
       [](const Ops& o) {
         return generalized_union(o[0], natural_join(o[0], o[1]));
       },
       [](const Ops& o) { return o[0]; }},
  };
  return laws;
}

}  // namespace

const std::vector<LatticeLaw>& lattice_laws() { return law_table(); }

std::vector<LawReport> check_laws(const RelationSampler& sampler,
                                  std::size_t cases) {
  if (cases < 1)
    throw Error(ErrorCode::InvalidArgument, "check_laws needs at least one case");
  const auto& laws = law_table();
  std::vector<LawReport> reports(laws.size());
  for (std::size_t i = 0; i < laws.size(); ++i) reports[i].law_name = laws[i].name;

  for (std::size_t c = 0; c < cases; ++c) {
    Ops triple = {sampler(), sampler(), sampler()};
    for (std::size_t i = 0; i < laws.size(); ++i) {
      Ops operands(triple.begin(), triple.begin() + laws[i].arity);
      Relation lhs = laws[i].lhs(operands);
      Relation rhs = laws[i].rhs(operands);
      reports[i].cases_tested++;
      if (!relation_equal(lhs, rhs) && reports[i].holds) {
        reports[i].holds = false;
        reports[i].witness =
            LawWitness{std::move(operands), std::move(lhs), std::move(rhs)};
      }
    }
  }
  return reports;
}

Relation RelationGenerator::operator()() {
  static const AttributeName pool[] = {"w", "x", "y", "z"};
  Header header;
  for (const auto& attr : pool)
    if (below(2) == 1) header.insert(attr);

  const std::uint64_t rows = below(7);
  std::vector<Tuple> body;
  for (std::uint64_t r = 0; r < rows; ++r) {
    Tuple t;
    for (const auto& attr : header)
      t.emplace(attr, Value(static_cast<std::int64_t>(below(5))));
    body.push_back(std::move(t));
  }
  return Relation::make(std::move(header), body);
}

// Modulo bias is irrelevant for test sampling; modulo keeps the stream
// identical across platforms, unlike std::uniform_int_distribution.
std::uint64_t RelationGenerator::below(std::uint64_t bound) {
  return rng_() % bound;
}

std::pair<LawReport, LawReport> check_distributivity(const Relation& a,
                                                     const Relation& b,
                                                     const Relation& c) {
  LawReport join_over_union;
  join_over_union.law_name = "join over union: A & (B | C) = (A & B) | (A & C)";
  join_over_union.cases_tested = 1;
  {
    Relation lhs = natural_join(a, generalized_union(b, c));
    Relation rhs =
        generalized_union(natural_join(a, b), natural_join(a, c));
    join_over_union.holds = relation_equal(lhs, rhs);
    join_over_union.witness = LawWitness{{a, b, c}, std::move(lhs), std::move(rhs)};
  }

  LawReport union_over_join;
  union_over_join.law_name = "union over join: A | (B & C) = (A | B) & (A | C)";
  union_over_join.cases_tested = 1;
  {
    Relation lhs = generalized_union(a, natural_join(b, c));
    Relation rhs =
        natural_join(generalized_union(a, b), generalized_union(a, c));
    union_over_join.holds = relation_equal(lhs, rhs);
    union_over_join.witness = LawWitness{{a, b, c}, std::move(lhs), std::move(rhs)};
  }
  return {std::move(join_over_union), std::move(union_over_join)};
}

LawReport check_modularity(const Relation& a, const Relation& b,
                           const Relation& c) {
  LawReport report;
  report.law_name = "modular: a <= c implies a & (b | c) = (a & b) | c";
  report.cases_tested = 1;
  if (!leq_by_union(a, c)) {
    report.note = "premise a <= c not satisfied; law holds vacuously";
    return report;
  }
  Relation lhs = natural_join(a, generalized_union(b, c));
  Relation rhs = generalized_union(natural_join(a, b), c);
  report.holds = relation_equal(lhs, rhs);
  if (!report.holds)
    report.witness = LawWitness{{a, b, c}, std::move(lhs), std::move(rhs)};
  return report;
}

LatticeClosure lattice_closure(const std::vector<Relation>& generators,
                               std::size_t cap) {
  if (cap < generators.size())
    throw Error(ErrorCode::InvalidArgument,
                "closure cap smaller than the generator set");

  LatticeClosure closure;
  closure.generators = generators;
  std::set<Relation> elements(generators.begin(), generators.end());

  std::vector<Relation> frontier(elements.begin(), elements.end());
  while (!frontier.empty()) {
    std::vector<Relation> fresh;
    std::vector<Relation> all(elements.begin(), elements.end());
    for (const Relation& lhs : frontier) {
      for (const Relation& rhs : all) {
        for (const Relation& candidate :
             {natural_join(lhs, rhs), generalized_union(lhs, rhs)}) {
          if (elements.insert(candidate).second) {
            fresh.push_back(candidate);
            if (elements.size() > cap) {
              closure.truncated = true;
              closure.elements.assign(elements.begin(), elements.end());
              return closure;
            }
          }
        }
      }
    }
    frontier = std::move(fresh);
  }
  closure.elements.assign(elements.begin(), elements.end());
  return closure;
}

std::optional<PentagonWitness> find_n5(const LatticeClosure& closure) {
  if (closure.truncated)
    throw Error(ErrorCode::InvalidArgument,
                "find_n5 requires a non-truncated closure");
  const auto& el = closure.elements;
  const std::size_t n = el.size();
  if (n < 5) return std::nullopt;

  std::map<Relation, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i) index.emplace(el[i], i);

  // Precomputed order and operation tables over the closed element set.
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n));
  std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n));
  std::vector<std::vector<std::size_t>> meet(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const std::size_t j_ix = index.at(natural_join(el[i], el[j]));
      const std::size_t m_ix = index.at(generalized_union(el[i], el[j]));
      join[i][j] = join[j][i] = j_ix;
      meet[i][j] = meet[j][i] = m_ix;
      leq[i][j] = (j_ix == j);
      leq[j][i] = (j_ix == i);
    }
  }

  for (std::size_t low = 0; low < n; ++low) {
    for (std::size_t high = 0; high < n; ++high) {
      if (low == high || !leq[low][high]) continue;
      for (std::size_t side = 0; side < n; ++side) {
        if (leq[side][low] || leq[low][side]) continue;
        if (leq[side][high] || leq[high][side]) continue;
        const std::size_t top = join[side][low];
        const std::size_t bottom = meet[side][low];
        if (join[side][high] != top || meet[side][high] != bottom) continue;
        return PentagonWitness{el[bottom], el[top], el[side], el[low], el[high]};
      }
    }
  }
  return std::nullopt;
}

}  // namespace rla
