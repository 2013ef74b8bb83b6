#include "rla/fca.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "rla/error.hpp"

namespace rla {

namespace {

using Bits = std::uint32_t;

constexpr std::size_t kMaxAttributes = 20;

std::vector<std::string> split_cells(const std::string& line) {
  std::vector<std::string> cells;
  std::string current;
  for (char c : line) {
    if (c == ',') {
      cells.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  cells.push_back(current);
  for (auto& cell : cells) {
    std::size_t b = 0, e = cell.size();
    while (b < e && std::isspace(static_cast<unsigned char>(cell[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(cell[e - 1]))) --e;
    cell = cell.substr(b, e - b);
  }
  return cells;
}

}  // namespace

std::size_t FormalContext::object_index(const std::string& name) const {
  for (std::size_t i = 0; i < objects.size(); ++i)
    if (objects[i] == name) return i;
  throw Error(ErrorCode::UnknownObject, "unknown object `" + name + "`");
}

std::size_t FormalContext::attribute_index(const std::string& name) const {
  for (std::size_t i = 0; i < attributes.size(); ++i)
    if (attributes[i] == name) return i;
  throw Error(ErrorCode::UnknownAttribute, "unknown attribute `" + name + "`");
}

FormalContext parse_context_csv(std::string_view text) {
  std::vector<std::string> lines;
  {
    std::string current;
    for (char c : text) {
      if (c == '\n') {
        if (!current.empty() && current.back() == '\r') current.pop_back();
        lines.push_back(current);
        current.clear();
      } else {
        current += c;
      }
    }
    if (!current.empty()) {
      if (current.back() == '\r') current.pop_back();
      lines.push_back(current);
    }
  }
  if (lines.empty()) throw ParseError("context needs a header row", 1, 1);

  FormalContext ctx;
  const auto header = split_cells(lines[0]);
  if (header.empty() || !header[0].empty())
    throw ParseError("first header cell must be empty", 1, 1);
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i].empty())
      throw ParseError("empty attribute name", 1, static_cast<int>(i) + 1);
    ctx.attributes.push_back(header[i]);
  }

  for (std::size_t n = 1; n < lines.size(); ++n) {
    if (lines[n].empty()) continue;
    const auto cells = split_cells(lines[n]);
    if (cells.size() != ctx.attributes.size() + 1)
      throw ParseError("row has " + std::to_string(cells.size()) +
                           " cells, expected " +
                           std::to_string(ctx.attributes.size() + 1),
                       static_cast<int>(n) + 1, 1);
    if (cells[0].empty())
      throw ParseError("empty object name", static_cast<int>(n) + 1, 1);
    const std::size_t object = ctx.objects.size();
    ctx.objects.push_back(cells[0]);
    for (std::size_t i = 1; i < cells.size(); ++i) {
      if (cells[i] == "x")
        ctx.incidence.insert({object, i - 1});
      else if (!cells[i].empty())
        throw ParseError("cell must be `x` or empty, got `" + cells[i] + "`",
                         static_cast<int>(n) + 1, static_cast<int>(i) + 1);
    }
  }
  return ctx;
}

namespace {

Bits intent_of_object(const FormalContext& ctx, std::size_t object) {
  Bits bits = 0;
  for (std::size_t a = 0; a < ctx.attributes.size(); ++a)
    if (ctx.incident(object, a)) bits |= Bits{1} << a;
  return bits;
}

/// Objects whose intents contain every attribute of `intent`.
std::vector<std::size_t> extent_of_bits(const FormalContext& ctx, Bits intent) {
  std::vector<std::size_t> extent;
  for (std::size_t o = 0; o < ctx.objects.size(); ++o)
    if ((intent_of_object(ctx, o) & intent) == intent) extent.push_back(o);
  return extent;
}

/// Attributes common to every object in `extent`; all attributes when empty.
Bits intent_of_extent(const FormalContext& ctx,
                      const std::vector<std::size_t>& extent) {
  Bits bits = (ctx.attributes.size() == 32)
                  ? ~Bits{0}
                  : (Bits{1} << ctx.attributes.size()) - 1;
  for (std::size_t o : extent) bits &= intent_of_object(ctx, o);
  return bits;
}

}  // namespace

std::set<std::string> derive_intent(const FormalContext& ctx,
                                    const std::set<std::string>& objects) {
  std::vector<std::size_t> extent;
  for (const auto& name : objects) extent.push_back(ctx.object_index(name));
  const Bits bits = intent_of_extent(ctx, extent);
  std::set<std::string> intent;
  for (std::size_t a = 0; a < ctx.attributes.size(); ++a)
    if (bits & (Bits{1} << a)) intent.insert(ctx.attributes[a]);
  return intent;
}

std::set<std::string> derive_extent(const FormalContext& ctx,
                                    const std::set<std::string>& attributes) {
  Bits bits = 0;
  for (const auto& name : attributes)
    bits |= Bits{1} << ctx.attribute_index(name);
  std::set<std::string> extent;
  for (std::size_t o : extent_of_bits(ctx, bits)) extent.insert(ctx.objects[o]);
  return extent;
}

bool ConceptLattice::leq(std::size_t lower, std::size_t upper) const {
  return std::includes(concepts[upper].extent.begin(),
                       concepts[upper].extent.end(),
                       concepts[lower].extent.begin(),
                       concepts[lower].extent.end());
}

ConceptLattice enumerate_concepts(const FormalContext& ctx) {
  if (ctx.attributes.size() > kMaxAttributes)
    throw Error(ErrorCode::TooLarge,
                "contexts beyond " + std::to_string(kMaxAttributes) +
                    " attributes are not enumerable here");

  // Distinct closed intents, found by closing every attribute subset.
  std::map<Bits, std::vector<std::size_t>> closed;
  const Bits limit = Bits{1} << ctx.attributes.size();
  for (Bits subset = 0; subset < limit; ++subset) {
    auto extent = extent_of_bits(ctx, subset);
    const Bits intent = intent_of_extent(ctx, extent);
    closed.emplace(intent, std::move(extent));
  }

  ConceptLattice lattice;
  lattice.context = ctx;
  for (const auto& [intent, extent] : closed) {
    Concept c;
    for (std::size_t o : extent) c.extent.insert(ctx.objects[o]);
    for (std::size_t a = 0; a < ctx.attributes.size(); ++a)
      if (intent & (Bits{1} << a)) c.intent.insert(ctx.attributes[a]);
    lattice.concepts.push_back(std::move(c));
  }
  std::sort(lattice.concepts.begin(), lattice.concepts.end());

  const std::size_t n = lattice.concepts.size();
  for (std::size_t upper = 0; upper < n; ++upper) {
    for (std::size_t lower = 0; lower < n; ++lower) {
      if (upper == lower || !lattice.leq(lower, upper)) continue;
      bool covered = true;
      for (std::size_t mid = 0; mid < n && covered; ++mid) {
        if (mid == upper || mid == lower) continue;
        if (lattice.leq(lower, mid) && lattice.leq(mid, upper)) covered = false;
      }
      if (covered) lattice.hasse_edges.emplace_back(upper, lower);
    }
  }
  std::sort(lattice.hasse_edges.begin(), lattice.hasse_edges.end());
  return lattice;
}

namespace {

std::string intent_column(const std::string& attribute) {
  std::string column = "is" + attribute;
  if (column.size() > 2)
    column[2] = static_cast<char>(
        std::toupper(static_cast<unsigned char>(column[2])));
  return column;
}

}  // namespace

Relation concept_to_relation(const FormalContext& ctx, const Concept& c) {
  Header header{"Name"};
  for (const auto& attribute : c.intent) {
    ctx.attribute_index(attribute);  // validate membership
    header.insert(intent_column(attribute));
  }
  std::vector<Tuple> rows;
  for (const auto& object : c.extent) {
    ctx.object_index(object);
    Tuple row;
    for (const auto& column : header)
      row.emplace(column, column == "Name" ? Value(object) : Value(true));
    rows.push_back(std::move(row));
  }
  return Relation::make(std::move(header), rows);
}

std::string emit_dot(const ConceptLattice& lattice) {
  const auto& concepts = lattice.concepts;

  // Reduced labeling: an attribute sits at the greatest concept whose intent
  // holds it; an object at the least concept whose extent holds it.
  std::vector<std::vector<std::string>> attr_labels(concepts.size());
  std::vector<std::vector<std::string>> object_labels(concepts.size());
  for (const auto& attribute : lattice.context.attributes) {
    std::size_t best = concepts.size();
    for (std::size_t i = 0; i < concepts.size(); ++i) {
      if (!concepts[i].intent.count(attribute)) continue;
      if (best == concepts.size() || lattice.leq(best, i)) best = i;
    }
    if (best < concepts.size()) attr_labels[best].push_back(attribute);
  }
  for (const auto& object : lattice.context.objects) {
    std::size_t best = concepts.size();
    for (std::size_t i = 0; i < concepts.size(); ++i) {
      if (!concepts[i].extent.count(object)) continue;
      if (best == concepts.size() || lattice.leq(i, best)) best = i;
    }
    if (best < concepts.size()) object_labels[best].push_back(object);
  }

  std::ostringstream out;
  out << "digraph concept_lattice {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=box];\n";
  for (std::size_t i = 0; i < concepts.size(); ++i) {
    out << "  c" << i << " [label=\"";
    for (std::size_t k = 0; k < attr_labels[i].size(); ++k)
      out << (k ? " " : "") << attr_labels[i][k];
    out << "\\n";
    for (std::size_t k = 0; k < object_labels[i].size(); ++k)
      out << (k ? " " : "") << object_labels[i][k];
    out << "\"];\n";
  }
  for (const auto& [upper, lower] : lattice.hasse_edges)
    out << "  c" << lower << " -> c" << upper << ";\n";
  out << "}\n";
  return out.str();
}

LawReport check_bridge(const ConceptLattice& lattice) {
  LawReport report;
  report.law_name =
      "bridge: Name column of rel(c1) & rel(c2) = extent of the concept meet";
  report.holds = true;
  bool header_note = false;

  const auto& concepts = lattice.concepts;
  std::vector<Relation> relations;
  relations.reserve(concepts.size());
  for (const auto& c : concepts)
    relations.push_back(concept_to_relation(lattice.context, c));

  for (std::size_t i = 0; i < concepts.size(); ++i) {
    for (std::size_t j = 0; j < concepts.size(); ++j) {
      report.cases_tested++;
      Relation joined = natural_join(relations[i], relations[j]);

      std::set<std::string> names;
      for (const auto& row : joined.body())
        names.insert(row.at("Name").as_text());

      // Meet extent in FCA is the plain extent intersection.
      std::set<std::string> meet_extent;
      for (const auto& object : concepts[i].extent)
        if (concepts[j].extent.count(object)) meet_extent.insert(object);

      if (names != meet_extent) {
        report.holds = false;
        report.witness = LawWitness{
            {relations[i], relations[j]},
            std::move(joined),
            concept_to_relation(
                lattice.context,
                Concept{meet_extent, derive_intent(lattice.context, meet_extent)})};
        return report;
      }

      if (!header_note) {
        std::set<std::string> union_intent = concepts[i].intent;
        union_intent.insert(concepts[j].intent.begin(), concepts[j].intent.end());
        const auto meet_intent =
            derive_intent(lattice.context, meet_extent);
        if (meet_intent != union_intent) {
          report.note =
              "agreement is extent-level: the joined header carries the intent "
              "union, while the concept meet closes it to a larger intent";
          header_note = true;
        }
      }
    }
  }
  return report;
}

}  // namespace rla
