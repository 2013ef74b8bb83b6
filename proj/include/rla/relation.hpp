#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "rla/value.hpp"

namespace rla {

using AttributeName = std::string;
using Header = std::set<AttributeName>;

/// A tuple is a total mapping from the owning relation's header to values.
using Tuple = std::map<AttributeName, Value>;

/// The prime character is reserved for internally generated fresh attribute
/// names; user-facing ingestion (query text, CSV, JSON) rejects it.
inline constexpr char kFreshSuffix = '\'';

/// Throws InvalidArgument unless `name` is non-empty with no leading or
/// trailing whitespace.
void validate_attribute_name(const AttributeName& name);

/// Stricter check applied at ingest boundaries: also rejects the reserved
/// prime character.
void validate_user_attribute_name(const AttributeName& name);

/// Finite relation with set semantics: a header and a duplicate-free body of
/// tuples keyed exactly by that header. Immutable after construction.
class Relation {
 public:
  /// Canonicalizing constructor: validates every row against the header
  /// (HeaderMismatch otherwise) and merges duplicates.
  static Relation make(Header header, const std::vector<Tuple>& rows);
  static Relation make(Header header, std::set<Tuple> body);

  /// No columns, one empty row. Join identity and lattice bottom.
  static Relation dee();

  /// No columns, no rows.
  static Relation dum();

  /// Given header, no rows.
  static Relation empty(Header header);

  const Header& header() const noexcept { return header_; }
  const std::set<Tuple>& body() const noexcept { return body_; }
  std::size_t row_count() const noexcept { return body_.size(); }
  bool has_attribute(const AttributeName& a) const { return header_.count(a) != 0; }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.header_ == b.header_ && a.body_ == b.body_;
  }
  friend bool operator!=(const Relation& a, const Relation& b) { return !(a == b); }

  /// Total order (header, then body); used by canonical element sets.
  friend bool operator<(const Relation& a, const Relation& b) {
    if (a.header_ != b.header_) return a.header_ < b.header_;
    return a.body_ < b.body_;
  }

 private:
  Relation(Header header, std::set<Tuple> body)
      : header_(std::move(header)), body_(std::move(body)) {}

  Header header_;
  std::set<Tuple> body_;
};

/// Restriction of every tuple to `attrs` (duplicates merged). Requires
/// attrs ⊆ header (AttrNotInHeader). Projecting a non-empty relation onto the
/// empty header gives dee, an empty one gives dum.
Relation kernel_project(const Relation& rel, const Header& attrs);

/// Headers equal as sets and bodies equal as sets.
bool relation_equal(const Relation& a, const Relation& b);

}  // namespace rla
