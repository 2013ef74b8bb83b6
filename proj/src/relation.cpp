#include "rla/relation.hpp"

#include <cctype>
#include <sstream>

#include "rla/error.hpp"

namespace rla {

namespace {

std::string header_to_string(const Header& h) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  for (const auto& a : h) {
    if (!first) out << ',';
    out << a;
    first = false;
  }
  out << '}';
  return out.str();
}

void check_row(const Header& header, const Tuple& row) {
  if (row.size() == header.size()) {
    auto it = header.begin();
    bool ok = true;
    for (const auto& [attr, value] : row) {
      (void)value;
      if (attr != *it) {
        ok = false;
        break;
      }
      ++it;
    }
    if (ok) return;
  }
  Header row_attrs;
  for (const auto& [attr, value] : row) {
    (void)value;
    row_attrs.insert(attr);
  }
  throw Error(ErrorCode::HeaderMismatch,
              "row attributes " + header_to_string(row_attrs) +
                  " do not match header " + header_to_string(header));
}

}  // namespace

void validate_attribute_name(const AttributeName& name) {
  if (name.empty())
    throw Error(ErrorCode::InvalidArgument, "attribute name must be non-empty");
  if (std::isspace(static_cast<unsigned char>(name.front())) ||
      std::isspace(static_cast<unsigned char>(name.back())))
    throw Error(ErrorCode::InvalidArgument,
                "attribute name `" + name + "` has leading or trailing whitespace");
}

void validate_user_attribute_name(const AttributeName& name) {
  validate_attribute_name(name);
  if (name.find(kFreshSuffix) != std::string::npos)
    throw Error(ErrorCode::InvalidArgument,
                "attribute name `" + name + "` uses the reserved prime character");
}

Relation Relation::make(Header header, const std::vector<Tuple>& rows) {
  for (const auto& a : header) validate_attribute_name(a);
  std::set<Tuple> body;
  for (const auto& row : rows) {
    check_row(header, row);
    body.insert(row);
  }
  return Relation(std::move(header), std::move(body));
}

Relation Relation::make(Header header, std::set<Tuple> body) {
  for (const auto& a : header) validate_attribute_name(a);
  for (const auto& row : body) check_row(header, row);
  return Relation(std::move(header), std::move(body));
}

Relation Relation::dee() { return Relation(Header{}, std::set<Tuple>{Tuple{}}); }

Relation Relation::dum() { return Relation(Header{}, std::set<Tuple>{}); }

Relation Relation::empty(Header header) {
  for (const auto& a : header) validate_attribute_name(a);
  return Relation(std::move(header), std::set<Tuple>{});
}

Relation kernel_project(const Relation& rel, const Header& attrs) {
  for (const auto& a : attrs) {
    if (!rel.has_attribute(a))
      throw Error(ErrorCode::AttrNotInHeader,
                  "attribute `" + a + "` not in header " +
                      header_to_string(rel.header()));
  }
  std::set<Tuple> body;
  for (const auto& row : rel.body()) {
    Tuple restricted;
    for (const auto& a : attrs) restricted.emplace(a, row.at(a));
    body.insert(std::move(restricted));
  }
  return Relation::make(attrs, std::move(body));
}

bool relation_equal(const Relation& a, const Relation& b) { return a == b; }

}  // namespace rla
